"""Published worked examples, kept as data for side-by-side comparison.

Each entry records what was printed.  ``compare`` reports where the exact
computation agrees and where it does not; nothing here is reconciled.
"""

from __future__ import annotations

from typing import Optional

from . import standard as st
from .chevalley import ChevalleyAlgebra, HStableSubspace
from .rootsys import Root

B4_ANTICHAIN = ((0, 1, 2, 2),)
F4_ANTICHAIN = ((0, 0, 1, 0),)

WORKED = {
    ("B4", B4_ANTICHAIN, None): {
        "appui_pos_excluded": [(0, 0, 0, 1)],
        "appui_neg": [(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)],
        "appui_cartan_printed_full": True,
        "normalizer_neg": [(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (0, 0, 0, 1)],
    },
    ("F4", F4_ANTICHAIN, frozenset({3})): {
        "off_r2": [(1, 2, 4, 2), (1, 3, 4, 2), (2, 3, 4, 2)],
        "p_psi_minus_zero": True,
        "appui_equals_vm": True,
    },
    ("F4", F4_ANTICHAIN, frozenset({0, 1})): {
        "off_r2": [(1, 2, 4, 2), (1, 3, 4, 2), (2, 3, 4, 2)],
        "p_psi_minus_is_n2_minus": True,
        "appui_is_g": True,
    },
}


def lookup(type_name: str, R, psi) -> Optional[dict]:
    key = (type_name, tuple(sorted(tuple(a) for a in R)), None if psi is None else frozenset(psi))
    return WORKED.get(key)


def _names(g: ChevalleyAlgebra, roots) -> list[str]:
    return [g.rs.format_root(tuple(a)) for a in roots]


def compare(g: ChevalleyAlgebra, s: st.StandardSubalgebra, V: HStableSubspace) -> Optional[dict]:
    """Compare the exact objects of ``s`` with a published example, if any."""
    ref = lookup(str(g.lie_type), s.nil.R, s.psi)
    if ref is None:
        return None
    rs = g.rs
    out: dict = {"notes": []}
    if "appui_neg" in ref:
        pos_expected = set(rs.positive_roots) - {tuple(a) for a in ref["appui_pos_excluded"]}
        out["appui_pos_matches"] = set(V.pos) == pos_expected
        out["appui_neg_matches"] = set(V.neg) == {tuple(a) for a in ref["appui_neg"]}
        rho = st.normalizer_finite(g, s)
        out["normalizer_neg_matches"] = set(rho.neg) == {tuple(a) for a in ref["normalizer_neg"]} and set(
            rho.pos
        ) == set(rs.positive_roots)
        out["appui_cartan_dim_exact"] = len(V.cartan)
        out["appui_cartan_dim_printed"] = g.rank if ref["appui_cartan_printed_full"] else None
        printed = V + g.cartan_full()
        out["printed_reading_stable_under_normalizer"] = printed.contains(g.bracket_spaces(printed, rho))
        if len(V.cartan) != g.rank:
            out["notes"].append(
                f"printed appui lists all of h; the exact Cartan part has dimension {len(V.cartan)}"
            )
        if not out["printed_reading_stable_under_normalizer"]:
            out["notes"].append("with all of h added, [V, rho] is no longer inside V")
    if "off_r2" in ref:
        r2 = set(s.nil.R2)
        off = [a for a in rs.positive_roots if a not in r2]
        out["off_r2_matches"] = set(off) == {tuple(a) for a in ref["off_r2"]}
        out["off_r2"] = _names(g, off)
        p_minus = st.p_psi(g, s, -1)
        if "p_psi_minus_zero" in ref:
            out["p_psi_minus_zero_matches"] = p_minus.is_zero
            out["appui_equals_vm_matches"] = V == st.appui_nilpotent(g, s.nil)
        if "p_psi_minus_is_n2_minus" in ref:
            out["p_psi_minus_is_n2_minus_matches"] = p_minus == st.n2(g, s.nil, -1)
            out["appui_is_g_matches"] = V == g.full()
    return out

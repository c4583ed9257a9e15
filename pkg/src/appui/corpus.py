"""Regression corpus: every antichain (and Psi choice) of small algebras,
checked formula against oracle.

``check_case`` returns named booleans so callers can aggregate them; the
names are stable and appear verbatim in sweep reports.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from . import affine as af
from . import oracle as orc
from . import standard as st
from .chevalley import ChevalleyAlgebra, HStableSubspace, chevalley_algebra
from .rootsys import Root, SimpleSet, add

DEFAULT_TYPES = ("A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2")


def iter_cases(
    g: ChevalleyAlgebra, unions: bool = True, allow_s2_components: bool = False
) -> Iterator[tuple[tuple[Root, ...], Optional[SimpleSet]]]:
    """Every nonempty antichain, bare and with each admissible Psi."""
    rs = g.rs
    for R in rs.enumerate_antichains():
        yield R, None
        nil = st.derived_sets(rs, R)
        for psi in st.enumerate_psi_candidates(rs, nil, unions=unions, allow_s2_components=allow_s2_components):
            yield R, psi


def root_closure_premises(g: ChevalleyAlgebra, s: st.StandardSubalgebra, p_plus: HStableSubspace) -> tuple[int, int]:
    """Check the two implications relating P_Psi^+ to sums of roots off R2.

    Returns (premises that fired, violations).
    """
    rs = g.rs
    r2 = set(s.nil.R2)
    rest = [a for a in rs.positive_roots if a not in r2]
    fired = bad = 0
    for i, a in enumerate(rest):
        for b in rest[i + 1 :]:
            c = add(a, b)
            if c not in rs.positive_set:
                continue
            in_a, in_b, in_c = p_plus.has_root(a), p_plus.has_root(b), p_plus.has_root(c)
            if in_c:
                fired += 1
                bad += not (in_a and in_b)
            if in_a or in_b:
                fired += 1
                bad += not in_c
    return fired, bad


def check_case(g: ChevalleyAlgebra, R: Sequence[Root], psi: Optional[Iterable[int]] = None) -> dict:
    """All finite-level properties of one standard subalgebra.

    Keys mapped to None do not apply to this case.
    """
    rs = g.rs
    s = st.build_standard(g, R, psi)
    nil = s.nil
    full = g.full()
    rho = st.normalizer_finite(g, s)
    V = orc.appui_oracle(g, s.tau)
    Vm = orc.appui_oracle(g, s.m)
    out: dict = {
        "appui_formula_matches_oracle": st.appui_formula(g, s) == V,
        "normalizer_matches_oracle": orc.normalizer_oracle(g, s.tau) == rho,
        "tau_is_subalgebra": orc.is_subalgebra(g, s.tau),
        "tau_inside_appui": V.contains(s.tau),
        "appui_stable_under_normalizer": V.contains(g.bracket_spaces(V, rho)),
        "appui_generates_g": g.bracket_spaces(V, full) == full,
        "complete_form_matches_oracle": None,
        "positive_part_criterion": None,
        "negative_part_criterion": None,
        "r3_literal_matches_oracle": st.appui_nilpotent(g, nil, nil.R3_literal) == Vm,
        "psi_dichotomy": None,
        "p_psi_plus_in_n2_plus": None,
        "p_psi_root_closure_premises": 0,
        "p_psi_root_closure": None,
    }
    if s.psi is None:
        crit_pos = st.positive_part_roots(rs, nil)
        crit_neg = st.negative_part_roots(rs, nil)
        out["positive_part_criterion"] = all((a in V.pos) == (a in crit_pos) for a in rs.positive_roots)
        out["negative_part_criterion"] = all((a in V.neg) == (a in crit_neg) for a in rs.positive_roots)
        if nil.is_complete:
            out["complete_form_matches_oracle"] = st.appui_complete(g, nil) == V
    else:
        p_minus = st.p_psi(g, s, -1)
        p_plus = st.p_psi(g, s, 1)
        out["psi_dichotomy"] = V == (Vm if p_minus.is_zero else full)
        out["p_psi_plus_in_n2_plus"] = st.n2(g, nil, 1).contains(p_plus)
        fired, bad = root_closure_premises(g, s, p_plus)
        out["p_psi_root_closure_premises"] = fired
        out["p_psi_root_closure"] = bad == 0
    return out


def check_affine_case(
    g: ChevalleyAlgebra, R: Sequence[Root], psi: Optional[Iterable[int]], n: int, mutations: bool = False
) -> dict:
    """Existence and classification checks for the graded lift at degree n."""
    s = st.build_standard(g, R, psi)
    V = st.appui_formula(g, s)
    rho = st.normalizer_finite(g, s)
    T = af.build_tau_bar(g, s.tau, V, n, rho)
    out = {
        "lift_is_standard": af.verify_standard(g, T, rho).passed,
        "lift_normalizer_exact": af.affine_normalizer(g, T) == af.rho_bar(g, rho),
        "truncation_is_standard": af.verify_standard(g, af.appui_truncation(g, V, n)).passed,
    }
    try:
        cl = af.classify_graded(g, T)
        out["classification_round_trip"] = cl.tau == s.tau and cl.V == V and cl.n == n
        out["graded_relations"] = all(cl.relations.values())
    except af.GradedRejection:
        out["classification_round_trip"] = False
        out["graded_relations"] = False
    if mutations:
        survivors = [
            a
            for a in V.roots()
            if af.verify_standard(g, af.build_tau_bar(g, s.tau, V.without(a), n, check=False), rho).passed
        ]
        out["mutations_tried"] = len(V.roots())
        out["mutations_detected"] = not survivors
    return out


INFORMATIONAL = {"p_psi_root_closure_premises", "r3_literal_matches_oracle"}


def _tally(counts: dict, result: dict):
    for key, val in result.items():
        if key in INFORMATIONAL or key.endswith("mutations_tried"):
            if isinstance(val, bool):
                slot = counts.setdefault(key, {"true": 0, "false": 0})
                slot["true" if val else "false"] += 1
            else:
                counts[key] = counts.get(key, 0) + val
            continue
        if val is None:
            continue
        slot = counts.setdefault(key, {"pass": 0, "fail": 0})
        slot["pass" if val else "fail"] += 1


def sweep_type(
    t: str, ns: Sequence[int] = (), mutations: bool = False, unions: bool = True, include_cases: bool = False
) -> dict:
    g = chevalley_algebra(t)
    rs = g.rs
    counts: dict = {}
    cases = []
    n_antichains = n_psi = 0
    for R, psi in iter_cases(g, unions=unions):
        if psi is None:
            n_antichains += 1
        else:
            n_psi += 1
        res = check_case(g, R, psi)
        for n in ns:
            # Mutations only at the lowest requested degree; they are the slow part.
            aff = check_affine_case(g, R, psi, n, mutations and n == ns[0])
            res.update({f"n{n}:{k}": v for k, v in aff.items()})
        _tally(counts, res)
        if include_cases:
            cases.append(
                {
                    "antichain": [list(a) for a in R],
                    "psi": None if psi is None else sorted(i + 1 for i in psi),
                    "checks": res,
                }
            )
    failures = sum(v["fail"] for v in counts.values() if isinstance(v, dict) and "fail" in v)
    out = {
        "type": str(rs.lie_type),
        "antichains": n_antichains,
        "psi_cases": n_psi,
        "checks": counts,
        "failures": failures,
    }
    if include_cases:
        out["cases"] = cases
    return out


def sweep(
    types: Sequence[str] = DEFAULT_TYPES,
    ns: Sequence[int] = (),
    mutations: bool = False,
    unions: bool = True,
    include_cases: bool = False,
) -> dict:
    per_type = [sweep_type(t, ns, mutations, unions, include_cases) for t in types]
    return {
        "types": per_type,
        "affine_degrees": list(ns),
        "summary": {
            "types": len(per_type),
            "antichains": sum(r["antichains"] for r in per_type),
            "psi_cases": sum(r["psi_cases"] for r in per_type),
            "failures": sum(r["failures"] for r in per_type),
        },
    }

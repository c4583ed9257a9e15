"""Brute-force ground truth computed from structure constants alone.

Everything here works on explicit basis vectors and the element bracket
``ChevalleyAlgebra.bracket``; nothing is derived from closed-form formulas
for appui subspaces or normalizers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from . import linalg
from .chevalley import BasisKey, ChevalleyAlgebra, HStableSubspace


class OracleError(RuntimeError):
    pass


def _span_of_elements(g: ChevalleyAlgebra, elements: Iterable[Mapping]) -> HStableSubspace:
    """Span of weight vectors (each element is a root vector or lies in h)."""
    roots = set()
    rows = []
    for el in elements:
        r = [k for k in el if isinstance(k, tuple)]
        c = [k for k in el if not isinstance(k, tuple)]
        if r and c or len(r) > 1:
            raise OracleError(f"not a weight vector: {el}")
        if r:
            roots.add(r[0])
        elif c:
            rows.append(tuple(Fraction(el.get(i, 0)) for i in range(g.rank)))
    return HStableSubspace.make(roots, rows)


def element_in(U: HStableSubspace, el: Mapping) -> bool:
    """Membership test for an arbitrary element of g."""
    cart = []
    for k, c in el.items():
        if c == 0:
            continue
        if isinstance(k, tuple):
            if not U.has_root(k):
                return False
        else:
            cart.append(k)
    if not cart:
        return True
    if not U.cartan:
        return False
    v = [el.get(i, 0) for i in range(len(U.cartan[0]))]
    return linalg.in_row_space(U.cartan, v)


def brute_bracket(g: ChevalleyAlgebra, U: HStableSubspace, W: HStableSubspace) -> HStableSubspace:
    """[U, W] from every pair of basis vectors."""
    out = []
    wb = W.basis()
    for u in U.basis():
        for w in wb:
            z = g.bracket(u, w)
            if z:
                out.append(z)
    return _span_of_elements(g, out)


def appui_oracle(g: ChevalleyAlgebra, tau: HStableSubspace) -> HStableSubspace:
    """[tau, g] by exhaustive basis pairs."""
    return brute_bracket(g, tau, g.full())


def normalizer_oracle(g: ChevalleyAlgebra, tau: HStableSubspace) -> HStableSubspace:
    """Largest ad-h-stable N with [N, tau] inside tau.

    For ad-h-stable tau all of h normalizes, so only root spaces are tested.
    """
    tb = tau.basis()
    keep = []
    for a in g.rs.all_roots:
        e = {a: Fraction(1)}
        if all(element_in(tau, g.bracket(e, t)) for t in tb):
            keep.append(a)
    return HStableSubspace.make(keep, g.cartan_full().cartan)


def is_subalgebra(g: ChevalleyAlgebra, U: HStableSubspace) -> bool:
    ub = U.basis()
    return all(element_in(U, g.bracket(x, y)) for i, x in enumerate(ub) for y in ub[i + 1 :])


def subalgebra_closure(g: ChevalleyAlgebra, gens: Iterable[BasisKey]) -> HStableSubspace:
    """Smallest bracket-closed subspace containing the given basis elements."""
    cur = _span_of_elements(g, [{k: Fraction(1)} for k in gens])
    for _ in range(g.dim + 1):
        nxt = cur + brute_bracket(g, cur, cur)
        if nxt == cur:
            return cur
        cur = nxt
    raise OracleError("closure did not stabilize within dim g rounds")

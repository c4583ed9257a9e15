"""Exact rational row reduction used for Cartan parts of subspaces."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Row = tuple[Fraction, ...]


def rref(rows: Iterable[Sequence]) -> tuple[Row, ...]:
    """Reduced row-echelon form of ``rows`` with zero rows dropped.

    The result is canonical: two families span the same space iff their
    ``rref`` values are equal.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    piv_r = 0
    for c in range(ncols):
        pivot = None
        for r in range(piv_r, len(m)):
            if m[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[piv_r], m[pivot] = m[pivot], m[piv_r]
        p = m[piv_r][c]
        if p != 1:
            m[piv_r] = [x / p for x in m[piv_r]]
        for r in range(len(m)):
            if r != piv_r and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[piv_r])]
        piv_r += 1
        if piv_r == len(m):
            break
    return tuple(tuple(r) for r in m[:piv_r])


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows))


def in_row_space(basis: tuple[Row, ...], v: Sequence) -> bool:
    """True if ``v`` lies in the span of an RREF ``basis``."""
    w = [Fraction(x) for x in v]
    for row in basis:
        c = next(i for i, x in enumerate(row) if x != 0)
        if w[c] != 0:
            f = w[c]
            w = [a - f * b for a, b in zip(w, row)]
    return not any(w)


def row_space_contains(big: tuple[Row, ...], small: tuple[Row, ...]) -> bool:
    return all(in_row_space(big, v) for v in small)

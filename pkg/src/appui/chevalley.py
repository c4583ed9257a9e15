"""Chevalley basis of a simple Lie algebra over the rationals.

Basis: ``e_a`` for every root ``a`` and ``h_1..h_p`` (simple coroots), with

    [e_a, e_b] = N(a, b) e_{a+b},  [e_a, e_{-a}] = h_a,  [h_i, e_b] = <b, a_i^vee> e_b.

Signs of N come from the extraspecial-pair construction: N is set to
+(p+1) on extraspecial pairs and propagated through the standard relations
between structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional, Union

from . import linalg
from .rootsys import LieType, Root, RootSystem, add, build_root_system, is_positive, neg, sub

# A basis element is a root (e_a) or an int i (h_i).
BasisKey = Union[Root, int]
Element = dict  # BasisKey -> Fraction, zero coefficients omitted


def string_below(rs: RootSystem, a: Root, b: Root) -> int:
    """Largest p >= 0 with b - p*a a root."""
    p = 0
    cur = sub(b, a)
    while rs.is_root(cur):
        p += 1
        cur = sub(cur, a)
    return p


class StructureConstants:
    """Table N(a, b) over all pairs of roots with a + b a root."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._pos: dict[tuple[Root, Root], int] = {}
        self._build()

    def _build(self):
        rs = self.rs
        order = {a: k for k, a in enumerate(rs.positive_roots)}
        special_by_sum: dict[Root, list[tuple[Root, Root]]] = {}
        for x in rs.positive_roots:
            for y in rs.positive_roots:
                if order[x] < order[y]:
                    s = add(x, y)
                    if s in rs.positive_set:
                        special_by_sum.setdefault(s, []).append((x, y))
        for s in sorted(special_by_sum, key=lambda r: order[r]):
            pairs = sorted(special_by_sum[s], key=lambda pr: order[pr[0]])
            a, b = pairs[0]
            self._set(a, b, string_below(rs, a, b) + 1)
            for x, y in pairs[1:]:
                # Four-root relation for a + b - x - y = 0, solved for N(-x,-y).
                t2 = self._term(b, neg(x), a, neg(y))
                t3 = self._term(neg(x), a, b, neg(y))
                n_neg = -rs.ip(s, s) / self._pos[(a, b)] * (t2 + t3)
                assert n_neg.denominator == 1
                self._set(x, y, -int(n_neg))

    def _term(self, p: Root, q: Root, r: Root, u: Root) -> Fraction:
        pq = add(p, q)
        if not self.rs.is_root(pq):
            return Fraction(0)
        return Fraction(self.N(p, q) * self.N(r, u)) / self.rs.ip(pq, pq)

    def _set(self, x: Root, y: Root, v: int):
        self._pos[(x, y)] = v
        self._pos[(y, x)] = -v

    def N(self, x: Root, y: Root) -> int:
        rs = self.rs
        s = add(x, y)
        if not rs.is_root(s):
            return 0
        px, py = is_positive(x), is_positive(y)
        if px and py:
            return self._pos[(x, y)]
        if not px and not py:
            return -self._pos[(neg(x), neg(y))]
        z = neg(s)
        # N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y); use the same-sign pair.
        if is_positive(z) == py:
            v = rs.ip(z, z) / rs.ip(x, x) * self.N(y, z)
        else:
            v = rs.ip(z, z) / rs.ip(y, y) * self.N(z, x)
        assert v.denominator == 1
        return int(v)


@dataclass(frozen=True)
class HStableSubspace:
    """An ad-h-stable subspace: root spaces plus a Cartan part.

    ``pos`` holds positive roots a with g_a included, ``neg`` positive roots
    a with g_{-a} included, ``cartan`` an RREF basis over h_1..h_p.
    """

    pos: frozenset = frozenset()
    neg: frozenset = frozenset()
    cartan: tuple = ()

    @classmethod
    def make(cls, roots: Iterable[Root] = (), cartan: Iterable = ()) -> "HStableSubspace":
        pos, negs = set(), set()
        for a in roots:
            if is_positive(a):
                pos.add(a)
            else:
                negs.add(neg(a))
        return cls(frozenset(pos), frozenset(negs), linalg.rref(cartan))

    @property
    def dim(self) -> int:
        return len(self.pos) + len(self.neg) + len(self.cartan)

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def roots(self) -> list[Root]:
        return sorted(self.pos, key=lambda a: (sum(a), a)) + sorted(
            (neg(a) for a in self.neg), key=lambda a: (-sum(a), a)
        )

    def has_root(self, a: Root) -> bool:
        return a in self.pos if is_positive(a) else neg(a) in self.neg

    def contains(self, other: "HStableSubspace") -> bool:
        return (
            other.pos <= self.pos
            and other.neg <= self.neg
            and linalg.row_space_contains(self.cartan, other.cartan)
        )

    __ge__ = contains

    def __le__(self, other: "HStableSubspace") -> bool:
        return other.contains(self)

    def __add__(self, other: "HStableSubspace") -> "HStableSubspace":
        return HStableSubspace(
            self.pos | other.pos,
            self.neg | other.neg,
            linalg.rref(self.cartan + other.cartan) if other.cartan else self.cartan,
        )

    def without(self, a: Root) -> "HStableSubspace":
        if is_positive(a):
            return HStableSubspace(self.pos - {a}, self.neg, self.cartan)
        return HStableSubspace(self.pos, self.neg - {neg(a)}, self.cartan)

    def basis(self) -> list[Element]:
        out: list[Element] = [{a: Fraction(1)} for a in self.roots()]
        for row in self.cartan:
            out.append({i: c for i, c in enumerate(row) if c != 0})
        return out


class ChevalleyAlgebra:
    """The simple Lie algebra of a given type in its Chevalley basis."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.sc = StructureConstants(rs)
        self.rank = rs.rank
        self.basis_keys: list[BasisKey] = list(rs.all_roots) + list(range(rs.rank))
        self.dim = len(self.basis_keys)
        self._coroot = {a: rs.coroot(a) for a in rs.all_roots}
        self._bracket_cache: dict = {}

    @property
    def lie_type(self) -> LieType:
        return self.rs.lie_type

    def coroot(self, a: Root) -> tuple[int, ...]:
        return self._coroot[a]

    def N(self, a: Root, b: Root) -> int:
        return self.sc.N(a, b)

    # -- elements ------------------------------------------------------

    def bracket_basis(self, x: BasisKey, y: BasisKey) -> Element:
        """[x, y] for basis keys; result as a sparse element."""
        rs = self.rs
        xr, yr = isinstance(x, tuple), isinstance(y, tuple)
        if not xr and not yr:
            return {}
        if xr and yr:
            s = add(x, y)
            if not any(s):
                return {i: Fraction(c) for i, c in enumerate(self._coroot[x]) if c}
            n = self.sc.N(x, y)
            return {s: Fraction(n)} if n else {}
        if not xr:
            c = rs.pairing(y, x)
            return {y: Fraction(c)} if c else {}
        c = rs.pairing(x, y)
        return {x: Fraction(-c)} if c else {}

    def bracket(self, u: Mapping, v: Mapping) -> Element:
        out: Element = {}
        for x, cx in u.items():
            for y, cy in v.items():
                for z, cz in self.bracket_basis(x, y).items():
                    out[z] = out.get(z, 0) + cx * cy * cz
        return {k: c for k, c in out.items() if c != 0}

    def form_basis(self, x: BasisKey, y: BasisKey) -> Fraction:
        """Invariant form normalized by (theta|theta) = 2 on roots."""
        rs = self.rs
        xr, yr = isinstance(x, tuple), isinstance(y, tuple)
        if xr and yr:
            if any(add(x, y)):
                return Fraction(0)
            return Fraction(2) / rs.ip(x, x)
        if xr or yr:
            return Fraction(0)
        ai, aj = rs.simple(x), rs.simple(y)
        return 4 * rs.ip(ai, aj) / (rs.ip(ai, ai) * rs.ip(aj, aj))

    def form(self, u: Mapping, v: Mapping) -> Fraction:
        return sum((cx * cy * self.form_basis(x, y) for x, cx in u.items() for y, cy in v.items()), Fraction(0))

    # -- subspaces -----------------------------------------------------

    def zero(self) -> HStableSubspace:
        return HStableSubspace()

    @cached_property
    def _full(self) -> HStableSubspace:
        return HStableSubspace.make(self.rs.all_roots, _identity(self.rank))

    def full(self) -> HStableSubspace:
        return self._full

    def cartan_full(self) -> HStableSubspace:
        return HStableSubspace.make((), _identity(self.rank))

    def root_spaces(self, roots: Iterable[Root]) -> HStableSubspace:
        return HStableSubspace.make(roots)

    def coroot_span(self, roots: Iterable[Root]) -> HStableSubspace:
        """Span of h_a over the given roots."""
        return HStableSubspace.make((), [self._coroot[a] for a in roots])

    def borel(self) -> HStableSubspace:
        return HStableSubspace.make(self.rs.positive_roots, _identity(self.rank))

    def parabolic(self, levi_simple: Iterable[int]) -> HStableSubspace:
        """Borel plus g_{-a} for a positive and supported in ``levi_simple``."""
        _, pos, negs = self.rs.root_span(levi_simple)
        return HStableSubspace.make(self.rs.positive_roots + negs, _identity(self.rank))

    def bracket_spaces(self, U: HStableSubspace, W: HStableSubspace) -> HStableSubspace:
        """Exact span of [u, w] over basis elements u of U, w of W."""
        key = (U, W)
        hit = self._bracket_cache.get(key)
        if hit is None:
            hit = self._bracket_cache.get((W, U))
        if hit is not None:
            return hit
        rs = self.rs
        roots: set[Root] = set()
        cartan_rows: list[tuple] = []
        u_roots, w_roots = U.roots(), W.roots()
        for a in u_roots:
            for b in w_roots:
                s = add(a, b)
                if not any(s):
                    cartan_rows.append(self._coroot[a])
                elif s not in roots and rs.is_root(s) and self.sc.N(a, b) != 0:
                    roots.add(s)
        for rows, others in ((U.cartan, w_roots), (W.cartan, u_roots)):
            for row in rows:
                for b in others:
                    if b not in roots and sum(c * rs.pairing(b, i) for i, c in enumerate(row) if c) != 0:
                        roots.add(b)
        res = HStableSubspace.make(roots, cartan_rows)
        self._bracket_cache[key] = res
        return res

    def contains(self, U: HStableSubspace, W: HStableSubspace) -> bool:
        return U.contains(W)

    def describe(self, U: HStableSubspace) -> dict:
        fr = self.rs.format_root
        return {
            "dim": U.dim,
            "pos": [fr(a) for a in sorted(U.pos, key=self._order)],
            "neg": [fr(neg(a)) for a in sorted(U.neg, key=self._order)],
            "cartan_dim": len(U.cartan),
            "cartan_basis": [[str(c) for c in row] for row in U.cartan],
        }

    def _order(self, a: Root):
        return self.rs.positive_roots.index(a)


def _identity(n: int) -> list[tuple[int, ...]]:
    return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]


_ALGEBRAS: dict[LieType, ChevalleyAlgebra] = {}


def chevalley_algebra(t: LieType | str) -> ChevalleyAlgebra:
    """Cached algebra of the given type."""
    rs = build_root_system(t)
    if rs.lie_type not in _ALGEBRAS:
        _ALGEBRAS[rs.lie_type] = ChevalleyAlgebra(rs)
    return _ALGEBRAS[rs.lie_type]


def structure_constants(rs: RootSystem) -> StructureConstants:
    return chevalley_algebra(rs.lie_type).sc

"""Finite root systems in Bourbaki numbering, with root-poset combinatorics.

Roots are integer tuples of coefficients over the simple roots.  Simple
roots themselves are referred to by 0-based index; sets of simple roots are
``frozenset[int]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Optional

Root = tuple[int, ...]
SimpleSet = frozenset[int]

RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

KNOWN_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class InvalidLieType(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in RANK_BOUNDS:
            raise InvalidLieType(f"unknown series {self.series!r}")
        lo, hi = RANK_BOUNDS[self.series]
        if not isinstance(self.rank, int) or self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidLieType(f"invalid rank {self.rank} for series {self.series}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip().upper()
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidLieType(f"cannot parse Lie type {text!r}")
        return cls(text[0], int(text[1:]))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def _edges(t: LieType) -> list[tuple[int, int]]:
    n = t.rank
    if t.series in "ABCFG":
        return [(i, i + 1) for i in range(n - 1)]
    if t.series == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    # E_n: 1-3-4-5-...-n with 2 attached to 4 (Bourbaki, 1-based)
    e = [(0, 2), (1, 3)]
    e += [(i, i + 1) for i in range(2, n - 1)]
    return e


def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entry [i][j] = <alpha_j, alpha_i^vee>."""
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(t):
        a[i][j] = a[j][i] = -1
    if t.series == "B":
        a[n - 1][n - 2] = -2
    elif t.series == "C":
        a[n - 2][n - 1] = -2
    elif t.series == "F":
        a[2][1] = -2
    elif t.series == "G":
        a[0][1] = -3
    return tuple(tuple(r) for r in a)


def _symmetrizer(a) -> tuple[Fraction, ...]:
    n = len(a)
    d: list[Optional[Fraction]] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and d[j] is None:
                # d_i a_ij = d_j a_ji
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    return tuple(d)  # type: ignore[arg-type]


def _generate_positive_roots(a) -> list[Root]:
    n = len(a)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # r = length of the alpha_i-string below beta
                r = 0
                below = list(beta)
                while True:
                    below[i] -= 1
                    if tuple(below) in found:
                        r += 1
                    else:
                        break
                pairing = sum(beta[j] * a[i][j] for j in range(n))
                if r - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=lambda r: (sum(r), tuple(-x for x in r)))


def height(a: Root) -> int:
    return sum(a)


def neg(a: Root) -> Root:
    return tuple(-x for x in a)


def add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def is_positive(a: Root) -> bool:
    return all(x >= 0 for x in a) and any(a)


def leq(a: Root, b: Root) -> bool:
    """Partial order: b - a is a non-negative combination of simple roots."""
    return all(y >= x for x, y in zip(a, b))


def support(a: Root) -> SimpleSet:
    return frozenset(i for i, x in enumerate(a) if x != 0)


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    positive_roots: tuple[Root, ...]
    inner: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return self.positive_roots[: self.rank]

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @cached_property
    def positive_set(self) -> frozenset[Root]:
        return frozenset(self.positive_roots)

    @cached_property
    def all_roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(neg(a) for a in self.positive_roots)

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.all_roots)

    @property
    def pi(self) -> SimpleSet:
        return frozenset(range(self.rank))

    def simple(self, i: int) -> Root:
        return self.positive_roots[i]

    def is_root(self, a: Root) -> bool:
        return a in self.root_set

    def ip(self, a: Root, b: Root) -> Fraction:
        """Invariant inner product on the root lattice, (theta, theta) = 2."""
        n = self.rank
        return sum(
            (a[i] * b[j] * self.inner[i][j] for i in range(n) for j in range(n) if a[i] and b[j]),
            Fraction(0),
        )

    def pairing(self, a: Root, i: int) -> int:
        """<a, alpha_i^vee> = a(h_i)."""
        return sum(a[j] * self.cartan[i][j] for j in range(self.rank))

    def coroot(self, a: Root) -> tuple[int, ...]:
        """Coordinates of h_a over the simple coroots h_1..h_p."""
        aa = self.ip(a, a)
        out = []
        for i, k in enumerate(a):
            c = k * self.inner[i][i] / aa
            assert c.denominator == 1
            out.append(int(c))
        return tuple(out)

    # -- root-poset combinatorics -------------------------------------

    def extremal_set(self, b: Root) -> SimpleSet:
        """Simple roots g with b == g or b - g a root."""
        out = set()
        for i in range(self.rank):
            g = self.simple(i)
            if b == g or self.is_root(sub(b, g)):
                out.add(i)
        return frozenset(out)

    def root_span(self, B: Iterable[int]) -> tuple[tuple[Root, ...], tuple[Root, ...], tuple[Root, ...]]:
        """Roots supported inside B: (all, positive, negative)."""
        B = frozenset(B)
        pos = tuple(a for a in self.positive_roots if support(a) <= B)
        negs = tuple(neg(a) for a in pos)
        return pos + negs, pos, negs

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i][j] != 0

    def connected_components(self, B: Iterable[int]) -> list[SimpleSet]:
        """Components of the Dynkin subdiagram on B, ordered by least index."""
        left = set(B)
        comps = []
        while left:
            start = min(left)
            comp = {start}
            stack = [start]
            left.discard(start)
            while stack:
                i = stack.pop()
                for j in sorted(left):
                    if self.adjacent(i, j):
                        left.discard(j)
                        comp.add(j)
                        stack.append(j)
            comps.append(frozenset(comp))
        return sorted(comps, key=min)

    def upward_closure(self, R: Iterable[Root]) -> tuple[Root, ...]:
        R = list(R)
        return tuple(b for b in self.positive_roots if any(leq(w, b) for w in R))

    def is_antichain(self, R: Iterable[Root]) -> bool:
        R = list(R)
        if len(set(R)) != len(R) or not all(a in self.positive_set for a in R):
            return False
        return all(not leq(a, b) for a in R for b in R if a != b)

    def enumerate_antichains(self, include_empty: bool = False) -> Iterator[tuple[Root, ...]]:
        """All antichains of the positive-root poset, in a fixed order.

        Roots are considered in canonical order; each antichain is listed
        sorted by that order, and antichains come out in lexicographic order
        of their index sequences.
        """
        roots = self.positive_roots
        m = len(roots)
        comparable = [
            [leq(roots[i], roots[j]) or leq(roots[j], roots[i]) for j in range(m)] for i in range(m)
        ]

        def rec(start: int, chosen: list[int]) -> Iterator[tuple[Root, ...]]:
            for k in range(start, m):
                if any(comparable[k][c] for c in chosen):
                    continue
                chosen.append(k)
                yield tuple(roots[c] for c in chosen)
                yield from rec(k + 1, chosen)
                chosen.pop()

        if include_empty:
            yield ()
        yield from rec(0, [])

    def format_root(self, a: Root) -> str:
        terms = []
        for i, k in enumerate(a):
            if k == 0:
                continue
            coef = "" if abs(k) == 1 else str(abs(k))
            sign = "-" if k < 0 else "+"
            terms.append((sign, f"{coef}a{i + 1}"))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, t in terms[1:]:
            s += f"{sign}{t}"
        return s


_CACHE: dict[LieType, RootSystem] = {}


def build_root_system(t: LieType | str) -> RootSystem:
    """Root system of a simple Lie algebra; cached per type."""
    if isinstance(t, str):
        t = LieType.parse(t)
    if t in _CACHE:
        return _CACHE[t]
    a = cartan_matrix(t)
    d = _symmetrizer(a)
    roots = _generate_positive_roots(a)
    expected = KNOWN_POSITIVE_COUNTS[t.series](t.rank)
    if len(roots) != expected:
        raise AssertionError(f"{t}: generated {len(roots)} positive roots, expected {expected}")
    n = t.rank
    b = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
    theta = roots[-1]
    tt = sum(theta[i] * theta[j] * b[i][j] for i in range(n) for j in range(n))
    scale = Fraction(2) / tt
    inner = tuple(tuple(x * scale for x in row) for row in b)
    rs = RootSystem(
        lie_type=t,
        cartan=a,
        symmetrizer=tuple(x * scale for x in d),
        positive_roots=tuple(roots),
        inner=inner,
    )
    _CACHE[t] = rs
    return rs

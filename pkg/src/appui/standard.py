"""Standard subalgebras of a simple Lie algebra built from antichains.

A nilpotent standard subalgebra is the sum of root spaces over the upward
closure R1 of an antichain R.  Adding a semisimple ideal r0 generated by a
set Psi of simple roots gives the general case m + r0.  This module
computes their normalizers and appui subspaces [tau, g] in closed form; the
``oracle`` module checks every formula here by brute force.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .chevalley import ChevalleyAlgebra, HStableSubspace
from .rootsys import Root, RootSystem, SimpleSet, add, neg, support


class InvalidAntichain(ValueError):
    pass


class InvalidPsi(ValueError):
    pass


@dataclass(frozen=True)
class NilpotentStandard:
    R: tuple[Root, ...]
    R1: tuple[Root, ...]
    S1: SimpleSet
    S2: SimpleSet
    delta1_pos: tuple[Root, ...]
    delta2_pos: tuple[Root, ...]
    R2: tuple[Root, ...]
    R3: SimpleSet
    # Pi \ S2, the other reading of the R3 condition; kept for reporting.
    R3_literal: SimpleSet
    RC: Optional[tuple[Root, ...]]

    @property
    def is_complete(self) -> bool:
        return self.RC is not None


@dataclass(frozen=True)
class StandardSubalgebra:
    nil: NilpotentStandard
    psi: Optional[SimpleSet]
    omega1_pos: tuple[Root, ...]
    tau: HStableSubspace
    m: HStableSubspace


def upward_closure(rs: RootSystem, R: Iterable[Root]) -> tuple[Root, ...]:
    return rs.upward_closure(R)


def derived_sets(rs: RootSystem, R: Sequence[Root]) -> NilpotentStandard:
    R = tuple(tuple(a) for a in R)
    if not R:
        raise InvalidAntichain("antichain must be nonempty")
    if not rs.is_antichain(R):
        raise InvalidAntichain(f"not an antichain of positive roots: {R}")
    R = tuple(sorted(R, key=rs.positive_roots.index))
    R1 = rs.upward_closure(R)
    simple = set(rs.simple_roots)
    S1 = frozenset(rs.simple_roots.index(a) for a in R if a in simple)
    S2 = frozenset().union(*(rs.extremal_set(w) for w in R))
    _, delta1_pos, _ = rs.root_span(rs.pi - S2)
    delta2_pos = tuple(a for a in rs.positive_roots if a not in set(delta1_pos))
    R2 = tuple(a for a in rs.positive_roots if any(rs.is_root(add(a, b)) for b in R1))
    ext_R1 = frozenset().union(*(rs.extremal_set(b) for b in R1))
    R3 = rs.pi - ext_R1
    RC = None
    if all(a in simple for a in R):
        theta = rs.highest_root
        idx = [rs.simple_roots.index(b) for b in R]
        RC = tuple(a for a in rs.positive_roots if all(a[i] == theta[i] for i in idx))
    return NilpotentStandard(
        R=R,
        R1=R1,
        S1=S1,
        S2=S2,
        delta1_pos=delta1_pos,
        delta2_pos=delta2_pos,
        R2=R2,
        R3=R3,
        R3_literal=rs.pi - S2,
        RC=RC,
    )


def psi_components(rs: RootSystem, nil: NilpotentStandard, allow_s2_components: bool = False) -> list[SimpleSet]:
    """Connected pieces Psi may be assembled from.

    By default these are the common connected components of Pi\\S1 and
    Pi\\S2; with ``allow_s2_components`` every component of Pi\\S2 counts.
    """
    comps2 = rs.connected_components(rs.pi - nil.S2)
    if allow_s2_components:
        return comps2
    comps1 = set(rs.connected_components(rs.pi - nil.S1))
    return [c for c in comps2 if c in comps1]


def common_subsystem_check(
    rs: RootSystem, nil: NilpotentStandard, psi: Iterable[int], allow_s2_components: bool = False
) -> bool:
    psi = frozenset(psi)
    if not psi:
        return False
    comps = psi_components(rs, nil, allow_s2_components)
    covered = frozenset().union(*(c for c in comps if c <= psi)) if comps else frozenset()
    return covered == psi


def enumerate_psi_candidates(
    rs: RootSystem, nil: NilpotentStandard, unions: bool = False, allow_s2_components: bool = False
) -> list[SimpleSet]:
    comps = psi_components(rs, nil, allow_s2_components)
    if not unions:
        return comps
    out = []
    for k in range(1, len(comps) + 1):
        for group in combinations(comps, k):
            out.append(frozenset().union(*group))
    return out


def build_standard(
    g: ChevalleyAlgebra,
    R: Sequence[Root],
    psi: Optional[Iterable[int]] = None,
    allow_s2_components: bool = False,
) -> StandardSubalgebra:
    """tau = m + r0 with m spanned by R1 and r0 the semisimple part over <Psi>."""
    rs = g.rs
    nil = derived_sets(rs, R)
    m = g.root_spaces(nil.R1)
    tau = m
    if psi is not None:
        psi = frozenset(psi)
        if not common_subsystem_check(rs, nil, psi, allow_s2_components):
            raise InvalidPsi(
                f"Psi={sorted(i + 1 for i in psi)} is not a union of admissible components "
                f"{[sorted(i + 1 for i in c) for c in psi_components(rs, nil, allow_s2_components)]}"
            )
        span, span_pos, _ = rs.root_span(psi)
        tau = m + g.root_spaces(span) + g.coroot_span(span_pos)
    _, omega1_pos, _ = rs.root_span(rs.pi - nil.S1)
    return StandardSubalgebra(nil=nil, psi=psi, omega1_pos=omega1_pos, tau=tau, m=m)


def normalizer_finite(g: ChevalleyAlgebra, s: StandardSubalgebra) -> HStableSubspace:
    """Borel plus g_{-a} for a in Delta1+."""
    return g.parabolic(g.rs.pi - s.nil.S2)


def appui_nilpotent(g: ChevalleyAlgebra, nil: NilpotentStandard, r3: Optional[SimpleSet] = None) -> HStableSubspace:
    """Closed form of [m, g] for the nilpotent part.

    ``r3`` overrides the excluded simple roots (defaults to the adopted R3).
    """
    rs = g.rs
    r3 = nil.R3 if r3 is None else r3
    _, r3_pos, _ = rs.root_span(r3)
    excluded = set(r3_pos)
    pos = [a for a in rs.positive_roots if a not in excluded]
    negs = [neg(a) for a in nil.R2]
    return g.root_spaces(pos + negs) + g.coroot_span(set(nil.R1) | set(nil.R2))


def appui_complete(g: ChevalleyAlgebra, nil: NilpotentStandard) -> HStableSubspace:
    """Form for R inside Pi: all of Delta+, all of h, and g_{-a} off RC."""
    if nil.RC is None:
        raise InvalidAntichain("complete form needs R contained in the simple roots")
    rs = g.rs
    rc = set(nil.RC)
    negs = [neg(a) for a in rs.positive_roots if a not in rc]
    return g.root_spaces(list(rs.positive_roots) + negs) + g.cartan_full()


def n2(g: ChevalleyAlgebra, nil: NilpotentStandard, sign: int) -> HStableSubspace:
    r2 = set(nil.R2)
    return g.root_spaces(a if sign > 0 else neg(a) for a in g.rs.positive_roots if a not in r2)


def p_psi(g: ChevalleyAlgebra, s: StandardSubalgebra, sign: int) -> HStableSubspace:
    """Sum over a in <Psi> of [g_a, n2^{sign}]."""
    if not s.psi:
        return g.zero()
    span, _, _ = g.rs.root_span(s.psi)
    return g.bracket_spaces(g.root_spaces(span), n2(g, s.nil, sign))


def appui_formula(g: ChevalleyAlgebra, s: StandardSubalgebra) -> HStableSubspace:
    """[tau, g] in closed form: nilpotent formula, or g when P_Psi^- != 0."""
    vm = appui_nilpotent(g, s.nil)
    if s.psi is None:
        return vm
    if p_psi(g, s, -1).is_zero:
        return vm
    return g.full()


def positive_part_roots(rs: RootSystem, nil: NilpotentStandard) -> frozenset[Root]:
    """Positive a with support meeting S^b for some b in R1."""
    ext = [rs.extremal_set(b) for b in nil.R1]
    return frozenset(a for a in rs.positive_roots if any(support(a) & e for e in ext))


def negative_part_roots(rs: RootSystem, nil: NilpotentStandard) -> frozenset[Root]:
    """Positive a with a + b a positive root for some b in R1."""
    return frozenset(a for a in rs.positive_roots if any(add(a, b) in rs.positive_set for b in nil.R1))

from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from appui.rootsys import (
    InvalidLieType,
    LieType,
    build_root_system,
    cartan_matrix,
    leq,
    support,
)

SMALL = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4", "E6"]


def catalan(t: LieType) -> int:
    """Number of ad-nilpotent ideals of a Borel subalgebra (empty one included)."""
    n = t.rank
    return {
        "A": comb(2 * n + 2, n + 1) // (n + 2),
        "B": comb(2 * n, n),
        "C": comb(2 * n, n),
        "D": comb(2 * n, n) - comb(2 * n - 2, n - 1),
        "E": {6: 833, 7: 4160, 8: 25080}.get(n),
        "F": 105,
        "G": 8,
    }[t.series]


def test_parse_and_validate():
    assert LieType.parse("b4") == LieType("B", 4)
    assert str(LieType.parse(" F4 ")) == "F4"
    for bad in ["X3", "B1", "C2", "D3", "E9", "F5", "G3", "A0", "4B", ""]:
        with pytest.raises(InvalidLieType):
            LieType.parse(bad)


@pytest.mark.parametrize("name", SMALL)
def test_positive_root_counts_and_highest_root(name):
    rs = build_root_system(name)
    theta = rs.highest_root
    assert all(leq(a, theta) for a in rs.positive_roots)
    assert rs.ip(theta, theta) == 2
    # simple roots come first, ordered alpha_1 .. alpha_p
    assert rs.simple_roots == tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))


def test_bourbaki_lengths():
    b4 = build_root_system("B4")
    assert b4.ip(b4.simple(3), b4.simple(3)) < b4.ip(b4.simple(0), b4.simple(0))
    c3 = build_root_system("C3")
    assert c3.ip(c3.simple(2), c3.simple(2)) > c3.ip(c3.simple(0), c3.simple(0))
    f4 = build_root_system("F4")
    assert f4.ip(f4.simple(2), f4.simple(2)) < f4.ip(f4.simple(1), f4.simple(1))
    g2 = build_root_system("G2")
    assert g2.ip(g2.simple(0), g2.simple(0)) * 3 == g2.ip(g2.simple(1), g2.simple(1))
    assert f4.highest_root == (2, 3, 4, 2)
    assert b4.highest_root == (1, 2, 2, 2)


def test_cartan_convention():
    a = cartan_matrix(LieType("B", 2))
    # entry [i][j] = <alpha_j, alpha_i^vee>; alpha_2 short
    assert a == ((2, -1), (-2, 2))


def test_leq_examples():
    a2 = build_root_system("A2")
    assert leq((1, 0), (1, 1))
    assert not leq((1, 0), (0, 1)) and not leq((0, 1), (1, 0))
    assert leq((0, 1, 2, 2), (1, 1, 2, 2))
    assert a2.is_antichain([(1, 0), (0, 1)])


def test_support_examples():
    assert support((1, 0)) == {0}
    assert support((1, 1)) == {0, 1}
    assert support((1, 2, 4, 2)) == {0, 1, 2, 3}


def test_extremal_set_examples():
    a2 = build_root_system("A2")
    assert a2.extremal_set((1, 0)) == {0}
    assert a2.extremal_set((1, 1)) == {0, 1}
    assert build_root_system("B4").extremal_set((0, 1, 2, 2)) == {2}


def test_root_span_examples():
    b4 = build_root_system("B4")
    assert b4.root_span(set()) == ((), (), ())
    _, pos, neg = b4.root_span({0, 1})
    assert set(pos) == {(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)}
    assert set(neg) == {(-1, 0, 0, 0), (0, -1, 0, 0), (-1, -1, 0, 0)}
    assert build_root_system("F4").root_span({3})[1] == ((0, 0, 0, 1),)


def test_connected_components_examples():
    assert build_root_system("F4").connected_components({0, 1, 3}) == [{0, 1}, {3}]
    assert build_root_system("B4").connected_components({0, 1, 3}) == [{0, 1}, {3}]
    assert build_root_system("A3").connected_components(set()) == []
    assert build_root_system("D4").connected_components({0, 2, 3}) == [{0}, {2}, {3}]


def test_antichain_examples():
    a2 = build_root_system("A2")
    assert list(a2.enumerate_antichains()) == [((1, 0),), ((1, 0), (0, 1)), ((0, 1),), ((1, 1),)]
    assert sum(1 for _ in build_root_system("B2").enumerate_antichains()) == 5
    assert build_root_system("B4").is_antichain([(0, 1, 2, 2)])
    assert next(a2.enumerate_antichains(include_empty=True)) == ()


@pytest.mark.parametrize("name", SMALL)
def test_antichain_count_is_catalan(name):
    rs = build_root_system(name)
    assert sum(1 for _ in rs.enumerate_antichains(include_empty=True)) == catalan(rs.lie_type)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"])
def test_antichains_match_brute_force(name):
    rs = build_root_system(name)
    roots = rs.positive_roots
    brute = set()
    for k in range(1, len(roots) + 1):
        for sub in combinations(roots, k):
            if all(not leq(a, b) for a in sub for b in sub if a != b):
                brute.add(frozenset(sub))
    listed = [frozenset(R) for R in rs.enumerate_antichains()]
    assert len(listed) == len(set(listed))
    assert set(listed) == brute


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"])
def test_partial_order_axioms(name):
    rs = build_root_system(name)
    P = rs.positive_roots
    for a in P:
        assert leq(a, a)
        for b in P:
            if leq(a, b) and leq(b, a):
                assert a == b
            if leq(a, b):
                assert all(leq(a, c) for c in P if leq(b, c))


@pytest.mark.parametrize("name", SMALL)
def test_extremal_inside_support(name):
    rs = build_root_system(name)
    for b in rs.positive_roots:
        assert rs.extremal_set(b) <= support(b)
    for i, a in enumerate(rs.simple_roots):
        assert rs.extremal_set(a) == {i}


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_root_span_is_supported(name, data):
    rs = build_root_system(name)
    B = data.draw(st.sets(st.integers(0, rs.rank - 1)))
    allr, pos, neg = rs.root_span(B)
    assert set(pos) <= rs.positive_set
    assert all(support(a) <= B for a in allr)
    assert len(allr) == 2 * len(pos) == 2 * len(neg)
    comps = rs.connected_components(B)
    assert frozenset().union(*comps) == frozenset(B) if comps else not B
    # every root in <B> lives inside one component
    assert all(any(support(a) <= c for c in comps) for a in pos)


def test_format_root():
    rs = build_root_system("B4")
    assert rs.format_root((0, 1, 2, 2)) == "a2+2a3+2a4"
    assert rs.format_root((-1, -1, 0, 0)) == "-a1-a2"

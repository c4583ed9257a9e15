from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from appui.chevalley import HStableSubspace, chevalley_algebra, string_below, structure_constants
from appui.rootsys import add, build_root_system

TYPES = ["A1", "A2", "B2", "G2", "A3", "B3", "C3"]


def test_structure_constant_examples():
    a2 = build_root_system("A2")
    assert abs(structure_constants(a2).N((1, 0), (0, 1))) == 1
    b2 = build_root_system("B2")
    assert abs(structure_constants(b2).N((0, 1), (1, 1))) == 2
    # sum neither a root nor zero
    assert structure_constants(a2).N((1, 1), (1, 0)) == 0


def test_bracket_examples():
    g = chevalley_algebra("A2")
    assert g.bracket_basis((1, 0), (-1, 0)) == {0: 1}
    assert g.bracket_basis(0, (0, 1)) == {(0, 1): -1}
    assert g.bracket_basis((1, 1), (1, 0)) == {}
    assert g.bracket_basis(0, 1) == {}


def test_coroot_normalization():
    g = chevalley_algebra("B2")
    # a1 long, a1+a2 short: h_{a1+a2} = 2 h_1 + h_2
    assert g.coroot((1, 1)) == (2, 1)
    assert g.coroot((1, 2)) == (1, 1)
    for a in g.rs.all_roots:
        assert sum(c * g.rs.pairing(a, i) for i, c in enumerate(g.coroot(a))) == 2


def test_form_examples():
    g = chevalley_algebra("A2")
    assert g.form_basis((1, 0), (0, 1)) == 0
    theta = g.rs.highest_root
    assert g.form_basis(theta, tuple(-x for x in theta)) == 1
    assert g.form_basis(0, 0) == 2 and g.form_basis(0, 1) == -1


@pytest.mark.parametrize("name", TYPES)
def test_antisymmetry_and_string_magnitudes(name):
    g = chevalley_algebra(name)
    rs = g.rs
    for a in rs.all_roots:
        for b in rs.all_roots:
            s = add(a, b)
            if rs.is_root(s):
                n = g.N(a, b)
                assert n == -g.N(b, a)
                assert abs(n) == string_below(rs, a, b) + 1


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_jacobi_small(name):
    g = chevalley_algebra(name)
    keys = g.basis_keys
    for i, x in enumerate(keys):
        for j in range(i + 1, len(keys)):
            for k in range(j + 1, len(keys)):
                y, z = keys[j], keys[k]
                X, Y, Z = {x: 1}, {y: 1}, {z: 1}
                tot = {}
                for u, v, w in ((X, Y, Z), (Y, Z, X), (Z, X, Y)):
                    for key, c in g.bracket(u, g.bracket(v, w)).items():
                        tot[key] = tot.get(key, 0) + c
                assert all(c == 0 for c in tot.values())


def test_bracket_spaces_examples():
    g = chevalley_algebra("A2")
    theta = g.rs.highest_root
    V = g.bracket_spaces(g.root_spaces([theta]), g.full())
    assert V == HStableSubspace.make(g.rs.positive_roots, [g.coroot(theta)])
    nplus = g.root_spaces(g.rs.positive_roots)
    V = g.bracket_spaces(nplus, g.full())
    assert V.pos == set(g.rs.positive_roots) and V.neg == {(1, 0), (0, 1)} and len(V.cartan) == 2
    assert g.bracket_spaces(g.zero(), g.full()).is_zero


def test_contains_examples():
    g = chevalley_algebra("A2")
    assert g.full().contains(g.root_spaces([(1, 0), (-1, -1)]))
    assert not g.root_spaces([(1, 0)]).contains(g.root_spaces([(1, 0), (0, 1)]))
    small = HStableSubspace.make((), [(1, 1)])
    assert g.cartan_full().contains(small) and not small.contains(g.cartan_full())


def test_canonical_equality():
    a = HStableSubspace.make([(1, 0)], [(2, 2), (1, 0)])
    b = HStableSubspace.make([(1, 0)], [(0, Fraction(1, 3)), (5, 5)])
    assert a == b and hash(a) == hash(b)
    assert a.dim == 3


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_bracket_spaces_symmetric_and_stable(name, data):
    g = chevalley_algebra(name)
    roots = list(g.rs.all_roots)
    U = HStableSubspace.make(data.draw(st.lists(st.sampled_from(roots), max_size=6)))
    W = HStableSubspace.make(
        data.draw(st.lists(st.sampled_from(roots), max_size=6)),
        data.draw(st.lists(st.tuples(*[st.integers(-2, 2)] * g.rank), max_size=2)),
    )
    assert g.bracket_spaces(U, W) == g.bracket_spaces(W, U)
    # result is ad-h-stable: bracketing with h stays inside
    B = g.bracket_spaces(U, W)
    assert B.contains(g.bracket_spaces(g.cartan_full(), B))


@pytest.mark.parametrize("name", TYPES)
def test_form_nondegenerate_on_h(name):
    from appui import linalg

    g = chevalley_algebra(name)
    gram = [[g.form_basis(i, j) for j in range(g.rank)] for i in range(g.rank)]
    assert linalg.rank(gram) == g.rank

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from appui import affine as af
from appui import standard as S
from appui.affine import AffineElement as E
from appui.chevalley import chevalley_algebra

B4_R = [(0, 1, 2, 2)]


@pytest.fixture(scope="module")
def b4():
    return chevalley_algebra("B4")


@pytest.fixture(scope="module")
def b4_case(b4):
    s = S.build_standard(b4, B4_R)
    return s, S.appui_formula(b4, s), S.normalizer_finite(b4, s)


def test_bracket_examples():
    g = chevalley_algebra("A2")
    a = (1, 0)
    assert af.affine_bracket(g, E.derivation(), E.loop(3, a)) == E.loop(3, a).scale(3)
    x = E.loop(2, (0, 1)) + E.derivation()
    assert af.affine_bracket(g, E.central(), x).is_zero()
    theta = g.rs.highest_root
    res = af.affine_bracket(g, E.loop(1, theta), E.loop(-1, tuple(-c for c in theta)))
    h_theta = {i: Fraction(c) for i, c in enumerate(g.coroot(theta)) if c}
    assert res == E.loop(0, h_theta) + E.central(1)


def test_no_central_term_in_non_negative_degrees():
    g = chevalley_algebra("B2")
    for n in range(0, 4):
        for m in range(0, 4):
            for a in g.rs.all_roots:
                r = af.affine_bracket(g, E.loop(n, a), E.loop(m, tuple(-c for c in a)))
                assert r.k == 0 or n == m == 0


def _elements(g, data, degs=(-2, 2)):
    keys = g.basis_keys
    out = E()
    for _ in range(data.draw(st.integers(1, 3))):
        deg = data.draw(st.integers(*degs))
        out = out + E.loop(deg, data.draw(st.sampled_from(keys))).scale(data.draw(st.integers(-3, 3)))
    return out + E.central(data.draw(st.integers(-1, 1))) + E.derivation(data.draw(st.integers(-1, 1)))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A1", "A2", "B2", "G2"]), st.data())
def test_bilinear_antisymmetric_jacobi(name, data):
    g = chevalley_algebra(name)
    x, y, z = (_elements(g, data) for _ in range(3))
    c = data.draw(st.integers(-3, 3))
    br = lambda u, v: af.affine_bracket(g, u, v)  # noqa: E731
    assert br(x, y) == br(y, x).scale(-1)
    assert br(x.scale(c) + y, z) == br(x, z).scale(c) + br(y, z)
    assert (br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))).is_zero()


def test_build_tau_bar_examples(b4, b4_case):
    s, V, rho = b4_case
    T = af.build_tau_bar(b4, s.tau, V, 1, rho)
    assert T.layers == {1: s.tau, 2: V} and T.tail == 3 and T.has_K and not T.has_d

    a2 = chevalley_algebra("A2")
    sa = S.build_standard(a2, [(1, 1)])
    Va = S.appui_formula(a2, sa)
    T = af.build_tau_bar(a2, sa.tau, Va, 2)
    assert T.layers == {2: a2.root_spaces([(1, 1)]), 3: Va} and T.tail == 4

    with pytest.raises(af.PreconditionError):
        af.build_tau_bar(b4, s.tau, V, 0, rho)
    with pytest.raises(af.PreconditionError):
        af.build_tau_bar(b4, s.tau, V.without((-1, 0, 0, 0)), 1, rho)


def test_bracket_loop_examples(b4, b4_case):
    s, V, rho = b4_case
    U = af.LoopSubspace({1: s.tau})
    W = af.LoopSubspace({1: b4.full()})
    assert af.bracket_loop(b4, U, W, 4).layer(b4, 2) == V
    D = af.LoopSubspace(has_d=True)
    T = af.build_tau_bar(b4, s.tau, V, 1, rho)
    out = af.bracket_loop(b4, D, T, 5)
    assert out.layer(b4, 1) == s.tau and out.layer(b4, 2) == V and out.tail == 3
    G = af.LoopSubspace(tail=1)
    assert af.bracket_loop(b4, G, G, 4).tail == 2


def test_affine_normalizer_examples(b4, b4_case):
    s, V, rho = b4_case
    T = af.build_tau_bar(b4, s.tau, V, 1, rho)
    N = af.affine_normalizer(b4, T)
    assert N == af.rho_bar(b4, b4.parabolic({0, 1, 3}))
    assert N.has_K and N.has_d and N.tail == 1

    a2 = chevalley_algebra("A2")
    sa = S.build_standard(a2, [(1, 0), (0, 1)])
    Ta = af.build_tau_bar(a2, sa.tau, S.appui_formula(a2, sa), 1)
    assert af.affine_normalizer(a2, Ta).layer(a2, 0) == a2.borel()

    everything = af.LoopSubspace(tail=0, has_K=True, has_d=True)
    assert af.affine_normalizer(a2, everything).layer(a2, 0) == a2.full()


def test_verify_standard_examples(b4, b4_case):
    s, V, rho = b4_case
    rep = af.verify_standard(b4, af.build_tau_bar(b4, s.tau, V, 1, rho), rho)
    assert rep.passed and rep.cap == 5 and rep.normalizer_levi == {0, 1, 3}

    bad = af.build_tau_bar(b4, s.tau, V.without((-1, 0, 0, 0)), 1, check=False)
    rep = af.verify_standard(b4, bad, rho)
    assert not rep.ideal_of_claimed_normalizer and not rep.passed

    a2 = chevalley_algebra("A2")
    T = af.LoopSubspace(tail=1, has_K=True)
    rep = af.verify_standard(a2, T)
    assert rep.passed and rep.normalizer_levi == {0, 1}

    with pytest.raises(af.PreconditionError):
        af.verify_standard(b4, af.build_tau_bar(b4, s.tau, V, 1, rho), rho, cap=3)
    assert af.verify_standard(b4, af.build_tau_bar(b4, s.tau, V, 1, rho), rho, cap=7).passed


def test_truncation_is_standard(b4, b4_case):
    s, V, rho = b4_case
    assert af.verify_standard(b4, af.appui_truncation(b4, V, 1)).passed


def test_classify_round_trip(b4, b4_case):
    s, V, rho = b4_case
    for n in (1, 2, 3):
        cl = af.classify_graded(b4, af.build_tau_bar(b4, s.tau, V, n, rho))
        assert (cl.tau, cl.V, cl.n) == (s.tau, V, n)
        assert cl.rho == rho and all(cl.relations.values()) and not cl.degree_zero


def test_classify_degree_zero_form():
    g = chevalley_algebra("B3")
    s = S.build_standard(g, [(0, 1, 0)])
    T = af.degree_zero_form(g, s.tau)
    cl = af.classify_graded(g, T)
    assert cl.degree_zero and cl.n == 0 and cl.tau == s.tau and cl.V == g.full()
    assert af.verify_standard(g, T).passed


def test_classify_rejects_short_layer(b4, b4_case):
    s, V, rho = b4_case
    # I_{n+2} a proper subspace of g: [V, g] = g cannot fit
    T = af.LoopSubspace({1: s.tau, 2: V, 3: V}, tail=4, has_K=True)
    with pytest.raises(af.GradedRejection) as exc:
        af.classify_graded(b4, T)
    assert any("must equal g" in r for r in exc.value.reasons)


def test_classify_rejects_non_subalgebra():
    g = chevalley_algebra("A2")
    vm = S.appui_formula(g, S.build_standard(g, [(1, 0), (0, 1)]))
    T = af.LoopSubspace({1: vm}, tail=2, has_K=True)
    with pytest.raises(af.GradedRejection) as exc:
        af.classify_graded(g, T)
    assert any("not a Lie subalgebra" in r for r in exc.value.reasons)


def test_classify_rejects_missing_tail():
    g = chevalley_algebra("A2")
    T = af.LoopSubspace({1: g.root_spaces([(1, 1)])}, has_K=True)
    with pytest.raises(af.GradedRejection):
        af.classify_graded(g, T)


def test_loop_subspace_guards():
    g = chevalley_algebra("A2")
    with pytest.raises(ValueError):
        af.LoopSubspace({-1: g.full()})
    T = af.LoopSubspace({0: g.zero(), 2: g.borel()}, tail=5)
    assert T.start == 2 and T.top() == 5 and T.layer(g, 7) == g.full()


def test_affine_root_rendering(b4, b4_case):
    s, V, rho = b4_case
    rows = af.affine_roots(b4, af.build_tau_bar(b4, s.tau, V, 1, rho))
    assert [r["degree"] for r in rows] == [1, 2]
    assert "a2+2a3+2a4+δ" in rows[0]["real"]
    assert rows[1]["imaginary"] is None and rows[1]["cartan_dim"] == 3
    assert "-a1-a2+2δ" in rows[1]["real"]
    assert af.AffineRoot(None, 2).format(b4) == "2δ"
    assert af.AffineRoot((1, 0, 0, 0), 0).format(b4) == "a1"

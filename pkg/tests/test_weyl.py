import pytest
from hypothesis import given, strategies as st

from cellulo.rootdata import Config, DatumError, build_gl, build_simple, is_dominant, rho_integral
from cellulo.weyl import alcove_of, alcove_of_elt, weyl_group
from oracles import bfs_word_lengths, matrix_to_elt


def elements(g, L, omegas=True):
    return g.ball(L, omegas=g.omegas() if omegas else None)


def elt_strategy(g, L=5):
    pool = g.ball(L, omegas=g.omegas())
    return st.sampled_from(pool)


# -- length -------------------------------------------------------------


def test_length_examples(a1):
    s, s0 = a1.generators
    assert a1.identity.length == 0
    assert s0.length == 1
    assert a1.act(s0, (0,)) == (2,)  # mu -> s(mu) + alpha
    t_alpha = a1.translation((2,))
    assert t_alpha.length == 2
    assert t_alpha == s0 * s


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_formula_matches_word_length(label):
    g = weyl_group(build_simple(label))
    seen = bfs_word_lengths(g.datum, 7)
    for depth, m in seen.values():
        assert g.length(matrix_to_elt(g, m)) == depth
    assert {matrix_to_elt(g, m) for _, m in seen.values()} == set(g.ball(7))


def test_gl_generators_have_length_one():
    g = weyl_group(build_gl((2, 3)))
    assert all(s.length == 1 for s in g.generators)
    assert len(g.generators) == 1 + 2 + 2  # finite simple reflections plus one affine per block


def test_alternative_reading_fails(a1):
    # the other semidirect-product reading gives the affine reflection length 3
    s0 = a1.generators[1]
    assert a1.length_alternative_reading(s0) == 3


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_length_invariant_under_omega(label):
    g = weyl_group(build_simple(label))
    for w in g.ball(4):
        for om in g.omegas():
            for om2 in g.omegas():
                assert g.length(om * w * om2) == g.length(w)


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_subadditive(label):
    g = weyl_group(build_simple(label))

    @given(elt_strategy(g), elt_strategy(g))
    def check(x, y):
        assert (x * y).length <= x.length + y.length

    check()


# -- group law ------------------------------------------------------------


def test_multiply_examples(a1, a2):
    s, s0 = a1.generators
    w = s0 * s
    assert w * a1.identity == w
    assert a2.translation((1, 2)) * a2.translation((3, -1)) == a2.translation((4, 1))
    assert s0 * s0 == a1.identity


def test_datum_mismatch(a1, a2):
    with pytest.raises(DatumError):
        a1.mul(a1.identity, a2.generators[0])


@pytest.mark.parametrize("label", ["A2", "G2"])
def test_associative_and_inverse(label):
    g = weyl_group(build_simple(label))

    @given(elt_strategy(g), elt_strategy(g), elt_strategy(g))
    def check(x, y, z):
        assert (x * y) * z == x * (y * z)
        assert x * x.inverse() == g.identity
        for mu in [(0, 0), (1, -2)]:
            assert g.act(x * y, mu) == g.act(x, g.act(y, mu))

    check()


def test_generator_counts():
    assert len(weyl_group(build_simple("A1")).generators) == 2
    assert len(weyl_group(build_simple("A2")).generators) == 3
    assert len(weyl_group(build_gl((1, 1))).generators) == 0


def test_generators_are_involutions():
    for label in ["A1", "A2", "B2", "G2"]:
        g = weyl_group(build_simple(label))
        for s in g.generators:
            assert s * s == g.identity


# -- Omega ----------------------------------------------------------------


def test_omega_examples(a1, a2):
    assert a1.omega_of(a1.identity) == (a1.identity, a1.identity)
    om = a1.translation((1,)) * a1.generators[0]
    assert om.length == 0
    assert a1.omega_of(om) == (a1.identity, om)
    assert set(a1.omegas()) == {a1.identity, om}
    found = {a2.omega_of(a2.translation(lam) * w)[1] for lam in [(1, 0), (0, 1)] for w in a2.finite_elements()}
    found.add(a2.identity)
    assert len(found) == 3 == len(a2.omegas())


def test_omega_sizes():
    assert len(weyl_group(build_simple("B2")).omegas()) == 2
    assert len(weyl_group(build_simple("G2")).omegas()) == 1


def test_omega_of_factorization():
    for label in ["A2", "B2"]:
        g = weyl_group(build_simple(label))
        for w in elements(g, 4):
            u, om = g.omega_of(w)
            assert u * om == w and om.length == 0 and g.in_W(u)


def test_gl_omega_is_not_enumerated():
    g = weyl_group(build_gl((2,)))
    with pytest.raises(DatumError):
        g.omegas()
    gens = g.omega_generators()
    assert all(x.length == 0 for x in gens)
    assert len(g.omega_set(1)) == 3


# -- cosets -----------------------------------------------------------------


def test_min_coset_rep_examples(a1):
    assert a1.min_coset_rep((0,)) == a1.identity
    w = a1.min_coset_rep((-1,))
    assert w.length == 0 and w.trans == (-1,)
    # the affine reflection s0 lies in W_f t_{-alpha}; t_alpha is already minimal in its coset
    assert a1.min_coset_rep((-2,)) == a1.generators[1]
    assert a1.min_coset_rep((2,)).length == 2


def test_min_coset_rep_by_enumeration(a2):
    for lam in [(1, -2), (0, 3), (-2, -1)]:
        coset = [a2.elt(i, lam) for i in range(a2.finite_order)]
        shortest = min(x.length for x in coset)
        assert a2.min_coset_rep(lam).length == shortest
        assert sum(x.length == shortest for x in coset) == 1


def test_min_coset_rep_injective(b2):
    lams = [(a, b) for a in range(-4, 5) for b in range(-4, 5)]
    reps = [b2.min_coset_rep(lam) for lam in lams]
    assert len(set(reps)) == len(lams)


def test_fw_examples(a1):
    assert a1.in_fw(a1.identity) and a1.in_fwf(a1.identity)
    s = a1.generators[0]
    assert not a1.in_fw(s) and not a1.in_fwf(s)
    w = a1.min_coset_rep((-2,))
    assert a1.in_fw(w) and a1.in_fwf(w)


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_fwf_iff_antidominant(label):
    g = weyl_group(build_simple(label))
    d = g.datum
    for a in range(-4, 5):
        for b in range(-4, 5):
            w = g.min_coset_rep((a, b))
            assert g.in_fw(w)
            assert g.in_fwf(w) == is_dominant((-a, -b), d) == g.is_double_coset_minimal(w)


# -- dot action and alcoves ---------------------------------------------------


def test_dot_examples(a1):
    assert a1.dot(a1.identity, (0,), 5) == (0,)
    assert a1.dot(a1.generators[0], (0,), 5) == (-2,)


def test_dot_central_shift_invariance():
    d = build_gl((2, 3))
    g = weyl_group(d)
    r = rho_integral(d)
    shifted = tuple(x + 7 for x in r)
    for w in g.ball(4, omegas=g.omega_set(1)):
        for mu in [(0,) * 5, (1, -1, 2, 0, 3)]:
            assert g.dot(w, mu, 7) == g.dot(w, mu, 7, rho_vec=r) == g.dot(w, mu, 7, rho_vec=shifted)


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_dot_is_action(label):
    g = weyl_group(build_simple(label))

    @given(elt_strategy(g), elt_strategy(g), st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
    def check(x, y, mu):
        assert g.dot(x * y, mu, 7) == g.dot(x, g.dot(y, mu, 7), 7)

    check()


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_dot_dominant_iff_fw(label):
    g = weyl_group(build_simple(label))
    for w in elements(g, 6):
        assert is_dominant(g.dot(w, (0,) * g.rank, 7), g.datum) == g.in_fw(w)


def test_alcove_examples():
    a1 = build_simple("A1")
    assert alcove_of((0,), a1, 5).n == (0,)
    assert alcove_of((5,), a1, 5).n == (1,)
    for label in ["A2", "B2", "G2"]:
        d = build_simple(label)
        assert set(alcove_of((0, 0), d, 7).n) == {0}
    with pytest.raises(DatumError):
        alcove_of((0,), a1, 2)


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_alcoves_biject_with_w_ext_mod_omega(label):
    g = weyl_group(build_simple(label))
    cfg = Config(7)
    seen = {}
    for w in elements(g, 6):
        alc = alcove_of_elt(w, cfg)
        u, _ = g.omega_of(w)
        assert seen.setdefault(alc, u) == u
        assert alc.contains(g.dot(w, (0, 0), 7), g.datum, 7)


# -- balls and text format -------------------------------------------------


def test_ball_examples(a1, a2):
    assert a1.ball(0) == [a1.identity]
    assert len(a1.ball(3)) == 7
    # BFS over affine-map matrices, independent of the package's group law
    assert len(bfs_word_lengths(a2.datum, 2)) == 10
    assert len(a2.ball(2)) == 10


def test_ball_is_sorted(b2):
    ball = b2.ball(5)
    assert ball == sorted(ball, key=lambda w: w.sort_key())


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_text_round_trip(label):
    g = weyl_group(build_simple(label))
    for w in elements(g, 5):
        text = g.format(w)
        assert g.parse(text) == w
        assert g.format(g.parse(text)) == text


def test_parse_words(a1):
    s, s0 = a1.generators
    assert a1.parse("s0as1") == s0 * s
    assert a1.parse("t[1]*s1s1") == a1.translation((1,))
    assert a1.parse("e") == a1.identity
    with pytest.raises(ValueError):
        a1.parse("s7")
    with pytest.raises(ValueError):
        a1.parse("t[1,2]*e")

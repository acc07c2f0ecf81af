import pytest

from parabolic_kl.algebra.hecke_module import (
    ModuleElement,
    bar_involution,
    base_element,
    expand_in_kl_basis,
    factorized_product,
    flip_distance,
    flip_set,
    hecke_act,
    generator_inverse_act,
    kl_basis_by_solve,
    kl_basis_minus,
    kl_basis_plus,
    kl_table,
    parabolic_kl,
    reduced_word,
    tl_generator_act,
    verify_bar_invariance,
    verify_duality,
)
from parabolic_kl.algebra.laurent import ONE, T, T_INV, T_MINUS_T_INV, LaurentPoly
from parabolic_kl.combinatorics.paths import MINUS, PLUS, PathNK, all_paths, minimal_path, path_length
from parabolic_kl.utils.errors import InvalidInputError


def P(text):
    return PathNK.parse(text)


def m(text, eps):
    return ModuleElement.basis(P(text), eps)


def test_local_rules_minus():
    assert hecke_act(1, m("-+", MINUS)) == m("+-", MINUS)
    expected = m("+-", MINUS).scale(T_MINUS_T_INV) + m("-+", MINUS)
    assert hecke_act(1, m("+-", MINUS)) == expected


def test_local_rules_plus():
    assert hecke_act(1, m("++", PLUS)) == m("++", PLUS).scale(T)
    assert hecke_act(1, m("--", MINUS)) == m("--", MINUS).scale(-T_INV)
    assert hecke_act(1, m("+-", PLUS)) == m("-+", PLUS)


def test_inverse_generator_undoes_generator():
    v = m("-++-", MINUS)
    for i in (1, 2, 3):
        assert generator_inverse_act(i, hecke_act(i, v)) == v
    with pytest.raises(InvalidInputError):
        hecke_act(4, v)


def test_reduced_word_builds_path():
    for beta in all_paths(5, 2):
        for order in ("left", "right"):
            word = reduced_word(beta, MINUS, order)
            assert len(word) == path_length(beta, MINUS)
            current = base_element(5, 2, MINUS)
            for i in reversed(word):
                current = hecke_act(i, current)
            assert current == ModuleElement.basis(beta, MINUS)


def test_bar_involution():
    assert bar_involution(base_element(4, 2, MINUS)) == base_element(4, 2, MINUS)
    expected = m("+-", MINUS) - m("-+", MINUS).scale(T_MINUS_T_INV)
    assert bar_involution(m("+-", MINUS)) == expected
    v = m("+-+-", PLUS).scale(T) + m("--++", PLUS)
    assert bar_involution(bar_involution(v)) == v


def test_flip_set_of_2121():
    beta = P("+-+-")
    assert sorted(flip_set(beta)) == sorted([(P("+-+-"), 0), (P("-++-"), 1), (P("+--+"), 1), (P("-+-+"), 2)])
    assert flip_set(P("--++")) == [(P("--++"), 0)]
    assert flip_distance(P("-+-+"), beta) == 2
    assert flip_distance(P("--++"), beta) is None


def test_canonical_minus_element():
    c = kl_basis_minus(P("+-+-"))
    expected = ModuleElement({
        P("+-+-"): ONE,
        P("-++-"): T_INV,
        P("+--+"): T_INV,
        P("-+-+"): LaurentPoly.monomial(-2),
    }, MINUS)
    assert c == expected
    assert kl_basis_minus(minimal_path(4, 2, MINUS)) == base_element(4, 2, MINUS)


def test_canonical_bases_agree_across_methods():
    for beta in all_paths(5, 2):
        flip = kl_basis_minus(beta, "flip")
        assert flip == factorized_product(beta, "left")
        assert flip == factorized_product(beta, "right")
        assert flip == kl_basis_by_solve(beta, MINUS)
        assert kl_basis_plus(beta, "inverse") == kl_basis_plus(beta, "solve")
    with pytest.raises(InvalidInputError):
        kl_basis_minus(P("+-"), "guess")


def test_four_two_values():
    assert kl_basis_plus(P("-+-+")).coefficient(P("++--")) == LaurentPoly({-3: 1, -1: 1})
    assert kl_basis_plus(P("--++")).coefficient(P("++--")) == LaurentPoly.monomial(-4)
    assert kl_basis_plus(P("++--")) == base_element(4, 2, PLUS)
    assert parabolic_kl(P("--++"), P("++--"), MINUS) == LaurentPoly.monomial(-2)
    assert parabolic_kl(P("++--"), P("-+-+"), PLUS) == LaurentPoly({-3: 1, -1: 1})
    assert parabolic_kl(P("-++-"), P("+--+"), MINUS).is_zero()
    assert parabolic_kl(P("+-+-"), P("+-+-"), PLUS) == ONE


def test_kl_table_blanks_and_zeros():
    paths, rows = kl_table(4, 2, MINUS)
    assert str(paths[0]) == "--++"
    assert rows[0][2] is not None and rows[0][2].is_zero()
    assert rows[2][3] is None
    assert rows[1][0] is None


def test_expand_in_own_basis():
    c = kl_basis_minus(P("+-+-"))
    assert expand_in_kl_basis(c) == {P("+-+-"): ONE}
    with pytest.raises(InvalidInputError):
        expand_in_kl_basis(c, PLUS)


def test_temperley_lieb_coefficients_are_bar_invariant():
    for beta in all_paths(4, 2):
        for i in (1, 2, 3):
            for coeff in tl_generator_act(i, beta).values():
                assert coeff.bar() == coeff


def test_duality_and_bar_invariance():
    for N, K in [(1, 0), (4, 2), (5, 2), (6, 3)]:
        assert verify_duality(N, K)
    for sign in (PLUS, MINUS):
        assert verify_bar_invariance(5, 3, sign)

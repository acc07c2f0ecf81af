import pytest

from parabolic_kl.algebra.hecke_module import ModuleElement
from parabolic_kl.algebra.laurent import ONE, T_INV, LaurentPoly
from parabolic_kl.combinatorics.paths import PLUS, BinaryString, PathNK, all_paths
from parabolic_kl.rules.linkage import (
    Linkage,
    all_linkages,
    expand_monomial,
    flip_distance_of,
    inverse_column,
    l_set,
    linkage_closure,
    r_flip,
    substitute,
    verify_inverse_formula,
)
from parabolic_kl.utils.errors import InvalidInputError


def S(text):
    return BinaryString.parse(text)


def P(text):
    return PathNK.parse(text)


def test_all_linkages():
    assert [w.pairs for w in all_linkages(S("1122"))] == [((1, 4), (2, 3))]
    assert [w.pairs for w in all_linkages(S("2211"))] == [((3, 2), (4, 1))]
    assert [w.pairs for w in all_linkages(S("12"))] == [((1, 2),)]
    for w in all_linkages(S("121212")):
        assert len(w.pairs) == 3 and not w.unpaired


def test_unequal_letters_leave_singletons():
    for w in all_linkages(S("21112")):
        assert len(w.pairs) == 2
        assert len(w.unpaired) == 1
        (u,) = w.unpaired
        assert not any(min(p) < u < max(p) for p in w.pairs)


def test_r_flip():
    beta = S("2211")
    w = all_linkages(beta)[0]
    assert w.reversed_pairs() == [(3, 2), (4, 1)]
    assert str(r_flip(beta, w, (4, 1))) == "1122"
    assert str(r_flip(beta, w, (3, 2))) == "2121"
    ordered = all_linkages(S("1122"))[0]
    with pytest.raises(InvalidInputError):
        r_flip(S("1122"), ordered, (1, 4))


def test_closure_and_l_set():
    beta = S("2211")
    closure = linkage_closure(beta, all_linkages(beta)[0])
    assert closure == {S("2211"): 0, S("2121"): 1, S("1122"): 2}
    assert sorted(l_set(beta)) == sorted([(P("--++"), 0), (P("-+-+"), 1), (P("++--"), 2)])
    assert l_set(S("1122")) == [(P("++--"), 0)]
    assert flip_distance_of(S("1122"), S("2211")) == 2


def test_expand_monomial():
    coordinates = expand_monomial(P("--++"))
    assert coordinates == {P("--++"): ONE, P("-+-+"): -T_INV, P("++--"): LaurentPoly.monomial(-2)}
    assert expand_monomial(P("++--")) == {P("++--"): ONE}
    assert coordinates == inverse_column(P("--++"))


def test_substitution_rebuilds_standard_basis():
    for beta in all_paths(4, 2):
        assert substitute(expand_monomial(beta)) == ModuleElement.basis(beta, PLUS)


def test_inverse_formula():
    assert verify_inverse_formula(4, 2)
    assert verify_inverse_formula(6, 3)
    assert verify_inverse_formula(5)


def test_linkage_json():
    w = Linkage(((4, 1), (3, 2)))
    assert w.to_json() == {"pairs": [[3, 2], [4, 1]], "unpaired": []}
    assert w.spans() == [(2, 3), (1, 4)]

import pytest

from parabolic_kl.algebra.hecke_module import kl_basis_plus
from parabolic_kl.algebra.laurent import ONE, T_INV, LaurentPoly
from parabolic_kl.combinatorics.paths import MINUS, PLUS, BinaryString, PathNK, all_paths, dominates, string_to_path
from parabolic_kl.rules.dyck import (
    Box,
    DyckStrip,
    StripConfig,
    enumerate_configurations,
    generating_function,
    parse_rule,
    q_polynomial,
    q_rule_I,
    q_rule_II,
    q_table,
    region_boxes,
    rule_I_holds,
    rule_II_holds,
    satisfies_rule_I,
    satisfies_rule_II,
    verify_inversion,
)
from parabolic_kl.utils.errors import IncomparablePathsError, InvalidInputError

NESTED_LOWER = PathNK.parse("-++-+--+")
NESTED_UPPER = PathNK.parse("++++----")
EIGHT_BOX_POLY = LaurentPoly({-8: 1, -6: 2, -4: 1, -2: 1})


def P(text):
    return PathNK.parse(text)


def strip(*boxes):
    return DyckStrip(tuple(Box(x, y) for x, y in boxes))


def test_region_boxes():
    assert region_boxes(P("++--"), P("++--")) == set()
    assert region_boxes(P("-+-+"), P("++--")) == {Box(1, 0), Box(2, 1), Box(3, 0)}
    assert len(region_boxes(NESTED_LOWER, NESTED_UPPER)) == 8
    with pytest.raises(IncomparablePathsError):
        region_boxes(P("++--"), P("-+-+"))


def test_strip_must_be_dyck_path():
    assert len(strip((1, 0), (2, 1), (3, 0))) == 3
    with pytest.raises(InvalidInputError):
        strip((1, 0), (2, 1))
    with pytest.raises(InvalidInputError):
        strip((1, 0), (2, -1), (3, 0))


def test_rules_on_three_box_region():
    singles = [strip((1, 0)), strip((2, 1)), strip((3, 0))]
    assert satisfies_rule_I(StripConfig(P("-+-+"), P("++--"), tuple(singles)))
    assert not satisfies_rule_II(StripConfig(P("-+-+"), P("++--"), tuple(singles)))
    whole = StripConfig(P("-+-+"), P("++--"), (strip((1, 0), (2, 1), (3, 0)),))
    assert satisfies_rule_I(whole)
    assert satisfies_rule_II(whole)


def test_rule_I_all_or_nothing():
    bottom = strip((1, 0), (2, 1), (3, 0))
    assert rule_I_holds(bottom, strip((1, 2), (2, 3), (3, 2)))
    assert not rule_I_holds(bottom, strip((3, 2), (4, 3), (5, 2)))
    assert rule_II_holds(strip((5, 0)), strip((1, 0)))


def test_rule_one_polynomials():
    assert q_rule_I(P("-+-+"), P("++--")) == LaurentPoly({-3: 1, -1: 1})
    assert q_rule_I(P("+-+-"), P("+-+-")) == ONE
    assert q_rule_I(P("++--"), P("-+-+")).is_zero()
    configs = enumerate_configurations(NESTED_LOWER, NESTED_UPPER, "I")
    assert len(configs) == 5
    assert generating_function(configs) == EIGHT_BOX_POLY


def test_string_pair_example():
    upper = string_to_path(BinaryString.parse("111212222"), PLUS)
    lower = string_to_path(BinaryString.parse("211212221"), PLUS)
    configs = enumerate_configurations(lower, upper, "I")
    assert len(configs) == 5
    assert generating_function(configs) == EIGHT_BOX_POLY
    assert q_polynomial(upper, lower, "I", PLUS) == EIGHT_BOX_POLY


def test_rule_two_polynomials():
    assert q_rule_II(P("-+-+"), P("+-+-")) == LaurentPoly.monomial(-2)
    assert q_rule_II(P("-+-+"), P("++--")) == T_INV
    assert q_rule_II(P("--++"), P("-++-")).is_zero()
    assert q_rule_II(P("-++-"), P("+--+")).is_zero()
    assert q_rule_II(P("++--"), P("++--")) == ONE


@pytest.mark.parametrize("N", range(1, 7))
def test_pruning_does_not_change_results(N):
    for K in range(N + 1):
        for lower in all_paths(N, K):
            for upper in all_paths(N, K):
                if not dominates(lower, upper):
                    continue
                for rule in ("I", "II"):
                    pruned = set(enumerate_configurations(lower, upper, rule))
                    filtered = enumerate_configurations(lower, upper, rule, prune=False)
                    assert pruned == set(filtered)
                assert generating_function(enumerate_configurations(lower, upper, "I", prune=False)) == \
                    q_rule_I(lower, upper)


def test_every_tiling_is_valid():
    for config in enumerate_configurations(P("--++"), P("++--")):
        config.validate()
        assert config.box_count == 4


def test_rule_one_matches_canonical_plus_basis():
    for lower in all_paths(6, 3):
        c = kl_basis_plus(lower)
        for upper in all_paths(6, 3):
            if dominates(lower, upper):
                assert q_rule_I(lower, upper) == c.coefficient(upper)


def test_config_json_round_trip():
    config = enumerate_configurations(NESTED_LOWER, NESTED_UPPER, "I")[0]
    assert StripConfig.from_json(config.to_json()) == config
    with pytest.raises(InvalidInputError):
        StripConfig.from_json({"lower": "-+-+", "upper": "++--", "strips": [[[1, 0]]]})


def test_q_table_and_inversion():
    paths, rows = q_table(4, 2, "II", MINUS)
    assert str(paths[-1]) == "++--"
    assert rows[0][-1] == LaurentPoly.monomial(-2)
    for N, K in [(1, 1), (4, 2), (5, 2), (6, 3)]:
        assert verify_inversion(N, K)


def test_parse_rule():
    assert parse_rule("rule1") == "I"
    assert parse_rule(2) == "II"
    assert parse_rule(None) is None
    with pytest.raises(InvalidInputError):
        parse_rule("III")

import pytest

from parabolic_kl.combinatorics.paths import (
    MINUS,
    PLUS,
    BinaryString,
    LinkPattern,
    PathNK,
    all_paths,
    dominates,
    ferrers_box_count,
    link_pattern,
    linear_extension,
    maximal_path,
    minimal_path,
    pair_flip,
    parse_convention,
    parse_path_or_string,
    path_from_link_pattern,
    path_length,
    path_leq,
    path_to_string,
    string_to_path,
)
from parabolic_kl.utils.errors import IncomparablePathsError, InvalidInputError

WORKED = BinaryString.parse("2112212111")


def P(text):
    return PathNK.parse(text)


def test_string_to_path_under_both_conventions():
    assert string_to_path(WORKED, MINUS) == P("+--++-+---")
    assert string_to_path(BinaryString.parse("1122"), PLUS) == P("++--")
    assert string_to_path(BinaryString.parse("1122"), MINUS) == P("--++")
    assert path_to_string(P("+---"), MINUS) == BinaryString.parse("2111")


def test_string_path_bijection():
    for p in all_paths(5, 2):
        for eps in (PLUS, MINUS):
            assert string_to_path(path_to_string(p, eps), eps) == p


def test_link_pattern_of_worked_example():
    pattern = link_pattern(P("+--++-+---"))
    assert pattern.pairings == ((1, 2), (4, 9), (5, 6), (7, 8))
    assert pattern.unpaired == (3, 10)
    assert link_pattern(P("++--")).pairings == ((1, 4), (2, 3))
    assert link_pattern(P("--++")).unpaired == (1, 2, 3, 4)


def test_path_from_link_pattern_inverts():
    for p in all_paths(6, 2):
        assert path_from_link_pattern(link_pattern(p), 6, 2) == p
    with pytest.raises(InvalidInputError):
        LinkPattern.from_json({"pairings": [[1, 3], [2, 4]], "unpaired": []})


def test_box_count():
    assert ferrers_box_count(P("++--"), P("++--")) == 0
    assert ferrers_box_count(P("-+-+"), P("+-+-")) == 2
    assert ferrers_box_count(P("-++-+--+"), P("++++----")) == 8
    with pytest.raises(IncomparablePathsError):
        ferrers_box_count(P("+--+"), P("-++-"))


def test_order_under_both_conventions():
    assert path_leq(P("--++"), P("++--"), MINUS)
    assert path_leq(P("++--"), P("--++"), PLUS)
    assert not path_leq(P("-++-"), P("+--+"), MINUS)
    assert not path_leq(P("+--+"), P("-++-"), MINUS)
    assert path_leq(P("+-+-"), P("+-+-"), PLUS)


def test_linear_extension_respects_order():
    for eps in (PLUS, MINUS):
        paths = linear_extension(5, 3, eps)
        assert paths[0] == minimal_path(5, 3, eps)
        assert paths[-1] == maximal_path(5, 3, eps)
        for a_index, a in enumerate(paths):
            for b in paths[:a_index]:
                assert not path_leq(a, b, eps) or a == b


def test_length_counts_boxes_above_identity():
    assert path_length(minimal_path(4, 2, MINUS), MINUS) == 0
    assert path_length(P("++--"), MINUS) == 4
    assert path_length(P("--++"), PLUS) == 4
    assert path_length(string_to_path(WORKED, MINUS), MINUS) == WORKED.inversions()


def test_pair_flip():
    s = BinaryString.parse("2121")
    assert str(pair_flip(s, (1, 2))) == "1221"
    assert str(pair_flip(s, (3, 4))) == "2112"
    with pytest.raises(InvalidInputError):
        pair_flip(BinaryString.parse("1221"), (1, 2))
    with pytest.raises(InvalidInputError):
        pair_flip(pair_flip(s, (3, 4)), (3, 4))


def test_parsing():
    assert parse_convention("+") == PLUS
    assert parse_convention("−") == MINUS
    assert parse_path_or_string("1212", MINUS) == P("-+-+")
    assert parse_path_or_string("−−++", MINUS) == P("--++")
    with pytest.raises(InvalidInputError):
        PathNK.parse("+x-")
    with pytest.raises(InvalidInputError):
        parse_convention("0")


def test_dominates_requires_same_shape():
    assert not dominates(P("+-"), P("++"))
    assert dominates(P("-+"), P("+-"))

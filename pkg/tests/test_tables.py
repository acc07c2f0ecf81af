import pytest

from parabolic_kl.combinatorics.paths import MINUS, PLUS, PathNK
from parabolic_kl.tables import applicable_methods, build_table, polynomial_function
from parabolic_kl.utils.errors import InvalidInputError

# rows alpha, columns beta, in the linear extension of each sign; None is an order violation
P_MINUS = [
    ["1", "t^-1", "0", "0", "0", "t^-2"],
    [None, "1", "t^-1", "t^-1", "t^-2", "t^-1"],
    [None, None, "1", None, "t^-1", "0"],
    [None, None, None, "1", "t^-1", "0"],
    [None, None, None, None, "1", "t^-1"],
    [None, None, None, None, None, "1"],
]
P_PLUS = [
    ["1", "t^-1", "t^-2", "t^-2", "t^-3 + t^-1", "t^-4"],
    [None, "1", "t^-1", "t^-1", "t^-2", "t^-3"],
    [None, None, "1", None, "t^-1", "t^-2"],
    [None, None, None, "1", "t^-1", "t^-2"],
    [None, None, None, None, "1", "t^-1"],
    [None, None, None, None, None, "1"],
]


def rendered(table):
    return [[None if c is None else str(c) for c in row] for row in table.rows]


def test_column_orders():
    assert [str(p) for p in build_table(4, 2, MINUS, "hecke").paths] == ["--++", "-+-+", "-++-", "+--+", "+-+-", "++--"]
    assert [str(p) for p in build_table(4, 2, PLUS, "hecke").paths] == ["++--", "+-+-", "+--+", "-++-", "-+-+", "--++"]


@pytest.mark.parametrize("method", ["rule2", "hecke", "all"])
def test_minus_table_every_method(method):
    assert rendered(build_table(4, 2, MINUS, method)) == P_MINUS


@pytest.mark.parametrize("method", ["rule1", "lstree", "hecke", "all"])
def test_plus_table_every_method(method):
    assert rendered(build_table(4, 2, PLUS, method)) == P_PLUS


def test_trivial_table():
    table = build_table(1, 0, PLUS, "hecke")
    assert rendered(table) == [["1"]]


def test_entry_lookup():
    table = build_table(4, 2, PLUS, "hecke")
    assert str(table.entry(PathNK.parse("++--"), PathNK.parse("-+-+"))) == "t^-3 + t^-1"
    assert table.to_json()["rows"][2][3] is None


def test_methods_by_sign():
    assert applicable_methods("+") == ("rule1", "lstree", "hecke")
    assert applicable_methods("-") == ("rule2", "hecke")
    with pytest.raises(InvalidInputError):
        polynomial_function("lstree", MINUS)
    with pytest.raises(InvalidInputError):
        polynomial_function("guess", PLUS)


def test_cross_method_agreement_up_to_six():
    for K in range(7):
        assert build_table(6, K, PLUS, "all").rows == build_table(6, K, PLUS, "rule1").rows
        assert build_table(6, K, MINUS, "all").rows == build_table(6, K, MINUS, "rule2").rows

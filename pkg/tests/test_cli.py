import json

from click.testing import CliRunner

from parabolic_kl.cli import KLCalculator, main
from parabolic_kl.combinatorics.paths import MINUS, PLUS, PathNK


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_poly_all_methods_match():
    result = run("poly", "--sign", "+", "--method", "all", "--", "++--", "-+-+")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert [line.split(": ")[1] for line in lines[:4]] == ["t^-3 + t^-1"] * 4
    assert lines[4] == "MATCH"


def test_poly_single_values():
    assert run("poly", "--sign", "-", "−−++", "++--").stdout == "t^-2\n"
    assert run("poly", "--sign", "+", "+-+-", "+-+-").stdout == "1\n"
    assert run("poly", "--sign", "-", "--method", "rule2", "1212", "2121").stdout == "t^-2\n"
    assert run("poly", "--sign", "+", "--method", "lstree", "1122", "2121").stdout == "t^-3 + t^-1\n"


def test_poly_order_violation_prints_zero():
    result = run("poly", "--sign", "-", "--", "++--", "--++")
    assert result.exit_code == 0
    assert "0" in result.output.splitlines()
    assert "not below" in result.output


def test_poly_usage_errors():
    assert run("poly", "+-", "++--").exit_code == 2
    assert run("poly", "1x2", "1212").exit_code == 2
    assert run("poly", "--sign", "-", "--method", "lstree", "1212", "2121").exit_code == 2


def test_table_tsv_and_trivial():
    result = run("table", "--sign", "-", "4", "2")
    assert result.exit_code == 0
    assert result.stdout.splitlines()[1] == "--++\t1\tt^-1\t0\t0\t0\tt^-2"
    assert run("table", "1", "0").stdout == "\t-\n-\t1\n"


def test_table_latex_to_file(tmp_path):
    out = tmp_path / "plus.tex"
    result = run("table", "--format", "latex", "--method", "all", "--output", str(out), "4", "2")
    assert result.exit_code == 0
    assert r"$t^{-3}(1+t^2)$" in out.read_text()


def test_table_limits():
    assert run("table", "--method", "rule1", "11", "5").exit_code == 2
    assert run("table", "--method", "lstree", "--sign", "-", "4", "2").exit_code == 2
    assert run("table", "4", "5").exit_code == 2


def test_verify():
    result = run("verify", "duality", "4", "2")
    assert result.exit_code == 0
    assert "Result: PASS" in result.stdout
    result = run("verify", "--json", "inversion", "4")
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["passed"] is True
    assert len(data["reports"][0]["checks"]) == 5


def test_verify_bridge_guard(monkeypatch):
    monkeypatch.setenv("PKL_SN_VERIFY_LIMIT", "3")
    assert run("verify", "bridge", "4", "2").exit_code == 2


def test_biject():
    assert run("biject", "--sign", "-", "--to", "linkpattern", "2112212111").stdout == \
        '{"pairings":[[1,2],[4,9],[5,6],[7,8]],"unpaired":[3,10]}\n'
    assert run("biject", "--to", "grassmannian", "2112212111").stdout == "(2,3,6,8,9,10,1,4,5,7)\n"
    assert run("biject", "--to", "longest", "2112212111").stdout == "(10,9,8,6,3,2,7,5,4,1)\n"
    assert run("biject", "--sign", "-", "--from", "path", "--to", "string", "+---").stdout == "2111\n"
    assert run("biject", "--to", "tableau", "2112212111").stdout == "[[1,3,4,5,7,10],[2,6,8,9]]\n"


def test_biject_back_to_string():
    pattern = '{"pairings":[[1,2],[4,9],[5,6],[7,8]],"unpaired":[3,10]}'
    result = run("biject", "--sign", "-", "--from", "linkpattern", "--k", "6", "--to", "string", pattern)
    assert result.stdout == "2112212111\n"
    result = run("biject", "--from", "grassmannian", "--k", "6", "--to", "string", "(2,3,6,8,9,10,1,4,5,7)")
    assert result.stdout == "2112212111\n"
    assert run("biject", "--from", "grassmannian", "(2,3,1)").exit_code == 2
    assert run("biject", "--from", "linkpattern", "--k", "2", "{not json").exit_code == 2


def test_tree():
    result = run("tree", "--json", "--labellings", "--", "++++----", "-++-+--+")
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    root = data["tree"]["children"][0]
    assert root["pairing"] == [2, 7]
    assert [child["capacity"] for child in root["children"]] == [1, 1]
    assert len(data["labellings"]) == 5
    text = run("tree", "--labellings", "--", "++++----", "-++-+--+").stdout
    assert "(2,7)=1, (3,4)=1, (5,6)=1" in text
    assert "    (3,4) cap=1 n=1" in text.splitlines()
    assert sum(line.startswith("# ") for line in text.splitlines()) == 5
    plain = run("tree", "--", "++++----", "-++-+--+").stdout.splitlines()
    assert plain[1] == "  (2,7)"
    assert "    (3,4) cap=1" in plain


def test_config_render():
    result = run("config-render", "--sign", "+", "--", "++--", "-+-+")
    assert result.exit_code == 0
    assert result.stdout.endswith("2 configurations\n")
    result = run("config-render", "--sign", "-", "--rule", "II", "--json", "--", "-+-+", "++--")
    assert len(json.loads(result.stdout)) == 1
    assert run("config-render", "--sign", "-", "--", "-++-", "+--+").exit_code == 2


def test_broken_config_file(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("limits: [1, 2\n")
    assert run("--config", str(path), "poly", "1212", "2121").exit_code == 2


def test_calculator_compare_methods():
    calc = KLCalculator()
    results, match = calc.compare_methods(PathNK.parse("-+-+"), PathNK.parse("+-+-"), MINUS)
    assert match
    assert [name for name, _ in results] == ["rule2", "hecke", "product", "solve"]
    results, match = calc.compare_methods(PathNK.parse("++--"), PathNK.parse("--++"), PLUS)
    assert match
    assert str(results[0][1]) == "t^-4"

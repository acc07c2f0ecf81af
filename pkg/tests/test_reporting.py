import json

from parabolic_kl.combinatorics.paths import MINUS, PLUS, PathNK
from parabolic_kl.reporting.renderer import Renderer
from parabolic_kl.reporting.reporter import Reporter
from parabolic_kl.rules.dyck import enumerate_configurations
from parabolic_kl.rules.ls_tree import Labelling, build_tree
from parabolic_kl.tables import build_table
from parabolic_kl.verification.verifier import Verifier


def test_tsv_marks_blanks():
    text = Reporter().table_tsv(build_table(4, 2, MINUS, "hecke"))
    lines = text.splitlines()
    assert lines[0] == "\t--++\t-+-+\t-++-\t+--+\t+-+-\t++--"
    assert lines[1] == "--++\t1\tt^-1\t0\t0\t0\tt^-2"
    assert lines[3] == "-++-\t\t\t1\t\tt^-1\t0"


def test_latex_layout():
    text = Reporter().table_latex(build_table(4, 2, PLUS, "hecke"))
    assert r"\begin{tabular}{c|c|c|c|c|c|c|}" in text
    assert r"&\path{+,+,-,-}&\path{+,-,+,-}" in text
    assert r"\vc{\path{+,+,-,-}}&$1$&$t^{-1}$&$t^{-2}$&$t^{-2}$&$t^{-3}(1+t^2)$&$t^{-4}$\\" in text
    assert r"\vc{\path{-,-,+,+}}&&&&&&$1$\\" in text
    assert text.count(r"\hline") == 7


def test_json_table():
    data = json.loads(Reporter().render_table(build_table(4, 2, PLUS, "hecke"), "json"))
    assert data["sign"] == "+"
    assert data["rows"][0][4] == "t^-3 + t^-1"


def test_verification_reports(tmp_path):
    reporter = Reporter()
    reports = [Verifier().run("duality", 4, 2)]
    text = reporter.generate_text_report(reports)
    assert "Suite: duality  N=4  K=2" in text
    assert "[PASS] duality N=4 K=2" in text
    data = reporter.generate_json_report(reports)
    assert data["passed"] is True
    assert reporter.save_report(data, str(tmp_path / "out" / "report.json"), format="json")
    assert json.loads((tmp_path / "out" / "report.json").read_text())["passed"] is True
    assert not reporter.save_report(text, str(tmp_path / "report.bin"), format="binary")


def test_render_config():
    lower, upper = PathNK.parse("-+-+"), PathNK.parse("++--")
    configs = enumerate_configurations(lower, upper, "I")
    whole = [c for c in configs if len(c) == 1][0]
    drawing = Renderer().render_config(whole)
    assert drawing.splitlines() == ["  .", " .a.", ".a.a.", " . ."]
    assert "# 1:" in Renderer().render_configs(configs)


def test_render_tree():
    lower, upper = PathNK.parse("-++-+--+"), PathNK.parse("++++----")
    tree = build_tree(lower, upper)
    labelling = Labelling.from_dict({(2, 7): 1, (3, 4): 1, (5, 6): 1})
    lines = Renderer().render_tree(tree, labelling).splitlines()
    assert lines[0] == "root (-++-+--+ below ++++----)"
    assert lines[1] == "  (2,7) n=1"
    assert lines[2] == "    (3,4) cap=1 n=1"

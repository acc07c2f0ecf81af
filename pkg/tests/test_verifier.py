import pytest

from parabolic_kl.utils.config import Config
from parabolic_kl.utils.errors import InvalidInputError, SizeLimitError
from parabolic_kl.verification.verifier import SUITES, Verifier


@pytest.mark.parametrize("suite", [s for s in SUITES if s not in ("bridge", "fullduality")])
def test_suite_passes_for_four_two(suite):
    report = Verifier().run(suite, 4, 2)
    assert report.passed
    assert len(report.checks) == 1
    assert report.checks[0].name == f"{suite} N=4 K=2"


def test_every_k_when_k_omitted():
    report = Verifier().run("duality", 5)
    assert report.passed
    assert len(report.checks) == 6


def test_oracle_suites():
    assert Verifier().run("bridge", 4, 2).passed
    report = Verifier().run("fullduality", 3)
    assert report.passed
    assert len(report.checks) == 1


def test_oracle_suites_respect_limit(monkeypatch):
    monkeypatch.setenv("PKL_SN_VERIFY_LIMIT", "3")
    verifier = Verifier(Config())
    with pytest.raises(SizeLimitError):
        verifier.run("bridge", 4, 2)
    report = verifier.run("all", 4, 2)
    skipped = [c for c in report.checks if c.detail.startswith("skipped")]
    assert len(skipped) == 2
    assert report.passed


def test_unknown_suite():
    with pytest.raises(InvalidInputError):
        Verifier().run("guess", 4, 2)


def test_report_json():
    report = Verifier().run("inversion", 4, 2)
    data = report.to_json()
    assert data["passed"] is True
    assert data["suite"] == "inversion"
    assert data["checks"][0]["passed"] is True


@pytest.mark.parametrize("suite", ["duality", "inversion", "crossmethod", "bijection", "linkage"])
def test_suite_holds_for_every_k_up_to_eight(suite):
    for N in range(1, 9):
        report = Verifier().run(suite, N)
        assert report.passed, [c.name for c in report.checks if not c.passed]
        assert len(report.checks) == N + 1


def test_bar_invariance_up_to_seven():
    for N in range(1, 8):
        assert Verifier().run("bar", N).passed


@pytest.mark.slow
@pytest.mark.parametrize("N", [5])
def test_oracle_suites_at_five(N):
    verifier = Verifier()
    assert verifier.run("bridge", N).passed
    assert verifier.run("fullduality", N).passed


def test_sn_basis_limit_applies_to_oracle_suites(monkeypatch):
    monkeypatch.setenv("PKL_SN_BASIS_LIMIT", "3")
    verifier = Verifier(Config())
    with pytest.raises(SizeLimitError):
        verifier.run("bridge", 4, 2)
    with pytest.raises(SizeLimitError):
        verifier.run("fullduality", 4)
    assert verifier.run("bridge", 3, 1).passed
    report = verifier.run("all", 4, 2)
    assert len([c for c in report.checks if c.detail.startswith("skipped")]) == 2

"""Verification suites: each one checks a family of identities exhaustively for one (N, K)."""

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from parabolic_kl.algebra import hecke_module, sn_oracle
from parabolic_kl.combinatorics.paths import MINUS, PLUS, all_paths, dominates
from parabolic_kl.rules import dyck, ls_tree
from parabolic_kl.rules.linkage import verify_inverse_formula
from parabolic_kl.utils.config import Config
from parabolic_kl.utils.errors import InvalidInputError, SizeLimitError
from parabolic_kl.utils.logger import setup_logger

logger = setup_logger(__name__)

SUITES = ("duality", "inversion", "crossmethod", "bar", "bijection", "linkage", "bridge", "fullduality")
SN_SUITES = ("bridge", "fullduality")


@dataclass
class CheckResult:
    name: str
    passed: bool
    elapsed: float
    detail: str = ""

    def to_json(self) -> Dict[str, object]:
        return {"name": self.name, "passed": self.passed, "elapsed": round(self.elapsed, 4), "detail": self.detail}


@dataclass
class VerificationReport:
    suite: str
    N: int
    K: Optional[int]
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> Dict[str, object]:
        return {
            "suite": self.suite,
            "N": self.N,
            "K": self.K,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def _comparable_pairs(N: int, K: int):
    paths = all_paths(N, K)
    for lower in paths:
        for upper in paths:
            if dominates(lower, upper):
                yield lower, upper


class Verifier:
    """Runs verification suites under the size guards of a Config."""

    def __init__(self, config: Optional[Config] = None):
        """
        Initialize verifier.

        Args:
            config: Configuration object (optional)
        """
        self.config = config or Config()

    def run(self, suite: str, N: int, K: Optional[int] = None) -> VerificationReport:
        """
        Run one suite, or every suite for 'all'.

        Args:
            suite: Suite name from SUITES, or 'all'
            N: Path length
            K: Number of up steps; every K in 0..N when omitted

        Returns:
            Report with one CheckResult per identity and K
        """
        names = SUITES if suite == "all" else (suite,)
        for name in names:
            if name not in SUITES:
                raise InvalidInputError(f"unknown suite {name!r}")
        report = VerificationReport(suite, N, K)
        ks = list(range(N + 1)) if K is None else [K]
        limit = min(self.config.sn_verify_limit, self.config.sn_basis_limit)
        for name in names:
            if name in SN_SUITES and N > limit:
                if suite != "all":
                    raise SizeLimitError(f"{name} is limited to N <= {limit}, got N={N}")
                report.checks.append(CheckResult(f"{name} N={N}", True, 0.0, f"skipped: N > {limit}"))
                continue
            if name == "fullduality":
                report.checks.append(self._timed(f"fullduality N={N}", lambda: self.full_duality(N)))
                continue
            check = getattr(self, name)
            for k in ks:
                report.checks.append(self._timed(f"{name} N={N} K={k}", lambda k=k: check(N, k)))
        logger.info(f"suite {suite} for N={N}: {'pass' if report.passed else 'FAIL'}")
        return report

    @staticmethod
    def _timed(name: str, fn: Callable[[], Tuple[bool, str]]) -> CheckResult:
        start = time.perf_counter()
        passed, detail = fn()
        elapsed = time.perf_counter() - start
        if not passed:
            logger.error(f"{name} failed: {detail}")
        return CheckResult(name, passed, elapsed, detail)

    def duality(self, N: int, K: int) -> Tuple[bool, str]:
        ok = hecke_module.verify_duality(N, K)
        return ok, "" if ok else "P^- and P^+ are not inverse"

    def inversion(self, N: int, K: int) -> Tuple[bool, str]:
        ok = dyck.verify_inversion(N, K)
        return ok, "" if ok else "Q^I and Q^II are not inverse"

    def crossmethod(self, N: int, K: int) -> Tuple[bool, str]:
        """rule1 = lstree = P^+ and rule2 = flip test = factorized product = P^- on every comparable pair."""
        for lower, upper in _comparable_pairs(N, K):
            plus = hecke_module.kl_basis_plus(lower).coefficient(upper)
            if dyck.q_rule_I(lower, upper) != plus:
                return False, f"rule1 differs from P^+ at ({upper}, {lower})"
            if ls_tree.ls_polynomial(lower, upper) != plus:
                return False, f"lstree differs from P^+ at ({upper}, {lower})"
            minus = hecke_module.factorized_product(upper).coefficient(lower)
            if dyck.q_rule_II(lower, upper) != minus:
                return False, f"rule2 differs from the factorized product at ({lower}, {upper})"
            if hecke_module.kl_basis_minus(upper).coefficient(lower) != minus:
                return False, f"flip sum differs from the factorized product at ({lower}, {upper})"
            d = dyck.flip_test(lower, upper)
            if (d is None) != minus.is_zero() or (d is not None and minus.min_degree != -d):
                return False, f"flip test disagrees with P^- at ({lower}, {upper})"
        return True, ""

    def bar(self, N: int, K: int) -> Tuple[bool, str]:
        for sign in (PLUS, MINUS):
            if not hecke_module.verify_bar_invariance(N, K, sign):
                return False, f"canonical basis of sign {sign} is not bar invariant"
        return True, ""

    def bijection(self, N: int, K: int) -> Tuple[bool, str]:
        """Labellings map bijectively onto Rule I tilings and the weight identity holds."""
        for lower, upper in _comparable_pairs(N, K):
            tree = ls_tree.build_tree(lower, upper)
            boxes = len(dyck.region_boxes(lower, upper))
            images = set()
            for labelling in ls_tree.enumerate_labellings(tree):
                config = ls_tree.labelling_to_config(lower, upper, labelling)
                if not dyck.satisfies_rule_I(config):
                    return False, f"image of {labelling.to_json()} breaks Rule I"
                if boxes != len(config) + 2 * ls_tree.label_sum(labelling):
                    return False, f"weight identity fails for {labelling.to_json()}"
                if ls_tree.config_to_labelling(config) != labelling:
                    return False, f"round trip fails for {labelling.to_json()}"
                images.add(config)
            if images != set(dyck.enumerate_configurations(lower, upper, "I")):
                return False, f"labellings do not reach every Rule I tiling between {lower} and {upper}"
        return True, ""

    def linkage(self, N: int, K: int) -> Tuple[bool, str]:
        ok = verify_inverse_formula(N, K)
        return ok, "" if ok else "linkage expansion differs from Q^II"

    def bridge(self, N: int, K: int) -> Tuple[bool, str]:
        limit = self.config.sn_verify_limit
        basis_limit = self.config.sn_basis_limit
        if not sn_oracle.verify_parabolic_bridge(N, K, limit, basis_limit):
            return False, "P^+/P^- differ from the S_N polynomials"
        if not sn_oracle.verify_projection(N, K, limit, basis_limit):
            return False, "projection of C_w differs from C^+/C^-"
        return True, ""

    def full_duality(self, N: int) -> Tuple[bool, str]:
        ok = sn_oracle.verify_full_duality(N, self.config.sn_verify_limit, self.config.sn_basis_limit)
        return ok, "" if ok else "S_N inversion formulae or sharp invariance fail"

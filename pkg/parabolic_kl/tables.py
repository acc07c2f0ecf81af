"""Square tables of parabolic KL polynomials computed by any of the methods."""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from parabolic_kl.algebra.hecke_module import kl_basis
from parabolic_kl.algebra.laurent import LaurentPoly
from parabolic_kl.combinatorics.paths import (
    MINUS,
    PLUS,
    PathNK,
    convention_symbol,
    linear_extension,
    parse_convention,
    path_leq,
)
from parabolic_kl.rules.dyck import q_polynomial
from parabolic_kl.rules.ls_tree import ls_polynomial
from parabolic_kl.utils.errors import InvalidInputError, MethodMismatchError
from parabolic_kl.utils.logger import setup_logger

logger = setup_logger(__name__)

METHODS = ("rule1", "rule2", "lstree", "hecke")
# methods computing P^sign itself, used by method=all
P_METHODS = {PLUS: ("rule1", "lstree", "hecke"), MINUS: ("rule2", "hecke")}


@dataclass
class KLTable:
    N: int
    K: int
    sign: int
    method: str
    paths: Tuple[PathNK, ...]
    rows: List[List[Optional[LaurentPoly]]]

    def entry(self, alpha: PathNK, beta: PathNK) -> Optional[LaurentPoly]:
        return self.rows[self.paths.index(alpha)][self.paths.index(beta)]

    def to_json(self) -> Dict[str, object]:
        return {
            "N": self.N,
            "K": self.K,
            "sign": convention_symbol(self.sign),
            "method": self.method,
            "paths": [str(p) for p in self.paths],
            "rows": [[None if c is None else str(c) for c in row] for row in self.rows],
        }


def polynomial_function(method: str, sign: int) -> Callable[[PathNK, PathNK], LaurentPoly]:
    """
    (alpha, beta) -> polynomial for one method under one sign.

    rule1 and rule2 give Q^{I,sign} and Q^{II,sign}; lstree gives P^+ and
    only exists for sign +; hecke gives P^sign.
    """
    sign = parse_convention(sign)
    if method == "rule1":
        return lambda a, b: q_polynomial(a, b, "I", sign)
    if method == "rule2":
        return lambda a, b: q_polynomial(a, b, "II", sign)
    if method == "lstree":
        if sign != PLUS:
            raise InvalidInputError("the lstree method computes P^+ only")
        return lambda a, b: ls_polynomial(b, a)
    if method == "hecke":
        return lambda a, b: kl_basis(b, sign).coefficient(a)
    raise InvalidInputError(f"Unknown method: {method}")


def applicable_methods(sign: int) -> Tuple[str, ...]:
    return P_METHODS[parse_convention(sign)]


def build_table(N: int, K: int, sign, method: str) -> KLTable:
    """
    Table over P(N,K) in the linear extension of sign; None marks an order
    violation. method='all' computes every method giving P^sign and raises
    MethodMismatchError if they disagree.
    """
    sign = parse_convention(sign)
    paths = linear_extension(N, K, sign)
    if method == "all":
        tables = [build_table(N, K, sign, m) for m in applicable_methods(sign)]
        for other in tables[1:]:
            if other.rows != tables[0].rows:
                raise MethodMismatchError(f"methods {tables[0].method} and {other.method} disagree for N={N}, K={K}")
        return KLTable(N, K, sign, "all", paths, tables[0].rows)
    fn = polynomial_function(method, sign)
    rows = []
    for alpha in paths:
        rows.append([fn(alpha, beta) if path_leq(alpha, beta, sign) else None for beta in paths])
    logger.debug(f"built {method} table for N={N}, K={K}, sign={convention_symbol(sign)}")
    return KLTable(N, K, sign, method, paths, rows)

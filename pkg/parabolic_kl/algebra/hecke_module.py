"""The parabolic Hecke modules M^+ and M^- and their canonical bases."""

from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Tuple

from parabolic_kl.algebra.laurent import LaurentPoly, ONE, ZERO, T, T_INV, T_MINUS_T_INV, signed_power
from parabolic_kl.algebra.linear import LinearCombination, bar_invariant_correction
from parabolic_kl.combinatorics.paths import (
    MINUS,
    PLUS,
    PathNK,
    convention_symbol,
    link_pattern,
    linear_extension,
    minimal_path,
    parse_convention,
    path_leq,
)
from parabolic_kl.utils.errors import InvalidInputError
from parabolic_kl.utils.logger import setup_logger

logger = setup_logger(__name__)

# equal steps i, i+1 are an eigenvector of T_i with eigenvalue eps * t^eps
EIGENVALUE = {PLUS: T, MINUS: -T_INV}


class ModuleElement(LinearCombination[PathNK]):
    """A finite combination of standard basis vectors m_p of M^eps."""

    def __init__(self, terms: Optional[Mapping[PathNK, LaurentPoly]] = None, convention: int = MINUS):
        super().__init__(terms)
        self.convention = parse_convention(convention)
        shapes = {(p.N, p.K) for p in self.terms}
        if len(shapes) > 1:
            raise InvalidInputError(f"module element mixes paths of shapes {sorted(shapes)}")

    def _new(self, terms):
        return ModuleElement(terms, self.convention)

    @classmethod
    def basis(cls, path: PathNK, convention: int) -> "ModuleElement":
        return cls({path: ONE}, convention)

    def __add__(self, other):
        if isinstance(other, ModuleElement) and other.convention != self.convention:
            raise InvalidInputError("cannot add elements of M^+ and M^-")
        return super().__add__(other)

    def to_json(self) -> Dict[str, object]:
        return {
            "convention": convention_symbol(self.convention),
            "terms": [{"path": str(p), "poly": c.to_json()} for p, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "ModuleElement":
        try:
            terms = {PathNK.parse(t["path"]): LaurentPoly.from_json(t["poly"]) for t in data["terms"]}
            return cls(terms, parse_convention(data["convention"]))
        except (KeyError, TypeError) as e:
            raise InvalidInputError(f"invalid module element JSON: {e}")


def _check_index(i: int, v: ModuleElement) -> None:
    for p in v.terms:
        if not 1 <= i <= p.N - 1:
            raise InvalidInputError(f"generator index {i} out of range for N={p.N}")
        return


def _act_on_basis(i: int, p: PathNK, eps: int) -> List[Tuple[PathNK, LaurentPoly]]:
    a, b = p.steps[i - 1], p.steps[i]
    if a == b:
        return [(p, EIGENVALUE[eps])]
    # under - the ascent is (-,+) -> (+,-); under + it is (+,-) -> (-,+)
    ascent = (a, b) == (MINUS, PLUS) if eps == MINUS else (a, b) == (PLUS, MINUS)
    if ascent:
        return [(p.swap(i), ONE)]
    return [(p, T_MINUS_T_INV), (p.swap(i), ONE)]


def hecke_act(i: int, v: ModuleElement) -> ModuleElement:
    """T_i v, extended linearly from the local rules on steps i, i+1."""
    _check_index(i, v)
    result: Dict[PathNK, LaurentPoly] = {}
    for p, c in v.terms.items():
        for q, factor in _act_on_basis(i, p, v.convention):
            result[q] = result.get(q, ZERO) + c * factor
    return ModuleElement(result, v.convention)


def generator_inverse_act(i: int, v: ModuleElement) -> ModuleElement:
    """T_i^{-1} v = T_i v - (t - t^{-1}) v."""
    return hecke_act(i, v) - v.scale(T_MINUS_T_INV)


def _removable_boxes(p: PathNK, eps: int) -> List[int]:
    # the box-adding move turns (-,+) into (+,-) under - and (+,-) into (-,+) under +
    top = (PLUS, MINUS) if eps == MINUS else (MINUS, PLUS)
    return [i for i in range(1, p.N) if (p.steps[i - 1], p.steps[i]) == top]


def reduced_word(beta: PathNK, eps: int, order: str = "left") -> Tuple[int, ...]:
    """
    Generator indices (i_1, ..., i_k) with m_beta = T_{i_1} ... T_{i_k} m_{beta_0}.

    Each letter removes one box of the Ferrers diagram of beta; order picks
    the leftmost or rightmost removable box at every step.
    """
    eps = parse_convention(eps)
    if order not in ("left", "right"):
        raise InvalidInputError(f"order must be 'left' or 'right', got {order!r}")
    word = []
    current = beta
    while True:
        boxes = _removable_boxes(current, eps)
        if not boxes:
            break
        i = boxes[0] if order == "left" else boxes[-1]
        word.append(i)
        current = current.swap(i)
    return tuple(word)


def base_element(N: int, K: int, eps: int) -> ModuleElement:
    return ModuleElement.basis(minimal_path(N, K, eps), eps)


@lru_cache(maxsize=None)
def _bar_of_basis(p: PathNK, eps: int) -> ModuleElement:
    current = base_element(p.N, p.K, eps)
    for i in reversed(reduced_word(p, eps)):
        current = generator_inverse_act(i, current)
    return current


def bar_involution(v: ModuleElement) -> ModuleElement:
    """Semilinear involution fixing m_{beta_0} with bar(T_i x) = T_i^{-1} bar(x)."""
    result = ModuleElement({}, v.convention)
    for p, c in v.terms.items():
        result = result + _bar_of_basis(p, v.convention).scale(c.bar())
    return result


def flip_set(beta: PathNK) -> List[Tuple[PathNK, int]]:
    """
    All paths obtained by flipping a subset of the pairings of beta.

    A flipped pairing (i, j) turns the up step i down and the down step j up;
    d is the number of flipped pairings.
    """
    pairings = link_pattern(beta).pairings
    result = []
    for d in range(len(pairings) + 1):
        for chosen in combinations(pairings, d):
            steps = list(beta.steps)
            for i, j in chosen:
                steps[i - 1], steps[j - 1] = MINUS, PLUS
            result.append((PathNK(tuple(steps)), d))
    return result


def flip_distance(lower: PathNK, upper: PathNK) -> Optional[int]:
    """d if lower is in F(upper), None otherwise."""
    if lower.N != upper.N or lower.K != upper.K:
        return None
    pairings = link_pattern(upper).pairings
    d = 0
    flipped_positions = set()
    for i, j in pairings:
        if lower.steps[i - 1] == MINUS and lower.steps[j - 1] == PLUS:
            d += 1
            flipped_positions.update((i, j))
    for k, (a, b) in enumerate(zip(lower.steps, upper.steps), 1):
        if k not in flipped_positions and a != b:
            return None
    return d


@lru_cache(maxsize=None)
def _kl_minus_flip(beta: PathNK) -> ModuleElement:
    return ModuleElement({alpha: LaurentPoly.monomial(-d) for alpha, d in flip_set(beta)}, MINUS)


@lru_cache(maxsize=None)
def factorized_product(beta: PathNK, order: str = "left") -> ModuleElement:
    """Product of (T_i + t^{-1}) over a reduced word of beta applied to m_{beta_0} in M^-."""
    current = base_element(beta.N, beta.K, MINUS)
    for i in reversed(reduced_word(beta, MINUS, order)):
        current = hecke_act(i, current) + current.scale(T_INV)
    return current


def kl_basis_minus(beta: PathNK, method: str = "flip") -> ModuleElement:
    """
    C^-_beta.

    Args:
        beta: Path indexing the basis element
        method: 'flip' for the sum over F(beta), 'product' for the
            factorized product of (T_i + t^{-1}) over a reduced word,
            'solve' for the generic bar-invariance correction

    Returns:
        The canonical basis element in M^-
    """
    if method == "flip":
        return _kl_minus_flip(beta)
    if method == "product":
        return factorized_product(beta, "left")
    if method == "solve":
        return kl_basis_by_solve(beta, MINUS)
    raise InvalidInputError(f"unknown method for C^-: {method}")


@lru_cache(maxsize=None)
def _kl_plus_inverse(beta: PathNK) -> ModuleElement:
    # m_beta = sum over alpha with beta in F(alpha) of (-t)^{-d} C^+_alpha
    result = ModuleElement.basis(beta, PLUS)
    for alpha in linear_extension(beta.N, beta.K, PLUS):
        if alpha == beta:
            break
        d = flip_distance(beta, alpha)
        if d is not None:
            result = result - _kl_plus_inverse(alpha).scale(signed_power(-d))
    return result


def kl_basis_plus(beta: PathNK, method: str = "inverse") -> ModuleElement:
    """
    C^+_beta.

    'inverse' inverts the unitriangular matrix of flip monomials in -t^{-1};
    'solve' runs the generic bar-invariance correction.
    """
    if method == "inverse":
        return _kl_plus_inverse(beta)
    if method == "solve":
        return kl_basis_by_solve(beta, PLUS)
    raise InvalidInputError(f"unknown method for C^+: {method}")


@lru_cache(maxsize=None)
def _rank_table(N: int, K: int, eps: int) -> Dict[PathNK, int]:
    return {p: index for index, p in enumerate(linear_extension(N, K, eps))}


@lru_cache(maxsize=None)
def kl_basis_by_solve(beta: PathNK, eps: int) -> ModuleElement:
    """Canonical basis element of M^eps by triangular correction of m_beta."""
    eps = parse_convention(eps)
    ranks = _rank_table(beta.N, beta.K, eps)
    return bar_invariant_correction(
        ModuleElement.basis(beta, eps),
        bar_involution,
        ranks.__getitem__,
        lambda alpha: kl_basis_by_solve(alpha, eps),
    )


def kl_basis(beta: PathNK, sign: int) -> ModuleElement:
    return kl_basis_plus(beta) if parse_convention(sign) == PLUS else kl_basis_minus(beta)


def parabolic_kl(alpha: PathNK, beta: PathNK, sign: int) -> LaurentPoly:
    """P^sign_{alpha,beta}(t^{-1}): the coefficient of m_alpha in C^sign_beta."""
    sign = parse_convention(sign)
    if alpha.N != beta.N or alpha.K != beta.K:
        raise InvalidInputError(f"paths {alpha} and {beta} do not belong to the same P(N,K)")
    if not path_leq(alpha, beta, sign):
        return ZERO
    return kl_basis(beta, sign).coefficient(alpha)


def expand_in_kl_basis(v: ModuleElement, sign: Optional[int] = None) -> Dict[PathNK, LaurentPoly]:
    """Coordinates of v in the canonical basis C^sign (default: v's own convention)."""
    sign = v.convention if sign is None else parse_convention(sign)
    if sign != v.convention:
        raise InvalidInputError("the canonical basis lives in the element's own module")
    result: Dict[PathNK, LaurentPoly] = {}
    remaining = v
    while not remaining.is_zero():
        some = next(iter(remaining.terms))
        ranks = _rank_table(some.N, some.K, sign)
        top = max(remaining.terms, key=ranks.__getitem__)
        coeff = remaining.coefficient(top)
        result[top] = coeff
        remaining = remaining - kl_basis(top, sign).scale(coeff)
    return result


def tl_generator_act(i: int, beta: PathNK) -> Dict[PathNK, LaurentPoly]:
    """(T_i + t^{-1}) C^-_beta written in the C^- basis."""
    c = kl_basis_minus(beta)
    image = hecke_act(i, c) + c.scale(T_INV)
    return expand_in_kl_basis(image, MINUS)


def kl_table(N: int, K: int, sign: int) -> Tuple[Tuple[PathNK, ...], List[List[Optional[LaurentPoly]]]]:
    """
    Square table of P^sign over P(N,K).

    Rows are alpha, columns beta, both in the linear extension of the sign
    order; None marks an order violation.
    """
    sign = parse_convention(sign)
    paths = linear_extension(N, K, sign)
    columns = {beta: kl_basis(beta, sign) for beta in paths}
    rows = []
    for alpha in paths:
        row = []
        for beta in paths:
            row.append(columns[beta].coefficient(alpha) if path_leq(alpha, beta, sign) else None)
        rows.append(row)
    return paths, rows


def verify_duality(N: int, K: int) -> bool:
    """sum_alpha P^-_{alpha,beta}(-t^{-1}) P^+_{alpha,gamma}(t^{-1}) = delta_{beta,gamma}."""
    paths = linear_extension(N, K, MINUS)
    minus = {beta: kl_basis_minus(beta) for beta in paths}
    plus = {gamma: kl_basis_plus(gamma) for gamma in paths}
    for beta in paths:
        for gamma in paths:
            total = ZERO
            for alpha, c in minus[beta].terms.items():
                total = total + c.negate_variable() * plus[gamma].coefficient(alpha)
            expected = ONE if beta == gamma else ZERO
            if total != expected:
                logger.error(f"duality fails at ({beta}, {gamma}): {total}")
                return False
    logger.info(f"duality holds for N={N}, K={K}")
    return True


def verify_bar_invariance(N: int, K: int, sign: int) -> bool:
    sign = parse_convention(sign)
    for beta in linear_extension(N, K, sign):
        c = kl_basis(beta, sign)
        if bar_involution(c) != c:
            logger.error(f"C^{convention_symbol(sign)}_{beta} is not bar invariant")
            return False
    return True

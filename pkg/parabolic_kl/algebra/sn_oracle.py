"""
Full Kazhdan-Lusztig machinery for the symmetric group at desk scale.

Everything here is exponential in N and exists to cross-check the parabolic
computations: Bruhat order, the Hecke algebra H(S_N) in the standard basis,
its canonical basis C_w, and the projections onto M^+ and M^-.
"""

from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, List, Tuple

from parabolic_kl.algebra.hecke_module import ModuleElement, kl_basis_minus, kl_basis_plus
from parabolic_kl.algebra.laurent import LaurentPoly, ONE, ZERO, T, T_INV, T_MINUS_T_INV, signed_power
from parabolic_kl.algebra.linear import LinearCombination, bar_invariant_correction
from parabolic_kl.combinatorics.cosets import (
    Permutation,
    grassmannian,
    longest_in_parabolic,
    longest_representative,
    string_from_permutation,
    validate_permutation,
)
from parabolic_kl.combinatorics.paths import (
    MINUS,
    PLUS,
    BinaryString,
    parse_convention,
    path_length,
    string_to_path,
)
from parabolic_kl.utils.errors import InvalidInputError, SizeLimitError
from parabolic_kl.utils.logger import setup_logger

logger = setup_logger(__name__)

DEFAULT_BASIS_LIMIT = 6
DEFAULT_VERIFY_LIMIT = 5


class HeckeElement(LinearCombination[Permutation]):
    """A combination of standard basis elements T_v of H(S_N)."""

    @classmethod
    def basis(cls, v: Permutation) -> "HeckeElement":
        return cls({validate_permutation(v): ONE})

    def to_json(self) -> List[Dict[str, object]]:
        return [{"perm": list(v), "poly": c.to_json()} for v, c in self.items()]


def length(v: Permutation) -> int:
    """Number of inversions."""
    n = len(v)
    return sum(1 for a in range(n) for b in range(a + 1, n) if v[a] > v[b])


def inverse(v: Permutation) -> Permutation:
    result = [0] * len(v)
    for position, value in enumerate(v, 1):
        result[value - 1] = position
    return tuple(result)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u o v)(i) = u(v(i))."""
    return tuple(u[x - 1] for x in v)


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def sharp(v: Permutation) -> Permutation:
    """w0 v w0."""
    w0 = longest_element(len(v))
    return compose(w0, compose(v, w0))


def left_generator(i: int, v: Permutation) -> Permutation:
    """s_i v: exchange the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in v)


def _left_descent(i: int, v: Permutation) -> bool:
    # s_i v is shorter iff i+1 appears before i in one-line notation
    return v.index(i + 1) < v.index(i)


def reduced_word(v: Permutation) -> Tuple[int, ...]:
    """Word (i_1, ..., i_k) with v = s_{i_1} ... s_{i_k}, peeling the smallest left descent."""
    word = []
    current = validate_permutation(v)
    while True:
        descents = [i for i in range(1, len(current)) if _left_descent(i, current)]
        if not descents:
            return tuple(word)
        word.append(descents[0])
        current = left_generator(descents[0], current)


@lru_cache(maxsize=None)
def all_permutations(n: int) -> Tuple[Permutation, ...]:
    """S_n sorted by length, then one-line notation."""
    return tuple(sorted(permutations(range(1, n + 1)), key=lambda v: (length(v), v)))


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Rank-matrix criterion: #{a <= i : u(a) >= k} <= #{a <= i : v(a) >= k} for all i, k."""
    if len(u) != len(v):
        raise InvalidInputError("permutations of different sizes")
    n = len(u)
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if sum(1 for a in range(i) if u[a] >= k) > sum(1 for a in range(i) if v[a] >= k):
                return False
    return True


def multiply_by_generator(i: int, h: HeckeElement) -> HeckeElement:
    """Left multiplication by T_i."""
    result: Dict[Permutation, LaurentPoly] = {}
    for v, c in h.terms.items():
        if not 1 <= i < len(v):
            raise InvalidInputError(f"generator index {i} out of range for N={len(v)}")
        w = left_generator(i, v)
        result[w] = result.get(w, ZERO) + c
        if _left_descent(i, v):
            result[v] = result.get(v, ZERO) + c * T_MINUS_T_INV
    return HeckeElement(result)


def multiply_by_inverse_generator(i: int, h: HeckeElement) -> HeckeElement:
    return multiply_by_generator(i, h) - h.scale(T_MINUS_T_INV)


@lru_cache(maxsize=None)
def _bar_of_basis(v: Permutation) -> HeckeElement:
    current = HeckeElement.basis(identity(len(v)))
    for i in reversed(reduced_word(v)):
        current = multiply_by_inverse_generator(i, current)
    return current


def bar_full(h: HeckeElement) -> HeckeElement:
    """The bar involution of H: t -> t^{-1}, T_v -> T_{v^{-1}}^{-1}."""
    result = HeckeElement()
    for v, c in h.terms.items():
        result = result + _bar_of_basis(v).scale(c.bar())
    return result


@lru_cache(maxsize=None)
def _rank(n: int) -> Dict[Permutation, int]:
    return {v: index for index, v in enumerate(all_permutations(n))}


@lru_cache(maxsize=None)
def _kl_basis_full(w: Permutation) -> HeckeElement:
    ranks = _rank(len(w))
    return bar_invariant_correction(HeckeElement.basis(w), bar_full, ranks.__getitem__, _kl_basis_full)


def kl_basis_full(w: Permutation, limit: int = DEFAULT_BASIS_LIMIT) -> HeckeElement:
    """C_w = T_w + sum over v < w of P_{v,w}(t^{-1}) T_v."""
    w = validate_permutation(w)
    if len(w) > limit:
        raise SizeLimitError(f"full KL basis is limited to N <= {limit}, got N={len(w)}")
    return _kl_basis_full(w)


def kl_polynomial(v: Permutation, w: Permutation, limit: int = DEFAULT_BASIS_LIMIT) -> LaurentPoly:
    """P_{v,w}(t^{-1}), zero unless v <= w."""
    return kl_basis_full(w, limit).coefficient(validate_permutation(v))


def classical_kl_polynomial(v: Permutation, w: Permutation, limit: int = DEFAULT_BASIS_LIMIT) -> LaurentPoly:
    """t^{|w|-|v|} P_{v,w}(t^{-1}), a polynomial in q = t^2."""
    p = kl_polynomial(v, w, limit)
    return p.shift(length(w) - length(v)) if not p.is_zero() else ZERO


def coset_string(v: Permutation, K: int) -> BinaryString:
    return string_from_permutation(v, K)


def project(h: HeckeElement, eps: int, K: int) -> ModuleElement:
    """
    phi^eps: H -> M^eps, T_v -> (eps t^eps)^{|v| - |x|} m_x where x is the coset of v.
    """
    eps = parse_convention(eps)
    factor = T if eps == PLUS else -T_INV
    result: Dict = {}
    for v, c in h.terms.items():
        path = string_to_path(coset_string(v, K), eps)
        excess = length(v) - path_length(path, eps)
        result[path] = result.get(path, ZERO) + c * factor ** excess
    return ModuleElement(result, eps)


def parabolic_symmetrizer(N: int, K: int) -> LaurentPoly:
    """
    pi_J = t^{-l(w~_0)} * sum over u in S_K x S_{N-K} of t^{2 l(u)}.

    The image of C_w for a longest representative w under phi^+ is pi_J
    times the canonical element of M^+.
    """
    w0 = longest_in_parabolic(N, K)
    total = ZERO
    for u in all_permutations(N):
        if all(x <= K for x in u[:K]):
            total = total + LaurentPoly.monomial(2 * length(u))
    return total.shift(-length(w0))


def _check_verify_limit(N: int, limit: int) -> None:
    if N > limit:
        raise SizeLimitError(f"S_N verification is limited to N <= {limit}, got N={N}")


def _strings(N: int, K: int) -> List[BinaryString]:
    result = []
    for ones in combinations(range(N), K):
        result.append(BinaryString(tuple(1 if i in ones else 2 for i in range(N))))
    return result


def verify_parabolic_bridge(N: int, K: int, limit: int = DEFAULT_VERIFY_LIMIT,
                            basis_limit: int = DEFAULT_BASIS_LIMIT) -> bool:
    """
    P^+_{x,y} = P_{v,w} for longest representatives, and
    P^-_{x,y} = sum over v in x of (-t)^{|x|-|v|} P_{v,w} with w = short(y).
    """
    _check_verify_limit(N, limit)
    strings = _strings(N, K)
    members: Dict[BinaryString, List[Permutation]] = {s: [] for s in strings}
    for v in all_permutations(N):
        members[coset_string(v, K)].append(v)
    for y in strings:
        c_long = kl_basis_full(longest_representative(y), basis_limit)
        c_short = kl_basis_full(grassmannian(y), basis_limit)
        plus_column = kl_basis_plus(string_to_path(y, PLUS))
        minus_column = kl_basis_minus(string_to_path(y, MINUS))
        for x in strings:
            expected_plus = c_long.coefficient(longest_representative(x))
            if plus_column.coefficient(string_to_path(x, PLUS)) != expected_plus:
                logger.error(f"P^+ bridge fails at x={x}, y={y}")
                return False
            x_length = length(grassmannian(x))
            expected_minus = ZERO
            for v in members[x]:
                expected_minus = expected_minus + signed_power(x_length - length(v)) * c_short.coefficient(v)
            if minus_column.coefficient(string_to_path(x, MINUS)) != expected_minus:
                logger.error(f"P^- bridge fails at x={x}, y={y}")
                return False
    logger.info(f"parabolic bridge holds for N={N}, K={K}")
    return True


def verify_projection(N: int, K: int, limit: int = DEFAULT_VERIFY_LIMIT,
                      basis_limit: int = DEFAULT_BASIS_LIMIT) -> bool:
    """phi^-(C_w) = C^-_x for Grassmannian w, phi^+(C_w) = pi_J C^+_x for longest representatives."""
    _check_verify_limit(N, limit)
    pi_j = parabolic_symmetrizer(N, K)
    for y in _strings(N, K):
        image_minus = project(kl_basis_full(grassmannian(y), basis_limit), MINUS, K)
        if image_minus != kl_basis_minus(string_to_path(y, MINUS)):
            logger.error(f"phi^- projection fails at {y}")
            return False
        image_plus = project(kl_basis_full(longest_representative(y), basis_limit), PLUS, K)
        if image_plus != kl_basis_plus(string_to_path(y, PLUS)).scale(pi_j):
            logger.error(f"phi^+ projection fails at {y}")
            return False
    return True


def verify_full_duality(N: int, limit: int = DEFAULT_VERIFY_LIMIT, basis_limit: int = DEFAULT_BASIS_LIMIT) -> bool:
    """
    Both alternating-sum inversion formulae over S_N and P_{u#,v#} = P_{u,v}.
    """
    _check_verify_limit(N, limit)
    perms = all_permutations(N)
    w0 = longest_element(N)
    basis = {w: kl_basis_full(w, basis_limit) for w in perms}
    # above[u]: every w with P_{u,w} != 0, i.e. u <= w
    above: Dict[Permutation, List[Permutation]] = {u: [] for u in perms}
    for w, c in basis.items():
        for u in c.terms:
            above[u].append(w)

    def P(u: Permutation, v: Permutation) -> LaurentPoly:
        return basis[v].coefficient(u)

    lengths = {v: length(v) for v in perms}
    flipped = {v: compose(w0, v) for v in perms}
    for u in perms:
        for v in perms:
            first = ZERO
            for w in above[u]:
                first = first + P(u, w) * P(flipped[v], flipped[w]) * (-1) ** (lengths[v] + lengths[w])
            second = ZERO
            for w in basis[u].terms:
                second = second + P(w, u) * P(flipped[w], flipped[v]) * (-1) ** (lengths[w] + lengths[u])
            expected = ONE if u == v else ZERO
            if first != expected or second != expected:
                logger.error(f"inversion formula fails at ({u}, {v})")
                return False
            if P(sharp(u), sharp(v)) != P(u, v):
                logger.error(f"sharp invariance fails at ({u}, {v})")
                return False
    logger.info(f"full duality holds for N={N}")
    return True


def kl_table_full(N: int, limit: int = DEFAULT_BASIS_LIMIT) -> Tuple[Tuple[Permutation, ...], List[List[LaurentPoly]]]:
    perms = all_permutations(N)
    rows = [[kl_polynomial(u, v, limit) for v in perms] for u in perms]
    return perms, rows


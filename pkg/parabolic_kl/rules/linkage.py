"""
Linkages of a + string and the expansion of m_beta in the C^+ basis.

A linkage pairs 1-letters with 2-letters without crossings. A pair is stored
as (position of the 1, position of the 2) and is reversed when the 1 comes
second. When the string has more letters of one kind, the extra letters stay
unpaired and may not sit inside any pair.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from parabolic_kl.algebra.hecke_module import ModuleElement, kl_basis_plus
from parabolic_kl.algebra.laurent import LaurentPoly, signed_power
from parabolic_kl.combinatorics.paths import (
    PLUS,
    BinaryString,
    Pairing,
    PathNK,
    all_paths,
    dominates,
    path_to_string,
    string_to_path,
)
from parabolic_kl.rules.dyck import q_rule_II
from parabolic_kl.utils.errors import InvalidInputError, KLError
from parabolic_kl.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class Linkage:
    pairs: Tuple[Pairing, ...]
    unpaired: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(tuple(p) for p in self.pairs)))
        object.__setattr__(self, "unpaired", tuple(sorted(self.unpaired)))

    @staticmethod
    def is_reversed(pair: Pairing) -> bool:
        return pair[0] > pair[1]

    def reversed_pairs(self) -> List[Pairing]:
        return [p for p in self.pairs if self.is_reversed(p)]

    def spans(self) -> List[Tuple[int, int]]:
        return [(min(p), max(p)) for p in self.pairs]

    def to_json(self) -> Dict[str, list]:
        return {"pairs": [list(p) for p in self.pairs], "unpaired": list(self.unpaired)}


def _matchings(letters: Tuple[int, ...], lo: int, hi: int, allow_unpaired: bool) -> List[List[Tuple[int, int]]]:
    # noncrossing matchings of positions lo..hi (1-based) joining a 1 with a 2
    if lo > hi:
        return [[]]
    result = []
    if allow_unpaired:
        result.extend(_matchings(letters, lo + 1, hi, True))
    for m in range(lo + 1, hi + 1, 2):
        if letters[m - 1] == letters[lo - 1]:
            continue
        for inner in _matchings(letters, lo + 1, m - 1, False):
            for outer in _matchings(letters, m + 1, hi, allow_unpaired):
                result.append([(lo, m)] + inner + outer)
    return result


def all_linkages(beta: BinaryString) -> List[Linkage]:
    """Every linkage of beta with min(#1, #2) pairs."""
    letters = beta.letters
    wanted = min(beta.ones, beta.N - beta.ones)
    linkages = []
    for spans in _matchings(letters, 1, beta.N, True):
        if len(spans) != wanted:
            continue
        pairs = tuple((a, b) if letters[a - 1] == 1 else (b, a) for a, b in spans)
        used = {i for span in spans for i in span}
        linkages.append(Linkage(pairs, tuple(i for i in range(1, beta.N + 1) if i not in used)))
    return sorted(linkages, key=lambda w: w.pairs)


def orient(spans: List[Tuple[int, int]], s: BinaryString) -> Linkage:
    """The linkage of s with the given unordered pairs."""
    pairs = []
    for a, b in spans:
        if s.letters[a - 1] == s.letters[b - 1]:
            raise InvalidInputError(f"positions {a} and {b} of {s} carry the same letter")
        pairs.append((a, b) if s.letters[a - 1] == 1 else (b, a))
    used = {i for span in spans for i in span}
    return Linkage(tuple(pairs), tuple(i for i in range(1, s.N + 1) if i not in used))


def r_flip(beta: BinaryString, linkage: Linkage, pair: Pairing) -> BinaryString:
    """
    Swap the letters of a reversed pair and of every reversed pair nested inside it.

    >>> w = all_linkages(BinaryString.parse("2211"))[0]
    >>> str(r_flip(BinaryString.parse("2211"), w, (4, 1)))
    '1122'
    """
    pair = tuple(pair)
    if pair not in linkage.pairs:
        raise InvalidInputError(f"{pair} is not a pair of the linkage")
    if not Linkage.is_reversed(pair):
        raise InvalidInputError(f"{pair} is ordered, only reversed pairs flip")
    lo, hi = min(pair), max(pair)
    letters = list(beta.letters)
    for p in linkage.reversed_pairs():
        if lo <= min(p) and max(p) <= hi:
            i, j = p
            letters[i - 1], letters[j - 1] = letters[j - 1], letters[i - 1]
    return BinaryString(tuple(letters))


def flip_distance_of(alpha: BinaryString, beta: BinaryString) -> int:
    """Half the Hamming distance."""
    return sum(1 for a, b in zip(alpha.letters, beta.letters) if a != b) // 2


def linkage_closure(beta: BinaryString, linkage: Linkage) -> Dict[BinaryString, int]:
    """Every string reachable from beta by r-flips of the linkage, with its d."""
    spans = linkage.spans()
    seen = {beta: 0}
    queue = [beta]
    while queue:
        s = queue.pop()
        current = orient(spans, s)
        for pair in current.reversed_pairs():
            flipped = r_flip(s, current, pair)
            if flipped not in seen:
                seen[flipped] = flip_distance_of(flipped, beta)
                queue.append(flipped)
    return seen


def l_set(beta: BinaryString) -> List[Tuple[PathNK, int]]:
    """
    The union of the linkage closures of beta as + paths with d.

    Raises KLError if two linkages reach the same string with different d.
    """
    union: Dict[BinaryString, int] = {}
    for linkage in all_linkages(beta):
        for s, d in linkage_closure(beta, linkage).items():
            if union.setdefault(s, d) != d:
                raise KLError(f"{s} is reached from {beta} with d={union[s]} and d={d}")
    return sorted((string_to_path(s, PLUS), d) for s, d in union.items())


def expand_monomial(beta: PathNK) -> Dict[PathNK, LaurentPoly]:
    """Coordinates (-t)^{-d} of m_beta in the C^+ basis."""
    return {alpha: signed_power(-d) for alpha, d in l_set(path_to_string(beta, PLUS))}


def substitute(coordinates: Dict[PathNK, LaurentPoly]) -> ModuleElement:
    """sum of coordinates[alpha] * C^+_alpha in the standard basis."""
    total = ModuleElement({}, PLUS)
    for alpha, c in coordinates.items():
        total = total + kl_basis_plus(alpha).scale(c)
    return total


def inverse_column(beta: PathNK) -> Dict[PathNK, LaurentPoly]:
    """Q^{II,+}_{alpha,beta}(-t^{-1}) for every alpha, the region lying between beta and alpha."""
    column = {}
    for alpha in all_paths(beta.N, beta.K):
        if dominates(beta, alpha):
            q = q_rule_II(beta, alpha).negate_variable()
            if not q.is_zero():
                column[alpha] = q
    return column


def verify_inverse_formula(N: int, K: Optional[int] = None) -> bool:
    """
    For K = N/2 the linkage coordinates equal Q^{II,+}(-t^{-1}) and rebuild
    m_beta; for other K their supports agree.
    """
    ks = range(N + 1) if K is None else [K]
    for k in ks:
        for beta in all_paths(N, k):
            computed = expand_monomial(beta)
            expected = inverse_column(beta)
            if 2 * k == N:
                if computed != expected:
                    logger.error(f"linkage coordinates of m_{beta} differ from Q^II: {computed} vs {expected}")
                    return False
                if substitute(computed) != ModuleElement.basis(beta, PLUS):
                    logger.error(f"substituting C^+ does not rebuild m_{beta}")
                    return False
            elif set(computed) != set(expected):
                logger.error(f"linkage support of m_{beta} differs from Q^II")
                return False
    logger.info(f"linkage expansion holds for N={N}")
    return True


"""Lattice paths, binary strings, link patterns and the order on cosets."""

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Dict, List, Tuple

from parabolic_kl.utils.errors import IncomparablePathsError, InvalidInputError
from parabolic_kl.utils.logger import setup_logger

logger = setup_logger(__name__)

PLUS = 1
MINUS = -1

Pairing = Tuple[int, int]


def parse_convention(value) -> int:
    """Accept '+', '-', '−', 1 or -1."""
    if value in (PLUS, "+", "plus"):
        return PLUS
    if value in (MINUS, "-", "−", "minus"):
        return MINUS
    raise InvalidInputError(f"convention must be '+' or '-', got {value!r}")


def convention_symbol(eps: int) -> str:
    return "+" if eps == PLUS else "-"


@dataclass(frozen=True, order=True)
class PathNK:
    """
    A path from (0, 0) to (N, 2K - N) with steps +1 / -1.

    Ordering compares the step tuples lexicographically with -1 < +1; it is
    only used to break ties between paths with the same box count.
    """
    steps: Tuple[int, ...]

    def __post_init__(self):
        steps = tuple(self.steps)
        if any(s not in (PLUS, MINUS) for s in steps):
            raise InvalidInputError(f"path steps must be +1 or -1, got {steps}")
        object.__setattr__(self, "steps", steps)

    @classmethod
    def parse(cls, text: str) -> "PathNK":
        """Parse a sign string such as '+--+' (commas, spaces and unicode minus allowed)."""
        cleaned = text.strip().strip("()").replace(",", "").replace(" ", "")
        steps = []
        for char in cleaned:
            if char == "+":
                steps.append(PLUS)
            elif char in "-−":
                steps.append(MINUS)
            else:
                raise InvalidInputError(f"cannot parse path {text!r}")
        return cls(tuple(steps))

    @property
    def N(self) -> int:
        return len(self.steps)

    @property
    def K(self) -> int:
        return sum(1 for s in self.steps if s == PLUS)

    @cached_property
    def heights(self) -> Tuple[int, ...]:
        out = [0]
        for s in self.steps:
            out.append(out[-1] + s)
        return tuple(out)

    def height(self, i: int) -> int:
        return self.heights[i]

    def swap(self, i: int) -> "PathNK":
        """Exchange steps i and i+1 (1-based)."""
        steps = list(self.steps)
        steps[i - 1], steps[i] = steps[i], steps[i - 1]
        return PathNK(tuple(steps))

    def __str__(self) -> str:
        return "".join("+" if s == PLUS else "-" for s in self.steps)


@dataclass(frozen=True, order=True)
class BinaryString:
    """A word in the letters 1 and 2; letter 1 marks the first parabolic block."""
    letters: Tuple[int, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        if any(v not in (1, 2) for v in letters):
            raise InvalidInputError(f"binary string letters must be 1 or 2, got {letters}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> "BinaryString":
        cleaned = text.strip().strip("()").replace(",", "").replace(" ", "")
        if not cleaned or any(c not in "12" for c in cleaned):
            raise InvalidInputError(f"cannot parse binary string {text!r}")
        return cls(tuple(int(c) for c in cleaned))

    @property
    def N(self) -> int:
        return len(self.letters)

    @property
    def ones(self) -> int:
        return self.letters.count(1)

    def positions(self, letter: int) -> List[int]:
        return [i for i, v in enumerate(self.letters, 1) if v == letter]

    def inversions(self) -> int:
        """Number of pairs i < j with a 2 at i and a 1 at j."""
        twos_seen = 0
        count = 0
        for v in self.letters:
            if v == 2:
                twos_seen += 1
            else:
                count += twos_seen
        return count

    def __str__(self) -> str:
        return "".join(str(v) for v in self.letters)


@dataclass(frozen=True)
class LinkPattern:
    """Noncrossing matching of 1..N; unpaired indices are enclosed by no pairing."""
    pairings: Tuple[Pairing, ...]
    unpaired: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "pairings", tuple(sorted(tuple(p) for p in self.pairings)))
        object.__setattr__(self, "unpaired", tuple(sorted(self.unpaired)))

    @property
    def N(self) -> int:
        return 2 * len(self.pairings) + len(self.unpaired)

    def validate(self) -> None:
        used = [i for p in self.pairings for i in p] + list(self.unpaired)
        if sorted(used) != list(range(1, len(used) + 1)):
            raise InvalidInputError(f"link pattern does not cover 1..N exactly: {self}")
        for i, j in self.pairings:
            if not i < j:
                raise InvalidInputError(f"pairing ({i},{j}) must satisfy i < j")
            if any(i < u < j for u in self.unpaired):
                raise InvalidInputError(f"pairing ({i},{j}) encloses an unpaired index")
        for (i, j), (k, l) in combinations(self.pairings, 2):
            if i < k < j < l or k < i < l < j:
                raise InvalidInputError(f"pairings ({i},{j}) and ({k},{l}) cross")

    def to_json(self) -> Dict[str, list]:
        return {"pairings": [list(p) for p in self.pairings], "unpaired": list(self.unpaired)}

    @classmethod
    def from_json(cls, data: Dict[str, list]) -> "LinkPattern":
        try:
            pattern = cls(tuple(tuple(p) for p in data["pairings"]), tuple(data.get("unpaired", ())))
        except (KeyError, TypeError) as e:
            raise InvalidInputError(f"invalid link pattern JSON: {e}")
        pattern.validate()
        return pattern


def string_to_path(s: BinaryString, eps: int) -> PathNK:
    """Letter v becomes the step eps * (-1)^(1+v): under + a 1 goes up, under - a 2 goes up."""
    eps = parse_convention(eps)
    return PathNK(tuple(eps * (1 if v == 1 else -1) for v in s.letters))


def path_to_string(p: PathNK, eps: int) -> BinaryString:
    eps = parse_convention(eps)
    return BinaryString(tuple(1 if s * eps == 1 else 2 for s in p.steps))


def link_pattern(p: PathNK) -> LinkPattern:
    """Parenthesis matching: up steps open, down steps close."""
    stack: List[int] = []
    pairings: List[Pairing] = []
    unpaired: List[int] = []
    for i, s in enumerate(p.steps, 1):
        if s == PLUS:
            stack.append(i)
        elif stack:
            pairings.append((stack.pop(), i))
        else:
            unpaired.append(i)
    unpaired.extend(stack)
    return LinkPattern(tuple(pairings), tuple(unpaired))


def matching(p: PathNK) -> Dict[int, int]:
    """Both directions of the pairings of p."""
    result: Dict[int, int] = {}
    for i, j in link_pattern(p).pairings:
        result[i] = j
        result[j] = i
    return result


def path_from_link_pattern(lp: LinkPattern, N: int, K: int) -> PathNK:
    """
    Inverse of link_pattern.

    Unpaired indices read as down steps followed by up steps, with exactly
    K - (number of pairings) of them going up.
    """
    lp.validate()
    if lp.N != N:
        raise InvalidInputError(f"link pattern has {lp.N} points, expected {N}")
    ups_needed = K - len(lp.pairings)
    if ups_needed < 0 or ups_needed > len(lp.unpaired):
        raise InvalidInputError(f"no path in P({N},{K}) has link pattern {lp.to_json()}")
    steps = [0] * N
    for i, j in lp.pairings:
        steps[i - 1] = PLUS
        steps[j - 1] = MINUS
    downs = len(lp.unpaired) - ups_needed
    for index, u in enumerate(lp.unpaired):
        steps[u - 1] = MINUS if index < downs else PLUS
    return PathNK(tuple(steps))


def dominates(lower: PathNK, upper: PathNK) -> bool:
    """True iff lower(i) <= upper(i) for every vertex i."""
    if lower.N != upper.N or lower.K != upper.K:
        return False
    return all(a <= b for a, b in zip(lower.heights, upper.heights))


def check_compatible(a: PathNK, b: PathNK) -> None:
    if a.N != b.N or a.K != b.K:
        raise InvalidInputError(f"paths {a} and {b} do not belong to the same P(N,K)")


def ferrers_box_count(lower: PathNK, upper: PathNK) -> int:
    """Number of unit boxes between two pointwise comparable paths."""
    check_compatible(lower, upper)
    if not dominates(lower, upper):
        raise IncomparablePathsError(f"{lower} is not below {upper}")
    return sum(b - a for a, b in zip(lower.heights, upper.heights)) // 2


def path_leq(a: PathNK, b: PathNK, eps: int) -> bool:
    """The coset order: a below b under -, a above b under +."""
    eps = parse_convention(eps)
    check_compatible(a, b)
    return dominates(a, b) if eps == MINUS else dominates(b, a)


def minimal_path(N: int, K: int, eps: int) -> PathNK:
    """The identity coset: highest path under +, lowest under -."""
    eps = parse_convention(eps)
    _check_size(N, K)
    if eps == PLUS:
        return PathNK((PLUS,) * K + (MINUS,) * (N - K))
    return PathNK((MINUS,) * (N - K) + (PLUS,) * K)


def maximal_path(N: int, K: int, eps: int) -> PathNK:
    return minimal_path(N, K, -parse_convention(eps))


def _check_size(N: int, K: int) -> None:
    if N < 0 or K < 0 or K > N:
        raise InvalidInputError(f"need 0 <= K <= N, got N={N}, K={K}")


def path_length(p: PathNK, eps: int) -> int:
    """Coset length |p|: boxes between p and the minimal path."""
    eps = parse_convention(eps)
    base = minimal_path(p.N, p.K, eps)
    return ferrers_box_count(base, p) if eps == MINUS else ferrers_box_count(p, base)


def ferrers_diagram(p: PathNK, eps: int) -> Tuple[int, ...]:
    """Row lengths of the Ferrers diagram of p: row r counts the 1s after the r-th 2."""
    s = path_to_string(p, eps)
    rows = []
    ones_after = s.ones
    for v in s.letters:
        if v == 1:
            ones_after -= 1
        elif ones_after:
            rows.append(ones_after)
    return tuple(rows)


@lru_cache(maxsize=None)
def all_paths(N: int, K: int) -> Tuple[PathNK, ...]:
    """
    Every path of P(N,K), lowest first.

    Paths are sorted by the number of boxes above the lowest path, ties
    broken lexicographically with - before +. The result is a linear
    extension of the - order; its reverse is one of the + order.
    """
    _check_size(N, K)
    base = minimal_path(N, K, MINUS)
    paths = []
    for ups in combinations(range(N), K):
        steps = [MINUS] * N
        for u in ups:
            steps[u] = PLUS
        paths.append(PathNK(tuple(steps)))
    paths.sort(key=lambda p: (ferrers_box_count(base, p), p.steps))
    logger.debug(f"P({N},{K}) has {len(paths)} paths")
    return tuple(paths)


def linear_extension(N: int, K: int, eps: int) -> Tuple[PathNK, ...]:
    """all_paths ordered from the minimal coset of convention eps upwards."""
    paths = all_paths(N, K)
    return paths if parse_convention(eps) == MINUS else tuple(reversed(paths))


def pair_flip(s: BinaryString, pairing: Pairing, eps: int = MINUS) -> BinaryString:
    """
    Swap the two letters of a pairing of s; under - this lowers the path.

    The flip is one-way: the swapped letters are no longer a pairing of the
    result, so flipping it again raises InvalidInputError.
    """
    pairing = tuple(pairing)
    p = string_to_path(s, eps)
    if pairing not in link_pattern(p).pairings:
        raise InvalidInputError(f"{pairing} is not a pairing of {s}")
    i, j = pairing
    letters = list(s.letters)
    letters[i - 1], letters[j - 1] = letters[j - 1], letters[i - 1]
    return BinaryString(tuple(letters))


def parse_path_or_string(text: str, eps: int) -> PathNK:
    """Read either a sign string ('+-+-') or a binary string ('1212', read under eps)."""
    cleaned = text.strip().strip("()").replace(",", "").replace(" ", "")
    if cleaned and all(c in "12" for c in cleaned):
        return string_to_path(BinaryString.parse(cleaned), eps)
    return PathNK.parse(cleaned)

"""
Dyck strip tilings of the region between two paths.

A region is the set of unit boxes between a lower and an upper path; a box
(x, y) is named by its center. Rule I and Rule II are pairwise conditions on
the strips of a tiling, and the generating functions over admissible tilings
give the parabolic KL polynomials.
"""

from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from parabolic_kl.algebra.hecke_module import flip_distance
from parabolic_kl.algebra.laurent import LaurentPoly, ONE, ZERO
from parabolic_kl.combinatorics.paths import (
    MINUS,
    PathNK,
    check_compatible,
    dominates,
    linear_extension,
    parse_convention,
    path_leq,
    path_length,
)
from parabolic_kl.utils.errors import IncomparablePathsError, InvalidInputError
from parabolic_kl.utils.logger import setup_logger

logger = setup_logger(__name__)

RULE_I = "I"
RULE_II = "II"


@dataclass(frozen=True, order=True)
class Box:
    x: int
    y: int

    def below(self) -> "Box":
        return Box(self.x, self.y - 2)

    def above(self) -> "Box":
        return Box(self.x, self.y + 2)

    def upper_neighbours(self) -> Tuple["Box", "Box", "Box"]:
        """Just above, north-west and north-east."""
        return Box(self.x, self.y + 2), Box(self.x - 1, self.y + 1), Box(self.x + 1, self.y + 1)

    def to_json(self) -> List[int]:
        return [self.x, self.y]


@dataclass(frozen=True, order=True)
class DyckStrip:
    """Boxes in consecutive columns whose heights trace a Dyck path above the first box."""
    boxes: Tuple[Box, ...]

    def __post_init__(self):
        boxes = tuple(self.boxes)
        if not boxes:
            raise InvalidInputError("a Dyck strip needs at least one box")
        base = boxes[0].y
        for a, b in zip(boxes, boxes[1:]):
            if b.x != a.x + 1 or abs(b.y - a.y) != 1:
                raise InvalidInputError(f"strip boxes {a} and {b} are not adjacent")
        if boxes[-1].y != base or any(b.y < base for b in boxes):
            raise InvalidInputError(f"strip {[b.to_json() for b in boxes]} is not a Dyck path")
        object.__setattr__(self, "boxes", boxes)

    @property
    def base(self) -> int:
        return self.boxes[0].y

    @property
    def start(self) -> Box:
        return self.boxes[0]

    @property
    def end(self) -> Box:
        return self.boxes[-1]

    def __len__(self) -> int:
        return len(self.boxes)

    def box_set(self) -> FrozenSet[Box]:
        return frozenset(self.boxes)

    def to_json(self) -> List[List[int]]:
        return [b.to_json() for b in self.boxes]


@dataclass(frozen=True)
class StripConfig:
    """A tiling of the region between lower and upper by Dyck strips."""
    lower: PathNK
    upper: PathNK
    strips: Tuple[DyckStrip, ...]

    def __post_init__(self):
        object.__setattr__(self, "strips", tuple(sorted(self.strips)))

    def __len__(self) -> int:
        return len(self.strips)

    @property
    def box_count(self) -> int:
        return sum(len(s) for s in self.strips)

    def validate(self) -> None:
        """Strips must be disjoint and cover the region exactly."""
        region = region_boxes(self.lower, self.upper)
        seen: Set[Box] = set()
        for strip in self.strips:
            overlap = seen & strip.box_set()
            if overlap:
                raise InvalidInputError(f"strips overlap at {sorted(overlap)}")
            seen |= strip.box_set()
        if seen != region:
            raise InvalidInputError("strips do not cover the region exactly")

    def strip_of(self) -> Dict[Box, int]:
        """Index of the strip holding each box."""
        return {b: index for index, strip in enumerate(self.strips) for b in strip.boxes}

    def to_json(self) -> Dict[str, object]:
        return {
            "lower": str(self.lower),
            "upper": str(self.upper),
            "strips": [s.to_json() for s in self.strips],
        }

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "StripConfig":
        try:
            strips = tuple(DyckStrip(tuple(Box(int(x), int(y)) for x, y in s)) for s in data["strips"])
            config = cls(PathNK.parse(data["lower"]), PathNK.parse(data["upper"]), strips)
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidInputError(f"invalid strip configuration JSON: {e}")
        config.validate()
        return config


def parse_rule(rule) -> Optional[str]:
    """Accept None, 'I', 'II', 1 or 2 (also 'rule1' / 'rule2')."""
    if rule is None:
        return None
    text = str(rule).strip().upper().replace("RULE", "")
    if text in ("I", "1"):
        return RULE_I
    if text in ("II", "2"):
        return RULE_II
    raise InvalidInputError(f"unknown rule {rule!r}")


def _check_region(lower: PathNK, upper: PathNK) -> None:
    check_compatible(lower, upper)
    if not dominates(lower, upper):
        raise IncomparablePathsError(f"{lower} is not below {upper}")


def region_boxes(lower: PathNK, upper: PathNK) -> Set[Box]:
    """
    Every box between two comparable paths.

    >>> sorted(region_boxes(PathNK.parse("-+-+"), PathNK.parse("++--")))
    [Box(x=1, y=0), Box(x=2, y=1), Box(x=3, y=0)]
    """
    _check_region(lower, upper)
    boxes = set()
    for x in range(1, lower.N):
        for y in range(lower.heights[x] + 1, upper.heights[x], 2):
            boxes.add(Box(x, y))
    return boxes


def rule_I_holds(d: DyckStrip, d_prime: DyckStrip) -> bool:
    """If a box of d lies just below a box of d', every box of d' sits on a box of d."""
    below = d.box_set()
    touching = [b.below() in below for b in d_prime.boxes]
    return not any(touching) or all(touching)


def rule_II_holds(d: DyckStrip, d_prime: DyckStrip) -> bool:
    """If a box of d' touches d from above, every box touching d from above is in d or d'."""
    neighbours = {n for b in d.boxes for n in b.upper_neighbours()}
    if neighbours.isdisjoint(d_prime.boxes):
        return True
    return neighbours <= d.box_set() | d_prime.box_set()


_PAIR_RULES: Dict[str, Callable[[DyckStrip, DyckStrip], bool]] = {
    RULE_I: rule_I_holds,
    RULE_II: rule_II_holds,
}


def _pairwise(strips: Sequence[DyckStrip], check: Callable[[DyckStrip, DyckStrip], bool]) -> bool:
    for a in strips:
        for b in strips:
            if a is not b and not check(a, b):
                return False
    return True


def satisfies_rule_I(config: StripConfig) -> bool:
    return _pairwise(config.strips, rule_I_holds)


def satisfies_rule_II(config: StripConfig) -> bool:
    return _pairwise(config.strips, rule_II_holds)


def satisfies_rule(config: StripConfig, rule) -> bool:
    rule = parse_rule(rule)
    if rule is None:
        return True
    return satisfies_rule_I(config) if rule == RULE_I else satisfies_rule_II(config)


def _strips_from(start: Box, free: Set[Box]) -> Iterator[DyckStrip]:
    """Every Dyck strip made of free boxes whose first box is start."""
    base = start.y
    path = [start]

    def grow() -> Iterator[DyckStrip]:
        last = path[-1]
        if last.y == base:
            yield DyckStrip(tuple(path))
        for dy in (1, -1):
            nxt = Box(last.x + 1, last.y + dy)
            if nxt.y >= base and nxt in free:
                path.append(nxt)
                yield from grow()
                path.pop()

    yield from grow()


def enumerate_configurations(lower: PathNK, upper: PathNK, rule=None, prune: bool = True) -> List[StripConfig]:
    """
    All tilings of the region, optionally restricted to Rule I or Rule II.

    Strips grow from the leftmost-lowest uncovered box, which is always the
    first box of its strip, so every tiling is produced exactly once. With
    prune the rule is checked against the placed strips as soon as a strip is
    laid; without it the complete tilings are filtered afterwards.
    """
    rule = parse_rule(rule)
    free = region_boxes(lower, upper)
    check = _PAIR_RULES.get(rule) if prune else None
    placed: List[DyckStrip] = []
    results: List[StripConfig] = []

    def place() -> None:
        if not free:
            results.append(StripConfig(lower, upper, tuple(placed)))
            return
        start = min(free)
        for strip in list(_strips_from(start, free)):
            if check is not None and not all(check(d, strip) and check(strip, d) for d in placed):
                continue
            free.difference_update(strip.boxes)
            placed.append(strip)
            place()
            placed.pop()
            free.update(strip.boxes)

    place()
    if rule is not None and not prune:
        results = [c for c in results if satisfies_rule(c, rule)]
    logger.debug(f"{len(results)} configurations between {lower} and {upper} (rule={rule}, prune={prune})")
    return results


def generating_function(configs: Sequence[StripConfig]) -> LaurentPoly:
    """Sum of t^{-number of strips}."""
    total = ZERO
    for config in configs:
        total = total + LaurentPoly.monomial(-len(config))
    return total


def _q(lower: PathNK, upper: PathNK, rule: str) -> LaurentPoly:
    check_compatible(lower, upper)
    if not dominates(lower, upper):
        return ZERO
    if lower == upper:
        return ONE
    return generating_function(enumerate_configurations(lower, upper, rule))


def q_rule_I(lower: PathNK, upper: PathNK) -> LaurentPoly:
    """Generating function of Rule I tilings; zero for crossing paths."""
    return _q(lower, upper, RULE_I)


def q_rule_II(lower: PathNK, upper: PathNK) -> LaurentPoly:
    """The Rule II tiling is unique when it exists, so this is a monomial or zero."""
    result = _q(lower, upper, RULE_II)
    if len(result) > 1 or (result and result.terms[0][1] != 1):
        raise InvalidInputError(f"more than one Rule II tiling between {lower} and {upper}")
    return result


def q_polynomial(alpha: PathNK, beta: PathNK, rule, eps) -> LaurentPoly:
    """
    Q^{rule,eps}_{alpha,beta}.

    Under - the region lies between alpha (below) and beta (above); under +
    the roles swap, so Q^{X,+}_{alpha,beta} = Q^{X,-}_{beta,alpha}.
    """
    rule = parse_rule(rule)
    if rule is None:
        raise InvalidInputError("q_polynomial needs rule I or II")
    lower, upper = (alpha, beta) if parse_convention(eps) == MINUS else (beta, alpha)
    return q_rule_I(lower, upper) if rule == RULE_I else q_rule_II(lower, upper)


def flip_test(lower: PathNK, upper: PathNK) -> Optional[int]:
    """Number of flipped pairings when lower is in F(upper), else None."""
    return flip_distance(lower, upper)


def q_table(N: int, K: int, rule, eps) -> Tuple[Tuple[PathNK, ...], List[List[Optional[LaurentPoly]]]]:
    """Square table of Q^{rule,eps} in the linear extension of eps; None marks an order violation."""
    eps = parse_convention(eps)
    paths = linear_extension(N, K, eps)
    rows = []
    for alpha in paths:
        row = []
        for beta in paths:
            row.append(q_polynomial(alpha, beta, rule, eps) if path_leq(alpha, beta, eps) else None)
        rows.append(row)
    return paths, rows


def verify_inversion(N: int, K: int) -> bool:
    """sum_beta Q^{I,-}_{alpha,beta} Q^{II,-}_{beta,gamma} (-1)^{|beta|+|gamma|} = delta_{alpha,gamma}."""
    paths = linear_extension(N, K, MINUS)
    lengths = {p: path_length(p, MINUS) for p in paths}
    rule_one = {(a, b): q_rule_I(a, b) for a in paths for b in paths if dominates(a, b)}
    rule_two = {(b, c): q_rule_II(b, c) for b in paths for c in paths if dominates(b, c)}
    for alpha in paths:
        for gamma in paths:
            total = ZERO
            for beta in paths:
                first = rule_one.get((alpha, beta))
                second = rule_two.get((beta, gamma))
                if first is None or second is None:
                    continue
                total = total + first * second * (-1) ** (lengths[beta] + lengths[gamma])
            expected = ONE if alpha == gamma else ZERO
            if total != expected:
                logger.error(f"inversion fails at ({alpha}, {gamma}): {total}")
                return False
    logger.info(f"Rule I / Rule II inversion holds for N={N}, K={K}")
    return True

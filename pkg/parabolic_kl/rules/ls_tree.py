"""
Lascoux-Schutzenberger trees with capacities.

The tree of a pair (lower, upper) is the nesting forest of the pairings of
the lower path, joined at a virtual root. Leaves are the pairings (i, i+1)
and carry a capacity, the number of boxes stacked above the peak of the
lower path at vertex i. Labellings of the tree generate P^+, and each
labelling corresponds to exactly one Rule I tiling of the region.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from parabolic_kl.algebra.laurent import LaurentPoly, ZERO
from parabolic_kl.combinatorics.paths import (
    PLUS,
    BinaryString,
    LinkPattern,
    Pairing,
    PathNK,
    check_compatible,
    dominates,
    link_pattern,
    matching,
    string_to_path,
)
from parabolic_kl.rules.dyck import Box, DyckStrip, StripConfig, region_boxes
from parabolic_kl.utils.errors import IncomparablePathsError, InvalidInputError
from parabolic_kl.utils.logger import setup_logger

logger = setup_logger(__name__)

# nested tuples: a forest is a tuple of edges, an edge is the forest of its children
TreeShape = Tuple["TreeShape", ...]


@dataclass(frozen=True)
class TreeEdge:
    pairing: Pairing
    children: Tuple["TreeEdge", ...] = ()
    capacity: Optional[int] = None

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def walk(self) -> Iterator["TreeEdge"]:
        yield self
        for child in self.children:
            yield from child.walk()

    def shape(self) -> TreeShape:
        return tuple(child.shape() for child in self.children)

    def min_capacity(self) -> int:
        """Smallest leaf capacity below this edge."""
        return min(edge.capacity for edge in self.walk() if edge.is_leaf)

    def to_json(self) -> Dict[str, object]:
        data: Dict[str, object] = {"pairing": list(self.pairing)}
        if self.is_leaf:
            data["capacity"] = self.capacity
        data["children"] = [child.to_json() for child in self.children]
        return data


@dataclass(frozen=True)
class CapTree:
    lower: PathNK
    upper: PathNK
    roots: Tuple[TreeEdge, ...]

    def edges(self) -> List[TreeEdge]:
        """Every edge, parents before children."""
        return [edge for root in self.roots for edge in root.walk()]

    def leaves(self) -> List[TreeEdge]:
        return [edge for edge in self.edges() if edge.is_leaf]

    def parents(self) -> Dict[Pairing, Optional[Pairing]]:
        result: Dict[Pairing, Optional[Pairing]] = {root.pairing: None for root in self.roots}
        for edge in self.edges():
            for child in edge.children:
                result[child.pairing] = edge.pairing
        return result

    def capacities(self) -> Dict[Pairing, int]:
        return {leaf.pairing: leaf.capacity for leaf in self.leaves()}

    def shape(self) -> TreeShape:
        return tuple(root.shape() for root in self.roots)

    def to_json(self) -> Dict[str, object]:
        return {"pairing": None, "children": [root.to_json() for root in self.roots]}


@dataclass(frozen=True)
class Labelling:
    """n(e) for every edge, keyed by the edge's pairing."""
    labels: Tuple[Tuple[Pairing, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))

    @classmethod
    def from_dict(cls, labels: Dict[Pairing, int]) -> "Labelling":
        return cls(tuple(labels.items()))

    def as_dict(self) -> Dict[Pairing, int]:
        return dict(self.labels)

    def __getitem__(self, pairing: Pairing) -> int:
        return self.as_dict()[tuple(pairing)]

    def to_json(self) -> List[Dict[str, object]]:
        return [{"pairing": list(p), "label": n} for p, n in self.labels]


@dataclass(frozen=True)
class ArcLabels:
    """A link pattern whose pairings carry the transferred labels n'(p)."""
    pattern: LinkPattern
    labels: Tuple[Tuple[Pairing, int], ...]

    def as_dict(self) -> Dict[Pairing, int]:
        return dict(self.labels)

    def to_json(self) -> Dict[str, object]:
        data = self.pattern.to_json()
        data["labels"] = [[list(p), n] for p, n in self.labels]
        return data


def leaf_capacity(lower: PathNK, upper: PathNK, pairing: Pairing) -> int:
    """Half the height gap between the paths at the peak of a leaf pairing."""
    i, j = pairing
    if j != i + 1:
        raise InvalidInputError(f"{pairing} is not a leaf pairing")
    return (upper.heights[i] - lower.heights[i]) // 2


def string_capacity(v: BinaryString, w: BinaryString, pairing: Pairing) -> int:
    """
    The same capacity read off the strings under +: the number of 1s in the
    first i letters of v minus that of w, where v is above and w below.
    """
    i = pairing[0]
    return v.letters[:i].count(1) - w.letters[:i].count(1)


def _check_region(lower: PathNK, upper: PathNK) -> None:
    check_compatible(lower, upper)
    if not dominates(lower, upper):
        raise IncomparablePathsError(f"{lower} is not below {upper}")


def build_tree(lower: PathNK, upper: PathNK) -> CapTree:
    """The capacitated dual tree of the link pattern of lower."""
    _check_region(lower, upper)
    match = matching(lower)

    def build(span_start: int, span_end: int) -> Tuple[TreeEdge, ...]:
        # pairings strictly inside (span_start, span_end) that no other such pairing encloses
        edges = []
        position = span_start + 1
        while position < span_end:
            if position in match and match[position] > position:
                i, j = position, match[position]
                children = build(i, j)
                capacity = leaf_capacity(lower, upper, (i, j)) if not children else None
                edges.append(TreeEdge((i, j), children, capacity))
                position = j + 1
            else:
                position += 1
        return tuple(edges)

    tree = CapTree(lower, upper, build(0, lower.N + 1))
    logger.debug(f"tree of {lower} below {upper}: {len(tree.edges())} edges, capacities {tree.capacities()}")
    return tree


def tree_from_string(w: BinaryString) -> TreeShape:
    """
    Tree shape by the recursive rules on a + string.

    A(2w) = A(w1) = A(w); a leading unmatched 1 is dropped the same way;
    A(zw) is the forest of A(z) and A(w) for a nonempty balanced prefix z;
    A(1z2) is a single edge over A(z).
    """
    letters = list(w.letters)
    while letters and letters[0] == 2:
        letters.pop(0)
    while letters and letters[-1] == 1:
        letters.pop()
    if not letters:
        return ()
    depth = 0
    for index, letter in enumerate(letters):
        depth += 1 if letter == 1 else -1
        if depth == 0:
            break
    else:
        # the first 1 is never closed
        return tree_from_string(BinaryString(tuple(letters[1:])))
    head, rest = letters[:index + 1], letters[index + 1:]
    if rest:
        return tree_from_string(BinaryString(tuple(head))) + tree_from_string(BinaryString(tuple(rest)))
    return (tree_from_string(BinaryString(tuple(head[1:-1]))),)


def enumerate_labellings(tree: CapTree) -> List[Labelling]:
    """
    Every labelling: leaf labels at most their capacity, labels never
    decreasing from the root towards the leaves.
    """
    results: List[Labelling] = []
    order = tree.edges()
    parents = tree.parents()
    bounds = {edge.pairing: edge.min_capacity() for edge in order}
    current: Dict[Pairing, int] = {}

    def assign(index: int) -> None:
        if index == len(order):
            results.append(Labelling.from_dict(current))
            return
        pairing = order[index].pairing
        parent = parents[pairing]
        low = current[parent] if parent is not None else 0
        for n in range(low, bounds[pairing] + 1):
            current[pairing] = n
            assign(index + 1)
        current.pop(pairing, None)

    assign(0)
    logger.debug(f"{len(results)} labellings of the tree of {tree.lower} below {tree.upper}")
    return results


def label_sum(labelling: Labelling) -> int:
    return sum(n for _, n in labelling.labels)


def ls_polynomial(lower: PathNK, upper: PathNK) -> LaurentPoly:
    """t^{-boxes} times the sum of t^{2 label_sum} over all labellings; zero for crossing paths."""
    check_compatible(lower, upper)
    if not dominates(lower, upper):
        return ZERO
    tree = build_tree(lower, upper)
    boxes = len(region_boxes(lower, upper))
    total = ZERO
    for labelling in enumerate_labellings(tree):
        total = total + LaurentPoly.monomial(2 * label_sum(labelling) - boxes)
    return total


def transfer_labels(tree: CapTree, labelling: Labelling) -> ArcLabels:
    """n'(p(e)) = n(e) - n(parent edge); edges at the root keep n(e)."""
    labels = labelling.as_dict()
    arcs = {}
    for pairing, parent in tree.parents().items():
        arcs[pairing] = labels[pairing] - (labels[parent] if parent is not None else 0)
    return ArcLabels(link_pattern(tree.lower), tuple(sorted(arcs.items())))


def labels_from_arcs(tree: CapTree, arcs: ArcLabels) -> Labelling:
    """Inverse of transfer_labels: sum the arc labels along the path from the root."""
    increments = arcs.as_dict()
    labels: Dict[Pairing, int] = {}
    parents = tree.parents()
    for edge in tree.edges():
        parent = parents[edge.pairing]
        labels[edge.pairing] = increments[edge.pairing] + (labels[parent] if parent is not None else 0)
    return Labelling.from_dict(labels)


def _layer_boxes(lower: PathNK, pairing: Pairing, layer: int) -> List[Box]:
    i, j = pairing
    return [Box(x, lower.heights[x] + 2 * layer - 1) for x in range(i - 1, j + 1)]


def _merge(paths: List[List[Box]]) -> List[List[Box]]:
    """Join paths whose end box is the start box of another until none are left to join."""
    paths = [list(p) for p in paths]
    merged = True
    while merged:
        merged = False
        starts = {p[0]: index for index, p in enumerate(paths)}
        for index, p in enumerate(paths):
            other = starts.get(p[-1])
            if other is not None and other != index:
                paths[index] = p + paths[other][1:]
                del paths[other]
                merged = True
                break
    return paths


def labelling_to_config(lower: PathNK, upper: PathNK, labelling: Labelling) -> StripConfig:
    """
    The Rule I tiling of a labelling.

    Every pairing p gets n'(p) Dyck paths stacked on the lower path over its
    span, at layers n(parent)+1 .. n(p); paths meeting end to start merge,
    and every box left over becomes a one-box strip.
    """
    tree = build_tree(lower, upper)
    labels = labelling.as_dict()
    parents = tree.parents()
    layered: List[List[Box]] = []
    # largest arches first
    for pairing in sorted(parents, key=lambda p: (-(p[1] - p[0]), p)):
        parent = parents[pairing]
        base = labels[parent] if parent is not None else 0
        for layer in range(base + 1, labels[pairing] + 1):
            layered.append(_layer_boxes(lower, pairing, layer))
    strips = [DyckStrip(tuple(p)) for p in _merge(layered)]
    covered = {b for s in strips for b in s.boxes}
    region = region_boxes(lower, upper)
    if not covered <= region:
        raise InvalidInputError(f"labelling {labelling.to_json()} leaves the region")
    strips.extend(DyckStrip((b,)) for b in sorted(region - covered))
    return StripConfig(lower, upper, tuple(strips))


def config_to_labelling(config: StripConfig) -> Labelling:
    """
    Inverse of labelling_to_config.

    Each strip of length > 1 sits at a constant layer above the lower path
    and splits into consecutive pairings of the lower path along its span.
    """
    lower = config.lower
    tree = build_tree(lower, config.upper)
    match = matching(lower)
    assigned: Dict[Pairing, int] = {}
    for strip in config.strips:
        if len(strip) == 1:
            continue
        start, end = strip.start, strip.end
        layer = (start.y - lower.heights[start.x] + 1) // 2
        position = start.x + 1
        while position <= end.x:
            j = match.get(position)
            if j is None or j < position:
                raise InvalidInputError(f"strip {strip.to_json()} does not follow the pairings of {lower}")
            assigned[(position, j)] = max(assigned.get((position, j), 0), layer)
            position = j + 1
    labels: Dict[Pairing, int] = {}
    parents = tree.parents()
    for edge in tree.edges():
        parent = parents[edge.pairing]
        floor = labels[parent] if parent is not None else 0
        labels[edge.pairing] = max(floor, assigned.get(edge.pairing, 0))
    labelling = Labelling.from_dict(labels)
    if labelling_to_config(lower, config.upper, labelling) != config:
        raise InvalidInputError("configuration is not the image of a labelling")
    return labelling


def plus_polynomial(v: BinaryString, w: BinaryString) -> LaurentPoly:
    """P^+_{v,w} from + strings: the upper path is v and the lower path is w."""
    return ls_polynomial(string_to_path(w, PLUS), string_to_path(v, PLUS))

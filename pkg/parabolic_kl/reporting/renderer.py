"""Plain-text drawings of strip tilings and LS trees."""

import string
from typing import List, Optional

from parabolic_kl.rules.dyck import StripConfig
from parabolic_kl.rules.ls_tree import CapTree, Labelling, TreeEdge

STRIP_IDS = string.ascii_lowercase + string.ascii_uppercase


class Renderer:
    """ASCII renderings for the terminal."""

    def render_config(self, config: StripConfig) -> str:
        """
        One character per lattice point, highest row first.

        Path vertices are drawn as '.', each box center carries the id of its
        strip (a-z, then A-Z, then '*').
        """
        lower, upper = config.lower, config.upper
        owner = config.strip_of()
        cells = {}
        for x in range(lower.N + 1):
            cells[(x, lower.heights[x])] = "."
            cells[(x, upper.heights[x])] = "."
        for box, index in owner.items():
            cells[(box.x, box.y)] = STRIP_IDS[index] if index < len(STRIP_IDS) else "*"
        top = max(upper.heights)
        bottom = min(lower.heights)
        rows = []
        for y in range(top, bottom - 1, -1):
            rows.append("".join(cells.get((x, y), " ") for x in range(lower.N + 1)).rstrip())
        return "\n".join(rows) + "\n"

    def render_tree(self, tree: CapTree, labelling: Optional[Labelling] = None) -> str:
        """Indented edges under a virtual root; leaves show their capacity."""
        labels = labelling.as_dict() if labelling is not None else {}
        lines = [f"root ({tree.lower} below {tree.upper})"]

        def walk(edge: TreeEdge, depth: int) -> None:
            text = f"{'  ' * depth}({edge.pairing[0]},{edge.pairing[1]})"
            if edge.is_leaf:
                text += f" cap={edge.capacity}"
            if edge.pairing in labels:
                text += f" n={labels[edge.pairing]}"
            lines.append(text)
            for child in edge.children:
                walk(child, depth + 1)

        for root in tree.roots:
            walk(root, 1)
        return "\n".join(lines) + "\n"

    def render_configs(self, configs: List[StripConfig]) -> str:
        blocks = []
        for index, config in enumerate(configs, 1):
            blocks.append(f"# {index}: {len(config)} strips\n" + self.render_config(config))
        return "\n".join(blocks)

"""Stable 8-player schedules from node-line pairs of the Fano plane.

Players 1..7 are the nodes of the plane and player 0 sits outside it.  A
node x on a line l yields one seeding: 0 meets x in round 1, the other two
nodes of l form the neighbouring round-1 match, and the two remaining lines
through x give the two round-1 matches of the other half.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bracket import Seeding
from .schedule import Schedule

__all__ = [
    "FanoPlane",
    "NodeLineAssignment",
    "canonical_plane",
    "seeding_from_pair",
    "build_fano_skc",
    "enumerate_assignments",
    "parse_assignment",
    "format_assignment",
]

NODES = tuple(range(1, 8))

_CANONICAL_LINES = (
    (1, 4, 5),
    (2, 4, 6),
    (1, 2, 3),
    (3, 5, 6),
    (2, 5, 7),
    (3, 4, 7),
    (1, 6, 7),
)


@dataclass(frozen=True)
class FanoPlane:
    lines: tuple[frozenset, ...]

    def __post_init__(self):
        lines = tuple(frozenset(line) for line in self.lines)
        object.__setattr__(self, "lines", lines)
        if len(lines) != 7 or len(set(lines)) != 7:
            raise ValueError("a Fano plane has exactly 7 distinct lines")
        for line in lines:
            if len(line) != 3 or not line <= set(NODES):
                raise ValueError(f"bad line {sorted(line)}: need 3 nodes from 1..7")
        for pair in combinations(NODES, 2):
            hits = sum(1 for line in lines if set(pair) <= line)
            if hits != 1:
                raise ValueError(f"node pair {pair} lies on {hits} lines, expected 1")
        for x in NODES:
            if sum(1 for line in lines if x in line) != 3:
                raise ValueError(f"node {x} is not on exactly 3 lines")

    @property
    def nodes(self) -> tuple[int, ...]:
        return NODES

    def lines_through(self, x: int) -> list[frozenset]:
        return [line for line in self.lines if x in line]

    def line_through(self, x: int, y: int) -> frozenset:
        """The unique line containing two distinct nodes."""
        for line in self.lines:
            if x in line and y in line:
                return line
        raise ValueError(f"no line through {x} and {y}")


@dataclass(frozen=True)
class NodeLineAssignment:
    """Seven (node, line) pairs using every node and every line once, node on line."""

    pairs: tuple[tuple[int, frozenset], ...]

    def __post_init__(self):
        pairs = tuple((int(x), frozenset(line)) for x, line in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if len(pairs) != 7:
            raise ValueError(f"an assignment has 7 pairs, got {len(pairs)}")
        nodes = [x for x, _ in pairs]
        lines = [line for _, line in pairs]
        if sorted(nodes) != list(NODES):
            raise ValueError(f"nodes {nodes} do not enumerate 1..7")
        if len(set(lines)) != 7:
            raise ValueError("lines repeat within the assignment")
        for x, line in pairs:
            if x not in line:
                raise ValueError(f"node {x} is not on line {sorted(line)}")

    def check_plane(self, plane: FanoPlane) -> None:
        if set(line for _, line in self.pairs) != set(plane.lines):
            raise ValueError("assignment lines are not the lines of the plane")


def canonical_plane() -> FanoPlane:
    return FanoPlane(_CANONICAL_LINES)


def seeding_from_pair(plane: FanoPlane, x: int, line) -> Seeding:
    line = frozenset(line)
    if line not in plane.lines:
        raise ValueError(f"{sorted(line)} is not a line of the plane")
    if x not in line:
        raise ValueError(f"node {x} is not on line {sorted(line)}")
    order = [0, x, *sorted(line - {x})]
    others = sorted(sorted(other - {x}) for other in plane.lines_through(x) if other != line)
    for pair in others:
        order.extend(pair)
    return Seeding(tuple(order))


def build_fano_skc(assignment: NodeLineAssignment, plane: FanoPlane | None = None) -> Schedule:
    plane = plane or canonical_plane()
    assignment.check_plane(plane)
    seedings = tuple(seeding_from_pair(plane, x, line) for x, line in assignment.pairs)
    return Schedule(seedings, {"k": "3", "method": "fano"})


def enumerate_assignments(plane: FanoPlane | None = None) -> list[NodeLineAssignment]:
    """All perfect matchings of the node-line incidence, nodes in ascending order."""
    plane = plane or canonical_plane()
    ordered_lines = sorted(plane.lines, key=sorted)
    found = []

    def extend(i, used, chosen):
        if i == len(NODES):
            found.append(NodeLineAssignment(tuple(zip(NODES, chosen))))
            return
        x = NODES[i]
        for j, line in enumerate(ordered_lines):
            if j not in used and x in line:
                used.add(j)
                chosen.append(line)
                extend(i + 1, used, chosen)
                chosen.pop()
                used.remove(j)

    extend(0, set(), [])
    return found


def format_assignment(assignment: NodeLineAssignment) -> str:
    return "\n".join(f"{x}: {','.join(map(str, sorted(line)))}" for x, line in assignment.pairs) + "\n"


def parse_assignment(text: str) -> NodeLineAssignment:
    """Parse seven ``node: a,b,c`` lines; blank and ``#`` lines are skipped."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            node, rest = line.split(":", 1)
            members = [int(t) for t in rest.split(",")]
            pairs.append((int(node), frozenset(members)))
        except ValueError:
            raise ValueError(f"line {lineno}: expected 'node: a,b,c', got {raw!r}") from None
        if len(members) != 3:
            raise ValueError(f"line {lineno}: a line has 3 nodes, got {len(members)}")
    return NodeLineAssignment(tuple(pairs))

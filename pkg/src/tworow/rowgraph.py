"""Two-row graphs of a matrix and the null-connectedness relation.

Vertices are row indices 1..m.  Rows i and j are null-connected when every
2x2 minor they span on consecutive columns is singular; the cyclic variant
additionally requires the wraparound minor on columns (n, 1) to vanish.  The
two-row graph joins exactly the pairs that are not null-connected.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import DegenerateMatrix, IndexOutOfRange, NotSquare
from .fields import FieldKind
from .matrices import ExactMatrix


class GraphFlavor(enum.Enum):
    PLAIN = "plain"
    CYCLIC = "cyclic"
    OPP = "opp"
    PAIRING = "pairing"


@dataclass(frozen=True)
class RowGraph:
    """A finite simple graph on vertices 1..n with normalized edge pairs."""

    n: int
    edges: frozenset[tuple[int, int]]
    flavor: GraphFlavor = field(default=GraphFlavor.PLAIN, compare=False)

    def __post_init__(self) -> None:
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise IndexOutOfRange(f"edge ({i},{j}) invalid on 1..{self.n}")

    @staticmethod
    def of(n: int, pairs, flavor: GraphFlavor = GraphFlavor.PLAIN) -> "RowGraph":
        norm = frozenset((min(i, j), max(i, j)) for i, j in pairs)
        return RowGraph(n, norm, flavor)

    @property
    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    @property
    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [[i, j] for i, j in self.sorted_edges]}

    def to_dot(self) -> str:
        lines = ["graph rowgraph {", f"  // flavor={self.flavor.value} n={self.n}"]
        lines += [f"  r{i};" for i in range(1, self.n + 1)]
        lines += [f"  r{i} -- r{j};" for i, j in self.sorted_edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def _vanishes_fn(a: ExactMatrix):
    """2x2 determinant vanishing test on raw entry values."""
    if a.spec.kind is FieldKind.RATIONAL:
        return lambda x, y, z, w: x * w == y * z
    p = a.spec.p
    return lambda x, y, z, w: (x * w - y * z) % p == 0


def null_connected(a: ExactMatrix, i: int, j: int, cyclic: bool = False) -> bool:
    """True iff every consecutive-column 2x2 minor of rows i, j vanishes
    (plus the wraparound minor when cyclic)."""
    if i == j:
        raise IndexOutOfRange("rows i and j must differ")
    if not (1 <= i <= a.m and 1 <= j <= a.m):
        raise IndexOutOfRange(f"rows ({i},{j}) outside 1..{a.m}")
    raw = a.raw()
    return _null_connected_raw(raw[i - 1], raw[j - 1], _vanishes_fn(a), cyclic)


def _null_connected_raw(ri, rj, vanishes, cyclic: bool) -> bool:
    for k in range(len(ri) - 1):
        if not vanishes(ri[k], ri[k + 1], rj[k], rj[k + 1]):
            return False
    if cyclic and not vanishes(ri[-1], ri[0], rj[-1], rj[0]):
        return False
    return True


def two_row_graph(a: ExactMatrix, cyclic: bool = False) -> RowGraph:
    """The (cyclic) two-row graph of a: rows adjacent iff not null-connected.

    Single-column matrices have no 2x2 windows, so every row pair is
    null-connected and the graph is edgeless; Id_1 gives the 1-vertex path.
    """
    raw = a.raw()
    vanishes = _vanishes_fn(a)
    edges = set()
    for i in range(a.m):
        for j in range(i + 1, a.m):
            if not _null_connected_raw(raw[i], raw[j], vanishes, cyclic):
                edges.add((i + 1, j + 1))
    flavor = GraphFlavor.CYCLIC if cyclic else GraphFlavor.PLAIN
    return RowGraph(a.m, frozenset(edges), flavor)


def opp_graph(a: ExactMatrix, cyclic: bool = False) -> RowGraph:
    """Null-connectedness as the edge relation; complements two_row_graph."""
    raw = a.raw()
    vanishes = _vanishes_fn(a)
    edges = set()
    for i in range(a.m):
        for j in range(i + 1, a.m):
            if _null_connected_raw(raw[i], raw[j], vanishes, cyclic):
                edges.add((i + 1, j + 1))
    return RowGraph(a.m, frozenset(edges), GraphFlavor.OPP)


def is_square_traceable(a: ExactMatrix) -> bool:
    """True iff rows in their given order form a path in the two-row graph:
    every consecutive row pair spans some nonzero consecutive minor."""
    if not a.is_square:
        raise NotSquare("square-traceability is defined for square matrices")
    if a.n < 2:
        raise DegenerateMatrix("needs at least two columns")
    raw = a.raw()
    vanishes = _vanishes_fn(a)
    return all(
        not _null_connected_raw(raw[i], raw[i + 1], vanishes, False)
        for i in range(a.m - 1)
    )


def is_cyclically_square_traceable(a: ExactMatrix) -> bool:
    """True iff rows in cyclic order form a cycle in the cyclic two-row graph."""
    if not a.is_square:
        raise NotSquare("square-traceability is defined for square matrices")
    if a.n < 3:
        raise DegenerateMatrix("cyclic traceability needs n >= 3")
    raw = a.raw()
    vanishes = _vanishes_fn(a)
    for i in range(a.m):
        j = (i + 1) % a.m
        if _null_connected_raw(raw[i], raw[j], vanishes, True):
            return False
    return True

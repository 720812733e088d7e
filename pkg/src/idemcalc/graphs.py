"""Weighted directed graphs: TSV ingestion and lowering to adjacency matrices."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ParseError, UnknownNode
from .matrices import Matrix
from .semirings import Semiring


@dataclass
class Graph:
    nodes: list[str] = field(default_factory=list)
    edges: list[tuple[str, str, float]] = field(default_factory=list)

    def add_edge(self, u: str, v: str, w: float) -> None:
        for name in (u, v):
            if name not in self._index:
                self._index[name] = len(self.nodes)
                self.nodes.append(name)
        self.edges.append((u, v, float(w)))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownNode(name) from None

    def __post_init__(self):
        self._index = {name: i for i, name in enumerate(self.nodes)}
        if len(self._index) != len(self.nodes):
            raise ValueError("duplicate node names")
        for u, v, _ in self.edges:
            self.index(u)
            self.index(v)

    def __len__(self):
        return len(self.nodes)


def parse_graph(text: str) -> Graph:
    """Read ``from<TAB>to<TAB>weight`` lines; ``#`` comments and blank lines are skipped.

    Nodes are numbered in order of first appearance.  Duplicate edges are kept.
    """
    g = Graph()
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = line.rstrip("\r\n").split("\t")
        if len(parts) != 3:
            raise ParseError(f"expected 3 tab-separated fields, got {len(parts)}", lineno)
        u, v, w = (p.strip() for p in parts)
        if not u or not v:
            raise ParseError("empty node name", lineno)
        try:
            weight = float(w)
        except ValueError:
            raise ParseError(f"weight {w!r} is not a number", lineno) from None
        if math.isnan(weight):
            raise ParseError("weight is nan", lineno)
        g.add_edge(u, v, weight)
    return g


def lower_graph(g: Graph, s: Semiring, weight=None) -> Matrix:
    """Adjacency matrix of ``g`` over ``s``.

    Absent edges are the semiring zero, parallel edges are combined with
    ``(+)``, self-loops are kept.  ``weight`` optionally maps an edge weight
    to the element used (e.g. a constant unity for reachability).
    """
    n = len(g.nodes)
    if n == 0:
        raise ParseError("graph has no nodes")
    data = [s.zero] * (n * n)
    for u, v, w in g.edges:
        k = g.index(u) * n + g.index(v)
        value = s.coerce(weight(w) if weight else w)
        data[k] = s.raw_add(data[k], value)
    return Matrix(s, n, n, data, check=False)

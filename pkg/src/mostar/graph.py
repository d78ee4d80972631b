"""Immutable simple undirected graphs stored as adjacency bit rows.

Vertices are the indices 0..n-1.  Row i is an integer whose bit j is set
iff ij is an edge, so neighborhood operations are single word-parallel
integer operations regardless of order.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import MalformedRecord, OutOfRange, SelfLoop

# Hard cap on the order of any constructed graph.  Enumeration, certificates
# and short-form graph6 are further capped at 62 (see their modules); larger
# graphs exist only to serve witness constructions for large target values.
MAX_VERTICES = 5000

# graph6 short form / certificate / enumeration limit.
SHORT_FORM_MAX = 62


class Graph:
    """A simple undirected graph on vertices 0..n-1, immutable after build."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: tuple[int, ...]):
        self.n = n
        self.rows = rows

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and (self.rows[u] >> v) & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    yield (u, v)
                r >>= 1
                v += 1

    def neighbors(self, v: int) -> Iterator[int]:
        r = self.rows[v]
        while r:
            b = r & -r
            yield b.bit_length() - 1
            r ^= b

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex i renamed perm[i]."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise OutOfRange(f"not a permutation of 0..{self.n - 1}: {perm}")
        rows = [0] * self.n
        for i, r in enumerate(self.rows):
            nr = 0
            while r:
                b = r & -r
                nr |= 1 << perm[b.bit_length() - 1]
                r ^= b
            rows[perm[i]] = nr
        return Graph(self.n, tuple(rows))

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = 1
        frontier = 1
        full = (1 << self.n) - 1
        while frontier:
            acc = 0
            while frontier:
                b = frontier & -frontier
                acc |= self.rows[b.bit_length() - 1]
                frontier ^= b
            frontier = acc & ~seen
            seen |= frontier
        return seen == full

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_rows(rows: Iterable[int]) -> Graph:
    """Wrap prevalidated adjacency rows (internal constructor helper)."""
    rows = tuple(rows)
    return Graph(len(rows), rows)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates collapse, order is ignored.

    Raises OutOfRange for a bad order or vertex index and SelfLoop for a
    pair (i, i).
    """
    if not 1 <= n <= MAX_VERTICES:
        raise OutOfRange(f"vertex count {n} not in 1..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def parse_edge_list(text: str) -> list[Graph]:
    """Parse edge-list text: each record is a line "n <count>" followed by
    one "u v" line per edge.  Several records may follow each other."""
    graphs: list[Graph] = []
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                graphs.append(build_graph(n, edges))
            if len(parts) != 2:
                raise MalformedRecord(f"line {lineno}: expected 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise MalformedRecord(f"line {lineno}: bad vertex count {parts[1]!r}")
            edges = []
            continue
        if n is None:
            raise MalformedRecord(f"line {lineno}: edge before any 'n <count>' header")
        if len(parts) != 2:
            raise MalformedRecord(f"line {lineno}: expected 'u v'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise MalformedRecord(f"line {lineno}: bad edge {line!r}")
    if n is not None:
        graphs.append(build_graph(n, edges))
    return graphs


def format_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list for a single graph."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"

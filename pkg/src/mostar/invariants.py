"""Distance-based invariants and structural predicates on connected graphs."""

from __future__ import annotations

from dataclasses import dataclass

from . import bfs
from .errors import Disconnected, NotAnEdge
from .graph import Graph

#: Sentinel used in distance matrices for vertex pairs in different components.
UNREACHABLE = -1


@dataclass(frozen=True)
class EdgeReport:
    """Breakdown of one edge's contribution to the Mostar index."""

    u: int
    v: int
    n_u: int   # vertices strictly closer to u
    n_v: int   # vertices strictly closer to v
    eq: int    # equidistant vertices
    phi: int   # |n_u - n_v|


@dataclass(frozen=True)
class StructuralProfile:
    degree_sequence: tuple[int, ...]  # non-increasing
    min_degree: int
    max_degree: int
    is_connected: bool
    is_tree: bool
    is_regular: bool
    is_chemical: bool
    is_bipartite: bool
    has_pendant_vertex: bool
    has_triangle: bool
    diameter: int | None              # None when disconnected
    bridges: tuple[tuple[int, int], ...]
    cut_vertices: tuple[int, ...]
    is_two_connected: bool
    is_two_edge_connected: bool


def distances(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All-pairs hop counts; UNREACHABLE marks cross-component entries."""
    return tuple(tuple(bfs.distance_row(g, s)) for s in range(g.n))


def transmissions(g: Graph) -> list[int]:
    """Tr(v) = sum of distances from v to every vertex, for each v."""
    trans, _, ok = bfs.transmissions_ecc(g)
    if not ok:
        raise Disconnected("transmissions are defined for connected graphs only")
    return trans


def wiener_index(g: Graph) -> int:
    """Half the transmission sum, i.e. the sum of all pairwise distances."""
    return sum(transmissions(g)) // 2


def mostar_index(g: Graph) -> int:
    """Sum over edges of |n_u - n_v|."""
    mo, ok = bfs.mostar_value(g)
    if not ok:
        raise Disconnected("the Mostar index is defined for connected graphs only")
    return mo


def edge_report(g: Graph, u: int, v: int) -> EdgeReport:
    """Closer/equidistant counts for edge uv, from the two distance rows."""
    if not g.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    du = bfs.distance_row(g, u)
    dv = bfs.distance_row(g, v)
    if UNREACHABLE in du:
        raise Disconnected("edge reports are defined for connected graphs only")
    n_u = n_v = eq = 0
    for x in range(g.n):
        if du[x] < dv[x]:
            n_u += 1
        elif dv[x] < du[x]:
            n_v += 1
        else:
            eq += 1
    return EdgeReport(u, v, n_u, n_v, eq, abs(n_u - n_v))


def is_distance_balanced(g: Graph) -> bool:
    """True iff every edge contributes zero, i.e. Mo(G) = 0."""
    return mostar_index(g) == 0


def transmission_band(g: Graph) -> tuple[tuple[int, ...], bool]:
    """Distinct transmissions sorted, plus a flag for 'exactly {k, k+1}'."""
    values = tuple(sorted(set(transmissions(g))))
    flag = len(values) == 2 and values[1] == values[0] + 1
    return values, flag


def _bridges_and_cut_vertices(g: Graph):
    """Iterative low-link traversal; works per component."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges: list[tuple[int, int]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack = [(root, -1, g.neighbors(root))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, g.neighbors(w)))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.append((min(parent, v), max(parent, v)))
                if parent != root and low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children >= 2:
            cuts.add(root)
    return tuple(sorted(bridges)), tuple(sorted(cuts))


def _is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _has_triangle(g: Graph) -> bool:
    for u, v in g.edges():
        if g.rows[u] & g.rows[v]:
            return True
    return False


def structural_profile(g: Graph) -> StructuralProfile:
    degs = g.degrees()
    _, ecc, connected = bfs.transmissions_ecc(g)
    bridges, cuts = _bridges_and_cut_vertices(g)
    m = sum(degs) // 2
    return StructuralProfile(
        degree_sequence=tuple(sorted(degs, reverse=True)),
        min_degree=min(degs),
        max_degree=max(degs),
        is_connected=connected,
        is_tree=connected and m == g.n - 1,
        is_regular=min(degs) == max(degs),
        is_chemical=connected and max(degs) <= 4,
        is_bipartite=_is_bipartite(g),
        has_pendant_vertex=1 in degs,
        has_triangle=_has_triangle(g),
        diameter=max(ecc) if connected else None,
        bridges=bridges,
        cut_vertices=cuts,
        is_two_connected=connected and g.n >= 3 and not cuts,
        is_two_edge_connected=connected and g.n >= 2 and not bridges,
    )

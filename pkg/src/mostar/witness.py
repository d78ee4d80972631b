"""Certified witness graphs realizing prescribed Mostar index values.

Every constructor recomputes the index of the graph it built and refuses to
return a plan whose certified value disagrees with the promise; plans are
used as ground truth downstream, so a mismatch is a hard error.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import (
    BadParams,
    CertificationFailure,
    NotRealizable,
    OddTarget,
    OutOfRange,
    UnknownRealizability,
)
from .families import cycle, path, starlike
from .graph import MAX_VERTICES, Graph
from .invariants import mostar_index

# Family tags used in witness plans.
CYCLE = "CYCLE"
PATH = "PATH"
COMPLETE_PLUS_PENDANT = "COMPLETE_PLUS_PENDANT"
EVEN_CYCLE_PLUS_PENDANT = "EVEN_CYCLE_PLUS_PENDANT"
ODD_CYCLE_PENDANT_CHORD = "ODD_CYCLE_PENDANT_CHORD"
THREE_LAYER = "THREE_LAYER"
LAYERED_EVEN = "LAYERED_EVEN"
TREE_PATH = "TREE_PATH"
TREE_STARLIKE = "TREE_STARLIKE"
ODD_CYCLE_ONE_PENDANT = "ODD_CYCLE_ONE_PENDANT"
ODD_CYCLE_TWO_PENDANTS = "ODD_CYCLE_TWO_PENDANTS"
CYCLE_TRIANGLE_SHARED = "CYCLE_TRIANGLE_SHARED"

FAMILY_TAGS = (
    CYCLE,
    PATH,
    COMPLETE_PLUS_PENDANT,
    EVEN_CYCLE_PLUS_PENDANT,
    ODD_CYCLE_PENDANT_CHORD,
    THREE_LAYER,
    LAYERED_EVEN,
    TREE_PATH,
    TREE_STARLIKE,
    ODD_CYCLE_ONE_PENDANT,
    ODD_CYCLE_TWO_PENDANTS,
    CYCLE_TRIANGLE_SHARED,
)


@dataclass(frozen=True)
class WitnessPlan:
    """A construction recipe plus the index value recomputed from the graph."""

    target: int
    family: str
    params: tuple[int, ...]
    graph: Graph
    certified_mo: int


def _certify(target: int, family: str, params: tuple[int, ...], g: Graph) -> WitnessPlan:
    mo = mostar_index(g)
    if mo != target:
        raise CertificationFailure(
            f"{family}{params} promised Mo = {target} but recomputation gives {mo}"
        )
    return WitnessPlan(target, family, params, g, mo)


def _check_order(n: int) -> None:
    if n > MAX_VERTICES:
        raise OutOfRange(f"witness graph would need {n} > {MAX_VERTICES} vertices")


def _complete_plus_pendant(m: int) -> Graph:
    """K_{m+1} with one pendant vertex attached at vertex 0."""
    n = m + 2
    _check_order(n)
    full = (1 << (m + 1)) - 1
    rows = [full ^ (1 << i) for i in range(m + 1)] + [1]
    rows[0] |= 1 << (m + 1)
    return Graph(n, tuple(rows))


def _cycle_plus_pendant(c: int) -> Graph:
    """C_c with one pendant vertex attached at vertex 0."""
    n = c + 1
    _check_order(n)
    rows = [0] * n
    for i in range(c):
        j = (i + 1) % c
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    rows[0] |= 1 << c
    rows[c] = 1
    return Graph(n, tuple(rows))


def _odd_cycle_pendant_chord(m: int) -> Graph:
    """C_{2m+1} with a pendant on the vertex opposite one edge of an added chord.

    Cycle vertices 0..2m stand for the paper-style labels v_1..v_{2m+1}; the
    pendant hangs off v_{m+1} (index m) and the chord joins v_2 and v_{2m+1}
    (indices 1 and 2m).
    """
    c = 2 * m + 1
    n = c + 1
    _check_order(n)
    rows = [0] * n

    def add(a: int, b: int) -> None:
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    for i in range(c):
        add(i, (i + 1) % c)
    add(m, c)
    add(1, c - 1)
    return Graph(n, tuple(rows))


def three_layer(p: int) -> WitnessPlan:
    """Cycle layer joined to a middle layer joined by a matching to a clique.

    Take C_p, completely join it to an edgeless p-set, remove the perfect
    matching pairing equal indices, then attach a K_p to the edgeless layer
    by a matching of equal indices.  3p vertices; certified value p.
    """
    if p < 3:
        raise BadParams("three_layer needs p >= 3")
    n = 3 * p
    _check_order(n)
    rows = [0] * n

    def add(a: int, b: int) -> None:
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    for i in range(p):
        add(i, (i + 1) % p)
        for j in range(p):
            if j != i:
                add(i, p + j)
        add(p + i, 2 * p + i)
        for j in range(i + 1, p):
            add(2 * p + i, 2 * p + j)
    return _certify(p, THREE_LAYER, (p,), Graph(n, tuple(rows)))


def layered_even(m: int, k: int) -> WitnessPlan:
    """Cyclic arrangement of 2k+1 cliques K_{m+1} and 2k+3 singletons.

    4k+4 levels in total, consecutive levels completely joined, no two
    clique levels adjacent; the clique levels sit at cyclic positions
    {1, 3, ..., 2k+1} and {2k+4, 2k+6, ..., 4k+2}, which leaves exactly two
    singleton-singleton gaps, each contributing m.  Certified value 2m for
    every k, which is the point of the family.
    """
    if m < 0 or k < 1:
        raise BadParams("layered_even needs m >= 0 and k >= 1")
    levels = 4 * k + 4
    big = set(range(1, 2 * k + 2, 2)) | set(range(2 * k + 4, 4 * k + 3, 2))
    sizes = [m + 1 if j in big else 1 for j in range(levels)]
    n = sum(sizes)
    if n > 62:
        raise OutOfRange(f"layered_even({m}, {k}) needs {n} > 62 vertices")
    starts = []
    total = 0
    for s in sizes:
        starts.append(total)
        total += s
    rows = [0] * n

    def add(a: int, b: int) -> None:
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    for j in range(levels):
        members = range(starts[j], starts[j] + sizes[j])
        for a in members:
            for b in members:
                if a < b:
                    add(a, b)
        nj = (j + 1) % levels
        for a in members:
            for b in range(starts[nj], starts[nj] + sizes[nj]):
                add(a, b)
    return _certify(2 * m, LAYERED_EVEN, (m, k), Graph(n, tuple(rows)))


def witness(p: int) -> WitnessPlan:
    """A certified simple connected graph with Mostar index exactly p.

    Dispatch: 0 -> C_3; 2 -> P_3; 3 and 5 -> three-layer graphs; even
    p = 2m >= 4 -> K_{m+1} plus a pendant; p = 4m-1 >= 7 -> C_{2m} plus a
    pendant; p = 4m+1 >= 9 -> odd cycle with pendant and chord.  p = 1 is
    the one non-realizable value.
    """
    if p < 0:
        raise BadParams("witness target must be nonnegative")
    if p == 1:
        raise NotRealizable("no simple connected graph has Mostar index 1")
    if p == 0:
        return _certify(0, CYCLE, (3,), cycle(3))
    if p == 2:
        return _certify(2, PATH, (3,), path(3))
    if p == 3:
        return three_layer(3)
    if p == 5:
        return three_layer(5)
    if p % 2 == 0:
        m = p // 2
        return _certify(p, COMPLETE_PLUS_PENDANT, (m,), _complete_plus_pendant(m))
    if p % 4 == 3:
        m = (p + 1) // 4
        return _certify(p, EVEN_CYCLE_PLUS_PENDANT, (m,), _cycle_plus_pendant(2 * m))
    m = (p - 1) // 4
    return _certify(p, ODD_CYCLE_PENDANT_CHORD, (m,), _odd_cycle_pendant_chord(m))


def tree_witness(p: int) -> WitnessPlan:
    """The canonical tree realizing an even target: P_n or T_n(1, k, n-2-k).

    n is the unique order with floor((n-1)^2/2) <= p < floor(n^2/2); the
    offset k = (p - floor((n-1)^2/2)) / 2 selects the starlike tree.  The
    result always has maximum degree <= 3, hence is a chemical tree.
    """
    if p < 0:
        raise BadParams("tree witness target must be nonnegative")
    if p % 2:
        raise OddTarget(f"{p} is odd; tree Mostar indices are even")
    n0 = isqrt(2 * p)
    n = None
    for cand in range(max(2, n0 - 1), n0 + 3):
        if (cand - 1) ** 2 // 2 <= p < cand**2 // 2:
            n = cand
            break
    if n is None:  # unreachable: the intervals partition the even integers
        raise CertificationFailure(f"no tree order found for target {p}")
    _check_order(n)
    k = (p - (n - 1) ** 2 // 2) // 2
    if k == 0:
        return _certify(p, TREE_PATH, (n,), path(n))
    return _certify(p, TREE_STARLIKE, (n, k), starlike(n, (1, k, n - 2 - k)))


def _odd_cycle_one_pendant(t: int) -> Graph:
    return _cycle_plus_pendant(2 * t + 1)


def _odd_cycle_two_pendants(t: int) -> Graph:
    """C_{2t+1} with two pendant vertices on one cycle vertex."""
    c = 2 * t + 1
    n = c + 2
    _check_order(n)
    rows = [0] * n
    for i in range(c):
        j = (i + 1) % c
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    for pend in (c, c + 1):
        rows[0] |= 1 << pend
        rows[pend] = 1
    return Graph(n, tuple(rows))


def _cycle_triangle_shared(s: int) -> Graph:
    """C_{2s} sharing vertex 0 with a triangle on two extra vertices."""
    c = 2 * s
    n = c + 2
    _check_order(n)
    rows = [0] * n

    def add(a: int, b: int) -> None:
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    for i in range(c):
        add(i, (i + 1) % c)
    add(0, c)
    add(0, c + 1)
    add(c, c + 1)
    return Graph(n, tuple(rows))


def alternative_even_witness(p: int) -> WitnessPlan:
    """Sparser even-value witnesses built from cycles, dispatched on p mod 8.

    p = 4t (t >= 1): odd cycle C_{2t+1} plus one pendant; p = 8t+2 (t >= 1):
    odd cycle with two pendants on one vertex; p = 8s-2 (s >= 2): even cycle
    C_{2s} sharing a vertex with a triangle.  All have maximum degree <= 4.
    """
    if p < 4 or p % 2:
        raise BadParams("alternative even witnesses need even p >= 4")
    if p % 4 == 0:
        t = p // 4
        return _certify(p, ODD_CYCLE_ONE_PENDANT, (t,), _odd_cycle_one_pendant(t))
    if p % 8 == 2:
        if p < 10:
            raise BadParams("two-pendant family needs p >= 10")
        t = (p - 2) // 8
        return _certify(p, ODD_CYCLE_TWO_PENDANTS, (t,), _odd_cycle_two_pendants(t))
    # p % 8 == 6
    if p < 14:
        raise BadParams("cycle-triangle family needs p >= 14")
    s = (p + 2) // 8
    return _certify(p, CYCLE_TRIANGLE_SHARED, (s,), _cycle_triangle_shared(s))


def chemical_witness(p: int) -> WitnessPlan:
    """A certified witness with maximum degree <= 4, when one is known.

    Even targets use chemical trees; odd targets >= 7 reuse the cycle-based
    witnesses (maximum degree 3); p = 3 is realized by the 9-vertex
    three-layer graph.  p = 5 stays open and raises UnknownRealizability.
    """
    if p < 0:
        raise BadParams("witness target must be nonnegative")
    if p == 1:
        raise NotRealizable("no simple connected graph has Mostar index 1")
    if p == 5:
        raise UnknownRealizability(
            "whether 5 is realizable by a chemical graph is an open question"
        )
    if p == 3:
        return three_layer(3)
    if p % 2 == 0:
        return tree_witness(p)
    return witness(p)

"""Constructors for named graph families, built directly as bit rows."""

from __future__ import annotations

from typing import Iterable

from .errors import BadParams, OutOfRange
from .graph import MAX_VERTICES, Graph

FAMILY_KINDS = (
    "path",
    "cycle",
    "complete",
    "star",
    "complete_bipartite",
    "cocktail_party",
    "split",
)


def _check_order(n: int) -> None:
    if n > MAX_VERTICES:
        raise OutOfRange(f"order {n} exceeds the {MAX_VERTICES}-vertex cap")


def path(n: int) -> Graph:
    if n < 1:
        raise BadParams("path needs n >= 1")
    _check_order(n)
    rows = [0] * n
    for i in range(n - 1):
        rows[i] |= 1 << (i + 1)
        rows[i + 1] |= 1 << i
    return Graph(n, tuple(rows))


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    _check_order(n)
    rows = [0] * n
    for i in range(n):
        j = (i + 1) % n
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParams("complete needs n >= 1")
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def star(n: int) -> Graph:
    """S_n = K_{1,n-1}, center at vertex 0."""
    if n < 2:
        raise BadParams("star needs n >= 2")
    _check_order(n)
    leaves = ((1 << n) - 1) ^ 1
    rows = [leaves] + [1] * (n - 1)
    return Graph(n, tuple(rows))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-side on vertices 0..a-1."""
    if a < 1 or b < 1:
        raise BadParams("complete_bipartite needs a, b >= 1")
    n = a + b
    _check_order(n)
    amask = (1 << a) - 1
    bmask = ((1 << n) - 1) ^ amask
    rows = [bmask] * a + [amask] * b
    return Graph(n, tuple(rows))


def cocktail_party(n: int) -> Graph:
    """K_n minus the perfect matching (2i, 2i+1); n even, n >= 4."""
    if n < 4 or n % 2:
        raise BadParams("cocktail_party needs even n >= 4")
    _check_order(n)
    full = (1 << n) - 1
    rows = []
    for i in range(n):
        partner = i ^ 1
        rows.append(full ^ (1 << i) ^ (1 << partner))
    return Graph(n, tuple(rows))


def split(a: int, b: int) -> Graph:
    """K_a completely joined to an edgeless set of b vertices."""
    if a < 1 or b < 1:
        raise BadParams("split needs a, b >= 1")
    n = a + b
    _check_order(n)
    full = (1 << n) - 1
    amask = (1 << a) - 1
    rows = [full ^ (1 << i) for i in range(a)] + [amask] * b
    return Graph(n, tuple(rows))


def starlike(n: int, lengths: Iterable[int]) -> Graph:
    """Starlike tree T_n(k_1, ..., k_t): t >= 3 paths hung off one center."""
    lengths = list(lengths)
    if len(lengths) < 3:
        raise BadParams("starlike needs at least 3 path lengths")
    if any(k < 1 for k in lengths):
        raise BadParams("starlike path lengths must be >= 1")
    if sum(lengths) != n - 1:
        raise BadParams(f"path lengths must sum to n-1 = {n - 1}")
    _check_order(n)
    rows = [0] * n
    nxt = 1
    for k in lengths:
        prev = 0
        for _ in range(k):
            rows[prev] |= 1 << nxt
            rows[nxt] |= 1 << prev
            prev = nxt
            nxt += 1
    return Graph(n, tuple(rows))


def family(kind: str, *params: int) -> Graph:
    """Dispatch on a family name; see FAMILY_KINDS."""
    builders = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "star": star,
        "complete_bipartite": complete_bipartite,
        "cocktail_party": cocktail_party,
        "split": split,
    }
    if kind not in builders:
        raise BadParams(f"unknown family {kind!r}; expected one of {FAMILY_KINDS}")
    try:
        return builders[kind](*params)
    except TypeError:
        raise BadParams(f"wrong parameter count for family {kind!r}: {params}")

"""Isomorph-free exhaustive generation of connected graphs of small order.

Level-by-level vertex augmentation: every connected graph on n vertices
arises from a connected graph on n-1 vertices (each connected graph keeps
at least two non-cut vertices, e.g. the leaves of any spanning tree), so
each level extends the previous one by a new vertex joined to every
nonempty subset of the old vertices, canonicalizes, and deduplicates.
Levels are cached per process; emission order is sorted by certificate, so
results do not depend on the worker count.
"""

from __future__ import annotations

import multiprocessing
import os
from typing import Iterator

from .canon import _rows_to_certificate, canonical_rows, certificate_to_graph
from .errors import OutOfRange
from .graph import Graph

#: Orders above this are out of desk scale for exhaustive generation.
GENERATE_MAX = 10

#: Connected-graph census (OEIS A001349) used as a self-check after each level.
CONNECTED_COUNTS = {
    1: 1,
    2: 1,
    3: 2,
    4: 6,
    5: 21,
    6: 112,
    7: 853,
    8: 11117,
    9: 261080,
    10: 11716571,
}

_levels: dict[int, list[bytes]] = {}

# parents per chunk when fanning a level extension out to workers
_CHUNK = 256
_PARALLEL_THRESHOLD = 600


def _extend_chunk(parents: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """Canonical forms of all one-vertex extensions of the given parents."""
    out: set[tuple[int, ...]] = set()
    add = out.add
    for rows in parents:
        k = len(rows)
        newbit = 1 << k
        for s in range(1, newbit):
            child = []
            ss = s
            for i in range(k):
                child.append(rows[i] | newbit if ss & 1 else rows[i])
                ss >>= 1
            child.append(s)
            add(canonical_rows(k + 1, tuple(child)))
    return out


def default_threads() -> int:
    return min(os.cpu_count() or 1, 8)


def _build_level(n: int, threads: int) -> list[bytes]:
    parents = [certificate_to_graph(c).rows for c in _level(n - 1, threads)]
    canonical: set[tuple[int, ...]] = set()
    if threads > 1 and len(parents) >= _PARALLEL_THRESHOLD:
        chunks = [parents[i : i + _CHUNK] for i in range(0, len(parents), _CHUNK)]
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(threads) as pool:
            for part in pool.imap_unordered(_extend_chunk, chunks):
                canonical |= part
    else:
        canonical = _extend_chunk(parents)
    certs = sorted(_rows_to_certificate(n, rows) for rows in canonical)
    if n in CONNECTED_COUNTS and len(certs) != CONNECTED_COUNTS[n]:
        raise AssertionError(
            f"level {n} produced {len(certs)} classes, census says {CONNECTED_COUNTS[n]}"
        )
    return certs


def _level(n: int, threads: int) -> list[bytes]:
    cached = _levels.get(n)
    if cached is None:
        if n == 1:
            cached = [bytes([1])]
        else:
            cached = _build_level(n, threads)
        _levels[n] = cached
    return cached


def connected_certificates(n: int, threads: int | None = None) -> list[bytes]:
    """Sorted certificates of every connected graph of order n (1 <= n <= 10)."""
    if not 1 <= n <= GENERATE_MAX:
        raise OutOfRange(f"generation supports orders 1..{GENERATE_MAX}, got {n}")
    return _level(n, default_threads() if threads is None else max(1, threads))


def generate_connected(n: int, threads: int | None = None) -> Iterator[Graph]:
    """Every isomorphism class of connected graphs of order n, exactly once.

    Deterministic emission, sorted by certificate.
    """
    for cert in connected_certificates(n, threads):
        yield certificate_to_graph(cert)


def _reset_cache() -> None:
    """Drop cached levels (test hook for timing fresh runs)."""
    _levels.clear()

"""Aggregate Mostar statistics over graph streams."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import EmptyStream, MixedOrder, OutOfRange
from .generate import GENERATE_MAX, generate_connected
from .graph import Graph
from .invariants import mostar_index


def pick_mode(counts: dict[int, int]) -> tuple[int, int]:
    """Most frequent value; ties break toward the largest value."""
    best_value = None
    best_count = -1
    for value, count in counts.items():
        if count > best_count or (count == best_count and value > best_value):
            best_value = value
            best_count = count
    return best_value, best_count


def render_3dp(num: int, den: int) -> str:
    """Exact decimal rendering to 3 places, rounding half away from zero."""
    sign = "-" if num < 0 else ""
    num = abs(num)
    scaled = (2000 * num + den) // (2 * den)
    return f"{sign}{scaled // 1000}.{scaled % 1000:03d}"


@dataclass(frozen=True)
class Histogram:
    """Value -> count map for one order, with parity-restricted views."""

    n: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def parity_counts(self, parity: int) -> dict[int, int]:
        return {v: c for v, c in self.counts.items() if v % 2 == parity}

    def parity_peak(self, parity: int) -> tuple[int, int] | None:
        sub = self.parity_counts(parity)
        return pick_mode(sub) if sub else None

    def parity_range(self, parity: int) -> tuple[int, int] | None:
        sub = self.parity_counts(parity)
        return (min(sub), max(sub)) if sub else None


@dataclass(frozen=True)
class StatsRow:
    """Per-order aggregates in the shape of the census statistics table."""

    n: int
    count: int
    min_value: int
    min_mult: int
    max_value: int
    max_mult: int
    mode_value: int
    mode_mult: int
    avg_num: int
    avg_den: int

    @property
    def avg_3dp(self) -> str:
        return render_3dp(self.avg_num, self.avg_den)


def _collect(stream: Iterable[Graph]) -> tuple[int, dict[int, int]]:
    n = None
    counts: dict[int, int] = {}
    for g in stream:
        if n is None:
            n = g.n
        elif g.n != n:
            raise MixedOrder(f"stream mixes orders {n} and {g.n}")
        mo = mostar_index(g)
        counts[mo] = counts.get(mo, 0) + 1
    if n is None:
        raise EmptyStream("no graphs in stream")
    return n, counts


def mo_histogram(stream: Iterable[Graph]) -> Histogram:
    n, counts = _collect(stream)
    return Histogram(n, counts)


def merge_histograms(a: Histogram, b: Histogram) -> Histogram:
    if a.n != b.n:
        raise MixedOrder(f"cannot merge histograms for orders {a.n} and {b.n}")
    counts = dict(a.counts)
    for v, c in b.counts.items():
        counts[v] = counts.get(v, 0) + c
    return Histogram(a.n, counts)


def stats_from_histogram(h: Histogram) -> StatsRow:
    values = sorted(h.counts)
    lo, hi = values[0], values[-1]
    mode_value, mode_mult = pick_mode(h.counts)
    total = h.total
    weighted = sum(v * c for v, c in h.counts.items())
    d = gcd(weighted, total) or 1
    return StatsRow(
        n=h.n,
        count=total,
        min_value=lo,
        min_mult=h.counts[lo],
        max_value=hi,
        max_mult=h.counts[hi],
        mode_value=mode_value,
        mode_mult=mode_mult,
        avg_num=weighted // d,
        avg_den=total // d,
    )


def stats_row(stream: Iterable[Graph]) -> StatsRow:
    return stats_from_histogram(mo_histogram(stream))


# Derived per-order histograms are deterministic; cache them per process so
# that table reproduction and realizer queries do not re-sweep the census.
_order_histograms: dict[int, Histogram] = {}


def order_histogram(n: int, threads: int | None = None) -> Histogram:
    """Histogram of Mostar values over all connected graphs of order n."""
    h = _order_histograms.get(n)
    if h is None:
        h = mo_histogram(generate_connected(n, threads))
        _order_histograms[n] = h
    return h


def realizer_table(
    n_max: int, mo_max: int, threads: int | None = None
) -> dict[tuple[int, int], int]:
    """Counts of connected order-n graphs with Mo = p, for the table view.

    Keys (p, n) cover 2 <= p <= mo_max, 3 <= n <= n_max, zeros included.
    """
    if not 3 <= n_max <= GENERATE_MAX:
        raise OutOfRange(f"n_max must be in 3..{GENERATE_MAX}")
    if mo_max < 2:
        raise OutOfRange("mo_max must be at least 2")
    table: dict[tuple[int, int], int] = {}
    for n in range(3, n_max + 1):
        counts = order_histogram(n, threads).counts
        for p in range(2, mo_max + 1):
            table[(p, n)] = counts.get(p, 0)
    return table


def first_realizer_order(
    p: int, n_max: int, threads: int | None = None
) -> int | None:
    """Least order n <= n_max realizing Mo = p, or None when none exists."""
    if p < 2:
        raise OutOfRange("realizer queries start at p = 2")
    if not 1 <= n_max <= GENERATE_MAX:
        raise OutOfRange(f"n_max must be in 1..{GENERATE_MAX}")
    for n in range(1, n_max + 1):
        if order_histogram(n, threads).counts.get(p, 0):
            return n
    return None

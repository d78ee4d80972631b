"""Verification suites: scan the census and count counterexamples.

Suites report, they do not prove.  Claims carry a `proved` flag: a
counterexample to a proved lemma means an implementation bug and fails the
run downstream, while a counterexample to an open conjecture would be a
reported finding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_certificate
from .errors import UnknownSuite
from .families import complete_bipartite, path, split, star, starlike
from .generate import generate_connected
from .graph import Graph
from .graph6 import encode_graph6
from .invariants import (
    mostar_index,
    structural_profile,
    transmission_band,
    transmissions,
)

SUITES = (
    "trees",
    "small_gap",
    "two_connectivity",
    "transmissions",
    "conjectures",
    "formulas",
)

DEFAULT_N_MAX = 9


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    population: int
    counterexamples: int
    first_counterexample: str | None
    proved: bool


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    n_max: int
    claims: tuple[ClaimResult, ...]

    @property
    def ok(self) -> bool:
        """No counterexamples among claims that are proved facts."""
        return all(c.counterexamples == 0 for c in self.claims if c.proved)


class _Tally:
    def __init__(self, claim: str, proved: bool):
        self.claim = claim
        self.proved = proved
        self.population = 0
        self.counterexamples = 0
        self.first: str | None = None

    def check(self, holds: bool, g: Graph | None = None) -> None:
        self.population += 1
        if not holds:
            self.counterexamples += 1
            if self.first is None and g is not None:
                self.first = encode_graph6(g)

    def result(self) -> ClaimResult:
        return ClaimResult(
            self.claim, self.population, self.counterexamples, self.first, self.proved
        )


def _suite_trees(n_max: int, threads) -> list[ClaimResult]:
    parity = _Tally("tree_mo_even", proved=True)
    bounds = _Tally("tree_bounds", proved=True)
    path_min = _Tally("path_unique_minimum", proved=True)
    star_max = _Tally("star_unique_maximum", proved=True)
    small_vals = _Tally("starlike_kth_smallest", proved=True)
    for n in range(1, n_max + 1):
        lower = (n - 1) ** 2 // 2
        upper = (n - 1) * (n - 2)
        path_cert = canonical_certificate(path(n))
        star_cert = canonical_certificate(star(n)) if n >= 2 else None
        tree_values: set[int] = set()
        for g in generate_connected(n, threads):
            if g.m != n - 1:
                continue
            mo = mostar_index(g)
            tree_values.add(mo)
            parity.check(mo % 2 == 0, g)
            if n > 3:
                bounds.check(lower <= mo <= upper, g)
                cert = canonical_certificate(g)
                path_min.check((mo == lower) == (cert == path_cert), g)
                star_max.check((mo == upper) == (cert == star_cert), g)
        if n >= 4:
            distinct = sorted(tree_values)
            for k in range(1, (n - 2) // 2 + 1):
                expected = lower + 2 * k
                built = mostar_index(starlike(n, (1, k, n - 2 - k)))
                small_vals.check(
                    k < len(distinct) and distinct[k] == expected and built == expected
                )
    return [t.result() for t in (parity, bounds, path_min, star_max, small_vals)]


def _suite_small_gap(n_max: int, threads) -> list[ClaimResult]:
    no_one = _Tally("no_mo_1", proved=True)
    no_small = _Tally("no_mo_135_order_le_6", proved=True)
    pendant7 = _Tally("no_mo_135_order_7_with_pendant", proved=True)
    for n in range(1, n_max + 1):
        for g in generate_connected(n, threads):
            mo = mostar_index(g)
            no_one.check(mo != 1, g)
            if n <= 6:
                no_small.check(mo not in (1, 3, 5), g)
            elif n == 7 and 1 in g.degrees():
                pendant7.check(mo not in (1, 3, 5), g)
    return [t.result() for t in (no_one, no_small, pendant7)]


def _suite_two_connectivity(n_max: int, threads) -> list[ClaimResult]:
    tally = _Tally("mo_135_no_bridge_no_cut_vertex", proved=True)
    for n in range(3, n_max + 1):
        for g in generate_connected(n, threads):
            if mostar_index(g) in (1, 3, 5):
                prof = structural_profile(g)
                tally.check(not prof.bridges and not prof.cut_vertices, g)
    return [tally.result()]


def _suite_transmissions(n_max: int, threads) -> list[ClaimResult]:
    contrib = _Tally("mo3_contributions_in_01", proved=True)
    band = _Tally("mo3_two_consecutive_transmissions", proved=True)
    for n in range(3, n_max + 1):
        for g in generate_connected(n, threads):
            if mostar_index(g) != 3:
                continue
            tr = transmissions(g)
            contrib.check(
                all(abs(tr[u] - tr[v]) <= 1 for u, v in g.edges()), g
            )
            band.check(transmission_band(g)[1], g)
    return [contrib.result(), band.result()]


def _suite_conjectures(n_max: int, threads) -> list[ClaimResult]:
    regular = _Tally("regular_mo_even", proved=False)
    degrees34 = _Tally("mo3_degrees_exactly_34", proved=False)
    triangle = _Tally("mo35_contains_triangle", proved=False)
    for n in range(1, n_max + 1):
        for g in generate_connected(n, threads):
            degs = g.degrees()
            is_regular = min(degs) == max(degs)
            mo = None
            if is_regular:
                mo = mostar_index(g)
                regular.check(mo % 2 == 0, g)
            if n >= 3:
                if mo is None:
                    mo = mostar_index(g)
                if mo == 3:
                    degrees34.check(set(degs) == {3, 4}, g)
                if mo in (3, 5):
                    prof = structural_profile(g)
                    triangle.check(prof.has_triangle, g)
    return [t.result() for t in (regular, degrees34, triangle)]


def _suite_formulas(n_max: int, threads) -> list[ClaimResult]:
    path_f = _Tally("path_closed_form", proved=True)
    star_f = _Tally("star_closed_form", proved=True)
    split_f = _Tally("split_closed_form", proved=True)
    kab_f = _Tally("complete_bipartite_closed_form", proved=True)
    max_f = _Tally("order_maximum_closed_form", proved=True)
    for n in range(2, max(n_max, 2) + 1):
        path_f.check(mostar_index(path(n)) == (n - 1) ** 2 // 2)
        star_f.check(mostar_index(star(n)) == (n - 1) * (n - 2))
    for a in range(1, 7):
        for b in range(1, 7):
            split_f.check(mostar_index(split(a, b)) == a * b * (b - 1))
    for a in range(1, 8):
        for b in range(1, 8):
            kab_f.check(mostar_index(complete_bipartite(a, b)) == a * b * abs(a - b))
    for n in range(3, n_max + 1):
        best = max(mostar_index(g) for g in generate_connected(n, threads))
        t = n // 3
        max_f.check(best == t * (n - t) * (n - t - 1))
    return [t.result() for t in (path_f, star_f, split_f, kab_f, max_f)]


_SUITE_FUNCS = {
    "trees": _suite_trees,
    "small_gap": _suite_small_gap,
    "two_connectivity": _suite_two_connectivity,
    "transmissions": _suite_transmissions,
    "conjectures": _suite_conjectures,
    "formulas": _suite_formulas,
}


def verify_suite(
    suite: str, n_max: int = DEFAULT_N_MAX, threads: int | None = None
) -> VerificationReport:
    """Run one verification suite over the census up to n_max."""
    func = _SUITE_FUNCS.get(suite)
    if func is None:
        raise UnknownSuite(f"unknown suite {suite!r}; expected one of {SUITES}")
    return VerificationReport(suite, n_max, tuple(func(n_max, threads)))

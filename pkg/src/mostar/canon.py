"""Canonical labeling and isomorphism certificates.

Equitable partition refinement (counts into every cell) followed by
backtracking over the first non-singleton cell, keeping the
lexicographically least relabeled adjacency.  Two prunings keep the search
small on the symmetric graphs that matter here: only one representative is
tried per class of pairwise-interchangeable vertices (a transposition that
fixes the graph), and refinement runs again after every individualization.
"""

from __future__ import annotations

from .errors import MalformedRecord, OutOfRange
from .graph import SHORT_FORM_MAX, Graph


def canonical_rows(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    """Least adjacency-row tuple over all relabelings (complete invariant)."""
    if n == 1:
        return (0,)

    def refine(cells):
        while True:
            masks = []
            for cell in cells:
                m = 0
                for v in cell:
                    m |= 1 << v
                masks.append(m)
            out = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[tuple[int, ...], list[int]] = {}
                for v in cell:
                    rv = rows[v]
                    key = tuple((rv & m).bit_count() for m in masks)
                    g = groups.get(key)
                    if g is None:
                        groups[key] = [v]
                    else:
                        g.append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    for key in sorted(groups):
                        out.append(groups[key])
            cells = out
            if not changed:
                return cells

    best: tuple[int, ...] | None = None

    def visit_leaf(cells):
        nonlocal best
        pos = [0] * n
        for i, cell in enumerate(cells):
            pos[cell[0]] = i
        out = []
        for cell in cells:
            rv = rows[cell[0]]
            nr = 0
            while rv:
                b = rv & -rv
                nr |= 1 << pos[b.bit_length() - 1]
                rv ^= b
            out.append(nr)
        cand = tuple(out)
        if best is None or cand < best:
            best = cand

    def search(cells):
        idx = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                idx = i
                break
        if idx < 0:
            visit_leaf(cells)
            return
        cell = cells[idx]
        # one representative per interchangeability class: u and v can be
        # swapped by an automorphism iff their rows agree off bits {u, v}
        reps: list[int] = []
        for v in cell:
            rv = rows[v]
            bv = 1 << v
            for u in reps:
                if (rows[u] ^ rv) & ~((1 << u) | bv) == 0:
                    break
            else:
                reps.append(v)
        pre = cells[:idx]
        post = cells[idx + 1:]
        for v in reps:
            rest = [u for u in cell if u != v]
            search(refine(pre + [[v], rest] + post))

    search(refine([list(range(n))]))
    assert best is not None
    return best


def _rows_to_certificate(n: int, rows: tuple[int, ...]) -> bytes:
    bits = []
    for j in range(1, n):
        col = rows[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    out = bytearray([n])
    acc = 0
    filled = 0
    for bit in bits:
        acc = (acc << 1) | bit
        filled += 1
        if filled == 8:
            out.append(acc)
            acc = 0
            filled = 0
    if filled:
        out.append(acc << (8 - filled))
    return bytes(out)


def canonical_certificate(g: Graph) -> bytes:
    """Canonical byte string: isomorphic graphs agree, non-isomorphic differ.

    Format: one order byte, then the canonical adjacency upper triangle in
    column order, packed most-significant-bit first.
    """
    if g.n > SHORT_FORM_MAX:
        raise OutOfRange(f"certificates are limited to {SHORT_FORM_MAX} vertices")
    return _rows_to_certificate(g.n, canonical_rows(g.n, g.rows))


def certificate_to_graph(cert: bytes) -> Graph:
    """Rebuild the canonical representative graph from a certificate."""
    if not cert:
        raise MalformedRecord("empty certificate")
    n = cert[0]
    if not 1 <= n <= SHORT_FORM_MAX:
        raise MalformedRecord(f"certificate order byte {n} out of range")
    nbits = n * (n - 1) // 2
    if len(cert) != 1 + (nbits + 7) // 8:
        raise MalformedRecord("certificate length does not match its order")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = cert[1 + (k >> 3)]
            if (byte >> (7 - (k & 7))) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))

"""Breadth-first kernels over packed bit rows.

All distance work in the package funnels through here.  The hot kernels are
JIT-compiled with numba when it is importable (direction-optimizing BFS so
that dense thousand-vertex graphs and long cycles are both cheap); a pure
Python implementation of the same arithmetic is kept as a fallback and can
be forced with MOSTAR_PURE_PYTHON=1 for cross-checking.
"""

from __future__ import annotations

import os

from .graph import Graph

_FORCE_PURE = os.environ.get("MOSTAR_PURE_PYTHON", "") not in ("", "0")
_kernels = None  # populated lazily by _load_kernels()


def _load_kernels():
    """Compile and cache the numba kernels, or return None when unavailable."""
    global _kernels
    if _kernels is not None:
        return _kernels if _kernels is not False else None
    if _FORCE_PURE:
        _kernels = False
        return None
    try:
        import numpy as np
        from numba import njit, types
        from numba.extending import intrinsic
    except ImportError:
        _kernels = False
        return None

    @intrinsic
    def _ctpop(typingctx, src):
        sig = types.uint64(types.uint64)

        def codegen(context, builder, signature, args):
            return builder.ctpop(args[0])

        return sig, codegen

    @intrinsic
    def _cttz(typingctx, src):
        sig = types.uint64(types.uint64)

        def codegen(context, builder, signature, args):
            from llvmlite import ir

            return builder.cttz(args[0], ir.Constant(ir.IntType(1), 1))

        return sig, codegen

    U0 = np.uint64(0)
    U1 = np.uint64(1)

    @njit(cache=True)
    def trans_ecc(rows, n):
        """Per-vertex (transmission, eccentricity); flag False if disconnected."""
        w = rows.shape[1]
        trans = np.zeros(n, dtype=np.int64)
        ecc = np.zeros(n, dtype=np.int64)
        unvis = np.empty(w, dtype=np.uint64)
        frontier = np.empty(w, dtype=np.uint64)
        acc = np.empty(w, dtype=np.uint64)
        for s in range(n):
            for k in range(w):
                unvis[k] = U0
                frontier[k] = U0
            for v in range(n):
                unvis[v >> 6] |= U1 << np.uint64(v & 63)
            unvis[s >> 6] ^= U1 << np.uint64(s & 63)
            frontier[s >> 6] = U1 << np.uint64(s & 63)
            nfront = 1
            nunvis = n - 1
            tsum = 0
            d = 0
            while nunvis > 0:
                d += 1
                newcnt = 0
                if nfront <= nunvis:
                    # expand the frontier rows
                    for k in range(w):
                        acc[k] = U0
                    for k in range(w):
                        word = frontier[k]
                        base = k << 6
                        while word != U0:
                            b = word & (U0 - word)
                            word ^= b
                            j = base + int(_cttz(b))
                            rj = rows[j]
                            for t in range(w):
                                acc[t] |= rj[t]
                    for k in range(w):
                        nw = acc[k] & unvis[k]
                        frontier[k] = nw
                        unvis[k] ^= nw
                        newcnt += int(_ctpop(nw))
                else:
                    # few unvisited left: test them against the frontier
                    for k in range(w):
                        acc[k] = U0
                    for k in range(w):
                        word = unvis[k]
                        base = k << 6
                        while word != U0:
                            b = word & (U0 - word)
                            word ^= b
                            x = base + int(_cttz(b))
                            rx = rows[x]
                            for t in range(w):
                                if rx[t] & frontier[t] != U0:
                                    acc[k] |= b
                                    newcnt += 1
                                    break
                    for k in range(w):
                        frontier[k] = acc[k]
                        unvis[k] ^= acc[k]
                if newcnt == 0:
                    return trans, ecc, False
                tsum += d * newcnt
                nfront = newcnt
                nunvis -= newcnt
            trans[s] = tsum
            ecc[s] = d
        return trans, ecc, True

    @njit(cache=True)
    def edge_abs_diff_sum(rows, n, vals):
        """Sum over edges uv of |vals[u] - vals[v]|; complement trick when dense."""
        w = rows.shape[1]
        m2 = 0
        for u in range(n):
            for k in range(w):
                m2 += int(_ctpop(rows[u, k]))
        m = m2 // 2
        npairs = n * (n - 1) // 2
        if m <= npairs - m:
            total = 0
            for u in range(n):
                for k in range(w):
                    word = rows[u, k]
                    base = k << 6
                    while word != U0:
                        b = word & (U0 - word)
                        word ^= b
                        v = base + int(_cttz(b))
                        if v > u:
                            diff = vals[u] - vals[v]
                            total += diff if diff >= 0 else -diff
            return total
        # dense: all-pairs sum minus the sum over non-edges
        sv = np.sort(vals)
        allpairs = 0
        for i in range(n):
            allpairs += sv[i] * (2 * i - (n - 1))
        comp = 0
        for u in range(n):
            for k in range(w):
                word = ~rows[u, k]
                if k == w - 1 and (n & 63) != 0:
                    word &= (U1 << np.uint64(n & 63)) - U1
                base = k << 6
                while word != U0:
                    b = word & (U0 - word)
                    word ^= b
                    v = base + int(_cttz(b))
                    if v > u:
                        diff = vals[u] - vals[v]
                        comp += diff if diff >= 0 else -diff
        return allpairs - comp

    def pack(g: Graph):
        n = g.n
        w = (n + 63) >> 6
        nb = w * 8
        buf = b"".join(r.to_bytes(nb, "little") for r in g.rows)
        return np.frombuffer(bytearray(buf), dtype=np.uint64).reshape(n, w)

    def trans_ecc_entry(g: Graph):
        trans, ecc, ok = trans_ecc(pack(g), g.n)
        return [int(t) for t in trans], [int(e) for e in ecc], bool(ok)

    def mostar_entry(g: Graph):
        rows = pack(g)
        trans, _, ok = trans_ecc(rows, g.n)
        if not ok:
            return 0, False
        return int(edge_abs_diff_sum(rows, g.n, trans)), True

    _kernels = (trans_ecc_entry, mostar_entry)
    return _kernels


def _trans_ecc_py(g: Graph):
    n, rows = g.n, g.rows
    full = (1 << n) - 1
    trans = [0] * n
    ecc = [0] * n
    for s in range(n):
        seen = 1 << s
        frontier = seen
        d = 0
        tsum = 0
        while True:
            acc = 0
            f = frontier
            while f:
                b = f & -f
                acc |= rows[b.bit_length() - 1]
                f ^= b
            frontier = acc & ~seen
            if not frontier:
                break
            d += 1
            tsum += d * frontier.bit_count()
            seen |= frontier
        if seen != full:
            return trans, ecc, False
        trans[s] = tsum
        ecc[s] = d
    return trans, ecc, True


def transmissions_ecc(g: Graph) -> tuple[list[int], list[int], bool]:
    """All vertex transmissions and eccentricities; flag False if disconnected."""
    kernels = _load_kernels()
    if kernels is not None:
        return kernels[0](g)
    return _trans_ecc_py(g)


def mostar_value(g: Graph) -> tuple[int, bool]:
    """(Mostar index, connected flag) via per-edge transmission differences.

    For an edge uv the transmission difference satisfies
    Tr(u) - Tr(v) = n_v - n_u, so |n_u - n_v| = |Tr(u) - Tr(v)|.
    """
    kernels = _load_kernels()
    if kernels is not None:
        return kernels[1](g)
    trans, _, ok = _trans_ecc_py(g)
    if not ok:
        return 0, False
    total = 0
    for u, v in g.edges():
        total += abs(trans[u] - trans[v])
    return total, True


def distance_row(g: Graph, s: int) -> list[int]:
    """Hop distances from s to every vertex; -1 marks unreachable vertices."""
    n, rows = g.n, g.rows
    dist = [-1] * n
    dist[s] = 0
    seen = 1 << s
    frontier = seen
    d = 0
    while frontier:
        acc = 0
        f = frontier
        while f:
            b = f & -f
            acc |= rows[b.bit_length() - 1]
            f ^= b
        frontier = acc & ~seen
        seen |= frontier
        d += 1
        f = frontier
        while f:
            b = f & -f
            dist[b.bit_length() - 1] = d
            f ^= b
    return dist

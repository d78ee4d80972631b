"""graph6 text codec.

Short form (order byte chr(n+63), n <= 62) as used for all enumeration
output, plus the standard '~'-prefixed long form so that witness graphs on
more than 62 vertices still serialize to one decodable record.  Bits cover
the upper triangle in column order (0,1), (0,2), (1,2), (0,3), ...; each
6-bit group is emitted as chr(value + 63), zero-padded at the end.
"""

from __future__ import annotations

from .errors import MalformedRecord, OutOfRange
from .graph import MAX_VERTICES, SHORT_FORM_MAX, Graph

HEADER = ">>graph6<<"
_LONG_FORM_MAX = 258047


def encode_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 record (no header, no newline)."""
    n = g.n
    if n <= SHORT_FORM_MAX:
        prefix = chr(n + 63)
    elif n <= _LONG_FORM_MAX:
        prefix = "~" + "".join(
            chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    else:
        raise OutOfRange(f"graph6 cannot encode order {n}")
    # column j of the upper triangle is the low-j bits of row j, read upward
    strips = []
    for j in range(1, n):
        col = g.rows[j] & ((1 << j) - 1)
        strips.append(format(col, f"0{j}b")[::-1])
    bits = "".join(strips)
    if len(bits) % 6:
        bits += "0" * (6 - len(bits) % 6)
    body = "".join(chr(int(bits[i : i + 6], 2) + 63) for i in range(0, len(bits), 6))
    return prefix + body


def decode_graph6(record: str) -> Graph:
    """Decode one graph6 record; tolerates a leading '>>graph6<<' header."""
    s = record.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    if not s:
        raise MalformedRecord("empty graph6 record")
    if s.startswith(":") or s.startswith(";") or s.startswith("&"):
        raise MalformedRecord("sparse6/digraph6 records are not supported")
    if any(not (63 <= ord(c) <= 126) for c in s):
        raise MalformedRecord("graph6 byte outside the range [63, 126]")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise MalformedRecord("8-byte graph6 orders are not supported")
        if len(s) < 4:
            raise MalformedRecord("truncated long-form order")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        data = s[4:]
    else:
        n = ord(s[0]) - 63
        data = s[1:]
    if n == 0:
        raise MalformedRecord("order-0 graph6 record")
    if n > MAX_VERTICES:
        raise OutOfRange(f"graph6 record has order {n} > {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(data) != expected:
        raise MalformedRecord(
            f"graph6 record for order {n} needs {expected} data bytes, got {len(data)}"
        )
    bits = "".join(format(ord(c) - 63, "06b") for c in data)
    if any(b != "0" for b in bits[nbits:]):
        raise MalformedRecord("nonzero padding bits in graph6 record")
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        strip = bits[pos : pos + j]
        pos += j
        col = int(strip[::-1], 2) if strip else 0
        rows[j] |= col
        while col:
            b = col & -col
            rows[b.bit_length() - 1] |= 1 << j
            col ^= b
    return Graph(n, tuple(rows))


def read_graph6_lines(text: str) -> list[Graph]:
    """Decode every nonempty line; a bare '>>graph6<<' header line is skipped."""
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line == HEADER:
            continue
        graphs.append(decode_graph6(line))
    return graphs

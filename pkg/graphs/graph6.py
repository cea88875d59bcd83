"""
graph6 / sparse6 interchange.

graph6 is implemented natively: the upper triangle is emitted column by
column, packed six bits per byte with offset 63. The six-bit packing is the
standard base64 grouping under a different alphabet, so whole bit strings go
through base64 and a byte translation table. sparse6 goes through networkx.
"""

from __future__ import annotations

import base64
import logging

import networkx as nx

from graphs.bits import iter_bits
from graphs.graph import Graph, make_graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = b">>graph6<<"
SPARSE6_HEADER = b">>sparse6<<"

_B64_ALPHABET = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/"
_G6_ALPHABET = bytes(range(63, 127))
_TO_G6 = bytes.maketrans(_B64_ALPHABET, _G6_ALPHABET)
_FROM_G6 = bytes.maketrans(_G6_ALPHABET, _B64_ALPHABET)

MAX_SHORT = 62
MAX_MEDIUM = 258047


class ParseError(ValueError):
    """Malformed graph6 / sparse6 input; offset is the first bad byte."""

    def __init__(self, message: str, offset: int = 0) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise ValueError(f"[graph6] negative vertex count {n}")
    if n <= MAX_SHORT:
        return bytes([n + 63])
    if n <= MAX_MEDIUM:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, header length)."""
    if not data:
        raise ParseError("[graph6] empty input", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise ParseError("[graph6] truncated size field", len(data))
    n = 0
    for b in data[start:start + width]:
        n = (n << 6) | (b - 63)
    return n, start + width


def encode_graph6(g: Graph) -> bytes:
    """graph6 bytes of g, without header or newline."""
    columns = [format(g.rows[j] & ((1 << j) - 1), f"0{j}b")[::-1] for j in range(1, g.n)]
    bits = "".join(columns)
    groups = -(-len(bits) // 6)
    bits += "0" * ((-len(bits)) % 24)
    if not bits:
        return _encode_size(g.n)
    raw = int(bits, 2).to_bytes(len(bits) // 8, "big")
    body = base64.b64encode(raw)[:groups].translate(_TO_G6)
    return _encode_size(g.n) + body


def decode_graph6(data: bytes | str) -> Graph:
    """
    Parse one graph6 record.

    Raises:
        ParseError: on bytes outside 63..126, a truncated size field or a
            body whose length does not match the vertex count.
    """
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    offset = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"[graph6] invalid byte {b!r}", offset + i)
    n, head = _decode_size(data)
    body = data[head:]
    need = -(-(n * (n - 1) // 2) // 6)
    if len(body) != need:
        bad = offset + head + min(len(body), need)
        raise ParseError(f"[graph6] body has {len(body)} bytes, expected {need} for n={n}", bad)
    rows = [0] * n
    if need:
        b64 = body.translate(_FROM_G6)
        b64 += b"A" * ((-len(b64)) % 4)
        raw = base64.b64decode(b64)
        bits = format(int.from_bytes(raw, "big"), f"0{len(raw) * 8}b")
        pos = 0
        for j in range(1, n):
            segment = bits[pos:pos + j]
            pos += j
            if "1" not in segment:
                continue
            col = int(segment[::-1], 2)
            rows[j] |= col
            for i in iter_bits(col):
                rows[i] |= 1 << j
    return Graph(n, tuple(rows))


def encode_sparse6(g: Graph) -> bytes:
    """sparse6 bytes of g (leading ':' included, no header or newline)."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nx.to_sparse6_bytes(nxg, header=False).strip()


def decode_sparse6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(SPARSE6_HEADER):
        data = data[len(SPARSE6_HEADER):]
    if not data.startswith(b":"):
        raise ParseError("[sparse6] missing leading ':'", 0)
    try:
        nxg = nx.from_sparse6_bytes(data)
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise ParseError(f"[sparse6] {e}", 0) from e
    loops = [(u, v) for u, v in nxg.edges() if u == v]
    if loops:
        raise ParseError(f"[sparse6] loop at vertex {loops[0][0]}", 0)
    return make_graph(nxg.number_of_nodes(), nxg.edges())


def decode_graph(data: bytes | str) -> Graph:
    """Decode graph6 or sparse6, chosen by the leading bytes."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(SPARSE6_HEADER) or data.startswith(b":"):
        return decode_sparse6(data)
    if data.startswith(b";") or data.startswith(b"&"):
        raise ParseError("[graph6] directed formats are not supported", 0)
    return decode_graph6(data)

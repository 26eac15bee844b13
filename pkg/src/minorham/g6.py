"""graph6 / sparse6 reading and writing."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph, GraphError, build_graph

G6_HEADER = b">>graph6<<"
S6_HEADER = b">>sparse6<<"


class Graph6Error(ValueError):
    """Malformed graph6/sparse6 input; ``offset`` is the failing byte index."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.message = message
        self.offset = offset


def encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"order {n} too large for graph6")


def _decode_n(data: bytes, pos: int) -> tuple[int, int]:
    def sextets(start: int, count: int) -> int:
        if start + count > len(data):
            raise Graph6Error("truncated order field", len(data))
        val = 0
        for i in range(start, start + count):
            c = data[i]
            if not 63 <= c <= 126:
                raise Graph6Error(f"invalid character {c!r}", i)
            val = (val << 6) | (c - 63)
        return val

    if pos >= len(data):
        raise Graph6Error("missing order field", pos)
    if data[pos] != 126:
        return sextets(pos, 1), pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        return sextets(pos + 2, 6), pos + 8
    return sextets(pos + 1, 3), pos + 4


def _pack(bits: list[int]) -> bytes:
    out = bytearray()
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def _unpack(data: bytes, start: int) -> Iterator[int]:
    for i in range(start, len(data)):
        c = data[i]
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid character {c!r}", i)
        v = c - 63
        for s in range(5, -1, -1):
            yield (v >> s) & 1


def to_graph6(g: Graph, header: bool = False) -> bytes:
    """graph6 text for ``g`` without trailing newline."""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    return (G6_HEADER if header else b"") + encode_n(g.n) + _pack(bits)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    start = len(G6_HEADER) if data.startswith(G6_HEADER) else 0
    n, pos = _decode_n(data, start)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(data) - pos}", min(len(data), pos + need))
    bits = _unpack(data, pos)
    edges = []
    for j in range(1, n):
        for i in range(j):
            if next(bits):
                edges.append((i, j))
    return build_graph(n, edges)


def to_sparse6(g: Graph, header: bool = False) -> bytes:
    n = g.n
    k = 1
    while (1 << k) < n:
        k += 1

    def enc(x: int) -> list[int]:
        return [(x >> (k - 1 - i)) & 1 for i in range(k)]

    bits: list[int] = []
    cur = 0
    for v, u in sorted((max(e), min(e)) for e in g.edges()):
        if v == cur:
            bits += [0] + enc(u)
        elif v == cur + 1:
            cur = v
            bits += [1] + enc(u)
        else:
            cur = v
            bits += [1] + enc(v) + [0] + enc(u)
    pad = (-len(bits)) % 6
    if k < 6 and n == (1 << k) and pad >= k and cur < n - 1:
        # padding of 1s would otherwise decode as an edge into vertex n-1
        bits.append(0)
        pad = (-len(bits)) % 6
    bits += [1] * pad
    return (S6_HEADER if header else b"") + b":" + encode_n(n) + _pack(bits)


def from_sparse6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    start = len(S6_HEADER) if data.startswith(S6_HEADER) else 0
    if start >= len(data) or data[start] != ord(":"):
        raise Graph6Error("sparse6 must start with ':'", start)
    n, pos = _decode_n(data, start + 1)
    k = 1
    while (1 << k) < n:
        k += 1
    bits = list(_unpack(data, pos))
    edges = []
    v = 0
    i = 0
    while i + 1 + k <= len(bits):
        b = bits[i]
        x = 0
        for t in range(k):
            x = (x << 1) | bits[i + 1 + t]
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            edges.append((x, v))
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise Graph6Error(f"sparse6 encodes a non-simple graph: {exc}", pos) from exc


def parse_graph(line: bytes | str) -> Graph:
    """Decode one graph6 or sparse6 line."""
    if isinstance(line, str):
        line = line.encode("ascii")
    s = line.strip()
    if s.startswith(S6_HEADER) or s.startswith(b":"):
        return from_sparse6(s)
    return from_graph6(s)


def read_graphs(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    for line in lines:
        if isinstance(line, str):
            line = line.encode("ascii")
        if line.strip():
            yield parse_graph(line)

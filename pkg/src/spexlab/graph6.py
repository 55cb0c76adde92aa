"""graph6 reading/writing and read-only sparse6.

Only orders up to :data:`spexlab.graph.MAX_ORDER` are accepted, so the
one-byte and ``~``-prefixed three-byte order headers are the only ones that
can decode successfully. Larger headers are parsed and then rejected with
:class:`GraphOrderError`.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import MAX_ORDER, Graph, GraphOrderError

G6_HEADER = ">>graph6<<"
S6_HEADER = ">>sparse6<<"


class Graph6Error(ValueError):
    """Base class for malformed graph6/sparse6 input."""


class Graph6HeaderError(Graph6Error):
    """The order prefix is missing or malformed."""


class Graph6PayloadError(Graph6Error):
    """The edge payload has the wrong length or invalid characters."""


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return ``(n, bytes consumed)``."""
    if not data:
        raise Graph6HeaderError("empty graph6 string")
    if data[0] != 126:
        if data[0] < 63:
            raise Graph6HeaderError(f"invalid order byte {data[0]!r}")
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        body = data[2:8]
        if len(body) < 6:
            raise Graph6HeaderError("truncated 6-byte order header")
        used = 8
    else:
        body = data[1:4]
        if len(body) < 3:
            raise Graph6HeaderError("truncated 3-byte order header")
        used = 4
    n = 0
    for b in body:
        if not 63 <= b <= 126:
            raise Graph6HeaderError(f"invalid order byte {b!r}")
        n = (n << 6) | (b - 63)
    return n, used


def to_graph6(g: Graph) -> str:
    out = [_encode_order(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        rj = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.strip()
        if text.startswith(G6_HEADER):
            text = text[len(G6_HEADER):]
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6PayloadError("non-ASCII character in graph6 string") from exc
    else:
        data = text.strip()
        if data.startswith(G6_HEADER.encode()):
            data = data[len(G6_HEADER):]
    if data.startswith(b":"):
        raise Graph6HeaderError("sparse6 string passed to graph6 reader")
    n, used = _decode_order(data)
    if n > MAX_ORDER:
        raise GraphOrderError(f"order {n} exceeds maximum {MAX_ORDER}")
    payload = data[used:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(payload) < need:
        raise Graph6PayloadError(f"truncated payload: need {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise Graph6PayloadError(f"payload too long: need {need} bytes, got {len(payload)}")
    for b in payload:
        if not 63 <= b <= 126:
            raise Graph6PayloadError(f"invalid payload byte {b!r}")

    def bit_stream():
        for b in payload:
            v = b - 63
            for s in range(5, -1, -1):
                yield v >> s & 1

    stream = bit_stream()
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if next(stream):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def from_sparse6(text: str) -> Graph:
    """Decode a sparse6 line. Multigraph encodings are rejected."""
    text = text.strip()
    if text.startswith(S6_HEADER):
        text = text[len(S6_HEADER):]
    if not text.startswith(":"):
        raise Graph6HeaderError("sparse6 strings start with ':'")
    data = text[1:].encode("ascii")
    n, used = _decode_order(data)
    if n > MAX_ORDER:
        raise GraphOrderError(f"order {n} exceeds maximum {MAX_ORDER}")
    payload = data[used:]
    for b in payload:
        if not 63 <= b <= 126:
            raise Graph6PayloadError(f"invalid payload byte {b!r}")
    k = 1
    while 1 << k < n:
        k += 1

    def fields():
        buf = nbuf = 0
        for b in payload:
            buf = (buf << 6) | (b - 63)
            nbuf += 6
            while True:
                if nbuf < 1 + k:
                    break
                nbuf -= 1
                flag = buf >> nbuf & 1
                nbuf -= k
                x = buf >> nbuf & ((1 << k) - 1)
                buf &= (1 << nbuf) - 1
                yield flag, x

    edges = set()
    v = 0
    for flag, x in fields():
        if flag:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            e = (min(x, v), max(x, v))
            if x == v or e in edges:
                raise Graph6PayloadError("sparse6 loop or multi-edge is not a simple graph")
            edges.add(e)
    return Graph.from_edges(n, sorted(edges))


def parse_graph_line(line: str) -> Graph:
    """Decode one graph6 or sparse6 line."""
    s = line.strip()
    if s.startswith(":") or s.startswith(S6_HEADER):
        return from_sparse6(s)
    return from_graph6(s)


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path) as fh:
        for line in fh:
            if line.strip():
                yield parse_graph_line(line)


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> None:
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")

"""graph6 short-form codec (orders 0..62)."""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph, GraphFormatError


def to_graph6(g: Graph) -> bytes:
    out = bytearray([g.n + 63])
    acc = 0
    filled = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(acc + 63)
                acc = 0
                filled = 0
    if filled:
        out.append((acc << (6 - filled)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record; a trailing newline is tolerated."""
    if isinstance(text, str):
        try:
            text = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise GraphFormatError("non-ASCII character", exc.start) from None
    if text.startswith(b">>graph6<<"):
        text = text[10:]
        base = 10
    else:
        base = 0
    text = text.rstrip(b"\r\n")
    if not text:
        raise GraphFormatError("empty record", base)
    for i, byte in enumerate(text):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte {byte!r} outside the printable graph6 range", base + i)
    n = text[0] - 63
    if n > MAX_VERTICES:
        raise GraphFormatError(f"order header {n} exceeds {MAX_VERTICES} (long form not supported)", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[1:]
    if len(body) != nbytes:
        raise GraphFormatError(
            f"expected {nbytes} edge bytes for n={n}, found {len(body)}",
            base + 1 + min(len(body), nbytes),
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = 6 - nbits % 6
        if (body[-1] - 63) & ((1 << pad) - 1):
            raise GraphFormatError("nonzero padding bits", base + len(body))
    return Graph._trusted(n, tuple(adj))

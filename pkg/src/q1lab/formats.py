"""Edge-list text and graph6 encodings."""
from __future__ import annotations

from pathlib import Path

from q1lab.graph import Graph, GraphError, from_edge_list


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v`` (0-indexed)."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise GraphError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [tuple(int(x) for x in row) for row in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise GraphError("first line must be 'n m'")
    n, m = header
    if len(pairs) != m:
        raise GraphError(f"header announces {m} edges, found {len(pairs)}")
    for pair in pairs:
        if len(pair) != 2:
            raise GraphError(f"edge line must hold two vertices, got {pair}")
    return from_edge_list(n, pairs)


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError("graph6 size field too large")


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphError(f"not a graph6 string: {s!r}")
    if s[0] != "~":
        n, body = ord(s[0]) - 63, s[1:]
    elif len(s) >= 2 and s[1] == "~":
        raise GraphError("graph6 8-byte size field unsupported (n > 258047)")
    else:
        if len(s) < 4:
            raise GraphError("truncated graph6 size field")
        n = 0
        for c in s[1:4]:
            n = (n << 6) | (ord(c) - 63)
        body = s[4:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body length {len(body)} does not fit n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)

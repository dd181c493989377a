"""Immutable simple graphs on at most 64 vertices, stored as neighbour bitsets."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from q1lab import kernels

MAX_VERTICES = 64
CHROMATIC_CAP = 16


class GraphError(ValueError):
    """Invalid graph input or an operation outside the supported envelope."""


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def edge_index(i: int, j: int) -> int:
    """Position of edge {i, j} in the upper-triangle order (0,1),(0,2),(1,2),(0,3),..."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        total = 0
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {u} has a neighbour outside range")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in _bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
            total += row.bit_count()
        object.__setattr__(self, "m", total // 2)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Decode an upper-triangle edge bitmask (see :func:`edge_index`)."""
        adj = [0] * n
        e = 0
        mask = int(mask)
        for j in range(1, n):
            for i in range(j):
                if mask >> e & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                e += 1
        return cls(n, tuple(adj))

    def to_mask(self) -> int:
        mask = 0
        for u, v in self.edges():
            mask |= 1 << edge_index(u, v)
        return mask

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(_bits(self.adj[u]))

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, edges={self.edges()})"


@dataclass(frozen=True)
class DegreeProfile:
    """Sorted degree sequence plus 2-average degrees per original vertex id.

    ``two_avg[i]`` is the mean degree of the neighbours of vertex ``i``, or
    ``None`` for an isolated vertex.
    """

    degrees: tuple[int, ...]
    two_avg: tuple[Optional[float], ...]
    vertex_degrees: tuple[int, ...]


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    adj = [0] * n
    for edge in edges:
        u, v = (int(x) for x in edge)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.adj)))


def union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise GraphError(f"union would have {g.n + h.n} vertices (cap {MAX_VERTICES})")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise GraphError(f"join would have {g.n + h.n} vertices (cap {MAX_VERTICES})")
    left = ((1 << h.n) - 1) << g.n
    right = (1 << g.n) - 1
    return Graph(
        g.n + h.n,
        tuple(row | left for row in g.adj) + tuple((row << g.n) | right for row in h.adj),
    )


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    vs = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(vs)}
    adj = []
    for v in vs:
        row = 0
        for w in _bits(g.adj[v]):
            if w in pos:
                row |= 1 << pos[w]
        adj.append(row)
    return Graph(len(vs), tuple(adj))


def duplicate_vertex(g: Graph, u: int, v: int) -> Graph:
    """Duplicate ``u`` to ``v``: drop every edge at ``u``, then join ``u`` to N(v)."""
    if u == v:
        raise GraphError("cannot duplicate a vertex to itself")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError("vertex out of range")
    ubit = 1 << u
    adj = [row & ~ubit for row in g.adj]
    target = adj[v]
    adj[u] = target
    for w in _bits(target):
        adj[w] |= ubit
    return Graph(g.n, tuple(adj))


def clique_number(g: Graph) -> int:
    """Exact clique number by colour-bounded branch and bound."""
    return int(kernels.max_clique(g.adj, g.n))


def _dsatur_order_colouring(g: Graph) -> int:
    colours = [-1] * g.n
    sat = [0] * g.n
    for _ in range(g.n):
        u = max(
            (x for x in range(g.n) if colours[x] < 0),
            key=lambda x: (sat[x].bit_count(), g.degree(x), -x),
        )
        c = 0
        while sat[u] >> c & 1:
            c += 1
        colours[u] = c
        for w in _bits(g.adj[u]):
            sat[w] |= 1 << c
    return max(colours) + 1 if g.n else 0


def _colourable(g: Graph, k: int) -> bool:
    colours = [-1] * g.n
    sat = [0] * g.n

    def pick():
        best = -1
        key = None
        for x in range(g.n):
            if colours[x] < 0:
                cand = (sat[x].bit_count(), g.degree(x), -x)
                if key is None or cand > key:
                    best, key = x, cand
        return best

    def solve(coloured, used):
        if coloured == g.n:
            return True
        u = pick()
        for c in range(min(k, used + 1)):
            if sat[u] >> c & 1:
                continue
            colours[u] = c
            saved = [(w, sat[w]) for w in _bits(g.adj[u])]
            for w in _bits(g.adj[u]):
                sat[w] |= 1 << c
            if solve(coloured + 1, max(used, c + 1)):
                return True
            for w, s in saved:
                sat[w] = s
            colours[u] = -1
        return False

    return solve(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number; refuses graphs above 16 vertices."""
    if g.n > CHROMATIC_CAP:
        raise GraphError(f"chromatic_number is exact only up to {CHROMATIC_CAP} vertices")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    lower = clique_number(g)
    upper = _dsatur_order_colouring(g)
    for k in range(lower, upper):
        if _colourable(g, k):
            return k
    return upper


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def degree_profile(g: Graph) -> DegreeProfile:
    deg = g.degrees()
    two_avg = tuple(
        (sum(deg[w] for w in _bits(g.adj[v])) / deg[v]) if deg[v] else None for v in range(g.n)
    )
    return DegreeProfile(tuple(sorted(deg, reverse=True)), two_avg, tuple(deg))


def multipartite_parts(g: Graph) -> Optional[list[int]]:
    """Part sizes (descending) if ``g`` is complete multipartite, else ``None``.

    A graph is complete multipartite exactly when non-adjacency is an
    equivalence relation, i.e. the complement is a disjoint union of cliques.
    """
    full = (1 << g.n) - 1
    remaining = full
    sizes = []
    while remaining:
        low = remaining & -remaining
        v = low.bit_length() - 1
        part = full & ~g.adj[v]
        for w in _bits(part):
            if (full & ~g.adj[w]) != part:
                return None
        sizes.append(part.bit_count())
        remaining &= ~part
    return sorted(sizes, reverse=True)

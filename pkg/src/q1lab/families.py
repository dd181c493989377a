"""Constructors for the named extremal graph families."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from q1lab.graph import Graph, GraphError, complement, from_edge_list, join, union

FAMILY_KINDS = {
    "turan": 2,
    "kite": 2,
    "kpq": 2,
    "path": 1,
    "complete": 1,
    "empty": 1,
    "cpm": 1,
    "cpmtri": 1,
    "multipartite": None,
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def build(self) -> Graph:
        k, p = self.kind, self.params
        if k == "turan":
            return turan(*p)
        if k == "kite":
            return kite(*p)
        if k == "kpq":
            return complete_multipartite(list(p))
        if k == "path":
            return path(*p)
        if k == "complete":
            return complete(*p)
        if k == "empty":
            return empty(*p)
        if k == "cpm":
            return complement_perfect_matching(*p)
        if k == "cpmtri":
            return cpm_plus_triangle(*p)
        return complete_multipartite(list(p))

    def __str__(self):
        return f"{self.kind}:{','.join(map(str, self.params))}"


def parse_family(text: str) -> FamilySpec:
    """Parse ``kind:a,b,...`` such as ``turan:10,3`` or ``multipartite:4,3,3``."""
    kind, sep, rest = text.strip().partition(":")
    kind = kind.lower()
    if not sep or kind not in FAMILY_KINDS:
        raise GraphError(f"unknown family spec {text!r}; kinds: {', '.join(FAMILY_KINDS)}")
    try:
        params = tuple(int(x) for x in rest.split(",") if x.strip())
    except ValueError:
        raise GraphError(f"non-integer parameter in {text!r}") from None
    arity = FAMILY_KINDS[kind]
    if (arity is not None and len(params) != arity) or not params:
        raise GraphError(f"{kind} takes {arity or 'one or more'} parameters, got {len(params)}")
    spec = FamilySpec(kind, params)
    spec.build()  # validates parameters
    return spec


def empty(n: int) -> Graph:
    if n < 1:
        raise GraphError("n must be >= 1")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("n must be >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << u) for u in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("n must be >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(sizes) -> Graph:
    sizes = list(sizes)
    if not sizes:
        raise GraphError("need at least one part")
    if any(s < 1 for s in sizes):
        raise GraphError(f"part sizes must be >= 1, got {sizes}")
    return reduce(join, (empty(s) for s in sizes))


def turan_parts(n: int, t: int) -> list[int]:
    """Part sizes of T(n, t), larger parts first."""
    if not 1 <= t <= n:
        raise GraphError(f"Turan graph needs 1 <= t <= n, got n={n}, t={t}")
    k, r = divmod(n, t)
    return [k + 1] * r + [k] * (t - r)


def turan(n: int, t: int) -> Graph:
    return complete_multipartite(turan_parts(n, t))


def kite(n: int, w: int) -> Graph:
    """K_w with a pendant path on n - w vertices hanging off clique vertex w - 1."""
    if not 2 <= w <= n:
        raise GraphError(f"kite needs 2 <= w <= n, got n={n}, w={w}")
    return from_edge_list(n, complete(w).edges() + [(i, i + 1) for i in range(w - 1, n - 1)])


def perfect_matching(n: int) -> Graph:
    if n < 2 or n % 2:
        raise GraphError(f"perfect matching needs even n >= 2, got {n}")
    return Graph(n, tuple(1 << (u ^ 1) for u in range(n)))


def complement_perfect_matching(n: int) -> Graph:
    return complement(perfect_matching(n))


def cpm_plus_triangle(n: int) -> Graph:
    """Complement of (perfect matching on n - 3 vertices) + K3."""
    if n % 2 == 0 or n < 5:
        raise GraphError(f"cpm_plus_triangle needs odd n >= 5, got {n}")
    return complement(union(perfect_matching(n - 3), complete(3)))


def cpm_union_triangle(n: int) -> Graph:
    """Other reading of the odd-n extremal: complement(matching on n - 3) + K3 (disconnected)."""
    if n % 2 == 0 or n < 5:
        raise GraphError(f"cpm_union_triangle needs odd n >= 5, got {n}")
    return union(complement_perfect_matching(n - 3), complete(3))

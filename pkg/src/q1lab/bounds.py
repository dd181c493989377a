"""Closed-form upper and lower bounds on q1 and the per-graph comparison report."""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from typing import Optional

from q1lab import families
from q1lab.formats import to_graph6
from q1lab.graph import (
    CHROMATIC_CAP,
    DegreeProfile,
    Graph,
    GraphError,
    chromatic_number,
    clique_number,
    degree_profile,
    is_connected,
)
from q1lab.spectral import q1 as spectral_radius
from q1lab.tolerances import attained

CSV_COLUMNS = ("n", "m", "omega", "chi", "q1", "b5", "b13", "b14", "b15", "b16", "lb")


def _turan_q1(n: int, t: int) -> float:
    k, r = divmod(n, t)
    disc = k * k * t * t + ((2 * r + 4) * t - 8 * r) * k + (r - 2) ** 2
    return ((3 * t - 4) * k + 3 * r - 2 + math.sqrt(disc)) / 2


def ub_clique(n: int, w: int) -> float:
    """Upper bound on q1 for connected graphs of order n and clique number w."""
    if w == 1:
        return 0.0
    if not 2 <= w <= n:
        raise GraphError(f"ub_clique needs 2 <= w <= n, got n={n}, w={w}")
    return _turan_q1(n, w)


def ub_multipartite(n: int, t: int) -> float:
    """q1 of the Turan graph T(n, t), the maximum over complete t-partite graphs."""
    if not 2 <= t <= n:
        raise GraphError(f"ub_multipartite needs 2 <= t <= n, got n={n}, t={t}")
    if t == 2:
        return float(n)
    return _turan_q1(n, t)


def ub_chromatic(n: int, chi: int) -> float:
    if not 3 <= chi <= n:
        raise GraphError(f"ub_chromatic needs 3 <= chi <= n, got n={n}, chi={chi}")
    return _turan_q1(n, chi)


def ub_hansen_lucas(n: int, w: int) -> float:
    if not 1 <= w <= n:
        raise GraphError(f"ub_hansen_lucas needs 1 <= w <= n, got n={n}, w={w}")
    return 2 * n * (1 - 1 / w)


def _non_isolated(profile: DegreeProfile):
    return [(d, m) for d, m in zip(profile.vertex_degrees, profile.two_avg) if d]


def ub_oliveira_1(profile: DegreeProfile) -> float:
    """max_i d_i + sqrt(d_i m_i); 0 for an edgeless graph."""
    pairs = _non_isolated(profile)
    if not pairs:
        warnings.warn("edgeless graph: degree bound defaults to 0", stacklevel=2)
        return 0.0
    return max(d + math.sqrt(d * m) for d, m in pairs)


def ub_oliveira_2(profile: DegreeProfile) -> float:
    """max_i (d_i + sqrt(d_i^2 + 8 d_i m_i)) / 2; 0 for an edgeless graph."""
    pairs = _non_isolated(profile)
    if not pairs:
        warnings.warn("edgeless graph: degree bound defaults to 0", stacklevel=2)
        return 0.0
    return max((d + math.sqrt(d * d + 8 * d * m)) / 2 for d, m in pairs)


def ub_liu_liu(n: int, d1: int, w: int) -> float:
    if w < 1:
        raise GraphError("clique number must be >= 1")
    return n + d1 - n / w


def ub_yu(profile: DegreeProfile) -> float:
    """Minimum over the sorted degree sequence of Yu et al.'s expression."""
    d = profile.degrees
    if not d:
        raise GraphError("empty degree sequence")
    d1 = d[0]
    return min(
        (d1 + 2 * di - 1 + math.sqrt((2 * di - d1 + 1) ** 2 + 8 * i * (d1 - di))) / 2
        for i, di in enumerate(d)
    )


def lb_clique(n: int, w: int) -> float:
    """Smallest q1 among connected graphs of order n with clique number w."""
    if not 2 <= w <= n:
        raise GraphError(f"lb_clique needs 2 <= w <= n, got n={n}, w={w}")
    if w == 2:
        return 2 + 2 * math.cos(math.pi / n)
    return spectral_radius(families.kite(n, w))


def lb_clique_closed(w: int) -> float:
    """q1 of K_w with one pendant vertex; a lower bound whenever the clique number is w >= 3."""
    if w < 3:
        raise GraphError("lb_clique_closed needs w >= 3")
    return (2 * w - 1 + math.sqrt(4 * w * w - 12 * w + 17)) / 2


def turan_edge_count(n: int, t: int) -> int:
    if not 1 <= t <= n:
        raise GraphError(f"turan_edge_count needs 1 <= t <= n, got n={n}, t={t}")
    k, r = divmod(n, t)
    return (t * t - t) // 2 * k * k + (t - 1) * r * k + r * (r - 1) // 2


@dataclass
class BoundEntry:
    value: Optional[float]
    slack: Optional[float]
    attained: bool
    kind: str = "upper"

    def as_dict(self):
        if self.value is None:
            return "n/a"
        return {"value": self.value, "slack": self.slack, "attained": self.attained}


@dataclass
class BoundReport:
    graph_id: str
    n: int
    m: int
    omega: int
    chi: Optional[int]
    q1: float
    connected: bool
    bounds: dict[str, BoundEntry] = field(default_factory=dict)

    def to_dict(self):
        return {
            "graph": self.graph_id,
            "n": self.n,
            "m": self.m,
            "omega": self.omega,
            "chi": self.chi,
            "q1": self.q1,
            "connected": self.connected,
            "bounds": {name: entry.as_dict() for name, entry in self.bounds.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def csv_row(self) -> list[str]:
        def fmt(name):
            entry = self.bounds.get(name)
            return "n/a" if entry is None or entry.value is None else f"{entry.value:.10g}"

        head = [str(self.n), str(self.m), str(self.omega), "" if self.chi is None else str(self.chi)]
        return head + [f"{self.q1:.10g}"] + [fmt(c) for c in CSV_COLUMNS[5:]]

    def violations(self, tol: float) -> list[str]:
        return [k for k, e in self.bounds.items() if e.slack is not None and e.slack < -tol]


def _entry(value, q, kind="upper"):
    if value is None:
        return BoundEntry(None, None, False, kind)
    slack = value - q if kind == "upper" else q - value
    return BoundEntry(value, slack, attained(value, q), kind)


def evaluate_all(g: Graph) -> BoundReport:
    """Evaluate every bound on ``g`` against its computed q1.

    Bounds whose hypotheses need connectivity are reported as n/a (value
    ``None``) on disconnected input, with a warning.
    """
    connected = is_connected(g)
    if not connected:
        warnings.warn("graph is disconnected; clique-number theorems marked n/a", stacklevel=2)
    q = spectral_radius(g)
    w = clique_number(g)
    chi = chromatic_number(g) if g.n <= CHROMATIC_CAP else None
    prof = degree_profile(g)
    report = BoundReport(to_graph6(g), g.n, g.m, w, chi, q, connected)
    b = report.bounds
    b["b5"] = _entry(ub_clique(g.n, w) if connected else None, q)
    if g.m:
        b["b13"] = _entry(ub_oliveira_1(prof), q)
        b["b14"] = _entry(ub_oliveira_2(prof), q)
    else:
        b["b13"] = b["b14"] = _entry(0.0, q)
    b["b15"] = _entry(ub_liu_liu(g.n, prof.degrees[0], w), q)
    b["b16"] = _entry(ub_yu(prof), q)
    b["lb"] = _entry(lb_clique(g.n, w) if connected and w >= 2 else None, q, "lower")
    b["hansen_lucas"] = _entry(ub_hansen_lucas(g.n, w), q)
    b["chromatic"] = _entry(ub_chromatic(g.n, chi) if connected and chi and chi >= 3 else None, q)
    return report

"""Exhaustive verification over small connected graphs.

Graphs on n vertices are identified by their upper-triangle edge bitmask,
edges ordered (0,1),(0,2),(1,2),(0,3),...  The scan over all 2^(n(n-1)/2)
masks runs in the compiled kernel when available and is split into
contiguous chunks so that several worker processes can share it; chunks
are merged in order, so output does not depend on the worker count.
"""
from __future__ import annotations

import itertools
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator, Optional

import numpy as np

from q1lab import families, kernels
from q1lab.bounds import (
    _turan_q1,
    evaluate_all,
    lb_clique,
    ub_clique,
    ub_multipartite,
)
from q1lab.formats import from_graph6, to_graph6
from q1lab.graph import (
    Graph,
    GraphError,
    chromatic_number,
    clique_number,
    from_edge_list,
    is_connected,
    multipartite_parts,
)
from q1lab.spectral import q1 as spectral_radius
from q1lab.tolerances import SLACK_TOL, eq_tol

MAX_LABELED_N = 8
MAX_DEDUP_N = 7
MAX_SWEEP_N = 7
_CHUNKS = 64

# Example graph G2: {v1,v2,v3} joined to {v4,...,v7}, plus v7v4, v7v5, v6v5 (0-indexed here).
G2_EDGES = [(a, b) for a in (0, 1, 2) for b in (3, 4, 5, 6)] + [(6, 3), (6, 4), (5, 4)]


def example_g2() -> Graph:
    return from_edge_list(7, G2_EDGES)


class VerificationError(AssertionError):
    """A checked inequality or equality characterisation failed.

    Carries the offending graph in graph6 form plus its full bound report.
    """

    def __init__(self, message: str, witness: Optional[str] = None, report: Optional[dict] = None):
        super().__init__(message if witness is None else f"{message} [witness {witness}]")
        self.witness = witness
        self.report = report


@dataclass
class VerifyRecord:
    graph: str
    n: int
    m: int
    omega: int
    chi: Optional[int]
    q1: float
    bound: float
    slack: float
    attained: bool
    family: Optional[str] = None

    def to_dict(self):
        return asdict(self)


RECORD_FIELDS = tuple(VerifyRecord.__dataclass_fields__)


@dataclass
class SweepResult:
    check: str
    records: list[VerifyRecord]
    summary: dict = field(default_factory=dict)
    violations: list[VerifyRecord] = field(default_factory=list)


@dataclass
class CounterexampleCert:
    n: int
    omega: int
    q1: float
    q1_closed_form: float
    threshold: float
    margin: float
    parts: list[int]
    chi: int
    q1_minus_chi: float
    conjecture_bound: float

    def to_dict(self):
        return asdict(self)


# -- enumeration ---------------------------------------------------------------


@dataclass
class ScanResult:
    n: int
    masks: np.ndarray
    omega: np.ndarray
    q1: np.ndarray

    @property
    def total_masks(self) -> int:
        return 1 << (self.n * (self.n - 1) // 2)


def _chunk_bounds(total: int, parts: int):
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


def _scan_chunk(args):
    n, lo, hi = args
    return kernels.scan_connected(n, lo, hi)


def default_workers() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


_SCANS: dict[int, ScanResult] = {}


def scan(n: int, workers: Optional[int] = None) -> ScanResult:
    """(mask, clique number, q1) for every connected labeled graph on n vertices.

    Results are cached per n for the life of the process.
    """
    if not 1 <= n <= MAX_SWEEP_N:
        raise GraphError(f"exhaustive scans support 1 <= n <= {MAX_SWEEP_N}")
    if n not in _SCANS:
        total = 1 << (n * (n - 1) // 2)
        jobs = [(n, lo, hi) for lo, hi in _chunk_bounds(total, _CHUNKS)]
        if workers and workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_scan_chunk, jobs))
        else:
            parts = [_scan_chunk(j) for j in jobs]
        _SCANS[n] = ScanResult(
            n,
            np.concatenate([p[0] for p in parts]),
            np.concatenate([p[1] for p in parts]),
            np.concatenate([p[2] for p in parts]),
        )
    return _SCANS[n]


@lru_cache(maxsize=None)
def edge_perm_table(n: int) -> np.ndarray:
    """``table[p, e]`` = index of the image of edge ``e`` under the p-th permutation."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]

    def idx(a, b):
        a, b = min(a, b), max(a, b)
        return b * (b - 1) // 2 + a

    perms = list(itertools.permutations(range(n)))
    table = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for p, perm in enumerate(perms):
        table[p] = [idx(perm[i], perm[j]) for i, j in pairs]
    return table


def orbit(n: int, mask: int) -> np.ndarray:
    """All labeled copies (as sorted masks) of the graph with the given mask."""
    table = edge_perm_table(n)
    bits = [e for e in range(table.shape[1]) if int(mask) >> e & 1]
    if not bits:
        return np.array([0], dtype=np.uint64)
    images = (np.uint64(1) << table[:, bits].astype(np.uint64)).sum(axis=1, dtype=np.uint64)
    return np.unique(images)


def canonical_mask(n: int, mask: int) -> int:
    return int(orbit(n, mask)[0])


def labeled_connected_count(n: int) -> int:
    """Connected labeled graphs on n vertices, by inclusion-exclusion on the component of vertex 0."""
    c = [0, 1]
    for k in range(2, n + 1):
        total = 2 ** comb(k, 2)
        total -= sum(comb(k - 1, j - 1) * c[j] * 2 ** comb(k - j, 2) for j in range(1, k))
        c.append(total)
    return c[n]


def dedup_classes(n: int) -> list[tuple[int, int]]:
    """``(representative mask, orbit size)`` per isomorphism class of connected graphs.

    The representative is the smallest mask in its class; classes come out
    in ascending representative order.
    """
    if not 1 <= n <= MAX_DEDUP_N:
        raise GraphError(f"dedup enumeration supports 1 <= n <= {MAX_DEDUP_N}")
    conn = kernels.connected_masks(n, 0, 1 << (n * (n - 1) // 2))
    seen = np.zeros(1 << (n * (n - 1) // 2), dtype=bool)
    out = []
    for mask in conn.tolist():
        if seen[mask]:
            continue
        orb = orbit(n, mask)
        seen[orb.astype(np.int64)] = True
        out.append((mask, len(orb)))
    return out


def enumerate_connected(n: int, dedup: bool = False) -> Iterator[Graph]:
    """Connected graphs on n vertices in ascending mask order.

    With ``dedup`` only the minimal-mask representative of each
    isomorphism class is produced.
    """
    if dedup:
        for mask, _ in dedup_classes(n):
            yield Graph.from_mask(n, mask)
        return
    if not 1 <= n <= MAX_LABELED_N:
        raise GraphError(f"labeled enumeration supports 1 <= n <= {MAX_LABELED_N}")
    total = 1 << (n * (n - 1) // 2)
    for lo, hi in _chunk_bounds(total, _CHUNKS):
        for mask in kernels.connected_masks(n, lo, hi).tolist():
            yield Graph.from_mask(n, mask)


# -- helpers ---------------------------------------------------------------------


def family_name(g: Graph) -> Optional[str]:
    """Recognise the extremal families the theorems name, up to isomorphism."""
    parts = multipartite_parts(g)
    if parts is not None and len(parts) >= 2:
        if parts == families.turan_parts(g.n, len(parts)):
            return f"T({g.n},{len(parts)})"
        return "K(" + ",".join(map(str, parts)) + ")"
    if g.n <= MAX_DEDUP_N:
        canon = canonical_mask(g.n, g.to_mask())
        if canon == canonical_mask(g.n, families.path(g.n).to_mask()):
            return f"P{g.n}"
        for w in range(3, g.n + 1):
            if canon == canonical_mask(g.n, families.kite(g.n, w).to_mask()):
                return f"kite({g.n},{w})"
    return None


def _record(g: Graph, omega: int, q: float, bound: float, kind: str = "upper") -> VerifyRecord:
    slack = bound - q if kind == "upper" else q - bound
    return VerifyRecord(
        graph=to_graph6(g),
        n=g.n,
        m=g.m,
        omega=int(omega),
        chi=chromatic_number(g),
        q1=float(q),
        bound=float(bound),
        slack=float(slack),
        attained=bool(abs(slack) <= eq_tol() * max(1.0, abs(q))),
        family=family_name(g),
    )


def _fail(message: str, n: int, mask: int):
    g = Graph.from_mask(n, int(mask))
    raise VerificationError(message, to_graph6(g), evaluate_all(g).to_dict())


def _is_eq(bound, q):
    return np.abs(bound - q) <= eq_tol() * np.maximum(1.0, np.abs(q))


def _orbit_union(n, graphs):
    return np.unique(np.concatenate([orbit(n, g.to_mask()) for g in graphs]))


def _check_set(found, expected, what, n):
    found = np.unique(found)
    if len(found) != len(expected) or not np.array_equal(found, expected):
        extra = np.setdiff1d(found, expected)
        if len(extra):
            _fail(f"{what}: unexpected graph", n, extra[0])
        missing = np.setdiff1d(expected, found)
        _fail(f"{what}: expected graph not found", n, missing[0])


# -- sweeps ----------------------------------------------------------------------


def sharpness_sweep(n: int, workers: Optional[int] = None) -> SweepResult:
    """Check the clique-number upper bound on every connected graph of order n.

    The equality set must be all complete bipartite graphs (clique number 2)
    or all labeled copies of the Turan graph (clique number >= 3).
    """
    res = scan(n, workers)
    table = np.array([0.0, 0.0] + [ub_clique(n, w) for w in range(2, n + 1)])
    bound = table[res.omega]
    slack = bound - res.q1
    bad = np.flatnonzero(slack < -SLACK_TOL)
    if len(bad):
        _fail(f"q1 exceeds clique bound by {-slack[bad[0]]:.3e}", n, res.masks[bad[0]])
    eq = _is_eq(bound, res.q1)
    records, per_omega = [], {}
    for w in range(2, n + 1):
        sel = eq & (res.omega == w)
        if w == 2:
            expected = _orbit_union(n, [families.complete_multipartite([p, n - p]) for p in range(1, n // 2 + 1)])
            label = "complete bipartite"
        else:
            expected = orbit(n, families.turan(n, w).to_mask())
            label = f"T({n},{w})"
        _check_set(res.masks[sel], expected, f"equality set for omega={w} is not {label}", n)
        per_omega[w] = int(sel.sum())
        for mask in res.masks[sel].tolist():
            g = Graph.from_mask(n, mask)
            records.append(_record(g, w, float(res.q1[res.masks == mask][0]), table[w]))
    summary = {
        "check": "upper",
        "n": n,
        "masks_scanned": res.total_masks,
        "connected": int(len(res.masks)),
        "violations": 0,
        "min_slack": float(slack.min()) if len(slack) else 0.0,
        "equality_counts": per_omega,
        "backend": kernels.BACKEND,
    }
    return SweepResult("upper", records, summary)


def lower_sweep(n: int, workers: Optional[int] = None) -> SweepResult:
    """Minimum q1 per clique number against the path / kite lower bound."""
    res = scan(n, workers)
    records, per_omega = [], {}
    for w in range(2, n + 1):
        sel = np.flatnonzero(res.omega == w)
        if not len(sel):
            continue
        lb = lb_clique(n, w)
        qs = res.q1[sel]
        low = np.flatnonzero(qs < lb - SLACK_TOL)
        if len(low):
            _fail(f"q1 below lower bound for omega={w}", n, res.masks[sel[low[0]]])
        qmin = float(qs.min())
        if abs(qmin - lb) > SLACK_TOL:
            _fail(f"minimum q1 {qmin} for omega={w} misses bound {lb}", n, res.masks[sel[np.argmin(qs)]])
        hit = sel[_is_eq(lb, qs)]
        extremal = families.path(n) if w == 2 else families.kite(n, w)
        _check_set(res.masks[hit], orbit(n, extremal.to_mask()), f"minimisers for omega={w}", n)
        per_omega[w] = {"min_q1": qmin, "bound": lb, "minimisers": int(len(hit))}
        records.append(_record(extremal, w, spectral_radius(extremal), lb, "lower"))
    summary = {
        "check": "lower",
        "n": n,
        "masks_scanned": res.total_masks,
        "connected": int(len(res.masks)),
        "violations": 0,
        "per_omega": per_omega,
        "backend": kernels.BACKEND,
    }
    return SweepResult("lower", records, summary)


def ratio_check(n: int, workers: Optional[int] = None) -> SweepResult:
    """q1 / omega <= n / 2 over every connected graph of order n; lists equality cases."""
    res = scan(n, workers)
    ratio = res.q1 / res.omega.astype(np.float64)
    slack = n / 2 - ratio
    bad = np.flatnonzero(slack < -SLACK_TOL)
    if len(bad):
        _fail("q1/omega exceeds n/2", n, res.masks[bad[0]])
    eq = _is_eq(n / 2, ratio)
    records = []
    for mask, w, q in zip(res.masks[eq].tolist(), res.omega[eq].tolist(), res.q1[eq].tolist()):
        g = Graph.from_mask(n, mask)
        rec = _record(g, w, q / w, n / 2)
        rec.q1 = q
        records.append(rec)
    summary = {
        "check": "ratio",
        "n": n,
        "connected": int(len(res.masks)),
        "violations": 0,
        "min_slack": float(slack.min()),
        "equality_count": int(eq.sum()),
        "equality_families": sorted({r.family or "?" for r in records}),
        "backend": kernels.BACKEND,
    }
    return SweepResult("ratio", records, summary)


def in_conjecture_region(n: int, w: int) -> bool:
    return w <= 4 or w >= math.ceil(n / 2)


def region_threshold(n: int, w: int) -> float:
    return 1.5 * n + w - 4


def _region_equality_expected(n: int, w: int) -> bool:
    return (w == 4 and n % 4 == 0) or 2 * w == n


def conjecture_region_check(n: int, workers: Optional[int] = None) -> SweepResult:
    """q1 <= 3n/2 + omega - 4 where omega <= 4 or omega >= ceil(n/2).

    For n <= 7 every connected graph is checked; for larger n (up to 64)
    the check runs at family level: the clique bound, which dominates q1 of
    every graph with that clique number, is compared with the threshold
    and the Turan graph's q1 is computed by the eigensolver.
    """
    if n <= MAX_SWEEP_N:
        return _region_exhaustive(n, workers)
    return _region_family(n)


def _region_exhaustive(n, workers):
    res = scan(n, workers)
    thr = np.array([region_threshold(n, w) for w in range(n + 1)])[res.omega]
    inside = np.array([in_conjecture_region(n, w) for w in range(n + 1)])[res.omega]
    slack = thr - res.q1
    records, violations = [], []
    for idx in np.flatnonzero(inside & (slack < -SLACK_TOL)).tolist():
        g = Graph.from_mask(n, int(res.masks[idx]))
        violations.append(_record(g, res.omega[idx], res.q1[idx], thr[idx]))
    eq = inside & _is_eq(thr, res.q1)
    for idx in np.flatnonzero(eq).tolist():
        g = Graph.from_mask(n, int(res.masks[idx]))
        records.append(_record(g, res.omega[idx], res.q1[idx], thr[idx]))
    summary = {
        "check": "region",
        "n": n,
        "connected": int(len(res.masks)),
        "hypothesis_n_ge_10": n >= 10,
        "violations": len(violations),
        "violating_classes": sorted({canonical_mask(n, from_graph6(r.graph).to_mask()) for r in violations}),
        "equality_families": sorted({r.family or "?" for r in records}),
        "min_slack_in_region": float(slack[inside].min()) if inside.any() else None,
        "backend": kernels.BACKEND,
    }
    return SweepResult("region", records, summary, violations)


def _region_family(n):
    if not 2 <= n <= 64:
        raise GraphError("family-level region check supports 2 <= n <= 64")
    records, violations = [], []
    for w in range(2, n + 1):
        if not in_conjecture_region(n, w):
            continue
        thr = region_threshold(n, w)
        ub = ub_clique(n, w)
        tg = families.turan(n, w)
        q = spectral_radius(tg)
        if abs(q - ub) > SLACK_TOL:
            raise VerificationError(f"eigensolver and closed form disagree on T({n},{w})", to_graph6(tg))
        rec = VerifyRecord(to_graph6(tg), n, tg.m, w, w, q, thr, thr - ub,
                           bool(abs(thr - ub) <= eq_tol() * thr), f"T({n},{w})")
        if ub > thr + SLACK_TOL:
            violations.append(rec)
        if rec.attained != _region_equality_expected(n, w) and n >= 10:
            raise VerificationError(f"equality pattern wrong at n={n}, omega={w}", rec.graph)
        records.append(rec)
    summary = {
        "check": "region",
        "n": n,
        "mode": "family",
        "hypothesis_n_ge_10": n >= 10,
        "violations": len(violations),
        "equality_omegas": [r.omega for r in records if r.attained],
        "backend": kernels.BACKEND,
    }
    return SweepResult("region", records, summary, violations)


def find_counterexamples(n_max: int) -> list[CounterexampleCert]:
    """Turan graphs T(n, omega), 5 <= omega < ceil(n/2), whose q1 exceeds 3n/2 + omega - 4."""
    if n_max > 64:
        raise GraphError("n_max is capped at 64")
    certs = []
    for n in range(10, n_max + 1):
        for w in range(5, math.ceil(n / 2)):
            g = families.turan(n, w)
            q = spectral_radius(g)
            closed = ub_multipartite(n, w)
            if abs(q - closed) > SLACK_TOL:
                raise VerificationError(f"eigensolver and closed form disagree on T({n},{w})", to_graph6(g))
            thr = region_threshold(n, w)
            if q - thr > SLACK_TOL:
                certs.append(
                    CounterexampleCert(
                        n=n,
                        omega=w,
                        q1=q,
                        q1_closed_form=closed,
                        threshold=thr,
                        margin=q - thr,
                        parts=families.turan_parts(n, w),
                        chi=w,
                        q1_minus_chi=q - w,
                        conjecture_bound=1.5 * n - 4,
                    )
                )
    return certs


def conjecture1_extremal_report(n: int) -> dict:
    """q1 - omega and q1 - chi of the conjectured extremal graphs against 3n/2 - 4.

    Odd n is reported under both readings of the odd-order construction.
    The best Turan graph is listed alongside for comparison.
    """
    if not 4 <= n <= 12:
        raise GraphError("conjecture1_extremal_report supports 4 <= n <= 12")
    if n % 2 == 0:
        candidates = {"complement_perfect_matching": families.complement_perfect_matching(n)}
    else:
        candidates = {
            "complement_of_matching_plus_triangle": families.cpm_plus_triangle(n),
            "complement_of_matching_union_triangle": families.cpm_union_triangle(n),
        }
    bound = 1.5 * n - 4
    rows = {}
    for name, g in candidates.items():
        q = spectral_radius(g)
        w = clique_number(g)
        chi = chromatic_number(g)
        rows[name] = {
            "graph6": to_graph6(g),
            "connected": is_connected(g),
            "q1": q,
            "omega": w,
            "chi": chi,
            "q1_minus_omega": q - w,
            "q1_minus_chi": q - chi,
            "gap_to_bound": bound - (q - w),
        }
    best = max(range(2, n + 1), key=lambda w: _turan_q1(n, w) - w)
    return {
        "n": n,
        "bound": bound,
        "candidates": rows,
        "best_turan": {"omega": best, "q1_minus_omega": _turan_q1(n, best) - best},
    }


# -- Example table -----------------------------------------------------------------

TABLE_COLUMNS = ("q1", "b5", "b13", "b14", "b15", "b16")


def example_table(out=None) -> list[tuple[str, list[float]]]:
    """Bound comparison for T(10,3) and G2; optionally written to ``out``."""
    rows = []
    for name, g in (("T(10,3)", families.turan(10, 3)), ("G2", example_g2())):
        rep = evaluate_all(g)
        rows.append((name, [rep.q1] + [rep.bounds[c].value for c in TABLE_COLUMNS[1:]]))
    if out is not None:
        out.write(format_table(rows))
    return rows


def format_table(rows) -> str:
    header = ("graph",) + TABLE_COLUMNS
    lines = ["  ".join(f"{h:>8}" for h in header)]
    for name, values in rows:
        lines.append("  ".join([f"{name:>8}"] + [f"{v:8.4f}" for v in values]))
    return "\n".join(lines) + "\n"


def records_jsonl(records) -> str:
    return "".join(json.dumps(r.to_dict()) + "\n" for r in records)

"""Signless Laplacian Q = D + A, its extreme eigenvalues and Perron vector,
and the Zykov-style duplication steps that push q1 upwards."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from q1lab import kernels
from q1lab.graph import (
    Graph,
    GraphError,
    _bits,
    duplicate_vertex,
    is_connected,
    join,
    multipartite_parts,
)
from q1lab.tolerances import MAX_SWEEPS, OFFDIAG_TOL, RESIDUAL_TOL


class SpectralError(ArithmeticError):
    """Eigensolver failed to converge or to certify its residual."""


@dataclass(frozen=True)
class SpectralSummary:
    q1: float
    q_min: float
    perron: np.ndarray
    residual: float
    iterations: int
    eigenvalues: np.ndarray = field(repr=False)


def signless_laplacian(g: Graph) -> np.ndarray:
    q = np.zeros((g.n, g.n))
    for u in range(g.n):
        for v in _bits(g.adj[u]):
            q[u, v] = 1.0
        q[u, u] = g.degree(u)
    return q


def _eigh(q, vectors):
    try:
        return kernels.jacobi_eigh(q, vectors=vectors, tol=OFFDIAG_TOL, max_sweeps=MAX_SWEEPS)
    except ArithmeticError as exc:
        raise SpectralError(str(exc)) from None


def spectrum(g: Graph) -> SpectralSummary:
    """Full Jacobi eigensolve of Q(g) with a certified Perron pair."""
    if g.n < 1:
        raise GraphError("spectrum of the null graph is undefined")
    q = signless_laplacian(g)
    vals, vecs, sweeps = _eigh(q, True)
    f = vecs[:, -1].copy()
    if f[np.argmax(np.abs(f))] < 0:
        f = -f
    if g.m and is_connected(g):
        if f.min() < -1e-10:
            raise SpectralError(f"Perron vector has a negative entry {f.min():.3e}")
        f = np.clip(f, 0.0, None)
    f /= np.linalg.norm(f)
    top = float(vals[-1])
    residual = float(np.max(np.abs(q @ f - top * f)))
    if residual > RESIDUAL_TOL:
        raise SpectralError(f"residual {residual:.3e} exceeds {RESIDUAL_TOL}")
    return SpectralSummary(top, float(vals[0]), f, residual, sweeps, vals)


def q1(g: Graph) -> float:
    """Signless Laplacian spectral radius."""
    if g.n < 1:
        raise GraphError("q1 of the null graph is undefined")
    vals, _, _ = _eigh(signless_laplacian(g), False)
    return float(vals[-1])


def q_min(g: Graph) -> float:
    if g.n < 1:
        raise GraphError("q_min of the null graph is undefined")
    vals, _, _ = _eigh(signless_laplacian(g), False)
    return float(vals[0])


def perron_vector(g: Graph) -> np.ndarray:
    return spectrum(g).perron


def vertex_weights(g: Graph, f) -> np.ndarray:
    """w(u) = sum over neighbours v of f(u) + f(v); zero at isolated vertices."""
    f = np.asarray(f, dtype=np.float64)
    if f.shape != (g.n,):
        raise ValueError(f"weight vector must have length {g.n}, got shape {f.shape}")
    w = np.zeros(g.n)
    for u in range(g.n):
        for v in _bits(g.adj[u]):
            w[u] += f[u] + f[v]
    return w


def _argmax_low_id(values, candidates):
    best = max(values[c] for c in candidates)
    slack = 1e-12 * max(1.0, abs(best))
    return min(c for c in candidates if values[c] >= best - slack)


def _collapse_onto(g: Graph, u: int, region: int) -> Graph:
    """Duplicate every vertex of ``region`` outside N[u] to ``u``."""
    for v in _bits(region & ~g.adj[u] & ~(1 << u)):
        g = duplicate_vertex(g, v, u)
    return g


def zykov_step(g: Graph) -> Graph:
    """Duplicate all non-neighbours of a maximum-weight vertex to it.

    The weight is taken with respect to the Perron vector, ties resolved
    by the lowest vertex id. The result is an independent set joined to
    the subgraph induced by that vertex's neighbourhood.
    """
    if g.n < 2 or not is_connected(g):
        raise GraphError("zykov_step needs a connected graph on >= 2 vertices")
    w = vertex_weights(g, perron_vector(g))
    u = _argmax_low_id(w, range(g.n))
    return _collapse_onto(g, u, (1 << g.n) - 1)


def zykov_step_under_join(r: Graph, g: Graph) -> Graph:
    """Same duplication applied to ``g`` inside ``r`` joined with ``g``.

    The maximum-weight vertex is chosen among the vertices of ``g`` using
    the Perron vector of the join; the transformed ``g`` is returned.
    """
    joined = join(r, g)
    if joined.n < 2 or not is_connected(joined):
        raise GraphError("zykov_step_under_join needs a connected join")
    w = vertex_weights(joined, perron_vector(joined))[r.n :]
    u = _argmax_low_id(w, range(g.n))
    return _collapse_onto(g, u, (1 << g.n) - 1)


@dataclass
class ZykovChain:
    graphs: list[Graph]
    q1: list[float]

    @property
    def steps(self) -> int:
        return len(self.graphs) - 1

    @property
    def final(self) -> Graph:
        return self.graphs[-1]


def zykov_chain(g: Graph) -> ZykovChain:
    """Iterate the duplication until the graph is complete multipartite.

    After each step the chosen vertex and its former non-neighbours form a
    new independent part joined to everything else; the next step works on
    the remaining neighbourhood, weighted by the Perron vector of the whole
    current graph.
    """
    if g.n < 2 or not is_connected(g):
        raise GraphError("zykov_chain needs a connected graph on >= 2 vertices")
    graphs = [g]
    values = [q1(g)]
    active = (1 << g.n) - 1
    current = g
    # complete multipartite graphs are fixed points, so stop as soon as one appears
    while multipartite_parts(current) is None and any(current.adj[v] & active for v in _bits(active)):
        w = vertex_weights(current, perron_vector(current))
        u = _argmax_low_id(w, list(_bits(active)))
        current = _collapse_onto(current, u, active)
        active = current.adj[u] & active
        graphs.append(current)
        values.append(q1(current))
    return ZykovChain(graphs, values)

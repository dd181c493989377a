"""Pure-Python/NumPy implementations of the hot kernels.

Same signatures as the compiled ``_ckernels`` module. The mask scans run a
batched Jacobi over blocks of graphs so that a full n=7 sweep stays usable
without a compiler.
"""
from __future__ import annotations

import itertools

import numpy as np

_BLOCK = 1 << 15


def _rotate(a, v, p, q):
    """One Jacobi rotation annihilating a[..., p, q] for a batch of matrices."""
    apq = a[:, p, q]
    active = apq != 0.0
    if not active.any():
        return
    app = a[:, p, p]
    aqq = a[:, q, q]
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        theta = np.where(active, 0.5 * (aqq - app) / np.where(active, apq, 1.0), 0.0)
        t = np.where(theta < 0.0, -1.0, 1.0) / (np.abs(theta) + np.sqrt(1.0 + theta * theta))
    t = np.where(active & np.isfinite(theta), t, 0.0)
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    cc = c[:, None]
    ss = s[:, None]
    x = a[:, :, p].copy()
    y = a[:, :, q]
    a[:, :, p] = cc * x - ss * y
    a[:, :, q] = ss * x + cc * y
    x = a[:, p, :].copy()
    y = a[:, q, :]
    a[:, p, :] = cc * x - ss * y
    a[:, q, :] = ss * x + cc * y
    a[active, p, q] = 0.0
    a[active, q, p] = 0.0
    if v is not None:
        x = v[:, :, p].copy()
        y = v[:, :, q]
        v[:, :, p] = cc * x - ss * y
        v[:, :, q] = ss * x + cc * y


def batched_jacobi(a, vectors=False, tol=1e-12, max_sweeps=100):
    """Cyclic Jacobi on a stack of symmetric matrices, in place.

    Returns ``(a, v, sweeps)`` where the diagonal of ``a`` holds the
    eigenvalues (unsorted) and ``v`` the accumulated rotations.
    """
    b, n, _ = a.shape
    v = np.broadcast_to(np.eye(n), (b, n, n)).copy() if vectors else None
    iu = np.triu_indices(n, 1)
    sweep = 0
    while True:
        off = np.sqrt(2.0 * np.sum(a[:, iu[0], iu[1]] ** 2, axis=1)) if n > 1 else np.zeros(b)
        if b == 0 or off.max() < tol:
            return a, v, sweep
        if sweep >= max_sweeps:
            raise ArithmeticError(f"Jacobi did not converge in {max_sweeps} sweeps")
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q)
        sweep += 1


def jacobi_eigh(a, vectors=True, tol=1e-12, max_sweeps=100):
    work = np.array(a, dtype=np.float64, copy=True)
    if work.ndim != 2 or work.shape[0] != work.shape[1]:
        raise ValueError("matrix must be square")
    n = work.shape[0]
    if n == 0:
        return np.zeros(0), (np.zeros((0, 0)) if vectors else None), 0
    stack, v, sweeps = batched_jacobi(work[None], vectors=vectors, tol=tol, max_sweeps=max_sweeps)
    diag = np.diagonal(stack[0]).copy()
    order = np.argsort(diag, kind="stable")
    if vectors:
        return diag[order], v[0][:, order], sweeps
    return diag[order], None, sweeps


def _expand(adj, p, size, best):
    order = []
    colour = []
    rest = p
    col = 0
    while rest:
        col += 1
        cls = rest
        while cls:
            low = cls & -cls
            v = low.bit_length() - 1
            cls &= ~low
            cls &= ~adj[v]
            rest &= ~low
            order.append(v)
            colour.append(col)
    for i in range(len(order) - 1, -1, -1):
        if size + colour[i] <= best:
            return best
        v = order[i]
        newp = p & adj[v]
        if not newp:
            best = max(best, size + 1)
        else:
            best = _expand(adj, newp, size + 1, best)
        p &= ~(1 << v)
    return best


def max_clique(rows, n):
    if n == 0:
        return 0
    if n > 64:
        raise ValueError("at most 64 vertices")
    return _expand([int(r) for r in rows[:n]], (1 << n) - 1, 0, 0)


def _edge_index(n):
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    ei = np.array([p[0] for p in pairs], dtype=np.intp)
    ej = np.array([p[1] for p in pairs], dtype=np.intp)
    return ei, ej


def _adjacency_block(n, masks):
    ei, ej = _edge_index(n)
    bits = ((masks[:, None] >> np.arange(len(ei), dtype=np.uint64)) & np.uint64(1)).astype(np.float64)
    a = np.zeros((len(masks), n, n))
    a[:, ei, ej] = bits
    a[:, ej, ei] = bits
    return a


def _connected_block(a):
    b, n, _ = a.shape
    reach = np.zeros((b, n), dtype=bool)
    reach[:, 0] = True
    for _ in range(n - 1):
        reach = reach | (np.einsum("bi,bij->bj", reach.astype(np.float64), a) > 0)
    return reach.all(axis=1)


def _clique_tables(n):
    """For every vertex subset, the edge mask it spans; grouped by size."""
    ei, ej = _edge_index(n)
    by_size = {}
    for k in range(2, n + 1):
        reqs = []
        for sub in itertools.combinations(range(n), k):
            s = set(sub)
            req = 0
            for e, (i, j) in enumerate(zip(ei, ej)):
                if i in s and j in s:
                    req |= 1 << e
            reqs.append(req)
        by_size[k] = np.array(reqs, dtype=np.uint64)
    return by_size


def _omega_block(n, masks, tables):
    omega = np.ones(len(masks), dtype=np.uint8)
    for k in range(2, n + 1):
        reqs = tables[k]
        hit = np.zeros(len(masks), dtype=bool)
        for req in reqs:
            hit |= (masks & req) == req
        omega[hit] = k
    return omega


def _mask_range(lo, hi):
    return np.arange(lo, hi, dtype=np.uint64) if hi > lo else np.zeros(0, dtype=np.uint64)


def connected_masks(n, lo, hi):
    if n < 1 or n > 11:
        raise ValueError("mask scans support 1 <= n <= 11")
    out = []
    for start in range(lo, hi, _BLOCK):
        masks = _mask_range(start, min(hi, start + _BLOCK))
        out.append(masks[_connected_block(_adjacency_block(n, masks))])
    return np.concatenate(out) if out else np.zeros(0, dtype=np.uint64)


def scan_connected(n, lo, hi, tol=1e-12, max_sweeps=100):
    if n < 1 or n > 11:
        raise ValueError("mask scans support 1 <= n <= 11")
    tables = _clique_tables(n)
    out_m, out_w, out_q = [], [], []
    for start in range(lo, hi, _BLOCK):
        masks = _mask_range(start, min(hi, start + _BLOCK))
        a = _adjacency_block(n, masks)
        keep = _connected_block(a)
        masks, a = masks[keep], a[keep]
        deg = a.sum(axis=2)
        idx = np.arange(n)
        a[:, idx, idx] = deg
        a, _, _ = batched_jacobi(a, tol=tol, max_sweeps=max_sweeps)
        out_m.append(masks)
        out_w.append(_omega_block(n, masks, tables))
        out_q.append(np.diagonal(a, axis1=1, axis2=2).max(axis=1) if len(masks) else np.zeros(0))
    if not out_m:
        return np.zeros(0, dtype=np.uint64), np.zeros(0, dtype=np.uint8), np.zeros(0)
    return np.concatenate(out_m), np.concatenate(out_w), np.concatenate(out_q)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops: cyclic Jacobi, bitset maximum clique, exhaustive mask scans.

The pure-Python twin lives in ``_pykernels``; both expose the same functions.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cnp.import_array()

cdef extern from *:
    int _ctz "__builtin_ctzll"(unsigned long long) nogil
    int _popcount "__builtin_popcountll"(unsigned long long) nogil

cdef enum:
    MAXN = 64


cdef inline uint64_t _bit(int v) noexcept nogil:
    return (<uint64_t>1) << v


cdef int _jacobi(double* a, int n, double* v, double tol, int max_sweeps) noexcept nogil:
    """In-place cyclic Jacobi on row-major ``a``; returns sweeps used or -1."""
    cdef int sweep, p, q, k
    cdef double off, apq, app, aqq, h, g, theta, t, c, s, x, y
    if v != NULL:
        for p in range(n * n):
            v[p] = 0.0
        for p in range(n):
            v[p * n + p] = 1.0
    sweep = 0
    while True:
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += a[p * n + q] * a[p * n + q]
        if sqrt(2.0 * off) < tol:
            return sweep
        if sweep >= max_sweeps:
            return -1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p * n + q]
                if apq == 0.0:
                    continue
                app = a[p * n + p]
                aqq = a[q * n + q]
                g = 100.0 * fabs(apq)
                if sweep > 3 and fabs(app) + g == fabs(app) and fabs(aqq) + g == fabs(aqq):
                    a[p * n + q] = 0.0
                    a[q * n + p] = 0.0
                    continue
                h = aqq - app
                if fabs(h) + g == fabs(h):
                    t = apq / h
                else:
                    theta = 0.5 * h / apq
                    t = 1.0 / (fabs(theta) + sqrt(1.0 + theta * theta))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    x = a[k * n + p]
                    y = a[k * n + q]
                    a[k * n + p] = c * x - s * y
                    a[k * n + q] = s * x + c * y
                for k in range(n):
                    x = a[p * n + k]
                    y = a[q * n + k]
                    a[p * n + k] = c * x - s * y
                    a[q * n + k] = s * x + c * y
                a[p * n + q] = 0.0
                a[q * n + p] = 0.0
                if v != NULL:
                    for k in range(n):
                        x = v[k * n + p]
                        y = v[k * n + q]
                        v[k * n + p] = c * x - s * y
                        v[k * n + q] = s * x + c * y
        sweep += 1


def jacobi_eigh(a, bint vectors=True, double tol=1e-12, int max_sweeps=100):
    """Eigen-decompose a symmetric matrix.

    Returns ``(eigenvalues ascending, eigenvectors as columns or None, sweeps)``.
    Raises ``ArithmeticError`` when the sweep cap is hit.
    """
    cdef cnp.ndarray[double, ndim=2, mode="c"] work = np.array(a, dtype=np.float64, order="C", copy=True)
    cdef int n = work.shape[0]
    if work.shape[1] != n:
        raise ValueError("matrix must be square")
    cdef cnp.ndarray[double, ndim=2, mode="c"] vec
    cdef double* vptr = NULL
    if vectors:
        vec = np.empty((n, n), dtype=np.float64)
        vptr = &vec[0, 0] if n else NULL
    cdef int sweeps = 0
    if n:
        with nogil:
            sweeps = _jacobi(&work[0, 0], n, vptr, tol, max_sweeps)
    if sweeps < 0:
        raise ArithmeticError(f"Jacobi did not converge in {max_sweeps} sweeps")
    diag = np.diagonal(work).copy()
    order = np.argsort(diag, kind="stable")
    if vectors:
        return diag[order], vec[:, order], sweeps
    return diag[order], None, sweeps


cdef int _expand(const uint64_t* adj, uint64_t P, int size, int best) noexcept nogil:
    cdef int order[MAXN]
    cdef int colour[MAXN]
    cdef int cnt = 0, col = 0, v, i
    cdef uint64_t rest = P, cls, newp
    while rest:
        col += 1
        cls = rest
        while cls:
            v = _ctz(cls)
            cls &= ~_bit(v)
            cls &= ~adj[v]
            rest &= ~_bit(v)
            order[cnt] = v
            colour[cnt] = col
            cnt += 1
    i = cnt - 1
    while i >= 0:
        if size + colour[i] <= best:
            return best
        v = order[i]
        newp = P & adj[v]
        if newp == 0:
            if size + 1 > best:
                best = size + 1
        else:
            best = _expand(adj, newp, size + 1, best)
        P &= ~_bit(v)
        i -= 1
    return best


def max_clique(rows, int n):
    """Clique number of the graph whose neighbour bitsets are ``rows``."""
    cdef uint64_t adj[MAXN]
    cdef int i
    if n == 0:
        return 0
    if n > MAXN:
        raise ValueError("at most 64 vertices")
    for i in range(n):
        adj[i] = <uint64_t>rows[i]
    cdef uint64_t full = _bit(n) - 1 if n < 64 else ~(<uint64_t>0)
    return _expand(adj, full, 0, 0)


cdef inline void _decode(uint64_t mask, int n, const int* ei, const int* ej, uint64_t* adj) noexcept nogil:
    cdef int e, ne = n * (n - 1) // 2
    for e in range(n):
        adj[e] = 0
    for e in range(ne):
        if (mask >> e) & 1:
            adj[ei[e]] |= _bit(ej[e])
            adj[ej[e]] |= _bit(ei[e])


cdef inline bint _connected(const uint64_t* adj, int n) noexcept nogil:
    cdef uint64_t seen = 1, frontier = 1, nxt, f
    cdef uint64_t full = _bit(n) - 1
    cdef int v
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = _ctz(f)
            f &= f - 1
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == full


cdef void _edge_index(int n, int* ei, int* ej) noexcept nogil:
    cdef int i, j, e = 0
    for j in range(1, n):
        for i in range(j):
            ei[e] = i
            ej[e] = j
            e += 1


def connected_masks(int n, uint64_t lo, uint64_t hi):
    """Upper-triangle bitmasks in ``[lo, hi)`` whose graphs are connected."""
    if n < 1 or n > 11:
        raise ValueError("mask scans support 1 <= n <= 11")
    cdef int ei[64]
    cdef int ej[64]
    cdef uint64_t adj[MAXN]
    _edge_index(n, ei, ej)
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] out = np.empty(hi - lo if hi > lo else 0, dtype=np.uint64)
    cdef Py_ssize_t cnt = 0
    cdef uint64_t mask
    with nogil:
        mask = lo
        while mask < hi:
            _decode(mask, n, ei, ej, adj)
            if _connected(adj, n):
                out[cnt] = mask
                cnt += 1
            mask += 1
    return out[:cnt].copy()


def scan_connected(int n, uint64_t lo, uint64_t hi, double tol=1e-12, int max_sweeps=100):
    """For connected graphs with mask in ``[lo, hi)`` return ``(masks, omega, q1)``."""
    if n < 1 or n > 11:
        raise ValueError("mask scans support 1 <= n <= 11")
    cdef int ei[64]
    cdef int ej[64]
    cdef uint64_t adj[MAXN]
    cdef double* q = <double*>malloc(n * n * sizeof(double))
    if q == NULL:
        raise MemoryError()
    _edge_index(n, ei, ej)
    cdef Py_ssize_t size = hi - lo if hi > lo else 0
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] masks = np.empty(size, dtype=np.uint64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] omega = np.empty(size, dtype=np.uint8)
    cdef cnp.ndarray[double, ndim=1] q1 = np.empty(size, dtype=np.float64)
    cdef Py_ssize_t cnt = 0
    cdef uint64_t mask, full = _bit(n) - 1
    cdef int i, j, rc = 0
    cdef double best
    try:
        with nogil:
            mask = lo
            while mask < hi:
                _decode(mask, n, ei, ej, adj)
                if _connected(adj, n):
                    for i in range(n):
                        for j in range(n):
                            q[i * n + j] = 1.0 if (adj[i] >> j) & 1 else 0.0
                        q[i * n + i] = <double>_popcount(adj[i])
                    if _jacobi(q, n, NULL, tol, max_sweeps) < 0:
                        rc = -1
                        break
                    best = q[0]
                    for i in range(1, n):
                        if q[i * n + i] > best:
                            best = q[i * n + i]
                    masks[cnt] = mask
                    omega[cnt] = _expand(adj, full, 0, 0)
                    q1[cnt] = best
                    cnt += 1
                mask += 1
    finally:
        free(q)
    if rc < 0:
        raise ArithmeticError(f"Jacobi did not converge for mask {mask}")
    return masks[:cnt].copy(), omega[:cnt].copy(), q1[:cnt].copy()

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled component-labelling kernel (union-find over edge arrays)."""

import numpy as np


def cc_from_edges(Py_ssize_t n, us, vs):
    """Label the vertices 0..n-1 by connected component.

    Returns an int64 array ``labels`` with ``labels[v]`` the smallest vertex
    id in v's component.  Mirrors ``_purecc.cc_from_edges`` exactly.
    """
    cdef long long[::1] u64 = np.ascontiguousarray(us, dtype=np.int64)
    cdef long long[::1] v64 = np.ascontiguousarray(vs, dtype=np.int64)
    out = np.arange(n, dtype=np.int64)
    cdef long long[::1] parent = out
    cdef Py_ssize_t i, m = u64.shape[0]
    cdef long long a, b, r, nxt
    for i in range(m):
        a = u64[i]
        b = v64[i]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a < b:
            parent[b] = a
        elif b < a:
            parent[a] = b
    for i in range(n):
        r = i
        while parent[r] != r:
            r = parent[r]
        a = i
        while parent[a] != a:
            nxt = parent[a]
            parent[a] = r
            a = nxt
    return out

"""Pure-Python twin of the compiled component-labelling kernel.

Same contract as ``_fastcc.cc_from_edges``: selected automatically when the
extension is unavailable (or when COVERENDS_NO_EXT is set).
"""

from __future__ import annotations

import numpy as np


def cc_from_edges(n: int, us, vs) -> np.ndarray:
    """Label the vertices 0..n-1 by connected component.

    ``us``/``vs`` are equal-length int arrays of edge endpoints.  Returns an
    int64 array ``labels`` with ``labels[v]`` the smallest vertex id in v's
    component, so isolated vertices are their own labels.
    """
    parent = list(range(n))
    for a, b in zip(np.asarray(us).tolist(), np.asarray(vs).tolist()):
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
        while parent[i] != i:
            parent[i], i = r, parent[i]
    return np.array(parent, dtype=np.int64)

"""The compiled kernel and its pure-Python twin must agree exactly, and
both must match an independent component count."""

import random

import numpy as np
import pytest

from coverends import _purecc
from coverends._cc import USING_COMPILED

from oracles import component_count

try:
    from coverends import _fastcc
except ImportError:
    _fastcc = None

IMPLS = [("pure", _purecc.cc_from_edges)]
if _fastcc is not None:
    IMPLS.append(("fast", _fastcc.cc_from_edges))


def _random_graph(rng, n_max=60, density=1.4):
    n = rng.randrange(1, n_max)
    m = rng.randrange(0, int(n * density) + 1)
    us = np.array([rng.randrange(n) for _ in range(m)], dtype=np.int64)
    vs = np.array([rng.randrange(n) for _ in range(m)], dtype=np.int64)
    return n, us, vs


@pytest.mark.parametrize("name,cc", IMPLS)
def test_labels_are_component_minima(name, cc):
    rng = random.Random(99)
    for _ in range(60):
        n, us, vs = _random_graph(rng)
        labels = cc(n, us, vs)
        # label of v is the min vertex id in v's component
        for u, v in zip(us.tolist(), vs.tolist()):
            assert labels[u] == labels[v]
        for v in range(n):
            assert labels[labels[v]] == labels[v]
            assert labels[v] <= v


@pytest.mark.parametrize("name,cc", IMPLS)
def test_component_count_matches_networkx(name, cc):
    rng = random.Random(5)
    for _ in range(40):
        n, us, vs = _random_graph(rng)
        labels = cc(n, us, vs)
        got = len(set(labels.tolist()))
        expected = component_count(range(n),
                                   [(int(u), int(v), 0) for u, v in zip(us, vs)])
        assert got == expected


@pytest.mark.skipif(_fastcc is None, reason="compiled kernel not built")
def test_fast_and_pure_agree_exactly():
    rng = random.Random(42)
    for _ in range(80):
        n, us, vs = _random_graph(rng, n_max=200, density=2.0)
        assert np.array_equal(_purecc.cc_from_edges(n, us, vs),
                              _fastcc.cc_from_edges(n, us, vs))


def test_selector_reports_backend():
    assert isinstance(USING_COMPILED, bool)


def test_empty_graph():
    for _, cc in IMPLS:
        labels = cc(4, np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64))
        assert labels.tolist() == [0, 1, 2, 3]

"""Finite ball truncations of Cayley and Schreier graphs and the CW
calculus on them (complement, neighborhood, bridge edges, components,
covering projections, preimages).

A Ball is an immutable truncation of a (usually infinite) labelled graph:
vertices carry a canonical representative word and a distance from the
basepoint, edges are (u, v, g) cells meaning u*g = v.  Everything downstream
(subgraphs, filtrations, component systems) works on boolean masks over a
parent ball, so the set calculus stays vectorized; component labelling is
delegated to the union-find kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

import numpy as np

from ._cc import cc_from_edges
from .errors import BudgetExceededError, ProjectionError
from .groups import GroupModel, Subgroup
from .words import Word

DEFAULT_BUDGET = 500_000


class Ball:
    """A radius-R truncation of a Cayley or Schreier graph.

    ``complete`` is True iff the BFS exhausted the whole graph within the
    radius (finite graph), in which case nothing in the ball counts as
    horizon.  Otherwise the frontier is exactly the distance-R sphere.
    Instances are frozen after construction and safe to share.
    """

    def __init__(self, model: GroupModel, subgroup: Subgroup | None,
                 radius: int, complete: bool,
                 keys: list[Word], rep_keys: list[Hashable],
                 dist: np.ndarray, us: np.ndarray, vs: np.ndarray,
                 gs: np.ndarray):
        self.model = model
        self.subgroup = subgroup
        self.radius = radius
        self.complete = complete
        self.keys = keys
        self.rep_keys = rep_keys
        self.dist = dist
        self.us = us
        self.vs = vs
        self.gs = gs
        for arr in (dist, us, vs, gs):
            arr.setflags(write=False)
        self._edge_index: dict[tuple[int, int, int], int] | None = None

    @property
    def n_vertices(self) -> int:
        return len(self.keys)

    @property
    def n_edges(self) -> int:
        return len(self.us)

    @property
    def basepoint(self) -> int:
        return 0

    def edge_index(self) -> dict[tuple[int, int, int], int]:
        if self._edge_index is None:
            self._edge_index = {
                (int(u), int(v), int(g)): i
                for i, (u, v, g) in enumerate(zip(self.us, self.vs, self.gs))
            }
        return self._edge_index

    def edge_triples(self) -> list[tuple[int, int, int]]:
        return list(zip(self.us.tolist(), self.vs.tolist(), self.gs.tolist()))

    def full(self) -> "Subgraph":
        return Subgraph(self,
                        np.ones(self.n_vertices, dtype=bool),
                        np.ones(self.n_edges, dtype=bool))

    def empty(self) -> "Subgraph":
        return Subgraph(self,
                        np.zeros(self.n_vertices, dtype=bool),
                        np.zeros(self.n_edges, dtype=bool))

    def induced(self, vmask: np.ndarray) -> "Subgraph":
        emask = vmask[self.us] & vmask[self.vs]
        return Subgraph(self, vmask, emask)

    def metric_subgraph(self, r: int) -> "Subgraph":
        """Induced subgraph on vertices within distance r of the basepoint."""
        return self.induced(self.dist <= r)

    def __repr__(self) -> str:
        kind = "cayley" if self.subgroup is None else "schreier"
        return (f"Ball({kind}, {self.model!r}, R={self.radius}, "
                f"V={self.n_vertices}, E={self.n_edges}, complete={self.complete})")


class Subgraph:
    """A subgraph of a Ball as (vertex mask, edge mask).

    Edge endpoints must lie in the vertex set (subcomplex condition);
    bridge-edge collections are therefore returned as edge-id arrays, not
    Subgraphs.
    """

    __slots__ = ("ball", "vmask", "emask")

    def __init__(self, ball: Ball, vmask: np.ndarray, emask: np.ndarray):
        vmask = np.asarray(vmask, dtype=bool)
        emask = np.asarray(emask, dtype=bool)
        if vmask.shape != (ball.n_vertices,) or emask.shape != (ball.n_edges,):
            raise ValueError("mask shapes do not match the ball")
        bad = emask & ~(vmask[ball.us] & vmask[ball.vs])
        if bad.any():
            raise ValueError("subgraph edge with endpoint outside vertex set")
        vmask.setflags(write=False)
        emask.setflags(write=False)
        self.ball = ball
        self.vmask = vmask
        self.emask = emask

    @property
    def n_vertices(self) -> int:
        return int(self.vmask.sum())

    @property
    def n_edges(self) -> int:
        return int(self.emask.sum())

    def vertex_ids(self) -> np.ndarray:
        return np.flatnonzero(self.vmask)

    def edge_ids(self) -> np.ndarray:
        return np.flatnonzero(self.emask)

    def vertex_keys(self) -> list[Word]:
        return [self.ball.keys[i] for i in self.vertex_ids()]

    def issubset(self, other: "Subgraph") -> bool:
        return (self.ball is other.ball
                and not (self.vmask & ~other.vmask).any()
                and not (self.emask & ~other.emask).any())

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgraph) and self.ball is other.ball
                and np.array_equal(self.vmask, other.vmask)
                and np.array_equal(self.emask, other.emask))

    def __hash__(self):
        raise TypeError("Subgraph is not hashable")

    def restrict_to_radius(self, r: int) -> "Subgraph":
        vmask = self.vmask & (self.ball.dist <= r)
        emask = self.emask & vmask[self.ball.us] & vmask[self.ball.vs]
        return Subgraph(self.ball, vmask, emask)

    def __repr__(self) -> str:
        return f"Subgraph(V={self.n_vertices}, E={self.n_edges} of {self.ball!r})"


GraphLike = Ball | Subgraph


def as_subgraph(g: GraphLike) -> Subgraph:
    return g.full() if isinstance(g, Ball) else g


# ---------------------------------------------------------------------------
# Ball construction


def _expansion_letters(model: GroupModel) -> range:
    # signed letters in shortlex order: a, a^-1, b, b^-1, ...
    return range(2 * model.rank)


def _build_ball(model: GroupModel, subgroup: Subgroup | None, radius: int,
                budget: int, context: str) -> Ball:
    """BFS out to the radius, expanding frontier vertices too so that
    same-distance edges are collected and completeness is exact."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if subgroup is None:
        def dedup(k):
            return k
    else:
        dedup = subgroup.coset_key
    k0 = model.identity_key()
    rep_keys: list[Hashable] = [k0]
    index: dict[Hashable, int] = {dedup(k0): 0}
    dist = [0]
    us: list[int] = []
    vs: list[int] = []
    gs: list[int] = []
    edge_seen: set[tuple[int, int, int]] = set()
    complete = True
    u = 0
    while u < len(rep_keys):
        du = dist[u]
        ku = rep_keys[u]
        for x in _expansion_letters(model):
            k2 = model.step(ku, x)
            ck = dedup(k2)
            vid = index.get(ck)
            if vid is None:
                if du >= radius:
                    complete = False
                    continue
                vid = len(rep_keys)
                if vid >= budget:
                    raise BudgetExceededError(budget, context)
                rep_keys.append(k2)
                index[ck] = vid
                dist.append(du + 1)
            cell = (u, vid, x >> 1) if x % 2 == 0 else (vid, u, x >> 1)
            if cell not in edge_seen:
                edge_seen.add(cell)
                us.append(cell[0])
                vs.append(cell[1])
                gs.append(cell[2])
        u += 1
    keys = [model.key_to_word(k) for k in rep_keys]
    return Ball(model, subgroup, radius, complete, keys, rep_keys,
                np.asarray(dist, dtype=np.int64),
                np.asarray(us, dtype=np.int64),
                np.asarray(vs, dtype=np.int64),
                np.asarray(gs, dtype=np.int64))


def cayley_ball(model: GroupModel, radius: int,
                budget: int = DEFAULT_BUDGET) -> Ball:
    """Word-metric ball in the Cayley graph; vertex keys are normal forms."""
    return _build_ball(model, None, radius, budget, f"cayley ball of {model!r}")


def schreier_ball(model: GroupModel, subgroup: Subgroup, radius: int,
                  budget: int = DEFAULT_BUDGET) -> Ball:
    """Ball in the right-coset graph of the subgroup.

    Cosets Hg are identified via the subgroup's canonical coset key (the
    same identification as pairwise w * v^-1 membership); the stored key is
    the first-discovered shortlex representative word.
    """
    return _build_ball(model, subgroup, radius, budget,
                       f"schreier ball of {model!r}")


# ---------------------------------------------------------------------------
# CW calculus


def cw_complement(g: GraphLike, a: Subgraph) -> Subgraph:
    """Largest subgraph of g on the vertices outside a (induced off a)."""
    g = as_subgraph(g)
    _same_ball(g, a)
    ball = g.ball
    vmask = g.vmask & ~a.vmask
    emask = g.emask & vmask[ball.us] & vmask[ball.vs]
    return Subgraph(ball, vmask, emask)


def cw_neighborhood(g: GraphLike, a: Subgraph) -> Subgraph:
    """a together with every g-edge meeting it and those edges' endpoints."""
    g = as_subgraph(g)
    _same_ball(g, a)
    ball = g.ball
    touched = g.emask & (a.vmask[ball.us] | a.vmask[ball.vs])
    vmask = a.vmask.copy()
    vmask[ball.us[touched]] = True
    vmask[ball.vs[touched]] = True
    vmask &= g.vmask | a.vmask
    return Subgraph(ball, vmask, a.emask | touched)


def bridge_edges(g: GraphLike, a: Subgraph) -> np.ndarray:
    """Ids of g-edges with exactly one endpoint in a."""
    g = as_subgraph(g)
    _same_ball(g, a)
    ball = g.ball
    mask = g.emask & (a.vmask[ball.us] ^ a.vmask[ball.vs])
    return np.flatnonzero(mask)


def _same_ball(g: Subgraph, a: Subgraph) -> None:
    if g.ball is not a.ball:
        raise ValueError("subgraphs live on different balls")


# ---------------------------------------------------------------------------
# Components


@dataclass
class Component:
    """One connected component: vertex ids plus the horizon verdict."""

    vertices: np.ndarray
    horizon: bool
    root: int


class Components:
    """Connected components of a subgraph with horizon flags.

    A component is horizon-flagged iff the parent ball is incomplete and the
    component contains a vertex on the distance-R sphere (the truncation
    frontier).  Complete balls have no horizon: the graph was exhausted.
    """

    def __init__(self, sub: Subgraph):
        ball = sub.ball
        n = ball.n_vertices
        labels = cc_from_edges(n, ball.us[sub.emask], ball.vs[sub.emask])
        labels = np.where(sub.vmask, labels, -1)
        self.subgraph = sub
        self.labels = labels
        roots = np.unique(labels[sub.vmask])
        if ball.complete:
            horizon_roots: set[int] = set()
        else:
            frontier = sub.vmask & (ball.dist == ball.radius)
            horizon_roots = set(np.unique(labels[frontier]).tolist())
        self.comps: list[Component] = []
        self._index_of_root: dict[int, int] = {}
        for r in roots.tolist():
            self._index_of_root[r] = len(self.comps)
            self.comps.append(Component(
                vertices=np.flatnonzero(labels == r),
                horizon=r in horizon_roots,
                root=r,
            ))

    def __len__(self) -> int:
        return len(self.comps)

    def __iter__(self):
        return iter(self.comps)

    @property
    def horizon_count(self) -> int:
        return sum(1 for c in self.comps if c.horizon)

    @property
    def trapped_count(self) -> int:
        """Number of non-horizon (bounded at desk scale) components."""
        return sum(1 for c in self.comps if not c.horizon)

    def index_of_vertex(self, v: int) -> int:
        r = int(self.labels[v])
        if r < 0:
            raise KeyError(f"vertex {v} not in subgraph")
        return self._index_of_root[r]


def components(sub: Subgraph) -> Components:
    """Connected components with horizon flags (union-find kernel)."""
    return Components(sub)


# ---------------------------------------------------------------------------
# Covering projections


class Projection:
    """Label-preserving projection from a cover ball onto a base ball.

    ``vertex_map[v]`` is the base vertex of the coset of v's representative
    (or -1 when that coset falls outside the base truncation; only possible
    when the cover radius exceeds the base radius).  ``edge_map`` maps edge
    cells accordingly.
    """

    def __init__(self, cover: Ball, base: Ball, subgroup: Subgroup,
                 vertex_map: np.ndarray, edge_map: np.ndarray):
        self.cover = cover
        self.base = base
        self.subgroup = subgroup
        vertex_map.setflags(write=False)
        edge_map.setflags(write=False)
        self.vertex_map = vertex_map
        self.edge_map = edge_map

    @property
    def is_total(self) -> bool:
        return bool((self.vertex_map >= 0).all())

    def mapped_region(self) -> Subgraph:
        """Subgraph of the cover on which the projection is defined."""
        return Subgraph(self.cover, self.vertex_map >= 0, self.edge_map >= 0)

    @classmethod
    def identity(cls, ball: Ball, subgroup: Subgroup) -> "Projection":
        n = ball.n_vertices
        return cls(ball, ball, subgroup,
                   np.arange(n, dtype=np.int64),
                   np.arange(ball.n_edges, dtype=np.int64))


def project(cover: Ball, base: Ball, subgroup: Subgroup) -> Projection:
    """Project a Cayley (or finer Schreier) ball onto the Schreier ball of
    the subgroup, matching cosets canonically.

    Total whenever cover.radius <= base.radius (every cover vertex's coset
    then lies within the base truncation); with a larger cover the map is
    partial and vertices over missing cosets are unmapped.
    """
    ck = subgroup.coset_key
    base_lookup: dict[Hashable, int] = {}
    for i, k in enumerate(base.rep_keys):
        key = ck(k)
        if key in base_lookup:
            raise ProjectionError(
                "two base vertices share a coset; base is not a Schreier "
                "ball of the given subgroup")
        base_lookup[key] = i
    n = cover.n_vertices
    vm = np.empty(n, dtype=np.int64)
    for i, k in enumerate(cover.rep_keys):
        vm[i] = base_lookup.get(ck(k), -1)
    if cover.radius <= base.radius and (vm < 0).any():
        missing = int(np.flatnonzero(vm < 0)[0])
        raise ProjectionError(
            f"unmatched coset for cover vertex "
            f"{cover.model.format(cover.keys[missing])!r}; inconsistent ball pair")
    eindex = base.edge_index()
    em = np.empty(cover.n_edges, dtype=np.int64)
    cus, cvs, cgs = cover.us.tolist(), cover.vs.tolist(), cover.gs.tolist()
    for e in range(cover.n_edges):
        pu = vm[cus[e]]
        pv = vm[cvs[e]]
        if pu < 0 or pv < 0:
            em[e] = -1
            continue
        eid = eindex.get((int(pu), int(pv), cgs[e]))
        if eid is None:
            raise ProjectionError(
                "cover edge with both endpoints mapped has no image edge; "
                "inconsistent ball pair")
        em[e] = eid
    return Projection(cover, base, subgroup, vm, em)


def preimage(p: Projection, c: Subgraph) -> Subgraph:
    """All cover vertices and edges mapping into the base subgraph c."""
    if c.ball is not p.base:
        raise ValueError("subgraph does not live on the projection's base")
    vm, em = p.vertex_map, p.edge_map
    vmask = np.zeros(p.cover.n_vertices, dtype=bool)
    hit = vm >= 0
    vmask[hit] = c.vmask[vm[hit]]
    emask = np.zeros(p.cover.n_edges, dtype=bool)
    ehit = em >= 0
    emask[ehit] = c.emask[em[ehit]]
    return Subgraph(p.cover, vmask, emask)

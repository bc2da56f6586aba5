"""End-count estimation: per-level components of cover complements, the
inclusion maps between consecutive levels, and the stabilization verdict.

The estimator realizes the inverse-limit count at desk scale: level n holds
the components of (cover minus the pulled-back level-n subgraph), flagged
unbounded when they touch the truncation horizon.  The count is declared
stable only when the last ``window`` levels agree *and* the inclusion maps
between their horizon components are bijections; equal counts alone can
mask a merge-plus-split.  An infinite count is never asserted, only
signalled as non-stabilized with strictly increasing counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .filtrations import Filtration, ball_filtration, regularize
from .graphs import (
    DEFAULT_BUDGET,
    Ball,
    Components,
    Projection,
    cayley_ball,
    components,
    cw_complement,
    preimage,
    project,
    schreier_ball,
)
from .groups import GroupModel, Subgroup

DEFAULT_WINDOW = 3


@dataclass(frozen=True)
class EndsParams:
    """Truncation parameters shared by the end-count pipelines."""

    n_max: int = 5
    margin: int | None = None  # defaults to n_max (cover radius 2 * n_max)
    window: int = DEFAULT_WINDOW
    budget: int = DEFAULT_BUDGET

    @property
    def resolved_margin(self) -> int:
        return self.n_max if self.margin is None else self.margin


class ComponentSystem:
    """Per-level complement components plus level-to-level inclusion maps.

    ``maps[n]`` sends each level-(n+1) component index to the index of the
    level-n component containing it (complements are nested downward).
    """

    def __init__(self, projection: Projection, filtration: Filtration,
                 margin: int):
        cover = projection.cover
        if cover.radius < filtration.n_max + margin:
            raise ValueError(
                f"cover radius {cover.radius} too small for n_max="
                f"{filtration.n_max} with margin {margin}")
        self.projection = projection
        self.filtration = filtration
        self.margin = margin
        full = cover.full()
        self.levels: list[Components] = []
        for lv in filtration.levels:
            pulled = preimage(projection, lv)
            self.levels.append(components(cw_complement(full, pulled)))
        self.maps: list[np.ndarray] = []
        for lo, hi in zip(self.levels, self.levels[1:]):
            m = np.empty(len(hi.comps), dtype=np.int64)
            for j, c in enumerate(hi.comps):
                i = lo.index_of_vertex(int(c.vertices[0]))
                m[j] = i
                if c.horizon and not lo.comps[i].horizon:
                    raise AssertionError(
                        "horizon component mapped into a non-horizon one")
            self.maps.append(m)

    @property
    def n_levels(self) -> int:
        return len(self.levels)

    def raw_horizon_counts(self) -> list[int]:
        return [lvl.horizon_count for lvl in self.levels]

    def counted_indices(self, n: int) -> set[int]:
        """Indices of the components counted at level n.

        A horizon component is counted only if some level-(n+1) component
        inside it is again horizon: fragments that touch the frontier but
        support no deeper thread of the inverse system are truncation
        artifacts (e.g. pinched-off corners of the cover ball), not ends.
        At the deepest level there is no lookahead, so the raw flag decides.
        """
        lvl = self.levels[n]
        if n == len(self.levels) - 1:
            return {i for i, c in enumerate(lvl.comps) if c.horizon}
        has_horizon_child = {
            int(self.maps[n][j])
            for j, c in enumerate(self.levels[n + 1].comps) if c.horizon}
        return {i for i, c in enumerate(lvl.comps)
                if c.horizon and i in has_horizon_child}

    def horizon_counts(self) -> list[int]:
        return [len(self.counted_indices(n)) for n in range(len(self.levels))]

    def horizon_bijective(self, n: int) -> bool:
        """Whether the inclusion map restricted to counted components is a
        bijection from level n+1 onto level n."""
        his = self.counted_indices(n)
        images = [int(self.maps[n][j]) for j in self.counted_indices(n + 1)]
        return len(set(images)) == len(images) and set(images) == his


def component_system(projection: Projection, filtration: Filtration,
                     margin: int) -> ComponentSystem:
    return ComponentSystem(projection, filtration, margin)


@dataclass
class EndsEstimate:
    """Stabilized end count, or an honest refusal to name one.

    ``value`` is set only when ``stabilized``; otherwise ``lower_bound``
    (the max observed count) is all that truncation certifies, and
    ``increasing`` flags the strictly-growing pattern consistent with
    infinitely many ends.
    """

    counts: list[int]
    stabilized: bool
    value: int | None
    lower_bound: int
    window: int
    margin: int
    increasing: bool
    kind: str = "ends"
    notes: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        if self.stabilized:
            return f"{self.value}"
        tag = "increasing" if self.increasing else "not stabilized"
        return f">={self.lower_bound} ({tag})"


def ends_estimate(cs: ComponentSystem, window: int = DEFAULT_WINDOW) -> EndsEstimate:
    counts = cs.horizon_counts()
    if len(counts) < window:
        raise ValueError(
            f"need at least window={window} levels, have {len(counts)}")
    tail = counts[-window:]
    stabilized = len(set(tail)) == 1 and all(
        cs.horizon_bijective(n)
        for n in range(len(counts) - window, len(counts) - 1))
    increasing = all(a < b for a, b in zip(counts, counts[1:]))
    return EndsEstimate(
        counts=counts,
        stabilized=stabilized,
        value=tail[-1] if stabilized else None,
        lower_bound=max(counts),
        window=window,
        margin=cs.margin,
        increasing=increasing,
    )


# ---------------------------------------------------------------------------
# Pipelines


def pair_setup(model: GroupModel, subgroup: Subgroup, n_max: int,
               margin: int | None = None,
               budget: int = DEFAULT_BUDGET) -> tuple[Ball, Ball, Projection]:
    """Build (cover, base, projection) for a pair computation: the Cayley
    ball of radius n_max + margin over the Schreier ball of radius n_max."""
    mg = n_max if margin is None else margin
    base = schreier_ball(model, subgroup, n_max, budget=budget)
    cover = cayley_ball(model, n_max + mg, budget=budget)
    return cover, base, project(cover, base, subgroup)


def estimate_for_filtration(projection: Projection, filtration: Filtration,
                            margin: int,
                            window: int = DEFAULT_WINDOW) -> EndsEstimate:
    """Run the estimator over an explicit (already built) filtration."""
    return ends_estimate(component_system(projection, filtration, margin),
                         window=window)


def group_ends(model: GroupModel, n_max: int, margin: int | None = None,
               window: int = DEFAULT_WINDOW,
               budget: int = DEFAULT_BUDGET) -> EndsEstimate:
    """End count of the group itself (trivial subgroup; self-projection)."""
    mg = n_max if margin is None else margin
    ball = cayley_ball(model, n_max + mg, budget=budget)
    p = Projection.identity(ball, model.trivial_subgroup())
    f = regularize(ball_filtration(ball, n_max))
    est = estimate_for_filtration(p, f, mg, window=window)
    est.kind = "group-ends"
    return est


def pair_ends(model: GroupModel, subgroup: Subgroup, n_max: int,
              margin: int | None = None, window: int = DEFAULT_WINDOW,
              budget: int = DEFAULT_BUDGET) -> EndsEstimate:
    """Filtered end count of the pair (group, subgroup).

    Counts horizon components of the Cayley-ball complements of pulled-back
    metric levels of the Schreier ball, after regularizing the base
    filtration.  When the Schreier graph is finite and exhausted by the top
    level, the count is 0 (the complement empties out): the finite-index
    regime.
    """
    mg = n_max if margin is None else margin
    cover, base, p = pair_setup(model, subgroup, n_max, margin=mg,
                                budget=budget)
    f = regularize(ball_filtration(base, n_max))
    est = estimate_for_filtration(p, f, mg, window=window)
    est.kind = "pair-ends"
    if base.complete and bool(f.levels[-1].vmask.all()):
        if est.counts[-1] != 0:
            raise AssertionError("saturated base with nonempty complement")
        est.stabilized = True
        est.value = 0
        est.notes.append("schreier ball saturated; complement empties out")
    return est

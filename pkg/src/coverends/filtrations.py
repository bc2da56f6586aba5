"""Finite filtrations of a base ball: metric filtrations, the
well-filtered check, and the regularization that absorbs trapped
(non-horizon) complement components into each level.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Ball, Subgraph, components, cw_complement, cw_neighborhood


@dataclass
class Filtration:
    """Monotone sequence of subgraphs of one base ball."""

    base: Ball
    levels: list[Subgraph]
    kind: str  # "metric-ball" | "regularized" | "custom"

    def __post_init__(self):
        if not self.levels:
            raise ValueError("a filtration needs at least one level")
        for lv in self.levels:
            if lv.ball is not self.base:
                raise ValueError("filtration level lives on a different ball")
        for lo, hi in zip(self.levels, self.levels[1:]):
            if not lo.issubset(hi):
                raise ValueError("filtration levels are not monotone")

    @property
    def n_max(self) -> int:
        return len(self.levels) - 1

    def subsequence(self, stride: int) -> "Filtration":
        """Every stride-th level (a cofinal subsequence filtration)."""
        if stride < 1:
            raise ValueError("stride must be >= 1")
        return Filtration(self.base, self.levels[::stride], "custom")


def ball_filtration(base: Ball, n_max: int) -> Filtration:
    """Metric filtration: level n is the induced ball of radius n."""
    if n_max > base.radius:
        raise ValueError(
            f"n_max={n_max} exceeds the base radius {base.radius}")
    levels = [base.metric_subgraph(n) for n in range(n_max + 1)]
    return Filtration(base, levels, "metric-ball")


def check_well_filtered(f: Filtration, interior: int) -> tuple[bool, int | None]:
    """Check that each level's neighborhood, within the interior region, is
    absorbed by some level; returns (ok, first failing level index).

    The neighborhood is intersected with the radius-``interior`` region
    before testing containment, because near the truncation frontier the
    absorbing level lies outside the ball.
    """
    if interior > f.base.radius:
        raise ValueError("interior region exceeds the base radius")
    full = f.base.full()
    for i, lv in enumerate(f.levels):
        nb = cw_neighborhood(full, lv).restrict_to_radius(interior)
        if not any(nb.issubset(lj) for lj in f.levels[i:]):
            return False, i
    return True, None


def regularize(f: Filtration) -> Filtration:
    """Absorb every non-horizon component of each level's complement.

    Desk-scale reading of augmenting a level by the finite components of
    its complement: a trapped component (one that never reaches the
    truncation frontier) is the truncated stand-in for a finite one.
    Monotonicity is preserved because complements shrink as levels grow.
    """
    base = f.base
    full = base.full()
    out: list[Subgraph] = []
    for lv in f.levels:
        comp = cw_complement(full, lv)
        cs = components(comp)
        absorbed = np.zeros(base.n_vertices, dtype=bool)
        for c in cs:
            if not c.horizon:
                absorbed[c.vertices] = True
        if not absorbed.any():
            out.append(lv)
            continue
        vmask = lv.vmask | absorbed
        emask = lv.emask | (comp.emask & absorbed[base.us] & absorbed[base.vs])
        out.append(Subgraph(base, vmask, emask))
    return Filtration(base, out, "regularized")

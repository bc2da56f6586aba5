"""Checkers for the two-subgroup statements: the finite/infinite relative
index dichotomy for the lower chain, the monotonicity of pair counts, and
the five-regime classification of end behavior above and below a subgroup.

A VIOLATED verdict on a proved statement is an artifact bug signal (bad
truncation parameters or an implementation defect), never a counterexample;
the detail strings say so.  The infinite-count regime is diagnostic only,
since truncation cannot certify infinity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ends import EndsEstimate, EndsParams, pair_ends
from .groups import (
    GroupModel,
    Index,
    Subgroup,
    relative_index,
    validate_chain,
)

CONFIRMED = "CONFIRMED"
VIOLATED = "VIOLATED"
INCONCLUSIVE = "INCONCLUSIVE"

_BUG_SIGNAL = ("the statement is proved, so a violation signals a truncation "
               "or implementation defect, not a counterexample")


@dataclass
class RegimeInfo:
    """One cell of the end-behavior picture for (G, K) relative to H."""

    label: str                  # "0" | "n" | "1" | "infinity"
    side: str                   # "ambient" | "below" | "above"
    predicted: int | str | None
    hypotheses_met: bool
    diagnostic_only: bool
    detail: str


@dataclass
class CheckResult:
    verdict: str
    predicted: int | str | None
    computed: int | None
    detail: str
    regime: RegimeInfo | None = None
    estimates: dict[str, EndsEstimate] = field(default_factory=dict)


class EstimateCache:
    """Memo for pair-end estimates shared across the checks of one run."""

    def __init__(self, model: GroupModel):
        self.model = model
        self._memo: dict[tuple, EndsEstimate] = {}

    def pair_ends(self, name: str, sub: Subgroup,
                  params: EndsParams) -> EndsEstimate:
        key = (name, params.n_max, params.resolved_margin, params.window,
               params.budget)
        if key not in self._memo:
            self._memo[key] = pair_ends(
                self.model, sub, params.n_max, margin=params.margin,
                window=params.window, budget=params.budget)
        return self._memo[key]


def _containment(h: Subgroup, k: Subgroup) -> tuple[bool, bool]:
    k_in_h = all(h.contains(g) for g in k.generators)
    h_in_k = all(k.contains(g) for g in h.generators)
    return k_in_h, h_in_k


def classify_regime(model: GroupModel, h: Subgroup, k: Subgroup,
                    e_over: EndsEstimate) -> RegimeInfo:
    """Place (G, K) in one of the five regimes relative to H.

    ``e_over`` is the (already computed) estimate for (G, H).  The lower
    regimes assume a finite non-zero count over H, the upper ones a count
    strictly between 1 and infinity; unmet hypotheses are reported, not
    silently ignored.
    """
    idx_gk = k.index()
    if idx_gk.is_finite:
        return RegimeInfo(
            label="0", side="ambient", predicted=0, hypotheses_met=True,
            diagnostic_only=False,
            detail=f"[G:K] = {idx_gk} is finite, so the pair count is 0")
    k_in_h, h_in_k = _containment(h, k)
    n = e_over.value if e_over.stabilized else None
    if k_in_h:
        rel = relative_index(h, k)
        ok = n is not None and 0 < n
        if rel.is_finite:
            return RegimeInfo(
                label="n", side="below",
                predicted=n if ok else None, hypotheses_met=ok,
                diagnostic_only=False,
                detail=f"K below H with [H:K] = {rel} finite: count carries over")
        return RegimeInfo(
            label="1", side="below", predicted=1 if ok else None,
            hypotheses_met=ok, diagnostic_only=False,
            detail="K below H with [H:K] infinite: count collapses to 1")
    if h_in_k:
        rel = relative_index(k, h)
        ok = n is not None and 1 < n
        if rel.is_finite:
            return RegimeInfo(
                label="n", side="above",
                predicted=n if ok else None, hypotheses_met=ok,
                diagnostic_only=False,
                detail=f"K above H with [K:H] = {rel} finite: count carries over")
        return RegimeInfo(
            label="infinity", side="above",
            predicted="infinite" if ok else None, hypotheses_met=ok,
            diagnostic_only=True,
            detail="K above H with [K:H] infinite: contrapositive predicts "
                   "infinitely many ends (diagnostic only; truncation cannot "
                   "certify infinity)")
    raise_chain_error = validate_chain  # reuse the error message path
    raise_chain_error(h, k)  # raises; the subgroups are not nested
    raise AssertionError("unreachable")


def check_corollary(model: GroupModel, h: Subgroup, k: Subgroup,
                    params: EndsParams,
                    cache: EstimateCache | None = None,
                    names: tuple[str, str] = ("H", "K")) -> CheckResult:
    """Check the lower-chain dichotomy on a concrete instance: with
    0 < e(G,H) < infinity and [G:H] infinite, e(G,K) should equal e(G,H)
    when [H:K] is finite and 1 when it is infinite."""
    validate_chain(h, k)
    cache = cache or EstimateCache(model)
    e_h = cache.pair_ends(names[0], h, params)
    e_k = cache.pair_ends(names[1], k, params)
    ests = {names[0]: e_h, names[1]: e_k}
    regime = classify_regime(model, h, k, e_h) if _nested(h, k) else None
    if not e_h.stabilized:
        return CheckResult(INCONCLUSIVE, None, None,
                           f"count over {names[0]} did not stabilize", regime, ests)
    n = e_h.value
    if n == 0:
        return CheckResult(
            INCONCLUSIVE, None, None,
            f"count over {names[0]} is 0 (finite index), outside the "
            "hypothesis 0 < e(G,H)", regime, ests)
    idx_gh = h.index()
    if idx_gh.is_finite:
        return CheckResult(
            INCONCLUSIVE, None, None,
            f"[G:{names[0]}] = {idx_gh} is finite, so {names[0]} is not a "
            "proper infinite-index subgroup", regime, ests)
    rel = relative_index(h, k)
    predicted = n if rel.is_finite else 1
    if not e_k.stabilized:
        return CheckResult(
            INCONCLUSIVE, predicted, None,
            f"count over {names[1]} did not stabilize", regime, ests)
    if e_k.value == predicted:
        detail = (f"e(G,{names[0]}) = {n}, [{names[0]}:{names[1]}] = {rel}, "
                  f"predicted e(G,{names[1]}) = {predicted}, computed {e_k.value}")
        return CheckResult(CONFIRMED, predicted, e_k.value, detail, regime, ests)
    return CheckResult(
        VIOLATED, predicted, e_k.value,
        f"predicted {predicted} but computed {e_k.value}; {_BUG_SIGNAL}",
        regime, ests)


def check_monotonicity(model: GroupModel, h: Subgroup, k: Subgroup,
                       params: EndsParams,
                       cache: EstimateCache | None = None,
                       names: tuple[str, str] = ("H", "K")) -> CheckResult:
    """Check that refining the cover never raises the count: for K below H,
    e(G,K) <= e(G,H) whenever both stabilize at a positive count over H.

    When e(G,H) = 0 the monotonicity regime does not apply (the coarse count
    vanishes for finite index); the finite-index saturation is checked
    against the regime picture instead."""
    validate_chain(h, k)
    cache = cache or EstimateCache(model)
    e_h = cache.pair_ends(names[0], h, params)
    e_k = cache.pair_ends(names[1], k, params)
    ests = {names[0]: e_h, names[1]: e_k}
    regime = classify_regime(model, h, k, e_h)
    if not (e_h.stabilized and e_k.stabilized):
        which = names[0] if not e_h.stabilized else names[1]
        return CheckResult(INCONCLUSIVE, None, None,
                           f"count over {which} did not stabilize", regime, ests)
    if e_h.value == 0:
        idx = h.index()
        if idx.is_finite:
            return CheckResult(
                CONFIRMED, 0, e_h.value,
                f"e(G,{names[0]}) = 0 with [G:{names[0]}] = {idx} finite: "
                "monotonicity hypothesis regime does not apply; the "
                "finite-index saturation regime is confirmed instead",
                regime, ests)
        return CheckResult(
            VIOLATED, None, e_h.value,
            f"e(G,{names[0]}) = 0 but [G:{names[0]}] is infinite; "
            f"{_BUG_SIGNAL}", regime, ests)
    if e_k.value <= e_h.value:
        return CheckResult(
            CONFIRMED, None, e_k.value,
            f"e(G,{names[1]}) = {e_k.value} <= e(G,{names[0]}) = {e_h.value}",
            regime, ests)
    return CheckResult(
        VIOLATED, None, e_k.value,
        f"e(G,{names[1]}) = {e_k.value} > e(G,{names[0]}) = {e_h.value}; "
        f"{_BUG_SIGNAL}", regime, ests)


def check_regime(model: GroupModel, h: Subgroup, k: Subgroup,
                 params: EndsParams,
                 cache: EstimateCache | None = None,
                 names: tuple[str, str] = ("H", "K")) -> CheckResult:
    """Classify the regime and, when its hypotheses hold and it is not
    diagnostic-only, compare the prediction with the computed count."""
    cache = cache or EstimateCache(model)
    e_h = cache.pair_ends(names[0], h, params)
    regime = classify_regime(model, h, k, e_h)
    ests = {names[0]: e_h}
    if not regime.hypotheses_met or regime.diagnostic_only:
        return CheckResult(INCONCLUSIVE, regime.predicted, None,
                           regime.detail, regime, ests)
    e_k = cache.pair_ends(names[1], k, params)
    ests[names[1]] = e_k
    if not e_k.stabilized:
        return CheckResult(INCONCLUSIVE, regime.predicted, None,
                           f"count over {names[1]} did not stabilize",
                           regime, ests)
    if e_k.value == regime.predicted:
        return CheckResult(CONFIRMED, regime.predicted, e_k.value,
                           regime.detail, regime, ests)
    return CheckResult(
        VIOLATED, regime.predicted, e_k.value,
        f"regime predicts {regime.predicted} but computed {e_k.value}; "
        f"{_BUG_SIGNAL}", regime, ests)


def _nested(h: Subgroup, k: Subgroup) -> bool:
    k_in_h, h_in_k = _containment(h, k)
    return k_in_h or h_in_k

"""coverends: desk-scale end counts of groups and filtered end counts of
group pairs, computed on truncated Cayley and Schreier graphs.

The pipeline: a group model with decidable normal forms and subgroup
oracles -> finite covering-graph balls -> complement/neighborhood calculus
-> per-level component systems over a filtration -> a stabilization verdict
for the end count.  Checkers compare computed counts against the proved
finite/infinite index dichotomy and the monotonicity of pair counts.
"""

__version__ = "0.1.0"

from ._cc import USING_COMPILED
from .checks import (
    CONFIRMED,
    INCONCLUSIVE,
    VIOLATED,
    CheckResult,
    EstimateCache,
    RegimeInfo,
    check_corollary,
    check_monotonicity,
    check_regime,
    classify_regime,
)
from .ends import (
    ComponentSystem,
    EndsEstimate,
    EndsParams,
    component_system,
    ends_estimate,
    estimate_for_filtration,
    group_ends,
    pair_ends,
    pair_setup,
)
from .errors import (
    BudgetExceededError,
    ChainError,
    CoverEndsError,
    JobError,
    ProjectionError,
    UnsupportedSubgroupError,
    WordSyntaxError,
)
from .filtrations import (
    Filtration,
    ball_filtration,
    check_well_filtered,
    regularize,
)
from .graphs import (
    DEFAULT_BUDGET,
    Ball,
    Component,
    Components,
    Projection,
    Subgraph,
    bridge_edges,
    cayley_ball,
    components,
    cw_complement,
    cw_neighborhood,
    preimage,
    project,
    schreier_ball,
)
from .groups import (
    DirectProduct,
    FreeAbelian,
    FreeGroup,
    GroupModel,
    Index,
    Subgroup,
    free_reduce,
    is_member,
    normal_form,
    relative_index,
    subgroup_index,
    validate_chain,
)
from .jobs import Job, Task, job_from_dict, load_job
from .report import Report, run_job
from .words import IDENTITY, Word

__all__ = [
    "USING_COMPILED", "CONFIRMED", "INCONCLUSIVE", "VIOLATED",
    "CheckResult", "EstimateCache", "RegimeInfo",
    "check_corollary", "check_monotonicity", "check_regime",
    "classify_regime",
    "ComponentSystem", "EndsEstimate", "EndsParams", "component_system",
    "ends_estimate", "estimate_for_filtration", "group_ends", "pair_ends",
    "pair_setup",
    "BudgetExceededError", "ChainError", "CoverEndsError", "JobError",
    "ProjectionError", "UnsupportedSubgroupError", "WordSyntaxError",
    "Filtration", "ball_filtration", "check_well_filtered", "regularize",
    "DEFAULT_BUDGET", "Ball", "Component", "Components", "Projection",
    "Subgraph", "bridge_edges", "cayley_ball", "components",
    "cw_complement", "cw_neighborhood", "preimage", "project",
    "schreier_ball",
    "DirectProduct", "FreeAbelian", "FreeGroup", "GroupModel", "Index",
    "Subgroup", "free_reduce", "is_member", "normal_form", "relative_index",
    "subgroup_index", "validate_chain",
    "Job", "Task", "job_from_dict", "load_job",
    "Report", "run_job",
    "IDENTITY", "Word",
]

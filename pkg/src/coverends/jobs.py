"""Job files: reproducible experiment descriptions in TOML.

A job names one group, any number of subgroups, shared truncation
parameters, and a task list.  See README for the full schema; the essentials:

    [group]
    family = "free_abelian"        # free | free_abelian | product
    rank = 3

    [subgroups]
    H = ["x", "y"]
    K = ["x"]

    [params]
    nmax = 5

    [[tasks]]
    kind = "check-corollary"       # ends | pair-ends | check-corollary |
    h = "H"                        # check-monotonicity | export-dot
    k = "K"

    [output]
    format = "json"                # json | csv
    timing = true
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .ends import EndsParams
from .errors import CoverEndsError, JobError
from .graphs import DEFAULT_BUDGET
from .groups import DirectProduct, FreeAbelian, FreeGroup, GroupModel, Subgroup

TASK_KINDS = ("ends", "pair-ends", "check-corollary", "check-monotonicity",
              "export-dot")
_PARAM_KEYS = ("nmax", "margin", "window", "budget")


@dataclass
class Task:
    kind: str
    options: dict = field(default_factory=dict)
    params: EndsParams = EndsParams()


@dataclass
class Job:
    model: GroupModel
    subgroups: dict[str, Subgroup]
    subgroup_words: dict[str, list[str]]
    params: EndsParams
    tasks: list[Task]
    fmt: str = "json"
    timing: bool = True
    source: str = "<dict>"


def _model_from_table(table: dict) -> GroupModel:
    family = table.get("family")
    if family == "free":
        return FreeGroup(int(table.get("rank", 0)))
    if family == "free_abelian":
        return FreeAbelian(int(table.get("rank", 0)))
    if family == "product":
        factors = table.get("factors")
        if not isinstance(factors, list):
            raise JobError("product group needs a [[group.factors]] list")
        return DirectProduct([_model_from_table(f) for f in factors])
    raise JobError(f"unknown group family {family!r} "
                   "(expected free, free_abelian, or product)")


def _params_from(table: dict, base: EndsParams) -> EndsParams:
    kwargs = {
        "n_max": int(table.get("nmax", base.n_max)),
        "margin": (int(table["margin"]) if "margin" in table else base.margin),
        "window": int(table.get("window", base.window)),
        "budget": int(table.get("budget", base.budget)),
    }
    if kwargs["n_max"] < 0 or kwargs["window"] < 1 or kwargs["budget"] < 1:
        raise JobError("invalid truncation parameters")
    return EndsParams(**kwargs)


def load_job(path: str | Path) -> Job:
    path = Path(path)
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise JobError(f"cannot read job file: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise JobError(f"job file does not parse: {exc}") from exc
    return job_from_dict(data, source=str(path))


def job_from_dict(data: dict, source: str = "<dict>") -> Job:
    if "group" not in data:
        raise JobError("job file needs a [group] table")
    try:
        model = _model_from_table(data["group"])
    except (ValueError, CoverEndsError) as exc:
        raise JobError(f"bad group description: {exc}") from exc

    subgroups: dict[str, Subgroup] = {}
    subgroup_words: dict[str, list] = {}
    for name, gens in data.get("subgroups", {}).items():
        if isinstance(gens, dict):
            gens = gens.get("factors")
            if gens is None:
                raise JobError(f"subgroup {name!r}: inline table needs "
                               "a 'factors' key")
        if not isinstance(gens, list):
            raise JobError(f"subgroup {name!r} must be a list of words")
        try:
            subgroups[name] = model.subgroup(gens)
        except (ValueError, CoverEndsError) as exc:
            raise JobError(f"subgroup {name!r}: {exc}") from exc
        subgroup_words[name] = gens

    params = _params_from(data.get("params", {}), EndsParams(
        n_max=5, margin=None, window=3, budget=DEFAULT_BUDGET))

    tasks: list[Task] = []
    for i, tab in enumerate(data.get("tasks", [])):
        kind = tab.get("kind")
        if kind not in TASK_KINDS:
            raise JobError(f"task {i}: unknown kind {kind!r} "
                           f"(expected one of {', '.join(TASK_KINDS)})")
        opts = {k: v for k, v in tab.items()
                if k not in ("kind", *_PARAM_KEYS)}
        tparams = _params_from(tab, params)
        _validate_task(kind, opts, subgroups, i)
        tasks.append(Task(kind, opts, tparams))

    out = data.get("output", {})
    fmt = out.get("format", "json")
    if fmt not in ("json", "csv"):
        raise JobError(f"unsupported output format {fmt!r}")
    return Job(model, subgroups, subgroup_words, params, tasks,
               fmt=fmt, timing=bool(out.get("timing", True)), source=source)


def _need_subgroup(opts: dict, key: str, subgroups: dict, i: int) -> None:
    name = opts.get(key)
    if not isinstance(name, str) or name not in subgroups:
        raise JobError(
            f"task {i}: {key!r} must name a defined subgroup "
            f"(have: {', '.join(subgroups) or 'none'})")


def _validate_task(kind: str, opts: dict, subgroups: dict, i: int) -> None:
    if kind == "pair-ends":
        _need_subgroup(opts, "subgroup", subgroups, i)
    elif kind in ("check-corollary", "check-monotonicity"):
        _need_subgroup(opts, "h", subgroups, i)
        _need_subgroup(opts, "k", subgroups, i)
    elif kind == "export-dot":
        target = opts.get("target", "cayley")
        if target not in ("cayley", "schreier"):
            raise JobError(f"task {i}: target must be cayley or schreier")
        if target == "schreier":
            _need_subgroup(opts, "subgroup", subgroups, i)
        if "radius" not in opts:
            raise JobError(f"task {i}: export-dot needs a radius")

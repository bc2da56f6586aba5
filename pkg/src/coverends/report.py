"""Run the tasks of a job and assemble a deterministic report.

JSON output is byte-stable for a fixed job file except for the per-task
timing field, which comparison mode (timing=False) omits.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from .checks import (
    CheckResult,
    EstimateCache,
    check_corollary,
    check_monotonicity,
    check_regime,
)
from .dot import dot_graph
from .ends import EndsEstimate, EndsParams, group_ends
from .filtrations import ball_filtration
from .graphs import cayley_ball, cw_complement, schreier_ball
from .jobs import Job, Task

SCHEMA_VERSION = 1


@dataclass
class TaskResult:
    task: str
    subject: str
    params: dict
    data: dict
    seconds: float


@dataclass
class Report:
    group: str
    subgroups: dict[str, list]
    results: list[TaskResult] = field(default_factory=list)

    def exit_code(self) -> int:
        verdicts = []
        for r in self.results:
            v = r.data.get("verdict")
            if v:
                verdicts.append(v)
        if any(v == "VIOLATED" for v in verdicts):
            return 2
        if any(v == "INCONCLUSIVE" for v in verdicts):
            return 3
        return 0

    def to_dict(self, timing: bool = True) -> dict:
        results = []
        for r in self.results:
            d = {"task": r.task, "subject": r.subject, "params": r.params}
            d.update(r.data)
            if timing:
                d["seconds"] = round(r.seconds, 4)
            results.append(d)
        return {"version": SCHEMA_VERSION, "group": self.group,
                "subgroups": self.subgroups, "results": results}

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing=timing), indent=2,
                          sort_keys=True) + "\n"

    def to_csv(self) -> str:
        """Per-level counts, one row per (task, subject, level)."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["task_index", "task", "subject", "level", "count",
                    "stabilized", "value"])
        for i, r in enumerate(self.results):
            series = {}
            if "counts_per_level" in r.data:
                series[r.subject] = r.data
            for name, est in r.data.get("estimates", {}).items():
                series[name] = est
            for subject, est in series.items():
                for level, count in enumerate(est["counts_per_level"]):
                    w.writerow([i, r.task, subject, level, count,
                                est["stabilized"], est["value"]])
        return buf.getvalue()

    def render(self, fmt: str, timing: bool = True) -> str:
        if fmt == "json":
            return self.to_json(timing=timing)
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unsupported report format {fmt!r}")


def estimate_payload(est: EndsEstimate) -> dict:
    notes = list(est.notes)
    if not est.stabilized and est.increasing:
        notes.append("per-level counts strictly increasing; consistent with "
                     "infinitely many filtered ends (not certifiable by "
                     "truncation)")
    return {
        "counts_per_level": list(est.counts),
        "stabilized": est.stabilized,
        "value": est.value,
        "lower_bound": est.lower_bound,
        "increasing": est.increasing,
        "verdict": None if est.stabilized else "INCONCLUSIVE",
        "notes": notes,
    }


def _params_payload(p: EndsParams) -> dict:
    return {"nmax": p.n_max, "margin": p.resolved_margin,
            "window": p.window, "budget": p.budget}


def _regime_payload(res: CheckResult) -> dict | None:
    rg = res.regime
    if rg is None:
        return None
    return {"label": rg.label, "side": rg.side, "predicted": rg.predicted,
            "hypotheses_met": rg.hypotheses_met,
            "diagnostic_only": rg.diagnostic_only, "detail": rg.detail}


def check_payload(res: CheckResult) -> dict:
    return {
        "verdict": res.verdict,
        "predicted": res.predicted,
        "computed": res.computed,
        "detail": res.detail,
        "regime": _regime_payload(res),
        "estimates": {name: estimate_payload(est)
                      for name, est in res.estimates.items()},
    }


def run_job(job: Job, out_dir: str | Path = ".") -> Report:
    """Execute the job's tasks in order; deterministic for fixed inputs."""
    out_dir = Path(out_dir)
    cache = EstimateCache(job.model)
    report = Report(group=repr(job.model), subgroups=dict(job.subgroup_words))
    for i, task in enumerate(job.tasks):
        t0 = time.perf_counter()
        subject, data = _run_task(job, task, i, cache, out_dir)
        seconds = time.perf_counter() - t0
        report.results.append(TaskResult(
            task=task.kind, subject=subject,
            params=_params_payload(task.params), data=data, seconds=seconds))
    return report


def _run_task(job: Job, task: Task, i: int, cache: EstimateCache,
              out_dir: Path) -> tuple[str, dict]:
    p = task.params
    if task.kind == "ends":
        est = group_ends(job.model, p.n_max, margin=p.margin,
                         window=p.window, budget=p.budget)
        return "G", estimate_payload(est)
    if task.kind == "pair-ends":
        name = task.options["subgroup"]
        est = cache.pair_ends(name, job.subgroups[name], p)
        return name, estimate_payload(est)
    if task.kind in ("check-corollary", "check-monotonicity", "check-regime"):
        hname, kname = task.options["h"], task.options["k"]
        fn = {"check-corollary": check_corollary,
              "check-monotonicity": check_monotonicity,
              "check-regime": check_regime}[task.kind]
        res = fn(job.model, job.subgroups[hname], job.subgroups[kname], p,
                 cache=cache, names=(hname, kname))
        return f"{hname},{kname}", check_payload(res)
    if task.kind == "export-dot":
        return _run_export_dot(job, task, i, out_dir)
    raise AssertionError(f"unhandled task kind {task.kind}")


def _run_export_dot(job: Job, task: Task, i: int,
                    out_dir: Path) -> tuple[str, dict]:
    opts = task.options
    target = opts.get("target", "cayley")
    radius = int(opts["radius"])
    budget = task.params.budget
    if target == "cayley":
        ball = cayley_ball(job.model, radius, budget=budget)
        subject = "G"
    else:
        name = opts["subgroup"]
        ball = schreier_ball(job.model, job.subgroups[name], radius,
                             budget=budget)
        subject = name
    g = ball.full()
    if "minus_level" in opts:
        level = ball_filtration(ball, int(opts["minus_level"])).levels[-1]
        g = cw_complement(ball, level)
    text = dot_graph(g, title=f"task{i}")
    out_name = opts.get("out", f"task{i}_{target}.dot")
    path = out_dir / out_name
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return subject, {
        "path": str(path),
        "nodes": g.n_vertices,
        "edges": g.n_edges,
        "complete": ball.complete,
    }

"""
The report every command emits: a task, its context and parameters, and a
table of checked items whose conjunction is the overall verdict.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import pandas as pd

from . import constants as cs
from . import validators as vd


@dataclass
class Report:
    """
    Outcome of one command.
    ``results`` is a table with the columns ``item``, ``pass``, ``detail``,
    sorted by item; ``params`` holds rational strings ``num/den``.
    """

    task: str
    ctx: dict
    results: pd.DataFrame
    family: str | None = None
    params: dict = field(default_factory=dict)
    seed: int = cs.SEED
    extra: dict = field(default_factory=dict)
    tool_version: str = cs.VERSION

    @property
    def passed(self) -> bool:
        return bool(self.results["pass"].all())

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_dict(self) -> dict:
        d = {
            "task": self.task,
            "ctx": dict(self.ctx),
            "family": self.family,
            "params": dict(self.params),
            "results": [
                {"item": str(r["item"]), "pass": bool(r["pass"]), "detail": str(r["detail"])}
                for r in self.results.to_dict("records")
            ],
            "pass": self.passed,
            "seed": self.seed,
            "tool_version": self.tool_version,
        }
        if self.extra:
            d["extra"] = self.extra
        return d

    def to_json(self) -> str:
        return json.dumps(vd.validate_report(self.to_dict()), indent=2)

    def to_text(self) -> str:
        """
        Return a plain-text rendering: a header line, the result table, and
        the verdict.
        """
        ctx = ", ".join(f"{k}={v}" for k, v in self.ctx.items())
        lines = [f"{self.task} ({ctx})"]
        if self.family is not None:
            lines.append(f"family {self.family} {self.params}")
        if self.results.empty:
            lines.append("(no items)")
        else:
            lines.append(self.results.to_string(index=False))
        for key, value in self.extra.items():
            lines.append(f"{key}: {value}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def build_report(
    task: str,
    ctx: dict,
    results: pd.DataFrame,
    family: str | None = None,
    params: dict | None = None,
    seed: int = cs.SEED,
    extra: dict | None = None,
) -> Report:
    """
    Return a report of the given result table, sorted by item and validated.
    """
    results = vd.check_results(
        results.sort_values("item", ignore_index=True)
        if not results.empty
        else pd.DataFrame(columns=["item", "pass", "detail"])
    )
    return Report(task, ctx, results, family, params or {}, seed, extra or {})


def combine_reports(task: str, reports: Sequence[Report], group: str = "mvt") -> Report:
    """
    Combine the reports of a batch run into one, prefixing each item with
    the grid point ``n=<n>,k=<k>`` and keying the parameters of each run by
    the same grid point.
    """
    frames = []
    params = {}
    for r in reports:
        point = f"n={r.ctx['n']},k={r.ctx['k']}"
        f = r.results.copy()
        f["item"] = point + ":" + f["item"]
        frames.append(f)
        if r.params:
            params[point] = dict(r.params)

    results = pd.concat(frames, ignore_index=True) if frames else pd.DataFrame()
    first = reports[0] if reports else None
    return build_report(
        task,
        {
            "n": [r.ctx["n"] for r in reports],
            "k": [r.ctx["k"] for r in reports],
            "group": group,
        },
        results,
        family=first.family if first else None,
        params=params,
        seed=first.seed if first else cs.SEED,
    )

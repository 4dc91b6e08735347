"""Run reports and their canonical serialization.

Reports printed to stdout must be byte-identical across reruns with the
same inputs, so the canonical JSON form excludes wall-clock timing;
timing lives in the human summary on stderr.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


def canonical_json(obj: Any) -> str:
    """Compact, key-sorted, reproducible one-line JSON."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass
class RunReport:
    """Outcome of one coloring run.

    ``palette_bound`` is ``1 + sum(chromatic_i - 1)`` over the
    instance's matroids (with any supplied alpha in place of the first
    chromatic number); a successful run never exceeds it.
    """

    command: str
    status: str  # "success" | "failure"
    n: int
    colors_used: int
    palette_bound: int
    feasible: list[bool] = field(default_factory=list)
    complete: bool = True
    iterations: int = 0
    oracle_calls: dict[str, int] = field(default_factory=dict)
    wall_ms: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (
            self.status == "success"
            and all(self.feasible)
            and self.complete
            and self.colors_used <= self.palette_bound
        )

    def to_json_obj(self) -> dict[str, Any]:
        obj = {
            "command": self.command,
            "status": self.status,
            "n": self.n,
            "colors_used": self.colors_used,
            "palette_bound": self.palette_bound,
            "feasible": self.feasible,
            "complete": self.complete,
            "iterations": self.iterations,
            "oracle_calls": self.oracle_calls,
        }
        obj.update(self.extra)
        return obj

    def summary(self) -> str:
        verdict = "ok" if self.ok else self.status
        calls = sum(self.oracle_calls.values())
        return (
            f"{self.command}: {verdict}; {self.colors_used} colors "
            f"(bound {self.palette_bound}) on {self.n} elements; "
            f"{calls} oracle calls; {self.wall_ms:.1f} ms"
        )

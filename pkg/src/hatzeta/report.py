"""Outcome records for exact and numeric verifications."""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator

STATUSES = ("pass", "fail", "error")


@dataclass
class RelationReport:
    check: str
    params: dict[str, str] = field(default_factory=dict)
    status: str = "pass"
    detail: str = ""
    runtime_ms: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}")
        self.params = {str(k): str(v) for k, v in self.params.items()}

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": dict(sorted(self.params.items())),
            "status": self.status,
            "detail": self.detail,
            "runtime_ms": int(self.runtime_ms),
        }

    @classmethod
    def from_dict(cls, d: dict) -> RelationReport:
        return cls(d["check"], dict(d.get("params", {})), d["status"], d.get("detail", ""), int(d.get("runtime_ms", 0)))

    def sort_key(self):
        # numeric parameters order numerically so k=4 precedes k=10
        def key(v: str):
            try:
                return (0, float(v), v)
            except ValueError:
                return (1, 0.0, v)

        return (self.check, [(k, key(v)) for k, v in sorted(self.params.items())])

    def line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"[{self.status.upper():5}] {self.check:<22} {params:<32} {self.detail} ({self.runtime_ms} ms)"


def reports_to_json(reports: list[RelationReport]) -> str:
    """Canonical JSON: sorted keys, fixed indentation, so re-serializing is byte-identical."""
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)


def reports_from_json(text: str) -> list[RelationReport]:
    return [RelationReport.from_dict(d) for d in json.loads(text)]


@contextmanager
def timed(report: RelationReport) -> Iterator[RelationReport]:
    t0 = time.perf_counter()
    try:
        yield report
    finally:
        report.runtime_ms = int(round((time.perf_counter() - t0) * 1000))

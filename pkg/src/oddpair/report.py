"""Scan reports: JSON and tab-delimited rendering, and re-validation of
counterexample records from their own data."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable

SCHEMA_VERSION = 1

# record statuses: "pass" and "fail" come from asserted checks, anything
# else ("report", "vacuous", "satisfied", "counterexample", ...) is data
PASS, FAIL, REPORT = "pass", "fail", "report"


@dataclass
class Record:
    item: str
    status: str
    graph6: str | None = None
    detail: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"item": self.item, "status": self.status, "graph6": self.graph6, "detail": self.detail}


@dataclass
class ScanReport:
    command: str
    parameters: dict[str, Any]
    corpus_size: int = 0
    verdicts: list[Record] = field(default_factory=list)
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    skipped: list[dict[str, Any]] = field(default_factory=list)
    histograms: dict[str, dict[str, int]] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def failures(self) -> list[Record]:
        return [r for r in self.verdicts if r.status == FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    def status_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for r in self.verdicts:
            counts[r.status] = counts.get(r.status, 0) + 1
        return dict(sorted(counts.items()))

    def bump(self, histogram: str, key, by: int = 1) -> None:
        h = self.histograms.setdefault(histogram, {})
        h[str(key)] = h.get(str(key), 0) + by

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "corpus_size": self.corpus_size,
            "status_counts": self.status_counts(),
            "passed": self.passed,
            "verdicts": [r.to_json() for r in self.verdicts],
            "counterexamples": self.counterexamples,
            "skipped": self.skipped,
            "histograms": self.histograms,
            "wall_time": round(self.wall_time, 3),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    def tsv_lines(self) -> list[str]:
        out = ["# item\tstatus\tgraph6\tdetail"]
        for r in self.verdicts:
            detail = json.dumps(r.detail, separators=(",", ":"), sort_keys=True)
            out.append(f"{r.item}\t{r.status}\t{r.graph6 or '-'}\t{detail}")
        counts = " ".join(f"{k}={v}" for k, v in self.status_counts().items())
        out.append(
            f"# {self.command}: corpus={self.corpus_size} {counts} "
            f"counterexamples={len(self.counterexamples)} skipped={len(self.skipped)} "
            f"{'PASS' if self.passed else 'FAIL'}"
        )
        return out


def load_report(text: str) -> dict:
    data = json.loads(text)
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema_version {data.get('schema_version')!r}")
    return data


# counterexample re-validation ---------------------------------------------------

_VALIDATORS: dict[str, Callable[[dict], list[str]]] = {}


def validator(kind: str):
    def register(fn: Callable[[dict], list[str]]):
        _VALIDATORS[kind] = fn
        return fn

    return register


def revalidate(record: dict) -> list[str]:
    """Problems found when re-checking a counterexample record; empty when
    its witnesses confirm it. Only the record itself is consulted."""
    # validators live next to the scans that produce them
    from . import scans, suites  # noqa: F401

    kind = record.get("kind")
    fn = _VALIDATORS.get(kind)
    if fn is None:
        return [f"no validator for counterexample kind {kind!r}"]
    try:
        return fn(record)
    except (KeyError, TypeError, ValueError) as exc:
        return [f"malformed record: {exc}"]

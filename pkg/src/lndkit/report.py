"""Verdicts, check entries and report serialization."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from . import __version__


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INDETERMINATE = "INDETERMINATE"

    def __str__(self) -> str:
        return self.value


def combine(verdicts: Iterable[Verdict]) -> Verdict:
    """FAIL beats INDETERMINATE beats PASS; an empty list is PASS."""
    vs = set(verdicts)
    if Verdict.FAIL in vs:
        return Verdict.FAIL
    if Verdict.INDETERMINATE in vs:
        return Verdict.INDETERMINATE
    return Verdict.PASS


EXIT_CODES = {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.INDETERMINATE: 2}
EXIT_USAGE = 64
EXIT_INPUT = 65


@dataclass
class CheckEntry:
    name: str
    verdict: Verdict
    witness: str | None = None
    ms: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "verdict": self.verdict.value, "witness": self.witness, "ms": self.ms}

    @classmethod
    def from_json(cls, d: dict) -> "CheckEntry":
        return cls(d["name"], Verdict(d["verdict"]), d.get("witness"), float(d.get("ms", 0.0)))


@dataclass
class Report:
    command: str
    checks: list[CheckEntry] = field(default_factory=list)
    version: str = __version__

    @property
    def overall(self) -> Verdict:
        return combine(c.verdict for c in self.checks)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.overall]

    def add(self, name: str, verdict: Verdict, witness: str | None = None, ms: float = 0.0) -> CheckEntry:
        entry = CheckEntry(name, Verdict(verdict), witness, round(ms, 3))
        self.checks.append(entry)
        return entry

    @contextmanager
    def timed(self, name: str):
        """Collect one check; the body sets ``slot.verdict`` and ``slot.witness``."""
        slot = CheckEntry(name, Verdict.INDETERMINATE)
        t0 = time.perf_counter()
        try:
            yield slot
        finally:
            slot.ms = round((time.perf_counter() - t0) * 1000, 3)
            self.checks.append(slot)

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "command": self.command,
            "overall": self.overall.value,
            "checks": [c.to_json() for c in self.checks],
        }

    @classmethod
    def from_json(cls, d: dict) -> "Report":
        r = cls(d["command"], [CheckEntry.from_json(c) for c in d["checks"]], d["version"])
        if d.get("overall") is not None and Verdict(d["overall"]) != r.overall:
            raise ValueError("overall verdict inconsistent with the checks")
        return r


def emit_report(r: Report, format: str = "text") -> str:
    if format == "json":
        return json.dumps(r.to_json(), indent=2, sort_keys=False)
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    width = max((len(c.name) for c in r.checks), default=4)
    lines = [f"lndkit {r.version} :: {r.command}"]
    for c in r.checks:
        line = f"  [{c.verdict.value:<13}] {c.name:<{width}}  ({c.ms:.1f} ms)"
        lines.append(line)
        if c.witness:
            for wl in c.witness.splitlines():
                lines.append(f"      {wl}")
    lines.append(f"overall: {r.overall.value}")
    return "\n".join(lines)


def parse_report(text: str) -> Report:
    return Report.from_json(json.loads(text))

"""Machine-readable outcome of one verification suite."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

TOOL_VERSION = "0.1.0"


@dataclass
class CheckEntry:
    id: str
    status: str  # pass | fail | skipped
    law: str = ""  # which identity was checked
    witness: str | None = None


@dataclass
class CheckReport:
    suite: str
    preset: str = ""
    params: dict = field(default_factory=dict)
    checks: list[CheckEntry] = field(default_factory=list)

    def record(self, check_id, ok, law="", witness=None):
        """Append a pass/fail entry; a failing entry must carry a witness."""
        status = "pass" if ok else "fail"
        if not ok and witness is None:
            witness = "(no witness supplied)"
        self.checks.append(CheckEntry(check_id, status, law,
                                      witness if not ok else None))

    def skip(self, check_id, law=""):
        self.checks.append(CheckEntry(check_id, "skipped", law))

    @property
    def passed(self):
        return all(c.status != "fail" for c in self.checks)

    @property
    def counts(self):
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def failures(self):
        return [c for c in self.checks if c.status == "fail"]

    def finalize(self):
        self.checks.sort(key=lambda c: c.id)
        return self

    def to_dict(self):
        self.finalize()
        return {
            "tool_version": TOOL_VERSION,
            "suite": self.suite,
            "preset": self.preset,
            "params": dict(sorted(self.params.items())),
            "status": "pass" if self.passed else "fail",
            "counts": self.counts,
            "checks": [
                {k: v for k, v in (("id", c.id), ("status", c.status),
                                   ("law", c.law), ("witness", c.witness))
                 if v is not None}
                for c in self.checks
            ],
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

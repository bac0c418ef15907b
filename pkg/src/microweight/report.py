"""Check/suite report containers shared by the CLI verification suites."""

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass
class Check:
    id: str
    description: str
    status: str
    witness: object = None
    elapsed_ms: float = 0.0


@dataclass
class SuiteReport:
    suite_name: str
    checks: list = field(default_factory=list)

    def add(self, check):
        self.checks.append(check)

    @property
    def summary(self):
        out = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def passed(self):
        return self.summary[FAIL] == 0

    def to_json(self):
        # elapsed_ms is intentionally omitted: JSON output is required to be
        # byte-identical across reruns
        payload = {
            "suite": self.suite_name,
            "checks": [
                {
                    "id": c.id,
                    "description": c.description,
                    "status": c.status,
                    "witness": c.witness,
                }
                for c in sorted(self.checks, key=lambda c: c.id)
            ],
            "summary": self.summary,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def to_text(self, quiet=False):
        lines = []
        if not quiet:
            lines.append(f"suite: {self.suite_name}")
        for c in sorted(self.checks, key=lambda c: c.id):
            line = f"[{c.status.upper():12s}] {c.id}: {c.description}"
            if c.witness is not None:
                line += f"  witness={c.witness}"
            if not quiet:
                line += f"  ({c.elapsed_ms:.1f} ms)"
            lines.append(line)
        s = self.summary
        lines.append(f"{s[PASS]} passed, {s[FAIL]} failed, "
                     f"{s[INCONCLUSIVE]} inconclusive")
        return "\n".join(lines) + "\n"

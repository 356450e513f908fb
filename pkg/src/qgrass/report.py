"""Structured results for verification suites.

Every suite returns a VerificationReport: a list of items, each carrying a
stable check id, pass/fail/skipped status, a short lhs/rhs description,
the textual residual (nonempty exactly when the check failed) and elapsed
milliseconds.  Reports serialize to JSON and round-trip.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, asdict


@dataclass
class Item:
    id: str
    status: str
    lhs: str = ""
    rhs: str = ""
    residual: str = ""
    ms: int = 0

    def __post_init__(self):
        assert self.status in ("pass", "fail", "skipped")
        assert (self.residual != "") == (self.status == "fail"), (
            "residual must be nonempty exactly on failure: %s" % self.id
        )


@dataclass
class VerificationReport:
    suite: str
    items: list = field(default_factory=list)

    def start(self):
        self._t0 = time.perf_counter()

    def _elapsed_ms(self):
        t0 = getattr(self, "_t0", None)
        if t0 is None:
            return 0
        ms = int(round((time.perf_counter() - t0) * 1000))
        self._t0 = None
        return ms

    def check(self, check_id, ok, lhs="", rhs="", residual=""):
        """Record a pass/fail item; call start() beforehand to get timing."""
        status = "pass" if ok else "fail"
        if not ok and not residual:
            residual = "nonzero"
        if ok:
            residual = ""
        self.items.append(
            Item(check_id, status, str(lhs), str(rhs), str(residual), self._elapsed_ms())
        )
        return ok

    def skip(self, check_id, lhs="", rhs=""):
        self.items.append(Item(check_id, "skipped", str(lhs), str(rhs), "", 0))

    def extend(self, other):
        self.items.extend(other.items)

    @property
    def summary(self):
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for item in self.items:
            out[item.status] += 1
        return out

    @property
    def ok(self):
        return self.summary["fail"] == 0

    @property
    def failures(self):
        return [i for i in self.items if i.status == "fail"]

    def to_dict(self):
        return {
            "suite": self.suite,
            "items": [asdict(i) for i in self.items],
            "summary": self.summary,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=1)

    @staticmethod
    def from_dict(data):
        rep = VerificationReport(data["suite"])
        for i in data["items"]:
            rep.items.append(
                Item(i["id"], i["status"], i["lhs"], i["rhs"], i["residual"], i["ms"])
            )
        return rep

    @staticmethod
    def from_json(text):
        return VerificationReport.from_dict(json.loads(text))

    def render_text(self):
        lines = ["suite %s" % self.suite]
        lines.extend(render_item(i) for i in self.items)
        s = self.summary
        lines.append(
            "  %d pass, %d fail, %d skipped" % (s["pass"], s["fail"], s["skipped"])
        )
        return "\n".join(lines)


def render_item(i):
    mark = {"pass": "ok", "fail": "FAIL", "skipped": "skip"}[i.status]
    line = "  [%4s] %s" % (mark, i.id)
    if i.lhs or i.rhs:
        line += "  (%s = %s)" % (i.lhs, i.rhs) if i.rhs else "  (%s)" % i.lhs
    if i.residual:
        line += "  residual: %s" % i.residual
    line += "  [%dms]" % i.ms
    return line

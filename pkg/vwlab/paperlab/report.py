"""Check results and scenario reports

A report is a list of named checks, each comparing computed data with the
value expected for it. Serialization is deterministic so repeated runs give
byte-identical JSON.
"""

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum
from logging import getLogger

from vwlab.errors import VwlabError
from vwlab.util.json_io import dump_json

logger = getLogger(__name__)


class CheckStatus(StrEnum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIPPED = 'skipped'


class Scenario(StrEnum):
    GROUPS = 'groups'
    LIE = 'lie'
    AMALGAM = 'amalgam'
    GRAY = 'gray'


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check

    Attributes
    ----------
    id : str
        Stable identifier, e.g. ``lie.Bpsi.lcs``
    description : str
        What is checked
    anchor : str
        The claim the check stands for
    status : CheckStatus
        pass, fail or skipped
    data : dict
        Computed values (JSON-ready)
    """
    id: str
    description: str
    anchor: str
    status: CheckStatus
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"id": self.id, "description": self.description, "anchor": self.anchor,
                "status": str(self.status), "data": self.data}


@dataclass
class Report:
    """Checks of one scenario, in the order they were run
    """
    scenario: Scenario
    field: str
    checks: list[CheckResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.status != CheckStatus.FAIL for c in self.checks)

    def ids(self) -> list[str]:
        return [c.id for c in self.checks]

    def get(self, check_id: str) -> CheckResult:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def add(self, result: CheckResult) -> CheckResult:
        if result.id in self.ids():
            raise ValueError(f"Check id {result.id} already in the report")
        self.checks.append(result)
        logger.debug("%s: %s", result.id, result.status)
        return result

    def expect(self, check_id: str, description: str, anchor: str, computed, expected, **data) -> CheckResult:
        """Record a check that passes iff ``computed == expected``
        """
        status = CheckStatus.PASS if computed == expected else CheckStatus.FAIL
        return self.add(CheckResult(check_id, description, anchor, status,
                                    {"computed": computed, "expected": expected, **data}))

    def skip(self, check_id: str, description: str, anchor: str, reason: str) -> CheckResult:
        return self.add(CheckResult(check_id, description, anchor, CheckStatus.SKIPPED, {"reason": reason}))

    def guarded(self, check_id: str, description: str, anchor: str, compute: Callable[[], tuple]) -> CheckResult:
        """Run ``compute() -> (computed, expected, data)``; a raised library error fails the check
        """
        try:
            computed, expected, data = compute()
        except VwlabError as e:
            logger.warning("Check %s raised %s", check_id, e)
            return self.add(CheckResult(check_id, description, anchor, CheckStatus.FAIL,
                                        {"error": f"{type(e).__name__}: {e}"}))
        return self.expect(check_id, description, anchor, computed, expected, **data)

    def counts(self) -> dict[str, int]:
        return {str(s): sum(c.status == s for c in self.checks) for s in CheckStatus}

    def to_json(self) -> dict:
        out = {"scenario": str(self.scenario), "field": self.field,
               "checks": [c.to_json() for c in self.checks], "overall": self.overall}
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_text(self) -> str:
        lines = [f"== {self.scenario} over {self.field} =="]
        for c in self.checks:
            lines.append(f"[{c.status.upper():7}] {c.id}: {c.description}")
            for key, value in c.data.items():
                if isinstance(value, list) and value and all(isinstance(v, str) for v in value):
                    lines.append(f"           {key}:")
                    lines.extend(f"             {v}" for v in value)
                else:
                    lines.append(f"           {key}: {dump_json(value, pretty=False)}")
        for note in self.notes:
            lines.append(f"note: {note}")
        counts = self.counts()
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'} "
                     f"({counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped)")
        return "\n".join(lines)


def reports_to_json(reports: list[Report]) -> str:
    return dump_json({"reports": [r.to_json() for r in reports], "overall": all(r.overall for r in reports)})


def reports_to_text(reports: list[Report]) -> str:
    return "\n\n".join(r.to_text() for r in reports)

"""Running several scenarios in a fixed order
"""

from collections.abc import Iterable
from logging import getLogger

from vwlab.config import DEFAULT_ENUMERATION_CAP
from vwlab.exactmath import FieldSpec
from vwlab.paperlab.amalgam import verify_amalgam_obstruction
from vwlab.paperlab.gray import verify_gray_conditions
from vwlab.paperlab.groups import verify_group_counterexample
from vwlab.paperlab.lie import verify_lie_counterexample
from vwlab.paperlab.report import Report, Scenario

logger = getLogger(__name__)

ALL_PARTS = (Scenario.GROUPS, Scenario.LIE, Scenario.AMALGAM, Scenario.GRAY)


def resolve_parts(part: str) -> tuple[Scenario, ...]:
    """``all`` or a single scenario name
    """
    if part == 'all':
        return ALL_PARTS
    return (Scenario(part),)


def run_scenarios(parts: Iterable[Scenario | str],
                  field: FieldSpec | None = None,
                  cap: int = DEFAULT_ENUMERATION_CAP,
                  progress: bool = False) -> list[Report]:
    """Run scenarios in the order given

    The group scenario always runs over GF(5); ``field`` applies to the others.
    """
    field = FieldSpec.rationals() if field is None else field
    reports = []
    for part in parts:
        part = Scenario(part)
        logger.info("Running scenario %s", part)
        if part == Scenario.GROUPS:
            reports.append(verify_group_counterexample(cap=cap, progress=progress))
        elif part == Scenario.LIE:
            reports.append(verify_lie_counterexample(field))
        elif part == Scenario.AMALGAM:
            reports.append(verify_amalgam_obstruction(field))
        else:
            reports.append(verify_gray_conditions(field))
    return reports

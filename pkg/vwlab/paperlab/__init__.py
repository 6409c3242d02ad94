"""Witnesses and verification checklists for the group and Lie counterexamples
"""

from vwlab.paperlab.report import (
    CheckResult,
    CheckStatus,
    Report,
    Scenario,
    reports_to_json,
    reports_to_text,
)

from vwlab.paperlab.witnesses import (
    GroupWitness,
    LieWitness,
    build_group_witness,
    build_lie_witness,
)

from vwlab.paperlab.groups import verify_group_counterexample
from vwlab.paperlab.lie import verify_lie_counterexample
from vwlab.paperlab.amalgam import verify_amalgam_obstruction
from vwlab.paperlab.gray import verify_gray_conditions
from vwlab.paperlab.scenarios import ALL_PARTS, resolve_parts, run_scenarios

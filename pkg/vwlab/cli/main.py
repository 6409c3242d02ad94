"""Command-line front end

    vwlab verify-paper --part {groups,lie,amalgam,gray,all} [--field Q|GF(p)]
    vwlab lie {validate,series,derive,generate,semidirect,hom-check} -i algebra.json ...
    vwlab grp {order,series,relations,semidirect} -i generators.json ...

Exit codes: 0 success, 1 failed verification, 2 input error, 3 enumeration cap exceeded.
"""

from argparse import ArgumentParser
from logging import getLogger
import sys

from vwlab.cli.commands import ExitCode, cmd_grp, cmd_lie, cmd_verify_paper
from vwlab.config import load_settings
from vwlab.errors import EnumerationCapError, NotALieAlgebraError, VwlabError
from vwlab.exactmath import FieldSpec
from vwlab.util.log_util import configure_logging

logger = getLogger(__name__)

LIE_ACTIONS = ('validate', 'series', 'derive', 'generate', 'semidirect', 'hom-check')
GRP_ACTIONS = ('order', 'series', 'relations', 'semidirect')
PARTS = ('groups', 'lie', 'amalgam', 'gray', 'all')


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"Expected a positive integer. Value given: {text}")
    return value


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='Print machine-readable JSON')
    common.add_argument('--cap', type=positive_int, default=None,
                        help='Largest group order to enumerate (overrides VW_CAP and the config file)')
    common.add_argument('--config', default=None, help='YAML settings file')
    common.add_argument('--log-level', default=None, help='Logging level, e.g. INFO or DEBUG')
    common.add_argument('--log-json', action='store_true', default=None, help='Log records as JSON lines')
    common.add_argument('--progress', action='store_true', help='Show progress bars while enumerating groups')

    parser = ArgumentParser(prog='vwlab', description='Exact Lie algebra and matrix group computations')
    sub = parser.add_subparsers(dest='command', required=True)

    verify = sub.add_parser('verify-paper', parents=[common], help='Run the counterexample checklists')
    verify.add_argument('--part', choices=PARTS, default='all', help='Which checklist to run')
    verify.add_argument('--field', type=FieldSpec.parse, default=None,
                        help='Ground field for the Lie checklists, Q or GF(p)')
    verify.set_defaults(handler=cmd_verify_paper)

    lie = sub.add_parser('lie', parents=[common], help='Lie algebra computations on JSON tables')
    lie.add_argument('action', choices=LIE_ACTIONS)
    lie.add_argument('-i', '--input', required=True, help='Algebra file (the acting algebra B for semidirect)')
    lie.add_argument('-x', '--x-algebra', dest='x', default=None, help='Algebra X acted on (semidirect)')
    lie.add_argument('-m', '--map', default=None, help='Action file (semidirect) or map matrix (hom-check)')
    lie.add_argument('-o', '--codomain', dest='output', default=None, help='Codomain algebra (hom-check)')
    lie.add_argument('-g', '--generators', default=None, help='JSON list of vectors (generate)')
    lie.set_defaults(handler=cmd_lie)

    grp = sub.add_parser('grp', parents=[common], help='Matrix group computations on generator files')
    grp.add_argument('action', choices=GRP_ACTIONS)
    grp.add_argument('-i', '--input', required=True, help='Generator file')
    grp.add_argument('-r', '--relations', default=None, help='Relations file, one word per line')
    grp.set_defaults(handler=cmd_grp)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, run one subcommand and map errors onto exit codes
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return ExitCode.OK if e.code in (0, None) else ExitCode.INPUT_ERROR

    try:
        settings = load_settings(args.config).override(enumeration_cap=args.cap, log_level=args.log_level,
                                                       log_json=args.log_json)
    except (OSError, ValueError) as e:
        print(f"vwlab: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR
    configure_logging(settings.log_level, settings.log_json)

    try:
        return int(args.handler(args, settings))
    except EnumerationCapError as e:
        logger.error("%s", e)
        print(f"vwlab: {e}", file=sys.stderr)
        return ExitCode.CAP_EXCEEDED
    except NotALieAlgebraError as e:
        print(f"vwlab: {e}", file=sys.stderr)
        return ExitCode.VERIFICATION_FAILED
    except (VwlabError, OSError, ValueError) as e:
        print(f"vwlab: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Subcommand implementations; each returns an exit code and prints to stdout
"""

from argparse import Namespace
from enum import IntEnum
from logging import getLogger

from vwlab.config import Settings
from vwlab.exactmath import FieldSpec
from vwlab.group import (derived_series_grp, dump_generators, enumerate_group, evaluate_relation, load_generators,
                         lower_central_series_grp, read_relation_lines, relation_convention_report, vector_semidirect)
from vwlab.lie import (HomStatus, LinearMap, check_hom, derivations, derived_series, dump_algebra, format_series,
                       load_action, load_algebra, load_matrix, load_vectors, lower_central_series, semidirect,
                       subalgebra_generated, validate_lie)
from vwlab.paperlab import reports_to_json, reports_to_text, resolve_parts, run_scenarios
from vwlab.util.json_io import dump_json

logger = getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    VERIFICATION_FAILED = 1
    INPUT_ERROR = 2
    CAP_EXCEEDED = 3


def emit(args: Namespace, data: dict, lines: list[str]):
    """Print JSON when ``--json`` was given, otherwise the human lines
    """
    print(dump_json(data) if args.json else "\n".join(lines))


def resolve_field(args: Namespace, settings: Settings) -> FieldSpec:
    if args.field is not None:
        return args.field
    return FieldSpec.parse(settings.default_field)


def cmd_verify_paper(args: Namespace, settings: Settings) -> ExitCode:
    reports = run_scenarios(resolve_parts(args.part), field=resolve_field(args, settings),
                            cap=settings.enumeration_cap, progress=args.progress)
    print(reports_to_json(reports) if args.json else reports_to_text(reports))
    if all(r.overall for r in reports):
        return ExitCode.OK
    return ExitCode.VERIFICATION_FAILED


def _series_json(algebra, report) -> dict:
    return {"dims": report.dims, "class": report.class_label,
            "terms": [[algebra.format_vector(v) for v in t.vectors()] for t in report.terms]}


def cmd_lie(args: Namespace, _settings: Settings) -> ExitCode:
    algebra = load_algebra(args.input)

    if args.action == 'validate':
        check = validate_lie(algebra)
        triple = None if check.triple is None else [algebra.labels[t] for t in check.triple]
        emit(args, {"valid": check.is_valid, "kind": check.kind, "triple": triple},
             [check.describe(algebra)])
        return ExitCode.OK if check else ExitCode.VERIFICATION_FAILED

    if args.action == 'series':
        lcs, der = lower_central_series(algebra), derived_series(algebra)
        emit(args, {"lower_central": _series_json(algebra, lcs), "derived": _series_json(algebra, der)},
             [f"lower central dims {lcs.dims}, class {lcs.class_label}", *format_series(algebra, lcs),
              f"derived dims {der.dims}, length {der.class_label}", *format_series(algebra, der)])
        return ExitCode.OK

    if args.action == 'derive':
        der, maps = derivations(algebra)
        emit(args, {"dim": der.dim, "basis": [m.to_json() for m in maps], "brackets": der.bracket_table()},
             [f"Der has dimension {der.dim}"] + [f"{label} = {m.to_json()}" for label, m in zip(der.labels, maps)])
        return ExitCode.OK

    if args.action == 'generate':
        if args.generators is None:
            raise ValueError("lie generate needs -g/--generators")
        s = subalgebra_generated(algebra, load_vectors(args.generators, algebra))
        basis = [algebra.format_vector(v) for v in s.vectors()]
        emit(args, {"dim": s.dim, "basis": basis}, [f"dim {s.dim}", "span{" + ", ".join(basis) + "}"])
        return ExitCode.OK

    if args.action == 'semidirect':
        if args.x is None or args.map is None:
            raise ValueError("lie semidirect needs -x/--x-algebra and -m/--map")
        x = load_algebra(args.x)
        product = semidirect(algebra, x, load_action(args.map, algebra, x))
        emit(args, dump_algebra(product),
             [f"dim {product.dim}"] + [f"{k} = {v}" for k, v in product.bracket_table().items()])
        return ExitCode.OK

    # hom-check
    if args.output is None or args.map is None:
        raise ValueError("lie hom-check needs -o/--codomain and -m/--map")
    codomain = load_algebra(args.output)
    f = LinearMap(algebra, codomain, load_matrix(args.map, algebra.field))
    status = check_hom(f)
    emit(args, {"status": str(status)}, [str(status)])
    return ExitCode.VERIFICATION_FAILED if status == HomStatus.NOT_HOM else ExitCode.OK


def cmd_grp(args: Namespace, settings: Settings) -> ExitCode:
    group = load_generators(args.input)
    cap = settings.enumeration_cap

    if args.action == 'order':
        elements = enumerate_group(group, cap=cap, progress=args.progress)
        emit(args, {"order": elements.order}, [str(elements.order)])
        return ExitCode.OK

    if args.action == 'series':
        elements = enumerate_group(group, cap=cap, progress=args.progress)
        lcs = lower_central_series_grp(group, elements=elements, cap=cap)
        der = derived_series_grp(group, elements=elements, cap=cap)
        emit(args, {"lower_central": {"orders": lcs.orders, "class": lcs.class_label},
                    "derived": {"orders": der.orders, "length": der.class_label}},
             [f"lower central orders {lcs.orders}, class {lcs.class_label}",
              f"derived orders {der.orders}, length {der.class_label}"])
        return ExitCode.OK

    if args.action == 'relations':
        if args.relations is None:
            raise ValueError("grp relations needs -r/--relations")
        texts = read_relation_lines(args.relations)
        results = {text: evaluate_relation(group, text) for text in texts}
        conventions = relation_convention_report(group, texts)
        emit(args, {"relations": results, "conventions": conventions},
             [f"{'pass' if ok else 'FAIL'}  {text}" for text, ok in results.items()])
        return ExitCode.OK if all(results.values()) else ExitCode.VERIFICATION_FAILED

    # semidirect
    product = vector_semidirect(group)
    print(dump_json(dump_generators(product)))
    return ExitCode.OK

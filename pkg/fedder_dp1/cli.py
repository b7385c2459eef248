"""Command-line front end.

Subcommands:

    check     Fedder F-splitting of a hypersurface
    classify  full report on a degree-1 del Pezzo equation
    roots     root divisor of a binary form in s, t
    census    sweep a coefficient space and compare Fedder with the closed-form predicate

Reports go to standard output (``--json`` for the versioned JSON document), logs and census
progress to standard error. Exit status is 0 on success, 1 on a mathematical error or a failed
census, 2 on malformed input.
"""
import argparse
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

import structlog

from .census import CensusEngine, CensusSpec, pin_form
from .classify import Classifier
from .config import Config, get_config
from .dp1 import FORM_DEGREES, DP1Equation, from_poly, read_coefficient_file, to_poly
from .errors import DegreeMismatchError, FedderDP1Error, InputError, InputFormatError
from .fedder import is_fsplit_hypersurface
from .fields import FieldDesc, field_of_order, make_field
from .logging_config import setup_logging
from .mpoly import DP1_ALPHABET, BinaryForm, MultiPoly, flat_alphabet, parse_poly
from .schemas import (
    InvocationModel,
    census_model,
    classification_model,
    divisor_report,
    dump_json,
    fedder_report,
    flatten,
)
from .tracing import setup_tracing
from .unifactor import roots, squarefree_decomposition

logger = structlog.get_logger()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, dest="char", help="characteristic p")
    common.add_argument("--field", type=int, dest="field", help="field order q = p^n (default p)")
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--seed", type=int, help="random seed (FEDDER_SEED overrides)")
    common.add_argument("--log-json", action="store_true", help="JSON logs on stderr")
    common.add_argument("--log-level", default="INFO", help="minimum log level (default INFO)")

    parser = argparse.ArgumentParser(
        prog="fedder-dp1",
        description="Fedder F-splitting and degree-1 del Pezzo classification",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    check = sub.add_parser("check", parents=[common], help="Fedder F-splitting of f")
    check.add_argument("expression", nargs="?", help="polynomial text")
    check.add_argument("--file", type=Path, help="coefficient file of a DP1 equation")
    check.add_argument(
        "--vars", help="comma-separated flat variables (default: weighted s, t, x, y)"
    )

    classify = sub.add_parser("classify", parents=[common], help="classify a DP1 equation")
    classify.add_argument("expression", nargs="?", help="sextic in s, t, x, y")
    classify.add_argument("--file", type=Path, help="coefficient file (a1: c0 c1 ...)")
    classify.add_argument("--search-bound", type=int, help="largest extension degree searched")

    roots_p = sub.add_parser("roots", parents=[common], help="root divisor of a binary form")
    roots_p.add_argument("expression", help="binary form in s, t")

    census = sub.add_parser("census", parents=[common], help="census of a coefficient space")
    census.add_argument("--plan", help="named plan from the plan file")
    census.add_argument("--mode", default=None, help="exhaustive or sample=N")
    census.add_argument("--space", choices=("normalized", "full"), default=None)
    census.add_argument(
        "--pin", action="append", default=[], metavar="SLOT=VALUE",
        help="fix a form, e.g. a4=0 or a1=1,0 (repeatable)",
    )
    census.add_argument("--workers", type=int, help="worker processes")
    census.add_argument("--chunk-size", type=int, help="instances per work unit")
    census.add_argument("--max-exhaustive", type=int, help="ceiling for exhaustive runs")
    return parser


# input helpers


def resolve_field(args: argparse.Namespace) -> FieldDesc:
    if args.char is None and args.field is None:
        raise InputFormatError("--char or --field is required")
    try:
        field = field_of_order(args.field) if args.field is not None else make_field(args.char)
    except InputError:
        raise
    except ValueError as e:
        raise InputFormatError(str(e)) from e
    if args.char is not None and field.p != args.char:
        raise InputFormatError(f"--field {args.field} is not a power of --char {args.char}")
    return field


def _read_text(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as e:
        raise InputFormatError(f"cannot read {path}: {e.strerror}") from e


def read_equation(args: argparse.Namespace, field: FieldDesc) -> DP1Equation:
    if args.file is not None:
        if args.expression:
            raise InputFormatError("give either an expression or --file, not both")
        return read_coefficient_file(_read_text(args.file), field)
    if not args.expression:
        raise InputFormatError("an expression or --file is required")
    return from_poly(parse_poly(args.expression, field))


def read_hypersurface(args: argparse.Namespace, field: FieldDesc) -> MultiPoly:
    if args.vars is None:
        if args.file is not None:
            return to_poly(read_equation(args, field))
        if not args.expression:
            raise InputFormatError("an expression or --file is required")
        return parse_poly(args.expression, field, DP1_ALPHABET)
    if args.file is not None:
        raise InputFormatError("--vars applies to expressions, not coefficient files")
    if not args.expression:
        raise InputFormatError("an expression is required with --vars")
    try:
        alphabet = flat_alphabet([v.strip() for v in args.vars.split(",") if v.strip()])
    except ValueError as e:
        raise InputFormatError(f"--vars: {e}") from e
    return parse_poly(args.expression, field, alphabet)


def read_form(text: str, field: FieldDesc) -> BinaryForm:
    f = parse_poly(text, field)
    degrees = f.degrees()
    if len(degrees) != 1:
        raise InputFormatError(f"{text!r} is not a nonzero homogeneous form in s, t")
    try:
        return BinaryForm.from_poly(f, degrees.pop())
    except DegreeMismatchError as e:
        raise InputFormatError(str(e)) from e


def parse_pins(items: Sequence[str], field: FieldDesc) -> dict:
    pins = {}
    for item in items:
        slot, sep, value = item.partition("=")
        slot = slot.strip()
        if not sep or slot not in FORM_DEGREES:
            raise InputFormatError(f"--pin expects SLOT=VALUE with SLOT in a1..a6, got {item!r}")
        values = [v for v in value.replace(",", " ").split() if v]
        pins[slot] = pin_form(field, slot, 0 if values == ["0"] else values)
    return pins


def parse_mode(text: Optional[str]):
    if text is None:
        return None, None
    if text == "exhaustive":
        return "exhaustive", 0
    name, sep, count = text.partition("=")
    if name == "sample" and sep:
        try:
            samples = int(count)
        except ValueError:
            raise InputFormatError(f"--mode sample=N needs an integer, got {count!r}") from None
        return "sample", samples
    raise InputFormatError(f"--mode must be 'exhaustive' or 'sample=N', got {text!r}")


def _invocation(args: argparse.Namespace, argv: Sequence[str], seed: Optional[int] = None):
    return InvocationModel(
        subcommand=args.subcommand,
        argv=list(argv),
        char=args.char,
        field=args.field,
        seed=seed,
        workers=getattr(args, "workers", None),
    )


def _emit(report, as_json: bool, out: TextIO) -> None:
    if as_json:
        out.write(dump_json(report) + "\n")
        return
    for key, value in flatten(report):
        out.write(f"{key}: {value}\n")


# subcommands


def cmd_check(args, argv, config: Config, out: TextIO) -> int:
    field = resolve_field(args)
    f = read_hypersurface(args, field)
    verdict = is_fsplit_hypersurface(f)
    _emit(fedder_report(f, verdict, _invocation(args, argv)), args.json, out)
    return 0


def cmd_classify(args, argv, config: Config, out: TextIO) -> int:
    field = resolve_field(args)
    eq = read_equation(args, field)
    settings = config.classifier
    if args.search_bound is not None:
        if args.search_bound < 1:
            raise InputFormatError("--search-bound must be positive")
        settings = replace(settings, search_bound=args.search_bound)
    report = Classifier(settings).classify(eq)
    _emit(classification_model(report, _invocation(args, argv)), args.json, out)
    return 0


def cmd_roots(args, argv, config: Config, out: TextIO) -> int:
    field = resolve_field(args)
    g = read_form(args.expression, field)
    seed = config.resolve_seed(args.seed)
    if seed is None:
        seed = config.census.rng_seed
    divisor = roots(g, seed=seed)
    report = divisor_report(g, divisor, squarefree_decomposition(g), _invocation(args, argv, seed))
    _emit(report, args.json, out)
    return 0


def cmd_census(args, argv, config: Config, out: TextIO) -> int:
    mode, samples = parse_mode(args.mode)
    seed = config.resolve_seed(args.seed)
    workers = config.resolve_workers(args.workers)
    defaults = config.census

    if args.plan:
        plan = config.plan_book.get_plan(args.plan)
        spec = CensusSpec.from_plan(plan, defaults, seed=seed, workers=workers)
        overrides = {}
        if mode is not None:
            overrides.update(mode=mode, samples=samples)
        if args.space is not None:
            overrides["space"] = args.space
        if args.pin:
            overrides["pins"] = {**spec.pins, **parse_pins(args.pin, spec.field)}
    else:
        field = resolve_field(args)
        spec = CensusSpec(
            p=field.p,
            q=field.order,
            space=args.space or "normalized",
            mode=mode or "exhaustive",
            samples=samples or 0,
            seed=defaults.rng_seed if seed is None else seed,
            workers=workers,
            chunk_size=defaults.chunk_size,
            pins=parse_pins(args.pin, field),
            max_exhaustive=defaults.max_exhaustive_instances,
            progress_every=defaults.progress_every,
        )
        overrides = {}
    if args.chunk_size is not None:
        overrides["chunk_size"] = args.chunk_size
    if args.max_exhaustive is not None:
        overrides["max_exhaustive"] = args.max_exhaustive
    if overrides:
        spec = replace(spec, **overrides)

    summary = CensusEngine().run(spec)
    _emit(census_model(summary, _invocation(args, argv, spec.seed)), args.json, out)
    return 0 if summary.ok else 1


COMMANDS = {
    "check": cmd_check,
    "classify": cmd_classify,
    "roots": cmd_roots,
    "census": cmd_census,
}


def run(args: argparse.Namespace, argv: Sequence[str], out: TextIO, err: TextIO) -> int:
    try:
        config = get_config()
        setup_logging(json_logs=args.log_json or config.log_json, level=args.log_level)
        setup_tracing(config.service_name, config.otlp_endpoint)
        return COMMANDS[args.subcommand](args, argv, config, out)
    except InputError as e:
        err.write(f"fedder-dp1: error: {e}\n")
        return 2
    except FedderDP1Error as e:
        logger.error(
            "command_failed", subcommand=args.subcommand, error=str(e), kind=type(e).__name__
        )
        err.write(f"fedder-dp1: {type(e).__name__}: {e}\n")
        return 1


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    return run(args, argv, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())

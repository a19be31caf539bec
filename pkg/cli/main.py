"""
ladderlab command line.

Exit codes: 0 when the command succeeds or the property holds, 1 when it fails or
violations are found, 2 on usage, parse or model errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from cli import settings
from cli.render import frame_text, ladders_frame, model_dot, theta_dot
from correspondence.component_form import b_upper_form, component_form, split_form
from correspondence.relations import RelationTag, related
from families.embeddings import CONSTRUCTS, construct_ladder, embedding_check
from families.membership import FamilyTag, in_family
from kernel.builtin import builtin_names, get_builtin
from kernel.errors import LadderLabError, ModelError
from kernel.extended import render_element
from kernel.model import KernelModel, validate_model
from kernel.model_file import load_model
from ladder.conditions import check_phi, check_q
from ladder.enumerate import enumerate_phi, save_ladders
from ladder.ladder import Ladder, join, meet
from ladder.ladder_file import emit_ladder, load_ladder
from theta.index import LambdaIndex, gamma, gamma_inv
from theta.words import Word

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FORMATS = ["text", "records", "dot"]


class UsageError(LadderLabError):
    pass


def resolve_model(name_or_path: str, validate: bool = True) -> KernelModel:
    """Built-in name or model file; invalid models are refused when validate is set."""
    if name_or_path in builtin_names():
        return get_builtin(name_or_path)
    path = Path(name_or_path)
    if not path.exists():
        raise ModelError(
            f"Unknown model: {name_or_path}. Choose from {builtin_names()} or give a model file"
        )
    model = load_model(path)
    if validate:
        violations = validate_model(model)
        if violations:
            lines = "\n".join(f"  {v}" for v in violations)
            raise ModelError(f"Model {model.name} is invalid:\n{lines}")
    return model


def _model_arg(args) -> Optional[KernelModel]:
    return resolve_model(args.model) if args.model else None


def _require_model(args) -> KernelModel:
    if not args.model:
        raise UsageError("this command needs --model")
    return resolve_model(args.model)


def _ladder(args, path: str) -> Ladder:
    return load_ladder(path, model=_model_arg(args))


def _depth(args, default: int) -> int:
    depth = default if args.depth is None else args.depth
    if depth > settings.MAX_DEPTH:
        raise UsageError(f"--depth {depth} exceeds LADDERLAB_MAX_DEPTH={settings.MAX_DEPTH}")
    if depth < 0:
        raise UsageError(f"--depth must be non-negative, got {depth}")
    return depth


def _print_report(report) -> int:
    if report.ok:
        print("ok")
        return EXIT_OK
    print(report.render())
    return EXIT_FAILED


# commands


def cmd_validate_model(args) -> int:
    target = args.target or args.model
    if not target:
        raise UsageError("give a model file or --model")
    model = resolve_model(target, validate=False)
    violations = validate_model(model)
    if not violations:
        print(f"{model.name}: valid")
        return EXIT_OK
    for v in violations:
        print(v)
    return EXIT_FAILED


def cmd_validate_ladder(args) -> int:
    l = _ladder(args, args.ladder)
    report = check_q(l) if args.lambda_form else check_phi(l)
    return _print_report(report)


def cmd_eval(args) -> int:
    l = _ladder(args, args.ladder)
    if not args.words:
        print(emit_ladder(l), end="")
        return EXIT_OK
    for text in args.words:
        print(f"{text} -> {render_element(l.evaluate(Word.parse(text)))}")
    return EXIT_OK


def cmd_join(args) -> int:
    op = join if args.command == "join" else meet
    print(emit_ladder(op(_ladder(args, args.first), _ladder(args, args.second))), end="")
    return EXIT_OK


def cmd_relate(args) -> int:
    l1, l2 = _ladder(args, args.first), _ladder(args, args.second)
    if args.tag == "all":
        for tag in RelationTag:
            print(f"{tag.value} {str(related(tag, l1, l2)).lower()}")
        return EXIT_OK
    holds = related(RelationTag.parse(args.tag), l1, l2)
    print(str(holds).lower())
    return EXIT_OK if holds else EXIT_FAILED


def _no_dot(args):
    if args.format == "dot":
        raise UsageError(f"--format dot is only produced by hasse, not {args.command}")


def cmd_component_form(args) -> int:
    _no_dot(args)
    l = _ladder(args, args.ladder)
    if args.command == "b-upper":
        form = b_upper_form(l)
    elif args.split:
        form = split_form(l)
    else:
        form = component_form(l)
    if args.format == "records":
        print(form.records(), end="")
    else:
        print(form.render())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    _no_dot(args)
    model = _require_model(args)
    ladders = enumerate_phi(model, _depth(args, 2), n_jobs=settings.JOBS)
    if args.save:
        save_ladders(ladders, args.save)
    if args.format == "records":
        print(frame_text(ladders_frame(ladders)), end="")
    else:
        for l in ladders:
            print(l.render())
    log.info(f"{len(ladders)} ladders")
    return EXIT_OK


def cmd_family(args) -> int:
    l = _ladder(args, args.ladder)
    return _print_report(in_family(FamilyTag.parse(args.tag), l, literal=args.literal))


def cmd_embed(args) -> int:
    model = _require_model(args)
    needed = 1 if args.construct in ("PK", "QK") else 0
    if args.check:
        if len(args.args) != needed:
            raise UsageError(f"{args.construct} --check takes {needed} argument(s)")
        arg = args.args[0] if needed else None
        return _print_report(embedding_check(model, args.construct, arg))
    if len(args.args) != needed + 1:
        raise UsageError(f"{args.construct} takes {needed + 1} argument(s)")
    arg = args.args[0] if needed else None
    print(emit_ladder(construct_ladder(model, args.construct, arg, args.args[-1])), end="")
    return EXIT_OK


def cmd_convert(args) -> int:
    text = args.value.strip()
    if text.startswith("("):
        print(gamma_inv(LambdaIndex.parse(text)).render())
    else:
        print(gamma(Word.parse(text)).render())
    return EXIT_OK


def cmd_hasse(args) -> int:
    if args.carrier:
        print(model_dot(_require_model(args)), end="")
        return EXIT_OK
    ladder = _ladder(args, args.ladder) if args.ladder else None
    print(theta_dot(_depth(args, 3), ladder), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--model", help=f"Model file or built-in name ({', '.join(builtin_names())})"
    )
    common.add_argument("--depth", type=int, help="Depth bound for enumeration and diagrams")
    common.add_argument("--format", choices=FORMATS, default="text", help="Output format")

    parser = argparse.ArgumentParser(prog="ladderlab", description="Ladder calculus toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate-model", parents=[common], help="Check the model axioms")
    p.add_argument("target", nargs="?", help="Model file or built-in name")
    p.set_defaults(func=cmd_validate_model)

    p = sub.add_parser("validate-ladder", parents=[common], help="Check P1-P6 (or Q1-Q5)")
    p.add_argument("ladder")
    p.add_argument("--lambda", dest="lambda_form", action="store_true", help="Check Q1-Q5")
    p.set_defaults(func=cmd_validate_ladder)

    p = sub.add_parser("eval", parents=[common], help="Evaluate a ladder at words")
    p.add_argument("ladder")
    p.add_argument("words", nargs="*")
    p.set_defaults(func=cmd_eval)

    for verb in ("join", "meet"):
        p = sub.add_parser(verb, parents=[common], help=f"Pointwise {verb} of two ladders")
        p.add_argument("first")
        p.add_argument("second")
        p.set_defaults(func=cmd_join)

    p = sub.add_parser("relate", parents=[common], help="Test a relation between two ladders")
    p.add_argument("tag", choices=[t.value for t in RelationTag] + ["all"])
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_relate)

    p = sub.add_parser("component-form", parents=[common], help="Emit the component form")
    p.add_argument("ladder")
    p.add_argument("--split", action="store_true", help="Separate the V^B block")
    p.set_defaults(func=cmd_component_form)

    p = sub.add_parser("b-upper", parents=[common], help="Emit the upper form of the B-class")
    p.add_argument("ladder")
    p.set_defaults(func=cmd_component_form, split=False)

    p = sub.add_parser("enumerate", parents=[common], help="Enumerate the ladders of a model")
    p.add_argument("--save", help="Also dump the ladders with joblib")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("family", parents=[common], help="Test family membership")
    p.add_argument("tag", choices=[t.value for t in FamilyTag])
    p.add_argument("ladder")
    p.add_argument("--literal", action="store_true", help="Only the two length-one instances")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("embed", parents=[common], help="Build or check an embedding")
    p.add_argument("construct", choices=list(CONSTRUCTS))
    p.add_argument("args", nargs="*", help="P or Q, then U (LRO takes U only)")
    p.add_argument("--check", action="store_true", help="Check the construct on its domain")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("convert", parents=[common], help="Convert between words and indices")
    p.add_argument("value", help="A word such as lrl or an index such as (1,3)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("hasse", parents=[common], help="DOT diagram of Θ¹ or of a carrier")
    p.add_argument("ladder", nargs="?", help="Label the vertices with this ladder's values")
    p.add_argument("--carrier", action="store_true", help="Diagram the model carrier")
    p.set_defaults(func=cmd_hasse)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line and return the exit code."""
    logging.basicConfig(level=settings.LOG_LEVEL, format=settings.LOG_FORMAT, stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except (LadderLabError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

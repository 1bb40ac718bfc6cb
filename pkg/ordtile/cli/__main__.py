"""
Command-line entry point: ``ordtile <subcommand> ...`` or ``python -m ordtile.cli``.
"""

import argparse
import json
import logging
import sys

from pydantic import ValidationError

from ordtile.cli import commands
from ordtile.cli.schemas import validate_document
from ordtile.critical.ParamsChiStar import EFFORT_LEVELS
from ordtile.datatypes.errors import InconclusiveError, InputError, InternalInconsistencyError, OrdtileError
from ordtile.functions.rationals import human_rational, is_rational_literal, parse_rational

logger = logging.getLogger("ordtile")

_HANDLERS = {
    "analyze": commands.cmd_analyze,
    "tile": commands.cmd_tile,
    "bottlegraph": commands.cmd_bottlegraph,
    "extremal": commands.cmd_extremal,
    "fxh": commands.cmd_fxh,
}


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _rational(text):
    try:
        parse_rational(text)
    except InputError as err:
        raise argparse.ArgumentTypeError(str(err)) from None
    return text


def _add_effort(parser):
    parser.add_argument("--effort", choices=sorted(EFFORT_LEVELS), default="default",
                        help="search effort for the critical chromatic number scan")


def build_parser():
    parser = argparse.ArgumentParser(prog="ordtile",
                                     description="Tiling thresholds of vertex-ordered graphs.",
                                     allow_abbrev=False)
    output = parser.add_mutually_exclusive_group()
    output.add_argument("--json", dest="json", action="store_true", help="print the JSON report")
    output.add_argument("--human", dest="json", action="store_false",
                        help="print a readable report (default)")
    parser.set_defaults(json=False)
    parser.add_argument("--jobs", type=_positive_int, default=1, help="worker threads")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log to stderr; repeat for debug output")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full threshold report for a pattern")
    analyze.add_argument("graph")
    _add_effort(analyze)

    tile = sub.add_parser("tile", help="tiling searches in a host graph")
    tile.add_argument("host")
    tile.add_argument("pattern")
    mode = tile.add_mutually_exclusive_group(required=True)
    mode.add_argument("--perfect", action="store_true")
    mode.add_argument("--cover", action="store_true")
    mode.add_argument("--max", action="store_true")
    mode.add_argument("--x", type=_rational, metavar="P/Q")
    tile.add_argument("--budget", type=_positive_int)

    bottle = sub.add_parser("bottlegraph", help="check a candidate bottlegraph")
    bottle.add_argument("parts", help="a file or a literal 'parts: s1 ... sk'")
    bottle.add_argument("pattern")
    check = bottle.add_mutually_exclusive_group(required=True)
    check.add_argument("--simple", action="store_true")
    check.add_argument("--tmax", type=_positive_int, metavar="T")
    check.add_argument("--x", type=_rational, metavar="P/Q", help="x-bottlegraph check")
    bottle.add_argument("--budget", type=_positive_int)

    extremal = sub.add_parser("extremal", help="build an extremal construction")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the graph here instead of stdout")
    common.add_argument("--budget", type=_positive_int)
    kinds = extremal.add_subparsers(dest="construction", required=True)
    f1 = kinds.add_parser("F1", parents=[common])
    for flag in ("--n", "--r", "--i", "--j"):
        f1.add_argument(flag, type=_positive_int, required=True)
    f1.add_argument("--H", help="pattern whose cover is checked at u")
    f2 = kinds.add_parser("F2", parents=[common])
    f2.add_argument("--H", required=True)
    f2.add_argument("--n", type=_positive_int, required=True)
    f2.add_argument("--chi", type=_rational, metavar="P/Q", help="exact χ*cr(H)")
    _add_effort(f2)
    f3 = kinds.add_parser("F3", parents=[common])
    f3.add_argument("--H", required=True)
    f3.add_argument("--n", type=_positive_int, required=True)
    fourpart = kinds.add_parser("fourpart", parents=[common])
    fourpart.add_argument("--ell", type=_positive_int, required=True)
    fourpart.add_argument("--n", type=_positive_int, required=True)
    fourpart.add_argument("--no-search", action="store_true", help="only evaluate the counting bound")

    fxh = sub.add_parser("fxh", help="the (x,H)-tiling coefficient profile")
    fxh.add_argument("pattern")
    fxh.add_argument("--chi", type=_rational, metavar="P/Q", help="exact χ*cr(H)")
    _add_effort(fxh)
    return parser


def _human_value(value):
    if is_rational_literal(value) and '/' in value:
        return human_rational(parse_rational(value))
    return value


def render_human(doc, indent=0):
    """Indented key: value lines, with rationals shown as "p/q (≈ d)"."""
    pad = "  " * indent
    lines = []
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(render_human(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.extend(render_human(item, indent + 1))
                lines.append("")
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: " + ", ".join(str(_human_value(v)) for v in value))
        else:
            lines.append(f"{pad}{key}: {_human_value(value)}")
    return lines


def _configure_logging(verbosity):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return commands.EXIT_INPUT if exc.code else commands.EXIT_OK
    _configure_logging(args.verbose)

    try:
        result = _HANDLERS[args.command](args)
    except InputError as err:
        print(f"ordtile: error: {err}", file=sys.stderr)
        return commands.EXIT_INPUT
    except OSError as err:
        print(f"ordtile: error: {err}", file=sys.stderr)
        return commands.EXIT_INPUT
    except InternalInconsistencyError:
        raise
    except InconclusiveError as err:
        print(f"ordtile: inconclusive: {err}", file=sys.stderr)
        return commands.EXIT_INCONCLUSIVE
    except OrdtileError as err:
        # a contradiction with a proven guarantee answers the question negatively
        print(f"ordtile: {type(err).__name__}: {err}", file=sys.stderr)
        return commands.EXIT_NEGATIVE

    try:
        validate_document(args.command, result.document)
    except ValidationError:
        logger.exception("report does not match its schema")
        raise

    if result.preamble is not None:
        sys.stdout.write(result.preamble)
    if args.json:
        sys.stdout.write(json.dumps(result.document, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(render_human(result.document)) + "\n")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())

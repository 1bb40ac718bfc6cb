"""
The subcommands. Each returns a CommandResult; printing is left to the entry
point.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ordtile.core.interval import interval_chromatic
from ordtile.critical.ParamsChiStar import ParamsChiStar
from ordtile.critical.exact import chi_star_exact
from ordtile.data.dataload import format_graph, read_graph, read_parts
from ordtile.datatypes.errors import InputError
from ordtile.datatypes.witness import TilingStatus
from ordtile.extremal.ParamsExtremal import ParamsExtremal
from ordtile.extremal.report import report_fourpart, report_F1, report_F2, report_F3
from ordtile.functions.rationals import parse_rational, qstr
from ordtile.multipartite.ParamsBottle import ParamsBottle
from ordtile.multipartite.verdicts import BottleStatus, check_bottlegraph_bounded, check_simple_bottlegraph
from ordtile.partial.profile import f_profile, tj_x0
from ordtile.partial.x_bottle import XBottleStatus, check_x_bottlegraph
from ordtile.thresholds.classify import classify
from ordtile.tiling.ParamsTiling import ParamsTiling
from ordtile.tiling.cover import h_cover
from ordtile.tiling.engine import max_tiling, perfect_tiling, x_target, x_tiling
from ordtile.tiling.verify import verify_tiling

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3

_TILE_EXIT = {
    TilingStatus.PERFECT_FOUND: EXIT_OK,
    TilingStatus.MAX_COVER: EXIT_OK,
    TilingStatus.NO_PERFECT: EXIT_NEGATIVE,
    TilingStatus.TARGET_UNREACHABLE: EXIT_NEGATIVE,
    TilingStatus.TIMEOUT: EXIT_INCONCLUSIVE,
}

_BOTTLE_EXIT = {
    BottleStatus.SIMPLE_YES: EXIT_OK,
    BottleStatus.BOUNDED_YES: EXIT_OK,
    BottleStatus.NOT_SIMPLE: EXIT_NEGATIVE,
    BottleStatus.NO: EXIT_NEGATIVE,
    BottleStatus.UNKNOWN: EXIT_INCONCLUSIVE,
    XBottleStatus.YES: EXIT_OK,
    XBottleStatus.NO: EXIT_NEGATIVE,
    XBottleStatus.UNKNOWN: EXIT_INCONCLUSIVE,
}


@dataclass
class CommandResult:
    """
    Attributes
    ----------
    document : dict
        The report, validated against its schema before printing.
    exit_code : int
    preamble : str or None
        Text printed before the report, such as a constructed graph.
    """

    document: dict
    exit_code: int = EXIT_OK
    preamble: Optional[str] = None


def _chi_params(args):
    return ParamsChiStar(search_effort=args.effort, jobs=args.jobs)


def cmd_analyze(args):
    H = read_graph(args.graph)
    chi_star = chi_star_exact(H, params=_chi_params(args))
    report = classify(H, chi_star)
    logger.info("χ_< = %d, case %s", report.chi_lt, report.perfect_case.value)
    return CommandResult(report.to_dict())


def cmd_tile(args):
    G, H = read_graph(args.host), read_graph(args.pattern)
    params = ParamsTiling(jobs=args.jobs) if args.budget is None \
        else ParamsTiling(budget=args.budget, jobs=args.jobs)

    if args.cover:
        uncovered = sorted(h_cover(G, H, params))
        doc = {"mode": "cover", "uncovered": uncovered}
        return CommandResult(doc, EXIT_NEGATIVE if uncovered else EXIT_OK)

    if args.perfect:
        doc = {"mode": "perfect"}
        answer = perfect_tiling(G, H, params=params)
    elif args.max:
        doc = {"mode": "max"}
        answer = max_tiling(G, H, params=params)
    else:
        x = parse_rational(args.x)
        doc = {"mode": "x", "x": qstr(x), "target": x_target(G.h, H.h, x)}
        answer = x_tiling(G, H, x, params=params)
    doc["answer"] = answer.to_dict()
    if answer.witness is not None:
        doc["verified"] = verify_tiling(G, H, answer.witness, require_perfect=args.perfect)
    return CommandResult(doc, _TILE_EXIT[answer.status])


def cmd_bottlegraph(args):
    B = read_parts(args.parts, ordered=False)
    H = read_graph(args.pattern)
    if args.budget is None:
        params = ParamsBottle(jobs=args.jobs)
    else:
        params = ParamsBottle(budget=args.budget, jobs=args.jobs)

    if args.simple:
        verdict = check_simple_bottlegraph(B, H, params=params)
        mode = "simple"
    elif args.x is not None:
        verdict = check_x_bottlegraph(B, args.x, H, params=params)
        mode = "x"
    else:
        verdict = check_bottlegraph_bounded(B, H, t_max=args.tmax, params=params)
        mode = "bounded"
    doc = verdict.to_dict()
    doc.update({"mode": mode, "parts": list(B.sizes)})
    return CommandResult(doc, _BOTTLE_EXIT[verdict.status])


def cmd_extremal(args):
    params = ParamsExtremal(jobs=args.jobs) if args.budget is None \
        else ParamsExtremal(budget=args.budget, jobs=args.jobs)
    name = args.construction
    if name == "F1":
        H = read_graph(args.H) if args.H else None
        report = report_F1(args.n, args.r, args.i, args.j, H=H, params=params)
    elif name == "F2":
        H = read_graph(args.H)
        if args.chi is not None:
            chi_star = parse_rational(args.chi)
        else:
            chi_star = chi_star_exact(H, params=_chi_params(args))
        report = report_F2(H, args.n, chi_star, params=params)
    elif name == "F3":
        report = report_F3(read_graph(args.H), args.n)
    elif name == "fourpart":
        report = report_fourpart(args.ell, args.n, search=not args.no_search, budget=params.budget)
    else:
        raise InputError(f"unknown construction {name!r}")

    text = format_graph(report.graph)
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(text)
        text = None
    code = EXIT_NEGATIVE if report.verified is False else EXIT_OK
    return CommandResult(report.to_dict(), code, text)


def cmd_fxh(args):
    H = read_graph(args.pattern)
    r, _ = interval_chromatic(H)
    chi_star = None
    if r >= 2:
        chi_star = parse_rational(args.chi) if args.chi else chi_star_exact(H, params=_chi_params(args))
    profile = f_profile(H, chi_star)
    doc = profile.to_dict()
    if r >= 2:
        T, J, x0 = tj_x0(H)
        doc["tj_x0"] = {"T": T, "J": J, "x0": qstr(x0)}
    return CommandResult(doc)

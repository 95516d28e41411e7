"""command line entry point: expand, eval, eval-star and verify"""

import argparse
import json
import logging
import re
import sys
from typing import TextIO

from pydantic import ValidationError

from tqmzv import config
from tqmzv.algebra.ncpoly import NcPoly
from tqmzv.algebra.words import Index
from tqmzv.cli.driver import run_suite
from tqmzv.cli.expression import parse_expression
from tqmzv.exceptions import ExpressionError, TqmzvError
from tqmzv.models import CliConfig, VerificationReport
from tqmzv.relations.suites import SUITES, SuiteOptions
from tqmzv.series.evaluation import z_eval
from tqmzv.series.numeric import numeric_eval
from tqmzv.series.qseries import QSeries
from tqmzv.series.zeta import zeta_q_star
from tqmzv.storage import configure_default_cache

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

_INDEX_TEXT = re.compile(r"^\(?\s*\d+(\s*,\s*\d+)*\s*\)?$")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", "-N", type=int, help="truncation order of q-series")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--t", dest="t_value", help="exact rational value for t")
    common.add_argument("--q", dest="q_value", type=float, help="evaluate as a float at q")
    common.add_argument("--eps", type=float, help="float summation cutoff")
    common.add_argument("--cache-dir", help="directory of the on-disk series cache")
    common.add_argument("--letters", action="store_true", help="print words in x, y")

    parser = argparse.ArgumentParser(
        prog="tqmzv", description="t-interpolated q-multiple zeta values"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    expand = commands.add_parser("expand", parents=[common], help="normalize an expression")
    expand.add_argument("expr")

    evaluate = commands.add_parser("eval", parents=[common], help="evaluate an index or expression")
    evaluate.add_argument("target")

    star = commands.add_parser("eval-star", parents=[common], help="evaluate the star series")
    star.add_argument("index")

    verify = commands.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    verify.add_argument("--workers", type=int, default=config.VERIFY_WORKERS)
    verify.add_argument("--out", help="write JSON lines here instead of stdout")
    verify.add_argument("--max-weight", type=int)
    verify.add_argument("--max-depth", type=int)
    verify.add_argument("--m", type=int, help="fix m (kawashima) or n (kernel)")
    return parser


def make_config(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        order=args.order,
        output_format=args.format,
        t_value=args.t_value,
        q_value=args.q_value,
        eps=args.eps,
        cache_dir=args.cache_dir,
        seed=getattr(args, "seed", config.DEFAULT_SEED),
        workers=getattr(args, "workers", config.VERIFY_WORKERS),
        letters=args.letters,
    )


def parse_target(text: str) -> NcPoly:
    """``2,1`` or ``2`` is read as an index, anything else as an expression."""
    if _INDEX_TEXT.match(text.strip()):
        return NcPoly.word(Index.parse(text).word())
    return parse_expression(text)


def _weight(poly: NcPoly) -> int:
    return max((len(word) for word in poly.words()), default=0)


def _print_series(series: QSeries, cfg: CliConfig, out: TextIO) -> None:
    if cfg.t_value is not None:
        series = series.subs_t(cfg.t_value)
    if cfg.output_format == "json":
        print(json.dumps(series.to_json()), file=out)
    else:
        print(series, file=out)


def cmd_expand(args, cfg: CliConfig, out: TextIO) -> int:
    poly = parse_expression(args.expr)
    if cfg.t_value is not None:
        poly = poly.subs_t(cfg.t_value)
    if cfg.output_format == "json":
        print(json.dumps(poly.to_json()), file=out)
    else:
        print(poly.render(letters=cfg.letters), file=out)
    return EXIT_PASS


def cmd_eval(args, cfg: CliConfig, out: TextIO) -> int:
    poly = parse_target(args.target)
    if cfg.q_value is not None:
        t = float(cfg.t_value) if cfg.t_value is not None else 0.0
        print(repr(numeric_eval(poly, cfg.q_value, t, cfg.eps)), file=out)
        return EXIT_PASS
    order = cfg.order_for(_weight(poly), config.ORDER_MARGIN)
    _print_series(z_eval(poly, order), cfg, out)
    return EXIT_PASS


def cmd_eval_star(args, cfg: CliConfig, out: TextIO) -> int:
    index = Index.parse(args.index)
    if cfg.q_value is not None:
        print(repr(numeric_eval(index, cfg.q_value, eps=cfg.eps, star=True)), file=out)
        return EXIT_PASS
    order = cfg.order_for(index.weight, config.ORDER_MARGIN)
    series = zeta_q_star(index, order)
    if cfg.output_format == "json":
        print(json.dumps(series.to_json()), file=out)
    else:
        print(series, file=out)
    return EXIT_PASS


def _format_report(report: VerificationReport) -> str:
    params = " ".join(f"{key}={value}" for key, value in report.params.items())
    line = f"{report.status.upper()} {report.relation} {params}"
    if report.first_diff is not None:
        diff = report.first_diff
        line += f" first difference at q^{diff.q_power}: {diff.lhs} != {diff.rhs}"
    return line


def cmd_verify(args, cfg: CliConfig, out: TextIO) -> int:
    options = SuiteOptions(
        max_weight=args.max_weight,
        max_depth=args.max_depth,
        m=args.m,
        order=cfg.order,
        seed=cfg.seed,
    )
    reports = run_suite(args.suite, options, cfg.workers, cfg.cache_dir)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            _write_reports(reports, "json", handle)
    else:
        _write_reports(reports, cfg.output_format, out)
    return EXIT_PASS if all(report.passed for report in reports) else EXIT_FAIL


def _write_reports(reports: list[VerificationReport], fmt: str, out: TextIO) -> None:
    for report in reports:
        print(report.to_json_line() if fmt == "json" else _format_report(report), file=out)


COMMANDS = {
    "expand": cmd_expand,
    "eval": cmd_eval,
    "eval-star": cmd_eval_star,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else EXIT_ERROR
    try:
        cfg = make_config(args)
    except ValidationError as error:
        print(f"invalid options: {error}", file=sys.stderr)
        return EXIT_ERROR
    configure_default_cache(cfg.cache_dir)
    try:
        return COMMANDS[args.command](args, cfg, out)
    except ExpressionError as error:
        print(error.display(), file=sys.stderr)
        return EXIT_ERROR
    except TqmzvError as error:
        logger.debug("command failed", exc_info=True)
        print(f"error: {error.details}", file=sys.stderr)
        return EXIT_ERROR

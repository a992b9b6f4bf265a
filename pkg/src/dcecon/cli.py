"""Command-line front end.

Subcommands: cost-min, revenue-max, profit (optimizer runs over a cost CSV),
revenue-max-closed, cost-min-closed, profit-max-closed (closed forms), sfa
(frontier recovery or synthesis), fit (least squares / constrained QP), hhi.

Exit codes: 0 success, 1 usage error, 2 data/validation error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import List, Optional

from . import closed_form, concentration, fitting, frontier
from .errors import DataValidationError, EconModelError
from .optimizers import OptimizerConfig
from .production import RdDeterminants
from .reports import RunReport, ingest_costs, read_numeric_csv, run_table

EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract reserves 2 for data errors
    def error(self, message):
        raise _UsageError(message)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument("--seed", type=int, default=0)


def _add_optimizer_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="cost CSV (year,new_server_cost,power_cooling_cost)")
    parser.add_argument("--learning-rate", type=float, default=0.01)
    parser.add_argument("--mode", choices=["marginal", "analytic"], default="marginal")
    parser.add_argument("--cap", type=float, default=1.8)
    parser.add_argument("--max-iters", type=int, default=1_000_000)
    parser.add_argument("--init-alpha", type=float, default=None)
    parser.add_argument("--init-beta", type=float, default=None)
    parser.add_argument("--trace", metavar="DIR", default=None,
                        help="write per-iteration trajectories as CSV files into DIR")


def _add_rd_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("R&D determinants (all five needed to back out L*/K*)")
    group.add_argument("--discount-rate", type=float, default=None)
    group.add_argument("--harrod-capital", type=float, default=None, help="Gamma")
    group.add_argument("--solow-labor", type=float, default=None, help="Delta")
    group.add_argument("--alpha1", type=float, default=None)
    group.add_argument("--beta1", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dcecon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("cost-min", "revenue-max", "profit"):
        p = sub.add_parser(name)
        _add_common_flags(p)
        _add_optimizer_flags(p)
        if name == "profit":
            p.add_argument("--weights", default=None,
                           help="CSV of year,w1,w2 for the linear-cost comparison")
            p.add_argument("--reference", action="store_true",
                           help="build the table from bundled reference objectives")

    p = sub.add_parser("revenue-max-closed")
    _add_common_flags(p)
    for flag in ("--budget", "--w1", "--w2", "--recurring", "--infrastructure",
                 "--alpha", "--beta"):
        p.add_argument(flag, type=float, required=True)
    _add_rd_flags(p)

    p = sub.add_parser("cost-min-closed")
    _add_common_flags(p)
    for flag in ("--target-output", "--w1", "--w2", "--recurring", "--infrastructure",
                 "--alpha", "--beta"):
        p.add_argument(flag, type=float, required=True)
    _add_rd_flags(p)

    p = sub.add_parser("profit-max-closed")
    _add_common_flags(p)
    for flag in ("--w1", "--w2", "--recurring", "--infrastructure", "--alpha", "--beta"):
        p.add_argument(flag, type=float, required=True)
    p.add_argument("--tfp", type=float, default=1.0, help="total factor productivity P")
    _add_rd_flags(p)

    p = sub.add_parser("sfa")
    _add_common_flags(p)
    p.add_argument("--intercept", type=float, default=0.0, help="log-frontier intercept")
    p.add_argument("--shock", type=float, default=0.0, help="random shock v")
    p.add_argument("--inefficiency", type=float, default=0.0, help="technical inefficiency u")
    p.add_argument("--n", type=float, default=1.0, help="returns-to-scale sum alpha+beta")
    p.add_argument("--S", type=float, required=True, help="server cost input")
    p.add_argument("--I", type=float, required=True, help="infrastructure cost input")
    p.add_argument("--output", type=float, default=None,
                   help="observed output y (recovery mode)")
    p.add_argument("--synthesize", type=int, default=None, metavar="COUNT",
                   help="generate COUNT shocked observations (synthesis mode)")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--sigma-v", type=float, default=0.0)
    p.add_argument("--sigma-u", type=float, default=0.0)

    p = sub.add_parser("fit")
    _add_common_flags(p)
    p.add_argument("--input", required=True)
    p.add_argument("--x1", default="new_server_cost", help="first regressor column")
    p.add_argument("--x2", default="power_cooling_cost", help="second regressor column")
    p.add_argument("--target", default="output", help="dependent-variable column")
    p.add_argument("--scale", choices=["log", "raw"], default="log")
    p.add_argument("--no-intercept", action="store_true")
    p.add_argument("--constrained", metavar="PATH", default=None,
                   help="constraint CSV: rows c1,c2,c3,b encoding Cx <= b")

    p = sub.add_parser("hhi")
    _add_common_flags(p)
    p.add_argument("--input", required=True, help="CSV of firm,share_percent[,included]")

    return parser


def _rd_from_args(args) -> Optional[RdDeterminants]:
    values = (args.discount_rate, args.harrod_capital, args.solow_labor, args.alpha1, args.beta1)
    if all(v is None for v in values):
        return None
    if any(v is None for v in values):
        raise _UsageError("all five R&D determinant flags must be given together")
    return RdDeterminants(r=args.discount_rate, Gamma=args.harrod_capital,
                          Delta=args.solow_labor, alpha1=args.alpha1, beta1=args.beta1)


def _optimizer_config(args) -> OptimizerConfig:
    return OptimizerConfig(
        learning_rate=args.learning_rate,
        init_alpha=args.init_alpha,
        init_beta=args.init_beta,
        seed=args.seed,
        max_iters=args.max_iters,
        cap=args.cap,
        mode=args.mode,
        record_trajectory=args.trace is not None,
    )


def _cmd_optimizer(args) -> RunReport:
    records = ingest_costs(args.input)
    config = _optimizer_config(args)
    command = args.command.replace("-", "_")
    linear_weights = None
    if command == "profit" and args.weights is not None:
        data = read_numeric_csv(args.weights, ["year", "w1", "w2"])
        linear_weights = {int(y): (w1, w2)
                          for y, w1, w2 in zip(data["year"], data["w1"], data["w2"])}
    return run_table(command, records, config,
                     linear_weights=linear_weights,
                     trace_dir=args.trace,
                     use_reference=getattr(args, "reference", False))


def _solution_row(solution) -> dict:
    row = {"A": solution.A, "B": solution.B}
    if hasattr(solution, "objective"):
        row["objective"] = solution.objective
    else:
        row["output"] = solution.output
        row["profit"] = solution.profit
    if solution.L_star is not None:
        row["L_star"] = solution.L_star
        row["K_star"] = solution.K_star
    return row


def _cmd_closed(args) -> RunReport:
    rd = _rd_from_args(args)
    if args.command == "revenue-max-closed":
        problem = closed_form.BudgetProblem(m=args.budget, w1=args.w1, w2=args.w2,
                                            R=args.recurring, I=args.infrastructure,
                                            alpha=args.alpha, beta=args.beta)
        solution = closed_form.revenue_max(problem, rd)
        config = {"m": args.budget}
    elif args.command == "cost-min-closed":
        solution = closed_form.cost_min(args.target_output, args.w1, args.w2,
                                        args.recurring, args.infrastructure,
                                        args.alpha, args.beta, rd)
        config = {"y_tar": args.target_output}
    else:
        solution = closed_form.profit_max(args.w1, args.w2, args.recurring,
                                          args.infrastructure, args.alpha, args.beta,
                                          P=args.tfp, rd=rd)
        config = {"P": args.tfp}
    config.update({"w1": args.w1, "w2": args.w2, "R": args.recurring,
                   "I": args.infrastructure, "alpha": args.alpha, "beta": args.beta})
    return RunReport(command=args.command, config=config, rows=[_solution_row(solution)])


def _cmd_sfa(args) -> RunReport:
    config = {"intercept": args.intercept, "n": args.n, "S": args.S, "I": args.I,
              "seed": args.seed}
    if args.synthesize is not None:
        if args.alpha is None or args.beta is None:
            raise _UsageError("synthesis mode needs --alpha and --beta")
        config.update({"alpha": args.alpha, "beta": args.beta,
                       "sigma_v": args.sigma_v, "sigma_u": args.sigma_u,
                       "count": args.synthesize})
        rng = random.Random(args.seed)
        rows = [
            {"v": obs.v, "u": obs.u, "output": obs.output, "efficiency": obs.efficiency}
            for obs in frontier.synthesize(args.intercept, args.alpha, args.beta,
                                           args.S, args.I, args.sigma_v, args.sigma_u,
                                           args.synthesize, rng)
        ]
        return RunReport(command="sfa", config=config, rows=rows)
    if args.output is None:
        raise _UsageError("recovery mode needs --output (or use --synthesize)")
    config.update({"y": args.output, "v": args.shock, "u": args.inefficiency})
    alpha, beta = frontier.elasticities_from_frontier(
        args.output, args.intercept, args.S, args.I,
        v=args.shock, u=args.inefficiency, n=args.n,
    )
    summary = {"alpha": alpha, "beta": beta,
               "efficiency": frontier.technical_efficiency(args.inefficiency)}
    return RunReport(command="sfa", config=config, rows=[summary], summary=summary)


def _cmd_fit(args) -> RunReport:
    data = read_numeric_csv(args.input, [args.x1, args.x2, args.target])
    builder = fitting.DesignMatrix.log_scale if args.scale == "log" else fitting.DesignMatrix.raw_scale
    design = builder(data[args.x1], data[args.x2], data[args.target],
                     intercept=not args.no_intercept)
    if args.constrained:
        block = read_numeric_csv(args.constrained, ["c1", "c2", "c3", "b"])
        C = [[a, b, c] for a, b, c in zip(block["c1"], block["c2"], block["c3"])]
        result = fitting.qp_fit(design, (C, block["b"]))
        method = "constrained_qp"
    else:
        result = fitting.ols_fit(design)
        method = "ols"
    config = {"x1": args.x1, "x2": args.x2, "target": args.target,
              "scale": args.scale, "intercept": not args.no_intercept, "method": method}
    row = {"intercept": result.intercept, "alpha": result.alpha, "beta": result.beta,
           "r_squared": result.r_squared, "residual_norm": result.residual_norm}
    return RunReport(command="fit", config=config, rows=[row], summary=row)


def _cmd_hhi(args) -> RunReport:
    import csv as _csv
    import warnings as _warnings
    from pathlib import Path

    path = Path(args.input)
    if not path.exists():
        raise DataValidationError(f"input file not found: {path}")
    entries = []
    with path.open(newline="") as handle:
        reader = _csv.DictReader(handle)
        if reader.fieldnames is None or "firm" not in reader.fieldnames \
                or "share_percent" not in reader.fieldnames:
            raise DataValidationError(f"{path}: expected header firm,share_percent[,included]")
        for line_no, row in enumerate(reader, start=2):
            try:
                share = float(row["share_percent"])
            except (TypeError, ValueError):
                raise DataValidationError(f"{path}:{line_no}: non-numeric share") from None
            included = str(row.get("included") or "true").strip().lower() in ("1", "true", "yes")
            entries.append(concentration.ShareEntry(row["firm"], share, included))
    if not entries:
        raise DataValidationError(f"{path}: no data rows")
    with _warnings.catch_warnings(record=True) as caught:
        _warnings.simplefilter("always")
        shares = concentration.MarketShares(tuple(entries))
    index = concentration.hhi(shares)
    rows = [{"firm": e.firm, "share": e.share, "included": e.included,
             "contribution": e.share ** 2 if e.included else 0.0}
            for e in shares.entries]
    summary = {"hhi": index, "classification": concentration.classify_hhi(index).value}
    return RunReport(command="hhi", config={"input": str(path)}, rows=rows,
                     warnings=[str(w.message) for w in caught], summary=summary)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command in ("cost-min", "revenue-max", "profit"):
            report = _cmd_optimizer(args)
        elif args.command.endswith("-closed"):
            report = _cmd_closed(args)
        elif args.command == "sfa":
            report = _cmd_sfa(args)
        elif args.command == "fit":
            report = _cmd_fit(args)
        else:
            report = _cmd_hhi(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataValidationError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except EconModelError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    sys.stdout.write(report.render(args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())

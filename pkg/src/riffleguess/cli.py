"""Command-line front end.

Subcommands: exact, pmf-y, moments, simulate, limit, verify.  All numeric
output is CSV with LF line endings, '.' decimal separator and shortest
round-trip float formatting, so files are byte-stable for fixed inputs.
Exact probabilities appear as unreduced numerator/denominator columns next
to a float column.

Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import exactdist, limitlaw, montecarlo, verification
from .errors import CapacityError


def _fmt(value) -> str:
    if isinstance(value, bool):
        raise TypeError("booleans have no CSV form")
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def _render(header: str, rows) -> str:
    lines = [header]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _emit(files: list[tuple[str, str]], out: str, quiet: bool) -> None:
    if out == "-":
        for name, content in files:
            sys.stdout.write(f"# {name}\n")
            sys.stdout.write(content)
        return
    directory = Path(out)
    directory.mkdir(parents=True, exist_ok=True)
    for name, content in files:
        path = directory / name
        with open(path, "w", newline="\n") as handle:
            handle.write(content)
        if not quiet:
            print(f"wrote {path}", file=sys.stderr)


def _pmf_rows(pmf):
    rows = []
    for k in range(pmf.max_value, -1, -1):
        num = pmf.numerators[k]
        rows.append((k, num, pmf.denominator, num / pmf.denominator))
    return rows


def _moment_rows(n: int, s_max: int):
    factorial = exactdist.factorial_moments(n, s_max)
    raw = exactdist.raw_moments(n, s_max)
    rows = []
    for s in range(s_max + 1):
        mu = limitlaw.limit_moment(s)
        rows.append((
            s,
            factorial[s].numerator, factorial[s].denominator,
            raw[s].numerator, raw[s].denominator,
            float(raw[s]),
            mu,
            float(raw[s]) / n ** (s / 2),
        ))
    return rows


def cmd_exact(args) -> int:
    pmf = exactdist.pmf_x(args.n)
    files = [
        ("pmf.csv", _render("k,prob_num,prob_den,prob_float", _pmf_rows(pmf))),
        ("moments.csv", _render(
            "s,factorial_num,factorial_den,raw_num,raw_den,raw_float,"
            "limit_mu_tilde,normalized_raw",
            _moment_rows(args.n, args.s_max))),
    ]
    _emit(files, args.out, args.quiet)
    return 0


def cmd_pmf_y(args) -> int:
    pmf = exactdist.pmf_y(args.m1, args.m2)
    files = [("pmf.csv", _render("k,prob_num,prob_den,prob_float", _pmf_rows(pmf)))]
    _emit(files, args.out, args.quiet)
    return 0


def cmd_moments(args) -> int:
    files = [("moments.csv", _render(
        "s,factorial_num,factorial_den,raw_num,raw_den,raw_float,"
        "limit_mu_tilde,normalized_raw",
        _moment_rows(args.n, args.s_max)))]
    _emit(files, args.out, args.quiet)
    return 0


def cmd_simulate(args) -> int:
    report = montecarlo.simulate(args.n, args.samples, args.seed, workers=args.workers)
    hist_rows = [
        (k, c, c / report.samples) for k, c in enumerate(report.counts)
    ]
    fit_rows = [
        ("mean", report.mean),
        ("variance", report.variance),
        ("ks_to_limit", report.ks_to_limit),
    ]
    if report.tv_to_exact is not None:
        fit_rows.append(("tv_to_exact", report.tv_to_exact))
    fit_lines = ["statistic,value"]
    for name, value in fit_rows:
        fit_lines.append(f"{name},{_fmt(value)}")
    files = [
        ("hist.csv", _render("k,count,empirical_prob", hist_rows)),
        ("fit.csv", "\n".join(fit_lines) + "\n"),
    ]
    _emit(files, args.out, args.quiet)
    return 0


def cmd_limit(args) -> int:
    if args.step <= 0 or args.grid_max <= args.grid_min:
        raise ValueError("grid requires step > 0 and max > min")
    points = int(round((args.grid_max - args.grid_min) / args.step)) + 1
    rows = []
    for i in range(points):
        x = args.grid_min + i * args.step
        rows.append((x, limitlaw.limit_density(x), limitlaw.limit_cdf(x)))
    files = [("limit.csv", _render("x,density,cdf", rows))]
    _emit(files, args.out, args.quiet)
    return 0


def cmd_verify(args) -> int:
    bounds = {}
    if args.suite == "enum-vs-lemma" and args.n_max is not None:
        bounds["n_max"] = args.n_max
    if args.suite == "dyck-vs-dp" and args.size_max is not None:
        bounds["size_max"] = args.size_max
    if args.suite == "kernel-vs-dp" and args.order is not None:
        bounds["order"] = args.order
    if args.suite == "moments-vs-limit":
        if args.s_max is not None:
            bounds["s_max"] = args.s_max
        if args.tol is not None:
            bounds["constant"] = args.tol
    if args.suite == "linexp" and args.tol is not None:
        bounds["tol"] = args.tol
    checks = verification.run_suite(args.suite, **bounds)
    width = max(len(f"{c.suite}: {c.name}") for c in checks)
    failures = 0
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        if not check.passed:
            failures += 1
        print(f"{f'{check.suite}: {check.name}':<{width}}  {status}  {check.detail}")
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return 0 if failures == 0 else 1


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", default=".", help="output directory, or - for stdout")
    parser.add_argument("--format", default="csv", choices=["csv"],
                        help="output format (csv only)")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress progress messages on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riffleguess",
        description="Exact and simulated distributions for the no-feedback "
                    "one-shuffle card guessing game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact pmf and moments of the guess count")
    p.add_argument("--n", type=int, required=True, help="deck size")
    p.add_argument("--s-max", type=int, default=5, dest="s_max",
                   help="highest moment order (default 5)")
    _add_common(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("pmf-y", help="exact pmf of the half-deck guess count")
    p.add_argument("--m1", type=int, required=True, help="first packet size")
    p.add_argument("--m2", type=int, required=True, help="second packet size")
    _add_common(p)
    p.set_defaults(func=cmd_pmf_y)

    p = sub.add_parser("moments", help="exact moments only (fast at large n)")
    p.add_argument("--n", type=int, required=True, help="deck size")
    p.add_argument("--s-max", type=int, default=5, dest="s_max")
    _add_common(p)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("simulate", help="Monte Carlo histogram and fit statistics")
    p.add_argument("--n", type=int, required=True, help="deck size")
    p.add_argument("--samples", type=int, required=True, help="number of games")
    p.add_argument("--seed", type=int, default=1, help="RNG seed (default 1)")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default RIFFLE_ORACLE_THREADS or 1)")
    _add_common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("limit", help="limit-law density and cdf on a grid")
    p.add_argument("--grid-min", type=float, default=0.0, dest="grid_min")
    p.add_argument("--grid-max", type=float, default=8.0, dest="grid_max")
    p.add_argument("--step", type=float, default=0.001)
    _add_common(p)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("verify", help="run a cross-route equivalence suite")
    p.add_argument("--suite", required=True,
                   choices=sorted(verification.SUITES) + ["all"])
    p.add_argument("--n-max", type=int, default=None, dest="n_max")
    p.add_argument("--size-max", type=int, default=None, dest="size_max")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--s-max", type=int, default=None, dest="s_max")
    p.add_argument("--tol", type=float, default=None,
                   help="tolerance override for the asymptotic suites")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", None) is None and args.command == "simulate":
        args.workers = int(os.environ.get("RIFFLE_ORACLE_THREADS", "1"))
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Subcommands:
  period     tail and cycle length of one tuple's orbit
  maxperiod  P and L for a whole space (cached in a JSONL file)
  spectrum   period histogram by enumeration, algebra, or both
  divisors   per-divisor fixed-space report (dimension, exact counts)
  symmetry   permutation stabilizer of an exact-period class
  graph      connected component of a tuple as DOT text
  verify     run the identity checker suites

Exit codes: 0 success, 1 failed verification or mismatch, 2 bad usage or
unusable input, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import (
    BudgetExceeded,
    DucciError,
    Params,
    SpectrumMismatch,
)
from .cycles import DEFAULT_STEP_BUDGET, PeriodCache, find_cycle, max_period
from .fixed_space import algebraic_spectrum
from .graph import DEFAULT_NODE_BUDGET, component_of, export_dot
from .spectrum import (
    DEFAULT_STATE_BUDGET,
    brute_spectrum,
    spectrum_compare,
)
from .symmetry import stabilizer
from .checks import SuiteOptions, run_suite


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _parse_entries(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"tuple must be comma-separated integers, got {text!r}")


def _params(args) -> Params:
    return Params(args.n, args.m)


def _tuple_arg(args, params: Params):
    entries = _parse_entries(args.tuple)
    if len(entries) != params.n:
        raise ValueError(
            f"expected {params.n} entries for --n {params.n}, got {len(entries)}"
        )
    return params.tuple(entries)


def _cache(args) -> PeriodCache:
    return PeriodCache(args.cache)


def cmd_period(args) -> int:
    params = _params(args)
    u = _tuple_arg(args, params)
    info = find_cycle(u, budget=args.budget)
    print(f"len={info.len} per={info.per}")
    return 0


def cmd_maxperiod(args) -> int:
    rec = max_period(_params(args), budget=args.budget, cache=_cache(args))
    print(f"P={rec.P} L={rec.L}")
    return 0


def cmd_spectrum(args) -> int:
    params = _params(args)
    cache = _cache(args)
    state_budget = args.budget if args.budget is not None else DEFAULT_STATE_BUDGET
    if args.method == "brute":
        rep = brute_spectrum(params, state_budget=state_budget, cache=cache)
        if args.csv:
            rep.write_csv(sys.stdout)
        else:
            _emit_json(rep.to_json_dict())
        return 0
    if args.method == "algebraic":
        rec = max_period(params, cache=cache)
        alg = algebraic_spectrum(params, rec.P)
        counts = alg.nonzero_counts()
        if args.csv:
            print("period,count,zero,uniform,sum,other")
            for d in sorted(counts):
                print(f"{d},{counts[d]},,,,")
        else:
            _emit_json(
                {
                    "n": params.n,
                    "m": params.m,
                    "P": rec.P,
                    "cycle_histogram": {str(d): c for d, c in sorted(counts.items())},
                }
            )
        return 0
    # both: enumerate, count algebraically, and insist they agree
    rep = brute_spectrum(params, state_budget=state_budget, cache=cache)
    cmp = spectrum_compare(params, report=rep, cache=cache)
    if args.csv:
        rep.write_csv(sys.stdout)
    else:
        out = rep.to_json_dict()
        out["match"] = True
        out["algebraic_counts"] = {str(k): v for k, v in sorted(cmp.counts.items())}
        _emit_json(out)
    return 0


def cmd_divisors(args) -> int:
    params = _params(args)
    rec = max_period(params, budget=args.budget, cache=_cache(args))
    alg = algebraic_spectrum(params, rec.P)
    _emit_json(alg.to_report_dict())
    return 0


def cmd_symmetry(args) -> int:
    params = _params(args)
    state_budget = args.budget if args.budget is not None else DEFAULT_STATE_BUDGET
    grp = stabilizer(params, args.period, state_budget=state_budget)
    _emit_json(grp.to_json_dict())
    return 0


def cmd_graph(args) -> int:
    params = _params(args)
    u = _tuple_arg(args, params)
    budget = args.budget if args.budget is not None else DEFAULT_NODE_BUDGET
    g = component_of(u, node_budget=budget)
    text = export_dot(g)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"nodes={len(g.nodes)} cycle={len(g.cycle_nodes)} -> {args.dot}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    names = tuple(args.suite.split(",")) if args.suite else ("all",)
    options = SuiteOptions(
        max_m=args.max_m,
        budget=args.budget,
        seed=args.seed,
        threads=args.threads,
        cache=_cache(args),
    )
    results = run_suite(names, options)
    report = {
        "all_passed": all(r.passed for r in results),
        "results": [r.to_json_dict() for r in results],
    }
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if report["all_passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--cache", default=PeriodCache.DEFAULT_PATH,
        help="JSONL cache of (n, m) -> (L, P) records",
    )
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(
        prog="ducci",
        description="Periods of the cyclic pairwise-sum map on Z_m^n",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("period", cmd_period, "tail and cycle length of one orbit")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--tuple", required=True, help="comma-separated entries")
    sp.add_argument("--budget", type=int, default=DEFAULT_STEP_BUDGET)

    sp = add("maxperiod", cmd_maxperiod, "P and L of the whole space")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_STEP_BUDGET)

    sp = add("spectrum", cmd_spectrum, "period histogram of Z_m^n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument(
        "--method", choices=("brute", "algebraic", "both"), default="brute"
    )
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--csv", action="store_true")
    sp.add_argument("--budget", type=int, default=None, help="state budget")

    sp = add("divisors", cmd_divisors, "fixed-space report per divisor of P")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_STEP_BUDGET)

    sp = add("symmetry", cmd_symmetry, "stabilizer of an exact-period class")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--period", type=int, required=True)
    sp.add_argument("--budget", type=int, default=None, help="state budget")

    sp = add("graph", cmd_graph, "connected component as DOT")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--tuple", required=True)
    sp.add_argument("--dot", default=None, help="write DOT to this file")
    sp.add_argument("--budget", type=int, default=None, help="node budget")

    sp = add("verify", cmd_verify, "run the checker suites")
    sp.add_argument(
        "--suite", default=None,
        help="comma-separated suite names, or 'all' (default)",
    )
    sp.add_argument("--max-m", type=int, default=None, dest="max_m")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--out", default=None, help="also write the JSON report here")

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except SpectrumMismatch as e:
        print(f"mismatch: {e}", file=sys.stderr)
        return 1
    except (DucciError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

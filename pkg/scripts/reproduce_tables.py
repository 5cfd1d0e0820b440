#!/usr/bin/env python3
"""Recompute the reference period tables and print them next to the
stored values.

For every (n, m) row: the maximal period P and tail bound L from the
reference orbit, the uniform-tuple period, and — when the space is small
enough to enumerate under the state budget — the complete period
histogram with its class breakdown.  Rows where the enumeration found
periods beyond the tabulated classification are marked with a '+'.

Usage:
    python3 scripts/reproduce_tables.py [--budget 2**24] [--cache PATH]
"""

import argparse
import sys
import time

from ducci import Params, PeriodCache, brute_spectrum, max_period, uniform_period
from ducci.checks import (
    TABLE_CORRECTIONS,
    TABLE_EXCEPTIONS,
    TABLE_FOUR_PERIODS,
    TABLE_THREE_PERIODS,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=2**24,
                    help="enumerate rows with at most this many states")
    ap.add_argument("--cache", default="ducci-cache.jsonl")
    args = ap.parse_args()

    cache = PeriodCache(args.cache)
    rows = []
    rows += [(n, m, P, u, None) for n, m, P, u in TABLE_THREE_PERIODS]
    rows += [(n, m, P, u, s) for n, m, P, u, s in TABLE_FOUR_PERIODS]
    rows += [(n, m, P, u, None) for n, m, P, u, _ in TABLE_EXCEPTIONS]
    rows.sort()

    print(f"{'n':>3} {'m':>3} {'P':>10} {'uniform':>8} {'sum':>8}  periods found")
    ok = True
    t0 = time.perf_counter()
    for n, m, P, uni, sum_period in rows:
        params = Params(n, m)
        rec = max_period(params, cache=cache)
        delta = uniform_period(1, params)
        line = f"{n:>3} {m:>3} {rec.P:>10} {delta:>8} "
        line += f"{sum_period:>8}  " if sum_period else f"{'-':>8}  "
        if rec.P != P or delta != uni:
            ok = False
            line += f"MISMATCH (stored P={P}, uniform={uni})"
            print(line)
            continue
        if params.size <= args.budget:
            rep = brute_spectrum(params, state_budget=args.budget, cache=cache)
            hist = " ".join(
                f"{d}:{c}" for d, c in sorted(rep.full_histogram.items())
            )
            mark = " +" if (n, m) in TABLE_CORRECTIONS else ""
            line += hist + mark
        else:
            line += f"(not enumerated: {m}^{n} states)"
        print(line)
    print(f"\n{len(rows)} rows in {time.perf_counter() - t0:.1f}s")
    if TABLE_CORRECTIONS:
        print("+ rows whose enumerated period set exceeds the tabulated one:")
        for (n, m), extras in sorted(TABLE_CORRECTIONS.items()):
            desc = ", ".join(f"period {d} ({cls} class)" for d, cls in extras)
            print(f"    n={n}, m={m}: {desc}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

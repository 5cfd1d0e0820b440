#!/usr/bin/env python3
"""Enumerate all 19 487 171 states of Z_11^7 and confront the result with
the algebraic counts, then report the symmetry groups of the two small
period classes.

This is the package's heaviest built-in computation: the walk labels
every orbit in a few seconds; the fixed-space route recounts every
period class without touching a single orbit; and the stabilizer scan
checks all 5040 entry permutations against the 1330- and 13300-tuple
classes.
"""

import sys
import time

from ducci import Params, brute_spectrum, spectrum_compare, stabilizer


def main() -> int:
    params = Params(7, 11)
    t0 = time.perf_counter()
    rep = brute_spectrum(params)
    t_enum = time.perf_counter() - t0
    print(f"enumerated {params.size} states in {t_enum:.1f}s (P={rep.P}, L={rep.L})")
    print("cycle histogram:")
    for d, c in sorted(rep.cycle_histogram.items()):
        print(f"  {d:>10}: {c}")

    t0 = time.perf_counter()
    cmp = spectrum_compare(params, report=rep)
    print(f"algebraic route agrees on all divisors ({time.perf_counter() - t0:.1f}s)")
    assert cmp.counts == rep.cycle_histogram

    for d in (19, 190):
        t0 = time.perf_counter()
        g = stabilizer(params, d, report=rep)
        print(
            f"stabilizer of the period-{d} class: order {g.order}, "
            f"{'abelian' if g.is_abelian else 'non-abelian'}, "
            f"hint {g.name_hint}, element orders "
            f"{dict(sorted(g.element_order_histogram.items()))} "
            f"({time.perf_counter() - t0:.1f}s)"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())

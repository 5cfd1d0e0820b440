"""Exhaustive orbit decomposition of Z_m^n.

Walks every state once (compiled kernel, O(1) amortised steps per state),
assigns each state the length of the cycle its orbit falls into, and
aggregates:

* full_histogram  — period -> number of tuples entering a cycle of that
  length (the tuple's period in the sense used throughout),
* cycle_histogram — same, restricted to tuples lying on a cycle,
* class_breakdown — per period, how many of those tuples are the zero
  tuple / uniform / sum-condition / other (disjoint, in that priority).

The enumerated cycle histogram is the ground truth that the algebraic
route must reproduce; `spectrum_compare` confronts the two and raises on
any disagreement.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from typing import IO, Iterator

import numpy as np

from . import _kernels
from .classify import TupleClass, classify
from .core import (
    BudgetExceeded,
    EmptyClass,
    Params,
    SpectrumMismatch,
    Tuple,
    tuple_from_index,
)
from .cycles import DEFAULT_STEP_BUDGET, PeriodCache, max_period

DEFAULT_STATE_BUDGET = 2**27
_CHUNK = 2**20

CLASS_NAMES = ("zero", "uniform", "sum", "other")


@dataclass
class SpectrumReport:
    params: Params
    P: int
    L: int
    cycle_histogram: dict[int, int]
    full_histogram: dict[int, int]
    class_breakdown: dict[int, dict[str, int]]
    # raw per-state labels, kept for downstream filtering (symmetry, class
    # listings); indexed by big-endian base-m state index
    status: np.ndarray = field(repr=False)
    period: np.ndarray = field(repr=False)

    def to_json_dict(self) -> dict:
        return {
            "n": self.params.n,
            "m": self.params.m,
            "P": self.P,
            "L": self.L,
            "cycle_histogram": {str(k): v for k, v in sorted(self.cycle_histogram.items())},
            "full_histogram": {str(k): v for k, v in sorted(self.full_histogram.items())},
            "class_breakdown": {
                str(k): dict(v) for k, v in sorted(self.class_breakdown.items())
            },
        }

    def write_json(self, fh: IO[str]) -> None:
        json.dump(self.to_json_dict(), fh, indent=2)
        fh.write("\n")

    def write_csv(self, fh: IO[str]) -> None:
        w = csv.writer(fh)
        w.writerow(["period", "count", "zero", "uniform", "sum", "other"])
        for d in sorted(self.full_histogram):
            bd = self.class_breakdown[d]
            w.writerow([d, self.full_histogram[d]] + [bd[c] for c in CLASS_NAMES])


def index_digits(indices: np.ndarray, params: Params) -> np.ndarray:
    """Decode an array of state indices into an (len, n) digit matrix."""
    n, m = params.n, params.m
    weights = m ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (indices[:, None] // weights) % m


def _class_codes(indices: np.ndarray, digits: np.ndarray, m: int) -> np.ndarray:
    """0 zero, 1 uniform, 2 sum-condition, 3 other; disjoint by priority."""
    codes = np.full(indices.shape, 3, dtype=np.int64)
    sum_mask = digits.sum(axis=1) % m == 0
    codes[sum_mask] = 2
    uniform_mask = (digits == digits[:, :1]).all(axis=1)
    codes[uniform_mask & (indices != 0)] = 1
    codes[indices == 0] = 0
    return codes


def brute_spectrum(
    params: Params,
    state_budget: int = DEFAULT_STATE_BUDGET,
    step_budget: int = DEFAULT_STEP_BUDGET,
    cache: PeriodCache | None = None,
) -> SpectrumReport:
    """Enumerate all m^n states and tabulate periods and classes.

    Raises BudgetExceeded when m^n exceeds state_budget (the walk keeps
    17 bytes of bookkeeping per state, so the default 2^27 needs ~2 GB).
    """
    n, m = params.n, params.m
    total = params.size
    if total > state_budget:
        raise BudgetExceeded(
            f"{m}^{n} = {total} states exceeds the budget of {state_budget}"
        )
    status, period = _kernels.orbit_walk(n, m, total)

    pvals, pcounts = np.unique(period, return_counts=True)
    full_histogram = {int(p): int(c) for p, c in zip(pvals, pcounts)}
    cvals, ccounts = np.unique(period[status == 3], return_counts=True)
    cycle_histogram = {int(p): int(c) for p, c in zip(cvals, ccounts)}

    # class pass, chunked so the digit matrix stays small
    nper = len(pvals)
    acc = np.zeros(nper * 4, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        end = min(start + _CHUNK, total)
        idx = np.arange(start, end, dtype=np.int64)
        digits = index_digits(idx, params)
        codes = _class_codes(idx, digits, m)
        pcode = np.searchsorted(pvals, period[start:end])
        acc += np.bincount(pcode * 4 + codes, minlength=nper * 4)
    class_breakdown = {
        int(p): {c: int(acc[i * 4 + j]) for j, c in enumerate(CLASS_NAMES)}
        for i, p in enumerate(pvals)
    }

    rec = max_period(params, budget=step_budget, cache=cache)
    top = int(pvals.max())
    if rec.P != top:
        # the reference orbit must realise the lcm of all periods; if it
        # does not, one of the two engines is broken
        raise AssertionError(
            f"max_period says P={rec.P} but enumeration found {top}"
        )
    return SpectrumReport(
        params=params,
        P=rec.P,
        L=rec.L,
        cycle_histogram=cycle_histogram,
        full_histogram=full_histogram,
        class_breakdown=class_breakdown,
        status=status,
        period=period,
    )


@dataclass(frozen=True)
class ComparisonReport:
    """Outcome of a brute vs algebraic cross-check (only produced when
    the two agree on every divisor)."""

    params: Params
    P: int
    counts: dict[int, int]  # agreed exact-period counts, nonzero entries

    def to_json_dict(self) -> dict:
        return {
            "n": self.params.n,
            "m": self.params.m,
            "P": self.P,
            "match": True,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
        }


def spectrum_compare(
    params: Params,
    state_budget: int = DEFAULT_STATE_BUDGET,
    step_budget: int = DEFAULT_STEP_BUDGET,
    cache: PeriodCache | None = None,
    report: SpectrumReport | None = None,
) -> ComparisonReport:
    """Run both routes and insist they agree.

    The enumerated cycle histogram and the Möbius-inverted fixed-space
    counts are computed independently; any divisor where they differ
    raises SpectrumMismatch carrying a witness (the divisor, both counts,
    and an example tuple of that enumerated period if one exists).
    Requires prime m for the algebraic side.
    """
    from .fixed_space import algebraic_spectrum

    if report is None:
        report = brute_spectrum(
            params, state_budget=state_budget, step_budget=step_budget, cache=cache
        )
    alg = algebraic_spectrum(params, report.P)
    mismatches = []
    for d in sorted(alg.counts):
        want = alg.counts[d]
        got = report.cycle_histogram.get(d, 0)
        if want != got:
            mismatches.append((d, want, got))
    stray = [d for d in report.cycle_histogram if d not in alg.counts]
    for d in sorted(stray):
        mismatches.append((d, 0, report.cycle_histogram[d]))
    if mismatches:
        d, want, got = mismatches[0]
        where = np.nonzero(report.period == d)[0]
        example = (
            tuple_from_index(int(where[0]), params).entries if len(where) else None
        )
        raise SpectrumMismatch(
            f"Z_{params.m}^{params.n}: divisor {d}: algebraic count {want} "
            f"vs enumerated {got} (example tuple: {example})",
            witness={"d": d, "algebraic": want, "enumerated": got, "tuple": example},
        )
    return ComparisonReport(
        params=params, P=report.P, counts=alg.nonzero_counts()
    )


def class_filter(
    params: Params,
    period: int,
    report: SpectrumReport | None = None,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> Iterator[tuple[Tuple, TupleClass]]:
    """Yield every tuple of the given exact period with its class flags,
    in increasing state-index order.  Raises EmptyClass if the period
    does not occur."""
    if report is None:
        report = brute_spectrum(params, state_budget=state_budget)
    if period not in report.full_histogram:
        raise EmptyClass(
            f"no tuple in Z_{params.m}^{params.n} has period {period}"
        )
    for idx in np.nonzero(report.period == period)[0]:
        u = tuple_from_index(int(idx), params)
        yield u, classify(u)

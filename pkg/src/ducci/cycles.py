"""Tail and cycle lengths of individual orbits.

`find_cycle` locates the eventual cycle of one tuple with Brent's
algorithm in O(n) memory.  `max_period` does this for the reference tuple
(0, ..., 0, 1), whose cycle length P is a multiple of every period in the
space and whose tail length L bounds every tail; results are memoised in a
small JSONL cache because P can take tens of millions of steps to find.
`exact_period_of_fixed` sharpens "period divides d" into the exact period
by testing divisors of d with the ring shortcut.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

import numpy as np
import sympy

from . import _kernels
from .core import BudgetExceeded, NotFixed, Params, Tuple, ducci_apply, ducci_step

DEFAULT_STEP_BUDGET = 2**28


@dataclass(frozen=True)
class CycleInfo:
    """Tail length and cycle length of one orbit."""

    len: int  # steps before the orbit first enters its cycle
    per: int  # length of the cycle it enters


@dataclass(frozen=True)
class MaxPeriodRecord:
    """Space-wide bounds: every tuple in Z_m^n has period dividing P and
    reaches its cycle within L steps."""

    n: int
    m: int
    L: int
    P: int


class PeriodCache:
    """Append-only JSONL store of MaxPeriodRecords, keyed by (n, m).

    Each line is ``{"n": ..., "m": ..., "L": ..., "P": ...}``.  Unreadable
    lines are skipped rather than fatal so a truncated final line (e.g.
    from an interrupted run) does not poison the cache.
    """

    DEFAULT_PATH = "ducci-cache.jsonl"

    def __init__(self, path: str | os.PathLike = DEFAULT_PATH):
        self.path = os.fspath(path)
        self._records: dict[tuple[int, int], MaxPeriodRecord] = {}
        self._loaded = False

    def _load(self) -> None:
        if self._loaded:
            return
        self._loaded = True
        if not os.path.exists(self.path):
            return
        with open(self.path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                    rec = MaxPeriodRecord(
                        int(obj["n"]), int(obj["m"]), int(obj["L"]), int(obj["P"])
                    )
                except (ValueError, KeyError, TypeError):
                    continue
                self._records[(rec.n, rec.m)] = rec

    def get(self, n: int, m: int) -> MaxPeriodRecord | None:
        self._load()
        return self._records.get((n, m))

    def put(self, rec: MaxPeriodRecord) -> None:
        self._load()
        if (rec.n, rec.m) in self._records:
            return
        self._records[(rec.n, rec.m)] = rec
        line = json.dumps({"n": rec.n, "m": rec.m, "L": rec.L, "P": rec.P})
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")


def _find_cycle_python(u: Tuple, budget: int) -> CycleInfo:
    # Brent again, on plain tuples; only used when m is too large for the
    # int64 kernel.
    step = ducci_step
    power = lam = 1
    tortoise = u
    hare = step(u)
    steps = 1
    limit = 3 * budget + 64
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power <<= 1
            lam = 0
        hare = step(hare)
        lam += 1
        steps += 1
        if steps > limit:
            raise BudgetExceeded(f"no cycle within {budget} steps")
    tortoise = u
    hare = ducci_apply(u, lam)
    mu = 0
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(hare)
        mu += 1
    if mu + lam > budget:
        raise BudgetExceeded(f"tail+cycle exceeds {budget} steps")
    return CycleInfo(len=mu, per=lam)


def find_cycle(u: Tuple, budget: int = DEFAULT_STEP_BUDGET) -> CycleInfo:
    """Tail and cycle length of the orbit of u.

    Raises BudgetExceeded if tail + cycle cannot be confirmed within
    `budget` map applications (the search itself may use about 3x that).
    """
    m = u.params.m
    if m > _kernels.KERNEL_MAX_M:
        return _find_cycle_python(u, budget)
    x0 = np.array(u.entries, dtype=np.int64)
    mu, lam = _kernels.brent_cycle(x0, m, budget)
    if lam < 0:
        raise BudgetExceeded(
            f"orbit of {u.entries} in Z_{m}^{u.params.n} has no cycle "
            f"within {budget} steps"
        )
    return CycleInfo(len=int(mu), per=int(lam))


def max_period(
    params: Params,
    budget: int = DEFAULT_STEP_BUDGET,
    cache: PeriodCache | None = None,
) -> MaxPeriodRecord:
    """L and P for the whole space Z_m^n, via the orbit of (0, ..., 0, 1).

    The cycle length of that single orbit is the lcm of all periods in the
    space, and its tail is the longest tail.  If `cache` is given, hits are
    returned without recomputation and new results are appended.
    """
    if cache is not None:
        hit = cache.get(params.n, params.m)
        if hit is not None:
            return hit
    info = find_cycle(params.basic(), budget=budget)
    rec = MaxPeriodRecord(n=params.n, m=params.m, L=info.len, P=info.per)
    if cache is not None:
        cache.put(rec)
    return rec


def exact_period_of_fixed(u: Tuple, multiple: int) -> int:
    """Exact period of a tuple known to satisfy D^multiple(u) = u.

    Tests divisors of `multiple` in increasing order with the ring
    shortcut; the first that maps u to itself is the period.  Raises
    NotFixed if even `multiple` steps do not return to u (i.e. the
    precondition was wrong or u is not yet on its cycle).
    """
    if multiple < 1:
        raise ValueError("multiple must be >= 1")
    for d in sympy.divisors(multiple):
        if ducci_apply(u, d) == u:
            return d
    raise NotFixed(
        f"{u.entries} is not fixed by {multiple} steps; it either has a "
        f"nontrivial tail or its period does not divide {multiple}"
    )


def multiplicative_order(a: int, modulus: int) -> int:
    """Least k >= 1 with a^k = 1 mod `modulus`; requires gcd(a, modulus) = 1."""
    if modulus == 1:
        return 1
    return int(sympy.n_order(a, modulus))

"""Membership tests for the special tuple classes and their closed-form
periods.

Three classes of tuples have periods that can be written down without
iterating the map:

* the zero tuple (period 1),
* uniform tuples (x, ..., x) with x != 0, whose orbit is x * 2^k and whose
  period is a multiplicative order of 2,
* for n = 3, tuples whose entries sum to 0 mod m, which always lie on a
  cycle of length 1, 3 or 6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import NotApplicable, Params, Tuple
from .cycles import multiplicative_order


@dataclass(frozen=True)
class TupleClass:
    """Class membership flags for one tuple.

    block_lengths lists the proper divisors n1 of n such that the tuple is
    its own first n1 entries repeated n/n1 times; such tuples inherit their
    period from the shorter tuple in Z_m^{n1}.
    """

    is_zero: bool
    is_uniform: bool
    satisfies_sum: bool
    block_lengths: tuple[int, ...]


def classify(u: Tuple) -> TupleClass:
    e = u.entries
    n, m = u.params.n, u.params.m
    is_zero = all(x == 0 for x in e)
    is_uniform = (not is_zero) and all(x == e[0] for x in e)
    satisfies_sum = sum(e) % m == 0
    blocks = []
    for n1 in range(1, n):
        if n % n1 != 0:
            continue
        if all(e[i] == e[i % n1] for i in range(n)):
            blocks.append(n1)
    return TupleClass(
        is_zero=is_zero,
        is_uniform=is_uniform,
        satisfies_sum=satisfies_sum,
        block_lengths=tuple(blocks),
    )


def uniform_period(x: int, params: Params) -> int | None:
    """Period of the uniform tuple (x, ..., x), or None if its orbit ends
    at the zero tuple.

    Write m = 2^l * m1 with m1 odd.  The orbit is x * 2^k, so it vanishes
    iff m1 | x, and otherwise its eventual period is the multiplicative
    order of 2 mod m1/gcd(x, m1).  (When gcd(x, m1) = 1 — in particular
    whenever m is prime — this is just the order of 2 mod m1.)  The result
    does not depend on n.
    """
    m = params.m
    if not 0 < x < m:
        raise ValueError(f"x must be a nonzero residue, got {x} mod {m}")
    m1 = m
    while m1 % 2 == 0:
        m1 //= 2
    if m1 == 1 or x % m1 == 0:
        return None
    return multiplicative_order(2, m1 // math.gcd(x, m1))


def sum_triple_period(u: Tuple) -> int:
    """Period of a length-3 tuple whose entries sum to 0 mod m.

    Such tuples always lie on their own cycle, of length 1 (the zero
    tuple), 3 (m even, entries in {0, m/2}, not all equal) or 6 (all
    others).  Raises NotApplicable when n != 3, when the entries do not
    sum to 0, or when all entries are equal and nonzero — the latter are
    uniform tuples and are covered by uniform_period instead.
    """
    n, m = u.params.n, u.params.m
    if n != 3:
        raise NotApplicable(f"closed form only covers n=3, got n={n}")
    e = u.entries
    if sum(e) % m != 0:
        raise NotApplicable(f"{e} does not sum to 0 mod {m}")
    if e[0] == e[1] == e[2]:
        if e[0] == 0:
            return 1
        raise NotApplicable(
            "all entries equal: use uniform_period for (x, x, x)"
        )
    if m % 2 == 0:
        half = m // 2
        if all(x == 0 or x == half for x in e):
            return 3
    return 6

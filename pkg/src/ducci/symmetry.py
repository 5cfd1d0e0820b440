"""Entry-permutation symmetries of a period class.

For an exact period d, let J be the set of permutations of the n entries
that map {u : Per(u) = d} onto itself.  J is a subgroup of S_n: it always
contains the cyclic rotation (the map commutes with it), and whatever
else it contains says something about the shape of the class.  We find J
by brute scan over all n! permutations against an index of the class,
explicitly verify the subgroup axioms, and then try to recognise the
group from cheap invariants (order, element orders, abelianness).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .core import DucciError, EmptyClass, Params
from .spectrum import (
    DEFAULT_STATE_BUDGET,
    SpectrumReport,
    brute_spectrum,
    index_digits,
)

Perm = tuple[int, ...]

MAX_N = 8  # 8! = 40320 permutations; brute-force membership stays cheap up to here


@dataclass(frozen=True)
class GroupReport:
    """What we can say about the stabilizer without a full isomorphism
    test: its order, a small generating set (greedily extracted, not
    guaranteed minimal), the multiset of element orders, and a name hint
    when those invariants pin the group down."""

    order: int
    generators: tuple[Perm, ...]
    element_order_histogram: dict[int, int]
    is_abelian: bool
    contains_n_cycle: bool
    name_hint: str

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "generators": [list(g) for g in self.generators],
            "element_orders": {
                str(k): v for k, v in sorted(self.element_order_histogram.items())
            },
            "name_hint": self.name_hint,
        }


def _compose(a: Perm, b: Perm) -> Perm:
    # apply a first, then b, in the "new[i] = old[p[i]]" action
    return tuple(b[a[i]] for i in range(len(a)))


def _inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, ai in enumerate(a):
        inv[ai] = i
    return tuple(inv)


def _perm_order_and_type(p: Perm) -> tuple[int, list[int]]:
    seen = [False] * len(p)
    lens = []
    for s in range(len(p)):
        if seen[s]:
            continue
        ln = 0
        i = s
        while not seen[i]:
            seen[i] = True
            i = p[i]
            ln += 1
        lens.append(ln)
    return math.lcm(*lens), lens


def _verify_subgroup(perms: list[Perm], n: int) -> None:
    """Explicit closure and inverse check; cheap for the group sizes that
    actually occur, and skippable only when J is all of S_n."""
    if len(perms) == math.factorial(n):
        return  # the full symmetric group is a group
    arr = np.array(perms, dtype=np.int64)
    weights = np.int64(n) ** np.arange(n, dtype=np.int64)
    codes = arr @ weights
    order = np.argsort(codes)
    sorted_codes = codes[order]

    def member(mat: np.ndarray) -> bool:
        c = mat @ weights
        pos = np.searchsorted(sorted_codes, c)
        pos = np.minimum(pos, len(sorted_codes) - 1)
        return bool((sorted_codes[pos] == c).all())

    if not member(np.argsort(arr, axis=1)):  # rowwise inverses
        raise DucciError("stabilizer scan produced a set not closed under inverse")
    for a in perms:
        # compose(a, b) for all b at once: row b becomes b[a]
        if not member(arr[:, list(a)]):
            raise DucciError(
                "stabilizer scan produced a set not closed under composition"
            )


def _greedy_generators(perms: list[Perm], n: int) -> tuple[Perm, ...]:
    identity = tuple(range(n))
    target = set(perms)
    gens: list[Perm] = []
    generated = {identity}
    for g in perms:
        if g in generated:
            continue
        gens.append(g)
        frontier = list(generated) + [g]
        generated.add(g)
        while frontier:
            nxt = []
            for a in frontier:
                for h in gens:
                    c = _compose(a, h)
                    if c not in generated:
                        generated.add(c)
                        nxt.append(c)
            frontier = nxt
        if len(generated) == len(target):
            break
    return tuple(gens)


def identify_small_group(
    order: int, element_order_histogram: dict[int, int], is_abelian: bool
) -> str:
    """Best-effort name from invariants, for orders <= 42.  Only returns a
    name when the invariants determine the group up to isomorphism at
    that order; otherwise "unknown".  This is a hint, not a certificate.
    """
    if order == 1:
        return "trivial"
    if is_abelian:
        if element_order_histogram.get(order, 0) > 0:
            return f"C{order}"
        if all(k <= 2 for k in element_order_histogram):
            k = order.bit_length() - 1
            if order == 2**k:
                return f"(C2)^{k}"
        return "unknown"
    # non-abelian cases that are unique for their order
    def _factor(x):
        fs = []
        d = 2
        while d * d <= x:
            while x % d == 0:
                fs.append(d)
                x //= d
            d += 1
        if x > 1:
            fs.append(x)
        return fs

    fs = _factor(order)
    if len(fs) == 2:
        p, q = fs
        if p == 2 and q > 2:
            # only one non-abelian group of order 2q for odd prime q
            return f"D{order}"
        if p != q and (q - 1) % p == 0:
            # unique non-abelian group of order p*q (p < q, p | q-1)
            return f"Frobenius{order}"
    return "unknown"


def stabilizer(
    params: Params,
    period: int,
    report: SpectrumReport | None = None,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> GroupReport:
    """The subgroup J of S_n preserving the exact-period-`period` class.

    Scans all n! permutations (hence the n <= 8 limit) against a sorted
    index of the class; a permutation is kept iff it maps every class
    member into the class (a bijection of a finite set into itself is
    onto it).  The resulting set is then verified to be a subgroup rather
    than assumed to be one.
    """
    n, m = params.n, params.m
    if n > MAX_N:
        raise DucciError(f"stabilizer scan is limited to n <= {MAX_N}, got {n}")
    if report is None:
        report = brute_spectrum(params, state_budget=state_budget)
    indices = np.nonzero(report.period == period)[0].astype(np.int64)
    if len(indices) == 0:
        raise EmptyClass(
            f"no tuple in Z_{m}^{n} has period {period}"
        )
    digits = index_digits(indices, params)
    weights = m ** np.arange(n - 1, -1, -1, dtype=np.int64)
    k = len(indices)

    members: list[Perm] = []
    for p in permutations(range(n)):
        mapped = digits[:, p] @ weights
        pos = np.searchsorted(indices, mapped)
        pos = np.minimum(pos, k - 1)
        if (indices[pos] == mapped).all():
            members.append(p)

    _verify_subgroup(members, n)

    hist: dict[int, int] = {}
    contains_n_cycle = False
    for p in members:
        o, ctype = _perm_order_and_type(p)
        hist[o] = hist.get(o, 0) + 1
        if ctype == [n]:
            contains_n_cycle = True

    gens = _greedy_generators(members, n)
    is_abelian = all(
        _compose(a, b) == _compose(b, a) for a in gens for b in gens
    )
    order = len(members)
    if order == math.factorial(n):
        hint = f"S{n}"
    elif order <= 42:
        hint = identify_small_group(order, hist, is_abelian)
    else:
        hint = "unknown"
    return GroupReport(
        order=order,
        generators=gens,
        element_order_histogram=hist,
        is_abelian=is_abelian,
        contains_n_cycle=contains_n_cycle,
        name_hint=hint,
    )

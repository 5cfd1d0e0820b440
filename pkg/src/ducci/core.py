"""Core types and arithmetic for the Ducci map on Z_m^n.

The map sends (x_1, ..., x_n) to (x_1+x_2, x_2+x_3, ..., x_n+x_1) with all
sums reduced mod m.  Everything else in the package is built on three facts
about this map:

* it is linear over Z_m,
* it commutes with the cyclic left rotation of coordinates,
* under the usual identification of Z_m^n with the ring Z_m[y]/(y^n - 1)
  (tuple u encoded as u_1 + u_2*y + ... + u_n*y^{n-1}), applying the map
  once is multiplication by g = 1 + y^{n-1} = y^{n-1} * (1 + y).

The last point lets us jump ahead k steps in O(n^2 log k) time instead of
O(n k), and reduces period questions to questions about powers of (1 + y).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


class DucciError(Exception):
    """Base class for errors raised by this package."""


class BudgetExceeded(DucciError):
    """A step or state budget ran out before the computation finished."""


class NotFixed(DucciError):
    """A tuple claimed to be periodic with period dividing d is not."""


class CompositeModulus(DucciError):
    """An operation requiring a prime modulus was given a composite one."""


class SpectrumMismatch(DucciError):
    """Enumerated and algebraic period counts disagree; carries a witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class EmptyClass(DucciError):
    """No tuple in the space has the requested exact period."""


class NotApplicable(DucciError):
    """The hypothesis of a closed-form result does not hold for this input."""


@dataclass(frozen=True)
class Params:
    """Ambient space Z_m^n: tuple length n >= 2 and modulus m >= 2."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"tuple length must be >= 2, got n={self.n}")
        if self.m < 2:
            raise ValueError(f"modulus must be >= 2, got m={self.m}")

    @property
    def size(self) -> int:
        """Number of tuples in the space, m**n."""
        return self.m**self.n

    def tuple(self, entries: Sequence[int]) -> "Tuple":
        """Build a Tuple in this space, reducing entries mod m."""
        return Tuple(tuple(e % self.m for e in entries), self)

    def basic(self) -> "Tuple":
        """The reference tuple (0, ..., 0, 1) whose orbit realises the
        maximal cycle length of the whole space."""
        return Tuple((0,) * (self.n - 1) + (1,), self)

    def zero(self) -> "Tuple":
        return Tuple((0,) * self.n, self)


@dataclass(frozen=True)
class Tuple:
    """An element of Z_m^n.  Entries are canonical residues in [0, m)."""

    entries: tuple[int, ...]
    params: Params

    def __post_init__(self):
        n, m = self.params.n, self.params.m
        if len(self.entries) != n:
            raise ValueError(
                f"expected {n} entries, got {len(self.entries)}"
            )
        for e in self.entries:
            if not (0 <= e < m):
                raise ValueError(f"entry {e} out of range for modulus {m}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def index(self) -> int:
        """Rank of this tuple in the big-endian base-m order: the first
        entry is the most significant digit.  Inverse of
        :func:`tuple_from_index`."""
        s = 0
        for e in self.entries:
            s = s * self.params.m + e
        return s


def tuple_from_index(idx: int, params: Params) -> Tuple:
    """Decode a state index (big-endian base-m) back into a Tuple."""
    if not (0 <= idx < params.size):
        raise ValueError(f"index {idx} out of range for {params}")
    digits = []
    for _ in range(params.n):
        digits.append(idx % params.m)
        idx //= params.m
    return Tuple(tuple(reversed(digits)), params)


def ducci_step(u: Tuple) -> Tuple:
    """One application of the map: pairwise sums of cyclically adjacent
    entries, reduced mod m."""
    e, m = u.entries, u.params.m
    n = len(e)
    return Tuple(
        tuple((e[i] + e[(i + 1) % n]) % m for i in range(n)), u.params
    )


def rotate(u: Tuple) -> Tuple:
    """Cyclic left rotation: (x_1, ..., x_n) -> (x_2, ..., x_n, x_1)."""
    e = u.entries
    return Tuple(e[1:] + (e[0],), u.params)


def iterate(u: Tuple, k: int) -> Tuple:
    """Apply the map k times by direct stepping (no ring shortcut)."""
    for _ in range(k):
        u = ducci_step(u)
    return u


# ---------------------------------------------------------------------------
# Ring Z_m[y] / (y^n - 1)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RingElement:
    """Element of Z_m[y]/(y^n - 1), stored as n coefficients
    (constant term first)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("ring elements need at least 2 coefficients")


def to_ring(u: Tuple) -> RingElement:
    """Encode a tuple as a polynomial: u_1 + u_2*y + ... + u_n*y^{n-1}."""
    return RingElement(u.entries)


def from_ring(p: RingElement, params: Params) -> Tuple:
    return params.tuple(p.coeffs)


def ring_mul(p: RingElement, q: RingElement, m: int) -> RingElement:
    """Product in Z_m[y]/(y^n - 1): cyclic convolution of coefficients."""
    a, b = p.coeffs, q.coeffs
    n = len(a)
    if len(b) != n:
        raise ValueError("ring elements have mismatched lengths")
    out = [0] * n
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            k = i + j
            if k >= n:
                k -= n
            out[k] = (out[k] + ai * bj) % m
    return RingElement(tuple(out))


def ring_one(n: int) -> RingElement:
    return RingElement((1,) + (0,) * (n - 1))


def ring_pow(p: RingElement, e: int, m: int) -> RingElement:
    """p**e by binary exponentiation.  e must be >= 0."""
    if e < 0:
        raise ValueError("negative exponents are not defined here")
    acc = ring_one(len(p.coeffs))
    base = p
    while e:
        if e & 1:
            acc = ring_mul(acc, base, m)
        base = ring_mul(base, base, m)
        e >>= 1
    return acc


def step_multiplier(params: Params) -> RingElement:
    """The ring element g = 1 + y^{n-1} that realises one application of
    the map.  Note g = y^{n-1} * (1 + y), and y is a unit, so the orbit
    structure of the map is governed by powers of (1 + y)."""
    n = params.n
    if n == 2:
        # 1 + y^1, and the two terms coincide with (1 + y) itself
        return RingElement((1, 1))
    c = [0] * n
    c[0] = 1
    c[n - 1] = 1
    return RingElement(tuple(c))


def coeff_row(d: int, params: Params) -> tuple[int, ...]:
    """Coefficients of (1 + y)^d in Z_m[y]/(y^n - 1), constant term first.

    Entry s (0-based) is the sum of binomial(d, t) over all t congruent to
    s mod n, reduced mod m.  These rows are the building blocks of both
    the d-step jump map and the linear systems for period-d tuples.
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    one_plus_y = RingElement((1, 1) + (0,) * (params.n - 2))
    return ring_pow(one_plus_y, d, params.m).coeffs


def ducci_apply(u: Tuple, k: int) -> Tuple:
    """Apply the map k times via the ring: multiply the encoding of u by
    g^k.  Equivalent to k single steps but costs O(n^2 log k)."""
    if k < 0:
        raise ValueError("cannot step backwards in general")
    if k == 0:
        return u
    g = step_multiplier(u.params)
    gk = ring_pow(g, k, u.params.m)
    return from_ring(ring_mul(to_ring(u), gk, u.params.m), u.params)

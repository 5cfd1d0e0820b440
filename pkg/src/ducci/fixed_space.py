"""Algebraic period counting via fixed spaces of D^d.

For a divisor d of the maximal period P, the tuples with D^d(u) = u form
the nullspace of a circulant-minus-identity matrix over Z_m, built from
the coefficient row of (1 + y)^d.  Over prime m the nullspace dimension
f(d) gives |fix(d)| = m^f(d), and the number of tuples whose period is
*exactly* d follows by Möbius inversion over the divisor lattice:

    N(d) = sum over d' | d of mu(d/d') * m^f(d').

Summed over all divisors of P this recovers the total number of cycle
tuples, so the result can be checked head-on against exhaustive
enumeration.

Also here: exact integer determinants (fraction-free Bareiss) and the
family of +-1 band matrices whose nonsingularity underpins the period
classification for n = m prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import sympy

from .classify import classify
from .core import CompositeModulus, Params, Tuple

# enumerate and classify nullspace solutions only up to this many
DEFAULT_CLASS_CAP = 2**18

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CirculantSystem:
    """The linear system D^d(u) = u over Z_m, as (A - I) with A circulant."""

    d: int
    params: Params
    matrix: Matrix


@dataclass(frozen=True)
class FixedSpace:
    """Nullspace of a CirculantSystem over prime m.

    basis is in reduced echelon form with one vector per free column, in
    increasing column order, so it is deterministic.  classes counts the
    solutions by kind (zero / uniform / sum-condition / other, in that
    priority order) when the solution count m^dimension is small enough
    to enumerate; otherwise it is None.
    """

    d: int
    dimension: int
    basis: tuple[Tuple, ...]
    classes: dict[str, int] | None


@dataclass(frozen=True)
class SpectrumAlgebraic:
    """Exact-period counts for every divisor of P, from fixed-space sizes."""

    params: Params
    P: int
    spaces: dict[int, FixedSpace]
    counts: dict[int, int]

    def nonzero_counts(self) -> dict[int, int]:
        return {d: c for d, c in self.counts.items() if c != 0}

    def to_report_dict(self) -> dict:
        return {
            "n": self.params.n,
            "m": self.params.m,
            "P": self.P,
            "divisors": [
                {
                    "d": d,
                    "dimension": self.spaces[d].dimension,
                    "exact_count": self.counts[d],
                    "classes": self.spaces[d].classes,
                }
                for d in sorted(self.spaces)
            ],
        }


def build_system(d: int, params: Params) -> CirculantSystem:
    """Matrix of the condition D^d(u) = u, i.e. (A - I) with A the
    circulant whose row i is the coefficient row of (1+y)^d shifted i
    places right.  Row i of the system reads
    row[0]*x_i + row[1]*x_{i+1} + ... = x_i (indices cyclic)."""
    from .core import coeff_row

    n, m = params.n, params.m
    row = coeff_row(d, params)
    mat = tuple(
        tuple((row[(j - i) % n] - (1 if i == j else 0)) % m for j in range(n))
        for i in range(n)
    )
    return CirculantSystem(d=d, params=params, matrix=mat)


def _rref_mod_p(matrix: Matrix, p: int) -> tuple[list[list[int]], list[int]]:
    """Row-reduce mod prime p; returns (rref rows, pivot column list)."""
    rows = [list(r) for r in matrix]
    nrows, ncols = len(rows), len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c] % p != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] % p != 0:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def nullspace(
    sys: CirculantSystem, class_cap: int = DEFAULT_CLASS_CAP
) -> FixedSpace:
    """Nullspace of the system over Z_m; m must be prime.

    Raises CompositeModulus otherwise — elimination over Z_m with zero
    divisors would silently produce wrong dimensions.
    """
    params = sys.params
    n, m = params.n, params.m
    if not sympy.isprime(m):
        raise CompositeModulus(
            f"nullspace over Z_{m} needs a prime modulus"
        )
    rows, pivots = _rref_mod_p(sys.matrix, m)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-rows[r][fc]) % m
        basis.append(params.tuple(vec))
    dim = len(free)
    classes = None
    if m**dim <= class_cap:
        classes = {"zero": 0, "uniform": 0, "sum": 0, "other": 0}
        for combo in product(range(m), repeat=dim):
            sol = [0] * n
            for coef, b in zip(combo, basis):
                if coef:
                    for i, e in enumerate(b.entries):
                        sol[i] = (sol[i] + coef * e) % m
            c = classify(params.tuple(sol))
            if c.is_zero:
                classes["zero"] += 1
            elif c.is_uniform:
                classes["uniform"] += 1
            elif c.satisfies_sum:
                classes["sum"] += 1
            else:
                classes["other"] += 1
    return FixedSpace(d=sys.d, dimension=dim, basis=tuple(basis), classes=classes)


def _mobius(k: int) -> int:
    f = sympy.factorint(k)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def algebraic_spectrum(
    params: Params, P: int, class_cap: int = DEFAULT_CLASS_CAP
) -> SpectrumAlgebraic:
    """Exact-period counts N(d) for all divisors d of P, without touching
    individual orbits: nullspace dimensions f(d) plus Möbius inversion.

    Requires prime m.  The counts cover cycle tuples only (a tuple with
    D^d(u) = u is necessarily on a cycle), so they are comparable with
    the cycle histogram of the enumerator even when tails exist.
    """
    divisors = sympy.divisors(P)
    spaces: dict[int, FixedSpace] = {}
    for d in divisors:
        spaces[d] = nullspace(build_system(d, params), class_cap=class_cap)
    m = params.m
    counts: dict[int, int] = {}
    for d in divisors:
        total = 0
        for dp in sympy.divisors(d):
            mu = _mobius(d // dp)
            if mu:
                total += mu * m ** spaces[dp].dimension
        counts[d] = total
    return SpectrumAlgebraic(params=params, P=P, spaces=spaces, counts=counts)


def pattern_matrix(j: int) -> Matrix:
    """The j x j integer band matrix with -1 on the diagonal, 0 on the
    first subdiagonal, and alternating +-1 elsewhere: row i continues
    +1, -1, ... to the right of the diagonal, and below the subdiagonal
    column k carries (-1)^(i-k).

    Removing the first row and column yields the (j-1)-pattern, which is
    what makes the determinant computable by induction; it is +1 for even
    j and -1 for odd j.
    """
    if j < 2:
        raise ValueError("pattern needs j >= 2")
    mat = []
    for i in range(j):
        row = []
        for k in range(j):
            if k == i - 1:
                row.append(0)
            elif k >= i:
                row.append(-1 if (k - i) % 2 == 0 else 1)
            else:  # k <= i - 2
                row.append(1 if (i - k) % 2 == 0 else -1)
        mat.append(tuple(row))
    return tuple(mat)


def int_determinant(matrix) -> int:
    """Exact determinant of an integer matrix by fraction-free Bareiss
    elimination: all intermediate quantities are integers and every
    division is exact, so there is no precision loss ever."""
    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]

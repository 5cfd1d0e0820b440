"""Compiled inner loops.  Everything here works on int64 state and assumes
m < 2**31 so that entry sums never overflow; callers enforce that bound and
fall back to pure Python otherwise.
"""

import numpy as np
from numba import njit

# sums of two residues must fit in int64 with room to spare
KERNEL_MAX_M = 2**31 - 1


@njit(cache=True, nogil=True)
def _step_inplace(x, m):
    n = x.size
    first = x[0]
    for i in range(n - 1):
        s = x[i] + x[i + 1]
        if s >= m:
            s -= m
        x[i] = s
    s = x[n - 1] + first
    if s >= m:
        s -= m
    x[n - 1] = s


@njit(cache=True, nogil=True)
def _equal(a, b):
    for i in range(a.size):
        if a[i] != b[i]:
            return False
    return True


@njit(cache=True, nogil=True)
def brent_cycle(x0, m, budget):
    """Brent's algorithm: returns (tail length, cycle length) of the orbit
    of x0, or (-1, -1) if tail + cycle would exceed budget steps.

    Memory is O(n); the number of map applications is at most about
    3 * (tail + cycle).
    """
    power = np.int64(1)
    lam = np.int64(1)
    tortoise = x0.copy()
    hare = x0.copy()
    _step_inplace(hare, m)
    steps = np.int64(1)
    limit = 3 * budget + 64
    while not _equal(tortoise, hare):
        if power == lam:
            tortoise[:] = hare
            power <<= 1
            lam = 0
        _step_inplace(hare, m)
        lam += 1
        steps += 1
        if steps > limit:
            return np.int64(-1), np.int64(-1)
    # lam is the cycle length; rewind to find where the tail ends
    tortoise[:] = x0
    hare[:] = x0
    for _ in range(lam):
        _step_inplace(hare, m)
    mu = np.int64(0)
    while not _equal(tortoise, hare):
        _step_inplace(tortoise, m)
        _step_inplace(hare, m)
        mu += 1
    if mu + lam > budget:
        return np.int64(-1), np.int64(-1)
    return mu, lam


@njit(cache=True, nogil=True)
def orbit_walk(n, m, total):
    """Visit every state of Z_m^n once and label it with its eventual cycle
    length.

    Returns (status, period) arrays indexed by big-endian base-m state
    index.  status: 2 = leads into a cycle, 3 = lies on a cycle.  period:
    length of the cycle the state feeds into.  Each state is stepped O(1)
    times amortised; memory is 9 bytes per state plus a walk stack.
    """
    status = np.zeros(total, dtype=np.uint8)  # 0 unseen, 1 on current walk
    period = np.zeros(total, dtype=np.int64)
    stack = np.empty(total, dtype=np.int64)
    odo = np.zeros(n, dtype=np.int64)  # digits of s0, maintained odometer-style
    cur = np.empty(n, dtype=np.int64)

    for s0 in range(total):
        if status[s0] == 0:
            cur[:] = odo
            s = s0
            top = 0
            while status[s] == 0:
                status[s] = 1
                stack[top] = s
                top += 1
                first = cur[0]
                for i in range(n - 1):
                    v = cur[i] + cur[i + 1]
                    if v >= m:
                        v -= m
                    cur[i] = v
                v = cur[n - 1] + first
                if v >= m:
                    v -= m
                cur[n - 1] = v
                s = 0
                for i in range(n):
                    s = s * m + cur[i]
            if status[s] == 1:
                # closed a new cycle inside the current walk
                pos = top - 1
                while stack[pos] != s:
                    pos -= 1
                lam = top - pos
                for i in range(pos, top):
                    status[stack[i]] = 3
                    period[stack[i]] = lam
                for i in range(pos):
                    status[stack[i]] = 2
                    period[stack[i]] = lam
            else:
                # ran into previously labelled territory
                per = period[s]
                for i in range(top):
                    status[stack[i]] = 2
                    period[stack[i]] = per

        i = n - 1
        while i >= 0:
            odo[i] += 1
            if odo[i] < m:
                break
            odo[i] = 0
            i -= 1

    return status, period

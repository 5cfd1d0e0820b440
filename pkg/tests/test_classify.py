"""Class membership flags and the closed-form periods they unlock."""

import pytest
from hypothesis import given, strategies as st

import oracle
from ducci import (
    NotApplicable,
    Params,
    classify,
    find_cycle,
    sum_triple_period,
    uniform_period,
)
from strategies import tuples_in_space


# -- classify ----------------------------------------------------------------

def test_classify_flags():
    p = Params(3, 4)
    zero = classify(p.zero())
    assert zero.is_zero and not zero.is_uniform and zero.satisfies_sum

    uni = classify(p.tuple((2, 2, 2)))
    assert uni.is_uniform and not uni.is_zero
    assert not uni.satisfies_sum  # 6 mod 4 != 0

    s = classify(p.tuple((0, 2, 2)))
    assert s.satisfies_sum and not s.is_uniform


def test_classify_block_lengths():
    p = Params(6, 5)
    assert classify(p.tuple((1, 2, 1, 2, 1, 2))).block_lengths == (2,)
    assert classify(p.tuple((3, 3, 3, 3, 3, 3))).block_lengths == (1, 2, 3)
    assert classify(p.tuple((1, 2, 3, 1, 2, 3))).block_lengths == (3,)
    assert classify(p.tuple((1, 2, 3, 4, 5, 0))).block_lengths == ()


@given(tuples_in_space())
def test_classify_invariants(u):
    c = classify(u)
    if c.is_zero:
        assert c.satisfies_sum and not c.is_uniform
        assert c.block_lengths == tuple(
            d for d in range(1, u.params.n) if u.params.n % d == 0
        )
    if c.is_uniform:
        assert 1 in c.block_lengths


@given(
    st.integers(1, 3),
    st.integers(2, 3),
    st.integers(2, 9),
    st.data(),
)
def test_repeated_blocks_inherit_the_period(n1, reps, m, data):
    """A tuple that is a short tuple repeated has the same period as the
    short tuple, computed in the smaller space."""
    if n1 * reps < 2 or n1 == 1 and reps == 1:
        return
    block = data.draw(
        st.lists(st.integers(0, m - 1), min_size=n1, max_size=n1)
    )
    if n1 == 1:
        small_per = find_cycle(Params(2, m).tuple(block * 2)).per
    else:
        small_per = find_cycle(Params(n1, m).tuple(block)).per
    big = Params(n1 * reps, m).tuple(block * reps)
    assert find_cycle(big).per == small_per


# -- uniform tuples ----------------------------------------------------------

def test_uniform_period_examples():
    assert uniform_period(1, Params(3, 3)) == 2
    assert uniform_period(1, Params(5, 7)) == 3
    assert uniform_period(1, Params(3, 11)) == 10
    assert uniform_period(5, Params(3, 8)) is None  # power of two: vanishes
    assert uniform_period(3, Params(3, 12)) is None  # 3 kills the odd part
    assert uniform_period(4, Params(3, 12)) == 2


def test_uniform_period_with_common_factor():
    # the shared factor with the odd part shrinks the relevant modulus:
    # 3 * 2^k mod 21 cycles with period ord(2 mod 7) = 3, not ord(2 mod 21) = 6
    assert uniform_period(1, Params(3, 21)) == 6
    assert uniform_period(3, Params(3, 21)) == 3
    assert uniform_period(7, Params(3, 21)) == 2


def test_uniform_period_independent_of_n():
    for n in (2, 3, 5, 8):
        assert uniform_period(1, Params(n, 11)) == 10


@pytest.mark.parametrize("x", [0, 9, -1])
def test_uniform_period_rejects_bad_residue(x):
    with pytest.raises(ValueError):
        uniform_period(x, Params(3, 9))


@given(st.integers(2, 40), st.integers(2, 5), st.data())
def test_uniform_period_matches_measurement(m, n, data):
    x = data.draw(st.integers(1, m - 1))
    want = uniform_period(x, Params(n, m))
    got = find_cycle(Params(n, m).tuple([x] * n)).per
    assert got == (1 if want is None else want)


# -- sum-condition triples ---------------------------------------------------

def test_sum_triple_period_examples():
    assert sum_triple_period(Params(3, 5).zero()) == 1
    assert sum_triple_period(Params(3, 4).tuple((0, 2, 2))) == 3
    assert sum_triple_period(Params(3, 6).tuple((0, 3, 3))) == 3
    assert sum_triple_period(Params(3, 5).tuple((1, 1, 3))) == 6
    assert sum_triple_period(Params(3, 7).tuple((1, 2, 4))) == 6
    # even m but entries outside {0, m/2}: still 6
    assert sum_triple_period(Params(3, 4).tuple((1, 1, 2))) == 6


@pytest.mark.parametrize(
    "n,m,entries",
    [
        (4, 5, (1, 1, 1, 2)),  # wrong length
        (3, 5, (1, 1, 1)),     # sum 3 != 0 mod 5
        (3, 3, (1, 1, 1)),     # all equal and nonzero: uniform territory
        (3, 9, (3, 3, 3)),
    ],
)
def test_sum_triple_period_not_applicable(n, m, entries):
    with pytest.raises(NotApplicable):
        sum_triple_period(Params(n, m).tuple(entries))


@given(st.integers(2, 30), st.data())
def test_sum_triples_structure(m, data):
    """Sum stays zero, two steps rotate, six steps return, and the 1/3/6
    decision matches a plain measured period."""
    x1 = data.draw(st.integers(0, m - 1))
    x2 = data.draw(st.integers(0, m - 1))
    entries = (x1, x2, (-x1 - x2) % m)
    cur = entries
    for k in range(1, 7):
        cur = oracle.step(cur, m)
        assert sum(cur) % m == 0
        if k == 2:
            assert cur == entries[1:] + entries[:1]
    assert cur == entries

    u = Params(3, m).tuple(entries)
    try:
        want = sum_triple_period(u)
    except NotApplicable:
        return  # all-equal: the uniform closed form owns this case
    assert find_cycle(u).per == want

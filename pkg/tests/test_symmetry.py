"""Permutation stabilizers of period classes and the group-recognition
heuristics behind their name hints."""

import math

import pytest

from ducci import (
    DucciError,
    EmptyClass,
    Params,
    brute_spectrum,
    identify_small_group,
    stabilizer,
)
from ducci.symmetry import (
    _compose,
    _greedy_generators,
    _inverse,
    _perm_order_and_type,
    _verify_subgroup,
)


# -- permutation helpers -----------------------------------------------------

def test_compose_and_inverse():
    a = (1, 2, 0)  # the 3-cycle
    assert _compose(a, _inverse(a)) == (0, 1, 2)
    assert _inverse(_inverse(a)) == a
    b = (1, 0, 2)
    # apply a first, then b
    assert _compose(a, b) == tuple(b[a[i]] for i in range(3))


def test_perm_order_and_cycle_type():
    assert _perm_order_and_type((1, 2, 3, 4, 0)) == (5, [5])
    assert _perm_order_and_type((0, 1, 2)) == (1, [1, 1, 1])
    order, ctype = _perm_order_and_type((1, 0, 3, 2))
    assert order == 2 and sorted(ctype) == [2, 2]


def test_verify_subgroup_accepts_groups():
    _verify_subgroup([(0, 1, 2), (1, 2, 0), (2, 0, 1)], 3)  # rotations


def test_verify_subgroup_rejects_missing_products():
    # two transpositions without their product
    with pytest.raises(DucciError):
        _verify_subgroup([(0, 1, 2), (1, 0, 2), (0, 2, 1)], 3)


def test_verify_subgroup_rejects_missing_inverse():
    with pytest.raises(DucciError):
        _verify_subgroup([(0, 1, 2, 3), (1, 2, 3, 0)], 4)


def test_greedy_generators_regenerate():
    rotations = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
    gens = _greedy_generators(rotations, 3)
    # close the generators independently and compare
    closure = {(0, 1, 2)}
    frontier = list(closure)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = _compose(a, g)
                if c not in closure:
                    closure.add(c)
                    nxt.append(c)
        frontier = nxt
    assert closure == set(rotations)


# -- group recognition -------------------------------------------------------

@pytest.mark.parametrize(
    "order,hist,abelian,want",
    [
        (1, {1: 1}, True, "trivial"),
        (5, {1: 1, 5: 4}, True, "C5"),
        (6, {1: 1, 2: 1, 3: 2, 6: 2}, True, "C6"),
        (4, {1: 1, 2: 3}, True, "(C2)^2"),
        (8, {1: 1, 2: 7}, True, "(C2)^3"),
        (10, {1: 1, 2: 5, 5: 4}, False, "D10"),
        (6, {1: 1, 2: 3, 3: 2}, False, "D6"),
        (21, {1: 1, 3: 14, 7: 6}, False, "Frobenius21"),
        (9, {1: 1, 3: 8}, True, "unknown"),  # C3xC3 vs C9 would need more
        (12, {1: 1, 2: 7, 3: 2, 6: 2}, False, "unknown"),
    ],
)
def test_identify_small_group(order, hist, abelian, want):
    assert identify_small_group(order, hist, abelian) == want


# -- stabilizers -------------------------------------------------------------

def test_stabilizer_of_zero_class_is_everything():
    g = stabilizer(Params(3, 3), 1)
    assert g.order == 6 and g.name_hint == "S3"


def test_stabilizer_period_classes_z11_5(z11_5_report):
    params = Params(5, 11)
    by_d = {
        d: stabilizer(params, d, report=z11_5_report) for d in (1, 2, 5, 10)
    }
    assert by_d[1].order == 120 and by_d[1].name_hint == "S5"
    assert by_d[2].order == 5 and by_d[2].name_hint == "C5" and by_d[2].is_abelian
    assert by_d[5].order == 10 and by_d[5].name_hint == "D10"
    assert not by_d[5].is_abelian
    assert by_d[5].element_order_histogram == {1: 1, 2: 5, 5: 4}
    # the bulk class keeps only the rotations
    assert by_d[10].order == 5 and by_d[10].name_hint == "C5"


def test_stabilizer_always_contains_rotation(z11_5_report):
    for d in (1, 2, 5, 10):
        g = stabilizer(Params(5, 11), d, report=z11_5_report)
        assert g.contains_n_cycle


def test_stabilizer_of_uniform_class():
    g = stabilizer(Params(3, 5), 4)  # the four tuples (x, x, x)
    assert g.order == 6 and g.name_hint == "S3"


def test_stabilizer_invariants():
    rep = brute_spectrum(Params(4, 3))
    for d in rep.full_histogram:
        g = stabilizer(Params(4, 3), d, report=rep)
        assert math.factorial(4) % g.order == 0
        assert g.element_order_histogram.get(1) == 1
        assert sum(g.element_order_histogram.values()) == g.order


def test_stabilizer_empty_class():
    with pytest.raises(EmptyClass):
        stabilizer(Params(3, 3), 4)


def test_stabilizer_refuses_large_n():
    with pytest.raises(DucciError):
        stabilizer(Params(9, 2), 1)


def test_report_json_shape(z11_5_report):
    d = stabilizer(Params(5, 11), 5, report=z11_5_report).to_json_dict()
    assert d["order"] == 10
    assert d["element_orders"] == {"1": 1, "2": 5, "5": 4}
    assert all(isinstance(g, list) and len(g) == 5 for g in d["generators"])

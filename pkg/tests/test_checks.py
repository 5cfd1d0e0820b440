"""The checker suites themselves: all must pass on their default ranges,
failures must carry minimal witnesses, and the reference-table data must be
internally consistent."""

import pytest

from ducci import CheckResult, Params, PeriodCache, SuiteOptions, run_suite
from ducci.checks import (
    EXCEPTIONS_SUM_VERIFIED,
    TABLE_CORRECTIONS,
    TABLE_EXCEPTIONS,
    TABLE_FOUR_PERIODS,
    TABLE_THREE_PERIODS,
    _check_table_row_spectrum,
    check_det_pattern,
    check_embedding,
    check_prime_n3,
    check_six_divides,
    check_sum_triples,
    check_tables,
    check_uniform,
)
from ducci.spectrum import brute_spectrum


# -- every checker green on its default range --------------------------------

def test_sum_triples_passes():
    r = check_sum_triples()
    assert r.passed and not r.sampled


def test_uniform_passes():
    assert check_uniform().passed


def test_embedding_passes(warm_kernels):
    assert check_embedding().passed


def test_six_divides_passes(shared_cache):
    assert check_six_divides(cache=shared_cache).passed


def test_prime_n3_passes(warm_kernels):
    assert check_prime_n3().passed


def test_det_pattern_passes():
    assert check_det_pattern().passed


def test_tables_pass(shared_cache, warm_kernels):
    r = check_tables(cache=shared_cache)
    assert r.passed, r.witness


# -- result plumbing ---------------------------------------------------------

def test_result_passed_iff_no_witness():
    with pytest.raises(AssertionError):
        CheckResult(
            check="x", tested="y", passed=True, witness={"bad": 1}, elapsed=0.0
        )
    with pytest.raises(AssertionError):
        CheckResult(check="x", tested="y", passed=False, witness=None, elapsed=0.0)


def test_result_json_shape():
    r = check_det_pattern(j_range=range(2, 4))
    d = r.to_json_dict()
    assert d["check"] == "det_pattern" and d["passed"] is True
    assert d["witness"] is None and d["sampled"] is False


def test_sampling_recorded_and_deterministic():
    kwargs = dict(m_range=range(31, 33), enumerate_up_to=30, samples=120, seed=5)
    a = check_sum_triples(**kwargs)
    b = check_sum_triples(**kwargs)
    assert a.passed and a.sampled and a.seed == 5
    assert (a.passed, a.witness, a.sampled, a.seed) == (
        b.passed, b.witness, b.sampled, b.seed
    )


def test_embedding_rejects_non_divisible_pair():
    r = check_embedding(pairs=((3, 4),))
    assert not r.passed and r.witness["reason"] == "m1 does not divide m"


# -- the table-row validator -------------------------------------------------

@pytest.fixture(scope="module")
def z75_report():
    return brute_spectrum(Params(5, 7))


def test_row_validator_accepts_true_row(z75_report):
    assert _check_table_row_spectrum(z75_report, 7, 3, 240, sum_period=80) is None


def test_row_validator_flags_wrong_period_set(z75_report):
    bad = _check_table_row_spectrum(z75_report, 7, 3, 240, sum_period=79)
    assert bad["reason"] == "period set" and 80 in bad["measured"]


def test_row_validator_flags_misplaced_class(z75_report):
    doctored = brute_spectrum(Params(5, 7))
    doctored.class_breakdown[80]["other"] += 1
    doctored.class_breakdown[80]["sum"] -= 1
    bad = _check_table_row_spectrum(doctored, 7, 3, 240, sum_period=80)
    assert "unexpected period" in bad["reason"] and bad["period"] == 80


def test_row_validator_flags_wrong_uniform_count(z75_report):
    doctored = brute_spectrum(Params(5, 7))
    doctored.class_breakdown[3]["uniform"] = 5
    bad = _check_table_row_spectrum(doctored, 7, 3, 240, sum_period=80)
    assert bad["reason"] == "uniform count at delta"


def test_row_validator_checks_sum_total(z75_report):
    doctored = brute_spectrum(Params(5, 7))
    doctored.class_breakdown[80]["sum"] -= 7
    doctored.class_breakdown[80]["other"] += 7
    bad = _check_table_row_spectrum(doctored, 7, 3, 240, sum_period=80)
    assert bad is not None


# -- reference-table data sanity ---------------------------------------------

def test_tables_have_unique_rows():
    keys = [(n, m) for n, m, *_ in
            TABLE_THREE_PERIODS + TABLE_FOUR_PERIODS + TABLE_EXCEPTIONS]
    assert len(keys) == len(set(keys))


def test_corrections_reference_real_rows():
    keys = {(n, m) for n, m, *_ in
            TABLE_THREE_PERIODS + TABLE_FOUR_PERIODS + TABLE_EXCEPTIONS}
    for (n, m), extras in TABLE_CORRECTIONS.items():
        assert (n, m) in keys
        for period, cls in extras:
            assert cls in ("sum", "other")
    assert EXCEPTIONS_SUM_VERIFIED <= {(n, m) for n, m, *_ in TABLE_EXCEPTIONS}


def test_corrections_divide_the_maximum_period():
    by_key = {}
    for n, m, P, *_ in TABLE_THREE_PERIODS + TABLE_FOUR_PERIODS + TABLE_EXCEPTIONS:
        by_key[(n, m)] = P
    for (n, m), extras in TABLE_CORRECTIONS.items():
        for period, _ in extras:
            assert by_key[(n, m)] % period == 0


# -- suite runner ------------------------------------------------------------

def test_run_suite_selects_in_registry_order():
    results = run_suite(("det_pattern", "six_divides"), SuiteOptions())
    assert [r.check for r in results] == ["six_divides", "det_pattern"]


def test_run_suite_rejects_unknown_names():
    with pytest.raises(ValueError):
        run_suite(("det_pattern", "nope"))


def test_run_suite_threads_match_serial(tmp_path):
    names = ("det_pattern", "six_divides")
    serial = run_suite(names, SuiteOptions(cache=PeriodCache(tmp_path / "a.jsonl")))
    threaded = run_suite(
        names,
        SuiteOptions(threads=2, cache=PeriodCache(tmp_path / "b.jsonl")),
    )
    assert [(r.check, r.passed) for r in serial] == [
        (r.check, r.passed) for r in threaded
    ]


def test_run_suite_options_narrow_ranges(shared_cache):
    results = run_suite(
        ("uniform", "six_divides"),
        SuiteOptions(max_m=12, cache=shared_cache),
    )
    assert all(r.passed for r in results)
    assert "range(2, 13)" in results[0].tested

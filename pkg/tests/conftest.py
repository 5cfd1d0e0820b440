import time

import pytest
from hypothesis import settings

from ducci import Params, PeriodCache, brute_spectrum, find_cycle

# compiled kernels make per-example deadlines meaningless on first call
settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def warm_kernels():
    """Trigger numba compilation once so timed tests measure the math."""
    find_cycle(Params(3, 2).basic())
    brute_spectrum(Params(3, 2))
    return True


@pytest.fixture(scope="session")
def shared_cache(tmp_path_factory):
    return PeriodCache(tmp_path_factory.mktemp("cache") / "periods.jsonl")


@pytest.fixture(scope="session")
def z11_5_report(warm_kernels):
    return brute_spectrum(Params(5, 11))


@pytest.fixture(scope="session")
def z11_7_report(warm_kernels):
    """The 19 487 171-state enumeration, shared by the tests that need it.

    Wall time is recorded on the report object so timing assertions can
    see it without recomputing.
    """
    t0 = time.perf_counter()
    rep = brute_spectrum(Params(7, 11))
    rep.elapsed = time.perf_counter() - t0
    return rep

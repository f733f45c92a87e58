import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from resonance import DomainError, OutOfRangeError, chebyshev_theta, mertens_product, prime_pi, sieve, sup_log_bound
from resonance.primes import EULER_GAMMA

from conftest import trial_division_primes


def test_sieve_small_cases():
    assert sieve(10).primes.tolist() == [2, 3, 5, 7]
    assert sieve(2).primes.tolist() == [2]
    assert len(sieve(100).primes) == 25


def test_sieve_rejects_degenerate_limit():
    with pytest.raises(DomainError):
        sieve(1)


@pytest.mark.parametrize("limit", [2, 3, 4, 97, 100, 1000, 10**4])
def test_sieve_matches_trial_division(limit):
    assert sieve(limit).primes.tolist() == trial_division_primes(limit)


def test_prime_pi_examples(small_primes):
    assert prime_pi(small_primes, 10) == 4
    assert prime_pi(small_primes, 1.5) == 0
    assert prime_pi(small_primes, 1000) == 168


def test_query_beyond_table_raises():
    table = sieve(100)
    with pytest.raises(OutOfRangeError):
        prime_pi(table, 101)
    with pytest.raises(DomainError):
        prime_pi(table, -1)


def test_theta_examples(small_primes):
    assert chebyshev_theta(small_primes, 10) == pytest.approx(math.log(210), rel=1e-15)
    assert chebyshev_theta(small_primes, 1.9) == 0.0
    direct = math.fsum(math.log(p) for p in trial_division_primes(100))
    assert chebyshev_theta(small_primes, 100) == pytest.approx(direct, rel=1e-14)


def test_mertens_examples(big_primes):
    assert mertens_product(big_primes, 3) == pytest.approx(3.0, rel=1e-15)
    assert mertens_product(big_primes, 10) == pytest.approx(4.375, rel=1e-15)
    gap = mertens_product(big_primes, 1e5) - math.exp(EULER_GAMMA) * math.log(1e5)
    assert abs(gap) <= 1.0
    with pytest.raises(DomainError):
        mertens_product(big_primes, 1.5)


def test_mertens_matches_direct_product(small_primes):
    direct = 1.0
    for p in trial_division_primes(500):
        direct *= p / (p - 1)
    assert mertens_product(small_primes, 500) == pytest.approx(direct, rel=1e-13)


def test_sup_log_bound_examples(big_primes):
    assert sup_log_bound(big_primes, 10) == pytest.approx(4 * math.log(10) - math.log(210), rel=1e-15)
    assert sup_log_bound(big_primes, 2) == pytest.approx(0.0, abs=1e-15)
    x = 1e6
    assert 0.9 <= sup_log_bound(big_primes, x) / (x / math.log(x)) <= 1.2


def test_theta_jumps_by_log_p(small_primes):
    for p in small_primes.primes[:200]:
        jump = chebyshev_theta(small_primes, p) - chebyshev_theta(small_primes, p - 0.5)
        assert jump == pytest.approx(math.log(p), rel=1e-12)


def test_mertens_ratio_approaches_one(big_primes):
    eg = math.exp(EULER_GAMMA)
    dist = [abs(mertens_product(big_primes, x) / (eg * math.log(x)) - 1) for x in (1e2, 1e3, 1e4, 1e5, 1e6)]
    assert all(b < a for a, b in zip(dist, dist[1:]))


@settings(max_examples=200, deadline=None)
@given(st.floats(2.0, 9999.0), st.floats(0.0, 500.0))
def test_functionals_monotone(small_primes, x, dx):
    y = min(x + dx, 10**4)
    assert prime_pi(small_primes, x) <= prime_pi(small_primes, y)
    assert chebyshev_theta(small_primes, x) <= chebyshev_theta(small_primes, y)
    assert mertens_product(small_primes, x) <= mertens_product(small_primes, y)
    assert sup_log_bound(small_primes, x) >= 0.0


def test_table_is_immutable(small_primes):
    with pytest.raises(ValueError):
        small_primes.primes[0] = 4
    assert isinstance(small_primes.primes, np.ndarray)

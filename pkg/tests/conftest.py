import math

import pytest

from resonance import ResonatorConfig, build_weights, sieve


@pytest.fixture(scope="session")
def small_primes():
    return sieve(10**4)


@pytest.fixture(scope="session")
def big_primes():
    return sieve(10**6)


def trial_division_primes(limit: int) -> list[int]:
    out = []
    for n in range(2, limit + 1):
        if all(n % d for d in range(2, math.isqrt(n) + 1)):
            out.append(n)
    return out


@pytest.fixture(scope="session")
def w10(small_primes):
    return build_weights(ResonatorConfig(T=1e6, X=10), small_primes)


@pytest.fixture(scope="session")
def w3(small_primes):
    return build_weights(ResonatorConfig(T=1e6, X=3), small_primes)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

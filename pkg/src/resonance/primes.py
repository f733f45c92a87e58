"""Prime tables and the prime-counting functionals built on them.

A :class:`PrimeTable` holds all primes up to an integer limit together with
prefix sums of ``log p`` and ``-log(1 - 1/p)``, so that pi(x), theta(x) and the
Mertens product are O(log n) lookups for any real ``x`` up to the limit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, OutOfRangeError

__all__ = [
    "PrimeTable",
    "sieve",
    "prime_pi",
    "chebyshev_theta",
    "mertens_product",
    "sup_log_bound",
    "EULER_GAMMA",
]

EULER_GAMMA = 0.57721566490153286061


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """All primes ``<= limit`` with their natural logarithms.

    Instances are immutable; build them with :func:`sieve`.
    """

    limit: int
    primes: np.ndarray
    logs: np.ndarray
    _theta_prefix: np.ndarray = field(repr=False)
    _mertens_prefix: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.primes)

    def count_upto(self, x: float) -> int:
        """Number of primes ``<= x``, with range checking."""
        if x > self.limit:
            raise OutOfRangeError(f"x={x} exceeds table limit {self.limit}")
        if x < 0:
            raise DomainError(f"x must be nonnegative, got {x}")
        return int(np.searchsorted(self.primes, math.floor(x), side="right"))

    def upto(self, x: float) -> np.ndarray:
        """The primes ``<= x`` as an integer array (a view)."""
        return self.primes[: self.count_upto(x)]


def _eratosthenes(limit: int) -> np.ndarray:
    # odd-only sieve: index i represents 2*i + 1
    size = (limit + 1) // 2
    is_odd_prime = np.ones(size, dtype=bool)
    is_odd_prime[0] = False
    for i in range(1, (math.isqrt(limit) - 1) // 2 + 1):
        if is_odd_prime[i]:
            p = 2 * i + 1
            is_odd_prime[p * p // 2 :: p] = False
    odd = 2 * np.flatnonzero(is_odd_prime) + 1
    return np.concatenate(([2], odd)).astype(np.int64)


def sieve(limit: int) -> PrimeTable:
    """Sieve of Eratosthenes up to ``limit`` (inclusive).

    Parameters
    ----------
    limit : int
        Largest integer examined; must be at least 2.

    Returns
    -------
    PrimeTable
    """
    limit = int(limit)
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    primes = _eratosthenes(limit)
    logs = np.log(primes.astype(np.float64))
    theta = np.concatenate(([0.0], np.cumsum(logs)))
    mertens = np.concatenate(([0.0], np.cumsum(-np.log1p(-1.0 / primes))))
    for arr in (primes, logs, theta, mertens):
        arr.setflags(write=False)
    return PrimeTable(limit, primes, logs, theta, mertens)


def prime_pi(table: PrimeTable, x: float) -> int:
    """Prime-counting function pi(x)."""
    return table.count_upto(x)


def chebyshev_theta(table: PrimeTable, x: float) -> float:
    """First Chebyshev function, the sum of ``log p`` over primes ``p <= x``."""
    return float(table._theta_prefix[table.count_upto(x)])


def _require_two(x: float) -> None:
    if x < 2:
        raise DomainError(f"x must be >= 2 (empty prime product), got {x}")


def mertens_product(table: PrimeTable, x: float) -> float:
    """Finite Euler product ``prod_{p <= x} (1 - 1/p)^-1``.

    Mertens' theorem says this is ``e^gamma log x + O(1)``.
    """
    _require_two(x)
    return math.exp(table._mertens_prefix[table.count_upto(x)])


def sup_log_bound(table: PrimeTable, x: float) -> float:
    """``pi(x) log x - theta(x)``, i.e. ``sum_{p <= x} (log x - log p)``."""
    _require_two(x)
    k = table.count_upto(x)
    # summing the nonnegative gaps avoids cancellation between two large terms
    return math.fsum(math.log(x) - table.logs[:k])

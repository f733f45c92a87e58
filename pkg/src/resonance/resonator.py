"""The resonator ``R(t) = prod_{p <= X} (1 - q_p p^{it})^{-1}``.

The weights ``q_p = 1 - p/X`` are extended completely multiplicatively, so
``R(t)`` is also the Dirichlet series ``sum_n q_n n^{it}`` supported on
``X``-smooth ``n``. This module provides both forms: the Euler product for
exact pointwise values and a truncated series over an enumerated smooth basis
for the moment sums.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _smooth
from .errors import ConfigurationError, DomainError, EvaluationError
from .primes import PrimeTable, sup_log_bound

__all__ = [
    "ResonatorConfig",
    "WeightSystem",
    "SmoothBasis",
    "default_x",
    "build_weights",
    "weight_of",
    "eval_euler",
    "eval_series",
    "build_smooth_basis",
    "sup_bound_check",
]

Y_CAP = 1e8


def default_x(T: float) -> float:
    """Prime cutoff ``X = log T * log log T / 6``."""
    L = math.log(T)
    return L * math.log(L) / 6.0


def default_y(T: float) -> float:
    """``min(exp((log T)^10), 1e8)``; the uncapped value is far beyond any table."""
    e = math.log(T) ** 10
    return Y_CAP if e >= math.log(Y_CAP) else math.exp(e)


@dataclass(frozen=True)
class ResonatorConfig:
    """Parameters of one resonator construction.

    Any of ``X``, ``Y`` and ``lam`` left as ``None`` take their default
    values derived from ``T``.
    """

    T: float
    X: float | None = None
    Y: float | None = None
    lam: float | None = None
    smooth_limit: int = 10_000

    def __post_init__(self):
        if not self.T > math.e**math.e:
            raise ConfigurationError(f"T must exceed e^e ~ 15.15, got {self.T}")
        if self.X is None:
            object.__setattr__(self, "X", default_x(self.T))
        if self.Y is None:
            object.__setattr__(self, "Y", max(default_y(self.T), self.X))
        if self.lam is None:
            object.__setattr__(self, "lam", math.log(self.T) / self.T)
        object.__setattr__(self, "smooth_limit", int(self.smooth_limit))
        if not self.X > 0:
            raise ConfigurationError(f"X must be positive, got {self.X}")
        if self.Y < self.X:
            raise ConfigurationError(f"Y={self.Y} must be >= X={self.X}")
        if not self.lam > 0:
            raise ConfigurationError(f"lambda must be positive, got {self.lam}")
        if self.smooth_limit < 1:
            raise ConfigurationError(f"smooth_limit must be >= 1, got {self.smooth_limit}")


@dataclass(frozen=True, eq=False)
class WeightSystem:
    """Completely multiplicative weights generated by ``q_p = 1 - p/X``."""

    config: ResonatorConfig
    primes: np.ndarray
    q: np.ndarray
    logs: np.ndarray

    @property
    def X(self) -> float:
        return self.config.X

    @property
    def prime_weights(self) -> dict[int, float]:
        return {int(p): float(v) for p, v in zip(self.primes, self.q)}


@dataclass(frozen=True, eq=False)
class SmoothBasis:
    """Truncated Dirichlet series of ``R``: all ``X``-smooth ``n <= N`` with ``q_n > 0``.

    ``parent`` and ``prime_index`` encode ``n = n[parent] * primes[prime_index]``
    and are used to build ``n^{it}`` multiplicatively.
    """

    X: float
    limit: int
    n: np.ndarray
    q: np.ndarray
    logn: np.ndarray
    parent: np.ndarray = field(repr=False)
    prime_index: np.ndarray = field(repr=False)
    prime_logs: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.q)

    @property
    def entries(self) -> list[tuple[int, float]]:
        return [(int(a), float(b)) for a, b in zip(self.n, self.q)]

    def mass(self) -> float:
        """``sum q_n``; equals ``R(0)`` minus the truncation deficit."""
        return math.fsum(self.q)


def build_weights(cfg: ResonatorConfig, primes: PrimeTable) -> WeightSystem:
    """Prime weights ``q_p = 1 - p/X`` for every prime ``p <= X``."""
    if primes.limit < cfg.X:
        raise ConfigurationError(
            f"prime table limit {primes.limit} is smaller than X={cfg.X}"
        )
    ps = primes.upto(cfg.X)
    q = 1.0 - ps / cfg.X
    logs = primes.logs[: len(ps)]
    q.setflags(write=False)
    return WeightSystem(cfg, ps, q, logs)


def weight_of(w: WeightSystem, n: int) -> float:
    """``q_n`` by trial division over the primes ``<= X``; 0 if ``n`` is not ``X``-smooth."""
    n = int(n)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    value = 1.0
    for p, qp in zip(w.primes.tolist(), w.q.tolist()):
        if n == 1:
            break
        while n % p == 0:
            n //= p
            value *= qp
    return value if n == 1 else 0.0


def eval_euler(w: WeightSystem, t):
    """``R(t)`` as the finite Euler product; vectorised over ``t``."""
    t_arr = np.asarray(t, dtype=np.float64)
    flat = t_arr.reshape(-1)
    out = np.empty(flat.size, dtype=np.complex128)
    chunk = max(1, 2**20 // max(1, len(w.q)))
    for a in range(0, flat.size, chunk):
        z = np.exp(1j * np.multiply.outer(flat[a : a + chunk], w.logs))
        out[a : a + chunk] = np.exp(-np.log1p(-w.q * z).sum(axis=1))
    if t_arr.ndim == 0:
        return complex(out[0])
    return out.reshape(t_arr.shape)


def build_smooth_basis(w: WeightSystem, N: int, budget: int = _smooth.DEFAULT_BUDGET) -> SmoothBasis:
    """Enumerate ``X``-smooth ``n <= N`` with their weights.

    Entries with ``q_n = 0`` (a prime equal to ``X``) are dropped.
    """
    N = int(N)
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    active = w.q > 0
    ps = w.primes[active]
    qs = w.q[active]
    ns, parent, pidx = _smooth.enumerate_smooth(ps.tolist(), N, budget)
    q = np.empty(len(ns))
    q[0] = 1.0
    for i in range(1, len(ns)):
        q[i] = q[parent[i]] * qs[pidx[i]]
    return SmoothBasis(
        X=w.X,
        limit=N,
        n=_smooth.as_int_array(ns),
        q=q,
        logn=_smooth.log_of(ns),
        parent=parent,
        prime_index=pidx,
        prime_logs=w.logs[active],
    )


def eval_series(basis: SmoothBasis, t, conjugate: bool = False):
    """Truncated series ``sum_{n <= N} q_n n^{it}`` (``n^{-it}`` if ``conjugate``)."""
    t_arr = np.asarray(t, dtype=np.float64)
    flat = t_arr.reshape(-1)
    sign = -1.0 if conjugate else 1.0
    out = np.empty(flat.size, dtype=np.complex128)
    chunk = max(1, 2**21 // max(1, len(basis)))
    for a in range(0, flat.size, chunk):
        z = _smooth.phases(basis.parent, basis.prime_index, basis.prime_logs, sign * flat[a : a + chunk])
        out[a : a + chunk] = basis.q @ z
    if t_arr.ndim == 0:
        return complex(out[0])
    return out.reshape(t_arr.shape)


def log_r0(w: WeightSystem) -> float:
    """``log R(0) = sum_p -log(1 - q_p)``."""
    return -math.fsum(np.log1p(-w.q))


def sup_bound_check(w: WeightSystem, primes: PrimeTable) -> float:
    """Exponent ``2 (pi(X) log X - theta(X)) / log T`` bounding ``|R|^2`` by a power of ``T``.

    Also confirms ``log R(0) <= pi(X) log X - theta(X)``; at ``t = 0`` the two
    agree term by term, so only rounding separates them.
    """
    if len(w.primes) == 0:
        return 0.0
    bound = sup_log_bound(primes, w.X)
    lr0 = log_r0(w)
    if lr0 > bound * (1 + 1e-12) + 1e-12:
        raise EvaluationError(f"log R(0)={lr0} exceeds sup bound {bound}")
    return 2.0 * bound / math.log(w.config.T)

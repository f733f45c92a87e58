"""Evaluation of ``zeta(s)`` and of its truncated Euler products ``zeta(s; Y)``.

The reference evaluator is Euler-Maclaurin summation

    zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2 + sum_{j<=M} T_j(s) + E,

    T_j(s) = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1},

with the classical remainder bound ``|E| <= |s+2M+1|/(sigma+2M+1) |T_{M+1}(s)|``.
``N`` and ``M`` are chosen as the cheapest pair meeting a requested bound.

The partial sum dominates the cost. Since ``n^-s`` is completely
multiplicative, only primes need a transcendental evaluation; every composite
is one complex multiply from a smallest-prime-factor table.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numba
import numpy as np
from scipy.special import bernoulli

from .errors import ConfigurationError, DomainError, PoleError, PrecisionError
from .primes import PrimeTable

__all__ = [
    "ZetaValue",
    "zeta",
    "zeta_abs_many",
    "zeta_truncated",
    "zeta_via_eta",
    "lemma1_deviation",
    "em_parameters",
]

MAX_TERMS = 10_000_000
MAX_CORRECTIONS = 64
MAX_HEIGHT = 1e12

_B = bernoulli(2 * MAX_CORRECTIONS + 2)
# B_{2j} / (2j)!  for j = 1 .. MAX_CORRECTIONS + 1
_BERN_COEF = np.array(
    [_B[2 * j] / math.factorial(2 * j) for j in range(1, MAX_CORRECTIONS + 2)]
)


@dataclass(frozen=True)
class ZetaValue:
    s: complex
    value: complex
    method: str
    est_error: float

    def __abs__(self) -> float:
        return abs(self.value)


@numba.njit(cache=True, nogil=True)
def _factor_tables(n_max):
    # smallest prime factor and cofactor n // spf(n); cofactor 1 marks a prime
    spf = np.zeros(n_max + 1, dtype=np.int32)
    for i in range(2, n_max + 1):
        if spf[i] == 0:
            spf[i] = i
            if i * i <= n_max:
                for j in range(i * i, n_max + 1, i):
                    if spf[j] == 0:
                        spf[j] = i
    cof = np.ones(n_max + 1, dtype=np.int32)
    for n in range(2, n_max + 1):
        cof[n] = n // spf[n]
    return spf, cof


@numba.njit(cache=True, nogil=True)
def _partial_sum(sigma, t, n_max, spf, cof, re, im):
    # sum_{n <= n_max} n^{-sigma - it}; blocks of 256 summed plainly, block
    # totals combined with Neumaier compensation
    re[1] = 1.0
    im[1] = 0.0
    sr = 1.0
    cr = 0.0
    si = 0.0
    ci = 0.0
    n = 2
    while n <= n_max:
        end = min(n + 256, n_max + 1)
        br = 0.0
        bi = 0.0
        for k in range(n, end):
            c = cof[k]
            if c == 1:
                lg = math.log(k)
                mag = math.exp(-sigma * lg)
                xr = mag * math.cos(t * lg)
                xi = -mag * math.sin(t * lg)
            else:
                p = spf[k]
                xr = re[p] * re[c] - im[p] * im[c]
                xi = re[p] * im[c] + im[p] * re[c]
            re[k] = xr
            im[k] = xi
            br += xr
            bi += xi
        s_new = sr + br
        if abs(sr) >= abs(br):
            cr += (sr - s_new) + br
        else:
            cr += (br - s_new) + sr
        sr = s_new
        s_new = si + bi
        if abs(si) >= abs(bi):
            ci += (si - s_new) + bi
        else:
            ci += (bi - s_new) + si
        si = s_new
        n = end
    return complex(sr + cr, si + ci)


class _Tables:
    spf = np.zeros(2, dtype=np.int32)
    cof = np.ones(2, dtype=np.int32)

    @classmethod
    def get(cls, n_max: int):
        if len(cls.spf) <= n_max:
            size = min(max(n_max, 2 * len(cls.spf), 1 << 16), MAX_TERMS)
            cls.spf, cls.cof = _factor_tables(size)
        return cls.spf, cls.cof


def _log_bound_constants(s: complex) -> np.ndarray:
    """``C_M`` with ``log(remainder bound) = C_M - (2M + 1 + sigma) log N``."""
    sigma = s.real
    M = np.arange(MAX_CORRECTIONS + 1)
    log_abs = np.log(np.abs(s + np.arange(2 * MAX_CORRECTIONS + 1)))
    log_poch = np.cumsum(log_abs)[2 * M]  # sum_{k <= 2M} log|s+k|
    return (
        np.log(np.abs(s + 2 * M + 1) / (sigma + 2 * M + 1))
        + np.log(np.abs(_BERN_COEF[M]))
        + log_poch
    )


def _log_remainder_bound(s: complex, N: int, M: int) -> float:
    """log of ``|s+2M+1|/(sigma+2M+1) * |T_{M+1}(s)|`` at cutoff ``N``."""
    return float(_log_bound_constants(s)[M] - (2 * M + 1 + s.real) * math.log(N))


def em_parameters(s: complex, target_error: float, max_terms: int = MAX_TERMS) -> tuple[int, int]:
    """Cheapest ``(N, M)`` whose remainder bound is at most ``target_error``.

    The cost model is ``N + M``; ``N >= 10`` always.
    """
    s = complex(s)
    C = _log_bound_constants(s)[1:]
    M = np.arange(1, MAX_CORRECTIONS + 1)
    log_n = (C - math.log(target_error)) / (2 * M + 1 + s.real)
    N = np.maximum(10, np.ceil(np.exp(np.minimum(log_n, 60.0)))).astype(np.int64)
    # guard against rounding in exp/ceil
    N = N + (C - (2 * M + 1 + s.real) * np.log(N) > math.log(target_error))
    cost = N + M
    j = int(np.argmin(cost))
    if N[j] > max_terms:
        raise PrecisionError(
            f"error {target_error:g} at s={s} needs more than {max_terms} terms"
        )
    return int(N[j]), int(M[j])


def _check_s(s: complex) -> None:
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if s.real < 0.5:
        raise DomainError(f"Re(s) must be >= 1/2, got {s.real}")
    if abs(s.imag) > MAX_HEIGHT:
        raise DomainError(f"|Im(s)| must be <= {MAX_HEIGHT:g}, got {abs(s.imag)}")


def zeta(s: complex, target_error: float = 1e-12) -> ZetaValue:
    """Euler-Maclaurin evaluation of ``zeta(s)``.

    Parameters
    ----------
    s : complex
        Point with ``Re(s) >= 1/2``, ``s != 1`` and ``|Im(s)| <= 1e12``.
    target_error : float
        Upper bound required of the Euler-Maclaurin remainder.

    Returns
    -------
    ZetaValue
        ``est_error`` is the remainder bound actually achieved.

    Raises
    ------
    PoleError
        At ``s = 1``.
    PrecisionError
        If the bound needs more than ``MAX_TERMS`` summands (roughly
        ``|t| > 3e7`` for ``target_error = 1e-12``).
    """
    s = complex(s)
    _check_s(s)
    N, M = em_parameters(s, target_error)
    value = _em_value(s, N, M)
    return ZetaValue(s, value, "euler_maclaurin", math.exp(_log_remainder_bound(s, N, M)))


def _em_value(s: complex, N: int, M: int, bufs=None) -> complex:
    spf, cof = _Tables.get(N)
    if bufs is None or len(bufs[0]) < N:
        bufs = (np.empty(N), np.empty(N))
    head = _partial_sum(s.real, s.imag, N - 1, spf, cof, *bufs)
    logN = math.log(N)
    NS = np.exp(-s * logN)  # N^{-s}
    tail = N * NS / (s - 1) + 0.5 * NS
    corr = []
    fac = NS  # running N^{-s} * prod_{k<2j-1} (s+k)/N
    for j in range(1, M + 1):
        fac = fac * (s + 2 * j - 2) / N
        corr.append(_BERN_COEF[j - 1] * fac)
        fac = fac * (s + 2 * j - 1) / N
    # add smallest corrections first
    tail = tail + sum(reversed(corr))
    return complex(head + tail)


def zeta_abs_many(t: Iterable[float], sigma: float = 1.0, target_error: float = 1e-8, threads: int = 1) -> np.ndarray:
    """``|zeta(sigma + i t)|`` for many heights, reusing work buffers.

    Each value is computed independently, so the result does not depend on
    ``threads``.
    """
    ts = np.asarray(list(t) if not isinstance(t, np.ndarray) else t, dtype=np.float64)
    for s in (complex(sigma, x) for x in ts[:1]):
        _check_s(s)
    params = [em_parameters(complex(sigma, x), target_error) for x in ts]
    n_top = max((p[0] for p in params), default=10)
    _Tables.get(n_top)

    def work(idx: Sequence[int]) -> list[float]:
        bufs = (np.empty(n_top), np.empty(n_top))
        return [abs(_em_value(complex(sigma, ts[i]), *params[i], bufs)) for i in idx]

    out = np.empty(len(ts))
    if threads <= 1 or len(ts) < 2:
        out[:] = work(range(len(ts)))
        return out
    from concurrent.futures import ThreadPoolExecutor

    parts = np.array_split(np.arange(len(ts)), threads)
    with ThreadPoolExecutor(threads) as ex:
        for part, vals in zip(parts, ex.map(work, parts)):
            out[part] = vals
    return out


def zeta_truncated(s: complex, cutoff: float, primes: PrimeTable) -> ZetaValue:
    """Finite Euler product ``prod_{p <= cutoff} (1 - p^-s)^-1``."""
    s = complex(s)
    if primes.limit < cutoff:
        raise ConfigurationError(f"prime table limit {primes.limit} < cutoff {cutoff}")
    if s.real <= 0:
        raise DomainError(f"Re(s) must be positive, got {s.real}")
    k = primes.count_upto(cutoff)
    logs = primes.logs[:k]
    log_val = 0j
    chunk = 1 << 20
    parts = []
    for a in range(0, k, chunk):
        z = np.exp(-s * logs[a : a + chunk])
        parts.append(-np.log1p(-z))
    terms = np.concatenate(parts) if parts else np.zeros(0, dtype=complex)
    log_val = complex(math.fsum(terms.real), math.fsum(terms.imag))
    value = complex(np.exp(log_val))
    return ZetaValue(s, value, "euler_product", 4 * k * np.finfo(float).eps * abs(value))


def zeta_via_eta(s: complex, terms: int | None = None, corrections: int = 8) -> complex:
    """``zeta(s) = eta(s) / (1 - 2^{1-s})`` from the alternating Dirichlet series.

    The tail of ``eta(s) = sum (-1)^{n-1} n^-s`` from ``n = N`` on is summed
    with Boole's formula ``sum_{m>=0} (-1)^m f(N+m) = [1/(1+e^D)] f (N)``,
    using ``1/(1+e^x) = 1/2 - sum_k (4^k-1) B_{2k}/(2k)! x^{2k-1}``; it
    converges for ``N > |s|/pi``. This route shares no code with :func:`zeta`
    and serves as an independent cross-check.
    """
    s = complex(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    N = int(4 * abs(s) + 200) if terms is None else int(terms)
    n = np.arange(1, N, dtype=np.float64)
    vals = np.where(n % 2 == 1, 1.0, -1.0) * np.exp(-s * np.log(n))
    head = complex(math.fsum(vals.real), math.fsum(vals.imag))
    f = complex(np.exp(-s * math.log(N)))  # f(N) = N^-s
    tail = 0.5 * f
    deriv = f  # f^{(m)}(N) = (-1)^m (s)_m N^{-s-m}
    m = 0
    for k in range(1, corrections + 1):
        while m < 2 * k - 1:
            deriv = deriv * (-(s + m)) / N
            m += 1
        tail -= (4**k - 1) * _B[2 * k] / math.factorial(2 * k) * deriv
    eta = head + (1.0 if N % 2 == 1 else -1.0) * tail
    return complex(eta / (1 - 2 ** (1 - s)))


def lemma1_deviation(t: float, T: float, cutoffs: Sequence[float], primes: PrimeTable, target_error: float = 1e-12) -> list[float]:
    """``|zeta(1+it) / zeta(1+it; Y) - 1|`` for each ``Y`` in ``cutoffs``.

    Only heights ``T^{1/10} <= |t| <= T`` are accepted.
    """
    if not (T ** 0.1 <= abs(t) <= T):
        raise DomainError(f"|t|={abs(t)} outside [T^(1/10), T] = [{T ** 0.1}, {T}]")
    cutoffs = list(cutoffs)
    if any(b < a for a, b in zip(cutoffs, cutoffs[1:])):
        raise DomainError("cutoffs must be ascending")
    z = zeta(complex(1.0, t), target_error).value
    return [abs(z / zeta_truncated(complex(1.0, t), Y, primes).value - 1) for Y in cutoffs]

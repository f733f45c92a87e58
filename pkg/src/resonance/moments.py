"""Smoothed moments of the resonator and the inequality chain they satisfy.

Writing ``R(t) = sum q_n n^{it}`` and ``zeta(1+it; X) = sum a_k k^{-it}`` with
``a_k = 1/k`` on ``X``-smooth ``k``, the integrals against ``Phi(lam t)``
expand into Gaussian sums

    I2 = sum_{m,n} q_m q_n phi_hat(log(m/n)),
    I1 = sum_k a_k sum_{m,n} q_m q_n phi_hat(log(m/(n k))).

Every summand is positive. Keeping only the ``m`` divisible by ``k`` and using
``q_{rk} = q_r q_k`` gives ``I1 / I2 >= sum_k a_k q_k = prod_p (1 - q_p/p)^-1``.

All infinite sums are truncated (``n <= N`` in the basis, ``k <= K`` in the
coefficients). Dropped terms are positive, so truncation can only weaken the
verified inequality; the exact amount is computed and reported as ``slack``.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import _smooth
from .errors import ConfigurationError, DomainError, ResourceError
from .kernel import SQRT_PI, KernelSpec, quadrature
from .primes import EULER_GAMMA, PrimeTable
from .resonator import ResonatorConfig, SmoothBasis, WeightSystem, eval_series, log_r0, weight_of

__all__ = [
    "ZetaCoefficients",
    "MomentReport",
    "PerKResult",
    "BoundSplit",
    "RangeReport",
    "zeta_coefficients",
    "i2_closed",
    "i1_closed",
    "i2_quadrature",
    "i1_quadrature",
    "per_k_inequality",
    "closed_form_bound",
    "coefficient_sum",
    "range_decomposition",
    "full_report",
]

ROW_CHUNK = 256
# phi_hat * q_m * q_n < 1e-300 is skipped; exp(-u) < 1e-300 once u > 690.8
_PRUNE_EXPONENT = 700.0


@dataclass(frozen=True, eq=False)
class ZetaCoefficients:
    """Dirichlet coefficients ``a_k = 1/k`` of ``zeta(1+it; X)`` for ``X``-smooth ``k <= K``."""

    X: float
    limit: int
    k: np.ndarray
    a: np.ndarray
    logk: np.ndarray
    parent: np.ndarray = field(repr=False)
    prime_index: np.ndarray = field(repr=False)
    prime_logs: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.a)

    @property
    def entries(self) -> list[tuple[int, float]]:
        return [(int(a), float(b)) for a, b in zip(self.k, self.a)]


def zeta_coefficients(w: WeightSystem, K: int, budget: int = _smooth.DEFAULT_BUDGET) -> ZetaCoefficients:
    """Enumerate the ``X``-smooth ``k <= K`` (all primes ``<= X``, including ``p = X``)."""
    K = int(K)
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    ks, parent, pidx = _smooth.enumerate_smooth(w.primes.tolist(), K, budget)
    return ZetaCoefficients(
        X=w.X,
        limit=K,
        k=_smooth.as_int_array(ks),
        a=np.array([1.0 / k for k in ks]),
        logk=_smooth.log_of(ks),
        parent=parent,
        prime_index=pidx,
        prime_logs=w.logs,
    )


def _coefficient_weights(coeffs: ZetaCoefficients, w: WeightSystem) -> np.ndarray:
    """``q_k`` for each coefficient index, built along the parent links."""
    qk = np.empty(len(coeffs))
    qk[0] = 1.0
    for i in range(1, len(coeffs)):
        qk[i] = qk[coeffs.parent[i]] * w.q[coeffs.prime_index[i]]
    return qk


def _check_same_x(basis: SmoothBasis, other) -> None:
    if basis.X != other.X:
        raise ConfigurationError(f"cutoff mismatch: basis X={basis.X}, other X={other.X}")


# -- Gaussian pair sums -------------------------------------------------------------


def _row_sums(logs: np.ndarray, q: np.ndarray, shift: float, lam: float, rows: slice) -> np.ndarray:
    """``q_m sum_n q_n phi_hat(log m - log n - shift)`` for the rows ``m`` in ``rows``."""
    lm = logs[rows]
    width = 2.0 * lam * math.sqrt(_PRUNE_EXPONENT + max(0.0, math.log(SQRT_PI / lam)))
    lo = int(np.searchsorted(logs, lm[0] - shift - width, side="left"))
    hi = int(np.searchsorted(logs, lm[-1] - shift + width, side="right"))
    if hi <= lo:
        return np.zeros(len(lm))
    d = lm[:, None] - shift - logs[None, lo:hi]
    g = np.exp(-np.square(d) / (4.0 * lam * lam))
    inner = g @ q[lo:hi]
    return (SQRT_PI / lam) * q[rows] * inner


def _all_row_sums(basis: SmoothBasis, shift: float, kern: KernelSpec, threads: int = 1) -> np.ndarray:
    """Per-row contributions; the fixed row partition makes results independent of ``threads``."""
    n = len(basis)
    chunks = [slice(a, min(a + ROW_CHUNK, n)) for a in range(0, n, ROW_CHUNK)]
    job = lambda sl: _row_sums(basis.logn, basis.q, shift, kern.lam, sl)
    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(threads) as ex:
            parts = list(ex.map(job, chunks))
    else:
        parts = [job(sl) for sl in chunks]
    return np.concatenate(parts)


def _pair_sum(basis: SmoothBasis, shift: float, kern: KernelSpec, threads: int = 1) -> float:
    return math.fsum(_all_row_sums(basis, shift, kern, threads))


def i2_closed(basis: SmoothBasis, k: KernelSpec, threads: int = 1) -> float:
    """``I2 = sum_{m,n} q_m q_n phi_hat(log(m/n))`` over the basis."""
    if len(basis) == 0:
        raise DomainError("basis is empty")
    return _pair_sum(basis, 0.0, k, threads)


def i1_closed(basis: SmoothBasis, coeffs: ZetaCoefficients, k: KernelSpec, threads: int = 1) -> float:
    """``I1 = sum_k a_k sum_{m,n} q_m q_n phi_hat(log(m/(n k)))``; real and positive."""
    _check_same_x(basis, coeffs)
    return math.fsum(a * _pair_sum(basis, lk, k, threads) for a, lk in zip(coeffs.a, coeffs.logk))


# -- quadrature counterparts -------------------------------------------------------


def _coeff_series(coeffs: ZetaCoefficients, t: np.ndarray) -> np.ndarray:
    """``sum_k a_k k^{-it}``."""
    t = np.asarray(t, dtype=np.float64)
    z = _smooth.phases(coeffs.parent, coeffs.prime_index, coeffs.prime_logs, -t)
    return coeffs.a @ z


def _bandwidth(basis: SmoothBasis, coeffs: ZetaCoefficients | None = None) -> float:
    bw = float(basis.logn[-1])
    if coeffs is not None:
        bw += float(coeffs.logk[-1])
    return bw + 1.0


def i2_quadrature(basis: SmoothBasis, k: KernelSpec, points: int = 16):
    """``I2`` by Gauss-Legendre quadrature of ``|R_N(t)|^2 Phi(lam t)``."""
    f = lambda t: np.square(np.abs(eval_series(basis, t)))
    res = quadrature(f, k, lower=0.0, points=points, bandwidth=_bandwidth(basis))
    return 2.0 * res.value.real, 2.0 * res.error


def i1_quadrature(basis: SmoothBasis, coeffs: ZetaCoefficients, k: KernelSpec, points: int = 16):
    """``I1`` by quadrature of ``zeta_K(1+it; X) |R_N(t)|^2 Phi(lam t)``.

    The real part of the integrand is even, the imaginary part odd, so the
    half line suffices.
    """
    _check_same_x(basis, coeffs)
    f = lambda t: _coeff_series(coeffs, t) * np.square(np.abs(eval_series(basis, t)))
    res = quadrature(f, k, lower=0.0, points=points, bandwidth=_bandwidth(basis, coeffs))
    return 2.0 * res.value.real, 2.0 * res.error


# -- the self-similarity step --------------------------------------------------------


@dataclass(frozen=True)
class PerKResult:
    """Both sides of ``sum_{m,n} q_m q_n phi_hat(log(m/(nk))) >= q_k I2``.

    ``slack`` is ``q_k`` times the part of ``I2`` coming from ``r > N/k``, which
    the truncated left side cannot see.
    """

    k: int
    lhs: float
    rhs: float
    slack: float

    @property
    def holds(self) -> bool:
        return self.lhs >= (self.rhs - self.slack) * (1 - 1e-12)


def per_k_inequality(basis: SmoothBasis, k_val: int, w: WeightSystem, kern: KernelSpec, threads: int = 1) -> PerKResult:
    k_val = int(k_val)
    if k_val < 1:
        raise DomainError(f"k must be >= 1, got {k_val}")
    lhs = _pair_sum(basis, math.log(k_val), kern, threads)
    qk = weight_of(w, k_val)
    if qk == 0.0:
        return PerKResult(k_val, lhs, 0.0, 0.0)
    rows = _all_row_sums(basis, 0.0, kern, threads)
    i2 = math.fsum(rows)
    visible = math.fsum(rows[: _count_upto(basis.n, basis.limit // k_val)])
    return PerKResult(k_val, lhs, qk * i2, qk * (i2 - visible))


def _count_upto(ns: np.ndarray, bound: int) -> int:
    return int(np.searchsorted(ns, bound, side="right")) if ns.dtype != object else sum(1 for v in ns if v <= bound)


# -- closed-form lower bound ---------------------------------------------------------


@dataclass(frozen=True)
class BoundSplit:
    """``prod (1 - q_p/p)^-1 = prod (1 - 1/p)^-1 * prod (p-1)/(p-q_p)``."""

    closed_form_bound: float
    mertens_part: float
    correction_part: float


def closed_form_bound(w: WeightSystem, primes: PrimeTable | None = None) -> BoundSplit:
    p = w.primes.astype(np.float64)
    q = w.q
    bound = math.exp(-math.fsum(np.log1p(-q / p)))
    mertens = math.exp(-math.fsum(np.log1p(-1.0 / p)))
    # (p-1)/(p-q) = 1 - (1-q)/(p-q)
    correction = math.exp(math.fsum(np.log1p(-(1.0 - q) / (p - q))))
    return BoundSplit(bound, mertens, correction)


def coefficient_sum(coeffs: ZetaCoefficients, w: WeightSystem, K: int | None = None) -> float:
    """Partial sum ``sum_{k <= K} a_k q_k``."""
    K = coeffs.limit if K is None else int(K)
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    qk = _coefficient_weights(coeffs, w)
    m = _count_upto(coeffs.k, K)
    return math.fsum(coeffs.a[:m] * qk[:m])


# -- reports ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MomentReport:
    I2: float
    I1: complex
    ratio: float
    coefficient_sum: float
    slack: float
    closed_form_bound: float
    mertens_part: float
    correction_part: float
    truncation_deficit: float
    coefficient_tail: float
    benchmark_theorem: float
    method: str
    X: float
    N: int
    K: int
    lam: float
    quad_error: float = 0.0

    @property
    def inequality_holds(self) -> bool:
        return self.ratio >= (self.coefficient_sum - self.slack) * (1 - 1e-12)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["I1"] = {"re": self.I1.real, "im": self.I1.imag}
        d["inequality_holds"] = self.inequality_holds
        return d


def benchmark_theorem(T: float) -> float:
    """``e^gamma (log log T + log log log T)``."""
    L2 = math.log(math.log(T))
    return math.exp(EULER_GAMMA) * (L2 + math.log(L2))


def full_report(
    cfg: ResonatorConfig,
    basis: SmoothBasis,
    coeffs: ZetaCoefficients,
    w: WeightSystem,
    kern: KernelSpec,
    primes: PrimeTable,
    method: str = "closed",
    threads: int = 1,
) -> MomentReport:
    """Compute ``I1``, ``I2`` and every term of the lower-bound chain."""
    _check_same_x(basis, coeffs)
    if w.X != basis.X:
        raise ConfigurationError(f"cutoff mismatch: weights X={w.X}, basis X={basis.X}")
    rows = _all_row_sums(basis, 0.0, kern, threads)
    i2 = math.fsum(rows)
    prefix = np.cumsum(rows)
    qk = _coefficient_weights(coeffs, w)
    quad_err = 0.0
    if method == "closed":
        i1 = complex(i1_closed(basis, coeffs, kern, threads))
        ratio_i2 = i2
    elif method == "quadrature":
        i1_re, e1 = i1_quadrature(basis, coeffs, kern)
        i2_q, e2 = i2_quadrature(basis, kern)
        i1 = complex(i1_re)
        ratio_i2 = i2_q
        quad_err = max(e1, e2)
    else:
        raise ConfigurationError(f"unknown method {method!r}")
    # slack_k = q_k * (I2 - sum of rows r <= N/k)
    slack_terms = []
    for kv, a, q in zip(coeffs.k, coeffs.a, qk):
        if q == 0.0:
            continue
        m = _count_upto(basis.n, basis.limit // int(kv))
        visible = prefix[m - 1] if m > 0 else 0.0
        slack_terms.append(a * q * max(0.0, i2 - visible))
    slack = math.fsum(slack_terms) / i2
    csum = math.fsum(coeffs.a * qk)
    split = closed_form_bound(w, primes)
    r0 = math.exp(log_r0(w))
    return MomentReport(
        I2=ratio_i2,
        I1=i1,
        ratio=i1.real / ratio_i2,
        coefficient_sum=csum,
        slack=slack,
        closed_form_bound=split.closed_form_bound,
        mertens_part=split.mertens_part,
        correction_part=split.correction_part,
        truncation_deficit=max(0.0, r0 - basis.mass()),
        coefficient_tail=max(0.0, split.closed_form_bound - csum),
        benchmark_theorem=benchmark_theorem(cfg.T),
        method=method,
        X=w.X,
        N=basis.limit,
        K=coeffs.limit,
        lam=kern.lam,
        quad_error=quad_err,
    )


@dataclass(frozen=True)
class RangeReport:
    """Quadrature of ``I1``, ``I2`` split by ``|t|`` into three ranges.

    ``inner``: ``|t| <= sqrt(T)``; ``middle``: ``sqrt(T) <= |t| <= T``;
    ``outer``: ``|t| >= T``. Shares are fractions of the quadrature total.
    """

    T: float
    I2_parts: dict
    I1_parts: dict
    I2_closed: float
    I1_closed: float
    quad_error: float

    @staticmethod
    def _shares(parts: dict) -> dict:
        total = math.fsum(parts.values())
        return {key: v / total for key, v in parts.items()}

    @property
    def I2_shares(self) -> dict:
        return self._shares(self.I2_parts)

    @property
    def I1_shares(self) -> dict:
        return self._shares(self.I1_parts)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["I2_shares"] = self.I2_shares
        d["I1_shares"] = self.I1_shares
        return d


MAX_QUADRATURE_T = 1e5


def range_decomposition(
    cfg: ResonatorConfig,
    basis: SmoothBasis,
    coeffs: ZetaCoefficients,
    primes: PrimeTable | None = None,
    points: int = 16,
) -> RangeReport:
    """Split the quadrature of ``I1`` and ``I2`` at ``|t| = sqrt(T)`` and ``|t| = T``."""
    _check_same_x(basis, coeffs)
    T = cfg.T
    if T > MAX_QUADRATURE_T:
        raise ResourceError(
            f"T={T:g} too large for quadrature (max {MAX_QUADRATURE_T:g}); use the closed-form mode"
        )
    kern = KernelSpec(cfg.lam)
    edges = {"inner": (0.0, math.sqrt(T)), "middle": (math.sqrt(T), T), "outer": (T, T + 10.0 / kern.lam)}
    bw2 = _bandwidth(basis)
    bw1 = _bandwidth(basis, coeffs)
    f2 = lambda t: np.square(np.abs(eval_series(basis, t)))
    f1 = lambda t: _coeff_series(coeffs, t) * np.square(np.abs(eval_series(basis, t)))
    i2_parts, i1_parts, err = {}, {}, 0.0
    for name, (a, b) in edges.items():
        r2 = quadrature(f2, kern, t_cut=b, lower=a, points=points, bandwidth=bw2)
        r1 = quadrature(f1, kern, t_cut=b, lower=a, points=points, bandwidth=bw1)
        i2_parts[name] = 2.0 * r2.value.real
        i1_parts[name] = 2.0 * r1.value.real
        err = max(err, 2.0 * r2.error, 2.0 * r1.error)
    return RangeReport(
        T=T,
        I2_parts=i2_parts,
        I1_parts=i1_parts,
        I2_closed=i2_closed(basis, kern),
        I1_closed=i1_closed(basis, coeffs, kern),
        quad_error=err,
    )

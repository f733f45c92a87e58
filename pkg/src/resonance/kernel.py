"""Gaussian damping kernel ``Phi(t) = exp(-t^2)`` and its Fourier transform.

With scale ``lam`` the weight is ``Phi(lam t)`` and

    phi_hat(xi) = int exp(-(lam t)^2) exp(-i xi t) dt = sqrt(pi)/lam * exp(-xi^2 / (4 lam^2)),

which is strictly positive for every real ``xi``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, EvaluationError, ResourceError

__all__ = ["KernelSpec", "QuadratureResult", "phi", "phi_hat", "log_phi_hat", "quadrature"]

SQRT_PI = math.sqrt(math.pi)
MAX_NODES = 40_000_000


@dataclass(frozen=True)
class KernelSpec:
    lam: float

    def __post_init__(self):
        if not self.lam > 0:
            raise DomainError(f"kernel scale must be positive, got {self.lam}")

    @property
    def default_cut(self) -> float:
        """Truncation point ``8/lam``; the Gaussian tail beyond it is below ``e^-64``."""
        return 8.0 / self.lam


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    error: float
    nodes: int


def phi(t):
    return np.exp(-np.square(t))


def phi_hat(xi, k: KernelSpec):
    """Fourier transform of ``t -> Phi(k.lam * t)`` at frequency ``xi``."""
    lam = k.lam
    return SQRT_PI / lam * np.exp(-np.square(xi) / (4.0 * lam * lam))


def log_phi_hat(xi, k: KernelSpec):
    """Natural log of :func:`phi_hat`, finite where the float value underflows.

    ``phi_hat`` rounds to 0.0 once ``|xi|`` exceeds about ``54.6 lam``; the
    log stays exact, which is how positivity is checked at large ``|xi|``.
    """
    lam = k.lam
    return math.log(SQRT_PI / lam) - np.square(xi) / (4.0 * lam * lam)


def _gauss_legendre_sum(f, a: float, b: float, panels: int, points: int, weight: Callable) -> complex:
    x, wts = np.polynomial.legendre.leggauss(points)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    partials = []
    per_chunk = max(1, 2**18 // points)
    for c in range(0, panels, per_chunk):
        t = (mid[c : c + per_chunk, None] + half[c : c + per_chunk, None] * x).reshape(-1)
        vals = np.asarray(f(t)) * weight(t)
        if not np.all(np.isfinite(vals)):
            raise EvaluationError("integrand produced a non-finite value")
        vals = vals.reshape(-1, points) * (half[c : c + per_chunk, None] * wts)
        partials.append(np.sum(vals))
    return complex(math.fsum(np.real(partials)), math.fsum(np.imag(partials)))


def quadrature(
    f: Callable[[np.ndarray], np.ndarray],
    k: KernelSpec,
    t_cut: float | None = None,
    points: int = 16,
    bandwidth: float = 1.0,
    lower: float | None = None,
    panels: int | None = None,
) -> QuadratureResult:
    """Composite Gauss-Legendre approximation of ``int f(t) Phi(lam t) dt``.

    Parameters
    ----------
    f : callable
        Vectorised integrand (the kernel weight is applied here, not in ``f``).
    k : KernelSpec
    t_cut : float, optional
        Integrate over ``[-t_cut, t_cut]``; defaults to ``8/lam``.
    points : int
        Gauss-Legendre nodes per panel, at least 2.
    bandwidth : float
        Largest angular frequency present in ``f``; sets the panel width.
    lower : float, optional
        Integrate over ``[lower, t_cut]`` instead of the symmetric interval.
    panels : int, optional
        Override the automatic panel count.

    Returns
    -------
    QuadratureResult
        ``error`` is the change between ``panels`` and ``2 * panels``; the
        finer value is returned.
    """
    if points < 2:
        raise DomainError(f"need at least 2 nodes per panel, got {points}")
    t_cut = k.default_cut if t_cut is None else float(t_cut)
    if not t_cut > 0:
        raise DomainError(f"t_cut must be positive, got {t_cut}")
    a = -t_cut if lower is None else float(lower)
    if not a < t_cut:
        raise DomainError(f"empty interval [{a}, {t_cut}]")
    if panels is None:
        width = min(1.0 / k.lam, 0.5 * points / max(bandwidth, 1e-300))
        panels = max(1, math.ceil((t_cut - a) / width))
    if 3 * panels * points > MAX_NODES:
        raise ResourceError(
            f"quadrature needs {3 * panels * points} nodes (> {MAX_NODES}); "
            "use the closed-form mode instead"
        )
    lam = k.lam
    weight = lambda t: np.exp(-np.square(lam * t))
    coarse = _gauss_legendre_sum(f, a, t_cut, panels, points, weight)
    fine = _gauss_legendre_sum(f, a, t_cut, 2 * panels, points, weight)
    return QuadratureResult(fine, abs(fine - coarse), 2 * panels * points)

"""Resonance-method toolkit for large values of zeta on the 1-line.

Submodules
----------
primes      prime tables, pi, theta, Mertens products
resonator   the Euler-product resonator, its weights and smooth-number basis
zeta_eval   Euler-Maclaurin zeta, truncated Euler products, eta cross-check
kernel      Gaussian kernel, closed-form transform, Gauss-Legendre quadrature
moments     smoothed moments I1, I2 and the lower-bound chain
hunter      resonator-guided search for large |zeta(1+it)|
verify      desk-scale invariant suite
cli         command-line entry point
"""
from .errors import (
    ConfigurationError,
    DomainError,
    EvaluationError,
    OutOfRangeError,
    PoleError,
    PrecisionError,
    ResonanceError,
    ResourceError,
)
from .kernel import KernelSpec, log_phi_hat, phi, phi_hat, quadrature
from .moments import (
    MomentReport,
    ZetaCoefficients,
    closed_form_bound,
    coefficient_sum,
    full_report,
    i1_closed,
    i2_closed,
    per_k_inequality,
    range_decomposition,
    zeta_coefficients,
)
from .primes import PrimeTable, chebyshev_theta, mertens_product, prime_pi, sieve, sup_log_bound
from .resonator import (
    ResonatorConfig,
    SmoothBasis,
    WeightSystem,
    build_smooth_basis,
    build_weights,
    eval_euler,
    eval_series,
    sup_bound_check,
    weight_of,
)
from .zeta_eval import ZetaValue, lemma1_deviation, zeta, zeta_truncated, zeta_via_eta

__version__ = "0.1.0"

"""
Smoothed moments and the lower-bound chain
==========================================

With a Gaussian weight both moments reduce to double sums over the smooth
basis with positive terms. Their ratio is at least the coefficient sum minus
a truncation slack, and the coefficient sum approaches a closed-form product.
"""

from resonance import (
    KernelSpec,
    ResonatorConfig,
    build_smooth_basis,
    build_weights,
    closed_form_bound,
    full_report,
    per_k_inequality,
    sieve,
    zeta_coefficients,
)

primes = sieve(100)
w = build_weights(ResonatorConfig(T=1e6, X=10), primes)
split = closed_form_bound(w)
print(f"closed form {split.closed_form_bound:.10f} = Mertens {split.mertens_part} x correction {split.correction_part:.8f}")

###############################################################################
# the chain at three kernel widths
coeffs = zeta_coefficients(w, 1000)
for N in (10**3, 10**4):
    basis = build_smooth_basis(w, N)
    for lam in (1.0, 0.5, 0.1):
        r = full_report(w.config, basis, coeffs, w, KernelSpec(lam), primes)
        print(f"N={N:>5} lam={lam}: I1/I2 = {r.ratio:.5f} >= {r.coefficient_sum:.5f} - slack {r.slack:.5f}"
              f"  [{'holds' if r.inequality_holds else 'FAILS'}]")

###############################################################################
# the step that uses q_{rk} = q_r q_k, one k at a time
basis = build_smooth_basis(w, 1000)
for k in (2, 6, 49, 11):
    r = per_k_inequality(basis, k, w, KernelSpec(0.5))
    print(f"k={k:3d}: lhs {r.lhs:10.3f}  q_k I2 {r.rhs:10.3f}  slack {r.slack:8.3f}  holds={r.holds}")

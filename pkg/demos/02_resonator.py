"""
The resonator as product and as series
======================================

R(t) is a finite Euler product with weights q_p = 1 - p/X. Expanding it gives
a Dirichlet series over X-smooth integers; truncating that series at N loses
exactly the mass R(0) - sum q_n, which bounds the gap at every t.
"""

import numpy as np

from resonance import ResonatorConfig, build_smooth_basis, build_weights, eval_euler, eval_series, sieve

primes = sieve(100)
w = build_weights(ResonatorConfig(T=1e6, X=10), primes)
print("prime weights:", w.prime_weights)
print("R(0) =", eval_euler(w, 0.0).real, "(1000/21 =", 1000 / 21, ")")

###############################################################################
# The tail mass bounds the series/product gap uniformly in t
t = np.linspace(1, 200, 2000)
R = eval_euler(w, t)
for N in (10, 100, 10**4, 10**8):
    basis = build_smooth_basis(w, N)
    tail = 1000 / 21 - basis.mass()
    gap = np.max(np.abs(eval_series(basis, t) - R))
    print(f"N={N:>9}: {len(basis):6d} terms, tail mass {tail:9.5f}, max gap on [1, 200] {gap:9.5f}")

###############################################################################
# |R| is largest where every phase t log p is near a multiple of 2 pi
best = t[np.argmax(np.abs(R))]
print(f"largest |R| on the grid at t={best:.2f}: {np.abs(R).max():.4f}")

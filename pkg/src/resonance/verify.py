"""Desk-scale verification suite run by ``resonance verify``.

Each check returns a :class:`CheckResult`; none raises on a failed property.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from .hunter import hunt, random_baseline
from .kernel import KernelSpec, log_phi_hat, phi_hat, quadrature
from .moments import (
    closed_form_bound,
    coefficient_sum,
    full_report,
    i2_closed,
    i2_quadrature,
    per_k_inequality,
    zeta_coefficients,
)
from .primes import EULER_GAMMA, mertens_product, prime_pi, sieve, sup_log_bound
from .resonator import (
    ResonatorConfig,
    build_smooth_basis,
    build_weights,
    eval_euler,
    sup_bound_check,
    weight_of,
)
from .zeta_eval import lemma1_deviation, zeta, zeta_via_eta


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return asdict(self)


def _weights(X: float, primes=None):
    primes = primes if primes is not None else sieve(max(2, math.ceil(X)))
    return build_weights(ResonatorConfig(T=1e6, X=X), primes), primes


def check_bound_identity(seed: int) -> CheckResult:
    worst = 0.0
    P = sieve(10**4)
    for X in (10, 1e2, 1e3, 1e4):
        s = closed_form_bound(_weights(X, P)[0])
        worst = max(worst, abs(s.closed_form_bound / (s.mertens_part * s.correction_part) - 1))
    return CheckResult("bound_identity", worst <= 1e-12, f"max relative error {worst:.3g}")


def check_mertens(seed: int) -> CheckResult:
    P = sieve(10**6)
    eg = math.exp(EULER_GAMMA)
    gaps = [abs(mertens_product(P, X) - eg * math.log(X)) for X in (1e2, 1e3, 1e4, 1e5, 1e6)]
    return CheckResult("mertens_envelope", max(gaps) <= 1.0, f"max |gap| {max(gaps):.4g}")


def check_correction(seed: int) -> CheckResult:
    P = sieve(10**6)
    ratios = []
    for X in (1e2, 1e3, 1e4, 1e5, 1e6):
        s = closed_form_bound(_weights(X, P)[0])
        ratios.append(-math.log(s.correction_part) / (prime_pi(P, X) / X))
    return CheckResult("correction_product", max(ratios) <= 5.0, f"max ratio to pi(X)/X {max(ratios):.4g}")


def check_inequality_chain(seed: int) -> CheckResult:
    w, _ = _weights(10)
    basis = build_smooth_basis(w, 1000)
    coeffs = zeta_coefficients(w, 1000)
    ok = True
    notes = []
    for lam in (1.0, 0.5, 0.1):
        kern = KernelSpec(lam)
        r = full_report(w.config, basis, coeffs, w, kern, None)
        ok &= r.inequality_holds
        notes.append(f"lam={lam}: {r.ratio:.6g} >= {r.coefficient_sum:.6g} - {r.slack:.3g}")
        for k in (int(v) for v in coeffs.k if v <= 100):
            ok &= per_k_inequality(basis, k, w, kern).holds
    return CheckResult("inequality_chain", bool(ok), "; ".join(notes))


def check_closed_vs_quadrature(seed: int) -> CheckResult:
    w, _ = _weights(10)
    basis = build_smooth_basis(w, 200)
    worst = 0.0
    for lam in (1.0, 0.5):
        k = KernelSpec(lam)
        c = i2_closed(basis, k)
        q, _ = i2_quadrature(basis, k)
        worst = max(worst, abs(q / c - 1))
    return CheckResult("i2_closed_vs_quadrature", worst <= 1e-6, f"max relative gap {worst:.3g}")


def check_multiplicativity(seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    w, _ = _weights(10)
    smooth = build_smooth_basis(w, 30000).n
    worst = 0.0
    for _ in range(10_000):
        if rng.random() < 0.5:
            m, n = (int(v) for v in rng.choice(smooth, 2))
        else:
            m, n = (int(v) for v in rng.integers(1, 30000, 2))
        qm, qn, qmn = weight_of(w, m), weight_of(w, n), weight_of(w, m * n)
        ref = qm * qn
        if ref == 0:
            worst = max(worst, abs(qmn))
        else:
            worst = max(worst, abs(qmn - ref) / ref)
    return CheckResult("multiplicativity", worst <= 1e-12, f"max relative error {worst:.3g}")


def check_kernel(seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    k = KernelSpec(1.0)
    xi = rng.uniform(-1e3 / k.lam, 1e3 / k.lam, 10_000)
    log_vals = log_phi_hat(xi, k)
    vals = phi_hat(xi, k)
    # strictly positive wherever the value is representable, finite log everywhere
    representable = log_vals > math.log(np.finfo(float).tiny)
    positive = bool(np.all(np.isfinite(log_vals)) and np.all(vals >= 0) and np.all(vals[representable] > 0))
    worst = 0.0
    for x in rng.uniform(-20, 20, 100):
        res = quadrature(lambda t: np.exp(-1j * x * t), k, bandwidth=abs(x) + 1)
        worst = max(worst, abs(res.value - phi_hat(x, k)))
    return CheckResult("kernel", positive and worst <= 1e-8, f"positive={positive}, max quadrature gap {worst:.3g}")


def check_zeta(seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    e2 = abs(zeta(2).value - math.pi**2 / 6)
    worst = 0.0
    for t in rng.uniform(-1e4, 1e4, 100):
        s = complex(1.0, t)
        worst = max(worst, abs(zeta(s).value - zeta_via_eta(s)))
    return CheckResult("zeta_evaluator", e2 <= 1e-12 and worst <= 1e-10, f"zeta(2) err {e2:.3g}, eta gap {worst:.3g}")


def check_lemma1(seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    T = 1e4
    P = sieve(10**5)
    devs = np.array([lemma1_deviation(t, T, [1e2, 1e5], P) for t in rng.uniform(T**0.1, T, 20)])
    lo, hi = devs.mean(axis=0)
    return CheckResult("lemma1_trend", hi < lo, f"mean deviation Y=1e2: {lo:.4g}, Y=1e5: {hi:.4g}")


def check_sup_bound(seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    cfg = ResonatorConfig(T=1e12)
    P = sieve(100)
    w = build_weights(cfg, P)
    bound = sup_log_bound(P, cfg.X)
    logs = np.log(np.abs(eval_euler(w, rng.uniform(-1e6, 1e6, 1000))))
    exponent = sup_bound_check(w, P)
    ok = bool(np.all(logs <= bound + 1e-12)) and abs(exponent - 1 / 3) <= 0.2
    return CheckResult("sup_bound", ok, f"max log|R| {logs.max():.6g} <= {bound:.6g}; exponent at T=1e12 {exponent:.4g}")


def check_hunter(seed: int) -> CheckResult:
    # reduced scale; the full-size comparison lives in the acceptance tests
    T, budget = 1e5, 300
    cfg = ResonatorConfig(T=T)
    wins = 0
    for s in range(seed, seed + 3):
        best = hunt(cfg, budget, seed=s)[0].zeta_abs
        wins += best >= random_baseline(T, budget, seed=s).max()
    return CheckResult("hunter_dominance", wins == 3, f"hunter >= random on {wins}/3 seeds (T=1e5, budget 300)")


CHECKS: list[Callable[[int], CheckResult]] = [
    check_bound_identity,
    check_mertens,
    check_correction,
    check_inequality_chain,
    check_closed_vs_quadrature,
    check_multiplicativity,
    check_kernel,
    check_zeta,
    check_lemma1,
    check_sup_bound,
    check_hunter,
]


def run_suite(seed: int = 0) -> list[CheckResult]:
    return [check(seed) for check in CHECKS]

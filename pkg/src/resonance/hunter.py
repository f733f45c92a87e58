"""Resonator-guided search for large values of ``|zeta(1+it)|``.

``log|R(t)|`` peaks where the phases ``t log p`` of the small primes are close
to multiples of ``2 pi``, which is also where the Euler product of zeta tends
to be large. The search scores a fine grid, keeps the highest local maxima,
polishes them with a safeguarded Newton iteration on the analytic derivative
and evaluates zeta only there. None of this is needed by the averaging
argument behind the lower bound; it is a heuristic built on the same object.
"""
from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import DomainError
from .primes import EULER_GAMMA, PrimeTable
from .resonator import ResonatorConfig, WeightSystem, build_weights
from .zeta_eval import zeta_abs_many

__all__ = [
    "HuntRecord",
    "score",
    "score_derivatives",
    "default_grid_step",
    "find_peaks",
    "hunt",
    "random_baseline",
    "benchmarks",
]

log = logging.getLogger(__name__)

GRADIENT_TOL = 1e-8
HUNT_ZETA_ERROR = 1e-8


@dataclass(frozen=True)
class HuntRecord:
    t: float
    log_abs_R: float
    zeta_abs: float
    benchmark_levinson: float
    benchmark_theorem: float
    budget_used: int

    def to_dict(self) -> dict:
        return asdict(self)


def _terms(w: WeightSystem, t: np.ndarray):
    theta = np.multiply.outer(t, w.logs)
    c, s = np.cos(theta), np.sin(theta)
    q = w.q
    D = 1.0 - 2.0 * q * c + q * q
    return q, c, s, D


def score(w: WeightSystem, t):
    """``log|R(t)| = -1/2 sum_p log(1 - 2 q_p cos(t log p) + q_p^2)``."""
    t_arr = np.asarray(t, dtype=np.float64)
    flat = t_arr.reshape(-1)
    out = np.empty(flat.size)
    chunk = max(1, 2**20 // max(1, len(w.q)))
    for a in range(0, flat.size, chunk):
        _, _, _, D = _terms(w, flat[a : a + chunk])
        out[a : a + chunk] = -0.5 * np.log(D).sum(axis=1)
    return float(out[0]) if t_arr.ndim == 0 else out.reshape(t_arr.shape)


def score_derivatives(w: WeightSystem, t):
    """First and second derivative of :func:`score`."""
    t = np.asarray(t, dtype=np.float64)
    q, c, s, D = _terms(w, t.reshape(-1))
    L = w.logs
    d1 = -(q * L * s / D).sum(axis=1)
    d2 = -(q * L * L * (c * D - 2.0 * q * s * s) / (D * D)).sum(axis=1)
    return d1.reshape(t.shape), d2.reshape(t.shape)


def default_grid_step() -> float:
    """Period of the fastest-turning phase, ``2 pi / log 2``, over 64."""
    return 2.0 * math.pi / math.log(2.0) / 64.0


def _refine(w: WeightSystem, t0: np.ndarray, h: float, iters: int) -> tuple[np.ndarray, np.ndarray]:
    """Newton on ``score'`` inside a sign-change bracket, bisecting when Newton strays."""
    a = t0 - h
    b = t0 + h
    da, _ = score_derivatives(w, a)
    db, _ = score_derivatives(w, b)
    d0, _ = score_derivatives(w, t0)
    # pick a bracket [a, b] with score' > 0 at a and < 0 at b
    left = (da > 0) & (d0 < 0)
    right = (d0 > 0) & (db < 0)
    a = np.where(right, t0, a)
    b = np.where(left, t0, b)
    ok = left | right | ((da > 0) & (db < 0))
    t = np.where(ok, 0.5 * (a + b), t0)
    for _ in range(iters):
        d1, d2 = score_derivatives(w, t)
        pos = d1 > 0
        a = np.where(ok & pos, t, a)
        b = np.where(ok & ~pos, t, b)
        newton = t - d1 / np.where(d2 < 0, d2, -1.0)
        good = (d2 < 0) & (newton > a) & (newton < b)
        t_next = np.where(good, newton, 0.5 * (a + b))
        t = np.where(ok, t_next, t)
        if np.all(np.abs(d1[ok]) <= GRADIENT_TOL * 0.01):
            break
    d1, _ = score_derivatives(w, t)
    return t, ok & (np.abs(d1) <= GRADIENT_TOL)


def find_peaks(
    w: WeightSystem,
    rng_bounds: tuple[float, float],
    grid_step: float | None = None,
    refine_iters: int = 80,
    top_k: int = 10,
    seed: int = 0,
) -> list[float]:
    """Highest local maxima of :func:`score` in ``[lo, hi]``, best first.

    The grid starts at a seeded random offset in ``[lo, lo + step)``, so the
    result is deterministic for a fixed seed.
    """
    lo, hi = map(float, rng_bounds)
    if not (0 < lo < hi):
        raise DomainError(f"need 0 < lo < hi, got [{lo}, {hi}]")
    step = default_grid_step() if grid_step is None else float(grid_step)
    if not step > 0:
        raise DomainError(f"grid step must be positive, got {step}")
    if top_k <= 0:
        return []
    rng = np.random.default_rng(seed)
    start = lo + rng.uniform(0.0, step)
    n = int((hi - start) // step) + 1
    cand_t, cand_s = [], []
    # scan in blocks overlapping by one point so no interior maximum is lost
    block = 1 << 20
    keep = 4 * top_k
    for b0 in range(0, n, block):
        idx = np.arange(max(b0 - 1, 0), min(b0 + block + 1, n))
        ts = start + idx * step
        sc = score(w, ts)
        inner = np.flatnonzero((sc[1:-1] > sc[:-2]) & (sc[1:-1] >= sc[2:])) + 1
        if inner.size > keep:
            inner = inner[np.argpartition(-sc[inner], keep - 1)[:keep]]
        cand_t.append(ts[inner])
        cand_s.append(sc[inner])
    ct = np.concatenate(cand_t) if cand_t else np.zeros(0)
    cs = np.concatenate(cand_s) if cand_s else np.zeros(0)
    if ct.size > keep:
        sel = np.argpartition(-cs, keep - 1)[:keep]
        ct = ct[sel]
    if ct.size == 0:
        return []
    t_ref, ok = _refine(w, ct, step, refine_iters)
    t_ref = t_ref[ok & (t_ref >= lo) & (t_ref <= hi)]
    if t_ref.size == 0:
        return []
    s_ref = score(w, t_ref)
    # neighbouring grid maxima can converge to the same peak
    order = np.lexsort((t_ref, -s_ref))
    chosen: list[float] = []
    taken = np.zeros(0)
    for i in order:
        if taken.size and np.min(np.abs(taken - t_ref[i])) < step / 2:
            continue
        chosen.append(float(t_ref[i]))
        taken = np.append(taken, t_ref[i])
        if len(chosen) == top_k:
            break
    return chosen


def benchmarks(t: float) -> tuple[float, float]:
    """``e^gamma log log t`` and ``e^gamma (log log t + log log log t)``."""
    L2 = math.log(math.log(t))
    eg = math.exp(EULER_GAMMA)
    return eg * L2, eg * (L2 + math.log(L2))


def hunt(
    cfg: ResonatorConfig,
    budget: int,
    seed: int = 0,
    primes: PrimeTable | None = None,
    top_k: int | None = None,
    grid_step: float | None = None,
    threads: int = 1,
) -> list[HuntRecord]:
    """Evaluate ``|zeta(1+it)|`` at resonator peaks in ``[sqrt(T), T]``.

    ``budget`` caps the number of zeta evaluations. Records come back sorted
    by ``zeta_abs``, largest first.
    """
    if budget < 1:
        raise DomainError(f"budget must be >= 1, got {budget}")
    from .primes import sieve

    primes = primes if primes is not None else sieve(max(2, math.ceil(cfg.X)))
    w = build_weights(cfg, primes)
    k = budget if top_k is None else min(top_k, budget)
    peaks = find_peaks(w, (math.sqrt(cfg.T), cfg.T), grid_step=grid_step, top_k=k, seed=seed)
    if not peaks:
        log.warning("no resonator peaks found in [%g, %g]", math.sqrt(cfg.T), cfg.T)
        return []
    ts = np.array(peaks)
    z = zeta_abs_many(ts, target_error=HUNT_ZETA_ERROR, threads=threads)
    lr = score(w, ts)
    records = []
    for t, zab, l in zip(ts, z, lr):
        lev, thm = benchmarks(t)
        records.append(HuntRecord(float(t), float(l), float(zab), lev, thm, len(ts)))
    records.sort(key=lambda r: (-r.zeta_abs, r.t))
    return records


def random_baseline(T: float, budget: int, seed: int = 0, threads: int = 1) -> np.ndarray:
    """``|zeta(1+it)|`` at ``budget`` uniform random heights in ``[sqrt(T), T]``."""
    rng = np.random.default_rng(seed)
    ts = rng.uniform(math.sqrt(T), T, budget)
    return zeta_abs_many(ts, target_error=HUNT_ZETA_ERROR, threads=threads)

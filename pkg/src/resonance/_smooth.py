"""Enumeration of smooth numbers and fast evaluation of ``n^{it}`` over them.

Each enumerated ``n > 1`` records a *parent* ``n / p`` (also enumerated) and
the prime ``p``, so that ``n^{it} = parent^{it} * p^{it}`` costs one complex
multiply per entry once the prime phases are known.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import ResourceError

DEFAULT_BUDGET = 2_000_000


def enumerate_smooth(primes: Sequence[int], limit: int, budget: int = DEFAULT_BUDGET):
    """All integers ``1 <= n <= limit`` whose prime factors lie in ``primes``.

    Returns ``(ns, parent, prime_index)`` sorted by ``n``; ``parent[0]`` and
    ``prime_index[0]`` are -1 for ``n = 1``.
    """
    primes = [int(p) for p in primes]
    limit = int(limit)
    ns = [1]
    parent = [-1]
    pidx = [-1]
    # every n is generated once, as a nondecreasing product of primes
    start = [0]
    i = 0
    while i < len(ns):
        n = ns[i]
        for j in range(start[i], len(primes)):
            m = n * primes[j]
            if m > limit:
                break
            ns.append(m)
            parent.append(i)
            pidx.append(j)
            start.append(j)
            if len(ns) > budget:
                raise ResourceError(
                    f"smooth enumeration up to {limit} exceeds budget of {budget} entries"
                )
        i += 1
    order = sorted(range(len(ns)), key=ns.__getitem__)
    rank = np.empty(len(ns), dtype=np.int64)
    rank[order] = np.arange(len(ns))
    ns_sorted = [ns[k] for k in order]
    parent_sorted = np.array([rank[parent[k]] if parent[k] >= 0 else -1 for k in order], dtype=np.int64)
    pidx_sorted = np.array([pidx[k] for k in order], dtype=np.int64)
    return ns_sorted, parent_sorted, pidx_sorted


def restrict(ns, parent, pidx, keep: np.ndarray):
    """Subset of an enumeration that stays closed under taking parents."""
    keep = np.asarray(keep, dtype=bool)
    idx = np.flatnonzero(keep)
    new_pos = np.full(len(ns), -1, dtype=np.int64)
    new_pos[idx] = np.arange(len(idx))
    par = parent[idx]
    if np.any((par >= 0) & (new_pos[np.maximum(par, 0)] < 0)):
        raise ValueError("restriction is not closed under parents")
    new_parent = np.where(par >= 0, new_pos[np.maximum(par, 0)], -1)
    return [ns[k] for k in idx], new_parent, pidx[idx]


def as_int_array(ns: list) -> np.ndarray:
    if ns and ns[-1] >= 2**62:
        return np.array(ns, dtype=object)
    return np.array(ns, dtype=np.int64)


def log_of(ns: list) -> np.ndarray:
    return np.array([math.log(n) for n in ns], dtype=np.float64)


def phases(parent: np.ndarray, pidx: np.ndarray, prime_logs: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Matrix ``Z[i, j] = n_i^{i t_j}`` built multiplicatively (entries x points)."""
    t = np.asarray(t, dtype=np.float64).reshape(-1)
    pz = np.exp(1j * np.multiply.outer(prime_logs, t))
    z = np.empty((len(parent), t.size), dtype=np.complex128)
    z[0] = 1.0
    for i in range(1, len(parent)):
        np.multiply(z[parent[i]], pz[pidx[i]], out=z[i])
    return z

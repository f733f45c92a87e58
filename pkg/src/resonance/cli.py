"""Command-line entry point: ``resonance <command> [options]``.

Exit codes: 0 success, 1 a verification item failed, 2 usage error,
3 resource or configuration error. Structured output goes to stdout,
diagnostics to stderr. Option precedence is flags > ``--config`` file > defaults.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import _serialize
from .errors import ConfigurationError, DomainError, ResourceError
from .hunter import hunt
from .kernel import KernelSpec
from .moments import full_report, zeta_coefficients
from .primes import chebyshev_theta, mertens_product, prime_pi, sieve, sup_log_bound
from .resonator import (
    ResonatorConfig,
    build_smooth_basis,
    build_weights,
    eval_euler,
    eval_series,
)
from .zeta_eval import lemma1_deviation, zeta, zeta_truncated

COMMANDS = ("primes", "resonator", "zeta", "lemma1", "moments", "verify", "hunt")
NEEDS_T = {"resonator", "lemma1", "moments", "hunt"}
HUNT_HEADER = ("t", "log_abs_R", "zeta_abs", "benchmark_levinson", "benchmark_theorem")

DEFAULTS = {
    "seed": 0,
    "threads": None,
    "format": None,
    "limit": None,
    "at": None,
    "sigma": 1.0,
    "t": None,
    "cutoff": None,
    "target_error": 1e-12,
    "samples": 20,
    "cutoffs": "1e2,1e3,1e4,1e5",
    "x_override": None,
    "y_override": None,
    "smooth_limit": None,
    "coeff_limit": 1000,
    "lambda": None,
    "method": "closed",
    "budget": 1000,
    "top_k": None,
    "log_file": "resonance-hunt.log",
}


@dataclass
class RunConfig:
    command: str
    T: float | None = None
    overrides: dict = field(default_factory=dict)
    output_format: str = "json"
    seed: int = 0
    threads: int = 1
    options: dict = field(default_factory=dict)

    def hashable(self) -> dict:
        d = asdict(self)
        d.pop("threads")
        d["options"] = {k: v for k, v in self.options.items() if k != "log_file"}
        return d


class UsageError(Exception):
    pass


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in str(text).split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int)
    common.add_argument("--threads", type=int)
    common.add_argument("--format", choices=("json", "csv"))
    common.add_argument("--config", help="JSON file of option defaults")

    parser = argparse.ArgumentParser(prog="resonance", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("primes", parents=[common], help="pi, theta, Mertens product, sup bound")
    p.add_argument("--limit", type=int)
    p.add_argument("--at", type=str)

    p = sub.add_parser("resonator", parents=[common], help="evaluate R(t)")
    p.add_argument("--T", type=float)
    p.add_argument("--at", type=str)
    p.add_argument("--x-override", type=float)
    p.add_argument("--smooth-limit", type=int)

    p = sub.add_parser("zeta", parents=[common], help="evaluate zeta(sigma + it)")
    p.add_argument("--sigma", type=float)
    p.add_argument("--t", type=str)
    p.add_argument("--cutoff", type=float)
    p.add_argument("--target-error", type=float)

    p = sub.add_parser("lemma1", parents=[common], help="Euler-product deviation vs cutoff")
    p.add_argument("--T", type=float)
    p.add_argument("--samples", type=int)
    p.add_argument("--cutoffs", type=str)

    p = sub.add_parser("moments", parents=[common], help="I1, I2 and the lower-bound chain")
    p.add_argument("--T", type=float)
    p.add_argument("--x-override", type=float)
    p.add_argument("--y-override", type=float)
    p.add_argument("--smooth-limit", type=int)
    p.add_argument("--coeff-limit", type=int)
    p.add_argument("--lambda", type=float, dest="lambda")
    p.add_argument("--method", choices=("closed", "quadrature"))

    sub.add_parser("verify", parents=[common], help="run the invariant suite")

    p = sub.add_parser("hunt", parents=[common], help="resonator-guided search for large |zeta(1+it)|")
    p.add_argument("--T", type=float)
    p.add_argument("--budget", type=int)
    p.add_argument("--top-k", type=int)
    p.add_argument("--log-file", type=str)
    return parser


def parse_args(argv: list[str] | None = None) -> RunConfig:
    """Parse ``argv`` into a validated :class:`RunConfig`; usage errors exit with code 2."""
    parser = _build_parser()
    ns = vars(parser.parse_args(argv))
    command = ns.pop("command")
    config_path = ns.pop("config", None)
    file_opts = {}
    if config_path:
        try:
            with open(config_path) as fh:
                file_opts = {k.replace("-", "_"): v for k, v in json.load(fh).items()}
        except (OSError, ValueError) as exc:
            parser.error(f"cannot read config file: {exc}")
    merged = {}
    for key in set(ns) | set(file_opts):
        if ns.get(key) is not None:
            merged[key] = ns[key]
        elif file_opts.get(key) is not None:
            merged[key] = file_opts[key]
    for key, val in DEFAULTS.items():
        merged.setdefault(key, val)

    T = merged.pop("T", None)
    if command in NEEDS_T and T is None:
        parser.error(f"{command} requires --T")
    if command == "primes" and merged.get("limit") is None:
        parser.error("primes requires --limit")
    if command == "zeta" and merged.get("t") is None:
        parser.error("zeta requires --t")
    threads = merged.pop("threads")
    if threads is None:
        threads = int(os.environ.get("RESONANCE_THREADS", "1") or 1)
    fmt = merged.pop("format") or ("csv" if command in ("hunt", "lemma1") else "json")
    overrides = {
        "X": merged.pop("x_override"),
        "Y": merged.pop("y_override"),
        "N": merged.pop("smooth_limit"),
        "K": merged.pop("coeff_limit"),
        "lambda": merged.pop("lambda"),
    }
    seed = int(merged.pop("seed"))
    try:
        for key in ("at", "t", "cutoffs"):
            if merged.get(key) is not None:
                merged[key] = _floats(merged[key])
        cfg = RunConfig(command, None if T is None else float(T), overrides, fmt, seed, max(1, int(threads)), merged)
    except UsageError as exc:
        parser.error(str(exc))
    return cfg


def _resonator_config(cfg: RunConfig) -> ResonatorConfig:
    o = cfg.overrides
    return ResonatorConfig(T=cfg.T, X=o.get("X"), Y=o.get("Y"), lam=o.get("lambda"), smooth_limit=o.get("N") or 10_000)


def _prime_table(x: float):
    return sieve(max(2, math.ceil(x)))


def _write(cfg: RunConfig, payload: dict, rows_key: str | None = None, header=None) -> None:
    if cfg.output_format == "csv":
        if rows_key is not None:
            rows = payload[rows_key]
            if header is None:
                header = list(rows[0].keys()) if rows else []
            sys.stdout.write(_serialize.csv_lines(header, ([r[h] for h in header] for r in rows)))
        else:
            flat = [(k, v) for k, v in payload.items() if not isinstance(v, (dict, list))]
            sys.stdout.write(_serialize.csv_lines(("key", "value"), flat))
    else:
        sys.stdout.write(_serialize.dumps(payload) + "\n")


def _cmd_primes(cfg: RunConfig) -> int:
    limit = cfg.options["limit"]
    table = sieve(limit)
    rows = []
    for x in cfg.options.get("at") or [limit]:
        rows.append({
            "x": x,
            "limit": limit,
            "pi": prime_pi(table, x),
            "theta": chebyshev_theta(table, x),
            "mertens": mertens_product(table, x) if x >= 2 else None,
            "sup_log_bound": sup_log_bound(table, x) if x >= 2 else None,
        })
    _write(cfg, {"config_hash": _serialize.config_hash(cfg.hashable()), "points": rows}, "points",
           ["x", "limit", "pi", "theta", "mertens", "sup_log_bound"])
    return 0


def _cmd_resonator(cfg: RunConfig) -> int:
    rc = _resonator_config(cfg)
    P = _prime_table(rc.X)
    w = build_weights(rc, P)
    ts = np.array(cfg.options.get("at") or [0.0])
    if cfg.overrides.get("N"):
        values = eval_series(build_smooth_basis(w, rc.smooth_limit), ts)
    else:
        values = eval_euler(w, ts)
    bound = sup_log_bound(P, rc.X) if rc.X >= 2 else 0.0
    rows = [{
        "t": float(t),
        "re": float(v.real),
        "im": float(v.imag),
        "abs": float(abs(v)),
        "log_abs": float(math.log(abs(v))),
        "sup_log_bound": bound,
    } for t, v in zip(ts, values)]
    _write(cfg, {"config_hash": _serialize.config_hash(cfg.hashable()), "X": rc.X, "points": rows}, "points",
           ["t", "re", "im", "abs", "log_abs", "sup_log_bound"])
    return 0


def _cmd_zeta(cfg: RunConfig) -> int:
    sigma = cfg.options["sigma"]
    cutoff = cfg.options.get("cutoff")
    table = _prime_table(cutoff) if cutoff else None
    rows = []
    for t in cfg.options["t"]:
        s = complex(sigma, t)
        z = zeta(s, cfg.options["target_error"])
        row = {"sigma": sigma, "t": t, "re": z.value.real, "im": z.value.imag, "abs": abs(z.value), "est_error": z.est_error}
        if table is not None:
            zt = zeta_truncated(s, cutoff, table)
            row.update(cutoff=cutoff, euler_re=zt.value.real, euler_im=zt.value.imag, euler_abs=abs(zt.value))
        rows.append(row)
    _write(cfg, {"config_hash": _serialize.config_hash(cfg.hashable()), "points": rows}, "points")
    return 0


def _cmd_lemma1(cfg: RunConfig) -> int:
    T = cfg.T
    cutoffs = sorted(cfg.options["cutoffs"])
    table = _prime_table(max(cutoffs))
    rng = np.random.default_rng(cfg.seed)
    rows = []
    for t in rng.uniform(T**0.1, T, int(cfg.options["samples"])):
        for Y, dev in zip(cutoffs, lemma1_deviation(float(t), T, cutoffs, table)):
            rows.append({"t": float(t), "Y": Y, "deviation": dev})
    _write(cfg, {"config_hash": _serialize.config_hash(cfg.hashable()), "T": T, "rows": rows}, "rows", ["t", "Y", "deviation"])
    return 0


def _cmd_moments(cfg: RunConfig) -> int:
    rc = _resonator_config(cfg)
    P = _prime_table(rc.X)
    w = build_weights(rc, P)
    basis = build_smooth_basis(w, rc.smooth_limit)
    coeffs = zeta_coefficients(w, cfg.overrides.get("K") or DEFAULTS["coeff_limit"])
    report = full_report(rc, basis, coeffs, w, KernelSpec(rc.lam), P, method=cfg.options["method"], threads=cfg.threads)
    payload = {"config_hash": _serialize.config_hash(cfg.hashable()), "T": rc.T, **report.to_dict()}
    _write(cfg, payload)
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    from .verify import CHECKS

    results = []
    for check in CHECKS:
        res = check(cfg.seed)
        print(f"[{'PASS' if res.passed else 'FAIL'}] {res.name}: {res.detail}", file=sys.stderr)
        results.append(res.to_dict())
    passed = all(r["passed"] for r in results)
    _write(cfg, {"config_hash": _serialize.config_hash(cfg.hashable()), "passed": passed, "items": results}, "items")
    return 0 if passed else 1


def _cmd_hunt(cfg: RunConfig) -> int:
    rc = _resonator_config(cfg)
    budget = int(cfg.options["budget"])
    records = hunt(rc, budget, seed=cfg.seed, top_k=cfg.options.get("top_k"), threads=cfg.threads)
    digest = _serialize.config_hash(cfg.hashable())
    rows = [r.to_dict() for r in records]
    if cfg.output_format == "csv":
        sys.stdout.write(_serialize.csv_lines(HUNT_HEADER, ([r[h] for h in HUNT_HEADER] for r in rows)))
    else:
        _write(cfg, {"config_hash": digest, "records": rows})
    log_file = cfg.options.get("log_file")
    if log_file:
        entry = {
            "config_hash": digest,
            "config": cfg.hashable(),
            "time": time.strftime("%Y-%m-%dT%H:%M:%S"),
            "records": len(rows),
            "best": rows[0] if rows else None,
        }
        with open(log_file, "a") as fh:
            fh.write(_serialize.dumps(entry, indent=0).replace("\n", "") + "\n")
    if not records:
        print("warning: no candidates found", file=sys.stderr)
    return 0


_DISPATCH = {
    "primes": _cmd_primes,
    "resonator": _cmd_resonator,
    "zeta": _cmd_zeta,
    "lemma1": _cmd_lemma1,
    "moments": _cmd_moments,
    "verify": _cmd_verify,
    "hunt": _cmd_hunt,
}


def run(cfg: RunConfig) -> int:
    """Execute a parsed configuration and return the process exit code."""
    try:
        return _DISPATCH[cfg.command](cfg)
    except (ResourceError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="%(levelname)s: %(message)s")
    return run(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: `verify` (invariant battery), `optimize` (multi-start search,
JSON output), `sweep` (error grids, CSV output), `branch-law` (axis-angle
law fit, CSV rows plus a JSON fit summary on stdout) and `liealg`
(symmetry/controllability dimensions, JSON output).

All numbers are emitted with shortest formatting capped at 12 significant
digits, CSV uses LF line endings, and JSON key order is fixed, so repeated
runs with identical configuration are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import convert, operators, robustness, symmetry, verify
from .pulses import Direction

__all__ = ["main"]

_DEFAULTS = {
    "phi": 0.0,
    "direction": "w2ghz",
    "seed": 0,
    "restarts": 32,
    "count": None,
    "format": None,
    "axes": None,
    "range": None,
    "out": None,
    "degrees": False,
}


def _fmt(x) -> str:
    """Shortest numeric formatting capped at 12 significant digits."""
    return format(float(x), ".12g")


def _json_dumps(obj) -> str:
    """Deterministic JSON with insertion key order and .12g floats."""
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(k)}: {_json_dumps(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json_dumps(v) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _merge_job(args: argparse.Namespace) -> dict:
    """Resolve option values: explicit flags beat the job file beat defaults."""
    job = {}
    if args.job is not None:
        with open(args.job, encoding="utf-8") as fh:
            job = json.load(fh)
        if not isinstance(job, dict):
            raise ValueError("job file must contain a JSON object")
    cfg = {}
    for key, default in _DEFAULTS.items():
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            cfg[key] = flag_value
        elif key in job:
            cfg[key] = job[key]
        else:
            cfg[key] = default
    if cfg["degrees"]:
        cfg["phi"] = float(cfg["phi"]) * np.pi / 180.0
    return cfg


def _parse_ranges(raw: str, n_axes: int) -> list[tuple[float, float]]:
    parts = raw.split(",")
    if len(parts) == 1:
        parts = parts * n_axes
    if len(parts) != n_axes:
        raise ValueError(f"got {len(parts)} ranges for {n_axes} axes")
    out = []
    for part in parts:
        lo_hi = part.split(":")
        if len(lo_hi) != 2:
            raise ValueError(f"range must look like min:max, got {part!r}")
        lo, hi = float(lo_hi[0]), float(lo_hi[1])
        if not lo < hi:
            raise ValueError(f"range needs min < max, got {part!r}")
        out.append((lo, hi))
    return out


def _parse_counts(raw, n_axes: int) -> list[int]:
    parts = str(raw).split(",")
    if len(parts) == 1:
        parts = parts * n_axes
    if len(parts) != n_axes:
        raise ValueError(f"got {len(parts)} counts for {n_axes} axes")
    counts = [int(p) for p in parts]
    for c in counts:
        if c < 2:
            raise ValueError("grid counts must be at least 2")
    return counts


def _cmd_verify(args) -> int:
    failures = 0
    for result in verify.run_all():
        status = "PASS" if result.passed else "FAIL"
        print(f"{result.name}: {result.detail} {status}")
        failures += 0 if result.passed else 1
    total = len(verify.ALL_CHECKS)
    print(f"{total - failures}/{total} checks passed")
    return 0 if failures == 0 else 1


def _cmd_optimize(args) -> int:
    cfg = _merge_job(args)
    if cfg["format"] not in (None, "json"):
        print("optimize emits JSON; use --format json", file=sys.stderr)
        return 2
    direction = Direction.from_label(cfg["direction"])
    results = convert.optimize(float(cfg["phi"]), direction,
                               seed=int(cfg["seed"]), restarts=int(cfg["restarts"]))
    doc = {
        "phi": float(cfg["phi"]),
        "direction": direction.label,
        "seed": int(cfg["seed"]),
        "restarts": int(cfg["restarts"]),
        "results": [
            {
                "xi": r.params.xi,
                "alpha1": r.params.alpha1,
                "phi1": r.params.phi1,
                "alpha2": r.params.alpha2,
                "phi2": r.params.phi2,
                "fidelity": r.fidelity,
                "branch": r.branch,
                "converged": r.converged,
            }
            for r in results
        ],
    }
    _write_text(cfg["out"], _json_dumps(doc) + "\n")
    return 0


def _cmd_sweep(args) -> int:
    cfg = _merge_job(args)
    if cfg["format"] not in (None, "csv"):
        print("sweep emits CSV; use --format csv", file=sys.stderr)
        return 2
    if not cfg["axes"]:
        print("sweep requires --axes", file=sys.stderr)
        return 2
    if cfg["range"] is None or cfg["count"] is None:
        print("sweep requires --range and --count", file=sys.stderr)
        return 2
    names = [a.strip() for a in str(cfg["axes"]).split(",") if a.strip()]
    ranges = _parse_ranges(str(cfg["range"]), len(names))
    counts = _parse_counts(cfg["count"], len(names))
    axes = [
        (name, np.linspace(lo, hi, count))
        for name, (lo, hi), count in zip(names, ranges, counts)
    ]
    result = robustness.sweep(axes, phi=float(cfg["phi"]))
    lines = [",".join(f"eps_{n}" for n in result.axes) + ",infidelity"]
    for row in result.iter_rows():
        lines.append(",".join(_fmt(v) for v in row))
    _write_text(cfg["out"], "\n".join(lines) + "\n")
    return 0


def _cmd_branch_law(args) -> int:
    cfg = _merge_job(args)
    if cfg["out"] is None:
        print("branch-law requires --out for the CSV rows", file=sys.stderr)
        return 2
    direction = Direction.from_label(cfg["direction"])
    count = int(cfg["count"] or 100)
    if count < 10:
        print("branch-law needs a grid of at least 10 points", file=sys.stderr)
        return 2
    grid = [2.0 * np.pi * k / (count + 1) for k in range(1, count + 1)]
    fit = convert.branch_law_fit(grid, direction,
                                 seed=int(cfg["seed"]), restarts=int(cfg["restarts"]))
    lines = ["phi,branch,phi1_opt,phi2_opt,fidelity"]
    for s in fit.samples:
        lines.append(",".join([
            _fmt(s.phi), str(s.branch), _fmt(s.phi1), _fmt(s.phi2), _fmt(s.fidelity),
        ]))
    _write_text(cfg["out"], "\n".join(lines) + "\n")
    summary = {
        "direction": direction.label,
        "points": count,
        "slope_phi1": fit.slope_phi1,
        "slope_phi2": fit.slope_phi2,
        "max_residual": fit.max_residual,
        "branches": [
            {
                "branch": b.branch,
                "slope_phi1": b.slope_phi1,
                "intercept_phi1": b.intercept_phi1,
                "slope_phi2": b.slope_phi2,
                "intercept_phi2": b.intercept_phi2,
                "n_points": b.n_points,
            }
            for b in fit.branches
        ],
    }
    sys.stdout.write(_json_dumps(summary) + "\n")
    return 0


def _cmd_liealg(args) -> int:
    cfg = _merge_job(args)
    if cfg["format"] not in (None, "json"):
        print("liealg emits JSON; use --format json", file=sys.stderr)
        return 2
    gens = [1j * operators.ising_hamiltonian(),
            1j * operators.collective("X"),
            1j * operators.collective("Y")]
    doc = {
        "u_s3_dim": symmetry.permutation_invariant_algebra_dimension(),
        "dynamical_dim": symmetry.dynamical_lie_dimension(gens),
        "sector_dims": symmetry.sector_decomposition_dims(),
    }
    _write_text(cfg["out"], _json_dumps(doc) + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wghz",
        description="W / GHZ interconversion toolkit for Ising-coupled qubits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--phi", type=float, default=None,
                       help="GHZ phase (radians unless --degrees)")
        p.add_argument("--direction", choices=["w2ghz", "ghz2w"], default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--restarts", type=int, default=None)
        p.add_argument("--axes", type=str, default=None,
                       help="comma-separated error axes, e.g. phi1,phi2 or xi,alpha_tied")
        p.add_argument("--range", type=str, default=None,
                       help="min:max per axis (comma-separated to differ per axis)")
        p.add_argument("--count", type=str, default=None,
                       help="grid points per axis")
        p.add_argument("--out", type=str, default=None, help="output file path")
        p.add_argument("--format", choices=["csv", "json"], default=None)
        p.add_argument("--job", type=str, default=None,
                       help="JSON job file; explicit flags take precedence")
        p.add_argument("--degrees", action="store_true", default=None,
                       help="interpret --phi in degrees (input only)")

    for name, fn in [("verify", _cmd_verify), ("optimize", _cmd_optimize),
                     ("sweep", _cmd_sweep), ("branch-law", _cmd_branch_law),
                     ("liealg", _cmd_liealg)]:
        p = sub.add_parser(name)
        add_common(p)
        p.set_defaults(handler=fn)
    return parser


def _preprocess(argv):
    """Join `--range` with its value so ranges starting with '-' parse."""
    out = []
    it = iter(argv)
    for token in it:
        if token == "--range":
            value = next(it, None)
            if value is None:
                out.append(token)
            else:
                out.append(f"--range={value}")
        else:
            out.append(token)
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = _build_parser().parse_args(_preprocess(argv))
    try:
        return args.handler(args)
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

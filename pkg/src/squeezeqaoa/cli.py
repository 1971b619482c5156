"""Command-line entry point: ``squeezeqaoa <command> [options]``.

Every JSON document carries ``schema_version`` and the resolved ``config``;
CSV outputs have fixed headers.  Exit codes: 0 success, 2 invalid
arguments, 1 internal failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .benchmark import benchmark_grid, discontinuities, grid_to_csv, improvement_delta
from .metrology import metrology_report
from .qaoa import (
    QaoaParams,
    SpsaConfig,
    beta_sweep,
    depth_one_optimum,
    energy_bounds,
    landscape_scan,
    multistart_optimize,
    trial_state,
)
from .spin import coherent_plus_state, dicke_state, energy_expectation
from .wigner import spin_wigner

SCHEMA_VERSION = "1.0"


class UsageError(Exception):
    """Bad command-line input; reported with exit code 2."""


def _round(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if value == -math.inf:
            return "neg_inf"
        if not math.isfinite(value):
            return None
        return float(f"{value:.12g}")
    if isinstance(value, dict):
        return {k: _round(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_round(v) for v in value]
    return value


def _angles(text: str | None, flag: str) -> list[float]:
    if text is None:
        return []
    values = []
    for token in text.replace(" ", "").split(","):
        try:
            value = float(token)
        except ValueError:
            raise UsageError(f"invalid angle {token!r} in {flag}") from None
        if not math.isfinite(value):
            raise UsageError(f"invalid angle {token!r} in {flag}")
        values.append(value)
    return values


def _params(args) -> QaoaParams:
    gammas, betas = _angles(args.gammas, "--gammas"), _angles(args.betas, "--betas")
    if not gammas or len(gammas) != len(betas):
        raise UsageError(f"--gammas and --betas need the same non-zero length "
                         f"(got {len(gammas)} and {len(betas)})")
    return QaoaParams(tuple(gammas), tuple(betas))


def _check_n(n: int, minimum: int = 2):
    if n < minimum:
        raise UsageError(f"--n must be >= {minimum}, got {n}")


def _document(command: str, config: dict, payload: dict, timestamp: bool) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "config": config}
    doc.update(payload)
    if timestamp:
        doc["generated_at"] = datetime.now(timezone.utc).isoformat()
    return _round(doc)


def _config(args) -> dict:
    skip = {"func", "out", "timestamp"}
    return {k: v for k, v in vars(args).items() if k not in skip}


# -- commands -----------------------------------------------------------------

def cmd_report(args):
    _check_n(args.n)
    params = _params(args)
    report = metrology_report(trial_state(args.n, params))
    config = _config(args) | {"gammas": list(params.gammas), "betas": list(params.betas)}
    return "json", _document("report", config, report.to_dict(), args.timestamp)


def cmd_optimize(args):
    _check_n(args.n)
    if args.depth < 1 or args.restarts < 1:
        raise UsageError("--depth and --restarts must be >= 1")
    try:
        config = SpsaConfig(max_iterations=args.max_iterations,
                            calibration_iterations=args.calibration_iterations,
                            shots=args.shots, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    best, traces = multistart_optimize(args.n, args.depth, args.restarts, config)
    params = best.best_params
    state = trial_state(args.n, params)
    exact = energy_expectation(state)
    initial = energy_expectation(coherent_plus_state(args.n))
    target = energy_bounds(args.n)[0]
    delta = improvement_delta(initial, exact, target)
    payload = {
        "best_gammas": list(params.gammas),
        "best_betas": list(params.betas),
        "best_objective": best.best_value,
        "energy": exact,
        "initial_energy": initial,
        "target_energy": target,
        "delta": delta,
        "delta_in_range": 0 <= delta <= 1,
        "search_domain": {"gamma": [0, 2 * math.pi], "beta": [0, math.pi]},
        "restart_best_values": [t.best_value for t in traces],
        "trace": best.summary(),
        "metrology": metrology_report(state).to_dict(),
    }
    return "json", _document("optimize", _config(args), payload, args.timestamp)


def cmd_sweep(args):
    _check_n(args.n)
    if args.steps < 2 or not args.beta_max > args.beta_min:
        raise UsageError("sweep needs --steps >= 2 and --beta-max > --beta-min")
    gammas = _angles(args.gammas, "--gammas")
    prior = _angles(args.betas, "--betas")
    if not gammas:
        gammas = list(depth_one_optimum(args.n)[0].gammas)
    if len(prior) != len(gammas) - 1:
        raise UsageError("--betas must list one angle per layer except the last")
    sweep = beta_sweep(args.n, gammas, (args.beta_min, args.beta_max), args.steps, prior)
    config = _config(args) | {"gammas": gammas, "betas": prior}
    if args.format == "json":
        beta, s = sweep.best()
        payload = {"beta": sweep.betas, "squeezing_db": sweep.squeezing_db,
                   "var_z": sweep.var_z, "best_beta": beta, "best_squeezing_db": s}
        return "json", _document("sweep", config, payload, args.timestamp)
    rows = zip(sweep.betas, sweep.squeezing_db, sweep.var_z)
    return "csv", _csv(["beta", "squeezing_db", "var_z"], rows)


def cmd_landscape(args):
    _check_n(args.n)
    if args.resolution < 2:
        raise UsageError("--resolution must be >= 2")
    scan = landscape_scan(args.n, resolution=args.resolution)
    if args.format == "json":
        payload = {"min_energy": scan.min_energy, "argmin_gamma": scan.argmin[0],
                   "argmin_beta": scan.argmin[1], "dicke_overlap": scan.dicke_overlap,
                   "approximation_ratio": scan.approximation_ratio}
        return "json", _document("landscape", _config(args), payload, args.timestamp)
    rows = ((g, b, scan.energies[i, j]) for i, g in enumerate(scan.gammas)
            for j, b in enumerate(scan.betas))
    return "csv", _csv(["gamma", "beta", "energy"], rows)


def cmd_benchmark(args):
    if not 0 < args.alpha < 1:
        raise UsageError("--alpha must lie in (0, 1)")
    if args.n_min < 2 or args.n_max < args.n_min or args.n_step < 1:
        raise UsageError("need 2 <= --n-min <= --n-max and --n-step >= 1")
    if args.s_steps < 1 or args.s_max < args.s_min:
        raise UsageError("need --s-steps >= 1 and --s-max >= --s-min")
    s_values = np.linspace(args.s_min, args.s_max, args.s_steps)
    points = benchmark_grid(range(args.n_min, args.n_max + 1, args.n_step), s_values, args.alpha)
    return "csv", grid_to_csv(points)


def cmd_discontinuities(args):
    if not 0 < args.alpha < 1 or args.n_max < 4:
        raise UsageError("need --alpha in (0, 1) and --n-max >= 4")
    rec = discontinuities(args.alpha, args.n_max)
    payload = {"alpha": rec.alpha, "n_values": list(rec.n_values)}
    return "json", _document("discontinuities", _config(args), payload, args.timestamp)


def cmd_wigner(args):
    _check_n(args.n, minimum=1)
    if args.resolution < 8:
        raise UsageError("--resolution must be >= 8")
    if args.dicke is not None:
        if not 0 <= args.dicke <= args.n:
            raise UsageError(f"--dicke must lie in [0, {args.n}]")
        state = dicke_state(args.n, args.dicke)
    elif args.gammas is None and args.betas is None:
        state = coherent_plus_state(args.n)
    else:
        state = trial_state(args.n, _params(args))
    return "csv", spin_wigner(state, args.resolution).to_csv()


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([f"{float(v):.12g}" for v in row])
    return buf.getvalue()


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="squeezeqaoa",
                                     description="QAOA squeezing simulator and benchmark (angles in radians)")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=None):
        p.add_argument("--out", help="write to this file instead of stdout")
        p.add_argument("--timestamp", action="store_true", help="add a generated_at field to JSON output")
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default=fmt, help="output format")

    def schedule(p, required=False):
        p.add_argument("--gammas", required=required, help="comma-separated cost angles; use --gammas=-0.1,... for negatives")
        p.add_argument("--betas", required=required, help="comma-separated mixer angles")

    p = sub.add_parser("report", help="metrology report of a QAOA trial state")
    p.add_argument("--n", type=int, required=True, help="qubit count")
    schedule(p, required=True)
    common(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("optimize", help="multistart SPSA minimisation of <H_C>")
    p.add_argument("--n", type=int, required=True, help="qubit count")
    p.add_argument("--depth", type=int, required=True, help="QAOA depth p")
    p.add_argument("--restarts", type=int, default=20, help="random restarts (default 20)")
    p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p.add_argument("--shots", type=int, default=None, help="shots per evaluation (default exact)")
    p.add_argument("--max-iterations", type=int, default=500, help="SPSA iterations (default 500)")
    p.add_argument("--calibration-iterations", type=int, default=25,
                   help="SPSA calibration probes (default 25)")
    common(p)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("sweep", help="squeezing versus the final mixer angle")
    p.add_argument("--n", type=int, required=True, help="qubit count")
    p.add_argument("--gammas", help="cost angles (default: depth-one optimum)")
    p.add_argument("--betas", help="mixer angles of all but the last layer")
    p.add_argument("--beta-min", type=float, default=0.0, help="sweep start (default 0)")
    p.add_argument("--beta-max", type=float, default=math.pi, help="sweep end (default pi)")
    p.add_argument("--steps", type=int, default=1000, help="sweep points (default 1000)")
    common(p, fmt="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("landscape", help="depth-one energy landscape")
    p.add_argument("--n", type=int, required=True, help="qubit count")
    p.add_argument("--resolution", type=int, default=400, help="grid points per axis (default 400)")
    common(p, fmt="csv")
    p.set_defaults(func=cmd_landscape)

    p = sub.add_parser("benchmark", help="Gaussian-model P_alpha grid")
    p.add_argument("--alpha", type=float, default=0.999, help="approximation ratio (default 0.999)")
    p.add_argument("--n-min", type=int, default=4, help="smallest n (default 4)")
    p.add_argument("--n-max", type=int, default=256, help="largest n (default 256)")
    p.add_argument("--n-step", type=int, default=2, help="n increment (default 2)")
    p.add_argument("--s-min", type=float, default=-10.0, help="most negative squeezing, dB (default -10)")
    p.add_argument("--s-max", type=float, default=0.0, help="least negative squeezing, dB (default 0)")
    p.add_argument("--s-steps", type=int, default=21, help="squeezing points (default 21)")
    common(p)
    p.set_defaults(func=cmd_benchmark)

    p = sub.add_parser("discontinuities", help="even n where the P_alpha window widens")
    p.add_argument("--alpha", type=float, default=0.999, help="approximation ratio (default 0.999)")
    p.add_argument("--n-max", type=int, default=256, help="largest n (default 256)")
    common(p)
    p.set_defaults(func=cmd_discontinuities)

    p = sub.add_parser("wigner", help="spin Wigner function on a sphere grid")
    p.add_argument("--n", type=int, required=True, help="qubit count")
    schedule(p)
    p.add_argument("--dicke", type=int, default=None, help="use the Dicke state with this many |0> qubits")
    p.add_argument("--resolution", type=int, default=64, help="grid points per axis (default 64)")
    common(p)
    p.set_defaults(func=cmd_wigner)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        kind, result = args.func(args)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog} {args.command}: error: {exc}\n")
    except ValueError as exc:
        parser.exit(2, f"{parser.prog} {args.command}: error: {exc}\n")
    except Exception as exc:  # noqa: BLE001
        print(f"{parser.prog} {args.command}: internal error: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(result, indent=2) + "\n" if kind == "json" else result
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

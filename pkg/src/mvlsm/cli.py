"""Command-line entry point.

Subcommands: ``list``, ``solve``, ``front``, ``bench``, ``profile`` and
``selftest``. Every run writes a ``meta.json`` with the effective
parameters; passing that file back via ``--config`` reproduces the run
bit for bit. Parameter precedence is flags > config file > defaults,
except the seed, which the MVLSM_SEED environment variable overrides.

Exit codes: 0 success, 2 solver did not converge, 3 configuration
error, 64 usage error, 66 unreadable input file.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import front as front_mod
from . import metrics, plots, solver
from .errors import ConfigurationError, UndefinedPurityError, UnknownProblemError
from .levelset import MONTECARLO, TRAPEZOID, build_grid
from .problems import MultiobjectiveProblem, registry_all, registry_get
from .scalarize import (
    CHEBYSHEV,
    WEIGHTED_SUM,
    ScalarizationSpec,
    chebyshev,
    ideal_point_from_values,
    normalize_weights,
    random_weight,
    weighted_sum,
)

EX_OK = 0
EX_SOLVER = 2
EX_CONFIG = 3
EX_USAGE = 64
EX_NOINPUT = 66

SEED_ENV_VAR = "MVLSM_SEED"

# Experiment-protocol values; `selftest` asserts these stay the defaults.
PROTOCOL_DEFAULTS = {
    "budget": 10000,
    "epsilon": 1e-8,
    "c0": 1e8,
    "xi": 1e-4,
    "scalarization": CHEBYSHEV,
}

DEFAULTS = {
    **PROTOCOL_DEFAULTS,
    "seed": 0,
    "num_weights": 200,
    "k_max": 1000,
    "membership_tol": 1e-3,
    "filter": False,
    "figures": True,
    "format": "csv",
    "jobs": 1,
    "scheme": TRAPEZOID,
    "match_tol": metrics.DEFAULT_MATCH_TOL,
    "weights": None,
    "output_dir": "mvlsm_out",
}


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage code instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _parse_c0(text: str):
    if text.strip().lower() == solver.AUTO:
        return solver.AUTO
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"c0 must be a real or 'auto', got {text!r}")


def _parse_scalarization(text: str) -> str:
    key = text.strip().lower().replace("-", "_")
    if key not in (CHEBYSHEV, WEIGHTED_SUM):
        raise argparse.ArgumentTypeError(
            f"scalarization must be 'chebyshev' or 'weighted-sum', got {text!r}"
        )
    return key


def _parse_weights(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated reals, got {text!r}")


def _add_run_options(sub: argparse.ArgumentParser, with_weights: bool = False):
    sub.add_argument("--config", type=Path, help="JSON file with parameter defaults")
    sub.add_argument("--seed", type=int, help="RNG seed (64-bit unsigned)")
    sub.add_argument("--budget", type=int, help="total grid point budget")
    sub.add_argument("--epsilon", type=float, help="stopping tolerance on the modified variance")
    sub.add_argument("--c0", type=_parse_c0, help="initial level, a real or 'auto'")
    sub.add_argument("--xi", type=float, help="utopian shift below the ideal point")
    sub.add_argument("--k-max", dest="k_max", type=int, help="iteration cap per solve")
    sub.add_argument(
        "--membership-tol", dest="membership_tol", type=float,
        help="tolerance for terminal level-set membership",
    )
    sub.add_argument(
        "--scalarization", type=_parse_scalarization,
        help="'chebyshev' (default) or 'weighted-sum'",
    )
    sub.add_argument(
        "--scheme", choices=[TRAPEZOID, MONTECARLO], help="grid construction scheme"
    )
    sub.add_argument("--output-dir", dest="output_dir", type=str, help="directory for outputs")
    sub.add_argument(
        "--figures", action=argparse.BooleanOptionalAction, default=None,
        help="render figures next to the data files",
    )
    if with_weights:
        sub.add_argument(
            "--weights", type=_parse_weights,
            help="explicit raw weights, e.g. 0.5,0.5 (normalized before use)",
        )


def build_parser() -> _Parser:
    parser = _Parser(prog="mvlsm", description=__doc__)
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub = subparsers.add_parser("list", help="list registered problems")
    sub.set_defaults(func=cmd_list)

    sub = subparsers.add_parser("solve", help="one scalarized solve on one problem")
    sub.add_argument("--problem", required=True)
    _add_run_options(sub, with_weights=True)
    sub.set_defaults(func=cmd_solve)

    sub = subparsers.add_parser("front", help="multi-weight front approximation")
    sub.add_argument("--problem", required=True)
    sub.add_argument("--num-weights", dest="num_weights", type=int, help="number of weight draws")
    sub.add_argument(
        "--filter", action=argparse.BooleanOptionalAction, default=None,
        help="drop strictly dominated points from the collected front",
    )
    sub.add_argument("--format", choices=["csv", "json"], help="front export format")
    sub.add_argument("--jobs", type=int, help="worker threads for per-weight solves")
    _add_run_options(sub)
    sub.set_defaults(func=cmd_front)

    sub = subparsers.add_parser("bench", help="front quality metrics over problems")
    sub.add_argument("--problems", required=True, help="comma-separated problem ids")
    sub.add_argument("--num-weights", dest="num_weights", type=int)
    sub.add_argument(
        "--external-front", dest="external_front", action="append", default=[],
        metavar="NAME=PATH",
        help="ingest another solver's front CSV (file, directory, or "
        "path template with {problem}); repeatable",
    )
    sub.add_argument("--match-tol", dest="match_tol", type=float, help="purity matching tolerance")
    sub.add_argument("--jobs", type=int)
    _add_run_options(sub)
    sub.set_defaults(func=cmd_bench)

    sub = subparsers.add_parser("profile", help="performance profiles from a cost matrix CSV")
    sub.add_argument("--costs", required=True, type=Path,
                     help="CSV with header problem,<solver>,... and one row per problem")
    sub.add_argument("--output-dir", dest="output_dir", type=str)
    sub.add_argument("--config", type=Path)
    sub.add_argument(
        "--figures", action=argparse.BooleanOptionalAction, default=None,
    )
    sub.set_defaults(func=cmd_profile)

    sub = subparsers.add_parser("selftest", help="verify protocol defaults and a smoke solve")
    sub.set_defaults(func=cmd_selftest)

    return parser


def _effective_params(args, keys: list[str]) -> dict:
    """Merge defaults, config file and explicit flags (in that order)."""
    params = {key: DEFAULTS[key] for key in keys}
    config_path = getattr(args, "config", None)
    if config_path is not None:
        loaded = json.loads(Path(config_path).read_text())
        for key in keys:
            if key in loaded:
                params[key] = loaded[key]
    for key in keys:
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    if "scalarization" in params:
        params["scalarization"] = params["scalarization"].replace("-", "_")
    if "seed" in params:
        env_seed = os.environ.get(SEED_ENV_VAR)
        if env_seed is not None:
            params["seed"] = int(env_seed)
        if not 0 <= params["seed"] < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
    return params


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _write_meta(outdir: Path, command: str, params: dict) -> None:
    meta = {"command": command}
    for key, value in params.items():
        if key == "output_dir":  # where the capture lives, not a parameter of it
            continue
        meta[key] = str(value) if isinstance(value, Path) else value
    _write_json(outdir / "meta.json", meta)


def _solver_config(params: dict) -> solver.SolverConfig:
    return solver.SolverConfig(
        c0=params["c0"],
        epsilon=params["epsilon"],
        k_max=params["k_max"],
        membership_tol=params["membership_tol"],
    )


def _outdir(params: dict) -> Path:
    outdir = Path(params["output_dir"])
    outdir.mkdir(parents=True, exist_ok=True)
    return outdir


def cmd_list(args) -> int:
    for problem in registry_all():
        has_front = "true" if problem.analytic_front is not None else "false"
        print(f"{problem.id}, {problem.dimension}, {problem.num_objectives}, {has_front}")
    return EX_OK


_SOLVE_KEYS = [
    "seed", "budget", "epsilon", "c0", "xi", "k_max", "membership_tol",
    "scalarization", "scheme", "weights", "output_dir", "figures",
]


def cmd_solve(args) -> int:
    params = _effective_params(args, _SOLVE_KEYS)
    params["problem"] = args.problem
    problem = registry_get(args.problem)

    started = time.perf_counter()
    grid = build_grid(problem.domain, params["budget"], params["scheme"])
    objective_values = problem.evaluate(grid.points)
    info = ideal_point_from_values(objective_values, params["xi"])

    if params["weights"] is not None:
        weight = normalize_weights(np.asarray(params["weights"], dtype=float))
        if weight.size != problem.num_objectives:
            raise ValueError(
                f"{problem.id} has {problem.num_objectives} objectives, "
                f"got {weight.size} weights"
            )
    else:
        weight = random_weight(problem.num_objectives, np.random.default_rng(params["seed"]))

    if params["scalarization"] == CHEBYSHEV:
        spec = ScalarizationSpec(CHEBYSHEV, weight, info.utopian)
        values = chebyshev(spec, objective_values)
    else:
        spec = ScalarizationSpec(WEIGHTED_SUM, weight)
        values = weighted_sum(spec, objective_values)

    trace = solver.solve(values, grid, _solver_config(params))
    elapsed = time.perf_counter() - started

    outdir = _outdir(params)
    payload = trace.to_json_dict()
    payload["problem"] = problem.id
    payload["weights"] = [float(v) for v in weight.entries]
    payload["utopian"] = [float(v) for v in info.utopian]
    _write_json(outdir / "trace.json", payload)

    with open(outdir / "minimizers.csv", "w", newline="") as handle:
        writer = csv.writer(handle)
        n, r = problem.dimension, problem.num_objectives
        writer.writerow(
            [f"x_{i + 1}" for i in range(n)]
            + [f"f_{i + 1}" for i in range(r)]
            + ["value"]
        )
        for gi in trace.minimizer_indices:
            writer.writerow(
                [repr(float(v)) for v in grid.points[gi]]
                + [repr(float(v)) for v in objective_values[gi]]
                + [repr(float(values[gi]))]
            )
    _write_meta(outdir, "solve", params)
    if params["figures"]:
        plots.convergence_figure(trace, outdir / "convergence.png")

    print(
        f"{problem.id}: status={trace.status} c_bar={trace.c_bar:.8g} "
        f"iterations={trace.iterations} minimizers={trace.minimizer_indices.size} "
        f"time={elapsed:.3f}s"
    )
    return EX_OK if trace.status == solver.CONVERGED else EX_SOLVER


_FRONT_KEYS = [
    "seed", "budget", "epsilon", "c0", "xi", "k_max", "membership_tol",
    "scalarization", "scheme", "num_weights", "filter", "format", "jobs",
    "output_dir", "figures",
]


def cmd_front(args) -> int:
    params = _effective_params(args, _FRONT_KEYS)
    params["problem"] = args.problem
    problem = registry_get(args.problem)

    started = time.perf_counter()
    approximation = front_mod.build_front(
        problem,
        num_weights=params["num_weights"],
        seed=params["seed"],
        grid_budget=params["budget"],
        solver_config=_solver_config(params),
        apply_filter=params["filter"],
        scalarization=params["scalarization"],
        xi=params["xi"],
        scheme=params["scheme"],
        jobs=params["jobs"],
    )
    elapsed = time.perf_counter() - started

    outdir = _outdir(params)
    if params["format"] == "csv":
        front_mod.write_front_csv(approximation, outdir / "front.csv")
    else:
        _write_json(outdir / "front.json", front_mod.front_to_json_dict(approximation))
    _write_meta(outdir, "front", params)
    if params["figures"]:
        plots.front_figure(approximation, problem, outdir / "front.png")

    print(
        f"{problem.id}: points={len(approximation.points)} runs={approximation.runs} "
        f"mean_iterations={approximation.mean_iterations:.2f} "
        f"failed_runs={approximation.failed_runs} time={elapsed:.3f}s"
    )
    converged_runs = approximation.runs - approximation.failed_runs
    return EX_OK if converged_runs > 0 else EX_SOLVER


def _resolve_external(path_spec: str, problem_id: str, n_problems: int) -> Path:
    if "{problem}" in path_spec:
        return Path(path_spec.format(problem=problem_id))
    path = Path(path_spec)
    if path.is_dir():
        for candidate in (path / f"{problem_id}.csv", path / f"{problem_id.lower()}.csv"):
            if candidate.exists():
                return candidate
        return path / f"{problem_id}.csv"  # reported missing by the caller
    if n_problems > 1:
        raise ValueError(
            f"external front {path_spec!r} is a single file but several problems "
            "were requested; use a directory or a {problem} template"
        )
    return path


_BENCH_KEYS = [
    "seed", "budget", "epsilon", "c0", "xi", "k_max", "membership_tol",
    "scalarization", "scheme", "num_weights", "match_tol", "jobs",
    "output_dir", "figures",
]


def cmd_bench(args) -> int:
    params = _effective_params(args, _BENCH_KEYS)
    problem_ids = [p.strip() for p in args.problems.split(",") if p.strip()]
    params["problems"] = problem_ids
    params["external_front"] = list(args.external_front)
    problems = [registry_get(pid) for pid in problem_ids]

    externals: list[tuple[str, str]] = []
    for item in args.external_front:
        name, sep, path_spec = item.partition("=")
        if not sep or not name or not path_spec:
            raise ValueError(f"--external-front expects NAME=PATH, got {item!r}")
        externals.append((name, path_spec))
    solver_ids = ["mvlsm"] + [name for name, _ in externals]

    config = _solver_config(params)
    records = []
    purity_scores = np.zeros((len(solver_ids), len(problems)))
    hv_scores = np.zeros((len(solver_ids), len(problems)))
    for j, problem in enumerate(problems):
        approximation = front_mod.build_front(
            problem,
            num_weights=params["num_weights"],
            seed=params["seed"],
            grid_budget=params["budget"],
            solver_config=config,
            apply_filter=True,
            scalarization=params["scalarization"],
            xi=params["xi"],
            scheme=params["scheme"],
            jobs=params["jobs"],
        )
        fronts = [approximation.objective_matrix()]
        for name, path_spec in externals:
            path = _resolve_external(path_spec, problem.id, len(problems))
            try:
                fronts.append(metrics.read_front_csv(path))
            except OSError as exc:
                print(f"cannot read external front: {path} ({exc})", file=sys.stderr)
                return EX_NOINPUT
        # Each solver is scored on its own nondominated subset, mirroring
        # how the combined reference front is built.
        fronts = [
            metrics.reference_front([f]).points if f.shape[0] else f for f in fronts
        ]
        reference = metrics.reference_front(fronts)

        pooled = np.vstack([f for f in fronts if f.shape[0]])
        span = pooled.max(axis=0) - pooled.min(axis=0)
        pad = np.where(span > 0, 0.1 * span, 1.0)
        ref_point = pooled.max(axis=0) + pad

        for s, (solver_id, front_pts) in enumerate(zip(solver_ids, fronts)):
            try:
                pur = metrics.purity(front_pts, reference, params["match_tol"])
            except UndefinedPurityError:
                pur = None
            hv = (
                metrics.hypervolume(front_pts, ref_point)
                if problem.num_objectives <= 3
                else None
            )
            purity_scores[s, j] = np.nan if pur is None else pur
            hv_scores[s, j] = np.nan if hv is None else hv
            records.append(
                {
                    "problem": problem.id,
                    "solver": solver_id,
                    "purity": pur,
                    "hypervolume": hv,
                    "ref_point": [float(v) for v in ref_point],
                }
            )

    outdir = _outdir(params)
    _write_json(outdir / "metrics.json", {"records": records})
    for metric_name, scores in (("purity", purity_scores), ("hypervolume", hv_scores)):
        curves = metrics.performance_profile(
            metrics.reciprocal_costs(scores), solver_ids=solver_ids
        )
        metrics.write_profile_csv(curves, outdir / f"profile_{metric_name}.csv")
        if params["figures"]:
            plots.profile_figure(
                curves, outdir / f"profile_{metric_name}.png", title=metric_name
            )
    _write_meta(outdir, "bench", params)

    for record in records:
        pur = "n/a" if record["purity"] is None else f"{record['purity']:.4f}"
        hv = "n/a" if record["hypervolume"] is None else f"{record['hypervolume']:.6g}"
        print(f"{record['problem']} {record['solver']}: purity={pur} hypervolume={hv}")
    return EX_OK


def cmd_profile(args) -> int:
    params = _effective_params(args, ["output_dir", "figures"])
    params["costs"] = str(args.costs)
    try:
        with open(args.costs, newline="") as handle:
            reader = csv.reader(handle)
            header = next(reader, None)
            if not header or header[0].strip() != "problem" or len(header) < 2:
                raise ValueError(
                    f"{args.costs}: expected header problem,<solver>,..."
                )
            solver_ids = [h.strip() for h in header[1:]]
            rows = []
            names = []
            for row in reader:
                if not row:
                    continue
                names.append(row[0])
                rows.append(
                    [float(cell) if cell.strip() else np.nan for cell in row[1:]]
                )
    except OSError as exc:
        print(f"cannot read costs file: {args.costs} ({exc})", file=sys.stderr)
        return EX_NOINPUT
    if not rows:
        raise ValueError(f"{args.costs}: no cost rows")

    matrix = np.asarray(rows, dtype=float).T  # solvers x problems
    curves = metrics.performance_profile(matrix, solver_ids=solver_ids)
    outdir = _outdir(params)
    metrics.write_profile_csv(curves, outdir / "profile.csv")
    if params["figures"]:
        plots.profile_figure(curves, outdir / "profile.png")
    _write_meta(outdir, "profile", params)
    for curve in curves:
        print(
            f"{curve.solver_id}: rho(1)={curve.rho_values[0]:.3f} "
            f"rho(max)={curve.rho_values[-1]:.3f}"
        )
    return EX_OK


def cmd_selftest(args) -> int:
    failures = 0

    def check(label: str, ok: bool):
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'}: {label}")
        failures += 0 if ok else 1

    check("default grid budget is 10000", DEFAULTS["budget"] == 10000)
    check("default epsilon is 1e-8", DEFAULTS["epsilon"] == 1e-8)
    check("default c0 is 1e8", DEFAULTS["c0"] == 1e8)
    check("default xi is 1e-4", DEFAULTS["xi"] == 1e-4)
    check("default scalarization is chebyshev", DEFAULTS["scalarization"] == CHEBYSHEV)

    problem = registry_get("SCH1")
    grid = build_grid(problem.domain, 512)
    objective_values = problem.evaluate(grid.points)
    info = ideal_point_from_values(objective_values, DEFAULTS["xi"])
    weight = random_weight(2, np.random.default_rng(0))
    spec = ScalarizationSpec(CHEBYSHEV, weight, info.utopian)
    trace = solver.solve(chebyshev(spec, objective_values), grid, solver.SolverConfig())
    check("smoke solve on SCH1 converges", trace.status == solver.CONVERGED)
    check(
        "smoke solve matches the discrete minimum",
        abs(trace.c_bar - float(chebyshev(spec, objective_values).min())) <= 1e-2,
    )
    return EX_OK if failures == 0 else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownProblemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EX_CONFIG
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_NOINPUT


if __name__ == "__main__":
    sys.exit(main())

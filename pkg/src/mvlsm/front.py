"""Weak Pareto front assembly from repeated scalarized solves.

Every strict weight vector turns the vector problem into a scalar one
whose global minimizers are weak Pareto optimal; sweeping many random
weights and pooling the terminal level sets of each solve therefore
builds up a front approximation. An optional pairwise filter removes
points that are strictly dominated within the pool.
"""

from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import solver
from .levelset import TRAPEZOID, build_grid
from .problems import MultiobjectiveProblem
from .scalarize import (
    CHEBYSHEV,
    WEIGHTED_SUM,
    ScalarizationSpec,
    WeightVector,
    chebyshev,
    ideal_point_from_values,
    random_weight,
    weighted_sum,
)

DEFAULT_XI = 1e-4


def strictly_dominates(a: np.ndarray, b: np.ndarray) -> bool:
    """True iff a is strictly smaller than b in every objective."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError("objective vectors must have equal length")
    return bool(np.all(a < b))


def pareto_dominates(a: np.ndarray, b: np.ndarray) -> bool:
    """True iff a is no worse everywhere and strictly better somewhere."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError("objective vectors must have equal length")
    return bool(np.all(a <= b) and np.any(a < b))


def weak_nondominated_filter(points) -> np.ndarray:
    """Indices of points not strictly dominated by any other point.

    Pairwise O(m^2) scan; input order is preserved in the returned
    (ascending) index array. Identical points never strictly dominate
    each other, so duplicates all survive.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.size == 0:
        raise ValueError("cannot filter an empty candidate set")
    kept = [
        i
        for i in range(pts.shape[0])
        if not np.any(np.all(pts < pts[i], axis=1))
    ]
    return np.asarray(kept, dtype=int)


@dataclass(frozen=True)
class FrontPoint:
    """One collected candidate with its certificate weight."""

    x: np.ndarray
    fx: np.ndarray
    weight: WeightVector
    c_bar: float
    run_index: int


@dataclass(frozen=True)
class FrontApproximation:
    """Pooled weak-Pareto candidates plus the run parameters that made them."""

    problem_id: str
    points: list[FrontPoint]
    filtered: bool
    runs: int
    seed: int
    scalarization: str
    grid_budget: int
    epsilon: float
    xi: np.ndarray
    membership_tol: float
    ideal: np.ndarray
    utopian: np.ndarray
    mean_iterations: float
    failed_runs: int = 0
    statuses: dict[str, int] = field(default_factory=dict)

    def objective_matrix(self) -> np.ndarray:
        r = self.ideal.size
        if not self.points:
            return np.empty((0, r))
        return np.vstack([p.fx for p in self.points])

    def decision_matrix(self) -> np.ndarray:
        if not self.points:
            return np.empty((0, 0))
        return np.vstack([p.x for p in self.points])


def build_front(
    problem: MultiobjectiveProblem,
    num_weights: int,
    seed: int,
    grid_budget: int = 10000,
    solver_config: solver.SolverConfig | None = None,
    apply_filter: bool = False,
    scalarization: str = CHEBYSHEV,
    xi=DEFAULT_XI,
    scheme: str = TRAPEZOID,
    jobs: int = 1,
) -> FrontApproximation:
    """Pool terminal minimizers of ``num_weights`` random-weight solves.

    The grid, objective values and ideal point are computed once and
    shared read-only across solves; the per-weight solves are independent
    and may run on ``jobs`` threads, but results are merged in draw order
    so the outcome is deterministic for a fixed seed. Candidates are
    deduplicated by grid index; each keeps the weight of the first run
    that produced it as its certificate. Runs whose initial level set is
    empty, or which hit the iteration cap, contribute no points and are
    counted in ``failed_runs``.
    """
    if num_weights < 1:
        raise ValueError("num_weights must be >= 1")
    if scalarization not in (CHEBYSHEV, WEIGHTED_SUM):
        raise ValueError(f"unknown scalarization {scalarization!r}")
    config = solver_config or solver.SolverConfig()

    grid = build_grid(problem.domain, grid_budget, scheme)
    objective_values = problem.evaluate(grid.points)
    info = ideal_point_from_values(objective_values, xi)

    rng = np.random.default_rng(seed)
    weights = [random_weight(problem.num_objectives, rng) for _ in range(num_weights)]

    def run(weight: WeightVector) -> solver.SolveTrace:
        if scalarization == CHEBYSHEV:
            spec = ScalarizationSpec(CHEBYSHEV, weight, info.utopian)
            values = chebyshev(spec, objective_values)
        else:
            spec = ScalarizationSpec(WEIGHTED_SUM, weight)
            values = weighted_sum(spec, objective_values)
        return solver.solve(values, grid, config)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            traces = list(pool.map(run, weights))
    else:
        traces = [run(w) for w in weights]

    points: list[FrontPoint] = []
    seen: set[int] = set()
    statuses: dict[str, int] = {}
    failed = 0
    for run_index, (weight, trace) in enumerate(zip(weights, traces)):
        statuses[trace.status] = statuses.get(trace.status, 0) + 1
        if trace.status != solver.CONVERGED:
            failed += 1
            continue
        for grid_index in trace.minimizer_indices:
            gi = int(grid_index)
            if gi in seen:
                continue
            seen.add(gi)
            points.append(
                FrontPoint(
                    x=grid.points[gi].copy(),
                    fx=objective_values[gi].copy(),
                    weight=weight,
                    c_bar=trace.c_bar,
                    run_index=run_index,
                )
            )

    if apply_filter and points:
        keep = weak_nondominated_filter(np.vstack([p.fx for p in points]))
        points = [points[i] for i in keep]

    mean_iterations = float(np.mean([t.iterations for t in traces]))
    return FrontApproximation(
        problem_id=problem.id,
        points=points,
        filtered=apply_filter,
        runs=num_weights,
        seed=seed,
        scalarization=scalarization,
        grid_budget=grid_budget,
        epsilon=config.epsilon,
        xi=info.xi,
        membership_tol=config.membership_tol,
        ideal=info.ideal,
        utopian=info.utopian,
        mean_iterations=mean_iterations,
        failed_runs=failed,
        statuses=statuses,
    )


def front_csv_header(n: int, r: int) -> list[str]:
    return (
        ["run_index"]
        + [f"w_{i + 1}" for i in range(r)]
        + [f"x_{i + 1}" for i in range(n)]
        + [f"f_{i + 1}" for i in range(r)]
        + ["c_bar"]
    )


def write_front_csv(front: FrontApproximation, path) -> None:
    """Export collected points: run_index, w_1..w_r, x_1..x_n, f_1..f_r, c_bar."""
    r = front.ideal.size
    n = front.points[0].x.size if front.points else 0
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(front_csv_header(n, r))
        for p in front.points:
            row = (
                [p.run_index]
                + [repr(float(v)) for v in p.weight.entries]
                + [repr(float(v)) for v in p.x]
                + [repr(float(v)) for v in p.fx]
                + [repr(float(p.c_bar))]
            )
            writer.writerow(row)


def front_to_json_dict(front: FrontApproximation) -> dict:
    """JSON mirror of the CSV export, with full run metadata."""
    return {
        "problem": front.problem_id,
        "filtered": front.filtered,
        "runs": front.runs,
        "seed": front.seed,
        "scalarization": front.scalarization,
        "grid_budget": front.grid_budget,
        "epsilon": front.epsilon,
        "xi": [float(v) for v in front.xi],
        "membership_tol": front.membership_tol,
        "ideal": [float(v) for v in front.ideal],
        "utopian": [float(v) for v in front.utopian],
        "mean_iterations": front.mean_iterations,
        "failed_runs": front.failed_runs,
        "statuses": dict(sorted(front.statuses.items())),
        "points": [
            {
                "run_index": p.run_index,
                "weight": [float(v) for v in p.weight.entries],
                "x": [float(v) for v in p.x],
                "fx": [float(v) for v in p.fx],
                "c_bar": float(p.c_bar),
            }
            for p in front.points
        ],
    }

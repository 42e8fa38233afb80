"""Front-quality metrics: purity, hypervolume and performance profiles.

Purity scores a solver's front by how much of it survives in the
combined nondominated reference set of all compared solvers. The
hypervolume indicator measures the objective-space volume dominated by
a front below a reference vector (2 and 3 objectives). Performance
profiles aggregate per-problem costs across solvers into the classic
fraction-within-factor-tau curves.
"""

from __future__ import annotations

import csv
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import UndefinedPurityError, UnsupportedDimensionError
from .front import pareto_dominates

DEFAULT_MATCH_TOL = 1e-6


@dataclass(frozen=True)
class ReferenceFront:
    """Nondominated union of several fronts.

    ``source_counts[i]`` is the number of points of input front i that
    survived into the reference (informational; purity recomputes the
    match with its own tolerance).
    """

    points: np.ndarray
    source_counts: list[int]

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        points.setflags(write=False)
        object.__setattr__(self, "points", points)


def _as_front(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        return pts.reshape(0, pts.shape[-1] if pts.ndim == 2 else 0)
    return np.atleast_2d(pts)


def reference_front(fronts: list) -> ReferenceFront:
    """Union of fronts with Pareto-dominated points and duplicates removed.

    Raises:
        ValueError: If every input front is empty.
    """
    fronts = [_as_front(f) for f in fronts]
    nonempty = [f for f in fronts if f.shape[0] > 0]
    if not nonempty:
        raise ValueError("cannot build a reference front from empty fronts only")
    pooled = np.vstack(nonempty)

    unique: list[np.ndarray] = []
    seen: set[bytes] = set()
    for row in pooled:
        key = row.tobytes()
        if key not in seen:
            seen.add(key)
            unique.append(row)
    kept = [
        row
        for i, row in enumerate(unique)
        if not any(pareto_dominates(other, row) for j, other in enumerate(unique) if j != i)
    ]
    points = np.vstack(kept)
    kept_keys = {row.tobytes() for row in kept}
    source_counts = [
        int(sum(row.tobytes() in kept_keys for row in f)) for f in fronts
    ]
    return ReferenceFront(points=points, source_counts=source_counts)


def purity(front, reference: ReferenceFront, match_tol: float = DEFAULT_MATCH_TOL) -> float:
    """Fraction of front points present in the reference within match_tol.

    Matching is componentwise absolute. Fronts compared here normally
    come from shared finite grids, so matches are essentially exact and
    the tolerance only absorbs serialization rounding.

    Raises:
        UndefinedPurityError: For an empty front (profile builders treat
            this case as a failure).
    """
    pts = _as_front(front)
    if pts.shape[0] == 0:
        raise UndefinedPurityError("purity is undefined for an empty front")
    gaps = np.abs(pts[:, None, :] - reference.points[None, :, :]).max(axis=2)
    matched = (gaps.min(axis=1) <= match_tol).sum()
    return float(matched) / pts.shape[0]


def _hv_2d(pts: np.ndarray, ref: np.ndarray) -> float:
    # Sweep left to right; each point contributes the rectangle between
    # itself, the best height seen so far and the reference corner.
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    hv = 0.0
    best_f2 = ref[1]
    for x, y in pts[order]:
        if y < best_f2:
            hv += (ref[0] - x) * (best_f2 - y)
            best_f2 = y
    return hv


def hypervolume(front, ref_point) -> float:
    """Volume dominated by the front and bounded above by ref_point.

    Points not strictly below the reference in every coordinate are
    dropped with a warning. Supports 2 objectives (sort-and-sweep) and
    3 objectives (sweep over the third coordinate with 2-D slices).

    Raises:
        UnsupportedDimensionError: For more than 3 objectives.
    """
    ref = np.asarray(ref_point, dtype=float)
    r = ref.size
    if r not in (2, 3):
        raise UnsupportedDimensionError(
            f"hypervolume supports 2 or 3 objectives, got {r}"
        )
    pts = _as_front(front)
    if pts.shape[0] == 0:
        return 0.0
    if pts.shape[1] != r:
        raise ValueError("front and reference point dimensions differ")
    below = np.all(pts < ref, axis=1)
    if not below.all():
        warnings.warn(
            f"dropping {int((~below).sum())} point(s) not strictly below the "
            "reference point",
            stacklevel=2,
        )
        pts = pts[below]
    if pts.shape[0] == 0:
        return 0.0
    if r == 2:
        return _hv_2d(pts, ref)
    levels = np.unique(pts[:, 2])
    hv = 0.0
    for k, z in enumerate(levels):
        top = levels[k + 1] if k + 1 < levels.size else ref[2]
        slab = pts[pts[:, 2] <= z][:, :2]
        hv += _hv_2d(slab, ref[:2]) * (top - z)
    return hv


@dataclass(frozen=True)
class ProfileCurve:
    """One solver's profile: fraction of problems within factor tau of best."""

    solver_id: str
    tau_breakpoints: np.ndarray
    rho_values: np.ndarray


def performance_profile(
    costs, failure_marker: float = np.nan, solver_ids: list[str] | None = None
) -> list[ProfileCurve]:
    """Build profile curves from a solvers-by-problems cost matrix.

    Costs must be positive; failures are marked by ``failure_marker``
    (NaN by default) or any non-finite entry. Per problem, each solver's
    ratio to the best cost is formed (failures map to infinity) and the
    curves are emitted at every distinct finite ratio. Problems where
    every solver fails are excluded from the denominator with a warning.
    """
    matrix = np.asarray(costs, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] < 1 or matrix.shape[1] < 1:
        raise ValueError("costs must be a nonempty solvers-by-problems matrix")
    failed = ~np.isfinite(matrix)
    if not np.isnan(failure_marker):
        failed |= matrix == failure_marker
    if np.any(matrix[~failed] <= 0):
        raise ValueError("costs must be positive (or marked as failures)")
    if solver_ids is None:
        solver_ids = [f"solver{i + 1}" for i in range(matrix.shape[0])]
    if len(solver_ids) != matrix.shape[0]:
        raise ValueError("solver_ids length must match the number of solvers")

    work = matrix.copy()
    work[failed] = np.inf
    solvable = np.isfinite(work).any(axis=0)
    if not solvable.all():
        warnings.warn(
            f"excluding {int((~solvable).sum())} problem(s) failed by every solver",
            stacklevel=2,
        )
    work = work[:, solvable]
    if work.shape[1] == 0:
        raise ValueError("every problem failed for every solver")

    best = work.min(axis=0)
    ratios = work / best
    finite = ratios[np.isfinite(ratios)]
    taus = np.unique(finite)
    curves = []
    for s, solver_id in enumerate(solver_ids):
        rho = (ratios[s][None, :] <= taus[:, None]).mean(axis=1)
        curves.append(
            ProfileCurve(
                solver_id=solver_id, tau_breakpoints=taus.copy(), rho_values=rho
            )
        )
    return curves


def reciprocal_costs(scores) -> np.ndarray:
    """Turn larger-is-better scores into profile costs via 1/score.

    Zero, negative, or non-finite scores become failures (infinity):
    a solver with purity 0 on a problem is simply unranked there.
    """
    scores = np.asarray(scores, dtype=float)
    costs = np.full_like(scores, np.inf)
    good = np.isfinite(scores) & (scores > 0)
    costs[good] = 1.0 / scores[good]
    return costs


def read_front_csv(path) -> np.ndarray:
    """Load an objective-space front from CSV with header f_1,...,f_r."""
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None:
            raise ValueError(f"{path}: empty front file")
        expected = [f"f_{i + 1}" for i in range(len(header))]
        if [h.strip() for h in header] != expected:
            raise ValueError(
                f"{path}: expected header {','.join(expected)}, got {','.join(header)}"
            )
        rows = [[float(cell) for cell in row] for row in reader if row]
    if not rows:
        return np.empty((0, len(header)))
    return np.asarray(rows, dtype=float)


def write_profile_csv(curves: list[ProfileCurve], path) -> None:
    """Write shared-breakpoint curves as columns: tau, rho_<solver>, ..."""
    if not curves:
        raise ValueError("need at least one curve")
    taus = curves[0].tau_breakpoints
    for curve in curves[1:]:
        if not np.array_equal(curve.tau_breakpoints, taus):
            raise ValueError("curves must share tau breakpoints for CSV export")
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["tau"] + [f"rho_{c.solver_id}" for c in curves])
        for i, tau in enumerate(taus):
            writer.writerow(
                [repr(float(tau))] + [repr(float(c.rho_values[i])) for c in curves]
            )

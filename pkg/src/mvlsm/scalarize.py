"""Weight handling and scalarization of vector objectives.

Two scalarizations are supported: the weighted sum (inner product with a
weight vector) and the weighted Chebyshev distance to a utopian vector.
Minimizers of the Chebyshev form over strictly positive weights sweep out
exactly the weak Pareto points, which is what the front builder relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .levelset import SampleGrid
from .problems import MultiobjectiveProblem

WEIGHTED_SUM = "weighted_sum"
CHEBYSHEV = "chebyshev"

_SUM_TOL = 1e-12


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative weights with unit L1 norm.

    ``strict`` marks membership in the strictly positive weight set; only
    strict weights certify weak Pareto optimality of Chebyshev minimizers.
    """

    entries: np.ndarray
    strict: bool

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=float)
        if entries.ndim != 1 or entries.size < 2:
            raise ValueError("weights must be a vector with at least 2 entries")
        if np.any(entries < 0):
            raise ValueError("weights must be nonnegative")
        if abs(entries.sum() - 1.0) > _SUM_TOL:
            raise ValueError("weights must sum to 1")
        if self.strict and not np.all(entries > 0):
            raise ValueError("strict weights must be strictly positive")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def size(self) -> int:
        return self.entries.size


@dataclass(frozen=True)
class IdealPointInfo:
    """Componentwise objective minima and the shifted utopian vector."""

    ideal: np.ndarray
    xi: np.ndarray
    utopian: np.ndarray

    def __post_init__(self):
        for name in ("ideal", "xi", "utopian"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if not np.all(self.xi > 0):
            raise ValueError("xi must be strictly positive")
        if not np.array_equal(self.utopian, self.ideal - self.xi):
            raise ValueError("utopian must equal ideal - xi")


@dataclass(frozen=True)
class ScalarizationSpec:
    """Which scalar function to apply and with what parameters."""

    kind: Literal["weighted_sum", "chebyshev"]
    weights: WeightVector
    utopian: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in (WEIGHTED_SUM, CHEBYSHEV):
            raise ValueError(f"unknown scalarization kind {self.kind!r}")
        if self.kind == CHEBYSHEV:
            if self.utopian is None:
                raise ValueError("chebyshev scalarization requires a utopian vector")
            utopian = np.asarray(self.utopian, dtype=float)
            if utopian.shape != (self.weights.size,):
                raise ValueError("utopian length must match the weight count")
            utopian.setflags(write=False)
            object.__setattr__(self, "utopian", utopian)
        elif self.utopian is not None:
            raise ValueError("weighted_sum scalarization carries no utopian vector")


def normalize_weights(raw) -> WeightVector:
    """Scale nonnegative raw weights to unit L1 norm.

    The strict flag is set iff every raw entry is positive.

    Raises:
        ValueError: On negative entries or an all-zero vector.
    """
    raw = np.asarray(raw, dtype=float)
    if raw.ndim != 1 or raw.size < 2:
        raise ValueError("raw weights must be a vector with at least 2 entries")
    if np.any(raw < 0):
        raise ValueError("raw weights must be nonnegative")
    total = raw.sum()
    if total == 0:
        raise ValueError("cannot normalize an all-zero weight vector")
    return WeightVector(raw / total, strict=bool(np.all(raw > 0)))


def random_weight(r: int, rng: np.random.Generator) -> WeightVector:
    """Draw a strict weight vector: r uniform(0,1) entries, L1-normalized."""
    if r < 2:
        raise ValueError("need at least 2 objectives")
    raw = rng.random(r)
    while np.any(raw == 0):  # rng.random may return exactly 0
        raw = rng.random(r)
    return normalize_weights(raw)


def weighted_sum(spec: ScalarizationSpec, fx: np.ndarray) -> np.ndarray | float:
    """Inner product of weights and objectives; accepts (r,) or (N, r)."""
    if spec.kind != WEIGHTED_SUM:
        raise ValueError(f"spec kind is {spec.kind!r}, expected {WEIGHTED_SUM!r}")
    fx = np.asarray(fx, dtype=float)
    if fx.shape[-1] != spec.weights.size:
        raise ValueError("objective vector length does not match weight count")
    out = fx @ spec.weights.entries
    return float(out) if out.ndim == 0 else out


def chebyshev(spec: ScalarizationSpec, fx: np.ndarray) -> np.ndarray | float:
    """Weighted Chebyshev distance to the utopian vector.

    Returns max over objectives of ``w * (f - utopian)``; strictly positive
    whenever the utopian vector lies strictly below every attainable value.
    Accepts (r,) or (N, r).
    """
    if spec.kind != CHEBYSHEV:
        raise ValueError(f"spec kind is {spec.kind!r}, expected {CHEBYSHEV!r}")
    fx = np.asarray(fx, dtype=float)
    if fx.shape[-1] != spec.weights.size:
        raise ValueError("objective vector length does not match weight count")
    out = np.max(spec.weights.entries * (fx - spec.utopian), axis=-1)
    return float(out) if out.ndim == 0 else out


def ideal_point_from_values(
    objective_values: np.ndarray, xi
) -> IdealPointInfo:
    """Ideal/utopian pair from a precomputed (N, r) objective matrix."""
    objective_values = np.asarray(objective_values, dtype=float)
    if objective_values.ndim != 2 or objective_values.shape[0] == 0:
        raise ValueError("objective_values must be a nonempty (N, r) matrix")
    r = objective_values.shape[1]
    xi = np.broadcast_to(np.asarray(xi, dtype=float), (r,)).copy()
    if not np.all(xi > 0):
        raise ValueError("xi must be strictly positive")
    ideal = objective_values.min(axis=0)
    return IdealPointInfo(ideal=ideal, xi=xi, utopian=ideal - xi)


def ideal_point(
    problem: MultiobjectiveProblem, grid: SampleGrid, xi
) -> IdealPointInfo:
    """Componentwise minima of each objective over the grid, shifted by xi.

    The minima are taken over the same discretization the solver sees, so
    the utopian vector is guaranteed to underestimate every sampled value.
    """
    if grid.points.shape[0] == 0:
        raise ValueError("cannot compute an ideal point on an empty grid")
    return ideal_point_from_values(problem.evaluate(grid.points), xi)

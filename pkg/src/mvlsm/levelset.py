"""Domain discretization and integral statistics over sublevel sets.

The box domain is replaced by a tensor grid with composite-trapezoid
quadrature weights (or, optionally, uniformly weighted pseudo-random
points). Sublevel-set integrals are approximated by masking grid nodes
whose value exceeds the threshold and renormalizing by the surviving
quadrature mass; the interface between cells is not reconstructed, so
boundary terms carry an O(1/p) error in the per-dimension resolution p.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, EmptyLevelSetError
from .problems import BoxDomain

TRAPEZOID = "trapezoid"
MONTECARLO = "montecarlo"

# Fixed stream for the montecarlo scheme keeps grids reproducible from
# (domain, budget, scheme) alone.
_MC_SEED = 0


@dataclass(frozen=True)
class SampleGrid:
    """Discretized box: sample points with positive quadrature weights.

    Attributes:
        points: (N, n) sample locations inside the closed box.
        quad_weights: (N,) positive weights summing to total_measure.
        total_measure: Volume of the box.
        per_dim_counts: Grid size per dimension (N for montecarlo grids
            is stored as a single pseudo-count of N^(1/n) repeated).
    """

    points: np.ndarray
    quad_weights: np.ndarray
    total_measure: float
    per_dim_counts: np.ndarray

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        weights = np.asarray(self.quad_weights, dtype=float)
        points.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "quad_weights", weights)
        counts = np.asarray(self.per_dim_counts, dtype=int)
        counts.setflags(write=False)
        object.__setattr__(self, "per_dim_counts", counts)

    @property
    def size(self) -> int:
        return self.points.shape[0]

    @property
    def dimension(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class LevelSetStats:
    """Weighted statistics of sampled values restricted to {value <= c}."""

    c: float
    in_measure: float
    in_count: int
    mean: float
    variance: float
    modified_variance: float

    def to_json_dict(self) -> dict:
        return {
            "c": self.c,
            "measure": self.in_measure,
            "count": self.in_count,
            "mean": self.mean,
            "variance": self.variance,
            "modified_variance": self.modified_variance,
        }


def points_per_dimension(budget: int, dimension: int) -> int:
    """Largest p with p**dimension <= budget (integer-exact)."""
    p = max(int(round(budget ** (1.0 / dimension))), 1)
    while (p + 1) ** dimension <= budget:
        p += 1
    while p**dimension > budget:
        p -= 1
    return p


def build_grid(
    domain: BoxDomain, budget: int, scheme: str = TRAPEZOID
) -> SampleGrid:
    """Discretize a box into at most ``budget`` sample points.

    The trapezoid scheme lays out p = floor(budget^(1/n)) points per
    dimension, endpoints included, with composite-trapezoid weights
    composed by tensor product. The montecarlo scheme draws ``budget``
    uniform points with equal weights volume/N (useful for n > 4, where
    the tensor grid becomes very coarse).

    Raises:
        ConfigurationError: If the budget cannot afford 2 points per
            dimension, or the scheme is unknown.
    """
    n = domain.dimension
    if budget < 2**n:
        raise ConfigurationError(
            f"budget {budget} too small for 2 points in each of {n} dimensions"
        )
    if scheme == TRAPEZOID:
        p = points_per_dimension(budget, n)
        axes, axis_weights = [], []
        for lo, hi in zip(domain.lower, domain.upper):
            axes.append(np.linspace(lo, hi, p))
            h = (hi - lo) / (p - 1)
            w = np.full(p, h)
            w[0] = w[-1] = h / 2.0
            axis_weights.append(w)
        points = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
        weights = axis_weights[0]
        for w in axis_weights[1:]:
            weights = np.multiply.outer(weights, w).ravel()
        counts = np.full(n, p)
    elif scheme == MONTECARLO:
        rng = np.random.default_rng(_MC_SEED)
        points = rng.uniform(domain.lower, domain.upper, size=(budget, n))
        weights = np.full(budget, domain.volume / budget)
        counts = np.full(n, points_per_dimension(budget, n))
    else:
        raise ConfigurationError(f"unknown grid scheme {scheme!r}")
    return SampleGrid(points, weights, domain.volume, counts)


def level_set_stats(values: np.ndarray, grid: SampleGrid, c: float) -> LevelSetStats:
    """Mean, variance and modified variance of values over {value <= c}.

    All three are quadrature-weighted averages over the surviving nodes:
    the mean of the values, the second moment about that mean, and the
    second moment about the threshold c itself. The exact relation
    ``modified_variance = variance + (mean - c)^2`` holds up to rounding.

    Raises:
        EmptyLevelSetError: If c lies below the smallest sampled value;
            the error carries that discrete minimum.
    """
    values = np.asarray(values, dtype=float)
    if values.shape != (grid.size,):
        raise ValueError(
            f"values must have shape ({grid.size},) to align with the grid"
        )
    mask = values <= c
    if not mask.any():
        raise EmptyLevelSetError(c, float(values.min()))
    v = values[mask]
    w = grid.quad_weights[mask]
    measure = float(w.sum())
    mean = float((w @ v) / measure)
    variance = float((w @ (v - mean) ** 2) / measure)
    modified = float((w @ (v - c) ** 2) / measure)
    return LevelSetStats(
        c=float(c),
        in_measure=measure,
        in_count=int(mask.sum()),
        mean=mean,
        variance=variance,
        modified_variance=modified,
    )

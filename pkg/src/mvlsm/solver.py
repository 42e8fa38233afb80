"""Mean-value-of-level-sets iteration for global scalar minimization.

Starting from a level c0 whose sublevel set is nonempty, each iteration
measures the modified variance VF of the sampled values over the current
sublevel set and then moves the level to the set's mean value. The level
sequence is non-increasing and bounded below by the discrete minimum, and
the iteration stops once VF drops under the tolerance: at that point the
level approximates the global minimum and the sublevel set the minimizer
set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, NotConvergedError
from .levelset import SampleGrid, level_set_stats

CONVERGED = "converged"
HIT_ITERATION_CAP = "hit_iteration_cap"
EMPTY_INITIAL_LEVEL_SET = "empty_initial_level_set"

AUTO = "auto"


@dataclass(frozen=True)
class SolverConfig:
    """Iteration parameters.

    ``c0 = "auto"`` starts at max(values) + 1, which always yields a
    nonempty initial sublevel set. ``membership_tol`` widens the terminal
    set slightly: VF < epsilon only bounds the RMS deviation from the
    final level by sqrt(epsilon), so a small multiple of that captures
    every terminal minimizer without admitting non-minimizers at grid
    resolution.
    """

    c0: float | str = 1e8
    epsilon: float = 1e-8
    k_max: int = 1000
    membership_tol: float = 1e-3

    def __post_init__(self):
        if isinstance(self.c0, str):
            if self.c0 != AUTO:
                raise ConfigurationError(f"c0 must be a real or {AUTO!r}")
        elif not math.isfinite(self.c0):
            raise ConfigurationError("c0 must be finite")
        if self.epsilon < 0:
            raise ConfigurationError("epsilon must be >= 0")
        if self.k_max < 1:
            raise ConfigurationError("k_max must be >= 1")
        if self.membership_tol < 0:
            raise ConfigurationError("membership_tol must be >= 0")


@dataclass(frozen=True)
class SolveTrace:
    """Full record of one solve.

    ``c_seq`` holds the level sequence starting at c0; ``vf_seq`` the
    modified variance measured at each level before it was updated. One
    iteration means one (VF, mean) evaluation pair, so the reported count
    includes the warm-up step at c0.
    """

    c_seq: list[float]
    vf_seq: list[float]
    status: str
    c_bar: float
    minimizer_indices: np.ndarray = field(repr=False)

    @property
    def iterations(self) -> int:
        return len(self.vf_seq)

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "c_bar": self.c_bar if math.isfinite(self.c_bar) else None,
            "iterations": self.iterations,
            "c_seq": self.c_seq,
            "vf_seq": self.vf_seq,
            "minimizer_count": int(self.minimizer_indices.size),
        }


def solve(values: np.ndarray, grid: SampleGrid, config: SolverConfig) -> SolveTrace:
    """Run the mean-value iteration on sampled scalar values.

    Each pass computes VF at the current level first and only then moves
    the level to the sublevel-set mean, so a run that converges at c0
    never updates the level at all. Convergence means VF < epsilon (or
    VF exactly zero, which covers epsilon = 0).

    Returns a trace rather than raising on non-convergence: an initial
    level below the discrete minimum yields status
    ``empty_initial_level_set``; exhausting ``k_max`` iterations yields
    ``hit_iteration_cap``.

    Raises:
        ValueError: On non-finite values or a values/grid length mismatch.
    """
    values = np.asarray(values, dtype=float)
    if values.shape != (grid.size,):
        raise ValueError(
            f"values must have shape ({grid.size},) to align with the grid"
        )
    if not np.all(np.isfinite(values)):
        raise ValueError("values must be finite")

    c0 = float(values.max()) + 1.0 if config.c0 == AUTO else float(config.c0)
    minimum = float(values.min())
    if c0 < minimum:
        return SolveTrace(
            c_seq=[c0],
            vf_seq=[],
            status=EMPTY_INITIAL_LEVEL_SET,
            c_bar=math.nan,
            minimizer_indices=np.empty(0, dtype=int),
        )

    c = c0
    c_seq = [c]
    vf_seq: list[float] = []
    while True:
        stats = level_set_stats(values, grid, c)
        vf = stats.modified_variance
        vf_seq.append(vf)
        if vf < config.epsilon or vf == 0.0:
            status = CONVERGED
            break
        if len(vf_seq) >= config.k_max:
            status = HIT_ITERATION_CAP
            break
        # The exact mean is >= the discrete minimum, but the weighted
        # average can round one ulp below it, which would empty the next
        # sublevel set; clamp to restore the exact-arithmetic bound.
        mean = max(stats.mean, minimum)
        if mean == c:
            # Exact plateau with positive variance: only possible through
            # floating-point rounding, never on exact arithmetic.
            status = CONVERGED if vf < 10.0 * config.epsilon else HIT_ITERATION_CAP
            break
        c = mean
        c_seq.append(c)

    indices = np.flatnonzero(values <= c + config.membership_tol)
    return SolveTrace(
        c_seq=c_seq,
        vf_seq=vf_seq,
        status=status,
        c_bar=c,
        minimizer_indices=indices,
    )


def minimizer_points(trace: SolveTrace, grid: SampleGrid) -> np.ndarray:
    """Grid points in the terminal sublevel set of a converged solve.

    Raises:
        NotConvergedError: If the trace did not converge.
    """
    if trace.status != CONVERGED:
        raise NotConvergedError(
            f"minimizers are only meaningful after convergence (status: {trace.status})"
        )
    return grid.points[trace.minimizer_indices]

"""Derivative-free weak Pareto front approximation.

The method scalarizes a box-constrained multiobjective problem with a
weighted Chebyshev (or weighted sum) function, then drives a level
threshold down by repeatedly replacing it with the mean of the function
over its own sublevel set, computed by quadrature on a fixed grid. The
iteration converges monotonically to the scalarized global minimum, and
pooling the terminal sublevel sets over many random weights yields a
weak Pareto front approximation.
"""

from .errors import (
    ConfigurationError,
    DomainViolationError,
    EmptyLevelSetError,
    NotConvergedError,
    UndefinedPurityError,
    UnknownProblemError,
    UnsupportedDimensionError,
)
from .front import (
    FrontApproximation,
    FrontPoint,
    build_front,
    pareto_dominates,
    strictly_dominates,
    weak_nondominated_filter,
)
from .levelset import (
    MONTECARLO,
    TRAPEZOID,
    LevelSetStats,
    SampleGrid,
    build_grid,
    level_set_stats,
)
from .metrics import (
    ProfileCurve,
    ReferenceFront,
    hypervolume,
    performance_profile,
    purity,
    read_front_csv,
    reciprocal_costs,
    reference_front,
)
from .problems import (
    BoxDomain,
    MultiobjectiveProblem,
    registry_all,
    registry_get,
    registry_ids,
)
from .scalarize import (
    CHEBYSHEV,
    WEIGHTED_SUM,
    IdealPointInfo,
    ScalarizationSpec,
    WeightVector,
    chebyshev,
    ideal_point,
    normalize_weights,
    random_weight,
    weighted_sum,
)
from .solver import (
    CONVERGED,
    EMPTY_INITIAL_LEVEL_SET,
    HIT_ITERATION_CAP,
    SolverConfig,
    SolveTrace,
    minimizer_points,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "BoxDomain",
    "CHEBYSHEV",
    "CONVERGED",
    "ConfigurationError",
    "DomainViolationError",
    "EMPTY_INITIAL_LEVEL_SET",
    "EmptyLevelSetError",
    "FrontApproximation",
    "FrontPoint",
    "HIT_ITERATION_CAP",
    "IdealPointInfo",
    "LevelSetStats",
    "MONTECARLO",
    "MultiobjectiveProblem",
    "NotConvergedError",
    "ProfileCurve",
    "ReferenceFront",
    "SampleGrid",
    "ScalarizationSpec",
    "SolveTrace",
    "SolverConfig",
    "TRAPEZOID",
    "UndefinedPurityError",
    "UnknownProblemError",
    "UnsupportedDimensionError",
    "WEIGHTED_SUM",
    "WeightVector",
    "build_front",
    "build_grid",
    "chebyshev",
    "hypervolume",
    "ideal_point",
    "level_set_stats",
    "minimizer_points",
    "normalize_weights",
    "pareto_dominates",
    "performance_profile",
    "purity",
    "random_weight",
    "read_front_csv",
    "reciprocal_costs",
    "reference_front",
    "registry_all",
    "registry_get",
    "registry_ids",
    "solve",
    "strictly_dominates",
    "weak_nondominated_filter",
    "weighted_sum",
]

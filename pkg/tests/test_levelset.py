import numpy as np
import pytest

from mvlsm import (
    ConfigurationError,
    EmptyLevelSetError,
    MONTECARLO,
    build_grid,
    level_set_stats,
)
from mvlsm.levelset import SampleGrid, points_per_dimension
from mvlsm.problems import BoxDomain


def equal_weight_grid(n_points):
    """1-D stand-in grid with uniform quadrature weights summing to 1."""
    return SampleGrid(
        points=np.arange(n_points, dtype=float).reshape(-1, 1),
        quad_weights=np.full(n_points, 1.0 / n_points),
        total_measure=1.0,
        per_dim_counts=np.array([n_points]),
    )


def unit_box(n):
    return BoxDomain(np.zeros(n), np.ones(n))


class TestBuildGrid:
    def test_three_point_trapezoid(self):
        grid = build_grid(unit_box(1), 3)
        assert np.allclose(grid.points.ravel(), [0.0, 0.5, 1.0])
        assert np.allclose(grid.quad_weights, [0.25, 0.5, 0.25])
        assert grid.total_measure == pytest.approx(1.0)

    def test_square_budget(self):
        grid = build_grid(unit_box(2), 10000)
        assert tuple(grid.per_dim_counts) == (100, 100)
        assert grid.size == 10000

    def test_fourth_root_budget(self):
        grid = build_grid(unit_box(4), 10000)
        assert tuple(grid.per_dim_counts) == (10, 10, 10, 10)
        assert grid.size == 10000

    def test_budget_too_small(self):
        with pytest.raises(ConfigurationError):
            build_grid(unit_box(4), 15)

    def test_unknown_scheme(self):
        with pytest.raises(ConfigurationError):
            build_grid(unit_box(1), 10, scheme="sobol")

    def test_weights_sum_to_volume(self):
        rng = np.random.default_rng(4)
        for _ in range(10):
            n = int(rng.integers(1, 4))
            lower = rng.uniform(-5, 0, n)
            upper = lower + rng.uniform(0.5, 4, n)
            box = BoxDomain(lower, upper)
            grid = build_grid(box, 500)
            assert grid.quad_weights.sum() == pytest.approx(box.volume, rel=1e-9)
            assert grid.total_measure == pytest.approx(box.volume, rel=1e-12)

    def test_points_stay_in_closed_box(self):
        box = BoxDomain(np.array([-2.0, 1.0]), np.array([3.0, 4.0]))
        for scheme in ("trapezoid", MONTECARLO):
            grid = build_grid(box, 400, scheme=scheme)
            assert np.all(grid.points >= box.lower)
            assert np.all(grid.points <= box.upper)

    def test_montecarlo_uniform_weights_and_reproducible(self):
        box = unit_box(3)
        a = build_grid(box, 1000, scheme=MONTECARLO)
        b = build_grid(box, 1000, scheme=MONTECARLO)
        assert a.size == 1000
        assert np.allclose(a.quad_weights, box.volume / 1000)
        assert np.array_equal(a.points, b.points)

    @pytest.mark.parametrize(
        "budget,n,expected", [(3, 1, 3), (10000, 2, 100), (10000, 4, 10), (9, 2, 3), (10648, 3, 22)]
    )
    def test_points_per_dimension(self, budget, n, expected):
        assert points_per_dimension(budget, n) == expected


class TestLevelSetStats:
    def test_constant_values(self):
        grid = equal_weight_grid(3)
        stats = level_set_stats(np.full(3, 5.0), grid, 7.0)
        assert stats.mean == pytest.approx(5.0)
        assert stats.variance == pytest.approx(0.0)
        assert stats.modified_variance == pytest.approx(4.0)
        assert stats.in_count == 3
        assert stats.in_measure == pytest.approx(1.0)

    def test_partial_restriction(self):
        grid = equal_weight_grid(3)
        stats = level_set_stats(np.array([1.0, 2.0, 3.0]), grid, 2.0)
        assert stats.in_count == 2
        assert stats.mean == pytest.approx(1.5)
        assert stats.variance == pytest.approx(0.25)
        assert stats.modified_variance == pytest.approx(0.5)

    def test_threshold_below_minimum(self):
        grid = equal_weight_grid(3)
        with pytest.raises(EmptyLevelSetError) as excinfo:
            level_set_stats(np.array([1.0, 2.0, 3.0]), grid, 0.5)
        assert excinfo.value.discrete_min == 1.0

    def test_singleton_level_set(self):
        grid = equal_weight_grid(3)
        stats = level_set_stats(np.array([1.0, 2.0, 3.0]), grid, 1.0)
        assert stats.in_count == 1
        assert stats.variance == pytest.approx(0.0)
        assert stats.modified_variance == pytest.approx(0.0)

    def test_length_mismatch(self):
        grid = equal_weight_grid(3)
        with pytest.raises(ValueError):
            level_set_stats(np.array([1.0, 2.0]), grid, 5.0)

    def test_monotone_measure_in_threshold(self):
        rng = np.random.default_rng(7)
        grid = build_grid(unit_box(2), 256)
        values = rng.normal(size=grid.size)
        thresholds = np.sort(rng.normal(size=20))
        measures = []
        for c in thresholds:
            try:
                measures.append(level_set_stats(values, grid, c).in_measure)
            except EmptyLevelSetError:
                measures.append(0.0)
        assert np.all(np.diff(measures) >= 0)

    def test_mean_between_minimum_and_threshold(self):
        rng = np.random.default_rng(13)
        grid = build_grid(unit_box(1), 100)
        values = rng.uniform(-3, 3, grid.size)
        for c in np.linspace(values.min(), values.max(), 17):
            stats = level_set_stats(values, grid, c)
            assert values.min() - 1e-12 <= stats.mean <= c + 1e-12

    def test_variance_decomposition_identity(self):
        # modified_variance = variance + (mean - c)^2, up to rounding
        rng = np.random.default_rng(29)
        grid = build_grid(unit_box(1), 503)
        for scale in (1.0, 1e-3, 1e4):
            values = rng.uniform(0, scale, grid.size)
            for c in np.quantile(values, [0.05, 0.3, 0.7, 1.0]):
                s = level_set_stats(values, grid, c)
                lhs = s.modified_variance
                rhs = s.variance + (s.mean - s.c) ** 2
                assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-300)

    def test_quadrature_against_exact_integrals(self):
        # f(x) = x on [0,1]: mean 1/2 and integral of (x-1)^2 is 1/3.
        grid = build_grid(unit_box(1), 101)
        values = grid.points.ravel()
        full = level_set_stats(values, grid, np.inf)
        assert full.mean == pytest.approx(0.5, abs=1e-4)
        at_one = level_set_stats(values, grid, 1.0)
        assert at_one.modified_variance == pytest.approx(1.0 / 3.0, abs=1e-4)

    def test_uniform_versus_trapezoid_weights_agree(self):
        # Plain averaging and trapezoid weights differ only at the two
        # endpoints, an O(1/p) effect on smooth integrands.
        p = 1000
        grid = build_grid(unit_box(1), p)
        x = grid.points.ravel()
        values = np.sin(3 * x) + x**2
        uniform = SampleGrid(grid.points, np.full(p, 1.0 / p), 1.0, grid.per_dim_counts)
        m_trap = level_set_stats(values, grid, np.inf).mean
        m_unif = level_set_stats(values, uniform, np.inf).mean
        assert abs(m_trap - m_unif) < 5.0 / p

    def test_json_record_fields(self):
        grid = equal_weight_grid(3)
        record = level_set_stats(np.array([1.0, 2.0, 3.0]), grid, 2.0).to_json_dict()
        assert set(record) == {"c", "measure", "count", "mean", "variance", "modified_variance"}

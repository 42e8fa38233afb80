import numpy as np
import pytest

from mvlsm import (
    CHEBYSHEV,
    WEIGHTED_SUM,
    ScalarizationSpec,
    SolverConfig,
    build_front,
    chebyshev,
    pareto_dominates,
    registry_get,
    strictly_dominates,
    weak_nondominated_filter,
)
from mvlsm.front import front_to_json_dict, write_front_csv
from mvlsm.problems import BoxDomain, MultiobjectiveProblem


class TestDominance:
    def test_strict_domination(self):
        assert strictly_dominates(np.array([0.0, 0.0]), np.array([1.0, 1.0]))

    def test_tie_blocks_strict_domination(self):
        assert not strictly_dominates(np.array([1.0, 2.0]), np.array([1.0, 3.0]))

    def test_incomparable_points(self):
        assert not strictly_dominates(np.array([1.0, 2.0]), np.array([2.0, 1.0]))

    def test_pareto_allows_ties(self):
        assert pareto_dominates(np.array([1.0, 2.0]), np.array([1.0, 3.0]))

    def test_pareto_is_irreflexive(self):
        assert not pareto_dominates(np.array([1.0, 2.0]), np.array([1.0, 2.0]))

    def test_pareto_incomparable(self):
        assert not pareto_dominates(np.array([2.0, 1.0]), np.array([1.0, 2.0]))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            strictly_dominates(np.array([1.0]), np.array([1.0, 2.0]))
        with pytest.raises(ValueError):
            pareto_dominates(np.array([1.0]), np.array([1.0, 2.0]))


class TestWeakNondominatedFilter:
    def test_removes_strictly_dominated_point(self):
        points = [(0.0, 1.0), (1.0, 0.0), (0.5, 0.5), (1.0, 1.0)]
        kept = weak_nondominated_filter(points)
        assert list(kept) == [0, 1, 2]

    def test_identical_points_all_survive(self):
        kept = weak_nondominated_filter([(1.0, 1.0)] * 4)
        assert list(kept) == [0, 1, 2, 3]

    def test_single_point(self):
        assert list(weak_nondominated_filter([(3.0, 4.0)])) == [0]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            weak_nondominated_filter(np.empty((0, 2)))

    def test_idempotent(self):
        rng = np.random.default_rng(41)
        pts = rng.integers(0, 4, size=(60, 3)).astype(float)
        once = pts[weak_nondominated_filter(pts)]
        twice = once[weak_nondominated_filter(once)]
        assert np.array_equal(once, twice)

    def test_no_strictly_dominated_survivors(self):
        rng = np.random.default_rng(43)
        pts = rng.uniform(0, 1, size=(80, 2))
        kept = pts[weak_nondominated_filter(pts)]
        for i in range(kept.shape[0]):
            for j in range(kept.shape[0]):
                assert not strictly_dominates(kept[j], kept[i]) or i == j


def identical_objectives_problem():
    return MultiobjectiveProblem(
        "twin",
        BoxDomain(np.array([-1.0]), np.array([1.0])),
        2,
        lambda x: np.stack([x[..., 0] ** 2, x[..., 0] ** 2], axis=-1),
    )


class TestBuildFront:
    def test_deterministic_for_fixed_seed(self):
        problem = registry_get("SCH1")
        a = build_front(problem, num_weights=8, seed=3, grid_budget=1000)
        b = build_front(problem, num_weights=8, seed=3, grid_budget=1000)
        assert len(a.points) == len(b.points)
        for pa, pb in zip(a.points, b.points):
            assert np.array_equal(pa.x, pb.x)
            assert np.array_equal(pa.fx, pb.fx)
            assert np.array_equal(pa.weight.entries, pb.weight.entries)
            assert pa.c_bar == pb.c_bar
            assert pa.run_index == pb.run_index

    def test_jobs_do_not_change_result(self):
        problem = registry_get("SCH1")
        serial = build_front(problem, num_weights=8, seed=3, grid_budget=1000)
        threaded = build_front(problem, num_weights=8, seed=3, grid_budget=1000, jobs=4)
        assert front_to_json_dict(serial) == front_to_json_dict(threaded)

    def test_identical_objectives_collapse_to_single_value(self):
        front = build_front(
            identical_objectives_problem(),
            num_weights=1,
            seed=0,
            grid_budget=512,
            apply_filter=True,
        )
        fx = front.objective_matrix()
        assert fx.shape[0] >= 1
        assert np.allclose(fx, fx[0])  # single minimizer value set
        assert np.allclose(fx[0], front.ideal)

    def test_certificate_property(self):
        # Every stored point must satisfy its own weight's scalarized bound.
        problem = registry_get("MOP6")
        front = build_front(problem, num_weights=12, seed=5, grid_budget=2048)
        for point in front.points:
            spec = ScalarizationSpec(CHEBYSHEV, point.weight, front.utopian)
            assert chebyshev(spec, point.fx) <= point.c_bar + front.membership_tol + 1e-12

    def test_filter_soundness_on_front(self):
        problem = registry_get("SCH1")
        front = build_front(problem, num_weights=25, seed=11, grid_budget=2000, apply_filter=True)
        fx = front.objective_matrix()
        for i in range(fx.shape[0]):
            assert not any(
                strictly_dominates(fx[j], fx[i]) for j in range(fx.shape[0]) if j != i
            )

    def test_weighted_sum_mode(self):
        problem = registry_get("SCH1")
        front = build_front(
            problem,
            num_weights=10,
            seed=2,
            grid_budget=1000,
            scalarization=WEIGHTED_SUM,
            apply_filter=True,
        )
        assert front.scalarization == WEIGHTED_SUM
        assert front.points
        from mvlsm import weighted_sum as ws

        for point in front.points:
            spec = ScalarizationSpec(WEIGHTED_SUM, point.weight)
            assert ws(spec, point.fx) <= point.c_bar + front.membership_tol + 1e-12

    def test_empty_initial_level_runs_are_skipped(self):
        problem = registry_get("SCH1")
        config = SolverConfig(c0=-999.0)
        front = build_front(problem, num_weights=5, seed=1, grid_budget=512, solver_config=config)
        assert front.failed_runs == 5
        assert front.points == []
        assert front.statuses == {"empty_initial_level_set": 5}

    def test_num_weights_must_be_positive(self):
        with pytest.raises(ValueError):
            build_front(registry_get("SCH1"), num_weights=0, seed=0)

    def test_points_lie_near_analytic_front(self):
        problem = registry_get("SCH1")
        front = build_front(problem, num_weights=30, seed=9, grid_budget=10000, apply_filter=True)
        fx = front.objective_matrix()
        deviation = np.abs(fx[:, 1] - (np.sqrt(fx[:, 0]) - 2.0) ** 2)
        assert deviation.max() <= 1e-2

    def test_duplicate_grid_indices_deduplicated(self):
        problem = registry_get("SCH1")
        front = build_front(problem, num_weights=40, seed=13, grid_budget=500)
        xs = front.decision_matrix()
        assert np.unique(xs, axis=0).shape[0] == xs.shape[0]


class TestFrontSerialization:
    def test_csv_round_trip_columns(self, tmp_path):
        problem = registry_get("SCH1")
        front = build_front(problem, num_weights=6, seed=4, grid_budget=512)
        path = tmp_path / "front.csv"
        write_front_csv(front, path)
        header = path.read_text().splitlines()[0].split(",")
        assert header == ["run_index", "w_1", "w_2", "x_1", "f_1", "f_2", "c_bar"]
        assert len(path.read_text().splitlines()) == len(front.points) + 1

    def test_json_mirror_metadata(self):
        problem = registry_get("SCH1")
        front = build_front(problem, num_weights=6, seed=4, grid_budget=512)
        payload = front_to_json_dict(front)
        assert payload["problem"] == "SCH1"
        assert payload["seed"] == 4
        assert payload["grid_budget"] == 512
        assert payload["epsilon"] == 1e-8
        assert payload["xi"] == [1e-4, 1e-4]
        assert payload["scalarization"] == CHEBYSHEV
        assert len(payload["points"]) == len(front.points)

import numpy as np
import pytest

from mvlsm import (
    DomainViolationError,
    UnknownProblemError,
    build_grid,
    registry_all,
    registry_get,
    registry_ids,
)
from mvlsm.problems import BoxDomain, MultiobjectiveProblem


def test_box_domain_validation():
    with pytest.raises(ValueError):
        BoxDomain(np.array([0.0, 0.0]), np.array([1.0]))
    with pytest.raises(ValueError):
        BoxDomain(np.array([1.0]), np.array([1.0]))  # empty interior
    box = BoxDomain(np.array([0.0, -1.0]), np.array([2.0, 1.0]))
    assert box.dimension == 2
    assert box.volume == pytest.approx(4.0)


def test_registry_contains_required_problems():
    ids = registry_ids()
    for required in ("SCH1", "ZDT1", "ZDT2", "ZDT3", "ZDT4"):
        assert required in ids


def test_sch1_formulation():
    p = registry_get("SCH1")
    assert p.dimension == 1
    assert p.num_objectives == 2
    assert np.allclose(p.evaluate(np.array([1.0])), [1.0, 1.0])
    assert np.allclose(p.evaluate(np.array([0.0])), [0.0, 4.0])
    assert np.allclose(p.evaluate(np.array([2.0])), [4.0, 0.0])


def test_zdt1_formulation():
    p = registry_get("ZDT1")
    assert p.dimension == 4
    assert p.num_objectives == 2
    assert np.all(p.domain.lower == 0.0)
    assert np.all(p.domain.upper == 1.0)
    # g(0,0,0) = 1, so F(0,0,0,0) = (0, 1)
    assert np.allclose(p.evaluate(np.zeros(4)), [0.0, 1.0])


def test_zdt_dimensions_match_benchmark_tables():
    for name in ("ZDT1", "ZDT2", "ZDT3", "ZDT4"):
        p = registry_get(name)
        assert p.dimension == 4
        assert p.num_objectives == 2


def test_unknown_problem_lists_available():
    with pytest.raises(UnknownProblemError) as excinfo:
        registry_get("NOSUCH")
    assert "NOSUCH" in str(excinfo.value)
    assert "SCH1" in str(excinfo.value)
    assert excinfo.value.available == registry_ids()


def test_lookup_is_case_insensitive_and_alias_aware():
    assert registry_get("sch1") is registry_get("SCH1")
    assert registry_get("Zdt1") is registry_get("ZDT1")
    assert registry_get("mop13") is registry_get("SCH1")


def test_out_of_domain_point_reports_coordinate():
    p = registry_get("ZDT1")
    with pytest.raises(DomainViolationError) as excinfo:
        p.evaluate(np.array([0.5, 0.5, 1.5, 0.5]))
    assert excinfo.value.coordinate_index == 2
    assert excinfo.value.value == 1.5


def test_boundary_points_are_feasible():
    p = registry_get("ZDT1")
    p.evaluate(np.zeros(4))
    p.evaluate(np.ones(4))


def test_batch_evaluation_matches_single_points():
    p = registry_get("ZDT3")
    rng = np.random.default_rng(3)
    batch = rng.uniform(0, 1, size=(32, 4))
    stacked = np.vstack([p.evaluate(x) for x in batch])
    assert np.array_equal(p.evaluate(batch), stacked)


def test_every_registry_problem_finite_on_default_grid():
    for p in registry_all():
        grid = build_grid(p.domain, 10000)
        values = p.evaluate(grid.points)
        assert values.shape == (grid.size, p.num_objectives)
        assert np.all(np.isfinite(values))


def test_sch1_front_identity():
    # Every image point satisfies f2 = (sqrt(f1) - 2)^2 on the Pareto set.
    p = registry_get("SCH1")
    for x in np.linspace(0.0, 2.0, 100):
        f1, f2 = p.evaluate(np.array([x]))
        assert f2 == pytest.approx((np.sqrt(f1) - 2.0) ** 2, abs=1e-12)


def test_evaluation_is_deterministic():
    for p in registry_all():
        x = (p.domain.lower + p.domain.upper) / 2.0
        assert np.array_equal(p.evaluate(x), p.evaluate(x))


def test_analytic_front_curves_match_evaluators():
    # On the Pareto set (tail variables at zero) the image must lie on the curve.
    for name in ("ZDT1", "ZDT2", "ZDT3"):
        p = registry_get(name)
        for t in np.linspace(0.01, 1.0, 25):
            x = np.array([t, 0.0, 0.0, 0.0])
            f1, f2 = p.evaluate(x)
            assert f2 == pytest.approx(float(p.analytic_front(np.array([f1]))[0]), abs=1e-10)


def test_custom_problem_checks_evaluator_width():
    bad = MultiobjectiveProblem(
        "bad",
        BoxDomain(np.array([0.0]), np.array([1.0])),
        3,
        lambda x: np.stack([x[..., 0], x[..., 0]], axis=-1),
    )
    with pytest.raises(ValueError):
        bad.evaluate(np.array([0.5]))

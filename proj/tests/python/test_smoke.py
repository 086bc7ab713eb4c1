import math
import random

import pytest

import isodiam


def test_diameters_of_equilateral_triangle():
    side = 2.5
    tri = [(0.0, 0.0), (side, 0.0), (side / 2, side * math.sqrt(3) / 2)]
    assert isodiam.diam(tri) == pytest.approx(side)
    assert isodiam.diam3(tri) == pytest.approx(side)
    holds, witness = isodiam.tab_check(tri, 3, 2, 2.0)
    assert not holds
    assert sorted(witness) == [0, 1, 2]


def test_enclosing_circle_within_generalised_jung_radius():
    rng = random.Random(7)
    for _ in range(200):
        pts = [(rng.uniform(0, 5), rng.uniform(0, 5)) for _ in range(rng.randint(2, 10))]
        (_, radius) = isodiam.min_enclosing_circle(pts)
        d = isodiam.diam(pts)
        tau = min(max(isodiam.diam3(pts), 1e-6), d)
        assert radius <= isodiam.gen_jung_radius(d, tau) + 1e-9


def test_jung_reduction():
    for delta in (0.5, 1.0, 3.0, 10.0):
        assert isodiam.gen_jung_radius(delta, delta) == pytest.approx(delta / math.sqrt(3), abs=1e-12)


def test_bound_profile_and_crossovers():
    profile = isodiam.bound_profile(3.0)
    assert profile["stmt3_applicable"]
    assert profile["stmt3"] == pytest.approx(2 * math.pi)
    assert isodiam.crossover("symmetric") == pytest.approx(math.sqrt(28 / 3), abs=1e-6)
    assert isodiam.crossover("convex_blaschke") == pytest.approx(3 * math.sqrt(3) / 2, abs=1e-6)
    with pytest.raises(ValueError):
        isodiam.crossover("nonsense")


def test_rasterised_disk_measure():
    region = isodiam.rasterize_disk((0.0, 0.0), 1.0, 0.01)
    assert region.measure() == pytest.approx(math.pi, abs=0.01)
    assert region.diam() == pytest.approx(2.0, abs=0.05)
    diff = isodiam.minkowski_difference(isodiam.rasterize_disk((0.0, 0.0), 0.5, 0.05))
    assert diff.measure() == pytest.approx(math.pi, rel=0.05)


def test_candidates_and_lens():
    names = [c["name"] for c in isodiam.evaluate_candidates(3.0)]
    assert "u_delta" in names
    assert isodiam.lens_area(1.0) == pytest.approx(1.228369698608757, abs=1e-12)
    assert isodiam.u_delta_measure(3.0) < isodiam.bound_profile(3.0)["stmt3"]


def test_arc_check_violated_for_long_arc():
    holds, witness = isodiam.arc_tab_check(1.5, [(0.0, 4.5)])
    assert not holds
    assert len(witness) == 3
    holds, witness = isodiam.arc_tab_check(1.5, [(0.0, 1.0)])
    assert holds and witness is None


def test_kill_probability_central_mass():
    report = isodiam.kill_probability([(0.0, 0.0, 1.0)], R=3.0, samples=200_000, seed=1)
    lo, hi = report["ci95"]
    assert lo - 0.005 <= 0.25 <= hi + 0.005
    same = isodiam.kill_probability([(0.0, 0.0, 1.0)], R=3.0, samples=200_000, seed=1, threads=3)
    assert same == report


def test_anneal_is_deterministic_and_feasible():
    a = isodiam.anneal(delta=3.0, h=0.1, iterations=5000, seed=3)
    b = isodiam.anneal(delta=3.0, h=0.1, iterations=5000, seed=3)
    assert a["best_region"] == b["best_region"]
    assert a["feasible"]
    assert a["best_measure"] >= a["baseline_measure"]


def test_input_errors_map_to_value_error():
    with pytest.raises(ValueError):
        isodiam.diam([])
    with pytest.raises(ValueError):
        isodiam.kill_probability([(0.0, 0.0, 1.0)], R=1.5)
    with pytest.raises(isodiam.BudgetError):
        isodiam.diam_ab([(float(i), 0.0) for i in range(60)], 30, 2, budget=1000)

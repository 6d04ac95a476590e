import numpy as np
import pytest

from finite_phase_space import LMGParams, dynamics as dyn, husimi_prob, initial_state, spectrum
from finite_phase_space.errors import DimensionMismatch, InvalidParams, TooFewPeaks
from finite_phase_space.phasespace import PhaseSpaceGrid

GRID = dyn.TimeGrid(0.0, 60.0, 0.05)


@pytest.fixture(scope="module")
def ee_series(lmg20, k21, rho_sym):
    return dyn.series(rho_sym, lmg20, k21, GRID, "eigen-entropy")


@pytest.fixture(scope="module")
def mi_series(lmg20, k21, rho_sym):
    return dyn.series(rho_sym, lmg20, k21, GRID, "mutual-correlation")


def test_time_grid():
    assert GRID.taus.size == 1201
    assert GRID.taus[-1] == pytest.approx(60.0)
    with pytest.raises(InvalidParams):
        dyn.TimeGrid(0, 1, 0)
    with pytest.raises(InvalidParams):
        dyn.TimeGrid(1, 1, 0.1)


def test_zero_time_is_identity(lmg20, rho_sym):
    np.testing.assert_array_equal(dyn.evolve(rho_sym, lmg20, 0.0), rho_sym)


def test_ground_state_is_stationary(lmg20):
    v = lmg20.vectors[:, 0]
    rho = np.outer(v, v)
    for tau in (1.0, 17.3, 60.0):
        assert np.abs(dyn.evolve(rho, lmg20, tau) - rho).max() <= 1e-12


def test_two_level_beat_period(lmg20, rho_sym):
    period = 2 * np.pi / lmg20.gap
    for tau in (0.0, 3.7, 21.0):
        a = dyn.evolve(rho_sym, lmg20, tau)
        b = dyn.evolve(rho_sym, lmg20, tau + period)
        assert np.abs(a - b).max() <= 1e-9


def test_evolution_conserves_state_properties(lmg20, rho_sym):
    for tau in GRID.taus[::40]:
        rho = dyn.evolve(rho_sym, lmg20, tau)
        assert abs(np.trace(rho) - 1) <= 1e-10
        assert np.abs(rho - rho.conj().T).max() <= 1e-10
        assert abs(np.trace(rho @ rho).real - 1) <= 1e-10
        assert np.linalg.eigvalsh(rho).min() >= -1e-10


def test_dimension_mismatch(lmg20):
    with pytest.raises(DimensionMismatch):
        dyn.evolve(np.eye(3) / 3, lmg20, 1.0)


def test_snapshots_reallocation(lmg20, k21, rho_sym):
    grids = dyn.husimi_snapshots(rho_sym, lmg20, k21)
    assert len(grids) == 4 and all(isinstance(g, PhaseSpaceGrid) for g in grids)
    for g in grids:
        assert abs(g.values.sum() - 1) <= 1e-10 and g.values.min() >= 0
    m = [dyn.angle_masses(g) for g in grids]
    assert abs(m[0]["negative"] - m[0]["positive"]) <= 1e-6
    assert m[1]["negative"] >= 0.8
    assert m[3]["positive"] >= 0.8


def test_threaded_snapshots_identical(lmg20, k21, rho_sym):
    taus = np.linspace(0, 30, 13)
    serial = dyn.husimi_snapshots(rho_sym, lmg20, k21, taus)
    threaded = dyn.husimi_snapshots(rho_sym, lmg20, k21, taus, threads=4)
    for a, b in zip(serial, threaded):
        np.testing.assert_array_equal(a.values, b.values)


def test_angle_masses_partition():
    h = np.zeros((5, 5))
    h[:, 0] = 0.1
    h[:, 2] = 0.06
    h[:, 4] = 0.04
    m = dyn.angle_masses(h)
    assert m == pytest.approx({"negative": 0.5, "zero": 0.3, "positive": 0.2})


def test_find_peaks_guard_band():
    y = np.array([0, 1, 2, 5, 2, 1, 0, 1, 2, 3, 3, 3, 2, 1, 0])
    assert dyn.find_peaks(y) == [3, 9]
    assert dyn.find_peaks(y, min_height=4) == [3]
    assert dyn.find_peaks([5, 0, 0, 0, 0, 0, 5]) == []


@pytest.mark.parametrize("period", [7.3, 12.0])
def test_peak_refinement_on_synthetic_wave(period):
    taus = np.arange(0, 50, 0.05)
    s = dyn.ScalarSeries(taus, np.cos(2 * np.pi * (taus - 1.234) / period), "eigen-entropy")
    gap = dyn.estimate_gap(s)
    assert gap.period == pytest.approx(period, rel=1e-5)
    assert gap.delta == pytest.approx(2 * np.pi / period, rel=1e-5)


def test_eigen_entropy_period(ee_series, lmg20):
    gap = dyn.estimate_gap(ee_series, lmg20)
    assert gap.period == pytest.approx(2 * np.pi / 0.1788, rel=5e-3)
    assert gap.percent_error <= 1.0
    assert abs(gap.delta - 0.1788) / 0.1788 <= 0.01


def test_mutual_correlation_half_period(mi_series, ee_series, lmg20):
    gap = dyn.estimate_gap(mi_series, lmg20)
    full = dyn.estimate_gap(ee_series, lmg20)
    assert gap.period == pytest.approx(full.period / 2, rel=0.02)
    assert gap.percent_error <= 1.0


def test_joint_entropy_half_period(lmg20, k21, rho_sym):
    s = dyn.series(rho_sym, lmg20, k21, GRID, "joint-entropy")
    assert dyn.estimate_gap(s, lmg20).percent_error <= 1.0


def test_mutual_correlation_maxima_at_localized_times(mi_series, lmg20, k21, rho_sym):
    y = mi_series.values
    peaks = dyn.find_peaks(y, min_height=(y.min() + y.max()) / 2)
    for i in peaks:
        m = dyn.angle_masses(husimi_prob(dyn.evolve(rho_sym, lmg20, mi_series.taus[i]), k21))
        assert max(m["negative"], m["positive"]) >= 0.9


def test_eigen_entropy_extremes_are_one_sided(ee_series, lmg20, k21, rho_sym):
    y = ee_series.values
    for i in (int(np.argmax(y)), int(np.argmin(y))):
        m = dyn.angle_masses(husimi_prob(dyn.evolve(rho_sym, lmg20, ee_series.taus[i]), k21))
        assert max(m["negative"], m["positive"]) >= 0.8


def test_short_span_has_too_few_peaks(lmg20, k21, rho_sym):
    s = dyn.series(rho_sym, lmg20, k21, dyn.TimeGrid(0, 10, 0.05), "eigen-entropy")
    with pytest.raises(TooFewPeaks):
        dyn.estimate_gap(s, lmg20)


def test_decoupled_gap_from_eigen_entropy(k21):
    spec = spectrum(LMGParams(20, 0.0))
    s = dyn.series(initial_state(spec, 0, 1), spec, k21, GRID, "eigen-entropy")
    assert dyn.estimate_gap(s, spec).delta == pytest.approx(1.0, rel=0.01)


def test_series_is_deterministic_and_thread_safe(lmg20, k21, rho_sym):
    grid = dyn.TimeGrid(0, 5, 0.25)
    a = dyn.series(rho_sym, lmg20, k21, grid, "mutual-correlation")
    b = dyn.series(rho_sym, lmg20, k21, grid, "mutual-correlation", threads=3)
    np.testing.assert_array_equal(a.values, b.values)


def test_unknown_series_label(lmg20, k21, rho_sym):
    with pytest.raises(ValueError):
        dyn.series(rho_sym, lmg20, k21, GRID, "wehrl")


def test_gap_json_fields(ee_series, lmg20):
    d = dyn.estimate_gap(ee_series, lmg20).to_dict()
    assert list(d) == ["method", "delta", "period", "reference_delta", "percent_error", "peak_times"]

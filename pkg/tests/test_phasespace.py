import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from finite_phase_space import build_kernels
from finite_phase_space import phasespace as ps
from finite_phase_space.errors import NegativeMass, NotHermitian, NotNormalized
from finite_phase_space.validation import random_density


@pytest.fixture(scope="module")
def k3():
    return build_kernels(3)


@pytest.fixture(scope="module")
def k5():
    return build_kernels(5)


def mixed(n):
    return np.eye(n) / n


# -- characteristic function ---------------------------------------------

@pytest.mark.parametrize("s", [-1, 0, 1])
def test_characteristic_of_maximally_mixed_state(k3, s):
    xi = ps.characteristic_function(mixed(3), s, k3).values
    expected = np.zeros((3, 3))
    expected[1, 1] = 1 / np.sqrt(3)
    np.testing.assert_allclose(xi, expected, atol=1e-15)


def test_characteristic_origin_value(k5, make_rho):
    for s in (-1, 0, 1):
        assert ps.characteristic_function(make_rho(5), s, k5).at(0, 0) == pytest.approx(1 / np.sqrt(5))


def test_characteristic_of_central_basis_state(k3):
    rho = np.zeros((3, 3))
    rho[1, 1] = 1
    xi = ps.characteristic_function(rho, 0, k3)
    for eta in (-1, 0, 1):
        assert xi.at(eta, 0) == pytest.approx(1 / np.sqrt(3), abs=1e-15)


# -- quasiprobabilities ---------------------------------------------------

@pytest.mark.parametrize("s", [-1, 0, 1])
def test_mixed_state_is_flat(k5, s):
    np.testing.assert_allclose(ps.quasiprob(mixed(5), s, k5).values, 1 / 5, atol=1e-13)


@pytest.mark.parametrize("s", [-1, 0, 1])
def test_raw_function_sums_to_dimension(k5, make_rho, s):
    assert ps.quasiprob(make_rho(5), s, k5).values.sum() == pytest.approx(5, abs=1e-9)


def test_wigner_is_real(k5, make_rho):
    w = ps.wigner(make_rho(5), k5)
    assert np.isrealobj(w.values)
    assert w.kind == "quasiprob" and w.s == 0


def test_raw_husimi_of_pure_state_in_unit_interval(k5, make_rho):
    f = ps.quasiprob(make_rho(5, rank=1), -1, k5).values
    assert f.min() >= -1e-10 and f.max() <= 1 + 1e-10


@pytest.mark.parametrize("s", [-1, 0, 1])
def test_trace_path_equals_fourier_path(k5, make_rho, s):
    rho = make_rho(5)
    a = ps.quasiprob(rho, s, k5, path="trace").values
    b = ps.quasiprob(rho, s, k5, path="fourier").values
    assert np.abs(a - b).max() <= 1e-10


def test_invalid_density_rejected(k3):
    with pytest.raises(NotHermitian):
        ps.husimi_prob(np.array([[0.5, 1, 0], [0, 0.5, 0], [0, 0, 0]]), k3)
    with pytest.raises(NotNormalized):
        ps.husimi_prob(np.eye(3), k3)
    with pytest.raises(NegativeMass):
        ps.husimi_prob(np.diag([1.5, -0.5, 0]), k3)


# -- Husimi probability ---------------------------------------------------

def test_mixed_state_husimi_uniform(k5):
    np.testing.assert_allclose(ps.husimi_prob(mixed(5), k5).values, 1 / 25, atol=1e-14)


def test_smoothing_path_equals_direct(k5, make_rho):
    rho = make_rho(5)
    a = ps.husimi_prob(rho, k5).values
    b = ps.husimi_prob(rho, k5, path="smoothing").values
    assert np.abs(a - b).max() <= 1e-10


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(0, 2**32 - 1))
def test_husimi_is_a_probability(n, seed):
    rho = random_density(n, np.random.default_rng(seed), rank=1 + seed % n)
    h = ps.husimi_prob(rho, build_kernels(n)).values
    assert abs(h.sum() - 1) <= 1e-10
    assert h.min() >= 0 and h.max() <= 1


# -- marginals and entropies ---------------------------------------------

def test_marginals_of_uniform_and_delta():
    q, r = ps.marginals(np.full((5, 5), 1 / 25))
    np.testing.assert_allclose(q, 0.2)
    np.testing.assert_allclose(r, 0.2)
    d = np.zeros((5, 5))
    d[1, 3] = 1
    q, r = ps.marginals(d)
    np.testing.assert_array_equal(q, np.eye(5)[1])
    np.testing.assert_array_equal(r, np.eye(5)[3])


def test_marginals_of_random_state_sum_to_one(k5, make_rho):
    q, r = ps.marginals(ps.husimi_prob(make_rho(5), k5))
    assert abs(q.sum() - 1) <= 1e-10 and abs(r.sum() - 1) <= 1e-10


def test_marginals_reject_unnormalized():
    with pytest.raises(NotNormalized):
        ps.marginals(np.full((3, 3), 0.2))


def test_shannon_entropy_values():
    assert ps.shannon_entropy([1, 0, 0]) == 0
    assert ps.shannon_entropy(np.full((7, 7), 1 / 49)) == pytest.approx(2 * np.log(7))
    assert ps.shannon_entropy(np.full(7, 1 / 7)) == pytest.approx(np.log(7))
    assert ps.shannon_entropy([1 + 1e-13, -1e-13]) == pytest.approx(0, abs=1e-11)
    with pytest.raises(NegativeMass):
        ps.shannon_entropy([1.1, -0.1])


# -- Husimi matrix split and eigen-entropy --------------------------------

def test_rank_one_uniform_grid():
    n = 5
    split, ent = ps.husimi_split_and_eigenentropy(np.full((n, n), 1 / n**2))
    lam = np.sort(np.abs(split.lam))[::-1]
    np.testing.assert_allclose(lam, [1 / n, 0, 0, 0, 0], atol=1e-14)
    assert ent == pytest.approx(np.log(n) / n, abs=1e-13)


def test_symmetric_grid_has_real_eigenvalues(rng):
    a = rng.random((7, 7))
    h = (a + a.T) / (2 * a.sum())
    split = ps.husimi_split(h)
    assert np.abs(split.lam.imag).max() <= 1e-13
    assert np.abs(split.B).max() == 0


def test_split_invariants(k5, make_rho):
    h = ps.husimi_prob(make_rho(5), k5).values
    split = ps.husimi_split(h)
    np.testing.assert_array_equal(split.A + split.B, h)
    np.testing.assert_array_equal(split.A, (h + h.T) / 2)
    assert abs(split.lam.sum() - np.trace(h)) <= 1e-9
    assert abs(np.sum(split.sigmaA) - np.trace(h)) <= 1e-9
    assert np.abs(np.real(split.sigmaB)).max() <= 1e-10


def test_eigen_entropy_cross_solver_on_lmg_state(k21, rho_sym):
    h = ps.husimi_prob(rho_sym, k21).values
    _, e_lapack = ps.husimi_split_and_eigenentropy(h, solver="lapack")
    _, e_qr = ps.husimi_split_and_eigenentropy(h, solver="qr")
    assert e_lapack == pytest.approx(e_qr, abs=1e-8)


# -- mutual correlation ---------------------------------------------------

def test_product_grid_has_zero_correlation(rng):
    q, r = rng.random(5), rng.random(5)
    h = np.outer(q / q.sum(), r / r.sum())
    assert ps.mutual_correlation(h) == pytest.approx(0, abs=1e-14)


def test_delta_grid_has_zero_correlation():
    h = np.zeros((3, 3))
    h[2, 0] = 1
    assert ps.mutual_correlation(h) == 0


def test_two_cell_grid_gives_ln2():
    h = np.zeros((5, 5))
    h[0, 1] = h[3, 4] = 0.5
    assert ps.mutual_correlation(h) == pytest.approx(np.log(2), abs=1e-12)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_correlation_nonnegative_and_subadditive(n):
    rng = np.random.default_rng(n)
    k = build_kernels(n)
    for i in range(1000):
        h = ps.husimi_prob(random_density(n, rng, rank=1 + i % n), k).values
        q, r = ps.marginals(h)
        joint = ps.joint_entropy(h)
        assert ps.mutual_correlation(h) >= -1e-10
        assert joint <= ps.shannon_entropy(q) + ps.shannon_entropy(r) + 1e-10

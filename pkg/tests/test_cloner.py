import numpy as np
import pytest

from clonecorr import (FEASIBLE_J, InputState, MachineParams, build_output_batch,
                       build_output_state, check_machine_constraints, clone_fidelity,
                       eig_sym4, reduced_clone, swap_qubits, valid_j_range)
from clonecorr.errors import DomainError

SINGLET = np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2.0)
X_FLIP = np.array([[0.0, 1.0], [1.0, 0.0]])


def random_alpha_j(rng):
    return rng.uniform(0.0, 1.0), rng.uniform(0.0, 0.5)


class TestInputState:
    def test_from_alpha_sets_positive_beta(self):
        st = InputState.from_alpha(0.6)
        assert st.beta == pytest.approx(0.8, abs=1e-15)
        assert st.beta >= 0.0

    def test_rejects_unnormalized(self):
        with pytest.raises(DomainError):
            InputState(0.9, 0.9)

    def test_rejects_out_of_range_alpha(self):
        with pytest.raises(DomainError):
            InputState.from_alpha(1.2)


class TestBuildOutputState:
    def test_alpha_one_is_mixture_of_00_and_plus(self):
        plus = np.array([0.0, 1.0, 1.0, 0.0]) / np.sqrt(2.0)
        for j in (0.0, 0.17, 0.5):
            expected = np.zeros((4, 4))
            expected[0, 0] = 1.0 - 2.0 * j
            expected += 2.0 * j * np.outer(plus, plus)
            np.testing.assert_allclose(build_output_state(1.0, j), expected,
                                       rtol=0, atol=1e-15)

    def test_universal_point_matrix(self):
        expected = np.array([
            [1 / 3, 1 / 6, 1 / 6, 0.0],
            [1 / 6, 1 / 6, 1 / 6, 1 / 6],
            [1 / 6, 1 / 6, 1 / 6, 1 / 6],
            [0.0, 1 / 6, 1 / 6, 1 / 3],
        ])
        np.testing.assert_allclose(build_output_state(1 / np.sqrt(2), 1 / 6), expected,
                                   rtol=0, atol=1e-15)

    def test_alpha_06_j_02_entries(self):
        rho = build_output_state(0.6, 0.2)
        assert rho[0, 0] == pytest.approx(0.216, abs=1e-15)
        assert rho[3, 3] == pytest.approx(0.384, abs=1e-15)
        for i, k in [(1, 1), (1, 2), (2, 1), (2, 2)]:
            assert rho[i, k] == pytest.approx(0.2, abs=1e-15)
        for i, k in [(0, 1), (0, 2), (1, 3), (2, 3)]:
            assert rho[i, k] == pytest.approx(0.144, abs=1e-15)
        assert rho[0, 3] == 0.0

    def test_accepts_dataclasses_and_floats(self):
        a = build_output_state(InputState.from_alpha(0.6), MachineParams(0.2))
        b = build_output_state(0.6, 0.2)
        assert np.array_equal(a, b)

    def test_rejects_j_outside_domain(self):
        for j in (-0.01, 0.51, 0.6):
            with pytest.raises(DomainError):
                build_output_state(0.5, j)

    def test_batch_matches_scalar(self):
        js = np.array([0.0, 0.1, 1 / 6, 0.37, 0.5])
        batch = build_output_batch(0.42, js)
        for rho, j in zip(batch, js):
            assert np.array_equal(rho, build_output_state(0.42, float(j)))


class TestReducedClone:
    def test_universal_point(self):
        rho = build_output_state(1 / np.sqrt(2), 1 / 6)
        expected = np.array([[0.5, 1 / 3], [1 / 3, 0.5]])
        np.testing.assert_allclose(reduced_clone(rho, "b"), expected, rtol=0, atol=1e-15)

    def test_both_clones_identical(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            alpha, j = random_alpha_j(rng)
            rho = build_output_state(alpha, j)
            assert np.abs(reduced_clone(rho, "a") - reduced_clone(rho, "b")).max() <= 1e-14

    def test_alpha_one(self):
        rho = build_output_state(1.0, 0.3)
        np.testing.assert_allclose(reduced_clone(rho, "b"), np.diag([0.7, 0.3]),
                                   rtol=0, atol=1e-15)


class TestCloneFidelity:
    def test_universal_machine_value(self):
        for alpha in (0.0, 0.25, 1 / np.sqrt(2), 0.9, 1.0):
            assert abs(clone_fidelity(alpha, 1 / 6) - 5 / 6) <= 1e-15

    def test_perfect_at_j_zero(self):
        assert clone_fidelity(1.0, 0.0) == 1.0

    def test_fidelity_law(self):
        rng = np.random.default_rng(4)
        for _ in range(1000):
            alpha, j = random_alpha_j(rng)
            assert abs(clone_fidelity(alpha, j) - (1.0 - j)) <= 1e-12


class TestValidJRange:
    def test_alpha_one_full_range(self):
        assert valid_j_range(1.0) == (0.0, 0.5)

    def test_alpha_zero_full_range(self):
        assert valid_j_range(0.0) == (0.0, 0.5)

    def test_symmetric_input_excludes_small_j(self):
        lo, hi = valid_j_range(1 / np.sqrt(2))
        assert hi == 0.5
        assert lo > 0.1          # j = 0.1 is unphysical here
        assert lo <= 1 / 6 + 1e-6
        # the 3x3 minor on rows {1,2,4} is negative at j = 0.1
        rho = build_output_state(1 / np.sqrt(2), 0.1)
        sub = rho[np.ix_([0, 1, 3], [0, 1, 3])]
        assert np.linalg.det(sub) == pytest.approx(-0.016, abs=1e-15)
        assert eig_sym4(rho)[-1] < -1e-10

    def test_contains_universal_point_for_all_alpha(self):
        for alpha in np.linspace(0.05, 0.95, 10):
            window = valid_j_range(alpha)
            assert window is not None
            lo, hi = window
            assert lo <= 1 / 6 + 1e-9 <= hi

    def test_rejects_bad_tol(self):
        with pytest.raises(DomainError):
            valid_j_range(0.5, tol=0.0)


class TestMachineConstraints:
    def test_universal_point_saturates_overlap_bound(self):
        report = check_machine_constraints(1 / 6)
        assert report.satisfied
        assert abs(report.overlap - report.overlap_bound) <= 1e-12

    def test_j_04_satisfied(self):
        report = check_machine_constraints(0.4)
        assert report.satisfied
        assert report.overlap == pytest.approx(0.1, abs=1e-15)
        assert report.overlap_bound == pytest.approx(np.sqrt(0.08), abs=1e-15)

    def test_j_06_violates_norms(self):
        report = check_machine_constraints(0.6)
        assert not report.norms_ok
        assert not report.satisfied

    def test_feasible_window(self):
        report = check_machine_constraints(0.3)
        assert report.feasible_j == FEASIBLE_J == (1 / 6, 0.5)
        # overlap constraint fails strictly below the window
        assert not check_machine_constraints(0.1).overlap_ok


class TestStructuralInvariants:
    def test_trace_one(self):
        rng = np.random.default_rng(6)
        for _ in range(200):
            alpha, j = random_alpha_j(rng)
            assert abs(np.trace(build_output_state(alpha, j)) - 1.0) <= 1e-15

    def test_singlet_zero_mode(self):
        rng = np.random.default_rng(8)
        for _ in range(200):
            alpha, j = random_alpha_j(rng)
            rho = build_output_state(alpha, j)
            assert np.abs(rho @ SINGLET).max() <= 1e-14

    def test_swap_symmetry_exact(self):
        rng = np.random.default_rng(10)
        for _ in range(200):
            alpha, j = random_alpha_j(rng)
            rho = build_output_state(alpha, j)
            assert np.array_equal(swap_qubits(rho), rho)

    def test_alpha_beta_covariance(self):
        rng = np.random.default_rng(12)
        flip = np.kron(X_FLIP, X_FLIP)
        for _ in range(200):
            alpha, j = random_alpha_j(rng)
            beta = np.sqrt(1.0 - alpha ** 2)
            swapped = build_output_state(InputState(beta, alpha), j)
            conjugated = flip @ build_output_state(InputState(alpha, beta), j) @ flip
            assert np.abs(swapped - conjugated).max() <= 1e-14

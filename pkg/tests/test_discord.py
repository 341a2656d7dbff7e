import numpy as np
import pytest

from clonecorr import (InputState, MeasurementBasis, build_output_state,
                       conditional_entropy, conditional_entropy_curve, discord_at,
                       discord_min, discord_surface, measure_b, mutual_info_i,
                       mutual_info_j, swap_qubits, vn_entropy)
from clonecorr.errors import DomainError, InvalidStateError
from oracles import (bell_phi_plus, conditional_entropy_projector, discord_grid_oracle,
                     random_product_state)

# Regression constants, frozen from the projector-based oracles in oracles.py
# (dense 20001-point t grid plus golden refinement, run once at development
# time); see the class docstrings for which point each belongs to.
COND_ENTROPY_A05_J03_T0 = 0.8258372290990348
DISCORD_AT_A05_J03_T0 = 0.5465402061388536
MUTUAL_J_UNIVERSAL = 0.38174900924221644
DISCORD_MIN_UNIVERSAL = 0.281774347176620
DISCORD_MIN_A07_J022 = 0.314734479368055

CLASSICAL_CORRELATED = np.diag([0.5, 0.0, 0.0, 0.5])


def product_state():
    a = np.array([[0.7, 0.2], [0.2, 0.3]])
    b = np.array([[0.6, -0.1], [-0.1, 0.4]])
    return np.kron(a, b), a, b


class TestMeasureB:
    def test_product_state_is_not_steered(self):
        rho, a, _ = product_state()
        for t in (0.0, 0.3, 1.1):
            for outcome in measure_b(rho, MeasurementBasis(t)):
                assert not outcome.degenerate
                np.testing.assert_allclose(outcome.conditional_state, a,
                                           rtol=0, atol=1e-14)

    def test_universal_point_probabilities(self):
        rho = build_output_state(1 / np.sqrt(2), 1 / 6)
        outcomes = measure_b(rho, MeasurementBasis(0.0))
        assert outcomes[0].probability == pytest.approx(0.5, abs=1e-15)
        assert outcomes[1].probability == pytest.approx(0.5, abs=1e-15)

    def test_bell_outcomes(self):
        outcomes = measure_b(bell_phi_plus(), MeasurementBasis(0.0))
        np.testing.assert_allclose(outcomes[0].conditional_state,
                                   [[1.0, 0.0], [0.0, 0.0]], rtol=0, atol=1e-14)
        np.testing.assert_allclose(outcomes[1].conditional_state,
                                   [[0.0, 0.0], [0.0, 1.0]], rtol=0, atol=1e-14)
        for outcome in outcomes:
            assert outcome.probability == pytest.approx(0.5, abs=1e-15)

    def test_probabilities_sum_to_one_and_outcomes_are_states(self):
        from clonecorr.hermat import validate_state
        rng = np.random.default_rng(19)
        for _ in range(100):
            rho = build_output_state(rng.uniform(0, 1), rng.uniform(1 / 6, 0.5))
            basis = MeasurementBasis(rng.uniform(0, np.pi), rng.uniform(0, np.pi))
            outcomes = measure_b(rho, basis)
            assert abs(sum(o.probability for o in outcomes) - 1.0) <= 1e-12
            for o in outcomes:
                if not o.degenerate:
                    validate_state(o.conditional_state)   # raises on violation

    def test_degenerate_outcome_flagged(self):
        rho = np.diag([1.0, 0.0, 0.0, 0.0])  # pure |00>
        outcomes = measure_b(rho, MeasurementBasis(np.pi / 2))
        assert outcomes[0].degenerate and outcomes[0].conditional_state is None
        assert outcomes[1].probability == pytest.approx(1.0, abs=1e-12)

    def test_rejects_invalid_state(self):
        bad = np.diag([1.5, 0.0, 0.0, -0.5])
        with pytest.raises(InvalidStateError):
            measure_b(bad, MeasurementBasis(0.1))


class TestConditionalEntropy:
    def test_product_state_gives_marginal_entropy(self):
        rho, a, _ = product_state()
        ha = vn_entropy(np.linalg.eigvalsh(a))
        for t in np.linspace(0, np.pi / 2, 7):
            assert conditional_entropy(rho, MeasurementBasis(t)) == pytest.approx(
                ha, abs=1e-12)

    def test_bell_state_is_zero(self):
        for t in (0.0, 0.4, 1.2):
            assert abs(conditional_entropy(bell_phi_plus(), MeasurementBasis(t))) <= 1e-12

    def test_frozen_regression_alpha05_j03_t0(self):
        rho = build_output_state(0.5, 0.3)
        value = conditional_entropy(rho, MeasurementBasis(0.0))
        assert value == pytest.approx(COND_ENTROPY_A05_J03_T0, abs=1e-12)

    def test_matches_projector_oracle(self):
        rng = np.random.default_rng(21)
        for _ in range(60):
            rho = build_output_state(rng.uniform(0, 1), rng.uniform(1 / 6, 0.5))
            t, phi = rng.uniform(0, np.pi), rng.uniform(0, np.pi)
            assert conditional_entropy(rho, MeasurementBasis(t, phi)) == pytest.approx(
                conditional_entropy_projector(rho, t, phi), abs=1e-12)

    def test_period_pi_over_2(self):
        rng = np.random.default_rng(25)
        for _ in range(100):
            rho = build_output_state(rng.uniform(0, 1), rng.uniform(1 / 6, 0.5))
            t = rng.uniform(0, np.pi)
            curve = conditional_entropy_curve(rho, [t, t + np.pi / 2])
            assert abs(curve[0] - curve[1]) <= 1e-12

    def test_continuity_in_t(self):
        rng = np.random.default_rng(27)
        delta = 1e-6
        for _ in range(50):
            rho = build_output_state(rng.uniform(0.05, 0.95), rng.uniform(1 / 6, 0.5))
            t = rng.uniform(0, np.pi / 2)
            curve = conditional_entropy_curve(rho, [t, t + delta])
            assert abs(curve[1] - curve[0]) <= 100 * delta


class TestMutualInformation:
    def test_product_state(self):
        rho, _, _ = product_state()
        assert abs(mutual_info_j(rho)) <= 1e-12
        assert abs(mutual_info_i(rho, MeasurementBasis(0.7))) <= 1e-12

    def test_bell_state(self):
        assert mutual_info_j(bell_phi_plus()) == pytest.approx(2.0, abs=1e-12)
        assert mutual_info_i(bell_phi_plus(), MeasurementBasis(0.0)) == pytest.approx(
            1.0, abs=1e-12)

    def test_classically_correlated(self):
        assert mutual_info_i(CLASSICAL_CORRELATED, MeasurementBasis(0.0)) == pytest.approx(
            1.0, abs=1e-12)

    def test_universal_point_frozen(self):
        rho = build_output_state(1 / np.sqrt(2), 1 / 6)
        assert mutual_info_j(rho) == pytest.approx(MUTUAL_J_UNIVERSAL, abs=1e-12)


class TestDiscordAt:
    def test_product_state_zero(self):
        rho, _, _ = product_state()
        for t in (0.0, 0.5, 1.3):
            assert abs(discord_at(rho, MeasurementBasis(t))) <= 1e-12

    def test_classically_correlated_zero(self):
        assert abs(discord_at(CLASSICAL_CORRELATED, MeasurementBasis(0.0))) <= 1e-12

    def test_bell_state_one_bit(self):
        assert discord_at(bell_phi_plus(), MeasurementBasis(0.0)) == pytest.approx(
            1.0, abs=1e-12)

    def test_frozen_regression(self):
        rho = build_output_state(0.5, 0.3)
        assert discord_at(rho, MeasurementBasis(0.0)) == pytest.approx(
            DISCORD_AT_A05_J03_T0, abs=1e-12)

    def test_equals_j_minus_i(self):
        rng = np.random.default_rng(33)
        for _ in range(200):
            rho = build_output_state(rng.uniform(0, 1), rng.uniform(1 / 6, 0.5))
            basis = MeasurementBasis(rng.uniform(0, np.pi), rng.uniform(0, np.pi))
            lhs = discord_at(rho, basis)
            rhs = mutual_info_j(rho) - mutual_info_i(rho, basis)
            assert abs(lhs - rhs) <= 1e-12


class TestDiscordMin:
    def test_product_states_zero(self):
        rng = np.random.default_rng(35)
        for _ in range(20):
            rho = random_product_state(rng)
            result = discord_min(rho)
            assert abs(result.discord) <= 1e-9

    def test_bell_state_one_bit(self):
        result = discord_min(bell_phi_plus())
        assert result.discord == pytest.approx(1.0, abs=1e-9)

    def test_universal_point_frozen_regression(self):
        rho = build_output_state(1 / np.sqrt(2), 1 / 6)
        result = discord_min(rho)
        assert result.discord == pytest.approx(DISCORD_MIN_UNIVERSAL, abs=1e-9)
        assert result.discord > 1e-6
        # optimizer lands at t = 0 (mod pi/2) for the symmetric input
        assert min(result.optimal_t, np.pi / 2 - result.optimal_t) <= 1e-6

    def test_separable_window_point_frozen_regression(self):
        rho = build_output_state(0.7, 0.22)
        result = discord_min(rho)
        assert result.discord == pytest.approx(DISCORD_MIN_A07_J022, abs=1e-9)

    def test_matches_dense_grid_oracle(self):
        rng = np.random.default_rng(39)
        for _ in range(3):
            rho = build_output_state(rng.uniform(0.1, 0.9), rng.uniform(1 / 6, 0.5))
            oracle_value, _ = discord_grid_oracle(rho, npts=4001)
            result = discord_min(rho)
            assert result.discord <= oracle_value + 1e-12
            assert result.discord == pytest.approx(oracle_value, abs=1e-5)

    def test_result_fields_consistent(self):
        rho = build_output_state(0.8, 0.3)
        result = discord_min(rho)
        assert result.discord == pytest.approx(
            result.mutual_info_j - result.mutual_info_i, abs=1e-12)
        basis = MeasurementBasis(result.optimal_t, result.optimal_phi)
        assert conditional_entropy(rho, basis) == pytest.approx(
            result.conditional_entropy, abs=1e-12)
        assert result.discord >= -1e-9

    def test_swap_side_equality(self):
        rho = build_output_state(0.35, 0.28)
        assert np.array_equal(swap_qubits(rho), rho)
        assert discord_min(swap_qubits(rho)).discord == discord_min(rho).discord

    def test_phase_scan_improves_asymmetric_input(self):
        # the y-axis correlation of the output is invisible to the real
        # (phi = 0) family; the phase scan must find a strictly lower value
        rho = build_output_state(0.9, 0.3)
        plain = discord_min(rho)
        scanned = discord_min(rho, scan_phase=True)
        assert scanned.discord <= plain.discord + 1e-12
        assert scanned.discord < plain.discord - 0.05
        assert scanned.discord >= -1e-9

    def test_rejects_small_grid(self):
        with pytest.raises(DomainError):
            discord_min(bell_phi_plus(), grid_points=32)

    def test_rejects_invalid_state(self):
        with pytest.raises(InvalidStateError):
            discord_min(np.diag([1.2, 0.0, 0.0, -0.2]))


class TestDiscordSurface:
    def test_single_point_grid_equals_discord_at(self):
        state = InputState.from_alpha(0.6)
        rows = discord_surface(state, [0.2], [0.4])
        assert len(rows) == 1
        rho = build_output_state(0.6, 0.2)
        assert rows[0].discord == pytest.approx(
            discord_at(rho, MeasurementBasis(0.4)), abs=1e-12)
        assert rows[0].physical

    def test_unphysical_rows_flagged_and_finite(self):
        js = np.round(np.arange(0.1, 0.46, 0.05), 12)
        ts = np.linspace(0.0, np.pi / 2, 7)
        rows = discord_surface(InputState.from_alpha(0.5), js, ts)
        assert len(rows) == len(js) * len(ts)
        assert all(np.isfinite(r.discord) for r in rows)
        flags = {r.j: r.physical for r in rows}
        assert not flags[0.1] and not flags[0.15]   # below the physical window
        assert flags[0.2] and flags[0.45]
        assert all(r.discord > 0 for r in rows if r.physical)

    def test_alpha_beta_relabeling(self):
        # mirrored input gives the same surface with t relabeled to pi/2 - t
        alpha = 0.6
        mirrored = np.sqrt(1 - alpha ** 2)
        js = [0.2, 0.3, 0.45]
        ts = np.linspace(0.0, np.pi / 2, 9)
        rows = discord_surface(InputState.from_alpha(alpha), js, ts)
        rows_m = discord_surface(InputState.from_alpha(mirrored), js, ts[::-1])
        for r, rm in zip(rows, rows_m):
            assert r.j == rm.j
            assert r.t == pytest.approx(np.pi / 2 - rm.t, abs=1e-15)
            assert r.discord == pytest.approx(rm.discord, abs=1e-10)

    def test_rejects_empty_grid(self):
        with pytest.raises(DomainError):
            discord_surface(InputState.from_alpha(0.5), [], [0.1])

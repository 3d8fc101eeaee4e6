import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oscpair import QuantumNumbers, SystemParams, cutoff_angle, diagonalize, energy


def test_decoupled_symmetric_uses_quarter_pi_convention():
    modes = diagonalize(SystemParams(1.0, 1.0, 0.0))
    assert modes.theta == pytest.approx(math.pi / 4)
    assert modes.mu == pytest.approx(1.0)
    assert modes.vartheta_x == pytest.approx(1.0)
    assert modes.vartheta_y == pytest.approx(1.0)


def test_resonant_coupling_splits_frequencies():
    # direct evaluation, cross-checked by diagonalizing the potential matrix
    modes = diagonalize(SystemParams(1.0, 1.0, 0.5))
    assert modes.theta == pytest.approx(math.pi / 4)
    assert modes.vartheta_x**2 == pytest.approx(1.5, abs=1e-14)
    assert modes.vartheta_y**2 == pytest.approx(0.5, abs=1e-14)
    eig = np.linalg.eigvalsh(np.array([[1.0, -0.5], [-0.5, 1.0]]))
    assert modes.vartheta_y**2 == pytest.approx(eig[0], abs=1e-14)
    assert modes.vartheta_x**2 == pytest.approx(eig[1], abs=1e-14)


@pytest.mark.parametrize("omega_x, omega_y, epsilon", [
    (1.0, 1.0, 1.0),      # boundary epsilon = omega_x*omega_y excluded
    (1.0, 1.0, 1.5),
    (1.0, 1.0, -0.1),     # negative couplings rejected
    (0.0, 1.0, 0.0),
    (1.0, -2.0, 0.0),
])
def test_invalid_parameters_rejected(omega_x, omega_y, epsilon):
    with pytest.raises(ValueError):
        SystemParams(omega_x, omega_y, epsilon)


def test_quantum_numbers_must_be_non_negative():
    with pytest.raises(ValueError):
        QuantumNumbers(-1, 0)
    with pytest.raises(ValueError):
        QuantumNumbers(0, -3)


@given(
    omega_x=st.floats(0.2, 3.0),
    omega_y=st.floats(0.2, 3.0),
    frac=st.floats(0.0, 0.999),
)
@settings(max_examples=200, deadline=None)
def test_trace_and_determinant_identities(omega_x, omega_y, frac):
    params = SystemParams(omega_x, omega_y, frac * omega_x * omega_y)
    modes = diagonalize(params)
    vx2, vy2 = modes.vartheta_x**2, modes.vartheta_y**2
    scale = omega_x**2 + omega_y**2
    assert vx2 + vy2 == pytest.approx(scale, rel=1e-13)
    assert vx2 * vy2 == pytest.approx(
        omega_x**2 * omega_y**2 - params.epsilon**2, rel=1e-12, abs=1e-13 * scale**2
    )
    assert modes.vartheta_x >= modes.vartheta_y > 0.0


@given(
    omega_x=st.floats(0.2, 3.0),
    omega_y=st.floats(0.2, 3.0),
    frac=st.floats(1e-3, 0.999),
)
@settings(max_examples=200, deadline=None)
def test_frequency_shift_equals_coupling_times_mixing(omega_x, omega_y, frac):
    # near-degenerate frequencies and vanishing couplings amplify the
    # tan(theta) rounding by sec^2; the degenerate branch itself is
    # covered by the resonance tests
    assume(abs(omega_x - omega_y) > 0.05)
    params = SystemParams(omega_x, omega_y, frac * omega_x * omega_y)
    modes = diagonalize(params)
    shift = params.epsilon * modes.mu
    scale = 1e-10 * (omega_x**2 + omega_y**2)
    assert modes.vartheta_x**2 == pytest.approx(omega_x**2 + shift, rel=1e-9, abs=scale)
    assert modes.vartheta_y**2 == pytest.approx(omega_y**2 - shift, rel=1e-9, abs=scale)


def test_angle_vanishes_with_coupling_and_grows_monotonically():
    # fixed omega_x > omega_y: theta(eps -> 0) -> 0, monotone in eps
    angles = [diagonalize(SystemParams(1.0, 0.7, e)).theta for e in np.linspace(1e-6, 0.69, 40)]
    assert angles[0] == pytest.approx(0.0, abs=1e-5)
    assert all(b > a for a, b in zip(angles, angles[1:]))


def test_swapped_decoupled_corner():
    modes = diagonalize(SystemParams(0.7, 1.0, 0.0))
    assert modes.theta == pytest.approx(math.pi / 2)
    assert math.isinf(modes.mu)
    assert modes.vartheta_x == pytest.approx(1.0)
    assert modes.vartheta_y == pytest.approx(0.7)


class TestCutoffAngle:
    def test_resonant_limit_is_quarter_pi(self):
        assert cutoff_angle(1.0) == pytest.approx(math.pi / 4)

    def test_half_rate_value(self):
        assert cutoff_angle(0.5) == pytest.approx(0.5 * math.atan(4.0 / 3.0), abs=1e-15)
        assert cutoff_angle(0.5) == pytest.approx(0.46364760900080615, abs=1e-12)

    def test_sign_convention_kills_rates_above_one(self):
        for r in (1.0001, 1.5, 2.0, 10.0):
            assert cutoff_angle(r) == 0.0

    def test_rejects_non_positive_rates(self):
        for r in (0.0, -1.0):
            with pytest.raises(ValueError):
                cutoff_angle(r)

    def test_matches_strong_coupling_limit_of_rotation_angle(self):
        # theta(eps -> omega_x*omega_y) approaches theta_c from below
        r = 0.5
        params = SystemParams(1.0, r, (1.0 - 1e-12) * r)
        assert diagonalize(params).theta == pytest.approx(cutoff_angle(r), abs=1e-6)

    def test_increases_toward_quarter_pi_near_resonance(self):
        rates = np.linspace(0.05, 0.999, 60)
        values = [cutoff_angle(float(r)) for r in rates]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert values[-1] < math.pi / 4
        assert values[-1] == pytest.approx(math.pi / 4, abs=2e-3)


class TestEnergy:
    def test_decoupled_ground_state(self):
        assert energy(SystemParams(1.3, 0.4, 0.0), QuantumNumbers(0, 0)) == pytest.approx(
            (1.3 + 0.4) / 2
        )

    def test_resonant_excited_state(self):
        got = energy(SystemParams(1.0, 1.0, 0.5), QuantumNumbers(1, 0))
        assert got == pytest.approx(1.5 * math.sqrt(1.5) + 0.5 * math.sqrt(0.5), abs=1e-14)

    @given(
        omega_y=st.floats(0.3, 2.0),
        frac=st.floats(0.0, 0.99),
        n=st.integers(0, 5),
        m=st.integers(0, 5),
    )
    @settings(max_examples=100, deadline=None)
    def test_spectrum_is_linear_in_each_quantum_number(self, omega_y, frac, n, m):
        params = SystemParams(1.0, omega_y, frac * omega_y)
        modes = diagonalize(params)
        step = energy(params, QuantumNumbers(n + 1, m)) - energy(params, QuantumNumbers(n, m))
        assert step == pytest.approx(modes.vartheta_x, rel=1e-12)

"""Gaussian excitation distributions and the pulse-duration calibration."""

import math

import numpy as np
import pytest

from rydlab import AtomSpec, CoefficientSet, gaussian_packet, pulse_duration


def brute_force_probabilities(sigma, half):
    """Independent oracle: normalize exp(-k^2/(2 sigma^2)) by direct summation."""
    raw = {k: math.exp(-(k * k) / (2.0 * sigma * sigma)) for k in range(-half, half + 1)}
    total = sum(raw.values())
    return {k: v / total for k, v in raw.items()}


def test_gaussian_ratio_forced_by_form():
    """|c_0|^2 / |c_1|^2 = exp(1/(2 sigma^2)) for sigma = 2.5."""
    c = gaussian_packet(AtomSpec(320, 2.5))
    p = c.probabilities
    i0 = int(np.where(c.offsets == 0)[0][0])
    ratio = p[i0] / p[i0 + 1]
    assert ratio == pytest.approx(math.exp(1.0 / (2.0 * 2.5**2)), rel=1e-12)
    assert ratio == pytest.approx(1.0833, rel=1e-4)


def test_normalization():
    for nbar, sigma in ((320, 2.5), (48, 1.5), (36, 0.8), (100, 4.0)):
        c = gaussian_packet(AtomSpec(nbar, sigma))
        assert abs(float(np.sum(c.probabilities)) - 1.0) < 1e-12


def test_window_and_central_weight_48():
    """nbar=48, sigma=1.5: window k = -8..8 and |c_0|^2 from the oracle."""
    c = gaussian_packet(AtomSpec(48, 1.5))
    assert c.offsets.min() == -8 and c.offsets.max() == 8
    oracle = brute_force_probabilities(1.5, 8)
    i0 = int(np.where(c.offsets == 0)[0][0])
    assert c.probabilities[i0] == pytest.approx(oracle[0], rel=1e-12)
    assert round(oracle[0], 4) == 0.2660
    for i, k in enumerate(c.offsets):
        assert c.probabilities[i] == pytest.approx(oracle[int(k)], rel=1e-12)


def test_weights_symmetric_when_unclipped():
    c = gaussian_packet(AtomSpec(320, 2.5))
    assert np.allclose(c.weights, c.weights[::-1], rtol=0, atol=0)
    assert np.all(c.weights.real >= 0) and np.all(c.weights.imag == 0)


def test_window_clipped_at_small_n():
    """nbar=8, sigma=2: the 5-sigma window would reach n = -2; it clips at n = 1."""
    c = gaussian_packet(AtomSpec(8, 2.0))
    assert c.offsets.min() == -7
    assert c.offsets.max() == 10
    assert abs(float(np.sum(c.probabilities)) - 1.0) < 1e-12


def test_pulse_duration_paper_calibrations():
    """160 ps for (320, 2.5) and 900 fs for (48, 1.5), both within 3%."""
    assert pulse_duration(AtomSpec(320, 2.5)) == pytest.approx(160e-12, rel=0.03)
    assert pulse_duration(AtomSpec(48, 1.5)) == pytest.approx(900e-15, rel=0.03)


def test_pulse_duration_inverse_in_sigma():
    """Doubling sigma halves the duration exactly."""
    assert pulse_duration(AtomSpec(320, 5.0)) * 2.0 == pulse_duration(AtomSpec(320, 2.5))


def test_json_round_trip():
    c = gaussian_packet(AtomSpec(48, 1.5))
    rebuilt = CoefficientSet.from_dict(c.to_dict())
    assert rebuilt.nbar == c.nbar
    assert np.array_equal(rebuilt.offsets, c.offsets)
    assert np.array_equal(rebuilt.weights, c.weights)


def test_coefficient_set_validation():
    with pytest.raises(ValueError):
        CoefficientSet(nbar=48, offsets=np.array([-1, 1]), weights=np.array([0.6, 0.8]))
    with pytest.raises(ValueError):
        CoefficientSet(nbar=48, offsets=np.array([0, 1]), weights=np.array([1.0, 1.0]))
    with pytest.raises(ValueError):
        CoefficientSet(nbar=48, offsets=np.array([], dtype=int), weights=np.array([]))


def test_weights_are_immutable():
    c = gaussian_packet(AtomSpec(48, 1.5))
    with pytest.raises(ValueError):
        c.weights[0] = 1.0

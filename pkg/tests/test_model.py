import numpy as np
import pytest
from numpy.testing import assert_allclose

from conftest import random_loop_config
from triloop import (DetuningSpec, GaussianTerm, InvalidInputError, LoopConfig,
                     Pulse, TableRangeError, bare_hamiltonian, evaluate_pulse)
from triloop.linalg import is_hermitian


class TestPulses:
    def test_gaussian_peak_value(self):
        p = Pulse.gaussian(peak=1.0, center=0.0, width=1.0)
        assert evaluate_pulse(p, 0.0) == pytest.approx(1.0)

    def test_gaussian_one_width_out(self):
        p = Pulse.gaussian(peak=2.0, center=1.0, width=0.5)
        assert evaluate_pulse(p, 1.5) == pytest.approx(2.0 * np.exp(-1.0))

    def test_constant(self):
        p = Pulse.constant(0.5)
        for t in (-10.0, 0.0, 3.7):
            assert evaluate_pulse(p, t) == pytest.approx(0.5)

    def test_sum_of_gaussians(self):
        p = Pulse.sum_of_gaussians([(1.0, -1.0, 1.0), (0.5, 1.0, 2.0)])
        expected = np.exp(-1.0) + 0.5 * np.exp(-0.25)
        assert evaluate_pulse(p, 0.0) == pytest.approx(expected)

    def test_tabulated_interpolates(self):
        p = Pulse.tabulated([0.0, 1.0, 2.0], [0.0, 2.0, 0.0])
        assert evaluate_pulse(p, 0.5) == pytest.approx(1.0)

    def test_tabulated_range_error(self):
        p = Pulse.tabulated([0.0, 1.0], [1.0, 1.0])
        with pytest.raises(TableRangeError):
            evaluate_pulse(p, 1.5)

    def test_gaussian_derivative_analytic(self):
        p = Pulse.gaussian(peak=1.3, center=0.2, width=0.8)
        ts = np.linspace(-2, 2, 17)
        h = 1e-5
        fd = (p.envelope(ts - 2 * h) - 8 * p.envelope(ts - h)
              + 8 * p.envelope(ts + h) - p.envelope(ts + 2 * h)) / (12 * h)
        assert_allclose(p.envelope_dot(ts), fd, atol=1e-10)

    def test_width_must_be_positive(self):
        with pytest.raises(InvalidInputError):
            Pulse.gaussian(1.0, 0.0, 0.0)

    def test_synthesized_requires_callable(self):
        with pytest.raises(InvalidInputError):
            Pulse(shape="synthesized")


class TestLoopConfig:
    def test_c_phase_must_vanish(self):
        with pytest.raises(InvalidInputError):
            LoopConfig(pulse_p=Pulse.constant(1.0),
                       pulse_s=Pulse.constant(1.0),
                       pulse_c=Pulse.constant(1.0, phase=0.3))


class TestBareHamiltonian:
    def test_detunings_only(self):
        cfg = LoopConfig(pulse_p=Pulse.constant(0.0),
                         pulse_s=Pulse.constant(0.0),
                         pulse_c=Pulse.constant(0.0),
                         detunings=DetuningSpec.constants(1.0, 2.0))
        assert_allclose(bare_hamiltonian(cfg, 0.3), np.diag([0.0, 1.0, 2.0]))

    def test_direct_substitution(self):
        cfg = LoopConfig(pulse_p=Pulse.constant(1.0),
                         pulse_s=Pulse.constant(2.0),
                         pulse_c=Pulse.constant(1.0))
        expected = np.array([[0.0, 0.5, 0.5],
                             [0.5, 0.0, 1.0],
                             [0.5, 1.0, 0.0]])
        assert_allclose(bare_hamiltonian(cfg, 0.0), expected)

    def test_strong_preset_at_pulse_center(self):
        # matched P/C at 30/sqrt(2), S one time unit past its center
        from triloop import preset
        cfg = preset("fig5").cfg
        w = bare_hamiltonian(cfg, 0.5)
        assert abs(w[0, 1]) == pytest.approx(0.5 * 30.0 / np.sqrt(2))
        assert abs(w[0, 2]) == pytest.approx(0.5 * 30.0 / np.sqrt(2))
        assert abs(w[1, 2]) == pytest.approx(0.5 * 30.0 * np.exp(-1.0))

    def test_hermitian_and_gauge_on_random_configs(self):
        rng = np.random.default_rng(99)
        for _ in range(20):
            cfg = random_loop_config(rng)
            for t in rng.uniform(-3, 3, size=5):
                w = bare_hamiltonian(cfg, t)
                assert is_hermitian(w)
                assert w[0, 0] == 0.0

    def test_coupling_magnitudes(self):
        rng = np.random.default_rng(7)
        cfg = random_loop_config(rng)
        ts = np.linspace(-2, 2, 9)
        for t in ts:
            w = bare_hamiltonian(cfg, t)
            assert abs(w[0, 1]) == pytest.approx(
                abs(cfg.pulse_p.envelope(t)) / 2, abs=1e-14)
            assert abs(w[0, 2]) == pytest.approx(
                abs(cfg.pulse_c.envelope(t)) / 2, abs=1e-14)
            assert abs(w[1, 2]) == pytest.approx(
                abs(cfg.pulse_s.envelope(t)) / 2, abs=1e-14)

    def test_time_dependent_detunings(self):
        from triloop import Detuning
        det = Detuning.sum_of_gaussians([GaussianTerm(-0.5, 0.5, 1.0)])
        cfg = LoopConfig(pulse_p=Pulse.constant(0.0),
                         pulse_s=Pulse.constant(0.0),
                         pulse_c=Pulse.constant(0.0),
                         detunings=DetuningSpec(det, det))
        w = bare_hamiltonian(cfg, 0.5)
        assert w[1, 1] == pytest.approx(-0.5)
        assert w[2, 2] == pytest.approx(-0.5)

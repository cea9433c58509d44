import math

import numpy as np
import pytest

from qdlab.grid import Field, Grid, plane_wave
from qdlab.gpe import (
    GpState,
    analytic_frequency,
    gp_energy,
    gp_evolve,
    gp_mass,
    gp_step,
    internal_energy,
    linear_vs_nonlinear,
    madelung,
    measure_dispersion,
    measure_frequency,
    perturbed_state,
    phase_guard,
    predicted_omega,
)

SMALL = Grid(2, 16, 2 * math.pi)
WIDE = Grid(2, 32, 16 * math.pi)


def test_rest_state_is_fixed_point():
    s = GpState(Field(SMALL, np.ones(SMALL.shape, dtype=complex)), 0.0, 0.01)
    out = gp_evolve(s, 10_000)
    assert np.max(np.abs(out.psi.values - 1.0)) < 1e-14
    assert out.time == pytest.approx(100.0)


def test_free_particle_phase():
    w = plane_wave(SMALL, (3, 1))
    s = GpState(w, 0.0, 0.01)
    out = gp_evolve(s, 250, nonlinear=False)
    xi2 = 10 * SMALL.dk**2
    ref = np.exp(-0.5j * xi2 * 2.5) * w.values
    assert np.max(np.abs(out.psi.values - ref)) < 1e-12


def test_step_matches_evolve():
    s = perturbed_state(SMALL, (1, 2), 0.2, 0.01)
    a = s
    for _ in range(5):
        a = gp_step(a)
    b = gp_evolve(s, 5)
    assert np.max(np.abs(a.psi.values - b.psi.values)) < 1e-14


def test_strang_second_order():
    g = Grid(2, 32, 4 * math.pi)
    k = (2, 0)
    period = 2 * math.pi / predicted_omega(g.dk * 2)

    def run(n):
        return gp_evolve(perturbed_state(g, k, 0.3, period / n), n).psi.values

    ref = run(6400)
    errs = [np.linalg.norm(run(n) - ref) for n in (200, 400)]
    assert 3.6 < errs[0] / errs[1] < 4.4


def test_phase_guard():
    g = Grid(2, 64, 2 * math.pi)
    top = g.xi_abs.max() ** 2
    phase_guard(g, 0.99 * 2 * math.pi / top)
    with pytest.raises(ValueError):
        phase_guard(g, 2 * math.pi / top)
    with pytest.raises(ValueError):
        gp_step(GpState(Field(g, np.ones(g.shape, dtype=complex)), 0.0, 1.0))
    with pytest.raises(ValueError):
        GpState(Field(g, np.ones(g.shape, dtype=complex)), 0.0, 0.0)


def test_madelung_examples():
    m = madelung(GpState(Field(SMALL, np.ones(SMALL.shape, dtype=complex)), 0.0, 0.1))
    assert np.allclose(m.rho.values, 1.0, atol=1e-15)
    assert np.max(np.abs(m.j.values)) < 1e-14
    m = madelung(GpState(plane_wave(SMALL, (2, -1)), 0.0, 0.1))
    assert np.allclose(m.rho.values, 1.0, atol=1e-14)
    assert np.allclose(m.j.values[0], 2 * SMALL.dk, atol=1e-12)
    assert np.allclose(m.j.values[1], -SMALL.dk, atol=1e-12)


def test_internal_energy():
    assert internal_energy(1.0) == pytest.approx(0.5)
    h = 1e-6
    assert abs(internal_energy(1 + h) - internal_energy(1 - h)) / (2 * h) < 1e-8
    rho = np.linspace(0, 3, 7)
    assert np.allclose(internal_energy(rho), ((rho - 1) ** 2 + 1) / 2)
    assert internal_energy(2.0, gamma=3.0) == pytest.approx((8 - 3) / 6)
    with pytest.raises(ValueError):
        internal_energy(1.0, gamma=1.0)
    with pytest.raises(ValueError):
        internal_energy(-0.1)


def test_mass_and_energy_conservation():
    s = perturbed_state(Grid(2, 32, 4 * math.pi), (1, 1), 0.3, 0.005)
    m0, e0 = gp_mass(s.psi), gp_energy(s.psi)
    out = gp_evolve(s, 1000)
    assert abs(gp_mass(out.psi) - m0) / m0 < 1e-10
    # the instantaneous Strang energy error is O(dt^2) and bounded
    assert abs(gp_energy(out.psi) - e0) / e0 < 1e-4
    with pytest.raises(ValueError):
        gp_energy(out.psi.values)
    assert gp_mass(out.psi.values, out.grid) == pytest.approx(gp_mass(out.psi))


def test_analytic_frequency_synthetic():
    # whole number of periods, as measure_frequency arranges
    t = np.linspace(0, 17 * 2 * math.pi / 1.7, 3001)
    assert analytic_frequency(t, 2 + np.cos(1.7 * t + 0.3)) == pytest.approx(1.7, rel=1e-5)


def test_measure_frequency_guards():
    with pytest.raises(ValueError, match="amplitude"):
        measure_frequency(WIDE, (1, 0), 2e-3, 400.0, 0.05)
    with pytest.raises(ValueError, match="horizon"):
        measure_frequency(WIDE, (1, 0), 1e-3, 100.0, 0.05)
    with pytest.raises(ValueError):
        measure_frequency(WIDE, (0, 0), 1e-3, 100.0, 0.05)


def test_phonon_branch():
    m = measure_dispersion(WIDE, (1, 0), 1e-3, dt=0.05)
    assert m.xi_abs == pytest.approx(0.125)
    assert abs(m.omega_measured / m.xi_abs - 1) < 0.01
    assert m.rel_error < 1e-4
    assert m.mass_drift < 1e-10 and m.energy_drift < 1e-8


def test_free_particle_branch():
    g = Grid(2, 64, 2 * math.pi)
    m = measure_dispersion(g, (20, 0), 1e-3, dt=0.0005)
    assert abs(m.omega_measured / (m.xi_abs**2 / 2) - 1) < 0.02
    assert m.rel_error < 1e-3


def test_general_band_point():
    m = measure_dispersion(WIDE, (8, 0), 1e-3, dt=0.01)
    assert m.xi_abs == pytest.approx(1.0)
    assert m.rel_error < 0.01


def test_linear_vs_nonlinear():
    k = (4, 0)
    T = 3 * 2 * math.pi / predicted_omega(WIDE.dk * 4)
    assert linear_vs_nonlinear(WIDE, k, 0.0, T) == 0.0
    d1 = linear_vs_nonlinear(WIDE, k, 1e-3, T)
    d2 = linear_vs_nonlinear(WIDE, k, 5e-4, T)
    assert 0.4 <= d2 / d1 <= 0.6
    assert linear_vs_nonlinear(WIDE, k, 1e-4, T) < 1e-3

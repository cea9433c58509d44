import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdlab.dispersion import DispersionParams, group_velocity, h_inv_sqrt
from qdlab.grid import DyadicCutoff
from qdlab.oscillatory import (
    OscIntegralSpec,
    RadialRule,
    as_params,
    asymptotic_onset,
    block_mass,
    decay_fit,
    decay_scan,
    eps_dispersive_check,
    eps_weight,
    osc_integral,
    required_quad_points,
    sup_over_x,
    tensor_osc_integral,
)

C1 = DyadicCutoff(1.0)


def relerr(a, b):
    return abs(a - b) / abs(b)


@pytest.mark.parametrize("d,n", [(2, 512), (3, 128)])
def test_t0_mass_matches_lattice_sum(d, n):
    spec = OscIntegralSpec(d, 0.0, 0.0, C1, 1.0, 4096)
    assert relerr(osc_integral(spec), tensor_osc_integral(spec, n)) < 1e-6
    assert block_mass(d, C1) == pytest.approx(osc_integral(spec).real, rel=1e-14)


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("t", [0.5, 7.0, 300.0])
def test_modulus_bound(d, t):
    assert abs(osc_integral(OscIntegralSpec(d, t, 0.0, C1, 1.0))) <= block_mass(d, C1) * (1 + 1e-12)


def test_d2_t100_matches_tensor_oracle():
    spec = OscIntegralSpec(2, 100.0, 0.0, C1, 1.0)
    assert relerr(osc_integral(spec), tensor_osc_integral(spec, 1536)) < 1e-6


@pytest.mark.parametrize("seed", range(5))
def test_random_specs_match_tensor_oracle(seed):
    rng = np.random.default_rng(seed)
    for d, n in ((2, 512), (3, 128)):
        R = float(rng.uniform(0.5, 1.5))
        eps = float(rng.uniform(0.3, 1.0))
        kappa = float(rng.uniform(0.3, 1.5))
        spec = OscIntegralSpec(d, float(rng.uniform(0.0, 3.0)), float(rng.uniform(0.0, 3.0)),
                               DyadicCutoff(R), DispersionParams(eps, kappa))
        h = 2 * spec.cutoff.support[1] / n
        # resolve the Cartesian phase: at most ~ pi/3 per lattice step
        assert h * (spec.t * group_velocity(spec.cutoff.support[1], spec.dparams) + spec.x_abs) < 1.1
        assert relerr(osc_integral(spec), tensor_osc_integral(spec, n)) < 1e-6


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("t,x", [(10.0, 0.0), (1000.0, 2000.0), (5000.0, 100.0)])
def test_quadrature_self_convergence(d, t, x):
    spec = OscIntegralSpec(d, t, x, C1, 1.0)
    a = osc_integral(spec)
    b = osc_integral(OscIntegralSpec(d, t, x, C1, 1.0, 2 * spec.quad_points))
    scale = max(abs(b), 1e-3 * block_mass(d, C1) * (t * 1.0) ** (-d / 2))
    assert abs(a - b) / scale < 1e-8


def test_resolution_refusal_and_validation():
    need = required_quad_points(100.0, 0.0, C1, 1.0)
    assert need % 4 == 0 and need >= 8 * 100 * group_velocity(2.0, DispersionParams(1, 1))
    with pytest.raises(ValueError, match="under-resolves"):
        OscIntegralSpec(2, 100.0, 0.0, C1, 1.0, need - 4)
    with pytest.raises(ValueError):
        OscIntegralSpec(4, 1.0, 0.0, C1, 1.0)
    with pytest.raises(ValueError):
        OscIntegralSpec(2, -1.0, 0.0, C1, 1.0)
    with pytest.raises(ValueError):
        sup_over_x(2, 10.0, C1, 1.0, n_x=16)
    assert as_params(0.5) == DispersionParams(1.0, 0.5)


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("t", [300.0, 3000.0])
def test_argmax_in_stationary_window(d, t):
    p = DispersionParams(1.0, 1.0)
    _, xm = sup_over_x(d, t, C1, p)
    assert t * group_velocity(0.5, p) <= xm <= t * group_velocity(2.0, p)


def test_sup_refinement_beats_scan():
    t = 500.0
    s, xm = sup_over_x(2, t, C1, 1.0)
    rule = RadialRule(2, t, C1, 1.0, required_quad_points(t, xm, C1, 1.0))
    xs = np.linspace(0, 2 * t * group_velocity(2.0, DispersionParams(1, 1)), 64)
    assert s >= max(abs(rule(x)) for x in xs)
    assert s == pytest.approx(abs(rule(xm)), rel=1e-12)


@pytest.mark.parametrize("d", [2, 3])
def test_sup_decays_and_stationary_phase_constant(d):
    t0 = asymptotic_onset(C1, 1.0)
    ts = [2 * t0 * 2**k for k in range(5)]
    rows = decay_scan(d, ts, C1, 1.0)
    sups = [r.sup for r in rows]
    assert all(b < a for a, b in zip(sups, sups[1:]))
    consts = [r.sup * r.t ** (d / 2) / h_inv_sqrt(1.0, 1.0, d) for r in rows]
    assert max(consts) / min(consts) < 1.2


def test_synthetic_decay_fits():
    ts = np.logspace(2, 4, 9)
    f = decay_fit(zip(ts, ts**-1.5))
    assert f.slope == pytest.approx(-1.5, abs=1e-12) and f.r_squared == pytest.approx(1.0, abs=1e-12)
    f = decay_fit(zip(ts, 3 / ts))
    assert f.slope == pytest.approx(-1.0, abs=1e-12) and f.intercept == pytest.approx(math.log(3), abs=1e-12)
    with pytest.raises(ValueError):
        decay_fit(zip(ts[:5], ts[:5] ** -1))
    with pytest.raises(ValueError):
        decay_fit(zip(np.linspace(100, 500, 9), np.ones(9)))


def test_eps_check_delta_range_and_reduction():
    with pytest.raises(ValueError):
        eps_dispersive_check(2, 100.0, C1, 1.0, 0.5)
    with pytest.raises(ValueError):
        eps_dispersive_check(3, 100.0, C1, 1.0, 0.6)
    p = DispersionParams(0.5, 1.0)
    assert eps_weight(p, 1.0, 0.0) == 1.0
    s, _ = sup_over_x(3, 500.0, C1, p)
    assert eps_dispersive_check(3, 500.0, C1, p, 0.0) == pytest.approx(s * 500.0**1.5, rel=1e-12)


@settings(max_examples=20)
@given(eps=st.floats(0.1, 1.0), t=st.floats(0.0, 30.0), x=st.floats(0.0, 20.0),
       d=st.sampled_from([2, 3]), kappa=st.floats(0.3, 2.0))
def test_scaling_identity(eps, t, x, d, kappa):
    R = 1.0
    lhs = osc_integral(OscIntegralSpec(d, t, x, DyadicCutoff(R), DispersionParams(eps, kappa)))
    rhs_spec = OscIntegralSpec(d, t / eps**2, x / eps, DyadicCutoff(eps * R), DispersionParams(1.0, kappa))
    rhs = eps ** (-d) * osc_integral(rhs_spec)
    assert abs(lhs - rhs) <= 1e-8 * max(abs(lhs), 1e-6 * block_mass(d, DyadicCutoff(R)))

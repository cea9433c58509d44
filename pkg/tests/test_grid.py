import math
import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qdlab.dispersion import DispersionParams
from qdlab.grid import (
    Domain,
    DyadicCutoff,
    Field,
    Grid,
    SqrtKind,
    VectorField,
    apply_radial_multiplier,
    divergence,
    dyadic_project,
    fft,
    gradient,
    helmholtz_P,
    helmholtz_Q,
    ifft,
    ladder_range,
    plane_wave,
    random_field,
    riesz_divergence,
    riesz_gradient,
    sqrt_op,
    sqrt_symbol,
    unit_derivative_constants,
    zero_mode_removed,
)

G2 = Grid(2, 32, 2 * math.pi)
G3 = Grid(3, 16, 2 * math.pi)


def rel(a, b):
    return np.linalg.norm((a - b).ravel()) / max(np.linalg.norm(b.ravel()), 1e-300)


def test_grid_validation_and_lattice():
    with pytest.raises(ValueError):
        Grid(4, 8, 1.0)
    with pytest.raises(ValueError):
        Grid(2, 12, 1.0)
    with pytest.raises(ValueError):
        Grid(2, 8, 0.0)
    g = Grid(1, 8, 4.0)
    assert g.spacing * g.n == g.box_length
    assert sorted(g.k_int.tolist()) == list(range(-4, 4))
    assert np.allclose(np.sort(g.xi[0].ravel()), 2 * np.pi * np.arange(-4, 4) / 4.0)
    assert g.nyquist_mask.sum() == 1


@pytest.mark.parametrize("grid", [Grid(1, 64, 3.0), G2, G3])
def test_fft_roundtrip_and_parseval(grid):
    f = random_field(grid, 1, band_limited=False)
    g = fft(f)
    back = ifft(g)
    assert np.max(np.abs(back.values - f.values)) / np.max(np.abs(f.values)) < 1e-13
    assert abs(g.l2() - f.l2()) / f.l2() < 1e-13


def test_fft_delta_is_constant():
    v = np.zeros(G2.shape, dtype=complex)
    v[0, 0] = 1.0
    g = fft(Field(G2, v))
    assert np.allclose(g.values, g.values[0, 0], atol=1e-15)


def test_wrong_domain_tag():
    f = random_field(G2, 0)
    with pytest.raises(ValueError):
        ifft(f)
    with pytest.raises(ValueError):
        fft(f.to(Domain.FREQUENCY))
    with pytest.raises(ValueError):
        Field(G2, np.zeros((3, 3)))


def test_multiplier_identity_eigenfunction_composition():
    f = random_field(G2, 2)
    assert np.allclose(apply_radial_multiplier(f, lambda r: np.ones_like(r)).values, f.values, atol=1e-14)
    w = plane_wave(G2, (3, -2))
    lap = apply_radial_multiplier(w, lambda r: r**2)
    assert rel(lap.values, 13.0 * w.values) < 1e-13
    m1 = lambda r: np.exp(-r)
    m2 = lambda r: 1 + r**3
    fh = f.to(Domain.FREQUENCY)
    a = apply_radial_multiplier(apply_radial_multiplier(fh, m1), m2)
    b = apply_radial_multiplier(fh, lambda r: m1(r) * m2(r))
    assert rel(a.values, b.values) < 1e-13
    with pytest.raises(ValueError):
        apply_radial_multiplier(f, lambda r: np.where(r > 1, np.nan, 1.0))


def test_real_multiplier_preserves_real_fields():
    f = random_field(G3, 3, real=True)
    p = DispersionParams(0.3, 0.5)
    for kind in SqrtKind:
        out = sqrt_op(f, kind, p, alpha=0.7).to(Domain.SPACE)
        assert np.max(np.abs(out.values.imag)) < 1e-12


def test_helmholtz_examples():
    g = random_field(G3, 4)
    v = gradient(g)
    assert rel(helmholtz_Q(v).values, v.values) < 1e-12
    assert np.linalg.norm(helmholtz_P(v).values) < 1e-12 * np.linalg.norm(v.values)
    # divergence-free in d=2: v^ = xi_perp * a(xi)
    a = random_field(G2, 5).to(Domain.FREQUENCY).values
    vp = VectorField(G2, np.stack([-np.broadcast_to(G2.xi[1], G2.shape) * a,
                                    np.broadcast_to(G2.xi[0], G2.shape) * a]), Domain.FREQUENCY)
    assert np.linalg.norm(helmholtz_Q(vp).values) < 1e-12 * np.linalg.norm(vp.values)


def test_projection_identities_random():
    v = VectorField.from_components([random_field(G3, s) for s in (6, 7, 8)])
    q = helmholtz_Q(v)
    p = helmholtz_P(v)
    assert rel(helmholtz_Q(q).values, q.values) < 1e-12
    assert np.linalg.norm(helmholtz_P(q).values) < 1e-12 * np.linalg.norm(v.values)
    assert rel((p + q).values, v.values) < 1e-15
    assert np.linalg.norm(divergence(p).values) < 1e-12 * np.linalg.norm(v.values) * G3.xi_max


def test_riesz_pair_inverts_on_gradients():
    g = zero_mode_removed(random_field(G3, 9))
    v = gradient(g)
    back = riesz_gradient(riesz_divergence(v))
    assert rel(back.to(Domain.SPACE).values, v.to(Domain.SPACE).values) < 1e-12


def test_sqrt_symbols():
    p = DispersionParams(1.0, 1.0)
    assert sqrt_symbol(SqrtKind.U_EPS, np.array(1.0), p, alpha=1.0) == pytest.approx(1 / math.sqrt(2))
    f = random_field(G2, 10)
    assert np.allclose(sqrt_op(f, SqrtKind.U_EPS, p, alpha=0.0).values, f.values, atol=1e-14)
    with pytest.raises(ValueError):
        sqrt_op(f, SqrtKind.U_EPS, p, alpha=-0.1)
    with pytest.raises(ValueError):
        sqrt_op(f, SqrtKind.U_EPS, None)
    w = plane_wave(G2, (1, 1))
    out = sqrt_op(w, SqrtKind.MINUS_LAPLACIAN)
    assert rel(out.values, math.sqrt(2) * w.values) < 1e-13
    inv = sqrt_op(sqrt_op(f, SqrtKind.MINUS_LAPLACIAN), SqrtKind.MINUS_LAPLACIAN, power=-1)
    assert rel(inv.values, zero_mode_removed(f).values) < 1e-13


@given(eps=st.floats(1e-3, 2.0), alpha=st.floats(0.0, 2.0))
def test_u_eps_bounds(eps, alpha):
    p = DispersionParams(eps, 1.0)
    xi = G2.xi_abs
    m = sqrt_symbol(SqrtKind.U_EPS, xi, p, alpha=1.0)
    assert np.all(m <= eps * xi + 1e-15)
    f = random_field(G2, 11)
    u = sqrt_op(f, SqrtKind.U_EPS, p, alpha=alpha)
    assert u.l2() <= (eps * xi.max()) ** alpha * f.l2() * (1 + 1e-12)


def test_multipliers_commute():
    p = DispersionParams(0.4, 0.5)
    f = random_field(G3, 12)
    a = dyadic_project(sqrt_op(f, SqrtKind.U_EPS, p, alpha=0.3), 1)
    b = sqrt_op(dyadic_project(f, 1), SqrtKind.U_EPS, p, alpha=0.3)
    assert rel(a.values, b.values) < 1e-13


def test_cutoff_support_and_partition():
    c = DyadicCutoff(1.0)
    r = np.linspace(0, 5, 20001)
    vals = c(r)
    assert np.all(vals[(r < 0.5) | (r > 2.0)] == 0)
    assert c(1.0) == pytest.approx(1.0)
    rr = np.logspace(-3, 3, 5001)
    total = sum(DyadicCutoff(2.0**k)(rr) for k in range(-13, 13))
    assert np.max(np.abs(total - 1)) < 1e-12
    sharp = DyadicCutoff(1.0, sharp=True)
    total = sum(DyadicCutoff(2.0**k, sharp=True)(rr) for k in range(-13, 13))
    assert np.all(total == 1)
    assert sharp.support == pytest.approx((1 / math.sqrt(2), math.sqrt(2)))
    with pytest.raises(ValueError):
        DyadicCutoff(0.0)


@pytest.mark.parametrize("R", [0.25, 1.0, 4.0])
def test_cutoff_derivative_constants(R):
    consts = DyadicCutoff(R).derivative_constants
    h = 1e-3 * R
    r = np.arange(R / 2 - 10 * h, 2 * R + 10 * h, h)
    deriv = DyadicCutoff(R)(r)
    for k in range(1, 5):
        deriv = np.gradient(deriv, h)
        assert np.max(np.abs(deriv)) <= consts[k] * R**-k * 1.05
    assert unit_derivative_constants() is unit_derivative_constants()


def test_dyadic_ladder_sums_to_mean_free_field():
    f = random_field(G3, 13, band_limited=False)
    total = sum(dyadic_project(f, k).to(Domain.SPACE).values for k in ladder_range(G3))
    assert rel(total, zero_mode_removed(f).values) < 1e-12


def test_dyadic_blocks():
    w = plane_wave(G2, (4, 0))  # |xi| = 4 = 2^2
    assert rel(dyadic_project(w, 2).values, w.values) < 1e-14
    f = random_field(G2, 14)
    a = dyadic_project(dyadic_project(f, 0), 2)
    assert np.max(np.abs(a.values)) < 1e-15
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always")
        z = dyadic_project(f, 12)
    assert np.all(z.values == 0) and rec

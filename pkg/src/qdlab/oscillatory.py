"""Stationary-phase integrals ``I(t, x, R) = int exp(i t phi(|xi|) + i x.xi) chi_R(|xi|) dxi``.

Radial symmetry reduces the integral to one dimension::

    d = 2:  2 pi int J0(|x| r) exp(i t phi(r)) chi(r) r dr
    d = 3:  4 pi int sinc(|x| r) exp(i t phi(r)) chi(r) r^2 dr

evaluated with composite Gauss-Legendre panels over the block support.
A Cartesian tensor-grid quadrature is kept as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import j0

from .dispersion import DispersionParams, group_velocity, phi_derivatives, phi_eps
from .fits import DecayFit, loglog_fit
from .grid import DyadicCutoff

NODES_PER_PANEL = 4
# The smooth cutoff profile alone needs a few hundred nodes to reach 1e-12.
MIN_QUAD_POINTS = 512
_GL_X, _GL_W = np.polynomial.legendre.leggauss(NODES_PER_PANEL)


def as_params(params) -> DispersionParams:
    """Accept :class:`DispersionParams` or a bare kappa (meaning eps = 1)."""
    if isinstance(params, DispersionParams):
        return params
    return DispersionParams(1.0, float(params))


def required_quad_points(t: float, x_abs: float, cutoff: DyadicCutoff, params) -> int:
    """Node count keeping the phase advance per panel below pi/4.

    A fixed floor resolves the cutoff profile when the phase is slow.
    """
    p = as_params(params)
    vmax = group_velocity(cutoff.support[1], p)
    n = math.ceil(8.0 * (t * vmax + x_abs) * cutoff.R)
    n = max(n, MIN_QUAD_POINTS)
    return NODES_PER_PANEL * math.ceil(n / NODES_PER_PANEL)


@dataclass(frozen=True)
class OscIntegralSpec:
    d: int
    t: float
    x_abs: float
    cutoff: DyadicCutoff
    params: object
    quad_points: int | None = None

    def __post_init__(self):
        if self.d not in (2, 3):
            raise ValueError("d must be 2 or 3")
        if self.t < 0 or self.x_abs < 0:
            raise ValueError("t and |x| must be non-negative")
        need = required_quad_points(self.t, self.x_abs, self.cutoff, self.params)
        if self.quad_points is None:
            object.__setattr__(self, "quad_points", need)
        elif self.quad_points < need:
            raise ValueError(f"quad_points={self.quad_points} under-resolves the phase; need >= {need}")

    @property
    def dparams(self) -> DispersionParams:
        return as_params(self.params)


class RadialRule:
    """Gauss-Legendre nodes on the block support with the x-independent weight folded in."""

    def __init__(self, d: int, t: float, cutoff: DyadicCutoff, params, quad_points: int):
        self.d = d
        p = as_params(params)
        lo, hi = cutoff.support
        panels = max(1, quad_points // NODES_PER_PANEL)
        edges = np.linspace(lo, hi, panels + 1)
        half = 0.5 * np.diff(edges)
        mid = 0.5 * (edges[1:] + edges[:-1])
        self.r = (mid[:, None] + half[:, None] * _GL_X[None, :]).ravel()
        w = (half[:, None] * _GL_W[None, :]).ravel()
        surface = 2 * np.pi if d == 2 else 4 * np.pi
        self.weight = surface * w * cutoff(self.r) * self.r ** (d - 1) * np.exp(1j * t * phi_eps(self.r, p))

    def __call__(self, x_abs: float) -> complex:
        z = x_abs * self.r
        kern = j0(z) if self.d == 2 else np.sinc(z / np.pi)
        return complex(np.dot(kern, self.weight))


def osc_integral(spec: OscIntegralSpec) -> complex:
    """Radially reduced value of the oscillatory integral."""
    rule = RadialRule(spec.d, spec.t, spec.cutoff, spec.params, spec.quad_points)
    return rule(spec.x_abs)


def tensor_osc_integral(spec: OscIntegralSpec, n_per_dim: int, chunk: int = 64) -> complex:
    """Brute-force Cartesian trapezoid sum over the cube containing the block.

    The integrand vanishes to all orders at the cube faces, so the plain
    lattice sum converges spectrally once the phase is resolved. ``x``
    is placed on the first axis.
    """
    p = spec.dparams
    hi = spec.cutoff.support[1]
    h = 2 * hi / n_per_dim
    ax = -hi + h * np.arange(n_per_dim)
    total = 0.0 + 0.0j
    rest = np.meshgrid(*([ax] * (spec.d - 1)), indexing="ij")
    rest_sq = sum(a**2 for a in rest)
    for start in range(0, n_per_dim, chunk):
        a0 = ax[start:start + chunk].reshape((-1,) + (1,) * (spec.d - 1))
        rr = np.sqrt(a0**2 + rest_sq[None, ...])
        vals = spec.cutoff(rr) * np.exp(1j * (spec.t * phi_eps(rr, p) + spec.x_abs * a0))
        total += vals.sum()
    return complex(total * h**spec.d)


def block_mass(d: int, cutoff: DyadicCutoff, quad_points: int = 4096) -> float:
    """``int chi(|xi|) dxi``, the t = 0, x = 0 value and a modulus bound for all t."""
    return osc_integral(OscIntegralSpec(d, 0.0, 0.0, cutoff, 1.0, quad_points)).real


def x_scan_range(t: float, cutoff: DyadicCutoff, params) -> float:
    return 2.0 * t * group_velocity(2.0 * cutoff.R, as_params(params))


def sup_over_x(d: int, t: float, cutoff: DyadicCutoff, params, n_x: int = 64,
               tol: float = 1e-6) -> tuple:
    """``(sup_x |I|, argmax |x|)`` by a coarse scan on ``[0, 2 t phi'(2R)]`` and golden refinement."""
    if n_x < 64:
        raise ValueError("n_x must be >= 64")
    xmax = x_scan_range(t, cutoff, params)
    rule = RadialRule(d, t, cutoff, params, required_quad_points(t, xmax, cutoff, params))
    xs = np.linspace(0.0, xmax, n_x)
    vals = np.array([abs(rule(x)) for x in xs])
    i = int(np.argmax(vals))
    best_x, best_v = float(xs[i]), float(vals[i])
    if xmax == 0:
        return best_v, best_x

    def neg(x):
        return -abs(rule(min(max(x, 0.0), xmax)))

    if 0 < i < n_x - 1:
        res = minimize_scalar(neg, bracket=(xs[i - 1], xs[i], xs[i + 1]), method="golden", tol=tol)
    else:
        lo, hi = xs[max(i - 1, 0)], xs[min(i + 1, n_x - 1)]
        res = minimize_scalar(neg, bounds=(lo, hi), method="bounded")
    if -res.fun > best_v:
        best_x, best_v = float(min(max(res.x, 0.0), xmax)), float(-res.fun)
    return best_v, best_x


def asymptotic_onset(cutoff: DyadicCutoff, params, threshold: float = 50.0) -> float:
    """Smallest t with ``t phi''(R) (R/2)^2 >= threshold`` in the block's own variables."""
    p = as_params(params)
    r = p.eps * cutoff.R
    _, d2 = phi_derivatives(r, p.kappa)
    # phi_eps''(R) = phi''(eps R); (R/2)^2 in xi units
    return threshold / (d2 * (cutoff.R / 2.0) ** 2)


def decay_fit(samples) -> DecayFit:
    """Log-log fit of ``(t, sup)`` pairs; needs 8 samples over a decade."""
    samples = list(samples)
    t = [s[0] for s in samples]
    v = [s[1] for s in samples]
    return loglog_fit(t, v, min_samples=8, min_decades=1.0)


def eps_weight(params, R: float, delta: float) -> float:
    p = as_params(params)
    z = p.kappa * p.eps * R
    return (z / math.sqrt(1.0 + z * z)) ** delta


def normalized_ratio(d: int, t: float, sup_val: float, R: float, params, delta: float) -> float:
    p = as_params(params)
    return sup_val * t ** (d / 2.0) * p.kappa ** (d / 2.0) / eps_weight(p, R, delta)


def eps_dispersive_check(d: int, t: float, cutoff: DyadicCutoff, params, delta: float,
                         n_x: int = 64) -> float:
    """``sup_x |I_eps| t^{d/2} kappa^{d/2} / (kappa eps R / sqrt(1 + (eps kappa R)^2))^delta``."""
    if not 0 <= delta <= (d - 2) / 2.0 + 1e-15:
        raise ValueError(f"delta must lie in [0, {(d - 2) / 2}]")
    sup_val, _ = sup_over_x(d, t, cutoff, params, n_x)
    return normalized_ratio(d, t, sup_val, cutoff.R, params, delta)


@dataclass(frozen=True)
class DecayRow:
    t: float
    sup: float
    argmax_x: float
    normalized_ratio: float


def decay_scan(d: int, ts, cutoff: DyadicCutoff, params, delta: float = 0.0, n_x: int = 64) -> list:
    rows = []
    for t in ts:
        s, xm = sup_over_x(d, float(t), cutoff, params, n_x)
        rows.append(DecayRow(float(t), s, xm, normalized_ratio(d, float(t), s, cutoff.R, params, delta)))
    return rows

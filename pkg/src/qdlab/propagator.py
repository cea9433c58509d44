"""Exact per-mode evolution of the linear acoustic system.

Symmetrized variables::

    sigma~ = (1 - eps^2 kappa^2 Delta)^{1/2} sigma
    J~     = (-Delta)^{-1/2} div J

evolve by a rotation of angle ``t * phi_eps(|xi|)`` in every Fourier mode::

    d/dt sigma~ = -H J~
    d/dt J~     = +H sigma~ + F~

so that ``sigma~ + i J~`` is transported by ``exp(i t H)``. Nothing is
time-stepped except the Duhamel quadrature of sampled forcing.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from typing import Iterator, Sequence

import numpy as np

from .dispersion import DispersionParams, phi_eps
from .grid import (
    Domain,
    Field,
    Grid,
    SqrtKind,
    VectorField,
    divergence,
    riesz_divergence,
    riesz_gradient,
    sqrt_symbol,
)


@dataclass(frozen=True)
class SymAcousticState:
    sigma_tilde: Field
    j_tilde: Field
    params: DispersionParams
    time: float = 0.0

    @property
    def grid(self) -> Grid:
        return self.sigma_tilde.grid

    def energy(self) -> float:
        """Lattice quadratic energy ``|sigma~|^2 + |J~|^2``."""
        return self.sigma_tilde.l2() ** 2 + self.j_tilde.l2() ** 2

    def complexified(self) -> Field:
        """``sigma~ + i J~`` (frequency domain)."""
        a = self.sigma_tilde.to(Domain.FREQUENCY)
        b = self.j_tilde.to(Domain.FREQUENCY)
        return a.with_values(a.values + 1j * b.values)


@dataclass(frozen=True)
class AcousticState:
    sigma: Field
    j: VectorField
    params: DispersionParams
    time: float = 0.0


@dataclass(frozen=True, eq=False)
class ForcingTerm:
    """Uniform-in-time samples of the symmetrized forcing ``F~``.

    ``f_tilde`` has shape ``(len(times),) + grid.shape`` and holds spectra.
    ``f`` keeps the vector samples when the forcing was built from them.
    """

    grid: Grid
    times: np.ndarray
    f_tilde: np.ndarray
    f: Sequence[VectorField] | None = field(default=None, repr=False)

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        if t.ndim != 1 or len(t) < 2:
            raise ValueError("need at least two forcing samples")
        if self.f_tilde.shape != (len(t),) + self.grid.shape:
            raise ValueError("f_tilde shape does not match times and grid")
        dt = np.diff(t)
        if np.any(dt <= 0) or not np.allclose(dt, dt[0], rtol=1e-9, atol=0):
            raise ValueError("forcing must be sampled at uniformly spaced times")

    @classmethod
    def from_vector_samples(cls, times, samples: Sequence[VectorField]) -> "ForcingTerm":
        grid = samples[0].grid
        ft = np.stack([riesz_divergence(s).to(Domain.FREQUENCY).values for s in samples])
        return cls(grid, np.asarray(times, dtype=float), ft, tuple(samples))

    @classmethod
    def from_scalar_samples(cls, times, samples: Sequence[Field]) -> "ForcingTerm":
        grid = samples[0].grid
        ft = np.stack([s.to(Domain.FREQUENCY).values for s in samples])
        return cls(grid, np.asarray(times, dtype=float), ft)

    @classmethod
    def zero(cls, grid: Grid, t_end: float, samples: int = 2) -> "ForcingTerm":
        times = np.linspace(0.0, t_end, samples)
        return cls(grid, times, np.zeros((samples,) + grid.shape, dtype=complex))

    def sample(self, i: int) -> Field:
        return Field(self.grid, self.f_tilde[i], Domain.FREQUENCY)


def _symbol(grid: Grid, params: DispersionParams) -> np.ndarray:
    return phi_eps(grid.xi_abs, params)


def symmetrize(state: AcousticState) -> SymAcousticState:
    """Change of variables to the skew-symmetric form; only ``Q(J)`` survives."""
    if state.sigma.grid != state.j.grid:
        raise ValueError("sigma and J live on different grids")
    sym = sqrt_symbol(SqrtKind.ONE_PLUS_EPS2_KAPPA2_MINUS_LAPLACIAN, state.sigma.grid.xi_abs, state.params)
    s = state.sigma.to(Domain.FREQUENCY)
    sigma_t = s.with_values(s.values * sym)
    j_t = riesz_divergence(state.j).to(Domain.FREQUENCY)
    return SymAcousticState(sigma_t, j_t, state.params, state.time)


def desymmetrize(s: SymAcousticState, zero_mode_tol: float = 1e-12) -> AcousticState:
    """Recover ``(sigma, Q(J))``; a nonzero ``J~`` mean cannot be mapped back and is flagged."""
    grid = s.grid
    jt = s.j_tilde.to(Domain.FREQUENCY)
    z = abs(jt.values[(0,) * grid.d])
    if z > zero_mode_tol * max(jt.l2(), 1.0):
        warnings.warn("J~ has zero-mode content that desymmetrize discards", stacklevel=2)
    inv = sqrt_symbol(SqrtKind.ONE_PLUS_EPS2_KAPPA2_MINUS_LAPLACIAN, grid.xi_abs, s.params, power=-1)
    st = s.sigma_tilde.to(Domain.FREQUENCY)
    sigma = st.with_values(st.values * inv)
    return AcousticState(sigma, riesz_gradient(jt), s.params, s.time)


def _rotate(a: np.ndarray, b: np.ndarray, angle: np.ndarray):
    c, sn = np.cos(angle), np.sin(angle)
    return c * a - sn * b, sn * a + c * b


def evolve_homogeneous(s: SymAcousticState, t: float) -> SymAcousticState:
    """Rotate every mode by ``t * phi_eps(|xi|)``; exact in time."""
    a = s.sigma_tilde.to(Domain.FREQUENCY)
    b = s.j_tilde.to(Domain.FREQUENCY)
    na, nb = _rotate(a.values, b.values, t * _symbol(s.grid, s.params))
    return replace(s, sigma_tilde=a.with_values(na), j_tilde=b.with_values(nb), time=s.time + t)


def semigroup_apply(f: Field, t: float, params: DispersionParams) -> Field:
    """``exp(i t H_eps) f`` as the multiplier ``exp(i t phi_eps(|xi|))``."""
    g = f.to(Domain.FREQUENCY)
    out = g.with_values(g.values * np.exp(1j * t * _symbol(f.grid, params)))
    return out.to(f.domain)


def semigroup_trajectory(f: Field, times, params: DispersionParams,
                         domain: Domain = Domain.SPACE) -> Iterator[Field]:
    """Yield ``exp(i t H_eps) f`` at each of ``times``.

    Uniform grids advance by repeated multiplication with the one-step
    factor, which is exact up to roundoff.
    """
    times = np.asarray(times, dtype=float)
    g = f.to(Domain.FREQUENCY)
    sym = _symbol(f.grid, params)
    dt = np.diff(times)
    uniform = len(times) > 2 and np.allclose(dt, dt[0], rtol=1e-12, atol=0)
    cur = g.values * np.exp(1j * times[0] * sym)
    step = np.exp(1j * dt[0] * sym) if uniform else None
    for i, t in enumerate(times):
        if i > 0:
            cur = cur * step if uniform else g.values * np.exp(1j * t * sym)
        yield Field(f.grid, cur, Domain.FREQUENCY).to(domain)


def _panel_stride(forcing: ForcingTerm, t: float, substeps: int) -> int:
    if substeps < 1:
        raise ValueError("substeps must be >= 1")
    times = forcing.times
    m = len(times) - 1
    if m < substeps:
        raise ValueError(f"need at least {substeps + 1} forcing samples, got {m + 1}")
    if not (np.isclose(times[0], 0.0) and np.isclose(times[-1], t, rtol=1e-12, atol=1e-14)):
        raise ValueError("forcing samples must span [0, t]")
    if m % substeps:
        raise ValueError("forcing sample count incompatible with substeps")
    return m // substeps


def duhamel(s0: SymAcousticState, forcing: ForcingTerm, t: float, substeps: int) -> SymAcousticState:
    """Forced evolution: free flow plus the Duhamel integral by the midpoint rule.

    The forcing at each panel midpoint is the mean of the two endpoint
    samples, which keeps the rule second order.
    """
    stride = _panel_stride(forcing, t, substeps)
    free = evolve_homogeneous(s0, t)
    if t == 0:
        return free
    h = t / substeps
    sym = _symbol(s0.grid, s0.params)
    acc_s = np.zeros(s0.grid.shape, dtype=complex)
    acc_j = np.zeros(s0.grid.shape, dtype=complex)
    for j in range(substeps):
        fm = 0.5 * (forcing.f_tilde[j * stride] + forcing.f_tilde[(j + 1) * stride])
        angle = (t - (j + 0.5) * h) * sym
        acc_s -= np.sin(angle) * fm
        acc_j += np.cos(angle) * fm
    a = free.sigma_tilde.to(Domain.FREQUENCY)
    b = free.j_tilde.to(Domain.FREQUENCY)
    return replace(free, sigma_tilde=a.with_values(a.values + h * acc_s),
                   j_tilde=b.with_values(b.values + h * acc_j))


def forced_trajectory(s0: SymAcousticState, forcing: ForcingTerm) -> Iterator[SymAcousticState]:
    """States at every forcing sample time, one midpoint panel per sample interval.

    Equal (up to roundoff) to calling :func:`duhamel` at each sample time
    with one panel per interval, at the cost of a single pass.
    """
    sym = _symbol(s0.grid, s0.params)
    times = forcing.times
    h = times[1] - times[0]
    c1, s1 = np.cos(h * sym), np.sin(h * sym)
    ch, shh = np.cos(0.5 * h * sym), np.sin(0.5 * h * sym)
    a = s0.sigma_tilde.to(Domain.FREQUENCY).values
    b = s0.j_tilde.to(Domain.FREQUENCY).values
    grid = s0.grid
    t0 = s0.time
    yield s0
    for i in range(1, len(times)):
        fm = 0.5 * (forcing.f_tilde[i - 1] + forcing.f_tilde[i])
        a, b = c1 * a - s1 * b - h * shh * fm, s1 * a + c1 * b + h * ch * fm
        yield SymAcousticState(Field(grid, a, Domain.FREQUENCY), Field(grid, b, Domain.FREQUENCY),
                               s0.params, t0 + times[i])


def boussinesq_evolve(sigma0: Field, sigma_dot0: Field, t: float, params: DispersionParams) -> Field:
    """Homogeneous second-order solution ``cos(t phi) s0 + sin(t phi)/phi s0'``.

    The zero mode (phi = 0, a double root) evolves as ``s0 + t s0'``.
    """
    sym = _symbol(sigma0.grid, params)
    a = sigma0.to(Domain.FREQUENCY).values
    b = sigma_dot0.to(Domain.FREQUENCY).values
    sinc_t = t * np.sinc(t * sym / np.pi)
    out = np.cos(t * sym) * a + sinc_t * b
    return Field(sigma0.grid, out, Domain.FREQUENCY).to(sigma0.domain)


def boussinesq_initial_rate(state: AcousticState) -> Field:
    """``d/dt sigma`` at t = 0 from the continuity equation, ``-div J / eps``."""
    d = divergence(state.j).to(Domain.FREQUENCY)
    return d.with_values(-d.values / state.params.eps)

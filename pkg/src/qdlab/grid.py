"""Periodic lattices, unitary FFTs and Fourier multipliers.

The torus ``[0, L)^d`` with ``n`` points per axis stands in for R^d. Fields
carry a domain tag so that multipliers can be applied without guessing
which representation an array is in. Transforms use the unitary ("ortho")
normalization, so lattice l2 norms agree in both domains; continuum norms
multiply by ``spacing**d``.

Odd symbols (gradients, divergences, Riesz-type maps) zero the Nyquist
planes k_i = -n/2, where a real field's coefficient has no partner.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

import numpy as np
import scipy.fft as sfft

from .dispersion import DispersionParams


class Domain(str, enum.Enum):
    SPACE = "space"
    FREQUENCY = "frequency"


@dataclass(frozen=True)
class Grid:
    d: int
    n: int
    box_length: float

    def __post_init__(self):
        if self.d not in (1, 2, 3):
            raise ValueError(f"d must be 1, 2 or 3, got {self.d}")
        if self.n < 2 or self.n & (self.n - 1):
            raise ValueError(f"n must be a power of two, got {self.n}")
        if not self.box_length > 0:
            raise ValueError("box_length must be positive")

    @property
    def spacing(self) -> float:
        return self.box_length / self.n

    @property
    def shape(self) -> tuple:
        return (self.n,) * self.d

    @property
    def cell_volume(self) -> float:
        return self.spacing**self.d

    @property
    def volume(self) -> float:
        return self.box_length**self.d

    @property
    def dk(self) -> float:
        return 2.0 * math.pi / self.box_length

    @property
    def xi_max(self) -> float:
        """Largest per-axis frequency magnitude (the Nyquist frequency)."""
        return math.pi * self.n / self.box_length

    def _bcast(self, axis, arr):
        shp = [1] * self.d
        shp[axis] = self.n
        return arr.reshape(shp)

    @cached_property
    def x(self) -> tuple:
        """Broadcastable coordinate arrays, ``x_j = j * spacing``."""
        x1 = np.arange(self.n) * self.spacing
        return tuple(self._bcast(a, x1) for a in range(self.d))

    @cached_property
    def k_int(self) -> np.ndarray:
        return np.fft.fftfreq(self.n, d=1.0 / self.n).astype(int)

    @cached_property
    def xi(self) -> tuple:
        """Broadcastable frequency arrays ``2 pi k / L`` in FFT order."""
        k1 = self.dk * self.k_int
        return tuple(self._bcast(a, k1) for a in range(self.d))

    @cached_property
    def xi_abs(self) -> np.ndarray:
        s = np.zeros(self.shape)
        for c in self.xi:
            s = s + c**2
        return np.sqrt(s)

    @cached_property
    def nyquist_mask(self) -> np.ndarray:
        """True on every mode with some index equal to -n/2."""
        m = np.zeros(self.shape, dtype=bool)
        for a in range(self.d):
            m |= self._bcast(a, self.k_int == -self.n // 2)
        return m

    def centered_coordinates(self) -> tuple:
        """Coordinates shifted so the box center sits at the origin."""
        half = self.box_length / 2
        return tuple(c - half for c in self.x)


@dataclass(frozen=True, eq=False)
class Field:
    grid: Grid
    values: np.ndarray
    domain: Domain = Domain.SPACE

    def __post_init__(self):
        if self.values.shape != self.grid.shape:
            raise ValueError(f"values shape {self.values.shape} != grid shape {self.grid.shape}")

    def with_values(self, values) -> "Field":
        return Field(self.grid, values, self.domain)

    def to(self, domain: Domain) -> "Field":
        if domain is self.domain:
            return self
        return fft(self) if domain is Domain.FREQUENCY else ifft(self)

    def l2(self) -> float:
        """Lattice l2 norm (no measure weight)."""
        return float(np.linalg.norm(self.values.ravel()))

    def __add__(self, other: "Field") -> "Field":
        other = _match(self, other)
        return self.with_values(self.values + other.values)

    def __sub__(self, other: "Field") -> "Field":
        other = _match(self, other)
        return self.with_values(self.values - other.values)

    def __mul__(self, c) -> "Field":
        return self.with_values(self.values * c)

    __rmul__ = __mul__


def _match(a: Field, b: Field) -> Field:
    if a.grid != b.grid:
        raise ValueError("fields live on different grids")
    return b.to(a.domain)


@dataclass(frozen=True, eq=False)
class VectorField:
    """``d`` components stacked along a leading axis."""

    grid: Grid
    values: np.ndarray
    domain: Domain = Domain.SPACE

    def __post_init__(self):
        want = (self.grid.d,) + self.grid.shape
        if self.values.shape != want:
            raise ValueError(f"values shape {self.values.shape} != {want}")

    @classmethod
    def from_components(cls, comps: Sequence[Field]) -> "VectorField":
        grid, dom = comps[0].grid, comps[0].domain
        if any(c.grid != grid for c in comps):
            raise ValueError("components must share one grid")
        vals = np.stack([c.to(dom).values for c in comps])
        return cls(grid, vals, dom)

    @property
    def components(self) -> list:
        return [Field(self.grid, v, self.domain) for v in self.values]

    def to(self, domain: Domain) -> "VectorField":
        if domain is self.domain:
            return self
        axes = tuple(range(1, self.grid.d + 1))
        if domain is Domain.FREQUENCY:
            vals = sfft.fftn(self.values, axes=axes, norm="ortho")
        else:
            vals = sfft.ifftn(self.values, axes=axes, norm="ortho")
        return VectorField(self.grid, vals, domain)

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.grid, self.values + other.to(self.domain).values, self.domain)

    def __sub__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.grid, self.values - other.to(self.domain).values, self.domain)


# --- transforms -----------------------------------------------------------


def fft(f: Field) -> Field:
    if f.domain is not Domain.SPACE:
        raise ValueError("fft expects a space-domain field")
    return Field(f.grid, sfft.fftn(f.values, norm="ortho"), Domain.FREQUENCY)


def ifft(f: Field) -> Field:
    if f.domain is not Domain.FREQUENCY:
        raise ValueError("ifft expects a frequency-domain field")
    return Field(f.grid, sfft.ifftn(f.values, norm="ortho"), Domain.SPACE)


def real_part(f: Field) -> Field:
    return Field(f.grid, f.to(Domain.SPACE).values.real.astype(complex), Domain.SPACE)


# --- multipliers ----------------------------------------------------------


def apply_radial_multiplier(f: Field, m: Callable) -> Field:
    """Multiply the spectrum of ``f`` by ``m(|xi|)``; returns the input's domain.

    ``m`` is called once on the array of lattice frequency magnitudes.
    """
    grid = f.grid
    mult = np.asarray(m(grid.xi_abs))
    if mult.shape != grid.shape:
        mult = np.broadcast_to(mult, grid.shape)
    if np.any(np.isnan(mult)):
        raise ValueError("multiplier is NaN somewhere on the frequency lattice")
    return apply_symbol(f, mult)


def apply_symbol(f: Field, symbol: np.ndarray) -> Field:
    """Multiply the spectrum by a precomputed lattice symbol."""
    g = f.to(Domain.FREQUENCY)
    out = Field(f.grid, g.values * symbol, Domain.FREQUENCY)
    return out.to(f.domain)


def _odd(grid: Grid, sym: np.ndarray) -> np.ndarray:
    return np.where(grid.nyquist_mask, 0.0, sym)


def gradient(f: Field) -> VectorField:
    g = f.to(Domain.FREQUENCY)
    grid = f.grid
    vals = np.stack([_odd(grid, 1j * np.broadcast_to(c, grid.shape)) * g.values for c in grid.xi])
    return VectorField(grid, vals, Domain.FREQUENCY).to(f.domain)


def divergence(v: VectorField) -> Field:
    g = v.to(Domain.FREQUENCY)
    grid = v.grid
    out = np.zeros(grid.shape, dtype=complex)
    for c, comp in zip(grid.xi, g.values):
        out += _odd(grid, 1j * np.broadcast_to(c, grid.shape)) * comp
    return Field(grid, out, Domain.FREQUENCY).to(v.domain)


def _inv_abs(grid: Grid) -> np.ndarray:
    k = grid.xi_abs
    with np.errstate(divide="ignore"):
        return np.where(k > 0, 1.0 / np.where(k > 0, k, 1.0), 0.0)


def helmholtz_Q(v: VectorField) -> VectorField:
    """Gradient part ``xi xi^T / |xi|^2``; the zero mode maps to zero."""
    g = v.to(Domain.FREQUENCY)
    grid = v.grid
    inv2 = _inv_abs(grid) ** 2
    proj = sum(c * comp for c, comp in zip(grid.xi, g.values)) * inv2
    vals = np.stack([np.broadcast_to(c, grid.shape) * proj for c in grid.xi])
    return VectorField(grid, vals, Domain.FREQUENCY).to(v.domain)


def helmholtz_P(v: VectorField) -> VectorField:
    """Divergence-free part ``Id - Q``."""
    return v - helmholtz_Q(v)


def riesz_divergence(v: VectorField) -> Field:
    """``(-Delta)^{-1/2} div v``: the scalar potential of the gradient part."""
    g = v.to(Domain.FREQUENCY)
    grid = v.grid
    inv = _inv_abs(grid)
    out = np.zeros(grid.shape, dtype=complex)
    for c, comp in zip(grid.xi, g.values):
        out += _odd(grid, 1j * np.broadcast_to(c, grid.shape) * inv) * comp
    return Field(grid, out, Domain.FREQUENCY).to(v.domain)


def riesz_gradient(f: Field) -> VectorField:
    """Inverse of :func:`riesz_divergence` on gradient fields: ``-grad (-Delta)^{-1/2} f``."""
    g = f.to(Domain.FREQUENCY)
    grid = f.grid
    inv = _inv_abs(grid)
    vals = np.stack([_odd(grid, -1j * np.broadcast_to(c, grid.shape) * inv) * g.values for c in grid.xi])
    return VectorField(grid, vals, Domain.FREQUENCY).to(f.domain)


class SqrtKind(str, enum.Enum):
    MINUS_LAPLACIAN = "minus_laplacian"  # |xi|
    ONE_PLUS_EPS2_KAPPA2_MINUS_LAPLACIAN = "one_plus_eps2_kappa2_minus_laplacian"
    U_EPS = "u_eps"  # eps|xi| / sqrt(1 + eps^2 |xi|^2)


def sqrt_symbol(kind: SqrtKind, xi_abs, params: DispersionParams | None = None,
                alpha: float = 1.0, power: float = 1.0):
    kind = SqrtKind(kind)
    if kind is SqrtKind.MINUS_LAPLACIAN:
        base = np.asarray(xi_abs, dtype=float)
    elif params is None:
        raise ValueError(f"{kind.value} needs DispersionParams")
    elif kind is SqrtKind.ONE_PLUS_EPS2_KAPPA2_MINUS_LAPLACIAN:
        base = np.sqrt(1.0 + (params.eps * params.kappa * np.asarray(xi_abs)) ** 2)
    else:
        if alpha < 0:
            raise ValueError(f"alpha must be >= 0, got {alpha}")
        e = params.eps * np.asarray(xi_abs, dtype=float)
        if alpha == 0:
            base = np.ones_like(e)
        else:
            base = (e / np.sqrt(1.0 + e**2)) ** alpha
    if power == 1:
        return base
    base = np.broadcast_to(base, np.shape(xi_abs))
    out = np.zeros(base.shape)
    nz = base > 0
    out[nz] = base[nz] ** power
    return out


def sqrt_op(f: Field, kind: SqrtKind, params: DispersionParams | None = None,
            alpha: float = 1.0, power: float = 1.0) -> Field:
    """Apply ``(-Delta)^{1/2}``, ``(1 - eps^2 kappa^2 Delta)^{1/2}`` or ``U_eps^alpha``.

    ``power`` raises the symbol to a real power; negative powers set the
    zero set of the symbol (the zero mode) to zero.
    """
    sym = sqrt_symbol(kind, f.grid.xi_abs, params, alpha=alpha, power=power)
    return apply_symbol(f, sym)


# --- Littlewood-Paley ladder ----------------------------------------------


def _mollifier(x):
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = np.exp(-1.0 / x[pos])
    return out


def smooth_step(s):
    """C-infinity step: 0 for s <= 0, 1 for s >= 1."""
    a = _mollifier(s)
    b = _mollifier(1.0 - np.asarray(s, dtype=float))
    return a / (a + b)


def ladder_eta(r):
    """Smooth cutoff equal to 1 on r <= 1 and 0 on r >= 2."""
    return 1.0 - smooth_step(np.asarray(r, dtype=float) - 1.0)


@dataclass(frozen=True)
class DyadicCutoff:
    """Annular profile ``eta(r/R) - eta(2r/R)`` supported in [R/2, 2R].

    The profile equals 1 at r = R and the ladder over R = 2^k sums to 1 on
    r > 0. With ``sharp=True`` the profile is the indicator of
    [R/sqrt2, R sqrt2), which partitions (0, inf) exactly.
    """

    R: float
    sharp: bool = False

    def __post_init__(self):
        if not self.R > 0:
            raise ValueError("R must be positive")

    @property
    def support(self) -> tuple:
        if self.sharp:
            return (self.R / math.sqrt(2), self.R * math.sqrt(2))
        return (self.R / 2, 2 * self.R)

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        if self.sharp:
            lo, hi = self.support
            return ((r >= lo) & (r < hi)).astype(float)
        return ladder_eta(r / self.R) - ladder_eta(2.0 * r / self.R)

    def scaled(self, factor: float) -> "DyadicCutoff":
        return DyadicCutoff(self.R * factor, self.sharp)

    @cached_property
    def derivative_constants(self) -> dict:
        """``C(k) = max |chi_1^{(k)}|`` for k = 1..5 (unit block, finite differences).

        The scale family then satisfies ``|chi_R^{(k)}| <= C(k) R^{-k}``.
        """
        return dict(unit_derivative_constants())


_DERIV_CACHE: dict = {}


def unit_derivative_constants(kmax: int = 5, h: float = 2e-3) -> dict:
    if (kmax, h) in _DERIV_CACHE:
        return _DERIV_CACHE[(kmax, h)]
    r = np.arange(0.5 - 8 * h, 2.0 + 8 * h, h)
    vals = DyadicCutoff(1.0)(r)
    out = {}
    deriv = vals
    for k in range(1, kmax + 1):
        deriv = np.gradient(deriv, h)
        out[k] = float(np.max(np.abs(deriv)))
    _DERIV_CACHE[(kmax, h)] = out
    return out


def ladder_range(grid: Grid, sharp: bool = False) -> range:
    """Block indices k whose annulus meets the nonzero lattice frequencies."""
    lo = grid.dk
    hi = grid.xi_max * math.sqrt(grid.d)
    kmin = math.floor(math.log2(lo)) - 1
    kmax = math.ceil(math.log2(hi)) + 1
    ks = []
    for k in range(kmin, kmax + 1):
        a, b = DyadicCutoff(2.0**k, sharp).support
        if b > lo and a < hi:
            ks.append(k)
    return range(ks[0], ks[-1] + 1)


def dyadic_project(f: Field, k: int, sharp: bool = False) -> Field:
    """Littlewood-Paley block ``P_{2^k} f``.

    Blocks that miss the lattice entirely come back as zero with a warning.
    """
    cut = DyadicCutoff(2.0**k, sharp)
    lo, hi = cut.support
    grid = f.grid
    if hi <= grid.dk or lo >= grid.xi_max * math.sqrt(grid.d):
        warnings.warn(f"block 2^{k} lies outside the lattice frequency range", stacklevel=2)
        return f.with_values(np.zeros(grid.shape, dtype=complex))
    return apply_symbol(f, cut(grid.xi_abs))


def zero_mode_removed(f: Field) -> Field:
    g = f.to(Domain.FREQUENCY)
    vals = g.values.copy()
    vals[(0,) * f.grid.d] = 0
    return Field(f.grid, vals, Domain.FREQUENCY).to(f.domain)


def plane_wave(grid: Grid, k_index: Sequence[int]) -> Field:
    """``exp(i xi0 . x)`` for the lattice frequency ``xi0 = 2 pi k / L``."""
    phase = np.zeros(grid.shape)
    for kk, x in zip(k_index, grid.x):
        phase = phase + grid.dk * kk * x
    return Field(grid, np.exp(1j * phase), Domain.SPACE)


def random_field(grid: Grid, seed: int, band_limited: bool = True, real: bool = False) -> Field:
    """Deterministic random test field; band-limited fields have no Nyquist content."""
    rng = np.random.default_rng(seed)
    vals = rng.standard_normal(grid.shape)
    if not real:
        vals = vals + 1j * rng.standard_normal(grid.shape)
    f = fft(Field(grid, vals.astype(complex)))
    if band_limited:
        f = f.with_values(np.where(grid.nyquist_mask, 0.0, f.values))
    return ifft(f)

"""Radial dispersion symbols of the linearized quantum-hydrodynamic system.

The basic symbol is ``phi(r) = r * sqrt(1 + kappa**2 r**2)``; the
eps-dependent acoustic symbol is ``phi_eps(|xi|) = phi(eps |xi|) / eps**2``.
With ``kappa = 1/2`` this is the QHD acoustic dispersion relation
``omega = |xi|/eps * sqrt(1 + (eps |xi| / 2)**2)``, and with ``eps = 1`` it
coincides with the Bogoliubov excitation spectrum in GP units.

All functions accept scalars or numpy arrays and are pure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

QHD_KAPPA = 0.5


@dataclass(frozen=True)
class DispersionParams:
    """Healing length / Mach number ``eps`` and capillarity ``kappa``."""

    eps: float
    kappa: float

    def __post_init__(self):
        if not (np.isfinite(self.eps) and self.eps > 0):
            raise ValueError(f"eps must be positive, got {self.eps!r}")
        if not (np.isfinite(self.kappa) and self.kappa > 0):
            # kappa -> 0 is the pure wave limit, where the estimates degenerate
            raise ValueError(f"kappa must be positive, got {self.kappa!r}")

    @classmethod
    def qhd(cls, eps: float) -> "DispersionParams":
        return cls(eps=eps, kappa=QHD_KAPPA)


@dataclass(frozen=True)
class BogoliubovParams:
    """Interaction strength ``g``, density ``n`` and particle mass ``m``."""

    g: float
    n: float
    m: float

    def __post_init__(self):
        for name in ("g", "n", "m"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive, got {v!r}")

    @property
    def sound_speed(self) -> float:
        return float(np.sqrt(self.g * self.n / self.m))


class Regime(str, enum.Enum):
    WAVE_LIKE = "WaveLike"
    TRANSITION = "Transition"
    SCHROEDINGER_LIKE = "SchroedingerLike"


def _as_float_array(x, name, strict=False):
    a = np.asarray(x, dtype=float)
    bad = (a <= 0) if strict else (a < 0)
    if np.any(bad) or np.any(np.isnan(a)):
        rel = "> 0" if strict else ">= 0"
        raise ValueError(f"{name} must be {rel}")
    return a


def _out(a):
    return float(a) if np.ndim(a) == 0 else a


def phi(r, kappa: float):
    """``r * sqrt(1 + kappa^2 r^2)``, strictly increasing and convex on r > 0."""
    r = _as_float_array(r, "r")
    return _out(r * np.sqrt(1.0 + (kappa * r) ** 2))


def phi_eps(xi_abs, params: DispersionParams):
    """Acoustic symbol ``phi(eps |xi|) / eps^2`` written without the cancellation."""
    xi = _as_float_array(xi_abs, "xi_abs")
    return _out(xi / params.eps * np.sqrt(1.0 + (params.eps * params.kappa * xi) ** 2))


def phi_derivatives(r, kappa: float):
    """Closed-form ``(phi'(r), phi''(r))`` for r > 0.

    phi'(r)  = (1 + 2 k^2 r^2) / sqrt(1 + k^2 r^2)
    phi''(r) = k^2 r (3 + 2 k^2 r^2) / (1 + k^2 r^2)^{3/2}
    """
    r = _as_float_array(r, "r", strict=True)
    a = (kappa * r) ** 2
    s = np.sqrt(1.0 + a)
    d1 = (1.0 + 2.0 * a) / s
    d2 = kappa**2 * r * (3.0 + 2.0 * a) / (s * (1.0 + a))
    return _out(d1), _out(d2)


def phi_eps_derivatives(xi_abs, params: DispersionParams):
    """First two derivatives of ``phi_eps``; the first is the group velocity."""
    xi = _as_float_array(xi_abs, "xi_abs", strict=True)
    d1, d2 = phi_derivatives(params.eps * xi, params.kappa)
    return _out(np.asarray(d1) / params.eps), d2


def group_velocity(xi_abs, params: DispersionParams):
    """``phi_eps'(|xi|)``; equals 1/eps at xi = 0."""
    xi = _as_float_array(xi_abs, "xi_abs")
    a = (params.eps * params.kappa * xi) ** 2
    return _out((1.0 + 2.0 * a) / np.sqrt(1.0 + a) / params.eps)


def hessian_det(r, kappa: float, d: int):
    """Determinant of the Hessian of the radial function ``phi(|xi|)``.

    ``h(r) = (phi'(r)/r)^(d-1) * phi''(r)``.
    """
    if d not in (2, 3):
        raise ValueError(f"d must be 2 or 3, got {d}")
    r = _as_float_array(r, "r", strict=True)
    d1, d2 = phi_derivatives(r, kappa)
    return _out((np.asarray(d1) / r) ** (d - 1) * d2)


def h_inv_sqrt(r, kappa: float, d: int):
    return _out(1.0 / np.sqrt(np.asarray(hessian_det(r, kappa, d))))


def h_bound_weight(r, kappa: float, d: int):
    """Upper-bound profile ``kappa^{-d/2} (kappa r / sqrt(1 + kappa^2 r^2))^{(d-2)/2}``."""
    r = _as_float_array(r, "r")
    kr = kappa * r
    return _out(kappa ** (-d / 2.0) * (kr / np.sqrt(1.0 + kr**2)) ** ((d - 2) / 2.0))


def h_bound_ratio(r, params, d: int):
    """``h(r)^{-1/2}`` divided by its claimed upper-bound profile.

    ``params`` is a :class:`DispersionParams` or a bare kappa. The ratio
    stays between two positive constants over all r > 0.
    """
    kappa = params.kappa if isinstance(params, DispersionParams) else float(params)
    return _out(np.asarray(h_inv_sqrt(r, kappa, d)) / np.asarray(h_bound_weight(r, kappa, d)))


def bogoliubov_c(p, bp: BogoliubovParams):
    """Bogoliubov excitation energy ``sqrt(gn/m p^2 + (p^2/2m)^2)``."""
    p = _as_float_array(p, "p")
    return _out(np.sqrt(bp.g * bp.n / bp.m * p**2 + (p**2 / (2.0 * bp.m)) ** 2))


def regime_classify(xi_abs, params: DispersionParams, low: float = 0.1, high: float = 10.0):
    """Classify frequencies by ``eps * kappa * |xi|`` against (low, high).

    Returns a :class:`Regime` for scalar input and an object array of
    regimes for array input.
    """
    if not 0 < low < high:
        raise ValueError("need 0 < low < high")
    xi = _as_float_array(xi_abs, "xi_abs")
    z = params.eps * params.kappa * xi

    def one(v):
        if v <= low:
            return Regime.WAVE_LIKE
        if v >= high:
            return Regime.SCHROEDINGER_LIKE
        return Regime.TRANSITION

    if np.ndim(z) == 0:
        return one(float(z))
    out = np.empty(z.shape, dtype=object)
    for idx, v in np.ndenumerate(z):
        out[idx] = one(v)
    return out

"""Admissible exponent arithmetic and the space-time norms the estimates use.

Exponent pairs are written ``(q, r)``: time exponent q, space exponent r,
``beta(r) = 1/2 - 1/r``. Two admissibility lines are supported:

* ``CLASSICAL_SHARP``: ``1/q = mu * beta(r)``, the sharp line for a
  dispersive decay rate ``t^{-mu}`` (``mu = d/2`` gives ``2/q + d/r = d/2``).
* ``PAPER_LITERAL``: ``2/q + mu/r = mu/2``, i.e. ``1/q = mu * beta(r) / 2``.

Solving is done in exact rational arithmetic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import numpy as np

from .grid import Domain, Field, dyadic_project, ladder_range

INF = math.inf


class Convention(str, enum.Enum):
    PAPER_LITERAL = "paper"
    CLASSICAL_SHARP = "classical"


class InfeasiblePairError(ValueError):
    """No partner exponent in [2, inf] exists on the requested line."""


def _frac(x) -> Fraction | None:
    """Exact rational for finite input, None for infinity."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        if x.strip().lower() in ("inf", "infinity", "oo"):
            return None
        return Fraction(x)
    if x is None or (isinstance(x, float) and math.isinf(x)):
        return None
    return Fraction(x).limit_denominator(10**9) if isinstance(x, float) else Fraction(x)


def _recip(x) -> Fraction:
    f = _frac(x)
    return Fraction(0) if f is None else 1 / f


def _from_recip(inv: Fraction) -> float:
    return INF if inv == 0 else float(1 / inv)


@dataclass(frozen=True)
class MuKind:
    """Decay scale: ``schroedinger`` (d/2), ``wave`` ((d-1)/2) or ``theta`` ((2-theta)/2)."""

    name: str
    theta: Fraction = Fraction(0)

    def __post_init__(self):
        if self.name not in ("schroedinger", "wave", "theta"):
            raise ValueError(f"unknown mu kind {self.name!r}")
        if self.name == "theta" and not 0 <= self.theta < 1:
            raise ValueError("theta must lie in [0, 1)")

    @classmethod
    def parse(cls, text: str) -> "MuKind":
        text = text.strip().lower()
        if text.startswith("theta:"):
            return cls("theta", Fraction(text.split(":", 1)[1]))
        return cls(text)

    @classmethod
    def theta_kind(cls, theta) -> "MuKind":
        return cls("theta", _frac(theta))

    def mu(self, d: int) -> Fraction:
        if self.name == "schroedinger":
            return Fraction(d, 2)
        if self.name == "wave":
            return Fraction(d - 1, 2)
        return (2 - self.theta) / 2


@dataclass(frozen=True)
class AdmissiblePair:
    q: float
    r: float
    mu: float
    convention: Convention = Convention.CLASSICAL_SHARP

    def __post_init__(self):
        for name in ("q", "r"):
            v = getattr(self, name)
            if not (v >= 2 or math.isinf(v)):
                raise ValueError(f"{name} must lie in [2, inf], got {v}")
        if not self.mu > 0:
            raise ValueError("mu must be positive")
        if self.q == 2 and math.isinf(self.r) and self.mu == 1:
            raise InfeasiblePairError("(q, r, mu) = (2, inf, 1) is excluded")
        lhs = 1.0 / self.q
        rhs = self.mu * beta(self.r) * (0.5 if self.convention is Convention.PAPER_LITERAL else 1.0)
        if not math.isclose(lhs, rhs, rel_tol=1e-12, abs_tol=1e-14):
            raise ValueError(f"({self.q}, {self.r}) is not on the {self.convention.value} line for mu={self.mu}")

    @property
    def beta(self) -> float:
        return beta(self.r)

    def dual(self) -> tuple:
        """Hoelder conjugates ``(q', r')``."""
        return conjugate(self.q), conjugate(self.r)


def conjugate(p: float) -> float:
    if math.isinf(p):
        return 1.0
    if p == 1:
        return INF
    return p / (p - 1)


def beta(r) -> float:
    """``1/2 - 1/r`` for r in [2, inf]."""
    if not (r >= 2 or (isinstance(r, float) and math.isinf(r))):
        raise ValueError(f"r must be >= 2, got {r}")
    return float(Fraction(1, 2) - _recip(r))


def alpha_exponents(d: int, r, r1) -> tuple:
    """``alpha0 = (d-2)/2 beta(r)`` and ``alpha1 = (d-2)/2 (beta(r) + beta(r1))``."""
    if d < 2:
        raise ValueError("d must be >= 2")
    b, b1 = beta(r), beta(r1)
    c = (d - 2) / 2.0
    return c * b, c * (b + b1)


def solve_admissible(d: int, mu_kind: MuKind | str, q=None, r=None,
                     convention: Convention = Convention.CLASSICAL_SHARP) -> AdmissiblePair:
    """Complete ``(q, r)`` on the admissibility line given exactly one of them."""
    if (q is None) == (r is None):
        raise ValueError("give exactly one of q, r")
    if isinstance(mu_kind, str):
        mu_kind = MuKind.parse(mu_kind)
    convention = Convention(convention)
    mu = mu_kind.mu(d)
    c = mu if convention is Convention.CLASSICAL_SHARP else mu / 2
    half = Fraction(1, 2)
    if q is not None:
        inv_q = _recip(q)
        if not 0 <= inv_q <= half:
            raise ValueError(f"q must lie in [2, inf], got {q}")
        b = inv_q / c
        if b > half:
            inv_r = half - b
            raise InfeasiblePairError(
                f"no r in [2, inf] for q={q}, mu={mu} ({convention.value}); "
                f"the line gives r = {float(1 / inv_r) if inv_r else INF:g}")
        inv_r = half - b
        return AdmissiblePair(_from_recip(inv_q), _from_recip(inv_r), float(mu), convention)
    inv_r = _recip(r)
    if not 0 <= inv_r <= half:
        raise ValueError(f"r must lie in [2, inf], got {r}")
    inv_q = c * (half - inv_r)
    if inv_q > half:
        raise InfeasiblePairError(f"no q in [2, inf] for r={r}, mu={mu} ({convention.value})")
    return AdmissiblePair(_from_recip(inv_q), _from_recip(inv_r), float(mu), convention)


def prop_b_exponent(theta: float, r) -> float:
    """Derivative loss ``s = 3 beta(r) theta``; the associated gain is ``eps^{s/3}``."""
    if not 0 <= theta < 1:
        raise ValueError("theta must lie in [0, 1)")
    return 3.0 * beta(r) * theta


@dataclass(frozen=True)
class MixedNormSpec:
    q: float
    r: float
    T: float
    time_samples: int = 64

    def __post_init__(self):
        for name in ("q", "r"):
            v = getattr(self, name)
            if not (v >= 1 or math.isinf(v)):
                raise ValueError(f"{name} must lie in [1, inf]")
        if not self.T > 0:
            raise ValueError("T must be positive")
        if self.time_samples < 16:
            raise ValueError("time_samples must be >= 16")

    @property
    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.T, self.time_samples)


def lebesgue_norm(f: Field, r) -> float:
    """Continuum ``L^r`` norm of lattice point values, ``(sum |f|^r dx^d)^{1/r}``.

    ``r = inf`` is the lattice max, a lower bound for the continuum sup.
    """
    v = np.abs(f.to(Domain.SPACE).values)
    if math.isinf(r):
        return float(v.max())
    if r == 2:
        return float(np.sqrt(np.vdot(v, v).real * f.grid.cell_volume))
    return float((np.sum(v**r) * f.grid.cell_volume) ** (1.0 / r))


def time_norm(values, T: float, q) -> float:
    """``L^q(0, T)`` norm of uniform samples by the trapezoid rule (max for q = inf)."""
    vals = np.asarray(values, dtype=float)
    if math.isinf(q):
        return float(vals.max())
    h = T / (len(vals) - 1)
    return float(np.trapezoid(vals**q, dx=h) ** (1.0 / q))


def mixed_norm(trajectory: Iterable[Field], spec: MixedNormSpec) -> float:
    """``||u||_{L^q(0,T; L^r)}`` from a trajectory sampled at ``spec.times``.

    The trajectory may be a generator; only one sample is held at a time.
    """
    inner = []
    grid = None
    for f in trajectory:
        if grid is None:
            grid = f.grid
        elif f.grid != grid:
            raise ValueError("trajectory samples live on different grids")
        inner.append(lebesgue_norm(f, spec.r))
    if len(inner) != spec.time_samples:
        raise ValueError(f"expected {spec.time_samples} samples, got {len(inner)}")
    return time_norm(inner, spec.T, spec.q)


@dataclass(frozen=True)
class BesovResult:
    norm: float
    blocks: dict = field(repr=False)
    k_range: tuple = ()


def besov_blocks(f: Field, s: float, r, sharp: bool = False) -> BesovResult:
    """``(sum_k 2^{2ks} ||P_{2^k} f||_{L^r}^2)^{1/2}`` over lattice-representable blocks.

    The block norms and the truncation range ``(kmin, kmax)`` are returned.
    """
    ks = ladder_range(f.grid, sharp)
    g = f.to(Domain.FREQUENCY)
    blocks = {}
    total = 0.0
    for k in ks:
        bn = lebesgue_norm(dyadic_project(g, k, sharp), r)
        blocks[k] = bn
        total += (2.0 ** (k * s) * bn) ** 2
    return BesovResult(float(math.sqrt(total)), blocks, (ks[0], ks[-1]))


def besov_norm(f: Field, s: float, r, sharp: bool = False) -> float:
    """Homogeneous Besov norm ``B^s_{r,2}`` truncated to the lattice."""
    return besov_blocks(f, s, r, sharp).norm


def sobolev_norm(f: Field, alpha: float) -> float:
    """Homogeneous ``H^alpha`` norm ``|| |xi|^alpha f^ ||`` with lattice measure weights."""
    g = f.to(Domain.FREQUENCY)
    xi = f.grid.xi_abs
    power = np.abs(g.values) ** 2
    zero = (0,) * f.grid.d
    if alpha < 0:
        mean = abs(g.values[zero])
        if mean > 1e-12 * max(f.l2(), 1e-300):
            raise ValueError("negative-order Sobolev norm of a field with nonzero mean")
    if alpha == 0:
        w = 1.0
    else:
        w = np.zeros(xi.shape)
        nz = xi > 0
        w[nz] = xi[nz] ** (2.0 * alpha)
    return float(np.sqrt(np.sum(w * power) * f.grid.cell_volume))

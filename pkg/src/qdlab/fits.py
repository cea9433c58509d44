"""Log-log regression for rate measurements."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class DecayFit:
    """Least-squares line ``log y = slope * log x + intercept``."""

    slope: float
    intercept: float
    r_squared: float
    window: tuple

    def __post_init__(self):
        if not 0.0 <= self.r_squared <= 1.0:
            raise ValueError(f"r_squared out of [0, 1]: {self.r_squared}")
        lo, hi = self.window
        if not lo < hi:
            raise ValueError("degenerate fit window")

    @property
    def clean(self) -> bool:
        return self.r_squared >= 0.99

    def predict(self, x):
        return np.exp(self.intercept) * np.asarray(x, dtype=float) ** self.slope


def loglog_fit(x, y, min_samples: int = 2, min_decades: float = 0.0) -> DecayFit:
    """Fit a power law through positive samples."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("x and y must be 1-D of equal length")
    if len(x) < min_samples:
        raise ValueError(f"need at least {min_samples} samples, got {len(x)}")
    if np.any(x <= 0) or np.any(y <= 0) or not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise ValueError("log-log fit needs finite positive values")
    lx, ly = np.log(x), np.log(y)
    if np.ptp(lx) == 0:
        raise ValueError("degenerate fit window")
    if np.log10(x.max() / x.min()) < min_decades - 1e-12:
        raise ValueError(f"samples must span at least {min_decades} decade(s)")
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0 else 1.0 - float(np.sum(resid**2)) / ss_tot
    return DecayFit(float(slope), float(intercept), float(min(max(r2, 0.0), 1.0)),
                    (float(x.min()), float(x.max())))

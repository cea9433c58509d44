"""Flat key-value experiment configuration (TOML on disk)."""

from __future__ import annotations

import dataclasses
import enum
import math
import sys
from dataclasses import dataclass, field

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .dispersion import DispersionParams


class Campaign(str, enum.Enum):
    DECAY = "Decay"
    EPS_GAIN = "EpsGain"
    TWO_D_INTERP = "TwoDInterp"
    COR3D = "Cor3d"
    GPE_DISPERSION = "GpeDispersion"
    BOUSSINESQ_CHECK = "BoussinesqCheck"
    BOUND_CHECK = "BoundCheck"


@dataclass
class ExperimentConfig:
    campaign: Campaign
    dim: int = 3
    grid_n: int = 64
    box_length: float = 50.0
    eps: float = 1.0
    kappa: float = 0.5
    eps_values: list = field(default_factory=lambda: [1.0, 0.5, 0.25, 0.125])
    R_values: list = field(default_factory=lambda: [1.0])
    t_min: float = 100.0
    t_max: float = 1.0e4
    t_points: int = 9
    t_values: list = field(default_factory=lambda: [2000.0])
    theta_values: list = field(default_factory=lambda: [0.0, 0.5, 0.9])
    delta: float | None = None
    alpha: float | None = None
    q: float | None = None
    r: float = 6.0
    r1: float = 6.0
    time_samples: int = 64
    horizon: float | None = None
    n_x: int = 64
    window_sigma: float = 3.0
    forcing_omega: float = 1.0
    gpe_modes: list = field(default_factory=lambda: [0.5, 1.0, 2.0, 4.0])
    amplitude: float = 1e-3
    dt: float = 0.01
    periods: int = 6
    bound_r_min: float = 1e-3
    bound_r_max: float = 1e3
    bound_points: int = 601
    slope_tol: float = 0.05
    decay_tol: float = 0.1
    ratio_limit: float = 3.0
    stability_limit: float = 4.0
    rng_seed: int = 0
    output: str = "out"
    format: str = "json"

    def __post_init__(self):
        self.campaign = Campaign(self.campaign)
        for name in ("eps_values", "R_values", "t_values", "theta_values", "gpe_modes"):
            v = getattr(self, name)
            if not isinstance(v, (list, tuple)) or len(v) == 0:
                raise ValueError(f"{name} must be a non-empty list")
            setattr(self, name, [float(x) for x in v])
        if self.dim not in (1, 2, 3):
            raise ValueError("dim must be 1, 2 or 3")
        if self.grid_n < 2 or self.grid_n & (self.grid_n - 1):
            raise ValueError("grid_n must be a power of two")
        if self.time_samples < 16:
            raise ValueError("time_samples must be >= 16")
        if not 0 < self.t_min < self.t_max:
            raise ValueError("need 0 < t_min < t_max")
        if self.format not in ("csv", "json"):
            raise ValueError("format must be csv or json")
        DispersionParams(self.eps, self.kappa)
        if self.horizon is not None:
            self.check_horizon(self.horizon, min(self.eps_values))

    @property
    def params(self) -> DispersionParams:
        return DispersionParams(self.eps, self.kappa)

    def lattice_horizon(self, eps: float) -> float:
        """``box_length / (2 max phi_eps')`` over the whole lattice."""
        from .dispersion import group_velocity
        xi_top = math.pi * self.grid_n / self.box_length * math.sqrt(self.dim)
        return self.box_length / (2.0 * group_velocity(xi_top, DispersionParams(eps, self.kappa)))

    def check_horizon(self, T: float, eps: float) -> None:
        lim = self.lattice_horizon(eps)
        if T >= lim:
            raise ValueError(f"horizon {T} violates the anti-wraparound rule (< {lim:g} at eps={eps})")

    @classmethod
    def from_mapping(cls, data: dict) -> "ExperimentConfig":
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        if "campaign" not in data:
            raise ValueError("config needs a campaign")
        return cls(**data)

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["campaign"] = self.campaign.value
        return d


# Campaign-specific defaults applied under user keys.
CAMPAIGN_DEFAULTS = {
    Campaign.DECAY: dict(dim=2, kappa=1.0),
    Campaign.EPS_GAIN: dict(dim=3, grid_n=128, box_length=100.0, kappa=0.5, r=6.0, time_samples=64),
    Campaign.TWO_D_INTERP: dict(dim=2, grid_n=512, box_length=200.0, kappa=0.5, r=4.0, time_samples=96),
    Campaign.COR3D: dict(dim=3, grid_n=64, box_length=50.0, kappa=0.5, r=6.0, r1=6.0, time_samples=64),
    Campaign.GPE_DISPERSION: dict(dim=2, grid_n=256, box_length=16 * math.pi, dt=0.01),
    Campaign.BOUSSINESQ_CHECK: dict(dim=3, grid_n=16, box_length=2 * math.pi),
    Campaign.BOUND_CHECK: dict(dim=3, kappa=1.0, t_values=[2000.0]),
}


def config_for(campaign, **overrides) -> ExperimentConfig:
    campaign = Campaign(campaign)
    data = dict(CAMPAIGN_DEFAULTS[campaign])
    data.update(overrides)
    data["campaign"] = campaign
    return ExperimentConfig.from_mapping(data)


def load_config(path) -> ExperimentConfig:
    with open(path, "rb") as fh:
        data = tomllib.load(fh)
    if "campaign" not in data:
        raise ValueError("config needs a campaign")
    return config_for(data.pop("campaign"), **data)

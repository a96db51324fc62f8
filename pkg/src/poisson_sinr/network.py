"""Poisson base-station layouts on a square torus.

The simulated area is a square of side ``sqrt(S_A)`` with periodic
boundaries, so every UE sees an interference field without edge effects.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, asdict

import numpy as np

from .errors import ParameterError

DENSITY_MAPPINGS = ("poisson_nn", "hexagonal")
UE_LAYOUTS = ("uniform", "lattice")


def derive_density(half_isd_Rc: float, mapping: str = "poisson_nn") -> float:
    """BS density (per m^2) implied by the expected half inter-site distance.

    ``poisson_nn`` makes the mean nearest-neighbour distance of a planar
    Poisson process, ``1 / (2 sqrt(rho))``, equal to ``Rc``.  ``hexagonal``
    uses the area of a hexagonal cell of inradius ``Rc``.
    """
    if not half_isd_Rc > 0:
        raise ParameterError(f"half_isd_Rc must be > 0, got {half_isd_Rc!r}")
    if mapping == "poisson_nn":
        return 1.0 / (4.0 * half_isd_Rc**2)
    if mapping == "hexagonal":
        return 1.0 / (2.0 * math.sqrt(3.0) * half_isd_Rc**2)
    raise ParameterError(f"unknown density mapping {mapping!r}")


@dataclass(frozen=True)
class NetworkConfig:
    """Scenario parameters for one Poisson network campaign.

    Lengths are in meters and powers in watts per subcarrier.  The area
    ``S_A`` is derived so that ``rho_bs * area == mean_bs_count``.
    """

    half_isd_Rc: float = 500.0
    eta: float = 3.0
    sigma_dB: float = 0.0
    tx_power_P: float = 1.0
    pathloss_K: float = 1.0
    noise_Nth: float = 0.0
    mean_bs_count: float = 50.0
    ue_grid_count: int = 400
    n_runs: int = 500
    seed: int = 0
    density_mapping: str = "poisson_nn"
    ue_layout: str = "uniform"

    def __post_init__(self):
        checks = [
            (self.half_isd_Rc > 0, "half_isd_Rc must be > 0"),
            (self.eta > 2, "eta must be > 2"),
            (self.sigma_dB >= 0, "sigma_dB must be >= 0"),
            (self.tx_power_P > 0, "tx_power_P must be > 0"),
            (self.pathloss_K > 0, "pathloss_K must be > 0"),
            (self.noise_Nth >= 0, "noise_Nth must be >= 0"),
            (self.mean_bs_count > 0, "mean_bs_count must be > 0"),
            (int(self.ue_grid_count) == self.ue_grid_count and self.ue_grid_count > 0,
             "ue_grid_count must be a positive integer"),
            (int(self.n_runs) == self.n_runs and self.n_runs > 0,
             "n_runs must be a positive integer"),
            (int(self.seed) == self.seed and 0 <= self.seed < 2**64,
             "seed must be an unsigned 64-bit integer"),
            (self.density_mapping in DENSITY_MAPPINGS,
             f"density_mapping must be one of {DENSITY_MAPPINGS}"),
            (self.ue_layout in UE_LAYOUTS, f"ue_layout must be one of {UE_LAYOUTS}"),
        ]
        for ok, message in checks:
            if not ok:
                raise ParameterError(message)

    @property
    def rho_bs(self) -> float:
        return derive_density(self.half_isd_Rc, self.density_mapping)

    @property
    def area(self) -> float:
        return self.mean_bs_count / self.rho_bs

    @property
    def side(self) -> float:
        return math.sqrt(self.area)

    @property
    def r_min(self) -> float:
        """Distance floor applied to UEs sitting on top of a BS."""
        return self.half_isd_Rc / 1000.0

    def replace(self, **changes) -> "NetworkConfig":
        values = asdict(self)
        values.update(changes)
        return NetworkConfig(**values)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class BsLayout:
    """One realisation of BS positions on the torus ``[0, side)^2``."""

    positions: np.ndarray = field(repr=False)
    side: float

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=float).reshape(-1, 2)
        object.__setattr__(self, "positions", pos)

    @property
    def count(self) -> int:
        return len(self.positions)


def sample_layout(config: NetworkConfig, rng: np.random.Generator) -> BsLayout:
    """Draw a homogeneous Poisson layout: Poisson count, uniform positions.

    A count of zero is a legal outcome and is returned as is.
    """
    side = config.side
    count = rng.poisson(config.mean_bs_count)
    positions = rng.uniform(0.0, side, size=(count, 2))
    # uniform() can round up to exactly `side` for large sides
    positions[positions >= side] = 0.0
    return BsLayout(positions, side)


def torus_distance(p, q, side: float) -> float:
    """Euclidean distance between two points under per-axis wrap-around."""
    delta = np.abs(np.asarray(p, dtype=float) - np.asarray(q, dtype=float))
    delta = np.minimum(delta, side - delta)
    return float(math.hypot(*delta))


def torus_distances(points_a, points_b, side: float) -> np.ndarray:
    """Pairwise torus distances, shape ``(len(points_a), len(points_b))``."""
    a = np.asarray(points_a, dtype=float).reshape(-1, 2)
    b = np.asarray(points_b, dtype=float).reshape(-1, 2)
    delta = np.abs(a[:, None, :] - b[None, :, :])
    np.minimum(delta, side - delta, out=delta)
    return np.hypot(delta[..., 0], delta[..., 1])

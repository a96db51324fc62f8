"""Per-UE SINR under nearest-BS and best-server association."""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import EmptyNetworkError
from .network import BsLayout, NetworkConfig, torus_distances
from .propagation import sample_shadowing

ASSOCIATIONS = ("nearest", "best_server")


@dataclass(frozen=True)
class RxPowerVector:
    """Received powers and link distances seen by one UE."""

    powers: np.ndarray
    distances: np.ndarray
    serving_index: int | None = None

    def __post_init__(self):
        powers = np.asarray(self.powers, dtype=float).ravel()
        distances = np.asarray(self.distances, dtype=float).ravel()
        if len(powers) == 0 or len(powers) != len(distances):
            raise ValueError("powers and distances must be non-empty and equal length")
        if np.any(~(powers > 0)):
            raise ValueError("received powers must be > 0")
        if self.serving_index is not None and not 0 <= self.serving_index < len(powers):
            raise IndexError(f"serving_index {self.serving_index} out of range")
        object.__setattr__(self, "powers", powers)
        object.__setattr__(self, "distances", distances)


def _link_distances(ue_points, layout: BsLayout, config: NetworkConfig):
    d = torus_distances(ue_points, layout.positions, layout.side)
    # UE on top of a BS: clamp to avoid the r -> 0 singularity
    np.maximum(d, config.r_min, out=d)
    return d


def _mean_powers(distances, config: NetworkConfig):
    return config.tx_power_P * config.pathloss_K * distances ** (-config.eta)


def received_powers(ue, layout: BsLayout, config: NetworkConfig,
                    shadowing_on: bool, rng=None) -> RxPowerVector:
    """Powers ``P K r_j^-eta Y_j`` from every BS of ``layout`` at point ``ue``."""
    if layout.count == 0:
        raise EmptyNetworkError("layout has no base station")
    distances = _link_distances(ue, layout, config)[0]
    powers = _mean_powers(distances, config)
    if shadowing_on and config.sigma_dB > 0:
        powers = powers * sample_shadowing(config.sigma_dB, rng, size=powers.shape)
    return RxPowerVector(powers, distances)


def associate_nearest(rx: RxPowerVector) -> RxPowerVector:
    # np.argmin returns the first minimum, i.e. the lowest index on ties
    return replace(rx, serving_index=int(np.argmin(rx.distances)))


def associate_best_server(rx: RxPowerVector) -> RxPowerVector:
    return replace(rx, serving_index=int(np.argmax(rx.powers)))


def compute_sinr(rx: RxPowerVector, noise_Nth: float = 0.0) -> float:
    """SINR of the serving link; ``inf`` when there is neither interference nor noise."""
    if rx.serving_index is None:
        raise ValueError("compute_sinr: serving BS not set; associate first")
    useful = rx.powers[rx.serving_index]
    interference = np.delete(rx.powers, rx.serving_index).sum()
    denom = interference + noise_Nth
    if denom == 0:
        return math.inf
    return float(useful / denom)


def spectral_efficiency(sinr):
    """Shannon spectral efficiency ``log2(1 + sinr)`` in bit/s/Hz."""
    sinr = np.asarray(sinr, dtype=float)
    if np.any(sinr < 0):
        raise ValueError("sinr must be >= 0")
    eff = np.log2(1.0 + sinr)
    return float(eff) if eff.ndim == 0 else eff


def batch_link_budget(ue_points, layout: BsLayout, config: NetworkConfig,
                      association: str = "best_server", shadowing_rng=None):
    """Useful and interference power for every UE of a grid in one layout.

    Returns ``(useful, interference)`` arrays of length ``len(ue_points)``.
    Shadowing is applied iff ``shadowing_rng`` is given and sigma > 0; the
    draws are i.i.d. per (UE, BS) pair.
    """
    if layout.count == 0:
        raise EmptyNetworkError("layout has no base station")
    if association not in ASSOCIATIONS:
        raise ValueError(f"association must be one of {ASSOCIATIONS}")
    distances = _link_distances(ue_points, layout, config)
    powers = _mean_powers(distances, config)
    if shadowing_rng is not None and config.sigma_dB > 0:
        powers *= sample_shadowing(config.sigma_dB, shadowing_rng, size=powers.shape)
    if association == "nearest":
        serving = np.argmin(distances, axis=1)
    else:
        serving = np.argmax(powers, axis=1)
    rows = np.arange(len(powers))
    useful = powers[rows, serving]
    powers[rows, serving] = 0.0
    interference = powers.sum(axis=1)
    return useful, interference

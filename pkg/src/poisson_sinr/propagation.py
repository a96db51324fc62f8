"""Distance pathloss and lognormal shadowing."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

#: ``ln(10) / 10``, converts dB to natural-log units.
A_CONST = math.log(10.0) / 10.0


@dataclass(frozen=True)
class ShadowingParams:
    """Lognormal received-power law around a mean power of ``mean_dB``."""

    sigma_dB: float
    mean_dB: float = 0.0

    def __post_init__(self):
        if not self.sigma_dB >= 0:
            raise ParameterError(f"sigma_dB must be >= 0, got {self.sigma_dB!r}")

    @property
    def a_const(self) -> float:
        return A_CONST

    @classmethod
    def from_link(cls, r, K, P, eta, sigma_dB):
        """Params for a link of length ``r`` from a BS of power ``P``."""
        mean_dB = math.log(K * P * r ** (-eta)) / A_CONST
        return cls(sigma_dB=sigma_dB, mean_dB=mean_dB)


def pathloss_gain(r, K, eta):
    """Deterministic path gain ``K * r**-eta``; ``r`` must be positive."""
    r = np.asarray(r, dtype=float)
    if np.any(~(r > 0)):
        raise ValueError("pathloss_gain: distance must be > 0")
    gain = K * r ** (-eta)
    return float(gain) if gain.ndim == 0 else gain


def sample_shadowing(sigma_dB, rng, size=None):
    """Lognormal shadowing factor ``Y = 10**(xi/10)``, ``xi ~ N(0, sigma_dB^2)``.

    ``sigma_dB == 0`` returns exactly 1 without consuming random numbers.
    """
    if not sigma_dB >= 0:
        raise ParameterError(f"sigma_dB must be >= 0, got {sigma_dB!r}")
    if sigma_dB == 0:
        return 1.0 if size is None else np.ones(size)
    xi = rng.normal(0.0, sigma_dB, size=size)
    return 10.0 ** (xi / 10.0)


def shadowing_pdf(s, params: ShadowingParams):
    """Density of the shadowed received power ``s`` (watts).

    Lognormal in ``s`` with median ``exp(a * m)`` and log-standard-deviation
    ``a * sigma``, where ``a = ln(10)/10`` and ``m`` is the mean in dB.
    """
    if params.sigma_dB == 0:
        raise ParameterError("shadowing_pdf is degenerate for sigma_dB == 0")
    s = np.asarray(s, dtype=float)
    if np.any(~(s > 0)):
        raise ValueError("shadowing_pdf: power must be > 0")
    a, sigma, m = A_CONST, params.sigma_dB, params.mean_dB
    z = (np.log(s) - a * m) / (math.sqrt(2.0) * a * sigma)
    density = np.exp(-(z**2)) / (a * sigma * s * math.sqrt(2.0 * math.pi))
    return float(density) if density.ndim == 0 else density

"""Fluid-network SINR baseline and its Poisson-fitted correction.

The fluid model replaces the interfering BSs by a continuous density
``rho_bs`` starting at distance ``2 Rc`` from the serving BS, so the SINR
depends only on the UE-to-BS distance ``r``.  Users of the reference cell
are taken uniform on the disc of radius ``Rc``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import NumericalError, ParameterError
from .sinr import spectral_efficiency

CORRECTION_DOMAINS = ("dB", "linear")


@dataclass(frozen=True)
class FluidParams:
    """Inputs of the fluid SINR plus the affine-in-eta correction ``a eta + b``."""

    half_isd_Rc: float
    rho_bs: float
    eta: float
    fit_a: float = 3.0
    fit_b: float = -6.0
    correction_domain: str = "dB"

    def __post_init__(self):
        if not self.half_isd_Rc > 0:
            raise ParameterError("half_isd_Rc must be > 0")
        if not self.rho_bs > 0:
            raise ParameterError("rho_bs must be > 0")
        if not self.eta > 2:
            raise ParameterError("eta must be > 2")
        if self.correction_domain not in CORRECTION_DOMAINS:
            raise ParameterError(f"correction_domain must be one of {CORRECTION_DOMAINS}")

    @classmethod
    def from_config(cls, config, **overrides):
        """Fluid parameters matching a :class:`~poisson_sinr.network.NetworkConfig`."""
        values = dict(half_isd_Rc=config.half_isd_Rc, rho_bs=config.rho_bs, eta=config.eta)
        values.update(overrides)
        return cls(**values)

    @property
    def correction(self) -> float:
        """``fit_a * eta + fit_b``, in dB (or linear units, see ``correction_domain``)."""
        return self.fit_a * self.eta + self.fit_b

    @property
    def r_min(self) -> float:
        return self.half_isd_Rc / 1000.0


def _gamma(r, p: FluidParams):
    eta, Rc = p.eta, p.half_isd_Rc
    return (eta - 2.0) / (2.0 * math.pi * p.rho_bs) * r ** (-eta) / (2.0 * Rc - r) ** (2.0 - eta)


def fluid_sinr(r, params: FluidParams):
    """Fluid SINR (linear) at distance ``r`` in ``(0, Rc]`` from the serving BS."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(~((r_arr > 0) & (r_arr <= params.half_isd_Rc))):
        raise ValueError(f"fluid_sinr: r must lie in (0, {params.half_isd_Rc}]")
    g = _gamma(r_arr, params)
    return float(g) if g.ndim == 0 else g


def modified_fluid_sinr_dB(r, params: FluidParams):
    """Fluid SINR in dB after removing the ``a eta + b`` correction."""
    g = np.asarray(fluid_sinr(r, params), dtype=float)
    if params.correction_domain == "dB":
        out = 10.0 * np.log10(g) - params.correction
    else:
        shifted = g - params.correction
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.where(shifted > 0, 10.0 * np.log10(np.where(shifted > 0, shifted, 1.0)), -np.inf)
    return float(out) if out.ndim == 0 else out


def invert_fluid_sinr(gamma, params: FluidParams, rtol=1e-12) -> float:
    """Distance ``r`` in ``(0, Rc]`` at which the fluid SINR equals ``gamma``.

    Bisection on ``log r``; the fluid SINR is strictly decreasing in ``r``.
    """
    Rc = params.half_isd_Rc
    g_edge = _gamma(Rc, params)
    if not gamma >= g_edge * (1.0 - 1e-12):
        raise ValueError(f"gamma={gamma!r} below the cell-edge SINR {g_edge!r}")
    if gamma <= g_edge:
        return Rc
    hi = Rc
    lo = Rc / 2.0
    while _gamma(lo, params) < gamma:
        hi = lo
        lo /= 2.0
        if lo == 0.0:
            raise NumericalError("could not bracket gamma", {"gamma": gamma})
    # invariant: gamma(lo) >= gamma > gamma(hi)
    while hi / lo - 1.0 > rtol:
        mid = math.sqrt(lo * hi)
        if _gamma(mid, params) >= gamma:
            lo = mid
        else:
            hi = mid
    return math.sqrt(lo * hi)


def _cdf_scalar(g_lin, params):
    Rc = params.half_isd_Rc
    if g_lin < _gamma(Rc, params):
        return 0.0
    if g_lin >= _gamma(params.r_min, params):
        return 1.0
    r = invert_fluid_sinr(g_lin, params)
    return 1.0 - (r / Rc) ** 2


def fluid_cdf(gamma_dB, params: FluidParams, modified: bool = False):
    """``P(SINR <= gamma_dB)`` for a user uniform on the disc of radius ``Rc``.

    With ``modified`` the distribution is that of the corrected SINR, so the
    argument is moved back by the correction before inversion.
    """
    g_dB = np.asarray(gamma_dB, dtype=float)
    if modified:
        if params.correction_domain == "dB":
            g_lin = 10.0 ** ((g_dB + params.correction) / 10.0)
        else:
            g_lin = 10.0 ** (g_dB / 10.0) + params.correction
    else:
        g_lin = 10.0 ** (g_dB / 10.0)
    out = np.vectorize(lambda g: _cdf_scalar(g, params), otypes=[float])(g_lin)
    return float(out) if out.ndim == 0 else out


def fluid_quantile_dB(p, params: FluidParams, modified: bool = False):
    """Inverse of :func:`fluid_cdf` (closed form through ``r = Rc sqrt(1 - p)``)."""
    p = np.asarray(p, dtype=float)
    if np.any((p < 0) | (p > 1)):
        raise ValueError("probabilities must lie in [0, 1]")
    Rc = params.half_isd_Rc
    r = np.maximum(Rc * np.sqrt(1.0 - p), params.r_min)
    q = modified_fluid_sinr_dB(r, params) if modified else 10.0 * np.log10(fluid_sinr(r, params))
    return q


class FluidCdf:
    """Analytic fluid CDF exposing the same ``quantile``/``cdf`` API as the empirical one."""

    def __init__(self, params: FluidParams, modified: bool = False):
        self.params = params
        self.modified = modified

    def quantile(self, p):
        return fluid_quantile_dB(p, self.params, self.modified)

    def interpolated_quantile(self, p):
        return self.quantile(p)

    def cdf(self, gamma_dB):
        return fluid_cdf(gamma_dB, self.params, self.modified)

    def __repr__(self):
        return f"FluidCdf(eta={self.params.eta}, modified={self.modified})"


def cell_edge_throughput(params: FluidParams) -> float:
    """Spectral efficiency (bit/s/Hz) of a user at the cell edge ``r = Rc``."""
    return spectral_efficiency(fluid_sinr(params.half_isd_Rc, params))


def cell_average_throughput(params: FluidParams, epsabs=1e-6) -> float:
    """Mean spectral efficiency over users uniform on the cell disc.

    The disc centre ``r < Rc/1000`` is left out, matching the distance clamp
    of the simulator.
    """
    Rc, r_min = params.half_isd_Rc, params.r_min

    def integrand(r):
        return r * np.log1p(_gamma(r, params)) / math.log(2.0)

    value, abserr, info, *rest = integrate.quad(
        integrand, r_min, Rc, epsabs=epsabs * Rc**2 / 2.0, epsrel=0.0,
        limit=200, full_output=True)
    if rest:
        raise NumericalError("cell-average quadrature did not converge",
                             {"message": rest[0], "abserr": abserr, "neval": info["neval"]})
    return 2.0 / Rc**2 * value

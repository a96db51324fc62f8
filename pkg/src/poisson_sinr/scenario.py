"""Plain-text scenario files.

One ``key = value`` pair per line, ``#`` starts a comment and list values
are comma separated::

    half_isd_Rc = 500
    eta = 2.6, 3
    sigma_dB = 0, 3, 6, 8
    association = best_server
"""
from __future__ import annotations

import configparser
from dataclasses import dataclass, fields
from pathlib import Path

from .errors import ParameterError
from .fluid import CORRECTION_DOMAINS, FluidParams
from .network import NetworkConfig
from .sinr import ASSOCIATIONS

_SECTION = "scenario"

_NETWORK_KEYS = {
    "half_isd_Rc": float, "tx_power_P": float, "pathloss_K": float,
    "noise_Nth": float, "mean_bs_count": float, "ue_grid_count": int,
    "n_runs": int, "seed": int, "density_mapping": str, "ue_layout": str,
}


def _floats(text):
    return tuple(float(v) for v in text.split(",") if v.strip())


def _words(text):
    return tuple(v.strip() for v in text.split(",") if v.strip())


_OTHER_KEYS = {
    "eta": _floats, "sigma_dB": _floats, "association": _words,
    "fit_a": float, "fit_b": float, "correction_domain": str,
    "p_lo": float, "p_hi": float, "outage_thresholds_dB": _floats,
    "output_dir": str,
}


@dataclass(frozen=True)
class Scenario:
    """A sweep over ``eta x sigma_dB x association`` sharing one base config."""

    base: NetworkConfig = NetworkConfig()
    eta: tuple = (3.0,)
    sigma_dB: tuple = (0.0,)
    association: tuple = ("best_server",)
    fit_a: float = 3.0
    fit_b: float = -6.0
    correction_domain: str = "dB"
    p_lo: float = 0.05
    p_hi: float = 0.95
    outage_thresholds_dB: tuple = (-6.0, 0.0)
    output_dir: str = "out"

    def __post_init__(self):
        if not self.eta or not self.sigma_dB or not self.association:
            raise ParameterError("eta, sigma_dB and association need at least one value")
        for a in self.association:
            if a not in ASSOCIATIONS:
                raise ParameterError(f"association must be one of {ASSOCIATIONS}, got {a!r}")
        if self.correction_domain not in CORRECTION_DOMAINS:
            raise ParameterError(f"correction_domain must be one of {CORRECTION_DOMAINS}")
        if not 0 < self.p_lo < self.p_hi < 1:
            raise ParameterError("need 0 < p_lo < p_hi < 1")
        # range-check every point of the sweep up front
        for eta in self.eta:
            for sigma in self.sigma_dB:
                self.network_config(eta, sigma)
            self.fluid_params(eta)

    def network_config(self, eta, sigma_dB) -> NetworkConfig:
        return self.base.replace(eta=eta, sigma_dB=sigma_dB)

    def fluid_params(self, eta) -> FluidParams:
        return FluidParams.from_config(self.base.replace(eta=eta), fit_a=self.fit_a,
                                       fit_b=self.fit_b,
                                       correction_domain=self.correction_domain)

    def echo(self) -> dict:
        out = self.base.to_dict()
        out.update({f.name: getattr(self, f.name) for f in fields(self) if f.name != "base"})
        return out


def parse_scenario(text: str) -> Scenario:
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#",))
    parser.optionxform = str
    try:
        parser.read_string(f"[{_SECTION}]\n" + text)
    except configparser.Error as exc:
        raise ParameterError(f"unreadable scenario: {exc}") from exc
    network, other = {}, {}
    for key, raw in parser.items(_SECTION):
        if key in _NETWORK_KEYS:
            target, convert = network, _NETWORK_KEYS[key]
        elif key in _OTHER_KEYS:
            target, convert = other, _OTHER_KEYS[key]
        else:
            raise ParameterError(f"unknown scenario key {key!r}")
        try:
            target[key] = convert(raw.strip())
        except ValueError as exc:
            raise ParameterError(f"bad value for {key!r}: {raw!r}") from exc
    # eta and sigma of the base config are placeholders; the sweep sets them
    base = NetworkConfig(**network)
    return Scenario(base=base, **other)


def load_scenario(path) -> Scenario:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParameterError(f"cannot read scenario {path}: {exc}") from exc
    return parse_scenario(text)

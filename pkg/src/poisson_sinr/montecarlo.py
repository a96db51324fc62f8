"""Monte Carlo campaigns over Poisson layouts with a fixed set of UEs.

Every run draws a fresh layout; the UE positions are drawn once from the
master seed and reused.  Run ``k`` owns the seed stream
``SeedSequence(seed, spawn_key=(1, k))``, split into a layout stream and a
shadowing stream, so the output is independent of how runs are spread over
workers and switching shadowing on leaves the layouts unchanged.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from .errors import CampaignError
from .network import NetworkConfig, sample_layout
from .sinr import ASSOCIATIONS, batch_link_budget

_UE_STREAM = 0
_RUN_STREAM = 1


def ue_positions(config: NetworkConfig) -> np.ndarray:
    """The fixed UE set of a campaign, shape ``(ue_grid_count, 2)``."""
    n, side = config.ue_grid_count, config.side
    if config.ue_layout == "lattice":
        k = math.ceil(math.sqrt(n))
        ticks = (np.arange(k) + 0.5) * side / k
        xx, yy = np.meshgrid(ticks, ticks)
        return np.column_stack([xx.ravel(), yy.ravel()])[:n]
    rng = np.random.default_rng(np.random.SeedSequence(config.seed, spawn_key=(_UE_STREAM,)))
    return rng.uniform(0.0, side, size=(n, 2))


def run_streams(seed: int, run_index: int):
    """``(layout_rng, shadowing_rng)`` owned by one run."""
    ss = np.random.SeedSequence(seed, spawn_key=(_RUN_STREAM, run_index))
    layout_ss, shadow_ss = ss.spawn(2)
    return np.random.default_rng(layout_ss), np.random.default_rng(shadow_ss)


def _simulate_runs(config, ues, run_indices, association, shadowing_on):
    """Worker body: ``(useful, interference)`` per run, ``None`` for empty layouts."""
    out = []
    for k in run_indices:
        layout_rng, shadow_rng = run_streams(config.seed, k)
        layout = sample_layout(config, layout_rng)
        if layout.count == 0:
            out.append(None)
            continue
        out.append(batch_link_budget(ues, layout, config, association,
                                     shadow_rng if shadowing_on else None))
    return out


def _collect_runs(config, association, shadowing_on, workers):
    if association not in ASSOCIATIONS:
        raise ValueError(f"association must be one of {ASSOCIATIONS}")
    ues = ue_positions(config)
    runs = list(range(config.n_runs))
    workers = max(1, int(workers or 1))
    if workers == 1:
        return _simulate_runs(config, ues, runs, association, shadowing_on)
    chunks = [runs[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_simulate_runs, config, ues, c, association, shadowing_on)
                   for c in chunks if c]
        parts = [f.result() for f in futures]
    # undo the round-robin split into canonical run order
    results = [None] * len(runs)
    for i, part in enumerate(parts):
        results[i::workers] = part
    return results


@dataclass
class SinrSampleSet:
    """Finite SINR samples (dB) of a campaign, in canonical (run, UE) order."""

    samples_dB: np.ndarray = field(repr=False)
    n_runs: int
    n_skipped: int
    scenario: NetworkConfig
    association: str
    shadowing_on: bool
    n_empty_runs: int = 0
    n_infinite: int = 0

    def __len__(self):
        return len(self.samples_dB)


@dataclass
class SignalDecomposition:
    """Serving (useful) and interference powers in dB, paired per sample."""

    useful_dB: np.ndarray = field(repr=False)
    interference_dB: np.ndarray = field(repr=False)
    n_skipped: int = 0


def _finite_pairs(results, config):
    useful, interference = [], []
    n_empty = n_inf = 0
    for res in results:
        if res is None:
            n_empty += 1
            continue
        u, i = res
        keep = (i + config.noise_Nth) > 0
        n_inf += int(np.count_nonzero(~keep))
        useful.append(u[keep])
        interference.append(i[keep])
    if not useful or sum(len(u) for u in useful) == 0:
        raise CampaignError("campaign produced no finite SINR sample")
    return np.concatenate(useful), np.concatenate(interference), n_empty, n_inf


def run_campaign(config: NetworkConfig, association: str = "best_server",
                 shadowing_on: bool | None = None, workers: int = 1) -> SinrSampleSet:
    """Collect SINR samples over ``config.n_runs`` independent layouts.

    ``shadowing_on`` defaults to ``config.sigma_dB > 0``.  Layouts without a BS
    and infinite SINRs (lone BS, no noise) are skipped and counted.
    """
    if shadowing_on is None:
        shadowing_on = config.sigma_dB > 0
    results = _collect_runs(config, association, shadowing_on, workers)
    useful, interference, n_empty, n_inf = _finite_pairs(results, config)
    samples = 10.0 * np.log10(useful / (interference + config.noise_Nth))
    n_skipped = n_empty * config.ue_grid_count + n_inf
    return SinrSampleSet(samples, config.n_runs, n_skipped, config, association,
                         bool(shadowing_on), n_empty, n_inf)


def decompose_signals(config: NetworkConfig, shadowing_on: bool | None = None,
                      workers: int = 1) -> SignalDecomposition:
    """Best-server useful power and total interference, in dB, per (run, UE).

    Uses the same seed streams as :func:`run_campaign`, so with zero noise
    ``useful_dB - interference_dB`` reproduces the campaign samples.
    """
    if shadowing_on is None:
        shadowing_on = config.sigma_dB > 0
    results = _collect_runs(config, "best_server", shadowing_on, workers)
    useful, interference, n_empty, n_inf = _finite_pairs(results, config)
    if config.noise_Nth > 0:
        # a lone BS has no interference; keep the pair only if both are finite
        keep = interference > 0
        n_inf += int(np.count_nonzero(~keep))
        useful, interference = useful[keep], interference[keep]
    return SignalDecomposition(10.0 * np.log10(useful), 10.0 * np.log10(interference),
                               n_empty * config.ue_grid_count + n_inf)


class EmpiricalCdf:
    """Right-continuous empirical CDF of SINR samples in dB."""

    def __init__(self, samples_dB):
        x = np.sort(np.asarray(samples_dB, dtype=float).ravel())
        if len(x) == 0:
            raise ValueError("empirical CDF needs at least one sample")
        self.sorted_samples_dB = x

    def __len__(self):
        return len(self.sorted_samples_dB)

    def cdf(self, x):
        """Fraction of samples ``<= x``."""
        n = len(self.sorted_samples_dB)
        out = np.searchsorted(self.sorted_samples_dB, x, side="right") / n
        return float(out) if np.ndim(out) == 0 else out

    def quantile(self, p):
        """Order statistic of rank ``ceil(p n)``."""
        p = np.asarray(p, dtype=float)
        n = len(self.sorted_samples_dB)
        # the small offset keeps ceil(p n) exact when p n is an integer up to rounding
        rank = np.ceil(p * n - 1e-9).astype(int)
        out = self.sorted_samples_dB[np.clip(rank, 1, n) - 1]
        return float(out) if out.ndim == 0 else out

    def interpolated_quantile(self, p):
        """Piecewise-linear quantile, used for the fixed-grid CSV export."""
        out = np.quantile(self.sorted_samples_dB, p, method="linear")
        return float(out) if np.ndim(out) == 0 else out

    def quantile_halfwidth(self, p, confidence=0.99):
        """Half-width of a distribution-free order-statistic confidence interval."""
        p = np.asarray(p, dtype=float)
        n = len(self.sorted_samples_dB)
        z = stats.norm.ppf(0.5 + confidence / 2.0)
        spread = z * np.sqrt(n * p * (1.0 - p))
        lo = np.clip(np.floor(n * p - spread).astype(int), 1, n) - 1
        hi = np.clip(np.ceil(n * p + spread).astype(int), 1, n) - 1
        return (self.sorted_samples_dB[hi] - self.sorted_samples_dB[lo]) / 2.0


def empirical_cdf(samples) -> EmpiricalCdf:
    """Empirical CDF of a :class:`SinrSampleSet` or a plain array of dB values."""
    if isinstance(samples, SinrSampleSet):
        samples = samples.samples_dB
    return EmpiricalCdf(samples)


def probability_grid(p_lo=0.05, p_hi=0.95, step=0.01) -> np.ndarray:
    n = int(round((p_hi - p_lo) / step))
    return np.round(p_lo + step * np.arange(n + 1), 10)


@dataclass
class ShiftReport:
    """Horizontal distance between two CDFs at matched probabilities."""

    max_shift_dB: float
    p_grid: np.ndarray = field(repr=False)
    profile_dB: np.ndarray = field(repr=False)

    def to_dict(self):
        return {
            "max_shift_dB": self.max_shift_dB,
            "profile": [{"p": float(p), "shift_dB": float(s)}
                        for p, s in zip(self.p_grid, self.profile_dB)],
        }


def cdf_horizontal_shift_dB(cdf_a, cdf_b, p_lo=0.05, p_hi=0.95, step=0.01) -> ShiftReport:
    """Largest ``|q_b(p) - q_a(p)|`` over a ``step`` grid on ``[p_lo, p_hi]``.

    ``cdf_a`` and ``cdf_b`` only need a vectorised ``quantile(p)``.  The
    signed profile ``q_b - q_a`` is returned alongside.
    """
    if not 0 < p_lo < p_hi < 1:
        raise ValueError("need 0 < p_lo < p_hi < 1")
    grid = probability_grid(p_lo, p_hi, step)
    profile = np.asarray(cdf_b.quantile(grid)) - np.asarray(cdf_a.quantile(grid))
    return ShiftReport(float(np.max(np.abs(profile))), grid, profile)


def outage_probability(cdf: EmpiricalCdf, threshold_dB: float) -> float:
    """Probability that the SINR does not exceed ``threshold_dB``."""
    return cdf.cdf(threshold_dB)

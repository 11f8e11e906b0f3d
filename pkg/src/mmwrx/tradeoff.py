"""Monte Carlo sweep over (architecture, bits, RF chains) and the
utility-optimal receiver set.

Every candidate is evaluated on the same channel realizations (common random
numbers: trial t uses seed base_seed + t), so per-realization orderings
between architectures carry over to the averaged points exactly. The
utility U(alpha) = alpha*EEn + (1-alpha)*SEn scalarizes the two objectives
after dividing each by its maximum over the candidate cloud; the set of
maximizers over all alpha in [0, 1] equals the extreme points of the
upper-right convex hull of the normalized (EE, SE) cloud.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace

import numpy as np

from .channel import ChannelParams, sample_channel
from .combining import (
    RankZeroChannelError,
    design_ac,
    design_hc_rf,
    rate_ac,
    rate_dc,
    rate_hc,
)
from .power import ComponentPowerSet, p_total_ac, p_total_dc, p_total_hc
from .quantization import eta_for_bits

ARCHITECTURES = ("AC", "HC", "DC")


@dataclass(frozen=True)
class Scenario:
    """One sweep configuration: channel, link, grid, and trial budget."""

    name: str
    channel: ChannelParams
    bandwidth: float = 1e9
    snr_db: float = 0.0
    n_trials: int = 100
    base_seed: int = 42
    bit_range: tuple[int, ...] = (1, 2, 3, 4, 5, 6, 7, 8)
    nrf_set: tuple[int, ...] = (2, 4, 8, 10, 12)
    architectures: tuple[str, ...] = ARCHITECTURES

    def __post_init__(self):
        if self.n_trials < 1:
            raise ValueError("n_trials must be >= 1")
        if self.bandwidth <= 0:
            raise ValueError("bandwidth must be > 0")
        if not self.bit_range or any(b < 1 for b in self.bit_range):
            raise ValueError("bit_range must be nonempty with entries >= 1")
        if not self.architectures:
            raise ValueError("architecture set must be nonempty")
        unknown = set(self.architectures) - set(ARCHITECTURES)
        if unknown:
            raise ValueError(f"unknown architectures: {sorted(unknown)}")
        if "HC" in self.architectures:
            if not self.nrf_set:
                raise ValueError("nrf_set must be nonempty when HC is swept")
            bad = [n for n in self.nrf_set if n < 1 or n > self.channel.n_rx]
            if bad:
                raise ValueError(
                    f"nrf_set entries must lie in [1, n_rx={self.channel.n_rx}], got {bad}")


@dataclass(frozen=True)
class DesignPoint:
    """One evaluated candidate: averaged rate with its power and efficiencies."""

    arch: str
    bits: int
    n_rf: int | None
    mean_rate: float
    se: float
    total_power: float
    ee: float
    trial_count: int
    rate_std_err: float


@dataclass(frozen=True)
class AlphaInterval:
    """Preference range on which one point maximizes the utility."""

    alpha_min: float
    alpha_max: float
    point_index: int


@dataclass(frozen=True)
class SweepResult:
    scenario: Scenario
    points: list[DesignPoint] = field(repr=False)
    optimal_set: list[AlphaInterval] = field(repr=False)


def candidate_grid(scenario: Scenario) -> list[tuple[str, int, int | None]]:
    """The (arch, bits, n_rf) grid in the canonical sweep order."""
    grid: list[tuple[str, int, int | None]] = []
    for arch in ("AC", "DC", "HC"):
        if arch not in scenario.architectures:
            continue
        if arch == "HC":
            grid.extend(("HC", b, n) for n in scenario.nrf_set for b in scenario.bit_range)
        else:
            grid.extend((arch, b, None) for b in scenario.bit_range)
    return grid


def _trial_rates(scenario: Scenario, seed: int,
                 grid: list[tuple[str, int, int | None]]) -> dict:
    """Per-realization rates for every candidate, from one channel draw."""
    h = sample_channel(scenario.channel, seed).h
    p = 10.0 ** (scenario.snr_db / 10.0)
    n0 = 1.0
    bw = scenario.bandwidth
    archs = {arch for arch, _, _ in grid}
    rates: dict[tuple[str, int, int | None], float] = {}
    try:
        if "AC" in archs:
            d = design_ac(h)
            w_r = d.w_rf[:, 0]
            for arch, b, n in grid:
                if arch == "AC":
                    rates[(arch, b, n)] = rate_ac(h, w_r, d.w_t, p, n0, eta_for_bits(b), bw).rate_bps
        if "DC" in archs:
            for arch, b, n in grid:
                if arch == "DC":
                    rates[(arch, b, n)] = rate_dc(h, p, n0, eta_for_bits(b), bw).rate_bps
        if "HC" in archs:
            for n_rf in sorted({n for arch, _, n in grid if arch == "HC"}):
                w_rf = design_hc_rf(h, n_rf)
                for arch, b, n in grid:
                    if arch == "HC" and n == n_rf:
                        rates[(arch, b, n)] = rate_hc(h, w_rf, p, n0, eta_for_bits(b), bw).rate_bps
    except RankZeroChannelError:
        warnings.warn(f"rank-zero channel at seed {seed}; counting zero rate", stacklevel=2)
        rates = {key: 0.0 for key in grid}
    return rates


def _mean_rate_table(scenario: Scenario,
                     grid: list[tuple[str, int, int | None]]) -> dict:
    """Mean rate and standard error per candidate over the trial seeds."""
    samples: dict[tuple[str, int, int | None], list[float]] = {key: [] for key in grid}
    for t in range(scenario.n_trials):
        trial = _trial_rates(scenario, scenario.base_seed + t, grid)
        for key in grid:
            samples[key].append(trial[key])
    table = {}
    for key, vals in samples.items():
        n = len(vals)
        mean = math.fsum(vals) / n
        if n > 1:
            var = math.fsum((v - mean) ** 2 for v in vals) / (n - 1)
            std_err = math.sqrt(var / n)
        else:
            std_err = 0.0
        table[key] = (mean, std_err)
    return table


def _point_from_stats(arch: str, bits: int, n_rf: int | None, mean: float,
                      std_err: float, scenario: Scenario,
                      components: ComponentPowerSet) -> DesignPoint:
    n_rx = scenario.channel.n_rx
    bw = scenario.bandwidth
    if arch == "AC":
        power = p_total_ac(n_rx, components, bits, bw).total
    elif arch == "DC":
        power = p_total_dc(n_rx, components, bits, bw).total
    else:
        power = p_total_hc(n_rx, n_rf, components, bits, bw).total
    return DesignPoint(
        arch=arch,
        bits=bits,
        n_rf=n_rf,
        mean_rate=mean,
        se=mean / bw,
        total_power=power,
        ee=mean / power,
        trial_count=scenario.n_trials,
        rate_std_err=std_err,
    )


def evaluate_design(arch: str, bits: int, n_rf: int | None, scenario: Scenario,
                    components: ComponentPowerSet) -> DesignPoint:
    """Evaluate a single candidate over the scenario's common seed sequence."""
    if arch not in ARCHITECTURES:
        raise ValueError(f"unknown architecture {arch!r}")
    key = (arch, bits, n_rf if arch == "HC" else None)
    if arch == "HC" and (n_rf is None or n_rf < 1 or n_rf > scenario.channel.n_rx):
        raise ValueError(f"HC requires n_rf in [1, {scenario.channel.n_rx}]")
    mean, std_err = _mean_rate_table(scenario, [key])[key]
    return _point_from_stats(arch, bits, key[2], mean, std_err, scenario, components)


def sweep(scenario: Scenario, components: ComponentPowerSet) -> SweepResult:
    """Evaluate the whole candidate grid and extract the utility-optimal set."""
    grid = candidate_grid(scenario)
    table = _mean_rate_table(scenario, grid)
    points = [
        _point_from_stats(arch, bits, n_rf, *table[(arch, bits, n_rf)], scenario, components)
        for arch, bits, n_rf in grid
    ]
    return SweepResult(scenario=scenario, points=points, optimal_set=optimal_set(points))


def _normalized_objectives(points: list[DesignPoint]) -> tuple[np.ndarray, np.ndarray]:
    ee = np.array([pt.ee for pt in points])
    se = np.array([pt.se for pt in points])
    return ee / ee.max(), se / se.max()


def _tie_break_key(pt: DesignPoint):
    # Cheapest hardware first at equal utility: more SE, then fewer chains,
    # then fewer bits. DC uses one chain per antenna, more than any HC entry.
    chains = 1 if pt.arch == "AC" else (pt.n_rf if pt.arch == "HC" else math.inf)
    return (-pt.se, chains, pt.bits)


def utility_select(points: list[DesignPoint], alpha: float) -> list[int]:
    """Indices of the points maximizing alpha*EEn + (1-alpha)*SEn.

    Ties (within 1e-12 relative) are all returned, ordered so the first
    entry is the preferred representative.
    """
    if not points:
        raise ValueError("point set must be nonempty")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    een, sen = _normalized_objectives(points)
    utility = alpha * een + (1.0 - alpha) * sen
    best = utility.max()
    ties = [i for i in range(len(points)) if utility[i] >= best * (1.0 - 1e-12)]
    ties.sort(key=lambda i: _tie_break_key(points[i]))
    return ties


def optimal_set(points: list[DesignPoint]) -> list[AlphaInterval]:
    """Exact maximizer set over all alpha in [0, 1], as tiling intervals.

    Computed geometrically: the maximizers are the extreme points of the
    upper-right convex hull of the normalized (EE, SE) cloud, and breakpoint
    alphas follow from the hull edge slopes.
    """
    if not points:
        raise ValueError("point set must be nonempty")
    een, sen = _normalized_objectives(points)

    # Deduplicate identical objective pairs, keeping the lowest index.
    seen: dict[tuple[float, float], int] = {}
    for i in range(len(points)):
        seen.setdefault((float(een[i]), float(sen[i])), i)
    cloud = sorted(seen.items())  # ascending (x, y)

    # Upper hull by monotone chain; collinear points are not extreme.
    hull: list[tuple[tuple[float, float], int]] = []
    for item in cloud:
        (x3, y3), _ = item
        while len(hull) >= 2:
            (x1, y1), _ = hull[-2]
            (x2, y2), _ = hull[-1]
            if (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(item)

    # Keep the stretch from the max-SE vertex to the max-EE vertex; anything
    # left of the peak is dominated in both objectives.
    peak = max(range(len(hull)), key=lambda i: (hull[i][0][1], hull[i][0][0]))
    hull = hull[peak:]

    if len(hull) == 1:
        return [AlphaInterval(0.0, 1.0, hull[0][1])]

    intervals = []
    lo = 0.0
    for i in range(len(hull) - 1):
        (x1, y1), idx = hull[i]
        (x2, y2), _ = hull[i + 1]
        drop = y1 - y2
        alpha_star = drop / ((x2 - x1) + drop)
        intervals.append(AlphaInterval(lo, alpha_star, idx))
        lo = alpha_star
    intervals.append(AlphaInterval(lo, 1.0, hull[-1][1]))
    return intervals


def iso_power_slope(p_iso: float, bandwidth: float) -> float:
    """Slope of the constant-power guide line SE = (P/B) * EE."""
    return p_iso / bandwidth


def with_overrides(scenario: Scenario, **kwargs) -> Scenario:
    """Copy a scenario with selected fields replaced.

    Fields shared by the scenario and its channel (snr_db) update both so
    the bookkeeping copy never disagrees with the driving value.
    """
    scenario_fields: dict = {}
    channel_fields: dict = {}
    for key, value in kwargs.items():
        in_scenario = key in Scenario.__dataclass_fields__
        in_channel = key in ChannelParams.__dataclass_fields__
        if not in_scenario and not in_channel:
            raise ValueError(f"unknown scenario field {key!r}")
        if in_scenario:
            scenario_fields[key] = value
        if in_channel:
            channel_fields[key] = value
    if channel_fields:
        scenario_fields["channel"] = replace(scenario.channel, **channel_fields)
    return replace(scenario, **scenario_fields)

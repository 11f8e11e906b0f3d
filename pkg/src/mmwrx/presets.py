"""Shipped scenario and component presets.

Presets live as JSON files under ``mmwrx/data`` in the same schema the CLI
config and HTTP API use, so adding a catalog entry is a data change. Users
can also point the CLI at their own component file.
"""

from __future__ import annotations

import json
from importlib import resources

from .channel import ChannelParams
from .power import ComponentPowerSet
from .tradeoff import Scenario


class UnknownPresetError(KeyError):
    """Requested preset name is not in the shipped catalog."""


def scenario_from_dict(raw: dict) -> Scenario:
    channel = ChannelParams(
        n_tx=raw["n_tx"],
        n_rx=raw["n_rx"],
        mode="normalized",
        snr_db=raw["snr_db"],
        cluster_rate=raw.get("cluster_rate", 1.9),
        paths_per_cluster=raw.get("paths_per_cluster", 20),
        angle_spread_deg=raw.get("angle_spread_deg", 10.0),
    )
    return Scenario(
        name=raw["name"],
        channel=channel,
        bandwidth=raw["bandwidth_hz"],
        snr_db=raw["snr_db"],
        n_trials=raw.get("n_trials", 100),
        base_seed=raw.get("base_seed", 42),
        bit_range=tuple(raw.get("bit_range", range(1, 9))),
        nrf_set=tuple(raw.get("nrf_set", (2, 4, 8, 10, 12))),
        architectures=tuple(raw.get("architectures", ("AC", "HC", "DC"))),
    )


def components_from_dict(raw: dict) -> ComponentPowerSet:
    return ComponentPowerSet(
        p_lna=raw["p_lna_w"],
        p_sp=raw["p_sp_w"],
        p_c=raw["p_c_w"],
        p_ps=raw["p_ps_w"],
        p_m=raw["p_m_w"],
        p_lo=raw["p_lo_w"],
        p_lpf=raw["p_lpf_w"],
        p_bb_amp=raw["p_bb_amp_w"],
        adc_fom=raw["adc_fom_j_per_step_hz"],
        name=raw.get("name"),
    )


def components_to_dict(comps: ComponentPowerSet) -> dict:
    return {
        "name": comps.name,
        "p_lna_w": comps.p_lna,
        "p_sp_w": comps.p_sp,
        "p_c_w": comps.p_c,
        "p_ps_w": comps.p_ps,
        "p_m_w": comps.p_m,
        "p_lo_w": comps.p_lo,
        "p_lpf_w": comps.p_lpf,
        "p_bb_amp_w": comps.p_bb_amp,
        "adc_fom_j_per_step_hz": comps.adc_fom,
    }


def scenario_to_dict(scenario: Scenario) -> dict:
    return {
        "name": scenario.name,
        "n_tx": scenario.channel.n_tx,
        "n_rx": scenario.channel.n_rx,
        "snr_db": scenario.snr_db,
        "bandwidth_hz": scenario.bandwidth,
        "n_trials": scenario.n_trials,
        "base_seed": scenario.base_seed,
        "bit_range": list(scenario.bit_range),
        "nrf_set": list(scenario.nrf_set),
        "architectures": list(scenario.architectures),
        "cluster_rate": scenario.channel.cluster_rate,
        "paths_per_cluster": scenario.channel.paths_per_cluster,
        "angle_spread_deg": scenario.channel.angle_spread_deg,
    }


def _load_catalog(kind: str) -> dict[str, dict]:
    catalog = {}
    root = resources.files("mmwrx") / "data" / kind
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".json"):
            raw = json.loads(entry.read_text())
            catalog[raw["name"]] = raw
    return catalog


def scenario_presets() -> dict[str, Scenario]:
    return {name: scenario_from_dict(raw) for name, raw in _load_catalog("scenarios").items()}


def component_presets() -> dict[str, ComponentPowerSet]:
    return {name: components_from_dict(raw) for name, raw in _load_catalog("components").items()}


def get_scenario_preset(name: str) -> Scenario:
    presets = scenario_presets()
    if name not in presets:
        raise UnknownPresetError(
            f"unknown preset {name!r}; available: {', '.join(sorted(presets))}")
    return presets[name]


def get_component_preset(name: str) -> ComponentPowerSet:
    presets = component_presets()
    if name not in presets:
        raise UnknownPresetError(
            f"unknown preset {name!r}; available: {', '.join(sorted(presets))}")
    return presets[name]

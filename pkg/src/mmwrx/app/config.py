"""Boundary validation for sweep requests (CLI config files and HTTP bodies).

A request names a scenario and a component set, each either as a preset
string, or as a full object, or as a preset plus field overrides. The same
models back the CLI and the service so both reject exactly the same inputs.
"""

from __future__ import annotations

from typing import Literal, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..power import ComponentPowerSet
from ..presets import (
    UnknownPresetError,
    components_from_dict,
    components_to_dict,
    get_component_preset,
    get_scenario_preset,
    scenario_from_dict,
    scenario_to_dict,
)
from ..tradeoff import Scenario, with_overrides


def describe_validation_error(errors: ValidationError | list[dict]) -> tuple[str, str]:
    """Pick the most informative error and return (field_path, message).

    Union fields report one entry per branch; for object inputs the
    string-branch "should be a valid string" entry is noise, so prefer the
    deepest non-string-branch entry.
    """
    if isinstance(errors, ValidationError):
        errors = errors.errors()

    def rank(err):
        loc = err["loc"]
        is_str_branch = bool(loc) and loc[-1] == "str"
        return (1 if is_str_branch else 0, -len(loc))

    err = sorted(errors, key=rank)[0]
    parts = [str(p) for p in err["loc"]
             if p != "body" and str(p) != "str" and not str(p).startswith("function-after")]
    msg = err["msg"]
    prefix = "Value error, "
    if msg.startswith(prefix):
        msg = msg[len(prefix):]
    return ".".join(parts) or "body", msg


class ScenarioModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    preset: str | None = None
    name: str | None = None
    n_tx: int | None = Field(None, ge=1)
    n_rx: int | None = Field(None, ge=1)
    snr_db: float | None = None
    bandwidth_hz: float | None = Field(None, gt=0)
    n_trials: int | None = Field(None, ge=1)
    base_seed: int | None = None
    bit_range: list[int] | None = None
    nrf_set: list[int] | None = None
    architectures: list[Literal["AC", "HC", "DC"]] | None = None
    cluster_rate: float | None = Field(None, gt=0)
    paths_per_cluster: int | None = Field(None, ge=1)
    angle_spread_deg: float | None = Field(None, ge=0)

    @model_validator(mode="after")
    def _check_fields(self):
        if self.preset is None:
            missing = [f for f in ("n_tx", "n_rx", "snr_db", "bandwidth_hz")
                       if getattr(self, f) is None]
            if missing:
                raise ValueError(
                    f"scenario needs a preset or explicit values for: {', '.join(missing)}")
        if self.bit_range is not None and (not self.bit_range or min(self.bit_range) < 1):
            raise ValueError("bit_range must be nonempty with entries >= 1")
        if self.nrf_set is not None and (not self.nrf_set or min(self.nrf_set) < 1):
            raise ValueError("nrf_set must be nonempty with entries >= 1")
        if self.architectures is not None and not self.architectures:
            raise ValueError("architectures must be nonempty")
        n_rx = self.n_rx
        if n_rx is None and self.preset is not None:
            try:
                n_rx = get_scenario_preset(self.preset).channel.n_rx
            except UnknownPresetError:
                raise ValueError(f"unknown preset {self.preset!r}")
        if self.nrf_set is not None and n_rx is not None and max(self.nrf_set) > n_rx:
            raise ValueError(f"nrf_set entries must not exceed n_rx = {n_rx}")
        return self

    def resolve(self) -> Scenario:
        overrides = self.model_dump(exclude_none=True, exclude={"preset"})
        if "bandwidth_hz" in overrides:
            overrides["bandwidth"] = overrides.pop("bandwidth_hz")
        for key in ("bit_range", "nrf_set", "architectures"):
            if key in overrides:
                overrides[key] = tuple(overrides[key])
        if self.preset is not None:
            base = get_scenario_preset(self.preset)
            return with_overrides(base, **overrides) if overrides else base
        raw = scenario_to_dict_defaults(self)
        return scenario_from_dict(raw)


def scenario_to_dict_defaults(model: ScenarioModel) -> dict:
    return {
        "name": model.name or "custom",
        "n_tx": model.n_tx,
        "n_rx": model.n_rx,
        "snr_db": model.snr_db,
        "bandwidth_hz": model.bandwidth_hz,
        "n_trials": model.n_trials or 100,
        "base_seed": model.base_seed if model.base_seed is not None else 42,
        "bit_range": model.bit_range or list(range(1, 9)),
        "nrf_set": model.nrf_set or [2, 4, 8, 10, 12],
        "architectures": model.architectures or ["AC", "HC", "DC"],
        "cluster_rate": model.cluster_rate or 1.9,
        "paths_per_cluster": model.paths_per_cluster or 20,
        "angle_spread_deg": 10.0 if model.angle_spread_deg is None else model.angle_spread_deg,
    }


class ComponentsModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    preset: str | None = None
    name: str | None = None
    p_lna_w: float | None = Field(None, ge=0)
    p_sp_w: float | None = Field(None, ge=0)
    p_c_w: float | None = Field(None, ge=0)
    p_ps_w: float | None = Field(None, ge=0)
    p_m_w: float | None = Field(None, ge=0)
    p_lo_w: float | None = Field(None, ge=0)
    p_lpf_w: float | None = Field(None, ge=0)
    p_bb_amp_w: float | None = Field(None, ge=0)
    adc_fom_j_per_step_hz: float | None = Field(None, gt=0)

    _FIELDS = ("p_lna_w", "p_sp_w", "p_c_w", "p_ps_w", "p_m_w", "p_lo_w",
               "p_lpf_w", "p_bb_amp_w", "adc_fom_j_per_step_hz")

    @model_validator(mode="after")
    def _check_fields(self):
        if self.preset is None:
            missing = [f for f in self._FIELDS if getattr(self, f) is None]
            if missing:
                raise ValueError(
                    f"components need a preset or explicit values for: {', '.join(missing)}")
        elif self.preset is not None:
            try:
                get_component_preset(self.preset)
            except UnknownPresetError:
                raise ValueError(f"unknown preset {self.preset!r}")
        return self

    def resolve(self) -> ComponentPowerSet:
        if self.preset is not None:
            base = components_to_dict(get_component_preset(self.preset))
            overrides = self.model_dump(exclude_none=True, exclude={"preset"})
            if overrides:
                base.update(overrides)
                base.setdefault("name", None)
            return components_from_dict(base)
        raw = self.model_dump(exclude_none=True)
        raw.setdefault("name", None)
        return components_from_dict(raw)


def _as_scenario_model(value: Union[str, dict, ScenarioModel]) -> ScenarioModel:
    if isinstance(value, str):
        return ScenarioModel(preset=value)
    if isinstance(value, ScenarioModel):
        return value
    return ScenarioModel(**value)


def _as_components_model(value: Union[str, dict, ComponentsModel]) -> ComponentsModel:
    if isinstance(value, str):
        return ComponentsModel(preset=value)
    if isinstance(value, ComponentsModel):
        return value
    return ComponentsModel(**value)


class SweepRequest(BaseModel):
    """One sweep: scenario + component set (+ optional chart guide lines)."""

    model_config = ConfigDict(extra="forbid")

    scenario: Union[str, ScenarioModel]
    components: Union[str, ComponentsModel]
    iso_power_w: list[float] | None = None

    @model_validator(mode="after")
    def _normalize(self):
        self.scenario = _as_scenario_model(self.scenario)
        self.components = _as_components_model(self.components)
        if self.iso_power_w is not None and any(p <= 0 for p in self.iso_power_w):
            raise ValueError("iso_power_w entries must be > 0")
        return self

    def resolve(self) -> tuple[Scenario, ComponentPowerSet]:
        return self.scenario.resolve(), self.components.resolve()


class RunConfig(BaseModel):
    """CLI sweep configuration: a request plus output destination."""

    model_config = ConfigDict(extra="forbid")

    scenario: Union[str, ScenarioModel]
    components: Union[str, ComponentsModel]
    iso_power_w: list[float] | None = None
    output: Literal["json", "csv", "svg"] | None = None
    output_path: str | None = None
    figure_path: str | None = None

    def request(self) -> SweepRequest:
        return SweepRequest(scenario=self.scenario, components=self.components,
                            iso_power_w=self.iso_power_w)

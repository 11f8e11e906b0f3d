"""SE vs EE trade-off analysis for quantized mmWave receiver architectures."""

from .channel import (
    ArrayResponse,
    ChannelParams,
    ChannelRealization,
    ClusterDraw,
    array_response,
    assemble_channel,
    pathloss_db,
    sample_channel,
)
from .combining import (
    CombinerDesign,
    RankZeroChannelError,
    RateResult,
    design_ac,
    design_dc,
    design_hc_rf,
    rate_ac,
    rate_dc,
    rate_hc,
    waterfill,
)
from .power import ComponentPowerSet, PowerBreakdown, p_adc, p_total_ac, p_total_dc, p_total_hc
from .presets import component_presets, get_component_preset, get_scenario_preset, scenario_presets
from .quantization import ETA_TABLE, QuantizerModel, eta_for_bits
from .tradeoff import (
    AlphaInterval,
    DesignPoint,
    Scenario,
    SweepResult,
    candidate_grid,
    evaluate_design,
    optimal_set,
    sweep,
    utility_select,
    with_overrides,
)

__version__ = "0.1.0"

__all__ = [
    "ArrayResponse",
    "ChannelParams",
    "ChannelRealization",
    "ClusterDraw",
    "array_response",
    "assemble_channel",
    "pathloss_db",
    "sample_channel",
    "CombinerDesign",
    "RankZeroChannelError",
    "RateResult",
    "design_ac",
    "design_dc",
    "design_hc_rf",
    "rate_ac",
    "rate_dc",
    "rate_hc",
    "waterfill",
    "ComponentPowerSet",
    "PowerBreakdown",
    "p_adc",
    "p_total_ac",
    "p_total_dc",
    "p_total_hc",
    "component_presets",
    "get_component_preset",
    "get_scenario_preset",
    "scenario_presets",
    "ETA_TABLE",
    "QuantizerModel",
    "eta_for_bits",
    "AlphaInterval",
    "DesignPoint",
    "Scenario",
    "SweepResult",
    "candidate_grid",
    "evaluate_design",
    "optimal_set",
    "sweep",
    "utility_select",
    "with_overrides",
    "__version__",
]

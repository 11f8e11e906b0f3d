"""Receiver power consumption models.

Every architecture is a linear combination of per-device powers: LNAs at the
antennas, phase shifters and splitters/combiners in analog stages, one RF
chain (mixer + oscillator + filter + baseband amplifier) per conversion
path, and an I/Q ADC pair per chain whose power is fom * bandwidth * 2**bits
(Walden's figure of merit scaling).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ComponentPowerSet:
    """Per-device powers in Watts plus the ADC figure of merit in J/step/Hz."""

    p_lna: float
    p_sp: float
    p_c: float
    p_ps: float
    p_m: float
    p_lo: float
    p_lpf: float
    p_bb_amp: float
    adc_fom: float
    name: str | None = None

    def __post_init__(self):
        for label in ("p_lna", "p_sp", "p_c", "p_ps", "p_m", "p_lo", "p_lpf", "p_bb_amp"):
            if getattr(self, label) < 0:
                raise ValueError(f"{label} must be >= 0")
        if self.adc_fom <= 0:
            raise ValueError("adc_fom must be > 0")

    @property
    def p_rf_chain(self) -> float:
        """Power of one RF chain: mixer + oscillator + filter + BB amplifier."""
        return self.p_m + self.p_lo + self.p_lpf + self.p_bb_amp


@dataclass(frozen=True)
class PowerBreakdown:
    """Total receiver power and its per-component decomposition."""

    total: float
    per_component: dict[str, float]


def _validate(n_rx: int, bits: int, bandwidth: float):
    if n_rx < 1:
        raise ValueError("n_rx must be >= 1")
    if bits < 1:
        raise ValueError("bits must be >= 1")
    if bandwidth <= 0:
        raise ValueError("bandwidth must be > 0")


def p_adc(fom: float, bandwidth: float, bits: int) -> float:
    """ADC power fom * bandwidth * 2**bits (Watts)."""
    if fom <= 0:
        raise ValueError("fom must be > 0")
    if bandwidth <= 0:
        raise ValueError("bandwidth must be > 0")
    if bits < 1:
        raise ValueError("bits must be >= 1")
    return fom * bandwidth * 2.0**bits


def _breakdown(parts: dict[str, float]) -> PowerBreakdown:
    return PowerBreakdown(total=sum(parts.values()), per_component=parts)


def p_total_dc(n_rx: int, comps: ComponentPowerSet, bits: int,
               bandwidth: float) -> PowerBreakdown:
    """Fully digital receiver: one LNA, RF chain, and ADC pair per antenna."""
    _validate(n_rx, bits, bandwidth)
    adc = p_adc(comps.adc_fom, bandwidth, bits)
    return _breakdown({
        "lna": n_rx * comps.p_lna,
        "rf_chains": n_rx * comps.p_rf_chain,
        "adc": n_rx * 2.0 * adc,
    })


def p_total_ac(n_rx: int, comps: ComponentPowerSet, bits: int,
               bandwidth: float) -> PowerBreakdown:
    """Analog receiver: per-antenna LNA + phase shifter, then a single
    combiner, RF chain, and ADC pair."""
    _validate(n_rx, bits, bandwidth)
    adc = p_adc(comps.adc_fom, bandwidth, bits)
    return _breakdown({
        "lna": n_rx * comps.p_lna,
        "phase_shifters": n_rx * comps.p_ps,
        "rf_chains": comps.p_rf_chain,
        "combiners": comps.p_c,
        "adc": 2.0 * adc,
    })


def p_total_hc(n_rx: int, n_rf: int, comps: ComponentPowerSet, bits: int,
               bandwidth: float) -> PowerBreakdown:
    """Hybrid receiver: per-antenna LNA + splitter + one phase shifter per
    chain, then per-chain combiner, RF chain, and ADC pair."""
    _validate(n_rx, bits, bandwidth)
    if n_rf < 1 or n_rf > n_rx:
        raise ValueError(f"n_rf must lie in [1, {n_rx}], got {n_rf}")
    adc = p_adc(comps.adc_fom, bandwidth, bits)
    return _breakdown({
        "lna": n_rx * comps.p_lna,
        "splitters": n_rx * comps.p_sp,
        "phase_shifters": n_rx * n_rf * comps.p_ps,
        "rf_chains": n_rf * comps.p_rf_chain,
        "combiners": n_rf * comps.p_c,
        "adc": n_rf * 2.0 * adc,
    })

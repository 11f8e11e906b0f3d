"""ADC quantization distortion under the additive quantization noise model.

The distortion factor eta is the inverse signal-to-quantization-noise ratio
of a b-bit converter driven by a Gaussian input. Exact values are tabulated
for b <= 5; beyond that the closed form (pi*sqrt(3)/2) * 4**(-b) is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

# Exact eta for low resolutions (Gaussian input, optimal uniform quantizer).
ETA_TABLE = {1: 0.3634, 2: 0.1175, 3: 0.03454, 4: 0.009497, 5: 0.002499}

IDEAL = "ideal"


def eta_for_bits(bits: int | str) -> float:
    """Distortion factor for a ``bits``-resolution ADC; 0 for ``"ideal"``."""
    if bits == IDEAL:
        return 0.0
    if not isinstance(bits, (int,)) or isinstance(bits, bool):
        raise ValueError(f"bits must be a positive integer or {IDEAL!r}, got {bits!r}")
    if bits < 1:
        raise ValueError(f"bits must be >= 1, got {bits}")
    if bits <= 5:
        return ETA_TABLE[bits]
    return (math.pi * math.sqrt(3.0) / 2.0) * 2.0 ** (-2 * bits)


@dataclass(frozen=True)
class QuantizerModel:
    """ADC resolution and its distortion factor."""

    bits: int | str
    eta: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "eta", eta_for_bits(self.bits))

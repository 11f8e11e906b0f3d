"""Clustered mmWave MIMO channel sampling.

Realizations are drawn from a Poisson-cluster multipath model: each cluster
has a central angle of arrival/departure drawn uniformly, every path inside
a cluster adds a Gaussian angular offset and an i.i.d. complex-normal gain,
and the channel matrix is the gain-weighted sum of transmit/receive steering
vector outer products. In ``normalized`` mode the matrix is scaled so the
average squared entry magnitude is one (per-antenna SNR equals the link's
transmit SNR); ``physical`` mode attenuates by a distance-based pathloss
with log-normal shadowing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# Pathloss intercept/slope pairs and shadowing standard deviations in dB.
LOS_PATHLOSS_DB = (61.5, 20.0)
LOS_SHADOW_STD_DB = 5.8
NLOS_PATHLOSS_DB = (72.0, 29.2)
NLOS_SHADOW_STD_DB = 8.7


@dataclass(frozen=True)
class ArrayResponse:
    """Steering vector of a uniform linear array at a given angle."""

    angle: float
    n_elements: int
    vector: np.ndarray


@dataclass(frozen=True)
class ClusterDraw:
    """One scattering cluster: central angles plus per-path offsets and gains."""

    aoa_central: float
    aod_central: float
    path_gains: np.ndarray
    aoa_offsets: np.ndarray
    aod_offsets: np.ndarray


@dataclass(frozen=True)
class ChannelParams:
    """Sampling configuration for :func:`sample_channel`.

    ``snr_db`` is carried along for bookkeeping (it scales transmit power
    downstream, not the channel itself). ``distance_m`` and ``los`` only
    matter in ``physical`` mode.
    """

    n_tx: int
    n_rx: int
    mode: str = "normalized"
    snr_db: float = 0.0
    distance_m: float | None = None
    los: bool = True
    cluster_rate: float = 1.9
    paths_per_cluster: int = 20
    angle_spread_deg: float = 10.0

    def __post_init__(self):
        if self.n_tx < 1 or self.n_rx < 1:
            raise ValueError("n_tx and n_rx must be >= 1")
        if self.mode not in ("normalized", "physical"):
            raise ValueError(f"unknown channel mode {self.mode!r}")
        if self.cluster_rate <= 0:
            raise ValueError("cluster_rate must be > 0")
        if self.paths_per_cluster < 1:
            raise ValueError("paths_per_cluster must be >= 1")
        if self.mode == "physical" and (self.distance_m is None or self.distance_m <= 0):
            raise ValueError("physical mode requires a positive distance_m")


@dataclass(frozen=True)
class ChannelRealization:
    """A sampled channel matrix together with the draw that produced it."""

    h: np.ndarray
    clusters: list[ClusterDraw] = field(repr=False)
    pathloss_db: float | None = None


def array_response(angle: float, n: int) -> ArrayResponse:
    """Steering vector of an ``n``-element half-wavelength linear array.

    Entry ``k`` is ``exp(j*pi*sin(angle)*k)``; entry 0 is exactly 1 and every
    entry has unit modulus.
    """
    if n < 1:
        raise ValueError("array size must be >= 1")
    phases = np.pi * math.sin(angle) * np.arange(n)
    return ArrayResponse(angle=angle, n_elements=n, vector=np.exp(1j * phases))


def pathloss_db(distance_m: float, los: bool, shadowing_draw: float | None = None,
                rng: np.random.Generator | None = None) -> float:
    """Macroscopic pathloss in dB at ``distance_m`` meters.

    LOS: 61.5 + 20*log10(d) plus N(0, 5.8 dB) shadowing; NLOS: 72 +
    29.2*log10(d) plus N(0, 8.7 dB). Pass ``shadowing_draw`` to fix the
    shadowing term (deterministic mode); otherwise it is drawn from ``rng``.
    """
    if distance_m <= 0:
        raise ValueError("distance_m must be > 0")
    intercept, slope = LOS_PATHLOSS_DB if los else NLOS_PATHLOSS_DB
    if shadowing_draw is None:
        std = LOS_SHADOW_STD_DB if los else NLOS_SHADOW_STD_DB
        if rng is None:
            rng = np.random.default_rng()
        shadowing_draw = float(rng.normal(0.0, std))
    return intercept + slope * math.log10(distance_m) + shadowing_draw


def assemble_channel(clusters: list[ClusterDraw], n_tx: int, n_rx: int,
                     rho_lin: float = 1.0) -> np.ndarray:
    """Sum the per-path steering outer products into the channel matrix.

    Steering vectors are scaled to unit norm and the sum carries the factor
    sqrt(n_tx*n_rx / (rho_lin * n_clusters * n_paths)), so the expected
    squared Frobenius norm is n_tx*n_rx/rho_lin regardless of the cluster
    count.
    """
    n_c = len(clusters)
    n_p = clusters[0].path_gains.size
    aoa = np.concatenate([c.aoa_central + c.aoa_offsets for c in clusters])
    aod = np.concatenate([c.aod_central + c.aod_offsets for c in clusters])
    gains = np.concatenate([c.path_gains for c in clusters])
    a_rx = np.exp(1j * np.pi * np.outer(np.arange(n_rx), np.sin(aoa))) / math.sqrt(n_rx)
    a_tx = np.exp(1j * np.pi * np.outer(np.arange(n_tx), np.sin(aod))) / math.sqrt(n_tx)
    scale = math.sqrt(n_tx * n_rx / (rho_lin * n_c * n_p))
    return scale * ((a_rx * gains) @ a_tx.conj().T)


def sample_channel(params: ChannelParams, seed: int) -> ChannelRealization:
    """Draw one channel realization, deterministically for a given seed.

    Draws happen in a fixed order (shadowing, cluster count, central angles,
    angular offsets, path gains) so identical ``(params, seed)`` pairs always
    produce bit-identical realizations. The cluster count is Poisson with a
    floor of one so a realization always carries signal.
    """
    rng = np.random.default_rng(seed)
    pl_db = None
    rho_lin = 1.0
    if params.mode == "physical":
        pl_db = pathloss_db(params.distance_m, params.los, rng=rng)
        rho_lin = 10.0 ** (pl_db / 10.0)

    n_c = max(1, int(rng.poisson(params.cluster_rate)))
    n_p = params.paths_per_cluster
    aoa_central = rng.uniform(0.0, 2.0 * np.pi, n_c)
    aod_central = rng.uniform(0.0, 2.0 * np.pi, n_c)
    spread = math.radians(params.angle_spread_deg)
    aoa_offsets = rng.normal(0.0, spread, (n_c, n_p))
    aod_offsets = rng.normal(0.0, spread, (n_c, n_p))
    gains = (rng.standard_normal((n_c, n_p)) + 1j * rng.standard_normal((n_c, n_p))) / math.sqrt(2)

    clusters = [
        ClusterDraw(
            aoa_central=float(aoa_central[k]),
            aod_central=float(aod_central[k]),
            path_gains=gains[k],
            aoa_offsets=aoa_offsets[k],
            aod_offsets=aod_offsets[k],
        )
        for k in range(n_c)
    ]
    h = assemble_channel(clusters, params.n_tx, params.n_rx, rho_lin)
    return ChannelRealization(h=h, clusters=clusters, pathloss_db=pl_db)

"""Combiner designs and quantized achievable rates for the three receivers.

Digital combining (DC) applies the channel SVD with one ADC pair per
antenna; analog combining (AC) uses a single phase-shifter beam and one ADC
pair; hybrid combining (HC) inserts a constant-modulus analog stage with
``n_rf`` chains before the ADCs. All rates share one quantized-rate kernel:

    B * log2 det| I + (1-eta) * X * (n0*G + eta*diag(X))^-1 |

where X is the signal covariance at the ADC bank and G the Gram matrix of
the combiner feeding it (identity for per-antenna conversion, so the DC and
AC expressions reduce to the familiar closed forms). Power allocations come
from water-filling against thermal noise only, which keeps every design
independent of the ADC resolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

LOG2 = math.log(2.0)


class RankZeroChannelError(ValueError):
    """Raised when a channel or gain vector carries no usable dimension."""


@dataclass(frozen=True)
class CombinerDesign:
    """Transmit/receive processing for one architecture and channel draw."""

    arch: str
    w_t: np.ndarray
    w_rf: np.ndarray | None
    w_bb: np.ndarray | float
    n_rf: int
    singular_values: np.ndarray | None = None


@dataclass(frozen=True)
class RateResult:
    """Achievable rate plus the power allocation behind it."""

    rate_bps: float
    se_bpshz: float
    power_alloc: np.ndarray
    n_streams: int


def waterfill(gains: np.ndarray, total_power: float, noise_power: float) -> np.ndarray:
    """Exact water-filling allocation over parallel gains.

    Solves max sum_i log(1 + gains_i * p_i / noise_power) s.t. sum(p) =
    total_power, p >= 0, by the sort-based closed form: p_i = max(0, mu -
    noise_power/gains_i) with mu set so the powers sum to total_power.
    Zero-gain entries receive zero power.
    """
    gains = np.asarray(gains, dtype=float)
    if total_power <= 0:
        raise ValueError("total_power must be > 0")
    if noise_power <= 0:
        raise ValueError("noise_power must be > 0")
    if np.any(gains < 0):
        raise ValueError("gains must be nonnegative")
    active = gains > 0
    if not active.any():
        raise RankZeroChannelError("rank-zero channel")

    levels = noise_power / gains[active]
    order = np.argsort(levels, kind="stable")
    levels_sorted = levels[order]
    m = levels_sorted.size
    csum = np.cumsum(levels_sorted)
    k = m
    while k > 1 and (total_power + csum[k - 1]) / k <= levels_sorted[k - 1]:
        k -= 1
    mu = (total_power + csum[k - 1]) / k

    alloc_sorted = np.zeros(m)
    alloc_sorted[:k] = mu - levels_sorted[:k]
    alloc_active = np.empty(m)
    alloc_active[order] = alloc_sorted
    alloc = np.zeros_like(gains)
    alloc[active] = alloc_active
    return alloc


def _svd_or_raise(h: np.ndarray):
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2:
        raise ValueError("channel matrix must be 2-D")
    if not np.all(np.isfinite(h.real)) or not np.all(np.isfinite(h.imag)):
        raise ValueError("channel matrix must be finite")
    if not np.any(h):
        raise RankZeroChannelError("rank-zero channel")
    return np.linalg.svd(h, full_matrices=False)


def _phase_beam(u_max: np.ndarray) -> np.ndarray:
    """Constant-modulus projection of a receive vector, 1/sqrt(N) per entry.

    The global phase is fixed so the first weight is real positive (the
    underlying singular vector is only defined up to a phase anyway).
    """
    n = u_max.size
    phases = np.angle(u_max) - np.angle(u_max[0])
    return np.exp(1j * phases) / math.sqrt(n)


def _quantized_rate(x_cov: np.ndarray, gram: np.ndarray, n0: float, eta: float,
                    bandwidth: float) -> float:
    """Shared rate kernel: B*log2 det(I + (1-eta) X (n0 G + eta diag(X))^-1)."""
    x = np.atleast_2d(np.asarray(x_cov, dtype=complex))
    g = np.atleast_2d(np.asarray(gram, dtype=complex))
    noise = n0 * g + eta * np.diag(np.real(np.diag(x)))
    # X @ noise^{-1} via a Hermitian solve; noise is positive definite.
    ratio = np.linalg.solve(noise.conj().T, x.conj().T).conj().T
    sign, logdet = np.linalg.slogdet(np.eye(x.shape[0]) + (1.0 - eta) * ratio)
    return bandwidth * logdet / LOG2


def _validate_rate_args(p: float, n0: float, eta: float, bandwidth: float):
    if p <= 0:
        raise ValueError("transmit power must be > 0")
    if n0 <= 0:
        raise ValueError("noise power must be > 0")
    if not 0.0 <= eta < 1.0:
        raise ValueError("eta must lie in [0, 1)")
    if bandwidth <= 0:
        raise ValueError("bandwidth must be > 0")


def design_dc(h: np.ndarray) -> CombinerDesign:
    """Fully digital design: precode with V, combine with U^H from the SVD."""
    u, s, vh = _svd_or_raise(h)
    n_rx = h.shape[0]
    u_full, s_full, vh_full = np.linalg.svd(np.asarray(h, dtype=complex), full_matrices=True)
    return CombinerDesign(
        arch="DC",
        w_t=vh_full.conj().T,
        w_rf=None,
        w_bb=u_full.conj().T,
        n_rf=n_rx,
        singular_values=s,
    )


def rate_dc(h: np.ndarray, p: float, n0: float, eta: float,
            bandwidth: float = 1.0) -> RateResult:
    """Water-filled SVD transmission with per-antenna ADC distortion."""
    _validate_rate_args(p, n0, eta, bandwidth)
    u, s, vh = _svd_or_raise(h)
    return _rate_dc_from_svd(u, s, p, n0, eta, bandwidth)


def _rate_dc_from_svd(u, s, p, n0, eta, bandwidth) -> RateResult:
    alloc = waterfill(s**2, p, n0)
    d = s**2 * alloc
    x = (u * d) @ u.conj().T
    rate = _quantized_rate(x, np.eye(u.shape[0]), n0, eta, bandwidth)
    return RateResult(
        rate_bps=rate,
        se_bpshz=rate / bandwidth,
        power_alloc=alloc,
        n_streams=int(np.count_nonzero(alloc > 0)),
    )


def design_ac(h: np.ndarray) -> CombinerDesign:
    """Single-beam analog design: phase projection of the top left singular
    vector, transmit matched filter normalized to unit power."""
    u, s, vh = _svd_or_raise(h)
    w_r = _phase_beam(u[:, 0])
    w_t = np.asarray(h, dtype=complex).conj().T @ w_r
    norm = np.linalg.norm(w_t)
    if norm == 0:
        raise RankZeroChannelError("rank-zero channel")
    return CombinerDesign(
        arch="AC",
        w_t=w_t / norm,
        w_rf=w_r[:, None],
        w_bb=1.0,
        n_rf=1,
        singular_values=s,
    )


def rate_ac(h: np.ndarray, w_r: np.ndarray, w_t: np.ndarray, p: float, n0: float,
            eta: float, bandwidth: float = 1.0) -> RateResult:
    """Scalar quantized rate of the analog beam: the effective gain is
    |w_r^H H w_t|^2 and its own power feeds the quantization noise."""
    _validate_rate_args(p, n0, eta, bandwidth)
    w_r = np.asarray(w_r, dtype=complex).reshape(-1)
    w_t = np.asarray(w_t, dtype=complex).reshape(-1)
    g = abs(w_r.conj() @ np.asarray(h, dtype=complex) @ w_t) ** 2
    rate = bandwidth * math.log2(1.0 + (1.0 - eta) * g * p / (n0 + eta * g * p))
    return RateResult(
        rate_bps=rate,
        se_bpshz=rate / bandwidth,
        power_alloc=np.array([p]),
        n_streams=1,
    )


def design_hc_rf(h: np.ndarray, n_rf: int, tol: float = 1e-6,
                 max_iter: int = 200) -> np.ndarray:
    """Constant-modulus analog combiner via alternating projection.

    Starts from the leading left singular vectors and alternates between the
    entrywise constant-modulus projection and the polar-factor (Loewdin)
    orthonormalization. The first column stays pinned to the phase-projected
    dominant singular vector, so the hybrid front end never captures less of
    the channel than the single-beam analog design. Stops when the relative
    Frobenius change between constant-modulus iterates drops below ``tol``.
    """
    w, _, _ = _design_hc_rf_full(h, n_rf, tol, max_iter)
    return w


def _design_hc_rf_full(h, n_rf, tol, max_iter):
    u, s, vh = _svd_or_raise(h)
    n_rx = u.shape[0]
    if n_rf < 1 or n_rf > n_rx:
        raise ValueError(f"n_rf must lie in [1, {n_rx}], got {n_rf}")
    if n_rf > u.shape[1]:
        # more chains than channel rank: extend with the orthonormal
        # completion from the full decomposition
        u = np.linalg.svd(np.asarray(h, dtype=complex), full_matrices=True)[0]
    return _design_hc_from_svd(u, n_rf, tol, max_iter)


def _design_hc_from_svd(u, n_rf, tol, max_iter):
    n_rx = u.shape[0]
    beam = _phase_beam(u[:, 0])
    w_su = u[:, :n_rf].copy()
    w_prev = None
    deltas: list[float] = []
    iterations = max_iter
    for it in range(max_iter):
        w_cm = np.exp(1j * np.angle(w_su)) / math.sqrt(n_rx)
        w_cm[:, 0] = beam
        if w_prev is not None:
            delta = np.linalg.norm(w_cm - w_prev) / np.linalg.norm(w_prev)
            deltas.append(float(delta))
            if delta < tol:
                return w_cm, it, deltas
        w_prev = w_cm
        w_su = w_cm @ _inv_sqrt_psd(w_cm.conj().T @ w_cm)
    return w_prev, iterations, deltas


def _inv_sqrt_psd(gram: np.ndarray) -> np.ndarray:
    lam, v = np.linalg.eigh(gram)
    lam = np.maximum(lam, 1e-15 * lam[-1])
    return (v / np.sqrt(lam)) @ v.conj().T


def rate_hc(h: np.ndarray, w_rf: np.ndarray, p: float, n0: float, eta: float,
            bandwidth: float = 1.0) -> RateResult:
    """Quantized rate after the analog stage and per-chain ADC conversion.

    The transmit directions and water-filling come from the SVD of the
    noise-whitened equivalent channel, and the rate kernel carries the exact
    post-combining noise covariance n0 * (W_RF^H W_RF). For a semi-unitary
    analog stage this reduces to the white-noise expression; a constant-
    modulus stage is only approximately semi-unitary and skipping the Gram
    factor would let the analog stage manufacture capacity out of correlated
    noise.
    """
    _validate_rate_args(p, n0, eta, bandwidth)
    w_rf = np.asarray(w_rf, dtype=complex)
    if w_rf.ndim == 1:
        w_rf = w_rf[:, None]
    h = np.asarray(h, dtype=complex)
    gram = w_rf.conj().T @ w_rf
    h_eq = w_rf.conj().T @ h
    h_white = _inv_sqrt_psd(gram) @ h_eq
    uw, sw, vwh = np.linalg.svd(h_white, full_matrices=False)
    if not np.any(sw > 0):
        raise RankZeroChannelError("rank-zero channel")
    alloc = waterfill(sw**2, p, n0)
    hf = h_eq @ vwh.conj().T
    x = (hf * alloc) @ hf.conj().T
    rate = _quantized_rate(x, gram, n0, eta, bandwidth)
    return RateResult(
        rate_bps=rate,
        se_bpshz=rate / bandwidth,
        power_alloc=alloc,
        n_streams=int(np.count_nonzero(alloc > 0)),
    )

"""Deterministic complex-vector primitives shared by the whole simulator.

DFT convention used everywhere in this package: forward transform is
unnormalized, the inverse carries the 1/size factor (numpy's default).
"""

from __future__ import annotations

import numpy as np
from scipy import signal as _sig


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Independent, reproducible random stream.

    Identical (seed, stream ids) always yield the identical draw sequence,
    so Monte Carlo trials can own disjoint streams regardless of scheduling.
    """
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(s) for s in stream))
    return np.random.Generator(np.random.Philox(ss))


def dft(v, size: int) -> np.ndarray:
    """size-point DFT of v, zero-padding any shortfall."""
    v = np.asarray(v)
    if size <= 0:
        raise ValueError("dft size must be positive")
    if len(v) > size:
        raise ValueError(f"input longer than DFT size ({len(v)} > {size})")
    return np.fft.fft(v, n=size)


def inverse_dft(v, size: int) -> np.ndarray:
    """Inverse of dft (scaled by 1/size)."""
    v = np.asarray(v)
    if size <= 0:
        raise ValueError("inverse_dft size must be positive")
    if len(v) > size:
        raise ValueError(f"input longer than DFT size ({len(v)} > {size})")
    return np.fft.ifft(v, n=size)


def circular_convolve(a, b, period: int) -> np.ndarray:
    """Circular convolution with the given period.

    result[n] = sum_m a[m] * b[(n - m) mod period]
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if period <= 0:
        raise ValueError("period must be positive")
    if len(a) > period or len(b) > period:
        raise ValueError("inputs must not exceed the period")
    return np.fft.ifft(np.fft.fft(a, period) * np.fft.fft(b, period))


def welch_psd(v, segment_len: int, overlap: float = 0.5) -> tuple[np.ndarray, np.ndarray]:
    """Averaged Hann-windowed periodogram, peak-normalized to 0 dB.

    Returns (freq_norm, psd_db) ordered over normalized frequency
    [-1/2, 1/2), one bin per output sample.
    """
    v = np.asarray(v)
    if segment_len <= 0:
        raise ValueError("segment_len must be positive")
    if len(v) < segment_len:
        raise ValueError("signal shorter than segment_len")
    if not 0.0 <= overlap < 1.0:
        raise ValueError("overlap must be in [0, 1)")
    if not np.any(v):
        raise ValueError("all-zero input has no defined spectrum")
    noverlap = int(segment_len * overlap)
    freqs, pxx = _sig.welch(
        v,
        window="hann",
        nperseg=segment_len,
        noverlap=noverlap,
        detrend=False,
        return_onesided=False,
        scaling="density",
    )
    freqs = np.fft.fftshift(freqs)
    pxx = np.fft.fftshift(pxx)
    psd_db = 10.0 * np.log10(pxx / pxx.max())
    return freqs, psd_db

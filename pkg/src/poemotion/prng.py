"""splitmix64 generator.

Chosen because the whole sequence is defined by 64-bit integer arithmetic,
so any two implementations that follow the reference constants produce
bit-identical streams.  All stroke randomness routes through this module.
"""

from __future__ import annotations

import math

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Reference splitmix64 stream seeded with a 64-bit integer."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def uniform(self, lo: float, hi: float) -> float:
        """Uniform double in [lo, hi).  Consumes one draw."""
        return lo + (hi - lo) * self.next_float()

    def gauss(self, sigma: float) -> float:
        """Zero-mean Gaussian via Box-Muller.  Consumes exactly two draws."""
        u1 = self.next_float()
        u2 = self.next_float()
        if u1 <= 0.0:
            u1 = 2.0**-53
        return sigma * math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)


def splitmix64_at(seed: int, index: int) -> int:
    """index-th output (0-based) of the stream seeded with ``seed``."""
    if index < 0:
        raise ValueError("index must be non-negative")
    state = (seed + index * _GAMMA) & _MASK64
    state = (state + _GAMMA) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)

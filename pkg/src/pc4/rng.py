"""Counter-based pseudo-random stream for reproducible generation.

The scheme is the SplitMix64 output function applied to a counter:

    out(seed, i) = mix64(seed + (i + 1) * 0x9E3779B97F4A7C15)

where mix64 is the xor-shift-multiply finalizer with constants
0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.  Every value depends only on
(seed, i), so streams are splittable, order-independent, and trivially
reproducible in any language.  Frozen test vectors live in the test
suite and must never change.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a 64-bit word."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def stream_value(seed: int, index: int) -> int:
    """The index-th 64-bit value of the stream for this seed (index >= 0)."""
    return mix64((seed + (index + 1) * _GAMMA) & _MASK)


def stream_mod(seed: int, index: int, modulus: int) -> int:
    """stream_value reduced to 0..modulus-1 (modulus >= 1)."""
    return stream_value(seed, index) % modulus

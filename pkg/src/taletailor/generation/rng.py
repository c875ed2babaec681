"""Counter-based 64-bit PRNG with derivable independent streams.

All state and arithmetic is 64-bit integer, so sequences are identical
across platforms and Python builds.  Independent streams for, say, each
candidate of a completion request are derived by folding stream indices
into the seed with the same finalizer.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _finalize(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def mix_seed(seed: int, *stream: int) -> int:
    """Derive a child seed from ``seed`` and a tuple of stream indices."""
    state = seed & _MASK
    for index in stream:
        state = _finalize((state + (index + 1) * _GAMMA) & _MASK)
    return state


class SplitMix64:
    """SplitMix64: counter increments by a fixed odd gamma, output is finalized."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    @classmethod
    def for_stream(cls, seed: int, *stream: int) -> "SplitMix64":
        return cls(mix_seed(seed, *stream))

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _finalize(self._state)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random mantissa bits."""
        return (self.next_u64() >> 11) * (2.0**-53)

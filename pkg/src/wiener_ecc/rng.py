"""Portable SplitMix64 generator.

State advance and output mixing follow the reference SplitMix64:

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2**64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2**64
    output z ^ (z >> 31)

Bounded draws reject outputs below ``2**64 mod bound`` and reduce the rest
modulo ``bound``, so they are exactly uniform.  Any implementation that
follows these three rules reproduces our graph sequences bit for bit.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed {seed} is not a 64-bit unsigned integer")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if not 0 < bound <= 1 << 64:
            raise ValueError(f"bound {bound} out of range")
        threshold = (1 << 64) % bound
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % bound

    def bernoulli(self, numerator: int, denominator: int) -> bool:
        """True with probability exactly ``numerator / denominator``."""
        return self.below(denominator) < numerator

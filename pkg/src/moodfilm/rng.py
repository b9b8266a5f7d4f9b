"""Deterministic 64-bit random streams (splitmix64).

Compiled scripts must be byte-identical across runs and machines, so nothing
here depends on interpreter hash state or platform word size.
"""

from __future__ import annotations

M64 = (1 << 64) - 1

_GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """splitmix64 finalizer: avalanche a 64-bit integer."""
    z &= M64
    z = ((z ^ (z >> 30)) * _MIX_A) & M64
    z = ((z ^ (z >> 27)) * _MIX_B) & M64
    return (z ^ (z >> 31)) & M64


def derive(seed: int, *labels: str | int) -> int:
    """Derive an independent substream seed from a master seed and labels.

    Labels are hashed byte-by-byte so e.g. ("route", 3) and ("route", 13)
    never collide by concatenation.
    """
    h = mix64(seed & M64)
    for label in labels:
        data = label.encode("utf-8") if isinstance(label, str) else int(label).to_bytes(8, "little")
        for b in data:
            h = mix64(h ^ b)
    return h


class Rng:
    """Sequential splitmix64 generator."""

    def __init__(self, seed: int):
        self._state = seed & M64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & M64
        return mix64(self._state)

    def random(self) -> float:
        # top 53 bits -> uniform double in [0, 1)
        return (self.next_u64() >> 11) * 2.0**-53

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def randint(self, lo: int, hi: int) -> int:
        # modulo bias is negligible for the small ranges used here
        return lo + self.next_u64() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]

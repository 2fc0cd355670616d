"""Seeded pseudo-randomness with a pinned, portable algorithm.

Every random choice in this package (splits, resampling, SGD shuffles,
forest bootstraps) flows through :class:`SplitMix64` so that a given seed
produces the identical stream on every platform and Python version. The
generator is Steele, Lea & Flood's splitmix64 finalizer; shuffling is
Fisher-Yates driven by an unbiased bounded-draw (rejection against the
2**64 % n threshold).
"""

from __future__ import annotations

_MASK64 = 0xFFFFFFFFFFFFFFFF


class SplitMix64:
    """64-bit splitmix64 generator.

    State advances by the golden-gamma increment; each output is the
    mixed state. Deterministic for a given seed, no global state.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n), unbiased."""
        if n <= 0:
            raise ValueError(f"randbelow needs n >= 1, got {n}")
        if n & (n - 1) == 0:  # power of two: mask is exact
            return self.next_u64() & (n - 1)
        threshold = (1 << 64) % n
        while True:
            x = self.next_u64()
            if x >= threshold:
                return x % n

    def random(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_without_replacement(self, population: list, k: int) -> list:
        """k distinct items, drawn by partial Fisher-Yates on a copy."""
        n = len(population)
        if k > n:
            raise ValueError(f"cannot draw {k} items without replacement from {n}")
        pool = list(population)
        for i in range(k):
            j = i + self.randbelow(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def sample_with_replacement(self, population: list, k: int) -> list:
        return [population[self.randbelow(len(population))] for _ in range(k)]

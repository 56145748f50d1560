"""Seeded xorshift64* generator for reproducible audit corpora.

Reports and randomized test corpora must be byte-identical across runs
and reproducible from other languages, so randomness comes from this
fully specified generator instead of ``random`` / numpy.

State update (64-bit, wrapping):

    x ^= x >> 12
    x ^= (x << 25) & 0xFFFFFFFFFFFFFFFF
    x ^= x >> 27
    output = (x * 0x2545F4914F6CDD1D) & 0xFFFFFFFFFFFFFFFF

Seeding: ``state = (seed XOR 0x9E3779B97F4A7C15) mod 2^64``, replaced by
the constant itself if that is zero.  ``uniform`` takes the top 53 bits
of the output over 2^53.  Substream k of seed s is seeded with
``splitmix = (s + (k+1) * 0x9E3779B97F4A7C15) mod 2^64``.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MULT = 0x2545F4914F6CDD1D


class XorShift64Star:
    """Deterministic 64-bit PRNG with a documented recurrence."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = (int(seed) ^ _GOLDEN) & _MASK
        if self.state == 0:
            self.state = _GOLDEN

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK
        x ^= x >> 27
        self.state = x
        return (x * _MULT) & _MASK

    def uniform(self) -> float:
        """Double in [0, 1) built from the top 53 bits."""
        return (self.next_u64() >> 11) / 9007199254740992.0

    def uniform_signed(self) -> float:
        """Double in [-1, 1)."""
        return 2.0 * self.uniform() - 1.0

    def randrange(self, k: int) -> int:
        """Integer in [0, k); reduction by modulus, bias is irrelevant here."""
        if k <= 0:
            raise ValueError("randrange needs a positive bound")
        return self.next_u64() % k


def substream(seed: int, index: int) -> XorShift64Star:
    """Independent child stream for item `index` of a seeded corpus."""
    return XorShift64Star((int(seed) + (index + 1) * _GOLDEN) & _MASK)


def random_values(rng: XorShift64Star, n: int) -> list[float]:
    """n independent uniforms in [-1, 1)."""
    return [rng.uniform_signed() for _ in range(n)]

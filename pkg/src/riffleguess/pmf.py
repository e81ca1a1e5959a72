"""Exact probability mass functions with a structural common denominator.

Every exact distribution in the package has a denominator dictated by the
counting model (2**n for full-deck outcomes, a binomial coefficient for
half-deck paths).  The masses are therefore kept as integer numerators over
that structural denominator; reduced fractions are derived on demand so the
unreduced form is never lost.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ExactPmf:
    """Distribution on {0, 1, ..., len(numerators)-1} with exact masses."""

    numerators: tuple[int, ...]
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if any(v < 0 for v in self.numerators):
            raise ValueError("negative mass")
        if sum(self.numerators) != self.denominator:
            raise ValueError(
                f"masses sum to {sum(self.numerators)}/{self.denominator}, not 1"
            )

    @property
    def max_value(self) -> int:
        return len(self.numerators) - 1

    def mass(self, k: int) -> Fraction:
        if 0 <= k < len(self.numerators):
            return Fraction(self.numerators[k], self.denominator)
        return Fraction(0)

    @property
    def fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.denominator) for v in self.numerators)

    def floats(self) -> tuple[float, ...]:
        return tuple(v / self.denominator for v in self.numerators)

    def raw_moment(self, s: int) -> Fraction:
        """Exact power sum  sum_k k**s * P{k}."""
        return Fraction(
            sum(k**s * v for k, v in enumerate(self.numerators)), self.denominator
        )

    @property
    def mean(self) -> Fraction:
        return self.raw_moment(1)

    @property
    def variance(self) -> Fraction:
        return self.raw_moment(2) - self.mean**2

    def tv_distance(self, other: "ExactPmf") -> Fraction:
        """Total-variation distance, exact."""
        top = max(self.max_value, other.max_value)
        return sum(
            (abs(self.mass(k) - other.mass(k)) for k in range(top + 1)),
            start=Fraction(0),
        ) / 2

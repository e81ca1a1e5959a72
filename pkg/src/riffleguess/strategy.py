"""Card placement probabilities and the optimal no-feedback guessing sequence.

The chance that card i sits at position j after one shuffle has a closed
form; the best fixed guess for each position follows the pattern
1, 2, 2, 3, 3, ... over the top half and its mirror image over the bottom
half.  Optimality of each guess is re-verified per deck size against the
exact column maxima rather than assumed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence


def transition_prob(n: int, i: int, j: int) -> Fraction:
    """Exact probability that card labeled i ends at position j."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("card label and position must lie in 1..n")
    return Fraction(_transition_numerator(n, i, j), 2**n)


def _transition_numerator(n: int, i: int, j: int) -> int:
    # numerator over the common denominator 2**n
    if i == j:
        return 2 ** (i - 1) + 2 ** (n - i)
    if j < i:
        return 2 ** (j - 1) * comb(n - j, i - j)
    # mirror symmetry: relabeling bottom-up swaps (i, j) with (n-i+1, n-j+1)
    return _transition_numerator(n, n - i + 1, n - j + 1)


@dataclass(frozen=True)
class TransitionMatrix:
    """All n**2 placement probabilities for a deck of size n."""

    n: int
    entries: tuple[tuple[Fraction, ...], ...]  # entries[i-1][j-1]

    @classmethod
    def build(cls, n: int) -> "TransitionMatrix":
        den = 2**n
        rows = tuple(
            tuple(Fraction(_transition_numerator(n, i, j), den) for j in range(1, n + 1))
            for i in range(1, n + 1)
        )
        return cls(n, rows)

    def prob(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]

    def row_sum(self, i: int) -> Fraction:
        return sum(self.entries[i - 1], start=Fraction(0))

    def column_sum(self, j: int) -> Fraction:
        return sum((row[j - 1] for row in self.entries), start=Fraction(0))


def optimal_guesses(n: int) -> tuple[int, ...]:
    """The canonical optimal guess for each position.

    Top half (h = ceil(n/2) positions): 1, 2, 2, 3, 3, 4, 4, ...
    Bottom half: the mirror image ..., n-1, n-1, n.
    """
    if n < 1:
        raise ValueError("deck size must be at least 1")
    h = (n + 1) // 2
    out = [0] * n
    for j in range(1, h + 1):
        out[j - 1] = j // 2 + 1
    for j in range(1, n - h + 1):
        out[n - j] = n - j // 2
    return tuple(out)


def optimal_sets(n: int) -> tuple[frozenset[int], ...]:
    """The set of equally good guesses for each position.

    Top half: {1}, {2}, {2}, {2,3}, {3}, {3,4}, {4}, ...; the bottom half
    mirrors the top.  The canonical guess is the smallest member on the top
    half and the largest on the bottom half.
    """
    if n < 1:
        raise ValueError("deck size must be at least 1")
    h = (n + 1) // 2

    def top_set(j: int) -> frozenset[int]:
        if j == 1:
            return frozenset({1})
        if j % 2:
            return frozenset({(j + 1) // 2})
        if j == 2:
            return frozenset({2})
        return frozenset({j // 2, j // 2 + 1})

    out: list[frozenset[int]] = [frozenset()] * n
    for j in range(1, h + 1):
        out[j - 1] = top_set(j)
    for j in range(1, n - h + 1):
        out[n - j] = frozenset(n + 1 - v for v in top_set(j))
    return tuple(out)


@dataclass(frozen=True)
class GuessSequence:
    n: int
    guesses: tuple[int, ...]
    optimal_sets: tuple[frozenset[int], ...]
    argmax_verified: bool


def _central_binomials(max_r: int) -> list[int]:
    """C(r, r // 2) for r = 0 .. max_r, built incrementally."""
    out = [1]
    for r in range(1, max_r + 1):
        # C(r, floor(r/2)) = C(r-1, floor((r-1)/2)) * r / ceil(r/2)
        out.append(out[-1] * r // ((r + 1) // 2))
    return out


def _column_max_numerator(n: int, j: int, central: Sequence[int]) -> int:
    """Largest placement numerator in column j, over denominator 2**n.

    Within a column the off-diagonal numerators are binomial rows scaled by
    a fixed power of two, so the maximum is attained either on the diagonal
    or at a central binomial coefficient; only those candidates compete.
    """
    best = 2 ** (j - 1) + 2 ** (n - j)  # diagonal entry
    if j < n:  # cards below the diagonal: 2**(j-1) * C(n-j, i-j)
        best = max(best, 2 ** (j - 1) * central[n - j])
    if j > 1:  # cards above the diagonal: 2**(n-j) * C(j-1, j-i)
        best = max(best, 2 ** (n - j) * central[j - 1])
    return best


def verify_argmax(n: int, guesses: Sequence[int]) -> bool:
    """Check that each guess attains the exact column maximum."""
    central = _central_binomials(n)
    return all(
        _transition_numerator(n, guesses[j - 1], j) == _column_max_numerator(n, j, central)
        for j in range(1, n + 1)
    )


def optimal_strategy(n: int, verify: bool = True) -> GuessSequence:
    """Canonical optimal strategy plus the per-position optimal sets.

    With verify=True (the default) every guess is checked against the exact
    placement maxima; a failure is surfaced as a warning and recorded on the
    returned object instead of silently trusted.
    """
    guesses = optimal_guesses(n)
    sets = optimal_sets(n)
    verified = False
    if verify:
        verified = verify_argmax(n, guesses)
        if not verified:
            warnings.warn(
                f"canonical strategy misses the exact argmax for some position at n={n}",
                stacklevel=2,
            )
    return GuessSequence(n, guesses, sets, verified)


def score(strategy: GuessSequence | Sequence[int], deck: Sequence[int]) -> int:
    """Number of positions where the guess matches the shuffled deck."""
    guesses = strategy.guesses if isinstance(strategy, GuessSequence) else tuple(strategy)
    if len(guesses) != len(deck):
        raise ValueError("guess sequence and deck have different lengths")
    return sum(1 for g, d in zip(guesses, deck) if g == d)

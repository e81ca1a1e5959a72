"""The Gilbert-Shannon-Reeds one-time riffle shuffle.

The deck holds cards 1 (top) to n (bottom).  A shuffle cuts the deck at a
Binomial(n, 1/2) position and interleaves the two packets, picking the next
card from a packet with probability proportional to its remaining size.

Every outcome of that process is equivalent to drawing n independent fair
bits, one per final deck position: positions whose bit is 1 receive the
packet-one cards (labels 1..k, in order), the rest receive packet two
(labels k+1..n, in order), where k is the number of 1 bits.  Each of the
2**n bit strings has probability exactly 2**-n and corresponds to exactly
one (cut, interleaving) pair, which makes the enumerator a plain counter
and gives the sampler a fixed budget of one bit per position.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .errors import CapacityError
from .pmf import ExactPmf

Permutation = tuple[int, ...]

#: largest deck size accepted by the exhaustive enumerator (2**n outcomes)
N_MAX_ENUM = 20


def cut_pmf(n: int) -> ExactPmf:
    """Exact law of the cut position: P{Cut = k} = C(n, k) / 2**n."""
    if n < 1:
        raise ValueError("deck size must be at least 1")
    return ExactPmf(tuple(comb(n, k) for k in range(n + 1)), 2**n)


def permutation_from_bits(bits: Sequence[int]) -> Permutation:
    """Deck arrangement encoded by one interleaving bit per position.

    bits[j] == 1 means position j+1 (counting from the top) is filled from
    the first packet.  The cut size is the number of 1 bits.
    """
    k = sum(1 for b in bits if b)
    out = []
    seen_first = 0
    for j, b in enumerate(bits):
        if b:
            seen_first += 1
            out.append(seen_first)
        else:
            out.append(k + (j + 1) - seen_first)
    return tuple(out)


def validate_permutation(labels: Sequence[int]) -> Permutation:
    """Check that labels is a permutation of 1..n and return it as a tuple."""
    n = len(labels)
    if n < 1 or sorted(labels) != list(range(1, n + 1)):
        raise ValueError("not a permutation of 1..n")
    return tuple(labels)


def sample_shuffle(n: int, rng: np.random.Generator) -> Permutation:
    """Draw one shuffled deck; consumes exactly n fair bits from rng."""
    if n < 1:
        raise ValueError("deck size must be at least 1")
    bits = rng.integers(0, 2, size=n, dtype=np.uint8)
    return permutation_from_bits(bits.tolist())


@dataclass(frozen=True)
class ShuffleOutcome:
    """One (cut, interleaving) pair together with its probability."""

    cut: int
    permutation: Permutation
    weight: Fraction


def enumerate_shuffles(n: int, max_n: int = N_MAX_ENUM) -> Iterator[ShuffleOutcome]:
    """Yield all 2**n equally likely shuffle outcomes.

    Grouping the outcomes by permutation reproduces the known multiplicity
    structure: the identity appears n+1 times, every other reachable
    permutation once, and there are 2**n - n - 1 of the latter.
    """
    if n < 1:
        raise ValueError("deck size must be at least 1")
    if n > max_n:
        raise CapacityError(f"enumeration of 2**{n} outcomes exceeds limit n <= {max_n}")
    weight = Fraction(1, 2**n)
    for word in range(2**n):
        bits = [(word >> j) & 1 for j in range(n)]
        yield ShuffleOutcome(sum(bits), permutation_from_bits(bits), weight)

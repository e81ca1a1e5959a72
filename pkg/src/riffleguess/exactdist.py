"""Exact distribution of the number of correct guesses.

Everything here rides one recurrence.  Write g[m1, m2] for the polynomial
whose k-th coefficient counts the interleavings of an m1/m2 split scoring
exactly k correct guesses within a half deck; it satisfies

    g[m1, m2] = q**d * g[m1-1, m2] + g[m1, m2-1],
    d = 1 if m1 == floor((m1+m2)/2) + 1 else 0,

with g[0, 0] = 1 and zero for negative indices.  The full-deck polynomial
for n >= 4 combines two half-deck anti-diagonal sums:

    f_n = 4q^4 - 2(q^2 + q^3) + (sum_a g[a, h-a]) * (sum_b g[b, n-h-b]),

h = ceil(n/2), and E(q^X_n) = f_n(q) / 2**n.  The additive correction makes
the n = 3 coefficient of q^3 negative, so deck sizes below 4 are served by
exhaustive enumeration instead (the two routes are required to agree on
4..16 by the test suite).

Performance notes.  The anti-diagonal DP is run in a Kronecker-packed form:
a polynomial with coefficients < 2**width is stored as the single integer
p(2**width), so polynomial addition and the q-shift become one big-integer
add and one shift.  That turns the O(n^2) polynomial operations into
C-level integer work and makes n = 2000 full polynomials practical.  For
moments only the first few w-derivatives of g(1+w) are needed, so a second
DP carries length-(s_max+1) jets instead of full polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapacityError
from .pmf import ExactPmf
from .qpoly import QPolynomial
from .shuffle import enumerate_shuffles
from .strategy import optimal_guesses, score

#: largest m1 + m2 (and largest deck size n) accepted by the exact DP routes
GRID_LIMIT = 4200


def _weighted_index(total: int) -> int:
    """The m1 whose left step carries weight q on anti-diagonal m1+m2 = total."""
    return total // 2 + 1


def _packed_diagonals(top: int, width: int) -> Iterator[tuple[int, list[int]]]:
    """Yield (M, packed row) for anti-diagonals M = 0 .. top.

    Entry a of row M is g[a, M-a] evaluated at 2**width, i.e. the packed
    coefficient vector.  All coefficients stay below C(M, a) <= 2**M, so any
    width > top suffices; callers add headroom for later sums and products.
    """
    row = [1]
    yield 0, row
    for total in range(1, top + 1):
        wstar = _weighted_index(total)
        prev = row
        row = []
        for a in range(total + 1):
            left = prev[a - 1] if 0 < a <= total else 0
            down = prev[a] if a < total else 0
            if a == wstar and left:
                left <<= width  # multiply the left parent by q
            row.append(left + down)
        yield total, row


def _unpack(packed: int, width: int) -> list[int]:
    mask = (1 << width) - 1
    out = []
    while packed:
        out.append(packed & mask)
        packed >>= width
    return out or [0]


def _check_grid(total: int) -> None:
    if total > GRID_LIMIT:
        raise CapacityError(f"packet sizes sum to {total}, limit is {GRID_LIMIT}")


def g_poly(m1: int, m2: int) -> QPolynomial:
    """Half-deck guessing polynomial g[m1, m2]; g(1) = C(m1+m2, m1)."""
    if m1 < 0 or m2 < 0:
        raise ValueError("packet sizes must be nonnegative")
    _check_grid(m1 + m2)
    width = m1 + m2 + 8
    for total, row in _packed_diagonals(m1 + m2, width):
        if total == m1 + m2:
            return QPolynomial(_unpack(row[m1], width))
    raise AssertionError("unreachable")


def g_diagonal(total: int) -> tuple[QPolynomial, ...]:
    """All g[a, total-a] for a = 0 .. total, from one DP pass."""
    if total < 0:
        raise ValueError("diagonal index must be nonnegative")
    _check_grid(total)
    width = total + 8
    for m, row in _packed_diagonals(total, width):
        if m == total:
            return tuple(QPolynomial(_unpack(v, width)) for v in row)
    raise AssertionError("unreachable")


def f_poly(n: int) -> QPolynomial:
    """Full-deck guessing polynomial f_n with f_n(1) = 2**n, for n >= 4."""
    if n < 4:
        raise ValueError(
            "the half-deck composition is valid for n >= 4; "
            "use the enumeration route for smaller decks"
        )
    _check_grid(n)
    h = (n + 1) // 2
    width = n + 8
    sums: dict[int, int] = {}
    for total, row in _packed_diagonals(h, width):
        if total in (h, n - h):
            sums[total] = sum(row)
    product = _unpack(sums[h] * sums[n - h], width)
    coeffs = [0] * max(5, len(product))
    for k, v in enumerate(product):
        coeffs[k] = v
    coeffs[2] -= 2
    coeffs[3] -= 2
    coeffs[4] += 4
    if any(c < 0 for c in coeffs):
        raise AssertionError(f"negative coefficient in f_{n}; composition misused")
    return QPolynomial(coeffs)


def pmf_x_enumeration(n: int) -> ExactPmf:
    """Law of the correct-guess count by exhaustive outcome enumeration."""
    guesses = optimal_guesses(n)
    counts = [0] * (n + 1)
    for outcome in enumerate_shuffles(n):
        counts[score(guesses, outcome.permutation)] += 1
    return ExactPmf(tuple(counts), 2**n)


def pmf_x(n: int) -> ExactPmf:
    """Exact law of the correct-guess count for a deck of n cards.

    Decks of size 1..3 are enumerated outright; larger decks use the
    half-deck composition, whose masses carry the structural denominator
    2**n.
    """
    if n < 1:
        raise ValueError("deck size must be at least 1")
    if n <= 3:
        return pmf_x_enumeration(n)
    poly = f_poly(n)
    numerators = tuple(poly.coefficient(k) for k in range(n + 1))
    return ExactPmf(numerators, 2**n)


def pmf_y(m1: int, m2: int) -> ExactPmf:
    """Law of the half-deck correct-guess count given a fixed m1/m2 split."""
    if m1 + m2 < 1:
        raise ValueError("at least one card required")
    poly = g_poly(m1, m2)
    total = comb(m1 + m2, m1)
    numerators = tuple(poly.coefficient(k) for k in range(poly.degree + 1))
    return ExactPmf(numerators, total)


def _float_slots(m1: int, m2: int) -> int:
    # the count never exceeds min(m1, m2 + 2): two free hits on the way down,
    # then each further hit costs one up step
    return min(m1, m2 + 2) + 1


def pmf_y_float(m1: int, m2: int) -> np.ndarray:
    """Floating-point companion of pmf_y for packet sums up to ~4000.

    Runs the same recurrence on probability vectors normalized on the fly:
    dividing g[m1, m2] by C(m1+m2, m1) turns the two parent contributions
    into a mixture with weights m1/(m1+m2) and m2/(m1+m2), so every stored
    vector is itself a pmf and no overflow can occur.
    """
    if m1 < 0 or m2 < 0:
        raise ValueError("packet sizes must be nonnegative")
    _check_grid(m1 + m2)
    total = m1 + m2
    slots = _float_slots(m1, m2)
    grid = np.zeros((m1 + 1, slots))
    grid[0, 0] = 1.0
    a = np.arange(m1 + 1, dtype=np.float64)
    for M in range(1, total + 1):
        w1 = (a / M)[:, None]
        w2 = np.clip((M - a) / M, 0.0, None)[:, None]
        down = np.zeros_like(grid)
        down[1:] = grid[:-1]
        wstar = _weighted_index(M)
        if 1 <= wstar <= m1:
            shifted = np.empty(slots)
            shifted[0] = 0.0
            shifted[1:] = down[wstar, :-1]
            down[wstar] = shifted
        grid = w1 * down + w2 * grid
    return grid[m1]


def _jet_times_1pw(jet: Sequence[int]) -> list[int]:
    # multiply a truncated expansion in w by (1 + w)
    out = list(jet)
    for s in range(len(out) - 1, 0, -1):
        out[s] += out[s - 1]
    return out


def _diagonal_jet_sums(checkpoints: Iterable[int], s_max: int) -> dict[int, list[int]]:
    """w-jets of sum_a g[a, M-a](1+w) for each requested anti-diagonal M."""
    want = set(checkpoints)
    top = max(want)
    _check_grid(top)
    out: dict[int, list[int]] = {}
    row = [[1] + [0] * s_max]
    if 0 in want:
        out[0] = [1] + [0] * s_max
    for total in range(1, top + 1):
        wstar = _weighted_index(total)
        prev = row
        row = []
        for a in range(total + 1):
            left = prev[a - 1] if 0 < a <= total else None
            down = prev[a] if a < total else None
            if left is not None and a == wstar:
                left = _jet_times_1pw(left)
            if left is None:
                row.append(list(down))
            elif down is None:
                row.append(list(left))
            else:
                row.append([x + y for x, y in zip(left, down)])
        if total in want:
            out[total] = [sum(jet[s] for jet in row) for s in range(s_max + 1)]
    return out


def _correction_jet(s_max: int) -> list[int]:
    # 4q^4 - 2q^3 - 2q^2 expanded around q = 1 + w
    jet = [0] * (s_max + 1)
    for coeff, power in ((4, 4), (-2, 3), (-2, 2)):
        for s in range(min(power, s_max) + 1):
            jet[s] += coeff * comb(power, s)
    return jet


def factorial_moments(n: int, s_max: int) -> tuple[Fraction, ...]:
    """Exact falling-factorial moments E(X (X-1) ... (X-s+1)), s = 0..s_max.

    For n >= 4 the jets of f_n(1+w) are assembled directly from two
    anti-diagonal jet sums, which is how deck sizes in the thousands stay
    cheap; smaller decks fall back to the enumerated pmf.
    """
    if n < 1:
        raise ValueError("deck size must be at least 1")
    if s_max < 0:
        raise ValueError("moment order must be nonnegative")
    if n <= 3:
        pmf = pmf_x(n)
        raw = [pmf.raw_moment(s) for s in range(s_max + 1)]
        return tuple(_raw_to_factorial(raw, s) for s in range(s_max + 1))
    h = (n + 1) // 2
    sums = _diagonal_jet_sums({h, n - h}, s_max)
    top, bottom = sums[h], sums[n - h]
    correction = _correction_jet(s_max)
    out = []
    for s in range(s_max + 1):
        coeff = correction[s] + sum(top[k] * bottom[s - k] for k in range(s + 1))
        out.append(Fraction(factorial(s) * coeff, 2**n))
    return tuple(out)


@lru_cache(maxsize=None)
def stirling2(s: int, k: int) -> int:
    """Stirling numbers of the second kind (partitions of s into k blocks)."""
    if k == 0 or k > s:
        return 1 if s == k else 0
    return k * stirling2(s - 1, k) + stirling2(s - 1, k - 1)


def _raw_to_factorial(raw: Sequence[Fraction], s: int) -> Fraction:
    # expand x(x-1)...(x-s+1) and take the matching combination of raw moments
    poly = [1]
    for r in range(s):
        widened = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            widened[i + 1] += c
            widened[i] -= r * c
        poly = widened
    return sum((poly[k] * raw[k] for k in range(len(poly))), start=Fraction(0))


def raw_moments(n: int, s_max: int) -> tuple[Fraction, ...]:
    """Exact raw moments E(X**s) via the Stirling-number conversion."""
    fm = factorial_moments(n, s_max)
    return tuple(
        sum((stirling2(s, k) * fm[k] for k in range(s + 1)), start=Fraction(0))
        for s in range(s_max + 1)
    )

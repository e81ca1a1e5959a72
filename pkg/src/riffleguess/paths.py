"""Brute-force lattice-path oracles for the half-deck guess count.

A half-deck game with packets m1/m2 maps to a walk of m1 down steps and m2
up steps starting at altitude 0; the number of correct guesses equals the
number of down steps that land on altitude -1 or -2.  These enumerators
realize that statistic (and the companion count of returns to altitude 0)
by walking every one of the C(m1+m2, m1) paths, providing an oracle that is
independent of the dynamic-programming route.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import CapacityError
from .pmf import ExactPmf

#: largest m1 + m2 the exhaustive path enumerators accept
ENUM_LIMIT = 22


def _check_size(m1: int, m2: int) -> None:
    if m1 < 0 or m2 < 0:
        raise ValueError("step counts must be nonnegative")
    if m1 + m2 > ENUM_LIMIT:
        raise CapacityError(
            f"enumerating C({m1 + m2}, {m1}) paths exceeds limit m1 + m2 <= {ENUM_LIMIT}"
        )


def y_oracle_pmf(m1: int, m2: int) -> ExactPmf:
    """Law of the down-step visits to altitudes -1 and -2.

    Walks all paths with m1 down and m2 up steps (endpoint m2 - m1) and
    counts, per path, the down steps whose landing altitude is -1 or -2.
    """
    _check_size(m1, m2)
    length = m1 + m2
    counts = [0] * (length + 1)
    for downs in combinations(range(length), m1):
        y = 0
        hits = 0
        ptr = 0
        for step in range(length):
            if ptr < m1 and downs[ptr] == step:
                ptr += 1
                y -= 1
                if y == -1 or y == -2:
                    hits += 1
            else:
                y += 1
        counts[hits] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return ExactPmf(tuple(counts), comb(length, m1))


def w_oracle_pmf(m1: int, m2: int) -> ExactPmf:
    """Law of the number of returns to altitude 0 (any step direction)."""
    _check_size(m1, m2)
    length = m1 + m2
    counts = [0] * (length + 1)
    for downs in combinations(range(length), m1):
        y = 0
        returns = 0
        ptr = 0
        for step in range(length):
            if ptr < m1 and downs[ptr] == step:
                ptr += 1
                y -= 1
            else:
                y += 1
            if y == 0:
                returns += 1
        counts[returns] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return ExactPmf(tuple(counts), comb(length, m1))


@dataclass(frozen=True)
class ShiftRelationReport:
    """Diagnostic comparison of the two path statistics.

    The visit count for an m1/m2 walk tracks the zero-return count of the
    (m1-1)/m2 walk shifted up by 2 only asymptotically, so the report
    carries the observed total-variation distance without asserting it to
    be zero.
    """

    m1: int
    m2: int
    tv_distance: float
    y_pmf: ExactPmf
    w_pmf_shifted: ExactPmf


def shift_relation_check(m1: int, m2: int) -> ShiftRelationReport:
    """Compare the visit statistic against the shifted zero-return statistic."""
    if m1 < m2 + 2:
        raise ValueError("requires m1 >= m2 + 2 so the endpoint sits below -1")
    _check_size(m1, m2)
    y = y_oracle_pmf(m1, m2)
    w = w_oracle_pmf(m1 - 1, m2)
    shifted = ExactPmf((0, 0) + w.numerators, w.denominator)
    return ShiftRelationReport(m1, m2, float(y.tv_distance(shifted)), y, shifted)

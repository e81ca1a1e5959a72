from collections import Counter
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from riffleguess.errors import CapacityError
from riffleguess.shuffle import (
    cut_pmf,
    enumerate_shuffles,
    permutation_from_bits,
    sample_shuffle,
    validate_permutation,
)


def test_cut_pmf_small_values():
    assert cut_pmf(5).mass(2) == Fraction(5, 16)
    assert cut_pmf(1).mass(0) == Fraction(1, 2)
    assert cut_pmf(1).mass(1) == Fraction(1, 2)


def test_cut_pmf_normalization_and_symmetry():
    for n in range(1, 12):
        pmf = cut_pmf(n)
        assert sum(pmf.fractions) == 1
        for k in range(n + 1):
            assert pmf.mass(k) == Fraction(comb(n, k), 2**n)
            assert pmf.mass(k) == pmf.mass(n - k)


def test_cut_pmf_rejects_empty_deck():
    with pytest.raises(ValueError):
        cut_pmf(0)


def test_permutation_from_bits_examples():
    assert permutation_from_bits([1, 0, 1]) == (1, 3, 2)
    assert permutation_from_bits([0, 1, 0]) == (2, 1, 3)
    assert permutation_from_bits([1, 1, 1]) == (1, 2, 3)
    assert permutation_from_bits([0, 0, 0]) == (1, 2, 3)


def _covered_by_two_increasing(perm, cut):
    # positions of cards 1..cut must increase, likewise cards cut+1..n
    inverse = {card: pos for pos, card in enumerate(perm)}
    first = [inverse[c] for c in range(1, cut + 1)]
    second = [inverse[c] for c in range(cut + 1, len(perm) + 1)]
    return first == sorted(first) and second == sorted(second)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_enumeration_structure(n):
    outcomes = list(enumerate_shuffles(n))
    assert len(outcomes) == 2**n
    total = sum((o.weight for o in outcomes), start=Fraction(0))
    assert total == 1
    assert all(o.weight == Fraction(1, 2**n) for o in outcomes)
    multiplicity = Counter(o.permutation for o in outcomes)
    identity = tuple(range(1, n + 1))
    assert multiplicity[identity] == n + 1
    assert len(multiplicity) == 2**n - n  # identity plus 2^n - n - 1 others
    assert all(m == 1 for perm, m in multiplicity.items() if perm != identity)
    for o in outcomes:
        validate_permutation(o.permutation)
        assert _covered_by_two_increasing(o.permutation, o.cut)
        assert 0 <= o.cut <= n


def test_enumeration_table_n3():
    outcomes = list(enumerate_shuffles(3))
    multiplicity = Counter(o.permutation for o in outcomes)
    assert multiplicity == {
        (1, 2, 3): 4,
        (2, 1, 3): 1,
        (2, 3, 1): 1,
        (1, 3, 2): 1,
        (3, 1, 2): 1,
    }
    # cut sizes follow the binomial weights
    cuts = Counter(o.cut for o in outcomes)
    assert cuts == {0: 1, 1: 3, 2: 3, 3: 1}


def test_enumeration_table_n4_distinct_count():
    outcomes = list(enumerate_shuffles(4))
    distinct = {o.permutation for o in outcomes}
    assert len(distinct) == 2**4 - 4  # 12 distinct permutations


def test_identity_multiplicity_up_to_enum_limit():
    # full multiplicity structure for small n, streaming identity count at
    # the enumeration limit itself
    for n in range(1, 13):
        identity = tuple(range(1, n + 1))
        hits = sum(1 for o in enumerate_shuffles(n) if o.permutation == identity)
        assert hits == n + 1
    n = 20
    identity = tuple(range(1, n + 1))
    hits = sum(1 for o in enumerate_shuffles(n) if o.permutation == identity)
    assert hits == 21


def test_enumeration_capacity():
    with pytest.raises(CapacityError):
        next(iter(enumerate_shuffles(21)))
    with pytest.raises(ValueError):
        next(iter(enumerate_shuffles(0)))


def test_sampler_deterministic_for_fixed_seed():
    a = [sample_shuffle(6, np.random.default_rng(42)) for _ in range(5)]
    b = [sample_shuffle(6, np.random.default_rng(42)) for _ in range(5)]
    assert a == b


def test_sampler_trivial_cuts_give_identity():
    # all-ones and all-zeros bit strings both decode to the identity
    assert permutation_from_bits([1] * 7) == tuple(range(1, 8))
    assert permutation_from_bits([0] * 7) == tuple(range(1, 8))


def test_sampler_matches_enumeration_marginal():
    # empirical law over permutations at n=3 vs the exact 1/8-per-outcome law
    rng = np.random.default_rng(2024)
    samples = 100_000
    freq = Counter(sample_shuffle(3, rng) for _ in range(samples))
    exact = {
        (1, 2, 3): 0.5,
        (2, 1, 3): 0.125,
        (2, 3, 1): 0.125,
        (1, 3, 2): 0.125,
        (3, 1, 2): 0.125,
    }
    for perm, p in exact.items():
        sigma = (p * (1 - p) / samples) ** 0.5
        assert abs(freq[perm] / samples - p) < 4 * sigma + 1e-12

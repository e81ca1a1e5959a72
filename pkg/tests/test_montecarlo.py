import math
from collections import Counter

import numpy as np
import pytest

from riffleguess.exactdist import pmf_x
from riffleguess.limitlaw import LIMIT_LAW
from riffleguess.montecarlo import (
    SimulationReport,
    counts_ks_distance,
    counts_tv_distance,
    ks_distance,
    sample_permutations,
    simulate,
)
from riffleguess.shuffle import permutation_from_bits


def test_simulate_counts_conserved():
    report = simulate(6, 5000, seed=11)
    assert sum(report.counts) == 5000
    assert len(report.counts) == 7
    assert report.n == 6 and report.seed == 11


def test_simulate_deterministic_across_worker_counts():
    base = simulate(8, 5000, seed=123, workers=1)
    for workers in (2, 3):
        other = simulate(8, 5000, seed=123, workers=workers)
        assert other == base


def test_simulate_seed_sensitivity():
    a = simulate(8, 4000, seed=1)
    b = simulate(8, 4000, seed=2)
    assert a.counts != b.counts


def test_batch_sampler_matches_scalar_decoding():
    perms = sample_permutations(9, 50, seed=5)
    # rebuild each permutation from its own bits drawn the same way
    from riffleguess.montecarlo import _chunk_bits

    bits = _chunk_bits(9, 5, 0, 50)
    for row, perm in zip(bits, perms):
        assert tuple(perm) == permutation_from_bits(row.tolist())


def test_permutation_level_frequencies_n3():
    # each of the 8 outcomes has probability 1/8; (2,1,3) comes from one
    count = 1_000_000
    perms = sample_permutations(3, count, seed=31)
    encoded = perms[:, 0] * 100 + perms[:, 1] * 10 + perms[:, 2]
    freq = Counter(encoded.tolist())
    p = 1 / 8
    sigma = math.sqrt(p * (1 - p) / count)
    assert abs(freq[213] / count - p) < 3 * sigma + 1e-12
    p_id = 1 / 2
    sigma_id = math.sqrt(p_id * (1 - p_id) / count)
    assert abs(freq[123] / count - p_id) < 3 * sigma_id + 1e-12


def test_sampler_marginal_matches_enumeration_n6():
    # all 2**6 - 6 = 58 reachable permutations at their exact frequencies
    from collections import Counter as C
    from fractions import Fraction

    from riffleguess.shuffle import enumerate_shuffles

    exact = C()
    for outcome in enumerate_shuffles(6):
        exact[outcome.permutation] += Fraction(1, 2**6)
    count = 1_000_000
    perms = sample_permutations(6, count, seed=66)
    keys = perms @ np.array([7**i for i in range(6)], dtype=np.int64)
    freq = C(keys.tolist())
    for perm, p in exact.items():
        key = sum(v * 7**i for i, v in enumerate(perm))
        p = float(p)
        sigma = math.sqrt(p * (1 - p) / count)
        assert abs(freq[key] / count - p) < 4 * sigma + 1e-12


def test_empirical_masses_match_exact_small_decks():
    report3 = simulate(3, 1_000_000, seed=4)
    sigma = math.sqrt(0.5 * 0.5 / report3.samples)
    assert abs(report3.counts[3] / report3.samples - 0.5) < 4 * sigma
    report4 = simulate(4, 1_000_000, seed=4)
    p = 3 / 16
    sigma = math.sqrt(p * (1 - p) / report4.samples)
    assert abs(report4.counts[2] / report4.samples - p) < 4 * sigma


@pytest.mark.parametrize("n", [8, 16, 64])
def test_empirical_mean_within_four_sigma(n):
    samples = 100_000
    report = simulate(n, samples, seed=9)
    pmf = pmf_x(n)
    exact_mean = float(pmf.mean)
    exact_sd = math.sqrt(float(pmf.variance))
    assert abs(report.mean - exact_mean) < 4 * exact_sd / math.sqrt(samples)


def test_ks_distance_vanishes_for_law_aligned_counts():
    # counts whose cumulative sums sit exactly on the law's cdf leave only
    # the one-bin left-limit gap, which shrinks with the grid
    def aligned_distance(n):
        total = 10**9
        cums = [round(total * LIMIT_LAW.cdf(k / math.sqrt(n))) for k in range(n + 1)]
        cums[-1] = total
        counts = [cums[0]] + [b - a for a, b in zip(cums, cums[1:])]
        return counts_ks_distance(counts, n)

    coarse = aligned_distance(400)
    fine = aligned_distance(10_000)
    assert fine < coarse
    assert fine < 0.01  # one-bin gap, about max density / sqrt(n)


def test_ks_distance_report_wrapper():
    report = simulate(64, 20_000, seed=3)
    assert ks_distance(report, LIMIT_LAW) == pytest.approx(
        counts_ks_distance(report.counts, 64), abs=1e-15
    )


def test_tv_distance_moderate_deck_large_sample():
    report = simulate(64, 1_000_000, seed=21)
    assert report.tv_to_exact is not None
    assert report.tv_to_exact <= 0.01


def test_tv_distance_against_exact():
    report = simulate(8, 200_000, seed=17)
    assert report.tv_to_exact is not None
    assert report.tv_to_exact < 0.02
    assert report.tv_to_exact == pytest.approx(
        counts_tv_distance(report.counts, pmf_x(8)), abs=1e-15
    )


def test_tv_skipped_above_threshold():
    report = simulate(600, 2000, seed=2)
    assert report.tv_to_exact is None
    assert report.ks_to_limit > 0


def test_statistics_recomputable_from_counts():
    report = simulate(16, 30_000, seed=8)
    ks = np.arange(17)
    counts = np.array(report.counts)
    mean = float(ks @ counts) / report.samples
    var = float((ks**2) @ counts) / report.samples - mean**2
    assert report.mean == mean
    assert report.variance == var


def test_invalid_arguments():
    with pytest.raises(ValueError):
        simulate(0, 10, seed=1)
    with pytest.raises(ValueError):
        simulate(5, 0, seed=1)
    with pytest.raises(ValueError):
        simulate(5, 10, seed=-3)
    with pytest.raises(ValueError):
        simulate(5, 10, seed=2**64)

"""Vectorized simulation of the full game with reproducible parallelism.

Sampling is counter-based: sample index i belongs to chunk i // 1024, each
chunk draws its random words from an independently keyed Philox stream
(key = (seed, chunk index)), and every sample consumes a fixed slice of its
chunk's words.  The empirical counts are therefore a pure function of
(n, samples, seed), independent of how chunks are distributed over workers,
and worker results reduce by exact integer addition.

Scoring is vectorized: the n interleaving bits of a sample determine the
shuffled deck arithmetically (prefix sums), so a whole chunk of games is
played with a handful of array operations.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .limitlaw import LIMIT_LAW, LimitLaw
from .strategy import optimal_guesses

#: samples per RNG chunk; fixed, because changing it changes the sample stream
CHUNK_SAMPLES = 1024

#: largest deck size for which simulate() computes the exact-pmf distance
EXACT_PMF_THRESHOLD = 512


def _validate_seed(seed: int) -> int:
    if not 0 <= seed < 2**64:
        raise ValueError("seed must fit in an unsigned 64-bit integer")
    return seed


def _chunk_bits(n: int, seed: int, chunk: int, count: int) -> np.ndarray:
    """Interleaving bits for `count` samples of chunk `chunk`, shape (count, n).

    Each sample owns words_per_sample 64-bit words of the chunk stream; bit
    j of a sample is bit j % 64 (little-endian) of word j // 64.  Drawing a
    prefix of a chunk yields a prefix of its samples, so a short final
    chunk changes nothing for the samples it contains.
    """
    words_per_sample = (n + 63) // 64
    raw = np.random.Philox(key=[seed, chunk]).random_raw(count * words_per_sample)
    raw = raw.reshape(count, words_per_sample).astype("<u8")
    bits = np.unpackbits(raw.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :n]


def _permutations_from_bits(bits: np.ndarray) -> np.ndarray:
    """Shuffled decks (1-based labels) for a batch of bit rows."""
    n = bits.shape[1]
    prefix = np.cumsum(bits, axis=1, dtype=np.int64)
    k = prefix[:, -1:]
    positions = np.arange(1, n + 1, dtype=np.int64)
    return np.where(bits.astype(bool), prefix, k + positions - prefix)


def _chunk_score_counts(n: int, seed: int, chunk: int, count: int,
                        guesses: np.ndarray) -> np.ndarray:
    bits = _chunk_bits(n, seed, chunk, count)
    decks = _permutations_from_bits(bits)
    scores = (decks == guesses).sum(axis=1)
    return np.bincount(scores, minlength=n + 1)


def _range_counts(args) -> np.ndarray:
    n, seed, chunk_lo, chunk_hi, samples, guesses = args
    g = np.asarray(guesses, dtype=np.int64)
    counts = np.zeros(n + 1, dtype=np.int64)
    for chunk in range(chunk_lo, chunk_hi):
        count = min(CHUNK_SAMPLES, samples - chunk * CHUNK_SAMPLES)
        counts += _chunk_score_counts(n, seed, chunk, count, g)
    return counts


def sample_permutations(n: int, count: int, seed: int) -> np.ndarray:
    """First `count` shuffled decks of the stream, shape (count, n)."""
    _validate_seed(seed)
    out = []
    chunks = (count + CHUNK_SAMPLES - 1) // CHUNK_SAMPLES
    for chunk in range(chunks):
        batch = min(CHUNK_SAMPLES, count - chunk * CHUNK_SAMPLES)
        out.append(_permutations_from_bits(_chunk_bits(n, seed, chunk, batch)))
    return np.concatenate(out, axis=0)


@dataclass(frozen=True)
class SimulationReport:
    """Outcome of one simulation run; every statistic derives from counts."""

    n: int
    samples: int
    seed: int
    counts: tuple[int, ...]
    mean: float
    variance: float
    ks_to_limit: float
    tv_to_exact: float | None


def counts_ks_distance(counts: Sequence[int], n: int, law: LimitLaw = LIMIT_LAW) -> float:
    """Two-sided sup distance between the ECDF of X/sqrt(n) and law.cdf.

    The empirical distribution jumps at k/sqrt(n); both the value at the
    jump and the left limit are compared.
    """
    total = sum(counts)
    scale = 1.0 / math.sqrt(n)
    worst = 0.0
    cum = 0
    for k, c in enumerate(counts):
        reference = law.cdf(k * scale)
        worst = max(worst, abs(cum / total - reference))
        cum += c
        worst = max(worst, abs(cum / total - reference))
    return worst


def ks_distance(report: SimulationReport, law: LimitLaw = LIMIT_LAW) -> float:
    return counts_ks_distance(report.counts, report.n, law)


def counts_tv_distance(counts: Sequence[int], pmf) -> float:
    """Total-variation distance between empirical frequencies and an ExactPmf."""
    total = sum(counts)
    top = max(len(counts) - 1, pmf.max_value)
    acc = 0.0
    for k in range(top + 1):
        emp = counts[k] / total if k < len(counts) else 0.0
        acc += abs(emp - float(pmf.mass(k)))
    return acc / 2


def simulate(n: int, samples: int, seed: int, workers: int = 1,
             exact_threshold: int = EXACT_PMF_THRESHOLD) -> SimulationReport:
    """Play `samples` independent games under the canonical strategy.

    Deterministic for fixed (n, samples, seed): the worker count only
    partitions the chunk range.  The exact-pmf distance is included for
    decks up to `exact_threshold` cards.
    """
    if n < 1 or samples < 1:
        raise ValueError("deck size and sample count must be positive")
    _validate_seed(seed)
    guesses = optimal_guesses(n)
    chunks = (samples + CHUNK_SAMPLES - 1) // CHUNK_SAMPLES
    workers = max(1, min(workers, chunks))
    if workers == 1:
        counts = _range_counts((n, seed, 0, chunks, samples, guesses))
    else:
        bounds = np.linspace(0, chunks, workers + 1).astype(int)
        jobs = [
            (n, seed, int(bounds[w]), int(bounds[w + 1]), samples, guesses)
            for w in range(workers)
        ]
        counts = np.zeros(n + 1, dtype=np.int64)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_range_counts, jobs):
                counts += part
    first = int(np.dot(np.arange(n + 1), counts))
    second = int(np.dot(np.arange(n + 1) ** 2, counts))
    mean = first / samples
    variance = second / samples - mean * mean
    ks = counts_ks_distance(counts, n)
    tv = None
    if n <= exact_threshold:
        from .exactdist import pmf_x

        tv = counts_tv_distance(counts, pmf_x(n))
    return SimulationReport(
        n=n,
        samples=samples,
        seed=seed,
        counts=tuple(int(c) for c in counts),
        mean=mean,
        variance=variance,
        ks_to_limit=ks,
        tv_to_exact=tv,
    )

"""Monte Carlo at the scales of the published figures.

Simulates the full game (shuffle, guess, score) with the reproducible
counter-based sampler, prints text histograms of the normalized counts
and their distance to the exact and limiting laws.
"""

import math

from riffleguess import exactdist, limitlaw, montecarlo

# %% A small deck where the exact law is known: total-variation check.
report = montecarlo.simulate(8, 200_000, seed=7)
exact = exactdist.pmf_x(8)
print("deck of 8, 200k games:")
print("  k   empirical   exact")
for k in range(9):
    print(f"  {k}   {report.counts[k] / report.samples:9.5f}   {float(exact.mass(k)):.5f}")
print(f"  total variation distance: {report.tv_to_exact:.5f}")

# %% Figure-scale runs: the histogram shape settles on the limit density.
for n in (200, 1000):
    r = montecarlo.simulate(n, 50_000, seed=1)
    print(f"\ndeck of {n}, 50k games: mean/sqrt(n) = {r.mean / math.sqrt(n):.4f} "
          f"(limit {limitlaw.limit_moment(1):.4f}), ks to limit = {r.ks_to_limit:.4f}")
    scale = math.sqrt(n)
    width = 46
    print("  normalized histogram (x = k/sqrt(n), bars ~ density):")
    for k in range(0, int(3.5 * scale), max(1, int(scale / 8))):
        density = r.counts[k] / r.samples * scale
        bar = "#" * int(width * density / 0.7)
        print(f"  {k / scale:5.2f} |{bar}")

# %% Reproducibility: worker counts cannot change the outcome.
a = montecarlo.simulate(64, 30_000, seed=5, workers=1)
b = montecarlo.simulate(64, 30_000, seed=5, workers=3)
print(f"\nsame seed, 1 vs 3 workers, identical reports: {a == b}")

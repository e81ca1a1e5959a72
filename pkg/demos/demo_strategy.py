"""Where do cards land after one riffle shuffle, and what should you guess?

Prints the placement matrix for a small deck, the optimal guessing
sequence pattern, and the per-position verification that each guess
attains the exact maximum placement probability.
"""

from riffleguess import strategy

# %% Placement probabilities for a six-card deck.
n = 6
matrix = strategy.TransitionMatrix.build(n)
print(f"P(card i at position j), n = {n} (rows i, columns j):")
for i in range(1, n + 1):
    row = "  ".join(f"{float(matrix.prob(i, j)):.4f}" for j in range(1, n + 1))
    print(f"  card {i}:  {row}")
print("\nevery row and column sums to 1:",
      all(matrix.row_sum(i) == 1 and matrix.column_sum(i) == 1 for i in range(1, n + 1)))

# %% The optimal guess sequence for a few deck sizes.
for size in (3, 4, 8, 13, 20):
    bundle = strategy.optimal_strategy(size)
    print(f"n = {size:>2}: guesses {bundle.guesses}  verified: {bundle.argmax_verified}")

# %% Positions often admit several equally good guesses.
bundle = strategy.optimal_strategy(10)
print("\nequally optimal guesses per position at n = 10:")
for j, options in enumerate(bundle.optimal_sets, start=1):
    print(f"  position {j}: {sorted(options)}")

# %% Scoring a guess sequence against shuffled decks.
from numpy.random import default_rng

from riffleguess import shuffle

rng = default_rng(7)
guesses = strategy.optimal_strategy(10).guesses
print("\nfive sampled games at n = 10:")
for _ in range(5):
    deck = shuffle.sample_shuffle(10, rng)
    print(f"  deck {deck} -> {strategy.score(guesses, deck)} correct")

# %% The verification scales: even at n = 5000 the argmax check is exact.
big = strategy.optimal_strategy(5000)
print(f"\nn = 5000 argmax verification: {big.argmax_verified}")

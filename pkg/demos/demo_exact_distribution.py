"""Walk through the exact distribution of correct guesses.

Start with decks small enough to enumerate by hand, confirm the polynomial
composition reproduces them, then push the exact machinery to deck sizes
where enumeration is hopeless.
"""

from fractions import Fraction

from riffleguess import exactdist

# %% Small decks first: every shuffle outcome can be listed.
for n in (3, 4):
    pmf = exactdist.pmf_x(n)
    print(f"deck of {n}:")
    for k in range(n, -1, -1):
        print(f"  P(X = {k}) = {pmf.mass(k)}  ({float(pmf.mass(k)):.4f})")

# %% Two independent routes to the same numbers.
# The exhaustive route walks all 2^n outcomes; the composition route
# multiplies two half-deck polynomials.  They must agree exactly.
for n in range(4, 13):
    assert exactdist.pmf_x(n) == exactdist.pmf_x_enumeration(n)
print("\nenumeration and composition agree exactly for n = 4..12")

# %% The half-deck polynomial itself.
print("\ng[2,1] =", exactdist.g_poly(2, 1), " evaluates at 1 to", exactdist.g_poly(2, 1)(1))
print("f_4    =", exactdist.f_poly(4))

# %% Exact moments at a deck size far beyond enumeration.
n = 2000
raw = exactdist.raw_moments(n, 5)
print(f"\nexact raw moments at n = {n}:")
for s, value in enumerate(raw):
    print(f"  E(X^{s}) = {float(value):.6g}   (exact fraction has "
          f"{len(str(value.numerator))} digits over {len(str(value.denominator))})")

# %% Normalized by n^(s/2) the moments approach the limit values.
from riffleguess import limitlaw

print(f"\nnormalized moments at n = {n} against the limit law:")
for s in range(1, 6):
    normalized = float(raw[s]) / n ** (s / 2)
    target = limitlaw.limit_moment(s)
    print(f"  s = {s}: {normalized:.4f}  vs  {target:.4f}  "
          f"(gap {abs(normalized - target) / target:.1%})")

# %% The half-deck law: exact for moderate sizes, floating beyond.
exact = exactdist.pmf_y(2, 1)
print("\nY law at (2, 1):", dict(enumerate(exact.fractions)))
big = exactdist.pmf_y_float(900, 858)
mean = sum(k * p for k, p in enumerate(big))
print(f"float route at (900, 858): mass sums to {big.sum():.12f}, "
      f"mean {mean:.2f} = {mean / 30:.3f} * sqrt(900)")

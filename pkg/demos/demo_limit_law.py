"""The half-normal-sum limit law, numerically and symbolically.

The normalized guess count converges to H1 + H2 with H1, H2 independent
half-normal.  The density, distribution function, quantiles and the whole
moment sequence are available in closed form.
"""

import math

from riffleguess import limitlaw

SQPI = math.sqrt(math.pi)

# %% Density and distribution function at a few points.
mean = 2 / SQPI
print(f"mean of the limit law: 2/sqrt(pi) = {mean:.5f}")
print(f"density at the mean:   {limitlaw.limit_density(mean):.5f}")
print(f"cdf at the mean:       {limitlaw.limit_cdf(mean):.5f}")
print(f"median:                {limitlaw.limit_quantile(0.5):.5f}")

# %% The moment sequence has an exact three-term decomposition.
print("\nmoments mu_s = a + b/sqrt(pi) + c/pi:")
for s in range(7):
    a, b, c = limitlaw.limit_moment_exact(s)
    print(f"  s = {s}: a = {a}, b = {b}, c = {c}   -> {limitlaw.limit_moment(s):.6f}")

# %% Consistency with the half-normal factors.
for s in range(6):
    convolution = sum(
        math.comb(s, k) * limitlaw.half_normal_moment(k) * limitlaw.half_normal_moment(s - k)
        for k in range(s + 1)
    )
    assert abs(convolution - limitlaw.limit_moment(s)) < 1e-12
print("\nmoment sequence equals the binomial convolution of half-normal moments")

# %% The drifted scaling limit of the half-deck count.
law = limitlaw.LinExpLaw(t=1.0)
print("\nhalf-deck scaling limit at drift t = 1:")
for z in (0.5, 1.0, 2.0, 4.0):
    print(f"  F({z}) = {law.cdf(z):.5f}")

# %% Leading moment terms at deck size n.
n = 10_000
print(f"\nleading raw-moment terms at n = {n}:")
for s in range(1, 6):
    print(f"  E(X^{s}) ~ {limitlaw.moment_asymptotic_main_term(n, s):.4g}")

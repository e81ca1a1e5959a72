"""Closed-form generating functions as a third route to the exact numbers.

All closed forms here are built from the shifted Catalan series
P(t) = (1 - sqrt(1 - 4t)) / 2.  Expanded as exact truncated series they
must reproduce the dynamic program coefficient by coefficient, and their
singular behaviour predicts how fast the coefficients grow.
"""

from riffleguess import exactdist, genfunc

# %% The Catalan building block and its defining equation.
P = genfunc.catalan_series(10)
print("P(t) coefficients:", [P.coefficient(m) for m in range(8)])

# %% The trivariate closed form reproduces the whole DP triangle.
order = 14
resolved = genfunc.tilde_G_series(order)
clean = True
for total in range(order + 1):
    for m1, poly in enumerate(exactdist.g_diagonal(total)):
        clean &= resolved.coefficient(total, total - 2 * m1) == poly
print(f"closed form == DP on the full triangle up to order {order}: {clean}")
print("sample: order 3, offset -1 ->", resolved.coefficient(3, -1),
      " (the DP gives", exactdist.g_poly(2, 1), ")")

# %% Fixed endpoint difference: the form matching the path oracle.
gf = genfunc.fixed_difference_gf(2, 10)
print("\nendpoint difference 2, length 2:", gf.coefficient(2), "(the single DD path)")
print("endpoint difference 2, length 6:", gf.coefficient(6))

# %% Coefficient asymptotics from the dominant singularity.
print("\nexact coefficient over main-term estimate for the w-expansion series:")
table = genfunc.tilde_g_series(800, 3)
for s in range(4):
    for n in (200, 400, 800):
        ratio = genfunc.main_term_ratio(s, n, table[s][n])
        print(f"  s = {s}, order {n:>4}: ratio {ratio:.4f}")
    print()
print("ratios drift toward 1 like 1/sqrt(order), with a slope growing in s")

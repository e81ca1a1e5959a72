"""The limiting distribution of the normalized correct-guess count.

The guess count over sqrt(n) converges to the sum of two independent
half-normal variables (each with density (2/sqrt(pi)) e^{-x^2}).  The sum
has density f(x) = 4 phi(x) (2 Phi(x) - 1) on x >= 0, cumulative
distribution erf(x/sqrt(2))^2, and moments expressible through gamma
values at half integers.  Those gamma values are kept exact (a rational
times an optional sqrt(pi)), so the moment formulas can be compared
symbolically, not just numerically.

The half-deck count has its own scaling limit: when the packet difference
grows like t*sqrt(m1), the count over sqrt(m1) tends to the law with
distribution function 1 - exp(-z(2t+z)/4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

SQRT_PI = math.sqrt(math.pi)


def gamma_half_exact(m: int) -> tuple[Fraction, int]:
    """Gamma(m/2) as (rational, e) with value rational * pi**(e/2).

    Built from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi) by the recurrence
    Gamma(x+1) = x Gamma(x), so no general gamma evaluation is involved.
    """
    if m < 1:
        raise ValueError("argument must be a positive half-integer index")
    if m % 2 == 0:
        return Fraction(math.factorial(m // 2 - 1)), 0
    rational = Fraction(1)
    k = 1  # walking Gamma(k/2) up from Gamma(1/2)
    while k < m:
        rational *= Fraction(k, 2)
        k += 2
    return rational, 1


def gamma_half(m: int) -> float:
    """Gamma(m/2) as a float."""
    rational, e = gamma_half_exact(m)
    return float(rational) * (SQRT_PI if e else 1.0)


def half_normal_moment(s: int) -> float:
    """E(H**s) = Gamma((s+1)/2) / sqrt(pi) for the half-normal factor."""
    if s < 0:
        raise ValueError("moment order must be nonnegative")
    return gamma_half(s + 1) / SQRT_PI


def limit_moment_exact(s: int) -> tuple[Fraction, Fraction, Fraction]:
    """Moment of the limit law as (a, b, c) with value a + b/sqrt(pi) + c/pi.

    The binomial convolution of half-normal moments only ever produces
    those three irrationality classes, so the decomposition is exact and
    lets closed forms be verified by rational comparison.
    """
    if s < 0:
        raise ValueError("moment order must be nonnegative")
    buckets = [Fraction(0), Fraction(0), Fraction(0)]  # pi^0, pi^-1/2, pi^-1
    for k in range(s + 1):
        r1, e1 = gamma_half_exact(k + 1)
        r2, e2 = gamma_half_exact(s - k + 1)
        term = math.comb(s, k) * r1 * r2
        # overall factor pi^((e1+e2)/2 - 1)
        buckets[2 - (e1 + e2)] += term
    return buckets[0], buckets[1], buckets[2]


def limit_moment(s: int) -> float:
    """s-th moment of the half-normal sum."""
    a, b, c = limit_moment_exact(s)
    return float(a) + float(b) / SQRT_PI + float(c) / math.pi


def limit_density(x: float) -> float:
    """Density 4 phi(x) (2 Phi(x) - 1) of the half-normal sum, x >= 0."""
    if x <= 0:
        return 0.0
    phi = math.exp(-x * x / 2) / math.sqrt(2 * math.pi)
    two_phi_minus_1 = math.erf(x / math.sqrt(2))
    return 4.0 * phi * two_phi_minus_1


def limit_density_erf_form(x: float) -> float:
    """Equivalent closed form (2 sqrt(2) / sqrt(pi)) e^{-x^2/2} erf(x/sqrt(2))."""
    if x <= 0:
        return 0.0
    return 2 * math.sqrt(2) / SQRT_PI * math.exp(-x * x / 2) * math.erf(x / math.sqrt(2))


def limit_cdf(x: float) -> float:
    """Distribution function erf(x/sqrt(2))**2; the derivative is the density."""
    if x <= 0:
        return 0.0
    return math.erf(x / math.sqrt(2)) ** 2


def limit_quantile(p: float, tol: float = 1e-12) -> float:
    """Inverse of the distribution function by bisection."""
    if not 0.0 <= p < 1.0:
        raise ValueError("p must lie in [0, 1)")
    if p == 0.0:
        return 0.0
    lo, hi = 0.0, 1.0
    while limit_cdf(hi) < p:
        hi *= 2
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if limit_cdf(mid) < p:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


class LimitLaw:
    """Callable bundle for the half-normal sum (density, cdf, moments)."""

    def density(self, x: float) -> float:
        return limit_density(x)

    def cdf(self, x: float) -> float:
        return limit_cdf(x)

    def quantile(self, p: float) -> float:
        return limit_quantile(p)

    def moment(self, s: int) -> float:
        return limit_moment(s)

    def moments(self, s_max: int) -> tuple[float, ...]:
        return tuple(limit_moment(s) for s in range(s_max + 1))


LIMIT_LAW = LimitLaw()


def linexp_cdf(z: float, t: float) -> float:
    """Distribution function 1 - exp(-z(2t+z)/4) of the drifted scaling limit."""
    if t < 0:
        raise ValueError("drift must be nonnegative")
    if z <= 0:
        return 0.0
    return -math.expm1(-z * (2 * t + z) / 4)


@dataclass(frozen=True)
class LinExpLaw:
    """Scaling limit of the half-deck count at packet difference ~ t*sqrt(m1)."""

    t: float

    def cdf(self, z: float) -> float:
        return linexp_cdf(z, self.t)

    def density(self, z: float) -> float:
        if z <= 0:
            return 0.0
        return (2 * self.t + 2 * z) / 4 * math.exp(-z * (2 * self.t + z) / 4)


def moment_asymptotic_main_term(n: int, s: int) -> float:
    """Leading term limit_moment(s) * n**(s/2) of the s-th raw moment."""
    if n < 1 or s < 0:
        raise ValueError("n must be >= 1 and s >= 0")
    return limit_moment(s) * n ** (s / 2)


def four_l_leading_term(s: int, L: int) -> Fraction:
    """Exact leading term of E(X**s) at deck size n = 4L, s = 1..5.

    These are the classical dominant terms written with central binomial
    coefficients; scaled by n^{-s/2} they converge to the limit moments.
    """
    if not 1 <= s <= 5:
        raise ValueError("leading terms are tabulated for s = 1..5")
    if L < 1:
        raise ValueError("L must be positive")
    central = Fraction(math.comb(2 * L, L), 4**L)
    if s == 1:
        return 4 * L * central
    if s == 2:
        return Fraction((4 * L) ** 2, 2) * central**2 + 4 * L
    if s == 3:
        return 40 * L**2 * central
    if s == 4:
        return Fraction(256 * L**3, 2) * central**2 + 48 * L**2
    return 688 * L**3 * central


def central_binomial_scaled(L: int) -> Fraction:
    """The bridge quantity 2L * C(2L, L) / 4**L, asymptotically sqrt(4L/pi)."""
    if L < 1:
        raise ValueError("L must be positive")
    return Fraction(2 * L * math.comb(2 * L, L), 4**L)

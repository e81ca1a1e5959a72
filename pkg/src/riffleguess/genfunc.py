"""Closed-form generating functions for the half-deck guess count.

Three generating functions, all built from the shifted Catalan series
P(t) = (1 - sqrt(1-4t))/2, give independent access to the same numbers the
dynamic program produces:

* the trivariate series G(z, u, q) = sum g[m1, m2](q) z^(m1+m2) u^(m2-m1),
  whose closed form is inverted here coefficient-by-coefficient in u;
* its u = 1 specialization expanded around q = 1 + w, whose w-coefficients
  gtilde_s(z) drive the moment asymptotics;
* the fixed-endpoint-difference form q^2 (zE(z))^d / (1 - 2z^2 q E(z)) with
  E(z) = (1 - sqrt(1-4z^2))/(2z^2), matching the Dyck-path oracle.

Everything is exact (integer or integer-polynomial coefficients), so any
mismatch against the DP or the path oracles is a genuine bug.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapacityError
from .limitlaw import gamma_half
from .qpoly import Q_ZERO, QPolynomial
from .series import TruncatedSeries, geometric_scaled, mul_geometric

#: largest order accepted by the u-resolved trivariate expansion
U_RESOLVED_LIMIT = 40


def catalan_series(M: int) -> TruncatedSeries:
    """P(t) = sum_{n>=1} C(2n-2, n-1)/n * t^n, the shifted Catalan series.

    Satisfies P^2 - P + t = 0 termwise, which the tests assert.
    """
    if M < 1:
        raise ValueError("order must be at least 1")
    coeffs = [0] * (M + 1)
    for m in range(1, M + 1):
        coeffs[m] = math.comb(2 * m - 2, m - 1) // m
    return TruncatedSeries(coeffs, M)


def p_of_z_squared(M: int) -> TruncatedSeries:
    """P(z**2) as a series in z."""
    coeffs = [0] * (M + 1)
    for m in range(1, M // 2 + 1):
        coeffs[2 * m] = math.comb(2 * m - 2, m - 1) // m
    return TruncatedSeries(coeffs, M)


def sqrt_one_minus_4z2(M: int) -> TruncatedSeries:
    """sqrt(1 - 4z**2) = 1 - 2 P(z**2), exact integer coefficients."""
    return TruncatedSeries.one(M) - 2 * p_of_z_squared(M)


def u1_series(M: int) -> TruncatedSeries:
    """The kernel root u1(z) = (1 - sqrt(1-4z**2)) / (2z) = P(z**2) / z."""
    return p_of_z_squared(M + 1).shift_down(1)


def tilde_g_series(M: int, s_max: int) -> dict[int, tuple[int, ...]]:
    """Coefficients [z^m] gtilde_s(z) for m <= M and s <= s_max.

    gtilde_s is the w^s coefficient of the u = 1 series at q = 1 + w:

        gtilde_0 = 1/(1-2z),
        gtilde_1 = (P(z^2) + z) / ((1-2z)(1-2P(z^2))),
        gtilde_s = ((z+1)P(z^2) - z^2) (2P(z^2))^(s-2)
                   / (z (1-2z) (1-2P(z^2))^s),   s >= 2,

    where the leading 1/z must cancel exactly (asserted).  Each coefficient
    list equals the w-jet of the matching anti-diagonal sum of the DP.
    """
    if M < 1 or s_max < 0:
        raise ValueError("requires order >= 1 and s_max >= 0")
    out: dict[int, tuple[int, ...]] = {}
    out[0] = tuple(geometric_scaled(2, M).coeffs)
    if s_max == 0:
        return out
    P2 = p_of_z_squared(M)
    invD = (TruncatedSeries.one(M) - 2 * P2).inverse()
    z = TruncatedSeries.monomial(1, M)
    out[1] = tuple(mul_geometric((P2 + z) * invD, 2).coeffs)
    if s_max == 1:
        return out
    # ((z+1) P(z^2) - z^2) / z, assembled one order higher before the shift
    wide = p_of_z_squared(M + 1)
    num = [0] * (M + 2)
    for m, c in enumerate(wide.coeffs):
        num[m] += c
        if m + 1 <= M + 1:
            num[m + 1] += c
    num[2] -= 1
    base = TruncatedSeries(num, M + 1).shift_down(1)
    two_p_power = TruncatedSeries.one(M)
    inv_power = invD * invD
    for s in range(2, s_max + 1):
        term = base * two_p_power * inv_power
        out[s] = tuple(mul_geometric(term, 2).coeffs)
        if s < s_max:
            two_p_power = two_p_power * (2 * P2)
            inv_power = inv_power * invD
    return out


@dataclass(frozen=True)
class UResolvedSeries:
    """Triangle of q-polynomials g[(m-d)/2, (m+d)/2] indexed by (m, d)."""

    order: int
    rows: tuple[dict[int, QPolynomial], ...]

    def coefficient(self, m: int, d: int) -> QPolynomial:
        if m > self.order:
            raise ValueError(f"order {m} beyond truncation {self.order}")
        return self.rows[m].get(d, Q_ZERO)


def _q_serialized(M: int):
    """Shared pieces for the closed forms with q-polynomial coefficients."""
    q = QPolynomial((0, 1))
    P2 = p_of_z_squared(M)
    denom_coeffs = [QPolynomial((1,))] + [
        -2 * c * q if c else 0 for c in P2.coeffs[1:]
    ]
    kernel_factor = TruncatedSeries(denom_coeffs, M)
    return q, P2, kernel_factor.inverse()


def tilde_G_series(M: int) -> UResolvedSeries:
    """Expand the trivariate closed form into the triangle of q-polynomials.

    The closed form has denominator z*u*(zu^2 - u + z)*(1 - 2qP(z^2)).  The
    factors z*u and 1 - 2qP(z^2) divide the numerator directly; the kernel
    factor zu^2 - u + z is inverted by marching the linear recurrence its
    multiplication induces on the u-exponent, seeded by the explicitly
    divided remainder.  Support outside |d| <= m (or with m - d odd) must
    come out exactly zero and is asserted.
    """
    if M < 1:
        raise ValueError("order must be at least 1")
    if M > U_RESOLVED_LIMIT:
        raise CapacityError(f"u-resolved expansion limited to order {U_RESOLVED_LIMIT}")
    H = M + 1
    q, P2, S = _q_serialized(H)
    one = QPolynomial((1,))
    q_minus_1_sq = (q - one) * (q - one)
    q_q_minus_1 = q * (q - one)

    # numerator grouped by powers of u: N2 u^2 + N1 u + N0
    n2 = (2 * q * P2).shift_up(1) - TruncatedSeries.monomial(1, H)
    n1 = q_minus_1_sq * P2 - TruncatedSeries.monomial(2, H, q_q_minus_1)
    n0 = -1 * (q_q_minus_1 * P2).shift_up(1)

    # h[d] = [z^m] N_{d+1} * S / z for the three u-exponents that survive
    h = {
        d: (piece * S).shift_down(1)
        for d, piece in ((-1, n0), (0, n1), (1, n2))
    }

    def h_poly(m: int, d: int) -> QPolynomial:
        if d in h and m <= h[d].order:
            c = h[d].coefficient(m)
            return c if isinstance(c, QPolynomial) else QPolynomial((c,)) if c else Q_ZERO
        return Q_ZERO

    rows: list[dict[int, QPolynomial]] = []
    first = {}
    for e in (-2, -1, 0):
        value = -1 * h_poly(0, e + 1)
        if value:
            first[e] = value
    rows.append(first)
    for m in range(1, M + 1):
        prev = rows[-1]
        row: dict[int, QPolynomial] = {}
        for e in range(-m - 2, m + 3):
            acc = prev.get(e - 1, Q_ZERO) + prev.get(e + 1, Q_ZERO) - h_poly(m, e + 1)
            if acc:
                row[e] = acc
        rows.append(row)
    for m, row in enumerate(rows):
        for d, value in row.items():
            if abs(d) > m or (m - d) % 2:
                raise AssertionError(
                    f"closed form leaked outside the support: order {m}, offset {d}: {value!r}"
                )
    return UResolvedSeries(M, tuple(rows))


def fixed_difference_gf(d: int, M: int) -> TruncatedSeries:
    """Series q^2 (zE(z))^d / (1 - 2 z^2 q E(z)) for endpoint difference d.

    Coefficient of z^L is the polynomial counting walks of length L from
    altitude 0 to -d by their down-step visits to altitudes -1 and -2.
    Using z^2 E(z) = P(z^2), the prefactor is P(z^2)^d / z^d, whose
    divisibility by z^d is asserted.
    """
    if d < 2:
        raise ValueError("endpoint difference must be at least 2")
    if M < d:
        raise ValueError("order too small for the requested difference")
    wide = p_of_z_squared(M + d)
    power = TruncatedSeries.one(M + d)
    for _ in range(d):
        power = power * wide
    prefactor = power.shift_down(d)
    _, _, S = _q_serialized(M)
    q_squared = QPolynomial((0, 0, 1))
    return (prefactor * S) * q_squared


def singular_coefficient_asymptotics(s: int, n: int) -> float:
    """Main-term estimate of [z^n] gtilde_s(z) from singularity transfer.

    Returns 2^n * 2^(s/2) * Gamma((s+1)/2) * n^(s/2) / (s! sqrt(pi)),
    equivalently 2^n n^(s/2) / (2^(s/2) Gamma(s/2 + 1)).  Exact for s = 0;
    the value overflows a double once n exceeds roughly 1020, in which case
    use main_term_ratio against an exact coefficient instead.
    """
    if s < 0 or n < 1:
        raise ValueError("s must be >= 0 and n >= 1")
    if s == 0:
        return float(2**n)
    return float(2**n) * _main_term_scale(s, n)


def _main_term_scale(s: int, n: int) -> float:
    return 2 ** (s / 2) * gamma_half(s + 1) * n ** (s / 2) / (
        math.factorial(s) * math.sqrt(math.pi)
    )


def main_term_ratio(s: int, n: int, coefficient: int) -> float:
    """Exact coefficient divided by its main-term estimate.

    The huge common factor 2^n is cancelled in exact arithmetic first, so
    the ratio is finite for any n the series routines can reach.
    """
    scaled = Fraction(coefficient, 2**n)
    if s == 0:
        return float(scaled)
    return float(scaled) / _main_term_scale(s, n)

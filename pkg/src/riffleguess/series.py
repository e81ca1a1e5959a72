"""Exact truncated power series in z.

Coefficients may be plain ints or QPolynomial values; the arithmetic only
assumes ring operations, and int 0 acts as the universal zero so mixed
coefficient types compose without ceremony.  All operations are exact, so a
disagreement with another computation route is a real bug rather than
roundoff.
"""

from __future__ import annotations

from typing import Sequence


class TruncatedSeries:
    """Power series known through z**order inclusive."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = list(coeffs)
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        while len(cs) < order + 1:
            cs.append(0)
        self.coeffs = cs
        self.order = order

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff=1) -> "TruncatedSeries":
        cs = [0] * (order + 1)
        if power <= order:
            cs[power] = coeff
        return cls(cs, order)

    def coefficient(self, m: int):
        if m > self.order:
            raise ValueError(f"coefficient {m} beyond truncation order {self.order}")
        return self.coeffs[m]

    def _require_same_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError("truncation orders differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_order(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_order(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._require_same_order(other)
            out = [0] * (self.order + 1)
            for i, ai in enumerate(self.coeffs):
                if not ai:
                    continue
                for j in range(self.order - i + 1):
                    bj = other.coeffs[j]
                    if bj:
                        out[i + j] = out[i + j] + ai * bj
            return TruncatedSeries(out, self.order)
        return TruncatedSeries([c * other for c in self.coeffs], self.order)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Reciprocal series; requires the constant term to be 1."""
        if not _is_one(self.coeffs[0]):
            raise ValueError("reciprocal requires constant term 1")
        inv = [0] * (self.order + 1)
        inv[0] = self.coeffs[0]
        for m in range(1, self.order + 1):
            acc = 0
            for j in range(1, m + 1):
                aj = self.coeffs[j]
                if aj:
                    acc = acc + aj * inv[m - j]
            inv[m] = -acc
        return TruncatedSeries(inv, self.order)

    def shift_down(self, k: int) -> "TruncatedSeries":
        """Divide by z**k; the k lowest coefficients must vanish."""
        for m in range(k):
            if self.coeffs[m]:
                raise AssertionError(
                    f"series not divisible by z**{k}: coefficient {m} is {self.coeffs[m]!r}"
                )
        return TruncatedSeries(self.coeffs[k:], self.order - k)

    def shift_up(self, k: int) -> "TruncatedSeries":
        """Multiply by z**k, keeping the truncation order."""
        return TruncatedSeries([0] * k + self.coeffs, self.order)

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(_coeff_eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, coeffs={self.coeffs[:6]!r}...)"


def _is_one(c) -> bool:
    return c == 1


def _coeff_eq(a, b) -> bool:
    if not a and not b:
        return True
    return a == b


def geometric_scaled(ratio: int, order: int) -> TruncatedSeries:
    """The series 1 / (1 - ratio*z) expanded to the given order."""
    out = [1] * (order + 1)
    for m in range(1, order + 1):
        out[m] = out[m - 1] * ratio
    return TruncatedSeries(out, order)


def mul_geometric(series: TruncatedSeries, ratio: int) -> TruncatedSeries:
    """Multiply by 1 / (1 - ratio*z) in linear time (prefix recurrence)."""
    out = []
    acc = 0
    for c in series.coeffs:
        acc = acc * ratio + c
        out.append(acc)
    return TruncatedSeries(out, series.order)

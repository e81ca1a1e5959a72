"""Dense polynomials in the counting variable q with big-integer coefficients.

These polynomials carry every exact count in the package: coefficient k of a
guessing polynomial is the number of equally likely outcomes with exactly k
correct guesses.  Python ints give arbitrary precision for free, so the whole
exact layer is overflow-free by construction.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator


class QPolynomial:
    """Immutable polynomial over the integers, stored densely.

    Trailing zero coefficients are stripped on construction, so two equal
    polynomials always compare equal and ``degree`` is well defined.  The
    zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __add__(self, other) -> "QPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "QPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPolynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "QPolynomial":
        if isinstance(other, int):
            if other == 0:
                return Q_ZERO
            return QPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Q_ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return QPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q**k."""
        if not self.coeffs or k == 0:
            return self if self.coeffs else Q_ZERO
        return QPolynomial((0,) * k + self.coeffs)

    def __call__(self, x):
        """Evaluate by Horner's rule; works for int, Fraction or float x."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def taylor_at_one(self, s_max: int) -> tuple[int, ...]:
        """Coefficients of w**s in p(1 + w), for s = 0 .. s_max.

        The s-th entry is sum_j C(j, s) * coeffs[j], the s-th finite
        difference weight of the coefficient sequence.
        """
        out = []
        for s in range(s_max + 1):
            out.append(sum(math.comb(j, s) * c for j, c in enumerate(self.coeffs) if j >= s))
        return tuple(out)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)!r})"


def _coerce(value) -> "QPolynomial":
    if isinstance(value, QPolynomial):
        return value
    if isinstance(value, int):
        return QPolynomial((value,))
    return NotImplemented


Q_ZERO = QPolynomial()
Q_ONE = QPolynomial((1,))
Q = QPolynomial((0, 1))

from fractions import Fraction

import pytest

from riffleguess.qpoly import Q, Q_ONE, Q_ZERO, QPolynomial


def test_trailing_zeros_stripped():
    assert QPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPolynomial([0, 0]).coeffs == ()
    assert QPolynomial([]).degree == -1


def test_equality_and_hash():
    assert QPolynomial([1, 2]) == QPolynomial((1, 2, 0))
    assert QPolynomial([5]) == 5
    assert QPolynomial([]) == 0
    assert hash(QPolynomial([1, 2])) == hash(QPolynomial([1, 2]))


def test_addition_and_int_coercion():
    p = QPolynomial([1, 2]) + QPolynomial([0, 0, 3])
    assert p.coeffs == (1, 2, 3)
    assert (QPolynomial([1, 1]) + 2).coeffs == (3, 1)
    assert sum([QPolynomial([1]), QPolynomial([0, 1])]) == QPolynomial([1, 1])


def test_multiplication():
    assert (Q * Q).coeffs == (0, 0, 1)
    p = QPolynomial([2, 1, 1]) * QPolynomial([1, 1])
    assert p.coeffs == (2, 3, 2, 1)
    assert (p * 0) == Q_ZERO
    assert (3 * Q).coeffs == (0, 3)


def test_subtraction_and_negation():
    assert (Q_ONE - Q).coeffs == (1, -1)
    assert (-QPolynomial([1, -2])).coeffs == (-1, 2)
    assert (1 - Q).coeffs == (1, -1)


def test_shift():
    assert Q_ONE.shift(3).coeffs == (0, 0, 0, 1)
    assert Q_ZERO.shift(5) == Q_ZERO


def test_evaluation():
    p = QPolynomial([4, 4, 3, 0, 5])
    assert p(1) == 16
    assert p(2) == 4 + 8 + 12 + 80
    assert p(Fraction(1, 2)) == Fraction(4) + 2 + Fraction(3, 4) + Fraction(5, 16)


def test_taylor_at_one_matches_evaluation():
    # the jet of p(1+w) re-evaluated as a polynomial in w must agree with p
    p = QPolynomial([3, 0, 2, 7, 1])
    jet = p.taylor_at_one(p.degree)
    for w in (0, 1, 2, 5):
        assert sum(c * w**s for s, c in enumerate(jet)) == p(1 + w)


def test_taylor_truncation_pads_with_zero_orders():
    jet = QPolynomial([1, 1]).taylor_at_one(4)
    assert jet == (2, 1, 0, 0, 0)


def test_immutability():
    p = QPolynomial([1])
    with pytest.raises(AttributeError):
        p.coeffs = (2,)

"""q-deformed rationals: the pair (num, den) of Laurent polynomials whose
quotient deforms r/s, built from the q-deformed continued-fraction matrix
word in R_q and L_q.

Canonical normalization clears the common q-power so that den has lowest
exponent 0 and a positive constant term; this reproduces the familiar
displayed forms q/(1+q), (q+q^2)/(1+q+q^2), ...
"""
from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly, ONE, ZERO, Q
from .braid import QMatrix2, qmod_generator, rho3
from .cfrac import Frac, NonPositive, to_even_cf


class ZeroNumerator(ValueError):
    pass


def _normalize_pair(num, den):
    """Shift so den.low = 0; flip sign so den's constant term is positive."""
    if den.is_zero():
        raise ZeroDivisionError("denominator polynomial is zero")
    shift = -den.low
    num, den = num.shift(shift), den.shift(shift)
    if den.coeffs[0] < 0:
        num, den = -num, -den
    return num, den


@dataclass(frozen=True)
class QRational:
    """The q-analog of a positive rational: frac, num and den polynomials."""

    frac: Frac
    num: LaurentPoly
    den: LaurentPoly

    def __str__(self):
        if self.den == ONE:
            return self.num.to_str()
        return "(%s)/(%s)" % (self.num.to_str(), self.den.to_str())

    def to_json(self):
        return {"r": self.frac.r, "s": self.frac.s,
                "num": self.num.to_json(), "den": self.den.to_json()}


def q_matrix(cf):
    """M_q+(a1, ..., a2m): the word R_q^a1 L_q^a2 ... in q-convention.

    Generator powers have closed forms (R_q^a has columns (q^a, 0) and
    ([a]_q, 1); L_q^a has columns (1, 1+...+q^(1-a)) and (0, q^-a)), so
    each continued-fraction entry costs one scalar-polynomial product.
    """
    a_, b_, c_, d_ = ONE, ZERO, ZERO, ONE
    for i, a in enumerate(cf.a):
        if i % 2 == 0:
            qa = q_integer(a)
            a_, b_ = a_.shift(a), a_ * qa + b_
            c_, d_ = c_.shift(a), c_ * qa + d_
        else:
            x = q_integer(a).shift(1 - a)   # 1 + q^-1 + ... + q^(1-a)
            a_, b_ = a_ + b_ * x, b_.shift(-a)
            c_, d_ = c_ + d_ * x, d_.shift(-a)
    return QMatrix2(a_, b_, c_, d_, "q")


def q_deform(x):
    """The q-analog of a positive fraction, from the first column of the
    deformed continued-fraction matrix."""
    if x.is_infinite():
        from .cfrac import Infinite
        raise Infinite("no q-analog of infinity as a QRational")
    if not x.is_positive():
        raise NonPositive("q_deform defined for positive fractions")
    m = q_matrix(to_even_cf(x))
    num, den = _normalize_pair(m.a, m.c)
    return QRational(x, num, den)


def q_integer(n):
    """[n]_q: 1 + q + ... + q^(n-1) for n >= 1; -q^-1 - ... - q^-n for
    n <= -1; 0 for n = 0."""
    if n == 0:
        return ZERO
    if n > 0:
        return LaurentPoly(0, (1,) * n)
    return LaurentPoly(n, (-1,) * (-n))


def reflect(x):
    """The q-analog of s/r from that of r/s: swap and invert the variable."""
    if x.frac.r <= 0:
        raise ZeroNumerator("reflection needs a positive numerator")
    num, den = _normalize_pair(x.den.invert_variable(),
                               x.num.invert_variable())
    return QRational(x.frac.inverse(), num, den)


def mirror_negate(x):
    """Numerator/denominator pair of the q-analog of -r/s:
    (-num(q^-1), q*den(q^-1)), normalized like a QRational pair."""
    return _normalize_pair(-x.num.invert_variable(),
                           x.den.invert_variable().shift(1))


def q_one_over_n(n):
    """Closed form of the q-analog of 1/n: q^(n-1)(1-q)/(1-q^n), with the
    common (1-q) factor cancelled."""
    if n < 1:
        raise ValueError("n must be >= 1")
    one_minus_q = ONE - Q
    num = one_minus_q.shift(n - 1)
    den = ONE - Q ** n
    num = num.exact_divide(one_minus_q)
    den = den.exact_divide(one_minus_q)
    num, den = _normalize_pair(num, den)
    return QRational(Frac(1, n), num, den)


def jones(x):
    """Normalized Jones polynomial of the two-bridge knot of a positive
    fraction: q*num + (1-q)*den."""
    qr = q_deform(x)
    return Q * qr.num + (ONE - Q) * qr.den


def burau_column_check(word, expected, column=0):
    """Check that a column of the Burau matrix of `word`, moved to the
    q-convention and normalized, realizes the q-analog of `expected`.

    column 0 is (a, c), column 1 is (b, d).  Infinity (1/0) matches a
    column whose denominator entry is identically zero and whose
    numerator is a monomial.
    """
    m = rho3(word).to_q_convention()
    num, den = (m.a, m.c) if column == 0 else (m.b, m.d)
    if expected.is_infinite():
        return den.is_zero() and num.is_monomial()
    if den.is_zero():
        return False
    num, den = _normalize_pair(num, den)
    qr = q_deform(expected)
    return num == qr.num and den == qr.den

"""Exact Laurent polynomial arithmetic over arbitrary-precision integers.

A Laurent polynomial is stored as (low, coeffs): coeffs[i] is the integer
coefficient of the exponent low + i.  The zero polynomial is (0, ()).  All
constructors trim, so structural equality coincides with mathematical
equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as _QQ


class DivisionByZero(ZeroDivisionError):
    pass


class NotDivisible(ArithmeticError):
    """Exact division requested but the remainder is nonzero."""


class ZeroWithNegativeExponent(ZeroDivisionError):
    """Evaluation at 0 of a polynomial with negative exponents."""


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in one formal variable.

    Immutable; every arithmetic result is returned in trimmed form
    (first and last stored coefficients nonzero, or empty for 0).
    """

    low: int
    coeffs: tuple

    # -- construction -------------------------------------------------

    @staticmethod
    def make(low, coeffs):
        """Build a trimmed LaurentPoly from any coefficient sequence."""
        coeffs = list(coeffs)
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            return LaurentPoly(0, ())
        return LaurentPoly(low + lo, tuple(coeffs[lo:hi]))

    @staticmethod
    def zero():
        return LaurentPoly(0, ())

    @staticmethod
    def one():
        return LaurentPoly(0, (1,))

    @staticmethod
    def const(n):
        return LaurentPoly.make(0, (n,))

    @staticmethod
    def monomial(k, c=1):
        """c * q^k"""
        return LaurentPoly.make(k, (c,))

    @staticmethod
    def var():
        """The variable itself, q."""
        return LaurentPoly(1, (1,))

    # -- basic queries ------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    @property
    def high(self):
        """Exponent of the highest term (only meaningful if nonzero)."""
        return self.low + len(self.coeffs) - 1

    def coeff(self, k):
        """Coefficient of q^k."""
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_monomial(self):
        return len(self.coeffs) == 1

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly.make(lo, out)

    def __neg__(self):
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly.make(self.low + other.low, out)

    def shift(self, k):
        """Multiply by q^k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.low + k, self.coeffs)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- substitutions ------------------------------------------------

    def invert_variable(self):
        """Substitute q -> q^-1 (coefficient sequence reversed)."""
        if self.is_zero():
            return self
        return LaurentPoly(-(self.low + len(self.coeffs) - 1),
                           tuple(reversed(self.coeffs)))

    def negate_variable(self):
        """Substitute q -> -q: coefficient at exponent k picks up (-1)^k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.low,
                           tuple(c if (self.low + i) % 2 == 0 else -c
                                 for i, c in enumerate(self.coeffs)))

    # -- evaluation ---------------------------------------------------

    def eval_at_one(self):
        """Exact integer value at q = 1 (sum of coefficients)."""
        return sum(self.coeffs)

    def eval_complex(self, z):
        """Evaluate at a complex point by Horner on the stripped part."""
        z = complex(z)
        if self.is_zero():
            return 0j
        if z == 0 and self.low < 0:
            raise ZeroWithNegativeExponent(
                "evaluation at 0 with negative exponents present")
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc * z ** self.low

    def eval_exact(self, x):
        """Evaluate exactly at a rational (fractions.Fraction) point."""
        x = _QQ(x)
        if x == 0 and self.low < 0:
            raise ZeroWithNegativeExponent(
                "evaluation at 0 with negative exponents present")
        acc = _QQ(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x ** self.low

    # -- division -----------------------------------------------------

    def exact_divide(self, d):
        """Quotient self / d in the Laurent ring, if it is exact.

        Raises NotDivisible when the division leaves a remainder or a
        non-integer quotient coefficient; DivisionByZero when d = 0.
        """
        if d.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        # Divide the stripped ordinary polynomials over Q, then check
        # the quotient is integral and the remainder vanishes.
        num = [_QQ(c) for c in self.coeffs]
        den = [_QQ(c) for c in d.coeffs]
        if len(num) < len(den):
            raise NotDivisible("degree of dividend below degree of divisor")
        quot = [_QQ(0)] * (len(num) - len(den) + 1)
        rem = num[:]
        for i in range(len(quot) - 1, -1, -1):
            q = rem[i + len(den) - 1] / den[-1]
            quot[i] = q
            if q:
                for j, dc in enumerate(den):
                    rem[i + j] -= q * dc
        if any(rem):
            raise NotDivisible("nonzero remainder")
        if any(q.denominator != 1 for q in quot):
            raise NotDivisible("non-integer quotient coefficients")
        return LaurentPoly.make(self.low - d.low, [int(q) for q in quot])

    # -- coefficient predicates ---------------------------------------

    def is_palindromic(self):
        """True iff the trimmed coefficient sequence equals its reversal."""
        return self.coeffs == tuple(reversed(self.coeffs))

    def is_unimodal(self):
        """True iff the coefficients weakly rise then weakly fall."""
        cs = self.coeffs
        i = 1
        while i < len(cs) and cs[i - 1] <= cs[i]:
            i += 1
        while i < len(cs) and cs[i - 1] >= cs[i]:
            i += 1
        return i >= len(cs)

    def is_positive(self):
        """True iff nonzero and every stored coefficient is > 0."""
        return bool(self.coeffs) and all(c > 0 for c in self.coeffs)

    # -- rendering ----------------------------------------------------

    def to_str(self, var="q"):
        """Render terms in increasing exponent order, e.g. 'q^-2 + 2*q^-1 + 1'."""
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            k = self.low + i
            if k == 0:
                term = str(abs(c))
            else:
                v = var if k == 1 else "%s^%d" % (var, k)
                term = v if abs(c) == 1 else "%d*%s" % (abs(c), v)
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __str__(self):
        return self.to_str()

    def to_json(self):
        """JSON form with coefficients as decimal strings (big-int safe)."""
        return {"low": self.low, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj):
        return LaurentPoly.make(int(obj["low"]),
                                [int(c) for c in obj["coeffs"]])


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
Q = LaurentPoly.var()

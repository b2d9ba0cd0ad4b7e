"""Classification of complex specializations of the 2x2 Burau
representation, the word problem in B3 via its faithfulness, the
triangular-subgroup decomposition, and Alexander polynomials.

The classifier decides the easy exact cases (center, roots of unity,
negative reals, outside the proven annulus) and otherwise searches the
singular set by scanning denominators of q-analogs up to a denominator
bound.  A missing witness is reported as such, never as a faithfulness
verdict: the singular set is an infinite union and the search is only a
semi-decision.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction as _QQ

from .laurent import LaurentPoly, ONE
from .braid import BraidWord, QMatrix2, rho3
from .cfrac import Frac, enumerate_fractions
from .qrational import q_deform
from .rootloc import INNER_PROVEN, OUTER_PROVEN

ANNULUS_MARGIN = 1e-9
WITNESS_TOL = 1e-8


class ZeroInput(ValueError):
    pass


class InconsistentDecomposition(ArithmeticError):
    """Verification product mismatch in the triangular decomposition."""


# ---------------------------------------------------------------------------
# Specialization points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootOfUnity:
    """t0 = exp(2*pi*i*k/n), given exactly."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 2 or not (1 <= self.k < self.n):
            raise ValueError("need n >= 2 and 1 <= k < n")

    def value(self):
        return cmath.exp(2j * math.pi * self.k / self.n)


@dataclass(frozen=True)
class RealValue:
    """Exact rational specialization point."""

    x: _QQ

    def __post_init__(self):
        if self.x == 0:
            raise ZeroInput("specialization point must be nonzero")


@dataclass(frozen=True)
class ComplexValue:
    """Floating-point specialization point (no exactness assumed)."""

    z: complex

    def __post_init__(self):
        z = self.z
        if z == 0:
            raise ZeroInput("specialization point must be nonzero")
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError("specialization point must be finite")


def parse_point(text):
    """Parse '-1', '1/2', '0.5+0.2i', 'zeta(5,1)' into a specialization point."""
    text = text.strip()
    if text.startswith("zeta(") and text.endswith(")"):
        n, k = (int(v) for v in text[5:-1].split(","))
        return RootOfUnity(n, k)
    try:
        return RealValue(_QQ(text))
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return ComplexValue(complex(text.replace("i", "j")))
    except ValueError:
        raise ValueError("cannot parse specialization point %r" % text)


# ---------------------------------------------------------------------------
# Verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    kind: str                    # one of the KIND_* constants below
    witness_frac: object = None  # Frac, for pole witnesses
    root: complex = None         # confirmed nearby denominator root
    max_den: int = None          # for NoWitnessUpTo

    def is_faithful(self):
        return self.kind in (FAITHFUL_OUTSIDE_ANNULUS, FAITHFUL_NEGATIVE_REAL)

    def to_json(self):
        out = {"verdict": self.kind}
        if self.witness_frac is not None:
            out["witness"] = {"r": self.witness_frac.r, "s": self.witness_frac.s}
        if self.root is not None:
            out["root"] = [self.root.real, self.root.imag]
        if self.max_den is not None:
            out["max_den"] = self.max_den
        return out


UNFAITHFUL_CENTER = "UnfaithfulCenter"
UNFAITHFUL_ROOT_OF_UNITY = "UnfaithfulRootOfUnityPole"
UNFAITHFUL_POLE_WITNESS = "UnfaithfulPoleWitness"
FAITHFUL_OUTSIDE_ANNULUS = "FaithfulOutsideAnnulus"
FAITHFUL_NEGATIVE_REAL = "FaithfulNegativeReal"
NO_WITNESS_UP_TO = "NoWitnessUpTo"


def _as_complex(t0):
    if isinstance(t0, RootOfUnity):
        return t0.value()
    if isinstance(t0, RealValue):
        return complex(t0.x)
    return complex(t0.z)


def classify_specialization(t0, max_den=40):
    """Faithfulness verdict for the Burau representation at t0.

    Exact branches first (center, roots of unity, negative reals,
    modulus outside the proven annulus), then a pole search over
    q-analog denominators up to max_den.  NoWitnessUpTo means only that
    the bounded search found nothing.
    """
    if max_den < 2:
        raise ValueError("max_den must be >= 2")

    # (1) the center collapses at t0 = -1
    if isinstance(t0, RealValue) and t0.x == -1:
        return Verdict(UNFAITHFUL_CENTER)
    if isinstance(t0, RootOfUnity) and t0.n == 2 * t0.k:
        return Verdict(UNFAITHFUL_CENTER)
    if isinstance(t0, ComplexValue) and t0.z == -1:
        return Verdict(UNFAITHFUL_CENTER)

    # (2) exact root of unity: -t0 is a primitive d-th root of unity,
    # hence a pole of the q-analog of 1/d
    if isinstance(t0, RootOfUnity):
        # -t0 = exp(2*pi*i*(2k+n)/(2n))
        g = math.gcd(2 * t0.k + t0.n, 2 * t0.n)
        d = 2 * t0.n // g
        root = -t0.value()
        return Verdict(UNFAITHFUL_ROOT_OF_UNITY, witness_frac=Frac(1, d),
                       root=root)

    # (3) exact negative real, not -1: positivity of the q-analog
    # coefficients keeps every denominator nonzero at -t0 > 0
    if isinstance(t0, RealValue) and t0.x < 0:
        return Verdict(FAITHFUL_NEGATIVE_REAL)

    z0 = _as_complex(t0)

    # (4) outside the proven annulus
    if abs(z0) < INNER_PROVEN - ANNULUS_MARGIN or \
            abs(z0) > OUTER_PROVEN + ANNULUS_MARGIN:
        return Verdict(FAITHFUL_OUTSIDE_ANNULUS)

    # (5) bounded search of the singular set at q0 = -t0
    q0 = -z0
    for frac in enumerate_fractions(max_den):
        den = q_deform(frac).den
        if len(den.coeffs) <= 1:
            continue
        scale = max(abs(c) for c in den.coeffs) * len(den.coeffs)
        if abs(den.eval_complex(q0)) / scale < WITNESS_TOL:
            confirmed = _newton_confirm(den, q0)
            if confirmed is not None:
                return Verdict(UNFAITHFUL_POLE_WITNESS, witness_frac=frac,
                               root=confirmed)
    return Verdict(NO_WITNESS_UP_TO, max_den=max_den)


def _newton_confirm(den, q0, steps=50):
    """Newton-refine q0 to a nearby root of den; None if it drifts away."""
    dcoeffs = [(den.low + i) * c for i, c in enumerate(den.coeffs)]
    deriv = LaurentPoly.make(den.low - 1, dcoeffs)
    z = q0
    for _ in range(steps):
        dv = deriv.eval_complex(z)
        if dv == 0:
            return None
        step = den.eval_complex(z) / dv
        z -= step
        if abs(step) < 1e-14 * (1 + abs(z)):
            break
    scale = max(abs(c) for c in den.coeffs) * len(den.coeffs)
    if abs(den.eval_complex(z)) / scale < 1e-12 and abs(z - q0) < 1e-4:
        return z
    return None


# ---------------------------------------------------------------------------
# Word problem and subgroup decomposition
# ---------------------------------------------------------------------------

def is_trivial_braid(word):
    """True iff the Burau matrix is exactly the identity; faithfulness of
    the representation makes this the word problem in B3."""
    return rho3(word) == QMatrix2.identity("t")


def braids_equal(w1, w2):
    return rho3(w1) == rho3(w2)


Z_WORD = BraidWord((1, 2, 1, 2, 1, 2))      # the central element (s1 s2)^3


def sigma1_z_word(k, m):
    """The braid word sigma1^k z^m as generator letters."""
    part1 = (1,) * k if k >= 0 else (-1,) * (-k)
    zpart = Z_WORD.letters if m >= 0 else Z_WORD.inverse().letters
    return BraidWord(part1 + zpart * abs(m))


def triangular_decompose(word):
    """If the lower-left Burau entry vanishes identically, express the
    braid as sigma1^k z^m and return (k, m); otherwise return None.

    k is read off the unipotent part of the t = -1 specialization, m from
    the determinant exponent e = k + 6m; the decomposition is verified by
    an exact matrix comparison.
    """
    mat = rho3(word)
    if not mat.c.is_zero():
        return None
    e = word.exponent_sum()
    # at t = -1 the matrix is (-1)^m [[1, k], [0, 1]]
    a_val = int(mat.a.eval_exact(_QQ(-1)))
    b_val = int(mat.b.eval_exact(_QQ(-1)))
    if abs(a_val) != 1:
        raise InconsistentDecomposition("diagonal at t=-1 is not +-1")
    k = b_val * a_val
    if (e - k) % 6 != 0:
        raise InconsistentDecomposition("determinant exponent mismatch")
    m = (e - k) // 6
    if rho3(sigma1_z_word(k, m)) != mat:
        raise InconsistentDecomposition(
            "verification product differs for (k,m)=(%d,%d)" % (k, m))
    return (k, m)


# ---------------------------------------------------------------------------
# Alexander polynomial
# ---------------------------------------------------------------------------

_ALEX_DIVISOR = LaurentPoly(0, (1, 1, 1))   # 1 + t + t^2


def alexander(word):
    """Alexander polynomial of the closure of a 3-braid, via
    det(I - rho3) divided by 1 + t + t^2, normalized to lowest exponent 0
    with positive lowest coefficient."""
    mat = rho3(word)
    ident = QMatrix2.identity("t")
    diff = QMatrix2(ident.a - mat.a, ident.b - mat.b,
                    ident.c - mat.c, ident.d - mat.d, "t")
    quot = diff.det().exact_divide(_ALEX_DIVISOR)
    if quot.is_zero():
        return quot
    quot = quot.shift(-quot.low)
    if quot.coeffs[0] < 0:
        quot = -quot
    return quot

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qburau.laurent import LaurentPoly, ONE, ZERO
from qburau.braid import BraidWord
from qburau.cfrac import Frac, NonPositive
from qburau.qrational import (ZeroNumerator, burau_column_check, jones,
                              mirror_negate, q_deform, q_integer,
                              q_one_over_n, reflect)


def P(low, *coeffs):
    return LaurentPoly.make(low, coeffs)


class TestQDeform:
    def test_two(self):
        qr = q_deform(Frac(2, 1))
        assert (qr.num, qr.den) == (P(0, 1, 1), ONE)

    def test_one_half(self):
        qr = q_deform(Frac(1, 2))
        assert (qr.num, qr.den) == (P(1, 1), P(0, 1, 1))

    def test_two_thirds(self):
        qr = q_deform(Frac(2, 3))
        assert (qr.num, qr.den) == (P(1, 1, 1), P(0, 1, 1, 1))

    def test_five_thirds(self):
        qr = q_deform(Frac(5, 3))
        assert (qr.num, qr.den) == (P(0, 1, 1, 2, 1), P(0, 1, 1, 1))

    def test_rejects_nonpositive(self):
        with pytest.raises(NonPositive):
            q_deform(Frac(-1, 2))

    def test_specializes_at_one(self):
        for r in range(1, 25):
            for s in range(1, 25):
                if math.gcd(r, s) != 1:
                    continue
                qr = q_deform(Frac(r, s))
                assert qr.num.eval_at_one() == r
                assert qr.den.eval_at_one() == s
                assert qr.den.low == 0 and qr.den.coeffs[0] == 1


class TestQInteger:
    def test_positive(self):
        assert q_integer(3) == P(0, 1, 1, 1)

    def test_negative(self):
        assert q_integer(-2) == P(-2, -1, -1)

    def test_zero(self):
        assert q_integer(0) == ZERO

    def test_matches_q_deform(self):
        for n in range(1, 20):
            qr = q_deform(Frac(n, 1))
            assert qr.num == q_integer(n) and qr.den == ONE


class TestReflect:
    def test_known_pair(self):
        assert reflect(q_deform(Frac(2, 3))).num == P(0, 1, 1, 1)
        assert reflect(q_deform(Frac(2, 3))).den == P(0, 1, 1)
        two = q_deform(Frac(2, 1))
        assert (reflect(two).num, reflect(two).den) == (P(1, 1), P(0, 1, 1))

    def test_involution(self):
        x = q_deform(Frac(7, 5))
        y = reflect(reflect(x))
        assert (y.num, y.den, y.frac) == (x.num, x.den, x.frac)

    @given(st.integers(1, 40), st.integers(1, 40))
    @settings(max_examples=150)
    def test_matches_direct_deformation(self, r, s):
        x = Frac.of(r, s)
        direct = q_deform(x.inverse())
        via = reflect(q_deform(x))
        assert (via.num, via.den) == (direct.num, direct.den)


class TestMirror:
    def test_minus_one(self):
        num, den = mirror_negate(q_deform(Frac(1, 1)))
        assert (num, den) == (P(-1, -1), ONE)

    def test_minus_two(self):
        num, den = mirror_negate(q_deform(Frac(2, 1)))
        assert (num, den) == (P(-2, -1, -1), ONE)

    def test_specialization(self):
        num, den = mirror_negate(q_deform(Frac(5, 3)))
        assert num.eval_at_one() == -5 and den.eval_at_one() == 3


class TestOneOverN:
    def test_small(self):
        assert (q_one_over_n(1).num, q_one_over_n(1).den) == (ONE, ONE)
        assert (q_one_over_n(2).num, q_one_over_n(2).den) == (P(1, 1), P(0, 1, 1))
        assert (q_one_over_n(3).num, q_one_over_n(3).den) == (P(2, 1), P(0, 1, 1, 1))

    def test_matches_q_deform(self):
        for n in range(1, 51):
            closed = q_one_over_n(n)
            direct = q_deform(Frac(1, n))
            assert (closed.num, closed.den) == (direct.num, direct.den)

    def test_rejects(self):
        with pytest.raises(ValueError):
            q_one_over_n(0)


class TestJones:
    def test_trefoil(self):
        assert jones(Frac(3, 1)) == P(0, 1, 0, 1, 1)

    def test_unknot(self):
        assert jones(Frac(1, 1)) == ONE

    def test_five_halves(self):
        assert jones(Frac(5, 2)) == P(0, 1, 1, 1, 1, 1)


class TestBurauColumnCheck:
    def test_alternating_word_column(self):
        w = BraidWord.parse("aBaB")
        assert burau_column_check(w, Frac(5, 3))
        assert burau_column_check(w, Frac(3, 2), column=1)
        assert not burau_column_check(w, Frac(2, 3))

    def test_identity_infinity(self):
        assert burau_column_check(BraidWord(()), Frac(1, 0))


class TestPositivityUnimodality:
    def test_range(self):
        for r in range(1, 31):
            for s in range(1, r + 1):
                if math.gcd(r, s) != 1:
                    continue
                qr = q_deform(Frac(r, s))
                assert qr.num.is_positive() and qr.den.is_positive()
                assert qr.num.is_unimodal() and qr.den.is_unimodal()

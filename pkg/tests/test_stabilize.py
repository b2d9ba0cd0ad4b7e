import math

import pytest

from qburau.cfrac import Frac
from qburau.qrational import q_deform
from qburau.stabilize import (GOLDEN, NonUnitConstantTerm, PeriodicCF,
                              PowerSeries, agreement_orders, convergent,
                              radius_estimate, stabilized_series, taylor)


class TestTaylor:
    def test_three_halves(self):
        # long division of (1+q+q^2) by (1+q)
        assert taylor(q_deform(Frac(3, 2)), 6).coeffs == (1, 0, 1, -1, 1, -1)

    def test_polynomial_case(self):
        assert taylor(q_deform(Frac(2, 1)), 4).coeffs == (1, 1, 0, 0)

    def test_five_thirds(self):
        assert taylor(q_deform(Frac(5, 3)), 5).coeffs == (1, 0, 1, 0, -1)

    def test_reconstruction_identity(self):
        # series * den == num modulo q^order, exactly
        for frac in (Frac(8, 5), Frac(13, 8), Frac(7, 3)):
            qr = q_deform(frac)
            order = 25
            series = taylor(qr, order)
            for k in range(order):
                acc = sum(series.coeffs[j] * qr.den.coeff(k - j)
                          for j in range(k + 1))
                assert acc == qr.num.coeff(k)


class TestConvergent:
    def test_golden(self):
        assert convergent(GOLDEN, 2) == Frac(2, 1)
        assert convergent(GOLDEN, 5) == Frac(8, 5)

    def test_sqrt2_like(self):
        x = PeriodicCF((1,), (2,))
        assert convergent(x, 3) == Frac(7, 5)

    def test_rejects(self):
        with pytest.raises(ValueError):
            convergent(GOLDEN, 0)


class TestPeriodicCF:
    def test_terms(self):
        assert PeriodicCF((1,), (2,)).terms(4) == [1, 2, 2, 2]
        assert GOLDEN.terms(3) == [1, 1, 1]

    def test_invalid(self):
        with pytest.raises(ValueError):
            PeriodicCF((), ())
        with pytest.raises(ValueError):
            PeriodicCF((), (0,))


class TestStabilizedSeries:
    def test_golden_order3(self):
        series, _ = stabilized_series(GOLDEN, 3)
        assert series.coeffs == (1, 0, 1)

    def test_prefix_consistency(self):
        short, _ = stabilized_series(GOLDEN, 6)
        long, _ = stabilized_series(GOLDEN, 12)
        assert long.coeffs[:6] == short.coeffs

    def test_agreement_orders_monotone(self):
        orders = agreement_orders(GOLDEN, 20)
        assert all(a <= b for a, b in zip(orders, orders[1:]))

    def test_other_quadratic_irrationals(self):
        for cf in (PeriodicCF((), (2,)), PeriodicCF((), (1, 2)),
                   PeriodicCF((1, 2), (3,))):
            series, m = stabilized_series(cf, 8)
            assert series.order == 8 and m <= 50


class TestRadiusEstimate:
    def test_golden_limit(self):
        target = (3 - math.sqrt(5)) / 2
        assert abs(radius_estimate(GOLDEN, 18) - target) <= 0.01 * target

    def test_early_convergent(self):
        assert abs(radius_estimate(GOLDEN, 3) - 1.0) < 1e-9

    def test_conjectured_lower_bound(self):
        floor = 0.381966 - 0.01
        for cf in (GOLDEN, PeriodicCF((), (2,)), PeriodicCF((), (1, 2)),
                   PeriodicCF((1,), (2,)), PeriodicCF((2, 1), (1,))):
            assert radius_estimate(cf, 18) >= floor

    def test_rejects(self):
        with pytest.raises(ValueError):
            radius_estimate(GOLDEN, 1)


class TestPowerSeriesRendering:
    def test_str(self):
        assert str(PowerSeries((1, 0, 1, -1))) == "1 + q^2 - q^3"

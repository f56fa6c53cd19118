import random
from fractions import Fraction

import pytest

from cameral_cubic.poly import Poly
from cameral_cubic.scalars import QuadExt
from cameral_cubic.series import (
    DEFAULT_ORDER,
    LocalDifferential,
    TruncSeries,
    TruncationError,
)

F = Fraction


def terms(*pairs):
    return TruncSeries.from_terms(pairs)


def series_of_poly(p: Poly, var: str = "t") -> TruncSeries:
    return TruncSeries(0, [F(c) for c in p.coeffs], None, var)


def rand_laurent(rng, lo, hi, var="t"):
    pairs = [(k, F(rng.randint(-4, 4), rng.randint(1, 3))) for k in range(lo, hi + 1)]
    return TruncSeries.from_terms(pairs, None, var)


class TestWindows:
    def test_constructor_normalizes(self):
        s = TruncSeries(0, [F(0), F(2), F(0)], None)
        assert s.lead == 1 and s.coeffs == [F(2)]
        t = TruncSeries(0, [F(0), F(2), F(0)], 3)
        assert t.lead == 1 and t.coeffs == [F(2), F(0)]
        assert TruncSeries(2, [], 2).is_zero

    def test_coeff_inside_and_outside_window(self):
        s = terms((1, F(1)), (3, F(5))).truncate_to(4)
        assert s.coeff(3) == 5
        assert s.coeff(0) == 0
        assert s.coeff(-7) == 0
        with pytest.raises(TruncationError):
            s.coeff(4)

    def test_exact_series_have_no_window(self):
        s = terms((1, F(1)), (3, F(5)))
        assert s.coeff(100) == 0

    def test_truncate_only_shrinks(self):
        s = terms((0, F(1)), (1, F(1))).truncate_to(5)
        assert s.truncate_to(9).trunc == 5
        assert s.truncate_to(3).trunc == 3

    def test_product_window_is_pessimistic(self):
        a = terms((0, F(1)), (1, F(1))).truncate_to(4)
        b = terms((0, F(1)), (1, F(-1))).truncate_to(4)
        assert (a * b).trunc == 4
        shifted = terms((2, F(1))) * a
        assert shifted.trunc == 6

    def test_mismatched_window_length_rejected(self):
        with pytest.raises(ValueError):
            TruncSeries(0, [F(1)], 5)


class TestRingOps:
    def test_ring_axioms_random(self):
        rng = random.Random(101)
        for _ in range(15):
            a = rand_laurent(rng, -2, 3)
            b = rand_laurent(rng, -1, 3)
            c = rand_laurent(rng, 0, 3)
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_reciprocal_of_unit(self):
        r = terms((0, F(1)), (1, F(1))).reciprocal()
        expected = TruncSeries.from_terms(
            [(k, F((-1) ** k)) for k in range(r.trunc)], r.trunc
        )
        assert r == expected
        one = terms((0, F(1)), (1, F(1))) * r
        assert one.agrees_with(TruncSeries.constant(F(1)))

    def test_reciprocal_of_laurent_series(self):
        r = terms((2, F(1)), (3, F(1))).reciprocal()
        assert r.lead == -2
        assert r.coeff(-2) == 1
        assert r.coeff(-1) == -1
        assert r.coeff(0) == 1

    def test_division_geometric_series(self):
        q = TruncSeries.constant(F(1)) / terms((0, F(1)), (1, F(-1)))
        for k in range(DEFAULT_ORDER):
            assert q.coeff(k) == 1

    def test_power_and_negative_power(self):
        s = terms((1, F(2)))
        assert (s ** 3).coeff(3) == 8
        assert (s ** -2).coeff(-2) == F(1, 4)

    def test_derivative_and_shift(self):
        s = terms((-1, F(3)), (2, F(5)))
        d = s.derivative()
        assert d.coeff(-2) == -3 and d.coeff(1) == 10
        assert s.shift(2).coeff(1) == 3
        assert s.shift(2).shift(-2) == s

    def test_parity_helpers(self):
        s = terms((-1, F(1)), (0, F(2)), (1, F(3)), (2, F(4)))
        assert s.even_part() + s.odd_part() == s
        assert s.flip_sign() == s.even_part() - s.odd_part()
        assert s.flip_sign().flip_sign() == s


class TestCompose:
    def test_polynomial_substitution(self):
        outer = terms((0, F(1)), (2, F(1)))
        inner = TruncSeries.from_terms([(1, F(2)), (2, F(1))], None, "w")
        got = outer.compose(inner)
        # 1 + (2w + w^2)^2
        assert got == TruncSeries.from_terms(
            [(0, F(1)), (2, F(4)), (3, F(4)), (4, F(1))], None, "w"
        )

    def test_laurent_outer(self):
        outer = terms((-1, F(1)), (1, F(1)))
        inner = TruncSeries.from_terms([(1, F(2))], None, "w")
        got = outer.compose(inner)
        assert got.coeff(-1) == F(1, 2)
        assert got.coeff(1) == 2

    def test_identity_round_trips(self):
        rng = random.Random(55)
        ident = TruncSeries.monomial(1, F(1))
        for _ in range(8):
            s = terms(
                (1, F(rng.choice([1, 2, -1]))),
                (2, F(rng.randint(-3, 3))),
                (3, F(rng.randint(-3, 3))),
            )
            w = s.invert()
            assert s.compose(w).agrees_with(ident, upto=w.trunc)
            assert w.compose(s).agrees_with(ident, upto=w.trunc)

    def test_zero_inner_rejected(self):
        with pytest.raises(ValueError):
            terms((0, F(1)), (1, F(1))).compose(TruncSeries.zero())


class TestInvert:
    def test_catalan_reversion(self):
        w = terms((1, F(1)), (2, F(1))).invert()
        catalan = [1, -1, 2, -5, 14, -42, 132, -429, 1430]
        for k, c in enumerate(catalan, start=1):
            assert w.coeff(k) == c

    def test_odd_reversion(self):
        w = terms((1, F(1)), (3, F(-1))).invert()
        expected = {1: 1, 3: 1, 5: 3, 7: 12, 9: 55}
        for k in range(1, min(w.trunc, 10)):
            assert w.coeff(k) == expected.get(k, 0)

    def test_linear_case(self):
        assert terms((1, F(2))).invert().agrees_with(TruncSeries.monomial(1, F(1, 2)))

    def test_wrong_valuation_rejected(self):
        with pytest.raises(ValueError):
            terms((0, F(1)), (1, F(1))).invert()
        with pytest.raises(ValueError):
            terms((2, F(1))).invert()


class TestSqrt:
    def test_binomial_frozen_coefficients(self):
        # sqrt(2 + s) = sqrt(2) * (1 + s/4 - s^2/32 + s^3/128 - 5 s^4/2048 + 7 s^5/8192 - ...)
        r = terms((0, F(2)), (1, F(1))).sqrt()
        expected = [F(1), F(1, 4), F(-1, 32), F(1, 128), F(-5, 2048), F(7, 8192)]
        for k, c in enumerate(expected):
            assert r.coeff(k) == QuadExt(F(0), c, F(2))
        assert (r * r).agrees_with(terms((0, F(2)), (1, F(1))))

    def test_perfect_square_monomial(self):
        assert TruncSeries.monomial(2, F(4)).sqrt().agrees_with(TruncSeries.monomial(1, F(2)))

    def test_square_then_root_round_trip(self):
        rng = random.Random(77)
        for _ in range(6):
            s = terms(
                (0, F(rng.choice([1, 4, 9, 2, 3]))),
                (1, F(rng.randint(-3, 3))),
                (2, F(rng.randint(-3, 3), 2)),
            )
            r = s.sqrt()
            assert (r * r).agrees_with(s, upto=DEFAULT_ORDER)

    def test_odd_leading_order_rejected(self):
        with pytest.raises(ValueError):
            terms((1, F(1))).sqrt()


class TestCoordinateInvariance:
    def _charts(self):
        rng = random.Random(113)
        for _ in range(10):
            c = F(rng.choice([1, 2, -1, 3]), rng.choice([1, 2]))
            a = F(rng.randint(-3, 3), rng.randint(1, 2))
            b = F(rng.randint(-3, 3), rng.randint(1, 2))
            yield rng, TruncSeries.from_terms([(1, c), (2, a), (3, b)], None, "w")

    def test_residue_is_chart_free(self):
        for rng, chart in self._charts():
            f = rand_laurent(rng, -1, 4)
            pulled = f.compose(chart) * chart.derivative()
            assert pulled.coeff(-1) == f.coeff(-1)

    def test_quadratic_residue_is_chart_free_for_double_poles(self):
        for rng, chart in self._charts():
            g = rand_laurent(rng, -2, 4)
            pulled = g.compose(chart) * chart.derivative() ** 2
            assert pulled.coeff(-2) == g.coeff(-2)

    def test_triple_pole_quadratic_coefficient_is_not_chart_free(self):
        # the guard in quadratic_residue exists because this fails
        g = terms((-3, F(1)))
        chart = TruncSeries.from_terms([(1, F(1)), (2, F(1))], None, "w")
        pulled = g.compose(chart) * chart.derivative() ** 2
        assert pulled.coeff(-2) != g.coeff(-2)


class TestResidueTheorem:
    def test_split_rational_function_residues_sum_to_zero(self):
        rng = random.Random(131)
        pool = [F(n, d) for n in range(-5, 6) for d in (1, 2, 3)]
        for _ in range(6):
            roots = rng.sample(sorted(set(pool)), 4)
            den = Poly([F(1)], "z")
            for r in roots:
                den = den * Poly([-r, F(1)], "z")
            num = Poly([F(rng.randint(-4, 4)) for _ in range(3)], "z")  # deg <= 2 = deg den - 2
            total = F(0)
            for r in roots:
                dshift = den.shifted(r)
                nshift = num.shifted(r)
                local = series_of_poly(nshift) * series_of_poly(dshift).reciprocal(4)
                res = local.coeff(-1)
                assert res == num(r) / den.derivative()(r)
                total += res
            assert total == 0


class TestLocalDifferential:
    def test_weights_add_under_multiplication(self):
        a = LocalDifferential(terms((-1, F(1))), 1)
        b = LocalDifferential(terms((1, F(3))), 1)
        assert (a * b).weight == 2
        assert (a * b).series.coeff(0) == 3

    def test_weight_mismatch_rejected_for_addition(self):
        a = LocalDifferential(terms((0, F(1))), 1)
        b = LocalDifferential(terms((0, F(1))), 2)
        with pytest.raises(ValueError):
            a + b

    def test_residue_requires_weight_one(self):
        assert LocalDifferential(terms((-1, F(7))), 1).residue() == 7
        with pytest.raises(ValueError):
            LocalDifferential(terms((-1, F(7))), 2).residue()

    def test_quadratic_residue_rejects_deep_poles(self):
        assert LocalDifferential(terms((-2, F(5))), 2).quadratic_residue() == 5
        with pytest.raises(ValueError):
            LocalDifferential(terms((-3, F(1))), 2).quadratic_residue()
        with pytest.raises(ValueError):
            LocalDifferential(terms((-2, F(5))), 1).quadratic_residue()

    def test_contraction_lowers_weight(self):
        form = LocalDifferential(terms((-2, F(1))), 2)
        v = terms((1, F(3)))
        got = form.contract(v)
        assert got.weight == 1
        assert got.residue() == 3
        with pytest.raises(ValueError):
            got.contract(v).contract(v)

from fractions import Fraction

import pytest

from cameral_cubic.cover import build_cover
from cameral_cubic.deform import (
    TangentVector,
    discriminant_ratio,
    discriminant_ratio_via_roots,
    ks_cocycle_local,
    ks_field,
    sheet_variation,
)
from cameral_cubic.poly import Poly
from cameral_cubic.series import TruncSeries

F = Fraction

Z = Poly.identity("z")


def sqrt_z_model():
    return build_cover("A", 1, [[0, -1]])


def hyperelliptic_model():
    return build_cover("A", 1, [[1, 0, -1]])


def three_sheet_model():
    return build_cover("A", 2, [[-3], [0, 2]])


class TestTangentVector:
    def test_of_coerces_components(self):
        vec = TangentVector.of([["0", "1"], "2/3"])
        assert vec.rank == 2
        assert vec.components == (Z, Poly([F(2, 3)], "z"))
        assert vec.ascending() == (Poly([F(2, 3)], "z"), Z)

    def test_at_builds_the_deforming_polynomial(self):
        vec = TangentVector.of([[1], [0, 1]])  # b_2 = 1, b_3 = z
        assert vec.at(F(5)) == Poly([F(5), F(1)], "lam")

    def test_linear_structure(self):
        a = TangentVector.of([[1], [2]])
        b = TangentVector.of([[0, 1], [3]])
        assert (a + b).components == (Poly([1, 1], "z"), Poly([F(5)], "z"))
        assert (a - b).components == (Poly([1, -1], "z"), Poly([F(-1)], "z"))
        assert (2 * a).components == (Poly([F(2)], "z"), Poly([F(4)], "z"))

    def test_rank_mismatch_rejected(self):
        with pytest.raises(ValueError):
            TangentVector.of([[1]]) + TangentVector.of([[1], [1]])


class TestSheetVariation:
    def test_sqrt_z_pair_moves_by_half_over_t(self):
        cover = sqrt_z_model()
        var = sheet_variation(cover, cover.branch_points[0], TangentVector.of([[1]]))
        assert var[0].agrees_with(TruncSeries.monomial(-1, F(1, 2)))
        assert var[1].agrees_with(TruncSeries.monomial(-1, F(-1, 2)))

    def test_poles_respect_simple_branching(self):
        cover = three_sheet_model()
        for vec in (TangentVector.of([[1], [0]]), TangentVector.of([[0], [1]]), TangentVector.of([[0, 1], [2, 1]])):
            for bp in cover.branch_points:
                var = sheet_variation(cover, bp, vec)
                assert var[0].known_order >= -1
                assert var[1].known_order >= -1
                assert var[2].known_order >= 0

    def test_variations_sum_to_zero_in_rank_two(self):
        # trace of the deformation vanishes: sum over sheets of b(lam_i)/P'(lam_i)
        # has no constant obstruction at the branch point for b of low degree
        cover = three_sheet_model()
        vec = TangentVector.of([[1], [0, 1]])
        for bp in cover.branch_points:
            var = sheet_variation(cover, bp, vec)
            total = var[0] + var[1] + var[2]
            # partial fractions of b/P over the three sheets reproduces b's
            # effect on c_2: a degree-0 z-derivative, so the t-series is even
            assert total.odd_part().is_zero

    def test_rank_mismatch_rejected(self):
        cover = sqrt_z_model()
        with pytest.raises(ValueError):
            sheet_variation(cover, cover.branch_points[0], TangentVector.of([[1], [1]]))


class TestKsField:
    def test_sqrt_z_unit_direction_gives_one_over_t(self):
        cover = sqrt_z_model()
        v = ks_field(cover, cover.branch_points[0], TangentVector.of([[1]]))
        assert v.agrees_with(TruncSeries.monomial(-1, F(1)))

    def test_matches_the_rank_one_shortcut(self):
        cover = hyperelliptic_model()
        for bp in cover.branch_points:
            for b in (Poly([F(1)], "z"), Z, Z * Z + 1):
                # component b deforms P by -b, i.e. q = -c_2 by +b
                full = ks_field(cover, bp, TangentVector.of([b]))
                local = ks_cocycle_local(-cover.invariants[0], b, bp.z0)
                assert full.agrees_with(local)

    def test_cocycle_frozen_examples(self):
        one_over_t = ks_cocycle_local(Z, Poly([F(1)], "z"), F(0))
        assert one_over_t.agrees_with(TruncSeries.monomial(-1, F(1)))
        t_itself = ks_cocycle_local(Z, Z, F(0))
        assert t_itself.agrees_with(TruncSeries.monomial(1, F(1)))


class TestDiscriminantRatio:
    def test_sqrt_z(self):
        num, den = discriminant_ratio(sqrt_z_model(), TangentVector.of([[1]]))
        assert (num, den) == (Poly([F(1)], "z"), Z)

    def test_hyperelliptic(self):
        num, den = discriminant_ratio(hyperelliptic_model(), TangentVector.of([[1]]))
        assert (num, den) == (Poly([F(1)], "z"), Z * Z - 1)

    def test_three_sheet_first_slot(self):
        num, den = discriminant_ratio(three_sheet_model(), TangentVector.of([[1], [0]]))
        assert (num, den) == (Poly([F(-1)], "z"), Z * Z - 1)

    def test_denominator_is_monic_and_reduced(self):
        cover = hyperelliptic_model()
        num, den = discriminant_ratio(cover, TangentVector.of([[0, 2]]))
        assert den.lead == 1
        from cameral_cubic.poly import poly_gcd

        assert poly_gcd(num, den).degree == 0

    def test_linearity_at_a_sample_point(self):
        cover = three_sheet_model()
        a = TangentVector.of([[1, 1], [2]])
        b = TangentVector.of([[0, 0, 1], [1, 1]])
        x = F(7, 3)
        parts = []
        for vec in (a, b, a + b):
            num, den = discriminant_ratio(cover, vec)
            parts.append(num(x) / den(x))
        assert parts[2] == parts[0] + parts[1]
        num, den = discriminant_ratio(cover, 5 * a)
        n0, d0 = discriminant_ratio(cover, a)
        assert num(x) / den(x) == 5 * n0(x) / d0(x)

    def test_rank_mismatch_rejected(self):
        with pytest.raises(ValueError):
            discriminant_ratio(sqrt_z_model(), TangentVector.of([[1], [0]]))


class TestRootSumRoute:
    def test_sqrt_z_samples(self):
        cover = sqrt_z_model()
        vec = TangentVector.of([[1]])
        assert discriminant_ratio_via_roots(cover, vec, F(9, 4)) == F(4, 9)
        assert discriminant_ratio_via_roots(cover, vec, F(4)) == F(1, 4)

    def test_hyperelliptic_sample(self):
        cover = hyperelliptic_model()
        vec = TangentVector.of([[1]])
        assert discriminant_ratio_via_roots(cover, vec, F(5, 4)) == F(16, 9)

    def test_three_sheet_split_point_agrees_with_the_dual_route(self):
        cover = three_sheet_model()
        z_star = F(-143, 343)
        for vec in (TangentVector.of([[1], [0]]), TangentVector.of([[0], [1]]), TangentVector.of([[1, 2], [0, 1]])):
            num, den = discriminant_ratio(cover, vec)
            assert discriminant_ratio_via_roots(cover, vec, z_star) == num(z_star) / den(z_star)

    def test_reference_value(self):
        cover = three_sheet_model()
        vec = TangentVector.of([[1], [0]])
        assert discriminant_ratio_via_roots(cover, vec, F(-143, 343)) == F(117649, 97200)

    def test_non_split_points_rejected(self):
        cover = sqrt_z_model()
        vec = TangentVector.of([[1]])
        with pytest.raises(ValueError):
            discriminant_ratio_via_roots(cover, vec, F(2))  # sheets +-sqrt(2)
        with pytest.raises(ValueError):
            discriminant_ratio_via_roots(cover, vec, F(0))  # branch point

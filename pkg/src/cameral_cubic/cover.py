"""Spectral models for type A and their branch geometry.

A model is the plane curve  P(lambda, z) = lambda^n + c_2(z) lambda^{n-2}
+ ... + c_n(z) = 0  over the affine z-line, an n-sheeted cover away from
the zeros of the discriminant.  Everything downstream works in the local
coordinate t at a simple branch point z0, where z = z0 + t^2 and exactly
two sheets collide:

    lambda_pm(t) = mu +- sqrt(m) t + O(t^2)

with mu the double eigenvalue and m the radicand recorded on the branch
point.  All arithmetic is exact; configurations that would force
irrational branch data raise instead of approximating.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .poly import Poly, char_discriminant, poly_gcd, rational_roots
from .scalars import QuadExt, to_rational
from .series import DEFAULT_ORDER, TruncSeries


class NonSimpleBranchError(ValueError):
    """The discriminant locus is degenerate: a repeated branch point,
    more than one colliding pair, or a double point frozen at first
    order."""


class IrrationalBranchPointError(ValueError):
    """A branch point, or an eigenvalue over one, is not rational."""


@dataclass(frozen=True)
class BranchPoint:
    """Data of one simple branch point.

    spectators are the non-colliding eigenvalues at z0, sorted; radicand
    is the m in lambda_pm = mu +- sqrt(m) t + O(t^2).
    """

    z0: Fraction
    double_root: Fraction
    spectators: tuple
    radicand: Fraction


@dataclass(frozen=True)
class SheetExpansion:
    """Sheets of the cover as series in the local coordinate t.

    plus and minus are the colliding pair, swapped by t -> -t; the
    spectator series are aligned with branch.spectators.
    """

    branch: BranchPoint
    order: int
    plus: TruncSeries
    minus: TruncSeries
    spectators: tuple

    @property
    def sheets(self) -> tuple:
        """All sheets: index 0 is plus, 1 is minus, then spectators."""
        return (self.plus, self.minus) + self.spectators


@dataclass(eq=False)
class CoverModel:
    lie_type: str
    rank: int
    invariants: tuple  # (c_2, ..., c_n) as z-polynomials
    char_coeffs: tuple  # ascending lambda coefficients, all z-polynomials
    discriminant: Poly
    branch_points: tuple
    _expansions: dict = field(default_factory=dict, repr=False)

    @property
    def n_sheets(self) -> int:
        return self.rank + 1

    def char_poly(self) -> Poly:
        """The defining polynomial in lambda, coefficients in z."""
        return Poly(list(self.char_coeffs), "lam")

    def char_poly_at(self, z0) -> Poly:
        """Defining polynomial in lambda over a fixed base point."""
        return Poly([Fraction(c(z0)) for c in self.char_coeffs], "lam")

    def char_z_derivative_at(self, z0) -> Poly:
        """d/dz of the defining polynomial, evaluated at z0."""
        return Poly([Fraction(c.derivative()(z0)) for c in self.char_coeffs], "lam")

    @property
    def genus(self) -> int:
        """Genus of the rank one model lambda^2 = q(z), q squarefree."""
        if self.rank != 1:
            raise ValueError("genus is only computed for rank 1 models")
        q = -self.invariants[0]
        return max(0, (q.degree - 1) // 2)

    def sheet_expansions(self, bp: BranchPoint, order: int = DEFAULT_ORDER) -> SheetExpansion:
        """Expand every sheet near bp to the given order in t.

        The colliding pair is solved twice, once from each square root of
        the radicand, and the results are cross-checked against the
        t -> -t symmetry; spectators are checked to be even in t with
        rational coefficients; all sheets are checked to satisfy the
        defining equation and to sum to zero.  Results are cached.
        """
        if order < 2:
            raise ValueError("order must be at least 2")
        key = (bp.z0, order)
        hit = self._expansions.get(key)
        if hit is not None:
            return hit

        coeff_series = local_coefficients(self.char_coeffs, bp.z0)
        dcoeff_series = [k * c for k, c in enumerate(coeff_series)][1:]

        root0 = QuadExt.sqrt_of(bp.radicand)
        mu = bp.double_root
        v_plus = _colliding_velocity(coeff_series, dcoeff_series, mu, root0, order)
        v_minus = _colliding_velocity(coeff_series, dcoeff_series, mu, -root0, order)
        plus = (mu + v_plus.shift(1)).truncate_to(order)
        minus = (mu + v_minus.shift(1)).truncate_to(order)
        spectators = tuple(
            _spectator_sheet(coeff_series, dcoeff_series, s0, order).truncate_to(order)
            for s0 in bp.spectators
        )

        assert (minus - plus.flip_sign()).is_zero, "colliding pair not swapped by t -> -t"
        assert plus.coeff(1) == root0, "leading slope disagrees with the radicand"
        total = plus + minus
        for s in spectators:
            total = total + s
        assert total.is_zero, "sheets do not sum to zero"
        for s in (plus, minus) + spectators:
            assert eval_poly_series(coeff_series, s).is_zero, "sheet fails the defining equation"
        for s in spectators:
            assert s.odd_part().is_zero, "spectator sheet must be even in t"
            for c in s.coeffs:
                to_rational(c)

        exp = SheetExpansion(bp, order, plus, minus, spectators)
        self._expansions[key] = exp
        return exp


def base_poly(data) -> Poly:
    """Coerce invariant data (a z-polynomial, a scalar, or an ascending
    coefficient sequence) to a z-polynomial over the rationals."""
    if isinstance(data, Poly):
        if data.var != "z":
            raise ValueError(f"invariant must be a polynomial in z, got {data.var!r}")
        return Poly([Fraction(x) for x in data.coeffs], "z")
    if isinstance(data, (int, Fraction, str)):
        return Poly([Fraction(data)], "z")
    return Poly([Fraction(x) for x in data], "z")


def _series_of(x) -> TruncSeries:
    return x if isinstance(x, TruncSeries) else TruncSeries.constant(Fraction(x))


def local_coefficients(polys, z0) -> list:
    """Evaluate z-polynomials along z = z0 + t^2, as exact t-series."""
    z_local = TruncSeries.from_terms([(0, Fraction(z0)), (2, Fraction(1))])
    return [_series_of(p(z_local)) for p in polys]


def eval_poly_series(coeff_series, x: TruncSeries) -> TruncSeries:
    """Evaluate a polynomial with series coefficients (ascending) at a
    series point."""
    acc = TruncSeries.zero(x.var)
    for c in reversed(coeff_series):
        acc = acc * x + c
    return acc


def _known_window(s: TruncSeries, k: int) -> TruncSeries:
    # first k coefficient orders as an exact polynomial; s must be known that far
    assert s.trunc is None or s.trunc >= k
    w = s.truncate_to(k)
    return TruncSeries(w.lead, list(w.coeffs), None, w.var)


def _colliding_velocity(coeff_series, dcoeff_series, mu, v0, order) -> TruncSeries:
    """Solve P(mu + t v, z0 + t^2) = 0 for v with v(0) = v0.

    The iteration runs on v because the equation for lambda itself is
    singular at the double point; dividing P by t^2 and its lambda
    derivative by t makes the linearization a unit.  Each pass doubles
    the number of correct coefficients.
    """
    v = TruncSeries.constant(v0)
    acc = 1
    for _ in range(64):
        if acc >= order:
            return v
        acc = min(2 * acc, order)
        lam = mu + v.shift(1)
        h = eval_poly_series(coeff_series, lam).shift(-2)
        hv = eval_poly_series(dcoeff_series, lam).shift(-1)
        v = _known_window(v - h * hv.reciprocal(acc), acc)
    raise AssertionError("sheet expansion failed to stabilize")


def _spectator_sheet(coeff_series, dcoeff_series, s0, order) -> TruncSeries:
    """Expand the simple eigenvalue branch through s0; plain iteration,
    the linearization is already a unit there."""
    x = TruncSeries.constant(Fraction(s0))
    acc = 2
    for _ in range(64):
        if acc >= order:
            return x
        acc = min(2 * acc, order)
        p = eval_poly_series(coeff_series, x)
        dp = eval_poly_series(dcoeff_series, x)
        x = _known_window(x - p * dp.reciprocal(acc), acc)
    raise AssertionError("spectator expansion failed to stabilize")


def build_cover(lie_type: str, rank: int, invariants) -> CoverModel:
    """Validate invariants (c_2, ..., c_n) and assemble the model.

    Raises NonSimpleBranchError when the discriminant is identically
    zero, has a repeated zero, or a double point fails to smooth, and
    IrrationalBranchPointError when a branch point or an eigenvalue over
    one is not rational.
    """
    if str(lie_type).upper() != "A":
        raise ValueError("only type A models are supported")
    if rank < 1:
        raise ValueError("rank must be a positive integer")
    invs = tuple(base_poly(c) for c in invariants)
    if len(invs) != rank:
        raise ValueError(f"expected {rank} invariants c_2..c_{rank + 1}, got {len(invs)}")

    # ascending powers of lambda: c_n, ..., c_2, 0, 1
    coeffs = list(reversed(invs))
    coeffs.append(Poly([], "z"))
    coeffs.append(Poly([Fraction(1)], "z"))

    disc = char_discriminant(Poly(coeffs, "lam"))
    if not isinstance(disc, Poly):
        disc = Poly([Fraction(disc)], "z")
    if disc.is_zero:
        raise NonSimpleBranchError("discriminant vanishes identically: a sheet is repeated")
    if poly_gcd(disc, disc.derivative()).degree >= 1:
        raise NonSimpleBranchError("discriminant has a repeated zero: branch points collide")
    zeros, tail = rational_roots(disc)
    if tail.degree >= 1:
        raise IrrationalBranchPointError("some branch points are irrational")

    bps = []
    for z0, mult in zeros:
        assert mult == 1
        bps.append(_branch_point(coeffs, z0))
    return CoverModel("A", rank, invs, tuple(coeffs), disc, tuple(bps))


def _branch_point(coeffs: list, z0: Fraction) -> BranchPoint:
    p0 = Poly([Fraction(c(z0)) for c in coeffs], "lam")
    g = poly_gcd(p0, p0.derivative())
    if g.degree != 1:
        raise NonSimpleBranchError(
            f"sheet collision over z = {z0} is not a single double point"
        )
    mu = -g.coeff(0)  # g is monic linear
    lin = Poly([-mu, Fraction(1)], "lam")
    q, rem = divmod(p0, lin * lin)
    assert rem.is_zero

    zeros, tail = rational_roots(q)
    if tail.degree >= 1:
        raise IrrationalBranchPointError(f"eigenvalues over z = {z0} are not all rational")
    spectators = []
    for s, mult in zeros:
        assert mult == 1 and s != mu
        spectators.append(s)
    spectators.sort()

    assert q(mu) != 0
    pz = Poly([Fraction(c.derivative()(z0)) for c in coeffs], "lam")
    m = -Fraction(pz(mu)) / q(mu)
    if m == 0:
        raise NonSimpleBranchError(f"double point over z = {z0} does not smooth at first order")
    assert 2 * mu + sum(spectators, start=Fraction(0)) == 0
    return BranchPoint(z0, mu, tuple(spectators), m)

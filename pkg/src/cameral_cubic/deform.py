"""First order deformations of a spectral model.

A tangent direction is a tuple (b_2, ..., b_n) of base polynomials; the
model moves as

    P_eps(lambda, z) = P(lambda, z) - eps (b_2 lambda^{n-2} + ... + b_n).

Everything here is first order in eps: how the individual sheets move,
the matching vector field on the local coordinate at a branch point, and
the relative change of the discriminant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cover import (
    BranchPoint,
    CoverModel,
    base_poly,
    eval_poly_series,
    local_coefficients,
)
from .poly import Poly, char_discriminant, poly_gcd, rational_roots
from .scalars import DualNumber
from .series import DEFAULT_ORDER, TruncSeries


@dataclass(frozen=True)
class TangentVector:
    """Deformation direction; components are (b_2, ..., b_n) as base
    polynomials."""

    components: tuple

    @classmethod
    def of(cls, components) -> "TangentVector":
        return cls(tuple(base_poly(c) for c in components))

    @property
    def rank(self) -> int:
        return len(self.components)

    def ascending(self) -> tuple:
        """Coefficients by ascending power of lambda: b_n first."""
        return tuple(reversed(self.components))

    def at(self, z0) -> Poly:
        """The deforming polynomial in lambda over a fixed base point."""
        return Poly([Fraction(b(z0)) for b in self.ascending()], "lam")

    def __add__(self, other):
        if not isinstance(other, TangentVector):
            return NotImplemented
        if self.rank != other.rank:
            raise ValueError("tangent vectors live on models of different rank")
        return TangentVector(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other):
        if not isinstance(other, TangentVector):
            return NotImplemented
        return self + (-1) * other

    def __mul__(self, c):
        return TangentVector(tuple(b * c for b in self.components))

    __rmul__ = __mul__


def sheet_variation(
    cover: CoverModel, bp: BranchPoint, vec: TangentVector, order: int = DEFAULT_ORDER
) -> tuple:
    """First order motion of every sheet at bp, as t-series.

    delta lambda_i = B(lambda_i) / P_lambda(lambda_i), indexed like
    SheetExpansion.sheets.  Simple branching caps the poles: at most
    order one on the colliding pair, none on spectators.
    """
    if vec.rank != cover.rank:
        raise ValueError("tangent vector rank does not match the model")
    exp = cover.sheet_expansions(bp, order)
    bco = local_coefficients(vec.ascending(), bp.z0)
    dco = [k * c for k, c in enumerate(local_coefficients(cover.char_coeffs, bp.z0))][1:]
    out = []
    for idx, sheet in enumerate(exp.sheets):
        num = eval_poly_series(bco, sheet)
        den = eval_poly_series(dco, sheet)
        d = num / den
        bound = -1 if idx < 2 else 0
        assert d.known_order is None or d.known_order >= bound, (
            "sheet variation pole exceeds the simple branching bound"
        )
        out.append(d)
    return tuple(out)


def ks_field(
    cover: CoverModel, bp: BranchPoint, vec: TangentVector, order: int = DEFAULT_ORDER
) -> TruncSeries:
    """Coefficient v(t) of the vector field v d/dt that realizes the
    deformation by moving the branch point: v = 2 delta lambda_plus
    divided by d lambda_plus / dt.  At worst a simple pole."""
    exp = cover.sheet_expansions(bp, order)
    var = sheet_variation(cover, bp, vec, order)
    v = 2 * var[0] / exp.plus.derivative()
    assert v.known_order is None or v.known_order >= -1
    return v


def ks_cocycle_local(q: Poly, b: Poly, z0, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Rank one shortcut for the same field, straight from lambda^2 = q:
    v = b(z0 + t^2) / (lambda lambda') with lambda = sqrt(q(z0 + t^2))."""
    qs, bs = local_coefficients([base_poly(q), base_poly(b)], z0)
    lam = qs.truncate_to(order + 2).sqrt()
    return bs / (lam * lam.derivative())


def discriminant_ratio(cover: CoverModel, vec: TangentVector) -> tuple:
    """Relative first order change (N, D) of the discriminant along vec,
    with N/D reduced and D monic.

    Computed by running the discriminant over dual numbers c_k - eps b_k
    and dividing the eps part by the value part.
    """
    if vec.rank != cover.rank:
        raise ValueError("tangent vector rank does not match the model")
    asc = vec.ascending()
    dual_coeffs = []
    for k, c in enumerate(cover.char_coeffs):
        b = asc[k] if k < len(asc) else None
        dual_coeffs.append(_dualize(c, b))
    disc_eps = char_discriminant(Poly(dual_coeffs, "lam"))

    vals, slopes = [], []
    for c in disc_eps.coeffs:
        if isinstance(c, DualNumber):
            vals.append(Fraction(c.value))
            slopes.append(Fraction(c.slope))
        else:
            vals.append(Fraction(c))
            slopes.append(Fraction(0))
    value = Poly(vals, "z")
    slope = Poly(slopes, "z")
    assert value == cover.discriminant, "dual number value part must reproduce the discriminant"

    g = poly_gcd(slope, value)
    num = slope / g
    den = value / g
    lc = den.lead
    return num / lc, den / lc


def discriminant_ratio_via_roots(cover: CoverModel, vec: TangentVector, z_star) -> Fraction:
    """The same ratio evaluated at a base point where the model splits
    into distinct rational sheets, via the root sum

        sum_{i != j} (delta_i - delta_j) / (lambda_i - lambda_j).
    """
    z_star = Fraction(z_star)
    p = cover.char_poly_at(z_star)
    roots, tail = rational_roots(p)
    if tail.degree >= 1 or any(m != 1 for _, m in roots):
        raise ValueError("needs a base point with distinct rational sheets")
    dp = p.derivative()
    bpoly = vec.at(z_star)
    lams = [r for r, _ in roots]
    deltas = [bpoly(x) / dp(x) for x in lams]
    total = Fraction(0)
    for i, xi in enumerate(lams):
        for j, xj in enumerate(lams):
            if i != j:
                total += (deltas[i] - deltas[j]) / (xi - xj)
    return total


def _dualize(c: Poly, b: Poly | None) -> Poly:
    bl = [] if b is None else list(b.coeffs)
    top = max(len(c.coeffs), len(bl))
    out = []
    for j in range(top):
        cj = c.coeffs[j] if j < len(c.coeffs) else Fraction(0)
        bj = bl[j] if j < len(bl) else Fraction(0)
        out.append(DualNumber(Fraction(cj), -Fraction(bj)))
    return Poly(out, "z")

"""The cubic form on the base of a family of spectral models.

Four independent evaluations of the same trilinear form in deformation
directions (beta, gamma, delta), each localized at the branch points:

  pantev     quadratic residue of the pulled back relative discriminant
             change along beta, against the trace pairing of gamma and
             delta;
  ks         residue of that trace pairing contracted with the vector
             field on the local coordinate that realizes beta;
  symmetric  sum over the roots of the ambient type A system of the
             cubic root-pairing term divided by the field pairing;
  sl2        rank one only: residues computed downstairs on the base,
             with no sheet expansions at all.

pantev and ks agree branch point by branch point; symmetric and sl2
differ from them by constant factors (2 and 1/2).  All values are exact
rationals; any irrationality surviving to a reported value is a bug and
raises.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .cover import CoverModel, local_coefficients
from .deform import TangentVector, discriminant_ratio, ks_field, sheet_variation
from .poly import Poly
from .rootsys import build_root_system, pairing, trace_form
from .scalars import to_rational
from .series import DEFAULT_ORDER, LocalDifferential, TruncSeries


@dataclass(frozen=True)
class CubicValue:
    """One evaluation: the total and its branch point decomposition."""

    evaluator: str
    total: Fraction
    per_branch: tuple  # ((z0, value), ...) sorted by z0


@dataclass(frozen=True)
class CubicTensor:
    evaluator: str
    size: int
    entries: dict  # sorted index triple -> value


@dataclass(frozen=True)
class CubicCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class CubicReport:
    checks: tuple
    constants: dict

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def trace_pair(cover: CoverModel, bp, gamma, delta, order: int = DEFAULT_ORDER) -> LocalDifferential:
    """Sheetwise product of the gamma and delta variations, summed and
    carrying (dz)^2 = 4 t^2 (dt)^2.  Regular and even: the colliding
    poles cancel against the vanishing of the chart factor."""
    dg = sheet_variation(cover, bp, gamma, order)
    dd = sheet_variation(cover, bp, delta, order)
    s = trace_form(dg, dd) * TruncSeries.monomial(2, Fraction(4))
    assert s.known_order is None or s.known_order >= 0, "trace pair must be regular"
    assert s.odd_part().is_zero, "trace pair must be even"
    return LocalDifferential(s, 2)


def pantev_eval(cover: CoverModel, beta, gamma, delta, order: int = DEFAULT_ORDER) -> CubicValue:
    """Pull N/D back through z = z0 + t^2 and take the quadratic residue
    against the trace pair; (N, D) is the relative discriminant change
    along beta."""
    num, den = discriminant_ratio(cover, beta)
    per = []
    total = Fraction(0)
    for bp in cover.branch_points:
        ns, ds = local_coefficients([num, den], bp.z0)
        ratio = ns * ds.reciprocal(order + 4)
        term = LocalDifferential(ratio, 0) * trace_pair(cover, bp, gamma, delta, order)
        val = to_rational(term.quadratic_residue())
        per.append((bp.z0, val))
        total += val
    return CubicValue("pantev", total, tuple(per))


def ks_pairing_eval(cover: CoverModel, beta, gamma, delta, order: int = DEFAULT_ORDER) -> CubicValue:
    """Contract the trace pair with the field v d/dt realizing beta and
    take the residue."""
    per = []
    total = Fraction(0)
    for bp in cover.branch_points:
        v = ks_field(cover, bp, beta, order)
        form = trace_pair(cover, bp, gamma, delta, order).contract(v)
        ko = form.series.known_order
        assert ko is None or ko >= -1, "contracted pairing may have at most a simple pole"
        val = to_rational(form.residue())
        per.append((bp.z0, val))
        total += val
    return CubicValue("ks", total, tuple(per))


def symmetric_eval(cover: CoverModel, beta, gamma, delta, order: int = DEFAULT_ORDER) -> CubicValue:
    """Sum over the roots nu of the ambient type A system of

        <beta, nu> <gamma, nu> <delta, nu> (dz)^3 / (<phi, nu> dz)

    where the pairings are taken sheetwise.  Only the two roots joining
    the colliding sheets reach pole order two; mixed terms stop at a
    simple pole and spectator terms are regular."""
    rs = build_root_system("A", cover.rank)
    dz3 = TruncSeries.monomial(3, Fraction(8))
    dz1 = TruncSeries.monomial(1, Fraction(2))
    per = []
    total = Fraction(0)
    for bp in cover.branch_points:
        sheets = cover.sheet_expansions(bp, order).sheets
        db = sheet_variation(cover, bp, beta, order)
        dg = sheet_variation(cover, bp, gamma, order)
        dd = sheet_variation(cover, bp, delta, order)
        acc = None
        for root in rs.roots:
            num = pairing(db, root) * pairing(dg, root) * pairing(dd, root) * dz3
            den = pairing(sheets, root) * dz1
            term = LocalDifferential(num, 3) / LocalDifferential(den, 1)
            colliding = sum(1 for i, c in enumerate(root) if c and i < 2)
            ko = term.series.known_order
            if colliding == 0:
                assert ko is None or ko >= 0, "spectator term must be regular"
            elif colliding == 1:
                assert ko is None or ko >= -1, "mixed term may have at most a simple pole"
            acc = term if acc is None else acc + term
        val = to_rational(acc.quadratic_residue())
        per.append((bp.z0, val))
        total += val
    return CubicValue("symmetric", total, tuple(per))


def sl2_eval(cover: CoverModel, beta, gamma, delta, order: int = DEFAULT_ORDER) -> CubicValue:
    """Rank one route on the base: with lambda^2 = q(z) the whole form
    collapses to quadratic residues of b_beta b_gamma b_delta / q^2 (dz)^2
    at the zeros of q, computed in the shifted coordinate."""
    if cover.rank != 1:
        raise ValueError("this evaluator needs a rank 1 model")
    q = -cover.invariants[0]
    nb = beta.components[0] * gamma.components[0] * delta.components[0]
    per = []
    total = Fraction(0)
    for bp in cover.branch_points:
        ns = _poly_series(nb.shifted(bp.z0))
        qs = _poly_series(q.shifted(bp.z0))
        ratio = ns * (qs * qs).reciprocal(order + 4)
        val = to_rational(LocalDifferential(ratio, 2).quadratic_residue())
        per.append((bp.z0, val))
        total += val
    return CubicValue("sl2", total, tuple(per))


EVALUATORS = {
    "pantev": pantev_eval,
    "ks": ks_pairing_eval,
    "symmetric": symmetric_eval,
    "sl2": sl2_eval,
}


def _poly_series(p: Poly, var: str = "s") -> TruncSeries:
    return TruncSeries.from_terms(list(enumerate(p.coeffs)), None, var)


def cubic_tensor(
    cover: CoverModel, basis, order: int = DEFAULT_ORDER, evaluator: str = "pantev"
) -> CubicTensor:
    """Evaluate on every ordered triple from the basis, check the table
    is symmetric, and keep one entry per unordered triple."""
    fn = EVALUATORS[evaluator]
    basis = list(basis)
    table = {}
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            for k, bk in enumerate(basis):
                table[(i, j, k)] = fn(cover, bi, bj, bk, order).total
    for idx, v in table.items():
        assert v == table[tuple(sorted(idx))], "cubic tensor must be symmetric"
    entries = {idx: v for idx, v in table.items() if idx == tuple(sorted(idx))}
    return CubicTensor(evaluator, len(basis), entries)


def _random_vector(cover: CoverModel, rng: random.Random, max_degree: int = 2) -> TangentVector:
    comps = []
    for _ in range(cover.rank):
        deg = rng.randint(0, max_degree)
        comps.append(Poly([Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(deg + 1)], "z"))
    return TangentVector.of(comps)


def verify_identities(
    cover: CoverModel, trials: int = 5, seed: int = 0, order: int = DEFAULT_ORDER
) -> CubicReport:
    """Random-direction consistency run on one model.

    Checks, all exact: ks agrees with pantev branch point by branch
    point; the pantev/symmetric ratio is one constant for the whole run;
    in rank one the sl2/pantev ratio is too; every evaluation is
    invariant under permuting (beta, gamma, delta); the form is
    trilinear.
    """
    rng = random.Random(seed)
    ks_ok, perm_ok, tri_ok = True, True, True
    ps_ratios, sp_ratios = set(), set()
    zeros_ok = True
    for _ in range(trials):
        b, g, d = (_random_vector(cover, rng) for _ in range(3))
        p = pantev_eval(cover, b, g, d, order)
        k = ks_pairing_eval(cover, b, g, d, order)
        s = symmetric_eval(cover, b, g, d, order)
        if p.per_branch != k.per_branch or p.total != k.total:
            ks_ok = False
        if s.total == 0:
            zeros_ok = zeros_ok and p.total == 0
        else:
            ps_ratios.add(p.total / s.total)
        if cover.rank == 1:
            l2 = sl2_eval(cover, b, g, d, order)
            if p.total == 0:
                zeros_ok = zeros_ok and l2.total == 0
            else:
                sp_ratios.add(l2.total / p.total)
        for perm in permutations((b, g, d)):
            if pantev_eval(cover, *perm, order).total != p.total:
                perm_ok = False
            if ks_pairing_eval(cover, *perm, order).total != k.total:
                perm_ok = False
        b2 = _random_vector(cover, rng)
        c = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        add_split = pantev_eval(cover, b + b2, g, d, order).total
        if add_split != p.total + pantev_eval(cover, b2, g, d, order).total:
            tri_ok = False
        if pantev_eval(cover, c * b, g, d, order).total != c * p.total:
            tri_ok = False

    checks = [
        CubicCheck("ks_matches_pantev", ks_ok, "per branch point and in total"),
        CubicCheck(
            "pantev_symmetric_ratio_constant",
            len(ps_ratios) <= 1 and zeros_ok,
            "ratios seen: " + (", ".join(str(r) for r in sorted(ps_ratios)) or "none"),
        ),
        CubicCheck("permutation_invariance", perm_ok, "all six orderings"),
        CubicCheck("trilinearity", tri_ok, "additivity and scaling in the first slot"),
    ]
    constants = {
        "pantev_over_symmetric": next(iter(ps_ratios)) if len(ps_ratios) == 1 else None,
    }
    if cover.rank == 1:
        checks.insert(
            2,
            CubicCheck(
                "sl2_pantev_ratio_constant",
                len(sp_ratios) <= 1 and zeros_ok,
                "ratios seen: " + (", ".join(str(r) for r in sorted(sp_ratios)) or "none"),
            ),
        )
        constants["sl2_over_pantev"] = next(iter(sp_ratios)) if len(sp_ratios) == 1 else None
    return CubicReport(tuple(checks), constants)

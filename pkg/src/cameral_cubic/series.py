"""Truncated Laurent series in one local coordinate, with exact coefficients.

A ``TruncSeries`` stores coefficients for exponents ``lead .. trunc-1``;
``trunc`` is the first unknown order.  ``trunc=None`` marks an exact
series (a Laurent polynomial: every unstored coefficient is zero).
Truncation bookkeeping is pessimistic: arithmetic propagates the worst
window, and asking for a coefficient at or past the truncation order
raises ``TruncationError`` instead of guessing.

``LocalDifferential`` attaches a weight (the power of dt) so that the
residue and the quadratic residue can insist on the right weight and on
the pole bounds that make them coordinate-free: the coefficient of
t**-1 in a 1-form, and the coefficient of t**-2 in a quadratic
differential with pole order at most 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import DualNumber, QuadExt, rational_sqrt

DEFAULT_ORDER = 8

_SCALARS = (int, Fraction, DualNumber, QuadExt)


def _window_poly(s: "TruncSeries", k: int) -> "TruncSeries":
    # first k coefficient orders as an exact polynomial; s must be known that far
    assert s.trunc is None or s.trunc >= k
    w = s.truncate_to(k)
    return TruncSeries(w.lead, list(w.coeffs), None, w.var)


class TruncationError(ArithmeticError):
    """A coefficient outside the computed window was requested."""


@dataclass
class TruncSeries:
    lead: int
    coeffs: list
    trunc: int | None = None
    var: str = "t"

    def __post_init__(self):
        cs = list(self.coeffs)
        if self.trunc is not None and len(cs) != self.trunc - self.lead:
            raise ValueError("coefficient window does not match lead/trunc")
        while cs and not cs[0]:
            cs.pop(0)
            self.lead += 1
        if self.trunc is None:
            while cs and not cs[-1]:
                cs.pop()
        if not cs:
            self.lead = self.trunc if self.trunc is not None else 0
        self.coeffs = cs

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, var: str = "t") -> "TruncSeries":
        return cls(0, [], None, var)

    @classmethod
    def constant(cls, c, var: str = "t") -> "TruncSeries":
        return cls(0, [c], None, var)

    @classmethod
    def monomial(cls, k: int, c=Fraction(1), var: str = "t") -> "TruncSeries":
        return cls(k, [c], None, var)

    @classmethod
    def from_terms(cls, terms, trunc: int | None = None, var: str = "t") -> "TruncSeries":
        """terms: iterable of (exponent, coefficient)."""
        terms = sorted(terms, key=lambda p: p[0])
        if not terms:
            return cls(0 if trunc is None else trunc, [], trunc, var)
        lo = terms[0][0]
        hi = terms[-1][0] + 1 if trunc is None else trunc
        cs = [Fraction(0)] * (hi - lo)
        for k, c in terms:
            if k >= hi:
                raise ValueError("term beyond truncation order")
            cs[k - lo] = cs[k - lo] + c
        return cls(lo, cs, trunc, var)

    # -- inspection -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        """True when every known coefficient vanishes (the series may
        still hide nonzero terms past a finite truncation)."""
        return not self.coeffs

    @property
    def known_order(self) -> int | None:
        """Order of the first nonzero known coefficient, None if all
        known coefficients vanish."""
        return self.lead if self.coeffs else None

    def coeff(self, k: int):
        if self.trunc is not None and k >= self.trunc:
            raise TruncationError(
                f"coefficient of {self.var}^{k} is past the window O({self.var}^{self.trunc})"
            )
        return self._raw(k)

    def _raw(self, k: int):
        if k < self.lead or k >= self.lead + len(self.coeffs):
            return Fraction(0)
        return self.coeffs[k - self.lead]

    def __bool__(self):
        return bool(self.coeffs)

    def agrees_with(self, other: "TruncSeries", upto: int | None = None) -> bool:
        """Equality over the overlap of the known windows (optionally
        capped at order ``upto`` exclusive)."""
        ends = [b for b in (self.trunc, other.trunc, upto) if b is not None]
        lo = min(self.lead, other.lead)
        if ends:
            end = min(ends)
        else:
            end = max(self.lead + len(self.coeffs), other.lead + len(other.coeffs))
        return all(self._raw(k) == other._raw(k) for k in range(lo, end))

    # -- ring structure -------------------------------------------------

    def _coerce(self, other) -> "TruncSeries | None":
        if isinstance(other, TruncSeries):
            if other.var != self.var:
                raise ValueError(f"series variables differ: {self.var!r} vs {other.var!r}")
            return other
        if isinstance(other, _SCALARS):
            return TruncSeries.constant(other, self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        bounds = [b for b in (self.trunc, o.trunc) if b is not None]
        trunc = min(bounds) if bounds else None
        lo = min(self.lead, o.lead)
        if trunc is not None:
            hi = trunc
        else:
            hi = max(self.lead + len(self.coeffs), o.lead + len(o.coeffs))
        if hi <= lo:
            return TruncSeries(trunc if trunc is not None else 0, [], trunc, self.var)
        cs = [self._raw(k) + o._raw(k) for k in range(lo, hi)]
        return TruncSeries(lo, cs, trunc, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.lead, [-c for c in self.coeffs], self.trunc, self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                return TruncSeries.zero(self.var)
            return TruncSeries(
                self.lead, [c * other for c in self.coeffs], self.trunc, self.var
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # the error term of each factor is shifted by the other factor's
        # leading order
        bounds = []
        if self.trunc is not None:
            bounds.append(self.trunc + o.lead)
        if o.trunc is not None:
            bounds.append(o.trunc + self.lead)
        trunc = min(bounds) if bounds else None
        if not self.coeffs or not o.coeffs:
            if trunc is None:
                return TruncSeries.zero(self.var)
            return TruncSeries(trunc, [], trunc, self.var)
        lo = self.lead + o.lead
        hi = lo + len(self.coeffs) + len(o.coeffs) - 1
        if trunc is not None:
            hi = min(hi, trunc)
        if hi <= lo:
            return TruncSeries(trunc, [], trunc, self.var)
        cs = [Fraction(0)] * (hi - lo)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            if i + o.lead + self.lead >= hi:
                break
            for j, b in enumerate(o.coeffs):
                k = i + j
                if k >= hi - lo:
                    break
                if b:
                    cs[k] = cs[k] + a * b
        return TruncSeries(lo, cs, trunc, self.var)

    __rmul__ = __mul__

    def reciprocal(self, n_terms: int | None = None) -> "TruncSeries":
        """1/self.  The leading known coefficient must be nonzero; a
        series that is zero to its precision cannot be inverted."""
        if not self.coeffs:
            if self.trunc is None:
                raise ZeroDivisionError("reciprocal of the zero series")
            raise TruncationError("leading coefficient unknown: series is zero to precision")
        if self.trunc is not None:
            length = self.trunc - self.lead
        else:
            length = n_terms if n_terms is not None else DEFAULT_ORDER + 1
        c0 = self.coeffs[0]
        inv0 = 1 / c0
        out = [inv0]
        for k in range(1, length):
            acc = None
            for j in range(1, min(k, len(self.coeffs) - 1) + 1):
                cj = self.coeffs[j]
                if not cj:
                    continue
                term = cj * out[k - j]
                acc = term if acc is None else acc + term
            out.append(-(inv0 * acc) if acc is not None else Fraction(0))
        return TruncSeries(-self.lead, out, -self.lead + length, self.var)

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self * (1 / (Fraction(other) if isinstance(other, int) else other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n_terms = None
        if self.trunc is None and o.trunc is None:
            n_terms = max(DEFAULT_ORDER + 1, len(self.coeffs) + len(o.coeffs))
        return self * o.reciprocal(n_terms)

    def __rtruediv__(self, other):
        if isinstance(other, _SCALARS):
            return self.reciprocal() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ValueError("series powers take integer exponents")
        if n < 0:
            return self.reciprocal() ** (-n)
        result = TruncSeries.constant(Fraction(1), self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- reparametrization ----------------------------------------------

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by t**k."""
        return TruncSeries(
            self.lead + k, list(self.coeffs),
            None if self.trunc is None else self.trunc + k, self.var,
        )

    def truncate_to(self, trunc: int) -> "TruncSeries":
        if self.trunc is not None and self.trunc <= trunc:
            return self
        if trunc <= self.lead:
            return TruncSeries(trunc, [], trunc, self.var)
        cs = [self._raw(k) for k in range(self.lead, trunc)]
        return TruncSeries(self.lead, cs, trunc, self.var)

    def derivative(self) -> "TruncSeries":
        cs = [(self.lead + i) * c for i, c in enumerate(self.coeffs)]
        return TruncSeries(
            self.lead - 1, cs,
            None if self.trunc is None else self.trunc - 1, self.var,
        )

    def flip_sign(self) -> "TruncSeries":
        """Substitute t -> -t."""
        cs = [c if (self.lead + i) % 2 == 0 else -c for i, c in enumerate(self.coeffs)]
        return TruncSeries(self.lead, cs, self.trunc, self.var)

    def even_part(self) -> "TruncSeries":
        cs = [c if (self.lead + i) % 2 == 0 else Fraction(0) for i, c in enumerate(self.coeffs)]
        return TruncSeries(self.lead, cs, self.trunc, self.var)

    def odd_part(self) -> "TruncSeries":
        cs = [c if (self.lead + i) % 2 == 1 else Fraction(0) for i, c in enumerate(self.coeffs)]
        return TruncSeries(self.lead, cs, self.trunc, self.var)

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """self(inner).  A truncated outer series requires inner to
        vanish at the origin (lead >= 1); an exact outer Laurent
        polynomial accepts any inner with a nonzero leading coefficient."""
        if not inner.coeffs:
            raise ValueError("cannot compose with a series that is zero to precision")
        if self.trunc is not None and inner.lead < 1:
            raise ValueError("truncated outer series needs inner with positive valuation")
        var = inner.var
        hi = self.lead + len(self.coeffs)
        acc = TruncSeries.zero(var)
        for k in range(hi - 1, -1, -1):
            acc = acc * inner + self._raw(k)
        if self.lead < 0:
            inv = inner.reciprocal()
            p = inv
            for k in range(-1, self.lead - 1, -1):
                c = self._raw(k)
                if c:
                    acc = acc + p * c
                if k > self.lead:
                    p = p * inv
        if self.trunc is not None:
            bound = self.trunc * inner.lead
            if acc.trunc is not None:
                bound = min(bound, acc.trunc)
            acc = acc.truncate_to(bound)
        return acc

    def invert(self) -> "TruncSeries":
        """Compositional inverse of a series t*(unit + ...): returns w
        with self(w) equal to the identity.

        Newton lifting on an exact polynomial approximant; each pass
        doubles the number of correct coefficients, so the window is
        grown explicitly rather than tracked through the arithmetic."""
        if self.lead != 1:
            raise ValueError("compositional inverse needs leading order exactly 1")
        c1 = self.coeffs[0]
        target = self.trunc if self.trunc is not None else DEFAULT_ORDER + 2
        ident = TruncSeries.monomial(1, Fraction(1), self.var)
        w = TruncSeries(1, [1 / c1], None, self.var)
        ds = self.derivative()
        acc = 2  # w is correct below t^acc
        for _ in range(64):
            if acc >= target:
                return w.truncate_to(target)
            acc = min(2 * acc, target)
            err = self.compose(w) - ident
            corr = err * ds.compose(w).reciprocal(acc)
            w = _window_poly(w - corr, acc)
        raise AssertionError("series inversion failed to converge")

    def sqrt(self) -> "TruncSeries":
        """Principal square root.  The leading order must be even and the
        leading coefficient rational; the result's coefficients live in
        the rationals extended by the square root of that coefficient."""
        if not self.coeffs:
            raise ValueError("square root of a series with no known nonzero term")
        if self.lead % 2:
            raise ValueError("square root needs even leading order")
        c0 = self.coeffs[0]
        if not isinstance(c0, (int, Fraction)):
            raise ValueError("series sqrt expects a rational leading coefficient")
        c0 = Fraction(c0)
        root0 = rational_sqrt(c0)
        if root0 is None:
            root0 = QuadExt(Fraction(0), Fraction(1), c0)
        unit = self.shift(-self.lead) * (1 / c0)
        window = unit.trunc if unit.trunc is not None else DEFAULT_ORDER + 1
        y = TruncSeries.constant(Fraction(1), self.var)
        half = Fraction(1, 2)
        for _ in range(64):
            y2 = ((y + unit * y.reciprocal(window)) * half).truncate_to(window)
            if y2 == y:
                break
            y = y2
        else:
            raise AssertionError("series square root failed to converge")
        return (y * root0).shift(self.lead // 2)

    def __repr__(self):
        if not self.coeffs:
            tail = f"O({self.var}^{self.trunc})" if self.trunc is not None else "0"
            return f"TruncSeries({tail})"
        bits = [
            f"({c})*{self.var}^{self.lead + i}"
            for i, c in enumerate(self.coeffs)
            if c
        ]
        tail = f" + O({self.var}^{self.trunc})" if self.trunc is not None else ""
        return "TruncSeries(" + " + ".join(bits) + tail + ")"


@dataclass
class LocalDifferential:
    """A series together with its differential weight (power of dt)."""

    series: TruncSeries
    weight: int

    def __post_init__(self):
        if self.weight not in (0, 1, 2, 3):
            raise ValueError("weight must be a small non-negative power of dt")

    def __add__(self, other: "LocalDifferential"):
        if not isinstance(other, LocalDifferential):
            return NotImplemented
        if self.weight != other.weight:
            raise ValueError("cannot add differentials of different weight")
        return LocalDifferential(self.series + other.series, self.weight)

    def __neg__(self):
        return LocalDifferential(-self.series, self.weight)

    def __sub__(self, other):
        if not isinstance(other, LocalDifferential):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LocalDifferential):
            return LocalDifferential(self.series * other.series, self.weight + other.weight)
        return LocalDifferential(self.series * other, self.weight)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LocalDifferential):
            return LocalDifferential(self.series / other.series, self.weight - other.weight)
        return LocalDifferential(self.series / other, self.weight)

    def contract(self, vector_coeff: TruncSeries) -> "LocalDifferential":
        """Contraction with the vector field vector_coeff * d/dt."""
        if self.weight < 1:
            raise ValueError("cannot contract a weight-0 differential")
        return LocalDifferential(self.series * vector_coeff, self.weight - 1)

    def residue(self):
        """Coefficient of t**-1 dt; requires weight 1 and a window that
        reaches order -1."""
        if self.weight != 1:
            raise ValueError("residue is defined for weight-1 differentials")
        return self.series.coeff(-1)

    def quadratic_residue(self):
        """Coefficient of t**-2 (dt)**2 of a quadratic differential with
        pole order at most 2; higher-order poles are rejected because the
        coefficient would not be coordinate-free."""
        if self.weight != 2:
            raise ValueError("quadratic residue is defined for weight-2 differentials")
        order = self.series.known_order
        if order is not None and order < -2:
            raise ValueError(f"pole order {-order} exceeds 2: quadratic residue undefined")
        return self.series.coeff(-2)

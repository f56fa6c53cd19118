"""Dense univariate polynomials over the package's exact scalar rings.

Coefficients are stored ascending (``coeffs[k]`` multiplies ``var**k``)
and may be Fractions, DualNumbers, QuadExts, or again Polys in a second
variable (used for characteristic polynomials in lam whose coefficients
are polynomials in z).  Two polynomials combine only when their variable
names agree; any non-Poly operand is treated as a ring scalar.

The resultant is a Sylvester determinant expanded without division, so it
stays correct over rings with zero divisors (dual numbers).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import DualNumber, QuadExt

_SCALARS = (int, Fraction, DualNumber, QuadExt)


def _is_zero(c) -> bool:
    return not c


@dataclass
class Poly:
    coeffs: list = field(default_factory=list)
    var: str = "z"

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = cs

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, c, var: str = "z") -> "Poly":
        return cls([c], var)

    @classmethod
    def identity(cls, var: str = "z") -> "Poly":
        return cls([Fraction(0), Fraction(1)], var)

    # -- structure ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def lead(self):
        if self.is_zero:
            return Fraction(0)
        return self.coeffs[-1]

    def _match(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.var != self.var:
                raise ValueError(
                    f"polynomial variables differ: {self.var!r} vs {other.var!r}"
                )
            return other
        if isinstance(other, _SCALARS):
            return Poly([other], self.var)
        return None

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if _is_zero(other):
                return Poly([], self.var)
            return Poly([c * other for c in self.coeffs], self.var)
        o = self._match(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Poly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            inv = 1 / (Fraction(other) if isinstance(other, int) else other)
            return self * inv
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def __divmod__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        inv_lead = 1 / o.lead
        rem = list(self.coeffs)
        qdeg = len(rem) - len(o.coeffs)
        if qdeg < 0:
            return Poly([], self.var), Poly(rem, self.var)
        quot = [Fraction(0)] * (qdeg + 1)
        for k in range(qdeg, -1, -1):
            top = rem[k + o.degree]
            if _is_zero(top):
                continue
            c = top * inv_lead
            quot[k] = c
            for j, b in enumerate(o.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return Poly(quot, self.var), Poly(rem[: o.degree], self.var)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("poly powers take non-negative integer exponents")
        result = Poly([Fraction(1)], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            if self.var != other.var and self.coeffs and other.coeffs:
                return False
            return self.coeffs == other.coeffs
        if isinstance(other, _SCALARS):
            if self.is_zero:
                return _is_zero(other)
            return self.degree == 0 and self.coeffs[0] == other
        return NotImplemented

    # -- calculus and evaluation ----------------------------------------

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        """Horner evaluation; x may live in any ring accepting the
        coefficients (scalars, series)."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def compose(self, inner: "Poly") -> "Poly":
        result = Poly([], inner.var)
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def shifted(self, a) -> "Poly":
        """p(var + a), same variable."""
        return self.compose(Poly([a, Fraction(1)], self.var))

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self / self.lead

    def __repr__(self):
        if self.is_zero:
            return f"Poly(0, {self.var!r})"
        parts = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"({c})*{self.var}")
            else:
                parts.append(f"({c})*{self.var}^{k}")
        return "Poly(" + " + ".join(parts) + f", {self.var!r})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; coefficient ring must be a
    field (Fractions or a quadratic extension)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'): same roots, all simple."""
    if p.degree <= 0:
        return p.monic()
    g = poly_gcd(p, p.derivative())
    return (p / g).monic()


def _det_no_division(rows) -> object:
    """Determinant by first-row cofactor expansion, memoized on the
    surviving column set.  No divisions, so entries may come from any
    commutative ring, dual numbers included."""
    n = len(rows)
    memo: dict = {}

    def go(r: int, cols: tuple) -> object:
        if r == n:
            return 1
        key = (r, cols)
        if key in memo:
            return memo[key]
        acc = None
        for k, c in enumerate(cols):
            e = rows[r][c]
            if _is_zero(e):
                continue
            sub = go(r + 1, cols[:k] + cols[k + 1 :])
            if _is_zero(sub):
                continue
            term = e * sub
            if k & 1:
                term = -term
            acc = term if acc is None else acc + term
        result = 0 if acc is None else acc
        memo[key] = result
        return result

    return go(0, tuple(range(n)))


def resultant(p: Poly, q: Poly):
    """Res(p, q) = lead(p)**deg(q) * prod q(alpha) over the roots of p,
    computed as the Sylvester determinant.  Satisfies
    Res(p, q) = (-1)**(deg p * deg q) * Res(q, p)."""
    if p.is_zero or q.is_zero:
        return Fraction(0)
    m, n = p.degree, q.degree
    if m == 0 and n == 0:
        return Fraction(1)
    if n == 0:
        return q.coeffs[0] ** m
    if m == 0:
        return p.coeffs[0] ** n
    size = m + n
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    rows = []
    for r in range(n):
        rows.append([0] * r + pc + [0] * (n - 1 - r))
    for r in range(m):
        rows.append([0] * r + qc + [0] * (m - 1 - r))
    assert all(len(row) == size for row in rows)
    return _det_no_division(rows)


def char_discriminant(p: Poly):
    """Discriminant of a monic polynomial via the resultant with its own
    derivative: (-1)**(n(n-1)/2) * Res(p, p').

    Normalization check (the sign is fixed once and for all):
    lam**2 - z gives 4z, and lam**3 + p*lam + q gives -4p**3 - 27q**2.
    """
    n = p.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if not p.lead == 1:
        raise ValueError("char_discriminant expects a monic polynomial")
    r = resultant(p, p.derivative())
    if (n * (n - 1) // 2) % 2:
        return -r
    return r


def _int_divisors(n: int) -> list:
    n = abs(n)
    assert n > 0
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for prime, mult in factors.items():
        divs = [dv * prime**e for dv in divs for e in range(mult + 1)]
    return sorted(divs)


def rational_roots(p: Poly):
    """All rational roots of a Fraction-coefficient polynomial.

    Returns (roots, cofactor) where roots is a list of (root, multiplicity)
    pairs sorted by root and cofactor is what is left of p after deflation;
    a nonconstant cofactor has no rational roots (it need not be
    irreducible, only rational-root-free).
    """
    if p.is_zero:
        raise ValueError("zero polynomial has every root")
    roots = []
    work = Poly([Fraction(c) for c in p.coeffs], p.var)
    # split off the root at zero first
    k = 0
    while k <= work.degree and _is_zero(work.coeffs[k]):
        k += 1
    if k:
        roots.append((Fraction(0), k))
        work = Poly(work.coeffs[k:], p.var)
    if work.degree >= 1:
        denlcm = math.lcm(*(c.denominator for c in work.coeffs))
        ints = [c.numerator * (denlcm // c.denominator) for c in work.coeffs]
        g = math.gcd(*ints)
        ints = [c // g for c in ints]
        for num in _int_divisors(ints[0]):
            for den in _int_divisors(ints[-1]):
                if math.gcd(num, den) != 1:
                    continue
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    mult = 0
                    while work.degree >= 1 and _is_zero(work(cand)):
                        work = work // Poly([-cand, Fraction(1)], p.var)
                        mult += 1
                    if mult:
                        roots.append((cand, mult))
    roots.sort(key=lambda pair: pair[0])
    return roots, work

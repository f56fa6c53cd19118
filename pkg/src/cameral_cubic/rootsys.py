"""Integer-realized root systems of types A, B, C, D and G2.

Roots are integer vectors in a fixed ambient realization:

    A_r : e_i - e_j              in R^(r+1), acting on sum-zero tuples
    B_r : +-e_i, +-e_i +- e_j    in R^r
    C_r : +-2e_i, +-e_i +- e_j   in R^r
    D_r : +-e_i +- e_j           in R^r  (rank >= 2)
    G_2 : A_2 short roots together with +-(2e_i - e_j - e_k) in R^3

The bilinear form on Cartan vectors is the standard-representation trace
form sum(x_i * y_i), not the Killing form; for A_(n-1) the Killing form
is the fixed multiple 2n of it, and every downstream quantity is either
invariant under that rescaling or normalized by a constant-ratio check.

Cartan vector coordinates may be any ring elements (Fractions, Polys,
series), so the same pairing code serves exact points and local
sections.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class CartanVector:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]


@dataclass(frozen=True)
class RootSystem:
    lie_type: str
    rank: int
    ambient_dim: int
    roots: tuple
    simple_roots: tuple


def _signed_pairs(r: int):
    for i in range(r):
        for j in range(i + 1, r):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [0] * r
                    v[i] = si
                    v[j] = sj
                    yield tuple(v)


def build_root_system(lie_type: str, rank: int) -> RootSystem:
    """Construct the named root system; raises ValueError for a type or
    rank outside the supported families."""
    t = lie_type.upper()
    roots: list = []
    if t == "A":
        if rank < 1:
            raise ValueError("type A needs rank >= 1")
        dim = rank + 1
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    v = [0] * dim
                    v[i], v[j] = 1, -1
                    roots.append(tuple(v))
        simple = []
        for i in range(rank):
            v = [0] * dim
            v[i], v[i + 1] = 1, -1
            simple.append(tuple(v))
    elif t in ("B", "C"):
        if rank < 1:
            raise ValueError(f"type {t} needs rank >= 1")
        dim = rank
        roots.extend(_signed_pairs(rank))
        for i in range(rank):
            for s in (1, -1):
                v = [0] * rank
                v[i] = s if t == "B" else 2 * s
                roots.append(tuple(v))
        simple = []
        for i in range(rank - 1):
            v = [0] * rank
            v[i], v[i + 1] = 1, -1
            simple.append(tuple(v))
        v = [0] * rank
        v[rank - 1] = 1 if t == "B" else 2
        simple.append(tuple(v))
    elif t == "D":
        if rank < 2:
            raise ValueError("type D needs rank >= 2")
        dim = rank
        roots = list(_signed_pairs(rank))
        simple = []
        for i in range(rank - 1):
            v = [0] * rank
            v[i], v[i + 1] = 1, -1
            simple.append(tuple(v))
        v = [0] * rank
        v[rank - 2], v[rank - 1] = 1, 1
        simple.append(tuple(v))
    elif t == "G":
        if rank != 2:
            raise ValueError("type G exists only in rank 2")
        dim = 3
        for i in range(3):
            for j in range(3):
                if i != j:
                    v = [0, 0, 0]
                    v[i], v[j] = 1, -1
                    roots.append(tuple(v))
        for i in range(3):
            v = [-1, -1, -1]
            v[i] = 2
            roots.append(tuple(v))
            roots.append(tuple(-c for c in v))
        simple = [(1, -1, 0), (-2, 1, 1)]
    else:
        raise ValueError(f"unsupported lie_type: {lie_type!r}")
    roots = sorted(set(roots))
    return RootSystem(t, rank, dim, tuple(roots), tuple(simple))


def _coords(x):
    if isinstance(x, CartanVector):
        return x.coords
    return tuple(x)


def pairing(x, root):
    """Evaluate the root on a Cartan vector: sum of root_i * x_i."""
    acc = None
    for c, r in zip(_coords(x), root, strict=True):
        if r == 0:
            continue
        term = c * r
        acc = term if acc is None else acc + term
    if acc is None:
        raise ValueError("zero vector is not a root")
    return acc


def trace_form(x, y):
    """Standard-representation trace form sum(x_i * y_i)."""
    xs, ys = _coords(x), _coords(y)
    if len(xs) != len(ys):
        raise ValueError("dimension mismatch")
    acc = None
    for a, b in zip(xs, ys):
        term = a * b
        acc = term if acc is None else acc + term
    return acc


def discriminant_h(system: RootSystem, x):
    """Product of all root evaluations: the Weyl-invariant discriminant
    of the Cartan vector (for A_1 at (a, -a) this is -4a**2)."""
    xs = _coords(x)
    if len(xs) != system.ambient_dim:
        raise ValueError("dimension mismatch")
    acc = None
    for root in system.roots:
        p = pairing(xs, root)
        acc = p if acc is None else acc * p
    return acc


def weyl_reflect(x, root):
    """Reflection of a Cartan vector in the hyperplane of a root:
    x - 2 (x, root)/(root, root) * root."""
    xs = _coords(x)
    nn = sum(r * r for r in root)
    proj = pairing(xs, root) * Fraction(2, nn)
    out = tuple(c - proj * r if r else c for c, r in zip(xs, root))
    return CartanVector(out)

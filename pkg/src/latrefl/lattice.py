"""Lattices with exact symmetric bilinear forms.

A lattice is presented by its Gram matrix over the rationals, together with
the minimal positive integer ``scale`` clearing denominators.  Vectors and
sublattices always refer back to an ambient GramLattice.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import linalg
from .errors import DegenerateFormError, NotIntegralError, SpecParseError


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else max(a, b)


@dataclass(frozen=True)
class GramLattice:
    """A finite-rank lattice given by an exact symmetric Gram matrix."""

    gram: tuple  # tuple of tuples of Fraction
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        g = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        for row in g:
            if len(row) != n:
                raise ValueError("gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def scale(self) -> int:
        s = 1
        for row in self.gram:
            for x in row:
                s = _lcm(s, x.denominator)
        return s

    def is_integral(self) -> bool:
        return self.scale == 1

    def gram_rows(self) -> list:
        return [list(row) for row in self.gram]

    def det(self) -> Fraction:
        return linalg.det(self.gram_rows())

    def vector(self, coords) -> "LatticeVector":
        return LatticeVector(self, tuple(Fraction(c) for c in coords))

    def basis_vector(self, i: int) -> "LatticeVector":
        return self.vector([1 if j == i else 0 for j in range(self.rank)])

    def zero(self) -> "LatticeVector":
        return self.vector([0] * self.rank)

    def dot(self, u, v) -> Fraction:
        g = self.gram
        return sum(uc * sum(g[i][j] * vc for j, vc in enumerate(v) if vc)
                   for i, uc in enumerate(u) if uc)

    def to_json(self) -> dict:
        s = self.scale
        return {
            "rank": self.rank,
            "scale": s,
            "entries": [int(x * s) for row in self.gram for x in row],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GramLattice":
        n = data["rank"]
        s = data["scale"]
        e = data["entries"]
        rows = [[Fraction(e[i * n + j], s) for j in range(n)] for i in range(n)]
        return cls(tuple(tuple(r) for r in rows))

    def __repr__(self):
        label = self.name or f"rank-{self.rank} lattice"
        return f"<GramLattice {label}>"


@dataclass(frozen=True)
class LatticeVector:
    ambient: GramLattice
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        if len(self.coords) != self.ambient.rank:
            raise ValueError("coordinate length does not match lattice rank")

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def dot(self, other: "LatticeVector") -> Fraction:
        if other.ambient.gram != self.ambient.gram:
            raise ValueError("vectors live in different lattices")
        return self.ambient.dot(self.coords, other.coords)

    def norm(self) -> Fraction:
        return self.ambient.dot(self.coords, self.coords)

    def __add__(self, other):
        return LatticeVector(self.ambient, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return LatticeVector(self.ambient, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return LatticeVector(self.ambient, tuple(-a for a in self.coords))

    def __rmul__(self, c):
        return LatticeVector(self.ambient, tuple(Fraction(c) * a for a in self.coords))

    def __repr__(self):
        return f"vec{tuple(str(c) for c in self.coords)}"


@dataclass(frozen=True)
class Sublattice:
    """A sublattice given by an independent list of integral basis vectors."""

    ambient: GramLattice
    basis: tuple  # tuple of LatticeVector

    def __post_init__(self):
        for v in self.basis:
            if not v.is_integral():
                raise NotIntegralError("sublattice basis vectors must be integral")
        rows = [[int(c) for c in v.coords] for v in self.basis]
        if rows and linalg.rank(linalg.frac_mat(rows)) != len(rows):
            raise ValueError("sublattice basis is linearly dependent")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_rows(self) -> list:
        return [[int(c) for c in v.coords] for v in self.basis]

    def gram(self, name: str | None = None) -> GramLattice:
        b = self.basis
        rows = [[u.dot(v) for v in b] for u in b]
        return GramLattice(tuple(tuple(r) for r in rows), name=name)

    def contains(self, v: LatticeVector) -> bool:
        if not self.basis:
            return v.is_zero()
        rows = linalg.transpose(linalg.frac_mat(self.basis_rows()))
        sol = linalg.solve(rows, list(v.coords))
        return sol is not None and all(c.denominator == 1 for c in sol)

    def span_contains(self, v: LatticeVector) -> bool:
        if not self.basis:
            return v.is_zero()
        rows = linalg.transpose(linalg.frac_mat(self.basis_rows()))
        return linalg.solve(rows, list(v.coords)) is not None

    def is_saturated(self) -> bool:
        sat = saturate(self)
        return all(self.contains(v) for v in sat.basis)


@dataclass(frozen=True)
class QuotientLattice:
    """Nondegenerate quotient S / rad(S), with lifts back to the ambient."""

    lattice: GramLattice
    lift: tuple          # rows: quotient basis expressed in ambient coords
    radical: tuple       # rows: basis of rad(S) in ambient coords
    ambient: GramLattice

    def lift_vector(self, coords) -> LatticeVector:
        n = self.ambient.rank
        out = [Fraction(0)] * n
        for c, row in zip(coords, self.lift):
            if c:
                for i in range(n):
                    out[i] += Fraction(c) * row[i]
        return LatticeVector(self.ambient, tuple(out))

    def project_vector(self, v: LatticeVector) -> list:
        """Coordinates of v's class in the quotient basis (v must lie in S)."""
        rows = [list(r) for r in self.lift] + [list(r) for r in self.radical]
        sol = linalg.solve(linalg.transpose(linalg.frac_mat(rows)), list(v.coords))
        if sol is None:
            raise ValueError("vector does not lie in the sublattice")
        return sol[: len(self.lift)]


@dataclass(frozen=True)
class DiscriminantGroup:
    invariant_factors: tuple
    generators: tuple    # lifts in L* ⊗ Q, ambient coordinates
    pairing: tuple       # fractional values mod Z, symmetric

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1


# ---------------------------------------------------------------------------
# constructors

def _an_gram(n: int) -> list:
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
        if i + 1 < n:
            g[i][i + 1] = g[i + 1][i] = -1
    return g


def _dn_gram(n: int) -> list:
    # chain 0-1-...-(n-2), with vertex n-1 attached to vertex n-3
    g = _an_gram(n)
    g[n - 1][n - 2] = g[n - 2][n - 1] = 0
    g[n - 1][n - 3] = g[n - 3][n - 1] = -1
    return g


def _en_gram(n: int) -> list:
    # Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
    chain = [1] + list(range(3, n + 1))
    for a, b in zip(chain, chain[1:]):
        g[a - 1][b - 1] = g[b - 1][a - 1] = -1
    g[2 - 1][4 - 1] = g[4 - 1][2 - 1] = -1
    return g


def make_standard(name: str, n: int | None = None) -> GramLattice:
    """Conventional Gram matrices for the named lattices.

    A/D/E are the even root lattices with roots of norm 2, U is the
    hyperbolic plane, I the odd unimodular rank-1 lattice.
    """
    if name == "U":
        return GramLattice(((0, 1), (1, 0)), name="U")
    if name == "I":
        return GramLattice(((1,),), name="I")
    if name in ("A2", "G2root"):
        return GramLattice(tuple(tuple(r) for r in _an_gram(2)), name="A2")
    if name == "A":
        if n is None or n < 1 or n > 24:
            raise ValueError(f"A_n needs 1 <= n <= 24, got {n}")
        return GramLattice(tuple(tuple(r) for r in _an_gram(n)), name=f"A{n}")
    if name == "D":
        if n is None or n < 4 or n > 24:
            raise ValueError(f"D_n needs 4 <= n <= 24, got {n}")
        return GramLattice(tuple(tuple(r) for r in _dn_gram(n)), name=f"D{n}")
    if name == "E":
        if n not in (6, 7, 8):
            raise ValueError(f"E_n needs n in (6, 7, 8), got {n}")
        return GramLattice(tuple(tuple(r) for r in _en_gram(n)), name=f"E{n}")
    m = re.fullmatch(r"([ADE])(\d+)", name)
    if m:
        return make_standard(m.group(1), int(m.group(2)))
    raise ValueError(f"unknown lattice label {name!r}")


def direct_sum(parts: list, name: str | None = None) -> GramLattice:
    total = sum(p.rank for p in parts)
    rows = [[Fraction(0)] * total for _ in range(total)]
    off = 0
    for p in parts:
        for i in range(p.rank):
            for j in range(p.rank):
                rows[off + i][off + j] = p.gram[i][j]
        off += p.rank
    return GramLattice(tuple(tuple(r) for r in rows), name=name)


def rescale(lat: GramLattice, c) -> GramLattice:
    c = Fraction(c)
    if c == 0:
        raise ValueError("rescale factor must be nonzero")
    rows = tuple(tuple(c * x for x in row) for row in lat.gram)
    return GramLattice(rows, name=None)


# ---------------------------------------------------------------------------
# structural operations

def signature(lat: GramLattice) -> tuple[int, int, int]:
    return linalg.signature(lat.gram_rows())


def is_even(lat: GramLattice) -> bool:
    if not lat.is_integral():
        raise NotIntegralError("evenness only makes sense for integral lattices")
    return all(lat.gram[i][i] % 2 == 0 for i in range(lat.rank))


def discriminant_group(lat: GramLattice) -> DiscriminantGroup:
    if not lat.is_integral():
        raise NotIntegralError("discriminant group needs an integral lattice")
    g = [[int(x) for x in row] for row in lat.gram_rows()]
    if lat.rank and linalg.det(linalg.frac_mat(g)) == 0:
        raise DegenerateFormError("form is degenerate")
    d, u, _v = linalg.smith_normal_form(g)
    n = lat.rank
    factors = [d[i][i] for i in range(n) if d[i][i] > 1]
    # generator classes: columns of u^{-1} for the nontrivial factors,
    # pulled back to lattice coordinates via gram^{-1}
    uinv = linalg.inverse(linalg.frac_mat(u))
    ginv = linalg.inverse(linalg.frac_mat(g)) if n else []
    gens = []
    for i in range(n):
        if d[i][i] > 1:
            col = [uinv[r][i] for r in range(n)]
            gens.append(tuple(linalg.mat_vec(ginv, col)))
    # pairing mod Z
    pairing = []
    for a in gens:
        row = []
        for b in gens:
            val = lat.dot(a, b)
            row.append(val - val.__floor__())
        pairing.append(tuple(row))
    return DiscriminantGroup(tuple(factors), tuple(gens), tuple(pairing))


def sublattice(lat: GramLattice, vectors) -> Sublattice:
    return Sublattice(lat, tuple(v if isinstance(v, LatticeVector) else lat.vector(v)
                                 for v in vectors))


def full_sublattice(lat: GramLattice) -> Sublattice:
    return sublattice(lat, [lat.basis_vector(i) for i in range(lat.rank)])


def orthogonal_complement(lat: GramLattice, s: Sublattice) -> Sublattice:
    if s.ambient.gram != lat.gram:
        raise ValueError("sublattice does not live in the given lattice")
    if not s.basis:
        return full_sublattice(lat)
    scale = lat.scale
    rows = []
    for v in s.basis:
        row = linalg.mat_vec(lat.gram_rows(), list(v.coords))
        rows.append([int(x * scale) for x in row])
    kernel = linalg.integer_kernel(rows)
    return sublattice(lat, kernel)


def saturate(s: Sublattice) -> Sublattice:
    rows = s.basis_rows()
    sat = linalg.saturate_rows(rows, s.ambient.rank)
    return sublattice(s.ambient, sat)


def radical_quotient(s: Sublattice, name: str | None = None) -> QuotientLattice:
    b = s.basis_rows()
    k = s.rank
    gram_s = [[u.dot(v) for v in s.basis] for u in s.basis]
    scale = 1
    for row in gram_s:
        for x in row:
            scale = _lcm(scale, Fraction(x).denominator)
    int_gram = [[int(x * scale) for x in row] for row in gram_s]
    rad = linalg.integer_kernel(int_gram) if k else []
    comp = linalg.complete_to_unimodular(rad, k) if rad else linalg.int_identity(k)
    # induced form on the chosen complement
    qgram = [[sum(sum(Fraction(ci) * Fraction(cj) * gram_s[i][j]
                      for j, cj in enumerate(cv)) for i, ci in enumerate(cu))
              for cv in comp] for cu in comp]
    to_ambient = lambda row: [sum(Fraction(c) * Fraction(b[i][j]) for i, c in enumerate(row))
                              for j in range(s.ambient.rank)]
    lift = tuple(tuple(to_ambient(row)) for row in comp)
    radical = tuple(tuple(to_ambient(row)) for row in rad)
    return QuotientLattice(
        lattice=GramLattice(tuple(tuple(r) for r in qgram), name=name),
        lift=lift,
        radical=radical,
        ambient=s.ambient,
    )


def divisor(v: LatticeVector) -> int:
    """gcd of the products of v with an ambient basis."""
    if not v.is_integral():
        raise NotIntegralError("divisor needs an integral vector")
    if v.is_zero():
        raise ValueError("divisor of the zero vector is undefined")
    lat = v.ambient
    if not lat.is_integral():
        raise NotIntegralError("divisor needs an integral ambient lattice")
    vals = linalg.mat_vec(lat.gram_rows(), list(v.coords))
    g = 0
    for x in vals:
        g = gcd(g, int(x))
    return g


# ---------------------------------------------------------------------------
# lattice-spec mini-grammar: "2E8+2U+3I", "I(-1)", "2E8+A2+U"

_TERM_RE = re.compile(r"^(\d+)?([ADEUI])(\d+)?(?:\((-?\d+(?:/\d+)?)\))?$")


def parse_spec(text: str) -> GramLattice:
    """Parse a lattice spec like ``2E8+2U+3I`` into a direct sum."""
    if not text or not text.strip():
        raise SpecParseError("empty lattice spec")
    parts = []
    for pos, term in enumerate(t.strip() for t in text.split("+")):
        m = _TERM_RE.match(term)
        if not m:
            raise SpecParseError(f"bad term {term!r} at position {pos}")
        count = int(m.group(1)) if m.group(1) else 1
        letter = m.group(2)
        sub = int(m.group(3)) if m.group(3) else None
        factor = m.group(4)
        if letter in "ADE":
            if sub is None:
                raise SpecParseError(f"{letter} needs a subscript in term {term!r}")
            base = make_standard(letter, sub)
        else:
            if sub is not None:
                raise SpecParseError(f"{letter} takes no subscript in term {term!r}")
            base = make_standard(letter)
        if factor is not None:
            base = rescale(base, Fraction(factor))
        if base.rank * count + sum(p.rank for p in parts) > 64:
            raise SpecParseError("rank overflow in lattice spec")
        parts.extend([base] * count)
    return direct_sum(parts, name=text.strip())


def lattice_to_json_str(lat: GramLattice) -> str:
    return json.dumps(lat.to_json(), sort_keys=True)


def congruence_rows(lat: GramLattice, d: int) -> list:
    """Basis rows of {w in L : w . x == 0 mod d for all x in L} = dL* ∩ L."""
    g = [[int(c) for c in row] for row in lat.gram_rows()]
    dd, _u, v = linalg.smith_normal_form(g)
    n = lat.rank
    rows = []
    for j in range(n):
        scale = d // gcd(d, abs(int(dd[j][j])) or d)
        rows.append([scale * int(v[i][j]) for i in range(n)])
    return rows


def is_prime(d: int) -> bool:
    if d < 2:
        return False
    f = 2
    while f * f <= d:
        if d % f == 0:
            return False
        f += 1
    return True

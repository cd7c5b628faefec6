"""Truncated intersection rings of the resolved secant-variety geometry.

Two rings over the integers, each a quotient of Z[u, g] with u^3 = 0:

  R_YTILDE  g = y,  y^3 = 3uy^2 - 6u^2y;   orientation class u^2 y^2
  R_C       g = x,  x^2 = ux - u^2

Classes are kept in normal form: u-degree <= 2 and g-degree below the
relation degree.  All coefficients are unbounded integers.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import LatticeError

R_YTILDE = "R_Ytilde"
R_C = "R_C"

# relation g^k = sum of lower-degree monomials, as {(i, j): coefficient}
_RELATIONS = {
    R_YTILDE: (3, {(1, 2): 3, (2, 1): -6}),
    R_C: (2, {(1, 1): 1, (2, 0): -1}),
}

_VAR = {R_YTILDE: "y", R_C: "x"}


def _reduce_map(ring, coeffs):
    gdeg, rel = _RELATIONS[ring]
    work = dict(coeffs)
    done = {}
    while work:
        (i, j), c = work.popitem()
        if c == 0:
            continue
        if i >= 3:
            continue
        if j >= gdeg:
            for (di, dj), rc in rel.items():
                key = (i + di, j - gdeg + dj)
                work[key] = work.get(key, 0) + c * rc
            continue
        done[(i, j)] = done.get((i, j), 0) + c
    return {k: v for k, v in sorted(done.items()) if v}


@dataclass(frozen=True)
class PolyClass:
    """An integer cohomology class in normal form."""

    ring: str
    coeffs: tuple   # sorted ((i, j), c) with u^i g^j monomials

    def __post_init__(self):
        if self.ring not in _RELATIONS:
            raise ValueError(f"unknown ring {self.ring!r}")
        object.__setattr__(
            self, "coeffs",
            tuple(sorted(_reduce_map(self.ring, dict(self.coeffs)).items())))

    @classmethod
    def make(cls, ring, coeffs) -> "PolyClass":
        return cls(ring, tuple(dict(coeffs).items()))

    def coeff(self, i, j) -> int:
        return dict(self.coeffs).get((i, j), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set:
        return {i + j for (i, j), _c in self.coeffs}

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs:
            out[k] = out.get(k, 0) + c
        return PolyClass.make(self.ring, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, n: int):
        return PolyClass.make(self.ring, {k: n * c for k, c in self.coeffs})

    def __mul__(self, other):
        self._check(other)
        out = {}
        for (i1, j1), c1 in self.coeffs:
            for (i2, j2), c2 in other.coeffs:
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return PolyClass.make(self.ring, out)

    def _check(self, other):
        if not isinstance(other, PolyClass) or other.ring != self.ring:
            raise LatticeError("classes live in different rings")

    def __str__(self):
        if not self.coeffs:
            return "0"
        g = _VAR[self.ring]
        terms = []
        for (i, j), c in self.coeffs:
            mono = "".join(
                (f"u^{i}" if i > 1 else "u" * i,
                 f"{g}^{j}" if j > 1 else g * j)) or "1"
            if mono != "1" and abs(c) == 1:
                terms.append(("-" if c < 0 else "") + mono)
            else:
                terms.append(f"{c}" + ("" if mono == "1" else mono))
        out = terms[0]
        for t in terms[1:]:
            out += (" - " + t[1:]) if t.startswith("-") else (" + " + t)
        return out


def unit(ring) -> PolyClass:
    return PolyClass.make(ring, {(0, 0): 1})


def u(ring) -> PolyClass:
    return PolyClass.make(ring, {(1, 0): 1})


def gen(ring) -> PolyClass:
    """The second generator: y in R_YTILDE, x in R_C."""
    return PolyClass.make(ring, {(0, 1): 1})


def reduce(c: PolyClass) -> PolyClass:
    return c    # classes normalize on construction; kept for API symmetry


def intersection_number(a: PolyClass, b: PolyClass) -> int:
    """Coefficient of the orientation class u^2 y^2 in a*b (degree 4)."""
    if a.ring != R_YTILDE or b.ring != R_YTILDE:
        raise LatticeError("intersection numbers live in R_Ytilde")
    degs = {da + db for da in (a.degrees() or {0}) for db in (b.degrees() or {0})}
    if degs - {4}:
        raise LatticeError("combined algebraic degree must be 4")
    return (a * b).coeff(2, 2)


def chern_inverse(n: int) -> PolyClass:
    """(1 + u)^(-n) truncated mod u^3."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return PolyClass.make(R_YTILDE, {(0, 0): 1, (1, 0): -n,
                                     (2, 0): n * (n + 1) // 2})


def restrict(c: PolyClass) -> PolyClass:
    """The restriction map R_YTILDE -> R_C: u -> u, y -> 2x."""
    if c.ring != R_YTILDE:
        raise LatticeError("restriction is defined on R_Ytilde")
    out = {}
    for (i, j), coeff in c.coeffs:
        out[(i, j)] = out.get((i, j), 0) + coeff * 2 ** j
    return PolyClass.make(R_C, out)


def class_a() -> PolyClass:
    """The secant-surface class a = y^2 - 2uy + 4u^2."""
    return PolyClass.make(R_YTILDE, {(0, 2): 1, (1, 1): -2, (2, 0): 4})


def class_h() -> PolyClass:
    """The hyperplane-section class h = y^2 - 3uy + 6u^2.

    The coefficient of u^2 is forced by the identity 2h = 3a - y^2.
    """
    return PolyClass.make(R_YTILDE, {(0, 2): 1, (1, 1): -3, (2, 0): 6})


def restriction_check() -> bool:
    """The defining relation of R_YTILDE must map into the ideal of R_C."""
    y = gen(R_YTILDE)
    uu = u(R_YTILDE)
    rel = y * y * y - 3 * (uu * y * y) + 6 * (uu * uu * y)
    return restrict(rel).is_zero()


def secant_table() -> dict:
    """The intersection-number table, with every identity re-verified."""
    y = gen(R_YTILDE)
    uu = u(R_YTILDE)
    a = class_a()
    h = class_h()
    y2 = y * y
    table = {
        "y^4": intersection_number(y2, y2),
        "a.y^2": intersection_number(a, y2),
        "a^2": intersection_number(a, a),
        "h.y^2": intersection_number(h, y2),
        "h^2": intersection_number(h, h),
    }
    checks = {
        "3a - y^2 = 2h": (3 * a - y2 - 2 * h).is_zero(),
        "u y^3 = 3 u^2 y^2": (uu * y * y * y -
                              3 * (uu * uu * y * y)).is_zero(),
        "restriction kills the relation": restriction_check(),
        "restriction of a": str(restrict(a)),
    }
    expected = {"y^4": 3, "a.y^2": 1, "a^2": 3, "h.y^2": 0, "h^2": 6}
    if table != expected or not all(
            v is True for k, v in checks.items() if k != "restriction of a"):
        raise LatticeError("secant-variety intersection table failed to verify")
    return {
        "table": table,
        "checks": checks,
        "notes": "h corrected to y^2 - 3uy + 6u^2, forced by 2h = 3a - y^2",
    }

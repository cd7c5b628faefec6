"""Exact enumeration of lattice vectors and crystallographic roots.

The Fincke-Pohst tree search itself lives in a kernel module; the compiled
extension is used when available and the pure-Python twin otherwise (set
LATREFL_PURE=1 to force the fallback).
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import linalg
from .errors import LatticeError, NotIntegralError
from .lattice import (GramLattice, LatticeVector, Sublattice,
                      discriminant_group)


def _pick_kernel():
    if not os.environ.get("LATREFL_PURE"):
        try:
            from . import _kernel_cy
            return _kernel_cy
        except ImportError:
            pass
    from . import _kernel_py
    return _kernel_py


_kernel = _pick_kernel()
BACKEND = _kernel.BACKEND
DEFAULT_BUDGET = 20_000_000


@dataclass(frozen=True)
class Root:
    """A positive-norm vector whose reflection preserves its lattice."""

    vector: LatticeVector

    @property
    def norm(self) -> Fraction:
        return self.vector.norm()

    @property
    def lattice(self) -> GramLattice:
        return self.vector.ambient

    def reflect(self, x: LatticeVector) -> LatticeVector:
        r = self.vector
        c = 2 * x.dot(r) / self.norm
        return x - c * r

    def __repr__(self):
        return f"Root({tuple(str(c) for c in self.vector.coords)}, norm={self.norm})"


@lru_cache(maxsize=256)
def _reduced_data(lat: GramLattice):
    """(reduced gram, transform u, u^{-1}, ldl d, ldl l) for a p.d. lattice."""
    g = lat.gram_rows()
    if lat.rank == 0:
        return ([], [], [], [], [])
    if not linalg.is_pos_def(g):
        raise LatticeError("lattice is not positive definite")
    g2, u = linalg.lll_gram(g)
    d, l = linalg.ldl(g2)
    uinv = linalg.inverse(linalg.frac_mat(u))
    return (g2, u, uinv, d, l)


def lll_reduce(lat: GramLattice):
    """LLL-reduced Gram and the unimodular transform u (gram' = u g u^T)."""
    g2, u, _uinv, _d, _l = _reduced_data(lat)
    return GramLattice(tuple(tuple(r) for r in g2)), [list(r) for r in u]


def _iter_reduced(lat, shift, target, constraints, budget):
    """Yield (reduced_x, original_coords) for solutions of the affine problem.

    shift and constraints are given in original coordinates.
    """
    _g2, u, uinv, d, l = _reduced_data(lat)
    n = lat.rank
    if n == 0:
        if Fraction(target) == 0:
            yield ((), ())
        return
    shift_red = linalg.mat_vec(linalg.transpose(uinv), [Fraction(s) for s in shift])
    cons_red = []
    for uu, c in constraints:
        cons_red.append((linalg.mat_vec(u, [Fraction(x) for x in uu]), Fraction(c)))
    # map solutions back with integer arithmetic (the per-solution Fraction
    # matvec dominates the whole enumeration otherwise): clear the shift
    # denominators once, then orig = ((x * den + shift * den) . u) / den
    den = 1
    for s in shift_red:
        den = den * s.denominator // gcd(den, s.denominator)
    sint = [int(s * den) for s in shift_red]
    uint = [[int(c) for c in row] for row in u]
    for x in _kernel.iter_qf(d, l, shift_red, Fraction(target), cons_red, budget):
        y = [int(x[i]) * den + sint[i] for i in range(n)]
        orig = tuple(Fraction(sum(y[i] * uint[i][j] for i in range(n)), den)
                     for j in range(n))
        yield (x, orig)


def iter_norm_vectors(lat: GramLattice, n, shift=None, constraints=(),
                      budget=DEFAULT_BUDGET):
    """Stream vectors v in shift + L with v.v == n (original coordinates)."""
    shift = shift if shift is not None else [0] * lat.rank
    for _x, orig in _iter_reduced(lat, shift, n, constraints, budget):
        yield LatticeVector(lat, orig)


def enumerate_norm(lat: GramLattice, n, budget=DEFAULT_BUDGET):
    """All v in L with v.v == n, deterministically ordered."""
    out = sorted(_iter_reduced(lat, [0] * lat.rank, n, (), budget),
                 key=lambda p: p[0])
    return [LatticeVector(lat, orig) for _x, orig in out]


def enumerate_affine(lat: GramLattice, shift, n, budget=DEFAULT_BUDGET):
    """All v in shift + L with v.v == n, deterministically ordered."""
    out = sorted(_iter_reduced(lat, shift, n, (), budget), key=lambda p: p[0])
    return [LatticeVector(lat, orig) for _x, orig in out]


# ---------------------------------------------------------------------------
# crystallographic roots

def is_crystallographic(lat: GramLattice, v: LatticeVector) -> bool:
    """True when the reflection in v maps the lattice onto itself."""
    nv = v.norm()
    if nv <= 0:
        return False
    for i in range(lat.rank):
        x = lat.basis_vector(i)
        img = x - (2 * x.dot(v) / nv) * v
        if not img.is_integral():
            return False
    return True


def derive_root_norms(lat: GramLattice) -> list:
    """Admissible root data [(norm, denominator)] for an integral lattice.

    Candidate norms are 2/d for divisors d of the discriminant-group
    exponent; a root of norm 2/d is searched as w/d with w in L of norm 2d.
    (Exact for the squarefree exponents occurring here.)
    """
    if not lat.is_integral():
        raise NotIntegralError("root-norm derivation needs an integral lattice")
    e = discriminant_group(lat).exponent
    out = []
    for d in range(1, e + 1):
        if e % d == 0:
            out.append((Fraction(2, d), d))
    return out


def _mirror_vectors(lat: GramLattice, budget):
    """Primitive w in L with w.w | 2 div(w): the crystallographic mirrors.

    For primitive w the reflection in w preserves L exactly when the norm
    divides twice the divisor (gcd of w against L), which forces w/div(w)
    to be a dual vector of norm 1/div or 2/div <= 2.  Enumerating those
    small-norm dual vectors stays cheap even when the discriminant-group
    exponent is large.
    """
    e = discriminant_group(lat).exponent
    ginv = linalg.inverse(linalg.frac_mat(lat.gram_rows()))
    dual = GramLattice(tuple(tuple(r) for r in ginv))
    out = []
    for d in range(1, e + 1):
        if e % d:
            continue
        for m in (Fraction(1, d), Fraction(2, d)):
            for v in enumerate_norm(dual, m, budget=budget):
                # dual coords -> coords in the basis of L
                w = [d * sum(v.coords[i] * ginv[i][j] for i in range(lat.rank))
                     for j in range(lat.rank)]
                if any(c.denominator != 1 for c in w):
                    continue
                wv = LatticeVector(lat, w)
                if linalg.vec_gcd([int(c) for c in w]) != 1:
                    continue
                from .lattice import divisor
                if (2 * divisor(wv)) % wv.norm() == 0:
                    out.append(wv)
    return out


def _mirror_vectors_within(lat: GramLattice, within: Sublattice, e, budget):
    """Mirrors of L lying in a definite sublattice S.

    A primitive mirror w satisfies w.w | 2 div(w) and div(w) | e, so the
    integer norm w.w divides 2d for some divisor d of e.  That bounds the
    search to a handful of small norms inside S itself, after reducing the
    basis of S (which may be badly skewed, e.g. the complement of a deep
    controlling vector).
    """
    from .lattice import congruence_rows, divisor, is_prime
    n = lat.rank
    gram = linalg.frac_mat(lat.gram_rows())
    brows = [[Fraction(c) for c in b] for b in within.basis_rows()]
    span_perp = linalg.rational_kernel(linalg.frac_mat(
        [[sum(b[i] * gram[i][j] for i in range(n)) for j in range(n)]
         for b in brows]))

    def space(smat):
        # rows of smat cut down to span(S), basis LLL-reduced (the raw
        # basis may be badly skewed, e.g. for the complement of a deep
        # controlling vector)
        if span_perp:
            cond = [[sum(Fraction(smat[i][k]) * gram[k][j] * Fraction(y[j])
                         for k in range(n) for j in range(n))
                     for i in range(len(smat))] for y in span_perp]
            kern = linalg.integer_kernel(linalg.frac_mat(cond))
        else:
            kern = [[int(i == j) for j in range(len(smat))]
                    for i in range(len(smat))]
        basis = [[sum(kv[i] * smat[i][j] for i in range(len(smat)))
                  for j in range(n)] for kv in kern]
        vecs = [LatticeVector(lat, [Fraction(x) for x in row])
                for row in basis]
        sg, u = linalg.lll_gram(linalg.frac_mat(
            [[a.dot(b) for b in vecs] for a in vecs]))
        basis = [[sum(int(u[i][k]) * basis[k][j] for k in range(len(basis)))
                  for j in range(n)] for i in range(len(basis))]
        return basis, GramLattice(tuple(tuple(x for x in row) for row in sg))

    # norms 1 and 2 need the whole of S; a mirror of norm m > 2 has
    # divisor d with m | 2d, so for prime d it lies in dL* ∩ L and the
    # search shrinks to that congruence sublattice
    plan = {1: {1, 2}}
    for d in range(2, e + 1):
        if e % d:
            continue
        ms = {m for m in range(3, 2 * d + 1) if (2 * d) % m == 0}
        if is_prime(d):
            plan[d] = ms
        else:
            plan[1] |= ms
    out = []
    seen = set()
    for d in sorted(plan):
        if d == 1:
            smat = [[int(i == j) for j in range(n)] for i in range(n)]
        else:
            smat = congruence_rows(lat, d)
        basis, slat = space(smat)
        for m in sorted(plan[d]):
            for v in enumerate_norm(slat, m, budget=budget):
                w = [sum(v.coords[i] * basis[i][j]
                         for i in range(len(basis))) for j in range(n)]
                if linalg.vec_gcd([int(x) for x in w]) != 1:
                    continue
                wv = LatticeVector(lat, w)
                if wv.coords in seen:
                    continue
                if (2 * divisor(wv)) % wv.norm() == 0:
                    seen.add(wv.coords)
                    out.append(wv)
    return out


def roots_of(lat: GramLattice, within: Sublattice | None = None,
             budget=DEFAULT_BUDGET) -> list:
    """All crystallographic roots of the lattice, grouped by descending norm.

    For an indefinite lattice the caller must restrict the search to a
    positive definite sublattice via ``within``; the crystallographic test
    is always taken with respect to the ambient lattice.
    """
    from .lattice import divisor
    norm_data = derive_root_norms(lat)
    e = discriminant_group(lat).exponent
    if within is None:
        p, q, z = linalg.signature(lat.gram_rows())
        if q or z:
            raise LatticeError("indefinite lattice: restrict the search with `within`")
        mirrors = _mirror_vectors(lat, budget)
    else:
        if within.ambient.gram != lat.gram:
            raise LatticeError("`within` does not live in the given lattice")
        mirrors = _mirror_vectors_within(lat, within, e, budget)
    roots = []
    used = set()
    # norms descending: each mirror contributes one root, at the largest
    # admissible norm reachable by a rational rescaling
    for n, _d in sorted(norm_data, reverse=True):
        for w in mirrors:
            if w.coords in used:
                continue
            c2 = n / w.norm()
            cn, cd = c2.numerator, c2.denominator
            sn, sd = _isqrt_exact(cn), _isqrt_exact(cd)
            if sn is None or sd is None:
                continue
            r = Fraction(sn, sd) * w
            if is_crystallographic(lat, r):
                used.add(w.coords)
                roots.append(Root(r))
    roots.sort(key=lambda r: (-r.norm, r.vector.coords))
    return roots


def _isqrt_exact(n: int):
    from math import isqrt
    s = isqrt(n)
    return s if s * s == n else None

"""Vinberg's algorithm on a hyperbolic lattice of signature (n, 1).

Roots are accepted in increasing weight (r.v0)^2/(r.r), starting from a
simple system of the roots orthogonal to the controlling vector v0; a root
is accepted when it has nonpositive products with everything accepted so
far.  The run stops once the accepted mirrors cut out a finite-volume
polyhedron.

The finite-volume test is polyhedral and exact: the chamber
C = {x : x . r <= 0 for all accepted r} is a rational cone, and the cut
polyhedron has finite hyperbolic volume exactly when C is pointed and
every extreme ray of C is time-like or null, i.e. C lies inside the solid
light cone (whose interior rays are the ordinary vertices and whose null
rays are the ideal vertices of the polyhedron).  The extreme rays are
computed by the double description method in exact rational arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from . import dynkin, enumlib, linalg, rootsys
from .enumlib import Root
from .errors import LatticeError
from .lattice import (GramLattice, LatticeVector, congruence_rows, divisor,
                      is_prime, orthogonal_complement, signature, sublattice)

# node budget for a full hyperbolic run: the candidate searches at large
# weights walk far bigger trees than any single definite enumeration
RUN_BUDGET = 2_000_000_000


@dataclass
class VinbergRun:
    lattice: GramLattice
    v0: LatticeVector
    accepted: list = field(default_factory=list)   # Root
    weights: list = field(default_factory=list)    # Fraction, parallel
    max_weight: Fraction = Fraction(1200)
    status: str = "running"

    def diagram(self) -> dynkin.Diagram:
        return dynkin.build_diagram(self.accepted)

    def norm_census(self) -> dict:
        out = {}
        for r in self.accepted:
            out[r.norm] = out.get(r.norm, 0) + 1
        return out

    def to_json(self) -> dict:
        return {
            "v0": [str(c) for c in self.v0.coords],
            "status": self.status,
            "max_weight": str(self.max_weight),
            "roots": [[str(c) for c in r.vector.coords] for r in self.accepted],
            "norms": [str(r.norm) for r in self.accepted],
            "weights": [str(w) for w in self.weights],
        }


def _check_v0(lat, v0):
    if v0.norm() >= 0:
        raise LatticeError("controlling vector must have negative norm")
    if not v0.is_integral():
        raise LatticeError("controlling vector must be a lattice vector")


def stabilizer_chamber(lat: GramLattice, v0: LatticeVector,
                       budget=enumlib.DEFAULT_BUDGET) -> list:
    """Simple system for the finite root system orthogonal to v0."""
    _check_v0(lat, v0)
    perp = orthogonal_complement(lat, sublattice(lat, [v0]))
    roots = enumlib.roots_of(lat, within=perp, budget=budget)
    return rootsys.simple_system(roots)


def _solve_linear(a, m):
    """Integer vector x with sum a_i x_i = m, or None."""
    g, x = 0, [0] * len(a)
    for i, ai in enumerate(a):
        ai = int(ai)
        if ai == 0:
            continue
        if g == 0:
            g = abs(ai)
            x = [0] * len(a)
            x[i] = 1 if ai > 0 else -1
        else:
            # extended euclid on (g, ai)
            old_r, r = g, ai
            old_s, s = 1, 0
            while r:
                q = old_r // r
                old_r, r = r, old_r - q * r
                old_s, s = s, old_s - q * s
            t = (old_r - old_s * g) // ai
            x = [old_s * c for c in x]
            x[i] += t
            g = old_r
            if g < 0:
                g, x = -g, [-c for c in x]
    if g == 0:
        return [0] * len(a) if m == 0 else None
    if m % g:
        return None
    return [(m // g) * c for c in x]


def _search_space(lat: GramLattice, v0: LatticeVector, d: int):
    """(a_v0 on the search lattice, perp basis rows in L coords, perp gram).

    For a prime denominator d > 1, a root w/d of norm 2/d forces
    (x . w) w ∈ dL for every x, hence w ∈ dL* for primitive w; the search is
    then restricted to that congruence sublattice.
    """
    n = lat.rank
    if d == 1 or not is_prime(d):
        smat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    else:
        smat = congruence_rows(lat, d)
    gram = lat.gram_rows()
    gv0 = linalg.mat_vec(gram, list(v0.coords))
    a_v0 = [int(sum(Fraction(row[j]) * gv0[j] for j in range(n)))
            for row in smat]
    ker = linalg.integer_kernel(linalg.frac_mat([[Fraction(c) for c in a_v0]]))
    b0 = []
    for kv in ker:
        b0.append([sum(kv[i] * Fraction(smat[i][j]) for i in range(len(smat)))
                   for j in range(n)])
    # LLL-reduce the complement basis: the kernel rows can be badly skewed
    # (huge entries for a deep controlling vector), which wrecks the
    # enumeration intervals
    gram0 = [[lat.dot(a, b) for b in b0] for a in b0]
    gram0, u = linalg.lll_gram(linalg.frac_mat(gram0))
    b0 = [[sum(Fraction(u[i][k]) * b0[k][j] for k in range(len(b0)))
           for j in range(n)] for i in range(len(b0))]
    l0 = GramLattice(tuple(tuple(x for x in row) for row in gram0))
    return smat, a_v0, b0, l0


def run_vinberg(lat: GramLattice, v0: LatticeVector, max_weight=Fraction(1200),
                budget=enumlib.DEFAULT_BUDGET, log=None) -> VinbergRun:
    """Fundamental root set for the reflection group of a hyperbolic lattice.

    ``log``, when given, is called with a progress line per stage.
    """
    p, q, z = signature(lat)
    if q != 1 or z != 0:
        raise LatticeError("lattice must have signature (n, 1)")
    _check_v0(lat, v0)
    max_weight = Fraction(max_weight)
    run = VinbergRun(lat, v0, max_weight=max_weight)
    for r in stabilizer_chamber(lat, v0, budget=budget):
        run.accepted.append(r)
        run.weights.append(Fraction(0))
    if log:
        log(f"stabilizer: {len(run.accepted)} roots")
    if finite_volume_check(run):
        run.status = "finite_volume"
        return run

    v0n = v0.norm()
    gv = divisor(v0)
    spaces = {}

    # batches (weight, norm n, denominator d, M = d r . v0 < 0), weight = M^2/(n d^2)
    batches = {}
    for n, d in enumlib.derive_root_norms(lat):
        if d not in spaces:
            spaces[d] = _search_space(lat, v0, d)
        bign = n * d * d
        mmax = isqrt(int(max_weight * bign))
        while Fraction(mmax * mmax, bign) > max_weight:
            mmax -= 1
        for m in range(gv, mmax + 1, gv):
            batches.setdefault(Fraction(m * m, bign), []).append((n, d, -m))

    for weight in sorted(batches):
        cands = []
        for n, d, m in sorted(batches[weight]):
            cands.extend(_batch_candidates(lat, run, v0, v0n, spaces[d],
                                           n, d, m, budget))
        if log:
            log(f"weight {weight}: {len(cands)} candidates, "
                f"{len(run.accepted)} accepted")
        cands.sort(key=lambda t: t[0].coords)
        seen = set()
        added = False
        for w, d in cands:
            if w.coords in seen:
                continue
            seen.add(w.coords)
            r = Root(Fraction(1, d) * w)
            if any(r.vector.dot(b.vector) > 0 for b in run.accepted):
                continue
            run.accepted.append(r)
            run.weights.append(weight)
            added = True
        # one polyhedral check per accepting batch: all roots of a given
        # weight belong to the fundamental system together, and the check
        # itself costs more than a batch
        if added and finite_volume_check(run):
            run.status = "finite_volume"
            return run
    run.status = "budget_exhausted"
    return run


def _batch_candidates(lat, run, v0, v0n, space, n, d, m, budget):
    """Candidates w = d r in L with w.w = n d^2, w.v0 = m (< 0), as (w, d)."""
    smat, a_v0, b0, l0 = space
    rank0 = len(b0)
    bign = n * d * d
    target = bign - Fraction(m * m, v0n)
    if target < 0:
        return []
    xm = _solve_linear(a_v0, m)
    if xm is None:
        return []
    w0 = [sum(x * Fraction(row[j]) for x, row in zip(xm, smat))
          for j in range(lat.rank)]
    coef = Fraction(m, v0n)
    shift_amb = [w - coef * c for w, c in zip(w0, v0.coords)]
    shift = linalg.solve(linalg.transpose(linalg.frac_mat(b0)), shift_amb)
    if shift is None:
        return []
    gram = lat.gram_rows()
    cons = []
    for b in run.accepted:
        gb = linalg.mat_vec(gram, list(b.vector.coords))
        u = [sum(Fraction(b0[i][j]) * gb[j] for j in range(len(gb)))
             for i in range(rank0)]
        cons.append((u, -coef * v0.dot(b.vector)))
    out = []
    for y in enumlib.iter_norm_vectors(l0, target, shift=shift,
                                       constraints=cons, budget=budget):
        amb = [coef * c for c in v0.coords]
        for ci, row in zip(y.coords, b0):
            if ci:
                for j in range(len(amb)):
                    amb[j] += ci * row[j]
        w = LatticeVector(lat, amb)
        if not w.is_integral():
            continue
        r = Fraction(1, d) * w
        if enumlib.is_crystallographic(lat, r):
            out.append((w, d))
    return out


# ---------------------------------------------------------------------------
# finite-volume test

def _primitive_ray(v):
    """Scale a rational vector to a primitive integer tuple."""
    mult = 1
    for x in v:
        den = Fraction(x).denominator
        mult = mult * den // gcd(mult, den)
    iv = [int(Fraction(x) * mult) for x in v]
    g = 0
    for x in iv:
        g = gcd(g, x)
    return tuple(x // g for x in iv) if g else tuple(iv)


def _extreme_rays(rows):
    """Extreme rays of the pointed cone {x : A x <= 0}, A = rows.

    Double description: start from a simplicial subcone cut out by n
    independent rows, then add the remaining constraints one at a time,
    combining adjacent rays across each new hyperplane.  Adjacency of two
    rays is the standard combinatorial test: no third ray is active on
    every constraint the pair shares.  Exact rational arithmetic
    throughout; each ray is kept as a primitive integer vector.
    """
    n = len(rows[0])

    def dot(a, r):
        return sum(Fraction(a[k]) * r[k] for k in range(n))

    idx = []
    base = []
    for i, row in enumerate(rows):
        if linalg.rank(linalg.frac_mat(base + [row])) > len(base):
            base.append(row)
            idx.append(i)
        if len(base) == n:
            break
    inv = linalg.inverse(linalg.frac_mat(base))
    rays = [_primitive_ray([-inv[i][j] for i in range(n)]) for j in range(n)]
    done = list(idx)
    masks = []
    for r in rays:
        mk = 0
        for t, i in enumerate(done):
            if dot(rows[i], r) == 0:
                mk |= 1 << t
        masks.append(mk)
    for i, a in enumerate(rows):
        if i in idx:
            continue
        t = len(done)
        slack = [dot(a, r) for r in rays]
        inside = [(r, mk, sv) for r, mk, sv in zip(rays, masks, slack)
                  if sv < 0]
        on = [(r, mk) for r, mk, sv in zip(rays, masks, slack) if sv == 0]
        outside = [(r, mk, sv) for r, mk, sv in zip(rays, masks, slack)
                   if sv > 0]
        fresh = []
        for rp, mp, sp in inside:
            for rm, mm, sm in outside:
                common = mp & mm
                adjacent = True
                for r2, m2 in zip(rays, masks):
                    if r2 is rp or r2 is rm:
                        continue
                    if common & ~m2 == 0:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                fresh.append((_primitive_ray(
                    [sm * Fraction(x) - sp * Fraction(y)
                     for x, y in zip(rp, rm)]), common | (1 << t)))
        rays = [r for r, _mk, _sv in inside]
        masks = [mk for _r, mk, _sv in inside]
        for r, mk in on:
            rays.append(r)
            masks.append(mk | (1 << t))
        seen = set(rays)
        for r, mk in fresh:
            if r in seen:
                continue
            seen.add(r)
            rays.append(r)
            masks.append(mk)
        done.append(i)
    return rays


def finite_volume_check(run: VinbergRun) -> bool:
    """True iff the accepted mirrors bound a finite-volume polyhedron.

    The chamber cone {x : x . r <= 0 for all accepted r} must be pointed
    (else it contains a whole line, and the solid light cone contains
    none) and every one of its extreme rays must have nonpositive norm:
    time-like rays are ordinary vertices of the polyhedron, null rays are
    ideal vertices, and a space-like ray would open the chamber up to a
    cusp of infinite volume.
    """
    lat = run.lattice
    n = lat.rank
    size = len(run.accepted)
    if size < n:
        # fewer mirrors than facets of any finite-volume polyhedron
        return False
    gram = linalg.frac_mat(lat.gram_rows())
    rows = [linalg.mat_vec(gram, [Fraction(c) for c in r.vector.coords])
            for r in run.accepted]
    if linalg.rank(linalg.frac_mat(rows)) < n:
        return False
    for ray in _extreme_rays(rows):
        norm = sum(ray[i] * gram[i][j] * ray[j]
                   for i in range(n) for j in range(n))
        if norm > 0:
            return False
    return True

import itertools
import random
from fractions import Fraction

import pytest

from latrefl import enumlib, linalg
from latrefl.errors import EnumerationBudgetError
from latrefl.lattice import LatticeVector, make_standard, parse_spec


def box_search(gram, target):
    """Oracle: exhaustive search over the coordinate box |x_i| <= bound_i.

    For x^T G x = t every coordinate satisfies x_i^2 <= t * (G^{-1})_{ii}.
    """
    n = len(gram)
    g = linalg.frac_mat(gram)
    ginv = linalg.inverse(g)
    bounds = [linalg.isqrt_frac_floor(Fraction(target) * ginv[i][i])
              for i in range(n)]
    out = []
    for x in itertools.product(*[range(-b, b + 1) for b in bounds]):
        q = sum(gram[i][j] * x[i] * x[j] for i in range(n) for j in range(n))
        if q == target:
            out.append(x)
    return sorted(out)


def _rand_pd_gram(rng, n, lo=-3, hi=3):
    while True:
        m = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
        g = [[sum(m[i][k] * m[j][k] for k in range(n)) for j in range(n)]
             for i in range(n)]
        if linalg.is_pos_def(linalg.frac_mat(g)):
            return g


def test_enumeration_matches_box_search():
    rng = random.Random(20)
    for _ in range(20):
        n = rng.randint(1, 6)
        target = rng.randint(1, 8)
        while True:
            g = _rand_pd_gram(rng, n)
            ginv = linalg.inverse(linalg.frac_mat(g))
            vol = 1
            for i in range(n):
                vol *= 2 * linalg.isqrt_frac_floor(Fraction(target)
                                                   * ginv[i][i]) + 1
            if vol <= 400_000:      # keep the exhaustive oracle tractable
                break
        lat = GramLatticeOf(g)
        got = sorted(tuple(int(c) for c in v.coords)
                     for v in enumlib.enumerate_norm(lat, target))
        assert got == box_search(g, target)


def GramLatticeOf(g):
    from latrefl.lattice import GramLattice
    return GramLattice(tuple(tuple(r) for r in g))


def test_e8_root_count():
    assert len(enumlib.enumerate_norm(make_standard("E8"), 2)) == 240


def test_affine_and_constrained_enumeration():
    rng = random.Random(21)
    for _ in range(10):
        n = rng.randint(2, 4)
        g = _rand_pd_gram(rng, n)
        lat = GramLatticeOf(g)
        shift = [Fraction(rng.randint(-2, 2), rng.choice([1, 2, 3]))
                 for _ in range(n)]
        target = Fraction(rng.randint(1, 10), rng.choice([1, 2]))
        u = [Fraction(rng.randint(-2, 2)) for _ in range(n)]
        c = Fraction(rng.randint(-1, 3))
        plain = enumlib.enumerate_affine(lat, shift, target)
        constrained = list(enumlib.iter_norm_vectors(lat, target, shift=shift,
                                                     constraints=[(u, c)]))
        want = [v for v in plain
                if sum(ui * ci for ui, ci in zip(u, v.coords)) <= c]
        assert sorted(v.coords for v in constrained) == \
            sorted(v.coords for v in want)


def test_budget_error():
    with pytest.raises(EnumerationBudgetError):
        list(enumlib.enumerate_norm(make_standard("E8"), 20, budget=100))


def test_sign_symmetry_and_determinism():
    lat = make_standard("D", 5)
    vs = enumlib.enumerate_norm(lat, 4)
    coords = {v.coords for v in vs}
    assert all(tuple(-c for c in t) in coords for t in coords)
    assert [v.coords for v in enumlib.enumerate_norm(lat, 4)] == \
        [v.coords for v in vs]


def test_crystallographic_roots():
    e8 = make_standard("E8")
    assert len(enumlib.roots_of(e8)) == 240
    a2 = make_standard("A2")
    roots = enumlib.roots_of(a2)
    assert len(roots) == 12
    norms = sorted(r.norm for r in roots)
    assert norms.count(2) == 6 and norms.count(Fraction(2, 3)) == 6
    # reflections preserve the lattice
    for r in roots[:4]:
        for i in range(a2.rank):
            assert r.reflect(a2.basis_vector(i)).is_integral()


def test_derive_root_norms():
    assert enumlib.derive_root_norms(make_standard("E8")) == [(Fraction(2), 1)]
    assert enumlib.derive_root_norms(make_standard("A2")) == \
        [(Fraction(2), 1), (Fraction(2, 3), 3)]


def test_indefinite_requires_within():
    with pytest.raises(Exception):
        enumlib.roots_of(parse_spec("U"))

from collections import Counter
from fractions import Fraction

import pytest

from latrefl import cubic4, dynkin, enumlib, rootsys
from latrefl.errors import LatticeError
from latrefl.lattice import (discriminant_group, divisor, is_even, parse_spec,
                             signature)


def test_ambient_invariants(setup):
    assert setup.lam.rank == 23 and abs(setup.lam.det()) == 1
    assert setup.eta.norm() == 3
    assert setup.lam_o.rank == 22
    assert is_even(setup.lam_o) and signature(setup.lam_o) == (20, 2, 0)
    assert discriminant_group(setup.lam_o).invariant_factors == (3,)
    assert setup.lam1.gram == parse_spec("2E8+A2+U").gram
    assert signature(setup.lam1) == (19, 1, 0)


def test_h_vectors(setup):
    h = [setup.h_special(i) for i in (1, 2, 3)]
    assert all(x.norm() == 6 for x in h)
    assert all(h[i].dot(h[j]) == -3 for i in range(3) for j in range(3)
               if i != j)
    assert (h[0] + h[1] + h[2]).is_zero()
    assert all(divisor(x) == 3 for x in h)
    assert all(cubic4.is_special(setup, x) for x in h)


def test_short_root_and_reflection(setup):
    r = cubic4.short_root(setup, setup.h_special(1))
    assert r.norm == Fraction(2, 3)
    for i in range(setup.lam_o.rank):
        assert r.reflect(setup.lam_o.basis_vector(i)).is_integral()
    with pytest.raises(LatticeError):
        cubic4.short_root(setup, setup.e2)


def test_special_set_check(setup):
    h = [setup.h_special(i) for i in (1, 2, 3)]
    assert cubic4.special_set_check(setup, h) == "conforming"
    assert cubic4.special_set_check(setup, [h[0]]) == "conforming"
    # {h1, -h1}: pairwise product +6, not -3
    assert cubic4.special_set_check(setup, [h[0], -1 * h[0]]) == "nonconforming"
    # replacing one member breaks the zero-sum law
    assert cubic4.special_set_check(setup, [h[0], h[1], h[1]]) == "nonconforming"


def test_gamma_translates(setup):
    for seed in range(10):
        hs = cubic4.random_gamma_translate(setup, seed=seed)
        assert cubic4.special_set_check(setup, hs) == "conforming"


def test_eichler_invariant(setup):
    e1 = setup.lam_o.vector([0] * 16 + [1] + [0] * 5)
    assert cubic4.eichler_invariant(setup, setup.e2) == (1, (0,))
    assert cubic4.eichler_invariant(setup, e1) == (1, (0,))
    with pytest.raises(LatticeError):
        cubic4.eichler_invariant(setup, 2 * setup.e2)   # not primitive


def test_figure_roots(setup):
    roots = cubic4.figure1_roots(setup)
    assert len(roots) == 24
    assert all(r.norm == 2 for r in roots)
    diag = dynkin.build_diagram(roots)
    adj = diag.adjacency()
    degrees = Counter(len(adj[v]) for v, _n in diag.vertices)
    assert degrees == Counter({2: 18, 3: 6})
    assert dynkin.is_isomorphic(diag, cubic4.figure1_model())
    assert dynkin.automorphism_order(diag) == 72


def test_model_automorphisms():
    assert dynkin.automorphism_order(cubic4.figure1_model()) == 72


def test_short_pairing_census():
    indices = cubic4.all_short_indices()
    assert len(indices) == 12
    census = Counter()
    for i in range(12):
        for j in range(i + 1, 12):
            census[cubic4.short_pairing(indices[i], indices[j])] += 1
    assert sum(census.values()) == 66
    assert census == Counter({Fraction(-2, 3): 24, Fraction(-4, 3): 30,
                              Fraction(-5, 3): 12})
    # symmetric in its arguments
    for i in range(0, 12, 5):
        for j in range(1, 12, 7):
            if i != j:
                assert cubic4.short_pairing(indices[i], indices[j]) == \
                    cubic4.short_pairing(indices[j], indices[i])


# ---------------------------------------------------------------------------
# tests below consume the full rank-20 hyperbolic run

def test_run_terminates_with_36_roots(l1_run):
    run = l1_run.run
    assert run.status == "finite_volume"
    assert run.norm_census() == {Fraction(2): 24, Fraction(2, 3): 12}


def test_long_subdiagram_matches_model(l1_run):
    diag = l1_run.run.diagram()
    long_ids = [v for v, n in diag.vertices if n == 2]
    sub = diag.induced(long_ids)
    assert dynkin.is_isomorphic(sub, cubic4.figure1_model())
    assert dynkin.automorphism_order(sub) == 72


def test_short_roots_obey_pairing_law(l1_run):
    diag = l1_run.run.diagram()
    index = cubic4.label_short_roots(diag)
    assert len(index) == 12
    by_id = dict(zip((v[0] for v in diag.vertices), diag.origin))
    pairs = sorted(index.items())
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            (va, sa), (vb, sb) = pairs[a], pairs[b]
            got = by_id[va].vector.dot(by_id[vb].vector)
            assert got == cubic4.short_pairing(sa, sb)


def test_affine_census(l1_run, setup):
    diag = l1_run.run.diagram()
    long_ids = [v for v, n in diag.vertices if n == 2]
    sub = diag.induced(long_ids)
    parab = dynkin.maximal_pure_affine(sub, setup.lam1)
    types = sorted(set(lab for _v, lab, _c in parab))
    assert types == sorted([
        ("A~17",), ("D~16",), ("A~11", "D~7"), ("E~8", "E~8"),
        ("E~6", "E~6", "E~6"), ("D~10", "E~7")])
    corank1 = sorted(lab for _v, lab, c in parab if c == 1)
    assert corank1 == sorted([("E~6", "E~6", "E~6"), ("A~11", "D~7")])
    # on the full diagram every completed maximal pure-affine set has corank 1
    full = dynkin.maximal_pure_affine(diag, setup.lam1)
    assert full and all(c == 1 for _v, _l, c in full)


def test_planes(l1_run, setup):
    run = l1_run.run
    seen = {}
    for label in cubic4.PLANE_LABELS:
        k = cubic4.isotropic_plane_from_affine(setup, label, run=run)
        full, _quot = cubic4.classify_isotropic_plane(setup, k)
        assert full.stripped().name == label
        seen[label] = full.name
    assert len(set(seen.values())) == 6


def test_3e6_plane_roots_and_index(l1_run, setup):
    k = cubic4.isotropic_plane_from_affine(setup, "3E6", run=l1_run.run)
    _full, quot = cubic4.classify_isotropic_plane(setup, k)
    roots = [r for r in enumlib.roots_of(quot.lattice) if r.norm == 2]
    assert len(roots) == 216
    assert cubic4.root_span_index(setup, k) == (3, True)


def test_arrangement_incidence(l1_run, setup):
    got = {label: cubic4.stratum_meets_arrangement(setup, label,
                                                   run=l1_run.run)
           for label in cubic4.PLANE_LABELS}
    assert got == {"2E8": True, "D16": True, "A17": True,
                   "E7+D10": True, "3E6": False, "D7+A11": False}

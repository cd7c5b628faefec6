from fractions import Fraction

import pytest

from latrefl import dynkin, enumlib, rootsys
from latrefl.errors import ClassificationError
from latrefl.lattice import (LatticeVector, direct_sum, make_standard,
                             parse_spec)


def _simple_diagram(lat, norm=None):
    roots = enumlib.roots_of(lat)
    if norm is not None:
        roots = [r for r in roots if r.norm == norm]
    return dynkin.build_diagram(rootsys.simple_system(roots))


def test_classification_of_simple_diagrams():
    # norm-2 roots only: the D-lattices also carry norm-1 roots (B systems)
    for spec, label in (("E8", "E8"), ("E6", "E6"), ("D5", "D5"),
                        ("A4", "A4"), ("D16", "D16"), ("A17", "A17")):
        diag = _simple_diagram(parse_spec(spec), norm=2)
        comps = dynkin.classify_components(diag)
        assert [lab for _c, kind, lab in comps] == [label]
        assert all(kind == "finite" for _c, kind, _l in comps)


def test_affine_classification_and_null_vector():
    # the affine extension of A1: two norm-2 roots with product -2
    lat = parse_spec("A1+U")
    a = lat.basis_vector(0)
    e = lat.basis_vector(1)
    other = e - a                       # norm 2, product -2 with a
    diag = dynkin.build_diagram([enumlib.Root(a), enumlib.Root(other)])
    comps = dynkin.classify_components(diag)
    assert [(kind, lab) for _c, kind, lab in comps] == [("affine", "A~1")]
    null = dynkin.affine_null_vector(diag, comps[0][0])
    assert [c for _v, c in null] == [1, 1]
    z = lat.zero()
    by_id = dict(zip((v[0] for v in diag.vertices), diag.origin))
    for vid, c in null:
        z = z + c * by_id[vid].vector
    assert z.norm() == 0 and not z.is_zero()


def test_automorphism_orders():
    assert dynkin.automorphism_order(_simple_diagram(parse_spec("E8"))) == 1
    assert dynkin.automorphism_order(_simple_diagram(parse_spec("E6"))) == 2
    assert dynkin.automorphism_order(_simple_diagram(parse_spec("D5"),
                                                     norm=2)) == 2
    assert dynkin.automorphism_order(_simple_diagram(parse_spec("A4"))) == 2
    # D4 has the full triality symmetry
    assert dynkin.automorphism_order(_simple_diagram(parse_spec("D4"),
                                                     norm=2)) == 6
    # the full crystallographic system of D4 is F4, which is rigid
    assert dynkin.automorphism_order(_simple_diagram(parse_spec("D4"))) == 1


def test_isomorphism_and_refusal():
    d1 = _simple_diagram(parse_spec("E6"))
    d2 = _simple_diagram(parse_spec("E6"))
    iso = dynkin.isomorphism(d1, d2)
    assert iso is not None and len(iso) == 6
    assert not dynkin.is_isomorphic(d1, _simple_diagram(parse_spec("D6")))


def test_duplicate_roots_rejected():
    lat = make_standard("A", 2)
    v = lat.basis_vector(0)
    with pytest.raises(ClassificationError):
        dynkin.build_diagram([enumlib.Root(v), enumlib.Root(-1 * (-1 * v))])


def test_serialization():
    diag = _simple_diagram(parse_spec("A2"))
    js = dynkin.to_json(diag)
    assert len(js["vertices"]) == 2 and len(js["edges"]) == 1
    dot = dynkin.to_dot(diag)
    assert dot.startswith("graph diagram {") and "--" in dot


def test_bond_classes():
    assert dynkin.bond_class(Fraction(-1), Fraction(2), Fraction(2)) == "simple"
    assert dynkin.bond_class(Fraction(-1), Fraction(2), Fraction(1)) == "double"
    assert dynkin.bond_class(Fraction(-1), Fraction(2), Fraction(2, 3)) == "triple"
    assert dynkin.bond_class(Fraction(-2), Fraction(2), Fraction(2)) == "affine"
    assert dynkin.bond_class(Fraction(-3), Fraction(2), Fraction(2)) == "dotted"

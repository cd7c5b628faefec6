from fractions import Fraction

import pytest

from latrefl import lattice
from latrefl.errors import SpecParseError
from latrefl.lattice import (GramLattice, LatticeVector, direct_sum,
                             discriminant_group, divisor, is_even,
                             make_standard, orthogonal_complement, parse_spec,
                             radical_quotient, rescale, saturate, signature,
                             sublattice)


def test_standard_lattices():
    e8 = make_standard("E8")
    assert e8.rank == 8 and e8.det() == 1 and is_even(e8)
    a2 = make_standard("A2")
    assert a2.det() == 3 and is_even(a2)
    u = make_standard("U")
    assert signature(u) == (1, 1, 0) and u.det() == -1
    one = make_standard("I")
    assert one.det() == 1 and not is_even(one)
    d4 = make_standard("D", 4)
    assert d4.det() == 4
    e6 = make_standard("E", 6)
    assert e6.det() == 3
    a17 = make_standard("A", 17)
    assert a17.det() == 18


def test_discriminant_groups():
    assert discriminant_group(make_standard("E8")).invariant_factors == ()
    assert discriminant_group(make_standard("A2")).invariant_factors == (3,)
    assert discriminant_group(make_standard("D", 4)).invariant_factors == (2, 2)
    assert discriminant_group(make_standard("A", 17)).invariant_factors == (18,)
    g = discriminant_group(make_standard("E", 6))
    assert g.order == 3 and g.exponent == 3


def test_parse_spec():
    lat = parse_spec("2E8+A2+U")
    assert lat.rank == 20 and signature(lat) == (19, 1, 0)
    lat = parse_spec("2E8+2U+3I")
    assert lat.rank == 23 and signature(lat) == (21, 2, 0)
    assert parse_spec("D16").det() == 4
    with pytest.raises(SpecParseError):
        parse_spec("Q5")
    with pytest.raises(SpecParseError):
        parse_spec("")


def test_vector_arithmetic_and_divisor():
    e8 = make_standard("E8")
    v = e8.basis_vector(0)
    assert v.norm() == 2 and v.is_integral()
    assert (v - v).is_zero()
    assert (Fraction(1, 2) * v).is_integral() is False
    # divisor: gcd of products against the lattice
    assert divisor(v) == 1
    a2 = make_standard("A2")
    w = a2.vector((1, 2))
    assert divisor(w) == 3


def test_sublattice_and_saturation():
    a2 = make_standard("A2")
    s = sublattice(a2, [a2.vector((2, 0))])
    assert s.rank == 1 and not s.is_saturated()
    sat = saturate(s)
    assert sat.is_saturated() and sat.contains(a2.vector((1, 0)))
    full = sublattice(a2, [a2.basis_vector(0), a2.basis_vector(1)])
    assert full.is_saturated()


def test_orthogonal_complement_and_quotient():
    u = make_standard("U")
    lat = direct_sum([make_standard("A2"), u])
    e = lat.basis_vector(2)
    perp = orthogonal_complement(lat, sublattice(lat, [e]))
    assert perp.rank == 3
    quot = radical_quotient(perp)
    assert quot.lattice.rank == 2
    assert quot.lattice.det() == 3      # the A2 part survives
    # lift and project are mutually inverse on the quotient
    v = quot.lift_vector([1, 1])
    assert quot.project_vector(v) == [Fraction(1), Fraction(1)]


def test_rescale_and_json_round_trip():
    a2 = make_standard("A2")
    doubled = rescale(a2, 2)
    assert doubled.det() == 4 * a2.det()
    again = GramLattice.from_json(a2.to_json())
    assert again.gram == a2.gram


def test_even_unimodular_sum():
    lam = direct_sum([make_standard("E8"), make_standard("E8"),
                      make_standard("U"), make_standard("U"),
                      make_standard("I"), make_standard("I"),
                      make_standard("I")])
    assert lam.rank == 23
    assert abs(lam.det()) == 1
    assert not is_even(lam)
    assert signature(lam) == (21, 2, 0)

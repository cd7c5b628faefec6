from fractions import Fraction

import pytest

from latrefl import dynkin, enumlib, rootsys
from latrefl.errors import ClassificationError
from latrefl.lattice import direct_sum, make_standard


def test_type_identification():
    assert rootsys.root_system_type(make_standard("E8")).name == "E8"
    assert rootsys.root_system_type(make_standard("E", 6)).name == "E6"
    assert rootsys.root_system_type(make_standard("A", 4)).name == "A4"
    # lattices with even discriminant exponent gain norm-1 roots
    assert rootsys.root_system_type(make_standard("D", 5)).name == "B5"
    assert rootsys.root_system_type(make_standard("D", 4)).name == "F4"
    assert rootsys.root_system_type(make_standard("A2")).name == "G2"


def test_direct_sum_type():
    lat = direct_sum([make_standard("A", 2), make_standard("A", 2)])
    assert rootsys.root_system_type(lat).name == "2G2"
    lat = direct_sum([make_standard("E", 7), make_standard("D", 10)])
    t = rootsys.root_system_type(lat)
    assert t.name == "B10+E7" and t.rank == 17


def test_simple_system_size_and_base_property():
    for name, n, count in (("E8", None, 8), ("D", 6, 6), ("A", 3, 3)):
        lat = make_standard(name, n)
        roots = enumlib.roots_of(lat)
        simple = rootsys.simple_system(roots)
        assert len(simple) == count
        # pairwise nonpositive products
        for a in range(count):
            for b in range(a + 1, count):
                assert simple[a].vector.dot(simple[b].vector) <= 0


def test_cartan_matrix_a2():
    roots = enumlib.roots_of(make_standard("A", 2))
    # long roots alone: the A2 Cartan matrix
    simple = rootsys.simple_system([r for r in roots if r.norm == 2])
    c = rootsys.cartan_matrix(simple)
    assert sorted(map(tuple, c)) == [(-1, 2), (2, -1)]
    # the full system is G2
    c = rootsys.cartan_matrix(rootsys.simple_system(roots))
    assert sorted(map(tuple, c)) == [(-1, 2), (2, -3)]


def test_stripped():
    t = rootsys.RootSystemType(("E6", "G2", "A1^s", "E6"))
    assert t.stripped().name == "2E6"
    assert rootsys.label_rank("E6") == 6
    with pytest.raises(ClassificationError):
        rootsys.label_rank("X9")


def test_g2_diagram():
    roots = enumlib.roots_of(make_standard("A2"))
    simple = rootsys.simple_system(roots)
    assert len(simple) == 2
    assert sorted(r.norm for r in simple) == [Fraction(2, 3), Fraction(2)]
    diag = dynkin.build_diagram(simple)
    comps = dynkin.classify_components(diag)
    assert [lab for _c, _k, lab in comps] == ["G2"]

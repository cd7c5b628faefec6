from fractions import Fraction

import pytest

from latrefl import dynkin, vinberg
from latrefl.errors import LatticeError
from latrefl.lattice import LatticeVector, make_standard, parse_spec


def _v0(lat):
    # e - f in the U summand placed last
    coords = [0] * lat.rank
    coords[-2], coords[-1] = 1, -1
    return LatticeVector(lat, coords)


def test_e8_u_terminates():
    lat = parse_spec("E8+U")
    run = vinberg.run_vinberg(lat, _v0(lat))
    assert run.status == "finite_volume"
    assert len(run.accepted) == 10
    assert all(r.norm == 2 for r in run.accepted)
    # pairwise nonpositive products (a chamber)
    for i in range(10):
        for j in range(i + 1, 10):
            assert run.accepted[i].vector.dot(run.accepted[j].vector) <= 0


def test_a2_u_terminates_with_shorts():
    lat = parse_spec("A2+U")
    run = vinberg.run_vinberg(lat, _v0(lat))
    assert run.status == "finite_volume"
    norms = sorted(r.norm for r in run.accepted)
    assert norms == [Fraction(2, 3), 2, 2, 2]
    diag = run.diagram()
    assert diag.size == len(run.accepted)


def test_rejects_bad_signature():
    with pytest.raises(LatticeError):
        vinberg.run_vinberg(make_standard("E8"),
                            make_standard("E8").basis_vector(0))


def test_rejects_bad_v0():
    lat = parse_spec("E8+U")
    with pytest.raises(LatticeError):
        vinberg.run_vinberg(lat, lat.basis_vector(0))     # positive norm


def test_stabilizer_chamber():
    lat = parse_spec("E8+U")
    simple = vinberg.stabilizer_chamber(lat, _v0(lat))
    assert len(simple) == 9     # the E8 part plus e + f
    assert all(r.vector.dot(_v0(lat)) == 0 for r in simple)


def test_weights_nondecreasing():
    lat = parse_spec("E8+U")
    run = vinberg.run_vinberg(lat, _v0(lat))
    assert run.weights == sorted(run.weights)


def test_finite_volume_check_negative():
    lat = parse_spec("E8+U")
    run = vinberg.run_vinberg(lat, _v0(lat))
    truncated = vinberg.VinbergRun(lat, run.v0,
                                   accepted=run.accepted[:5],
                                   weights=run.weights[:5])
    assert not vinberg.finite_volume_check(truncated)


def test_to_json_shape():
    lat = parse_spec("E8+U")
    run = vinberg.run_vinberg(lat, _v0(lat))
    js = run.to_json()
    assert js["status"] == "finite_volume"
    assert len(js["roots"]) == len(js["norms"]) == len(js["weights"]) == 10

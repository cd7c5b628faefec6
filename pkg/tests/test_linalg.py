import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from latrefl import linalg


def _rand_int_mat(rng, n, lo=-4, hi=4):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def _rand_pd_gram(rng, n, lo=-3, hi=3):
    while True:
        m = _rand_int_mat(rng, n, lo, hi)
        g = [[sum(m[i][k] * m[j][k] for k in range(n)) for j in range(n)]
             for i in range(n)]
        if linalg.is_pos_def(linalg.frac_mat(g)):
            return g


def test_det_inverse_solve_round_trip():
    rng = random.Random(1)
    for _ in range(25):
        n = rng.randint(1, 5)
        a = linalg.frac_mat(_rand_int_mat(rng, n))
        d = linalg.det(a)
        if d == 0:
            assert linalg.rank(a) < n
            continue
        inv = linalg.inverse(a)
        assert linalg.mat_eq(linalg.mat_mul(a, inv), linalg.identity(n))
        b = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
        x = linalg.solve(a, b)
        assert linalg.mat_vec(a, x) == b


def test_rational_kernel_is_kernel():
    rng = random.Random(2)
    for _ in range(20):
        n = rng.randint(2, 5)
        a = linalg.frac_mat(_rand_int_mat(rng, n, -2, 2))
        ker = linalg.rational_kernel(a)
        assert len(ker) == n - linalg.rank(a)
        for v in ker:
            assert all(c == 0 for c in linalg.mat_vec(a, v))


def test_smith_normal_form_properties():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 5)
        a = _rand_int_mat(rng, n)
        d, u, v = linalg.smith_normal_form([row[:] for row in a])
        # U A V == D with U, V unimodular and diagonal divisibility
        prod = linalg.mat_mul(linalg.mat_mul(linalg.frac_mat(u),
                                             linalg.frac_mat(a)),
                              linalg.frac_mat(v))
        assert linalg.mat_eq(prod, linalg.frac_mat(d))
        assert abs(linalg.det(linalg.frac_mat(u))) == 1
        assert abs(linalg.det(linalg.frac_mat(v))) == 1
        for i in range(n - 1):
            if d[i][i] and d[i + 1][i + 1]:
                assert d[i + 1][i + 1] % d[i][i] == 0


def test_ldl_reconstructs_gram():
    rng = random.Random(4)
    for _ in range(15):
        n = rng.randint(1, 5)
        g = linalg.frac_mat(_rand_pd_gram(rng, n))
        d, l = linalg.ldl(g)
        # Q(y) = sum d_i (y_i + sum_{j>i} l_ij y_j)^2 must equal y^T g y
        for trial in range(5):
            y = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
            q = sum(d[i] * (y[i] + sum(l[i][j] * y[j]
                                       for j in range(i + 1, n))) ** 2
                    for i in range(n))
            assert q == linalg.vec_dot(y, linalg.mat_vec(g, y))


def test_lll_preserves_lattice():
    rng = random.Random(5)
    for _ in range(15):
        n = rng.randint(2, 6)
        g = linalg.frac_mat(_rand_pd_gram(rng, n))
        g2, u = linalg.lll_gram(g)
        assert abs(linalg.det(linalg.frac_mat(u))) == 1
        prod = linalg.mat_mul(linalg.mat_mul(linalg.frac_mat(u), g),
                              linalg.transpose(linalg.frac_mat(u)))
        assert linalg.mat_eq(prod, linalg.frac_mat(g2))


def test_signature_examples():
    assert linalg.signature(linalg.frac_mat([[2]])) == (1, 0, 0)
    assert linalg.signature(linalg.frac_mat([[0, 1], [1, 0]])) == (1, 1, 0)
    assert linalg.signature(linalg.frac_mat([[0, 0], [0, 1]])) == (1, 0, 1)
    assert linalg.signature(linalg.frac_mat([[-2]])) == (0, 1, 0)


def test_saturate_rows_and_primitivize():
    sat = linalg.saturate_rows(linalg.frac_mat([[2, 0], [0, 2]]), 2)
    assert sorted(tuple(int(c) for c in r) for r in sat) == [(0, 1), (1, 0)]
    assert linalg.primitivize([Fraction(2, 3), Fraction(4, 3)]) == [1, 2]
    assert linalg.vec_gcd([6, -9, 12]) == 3


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=4, max_size=4),
       st.lists(st.integers(-9, 9), min_size=4, max_size=4))
def test_det_multiplicative(xs, ys):
    a = linalg.frac_mat([xs[:2], xs[2:]])
    b = linalg.frac_mat([ys[:2], ys[2:]])
    assert linalg.det(linalg.mat_mul(a, b)) == linalg.det(a) * linalg.det(b)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10 ** 8))
def test_isqrt_frac_floor(n):
    r = linalg.isqrt_frac_floor(Fraction(n, 7))
    assert r * r * 7 <= n < (r + 1) * (r + 1) * 7

"""Exact linear algebra over the rationals and the integers.

Everything here works on plain lists of Fractions (or ints where stated);
no floating point anywhere.  Sizes are small (rank <= 23 throughout the
package), so the algorithms favour simplicity over asymptotics.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

Mat = list  # list of rows; rows are lists of Fraction or int
Vec = list


def frac_mat(rows) -> Mat:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Mat:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def int_identity(n: int) -> Mat:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a: Mat) -> Mat:
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Mat, v: Vec) -> Vec:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_dot(u: Vec, v: Vec):
    return sum(x * y for x, y in zip(u, v))


def mat_eq(a: Mat, b: Mat) -> bool:
    return len(a) == len(b) and all(
        len(r) == len(s) and all(x == y for x, y in zip(r, s)) for r, s in zip(a, b)
    )


def det(a: Mat) -> Fraction:
    """Determinant by fraction Gaussian elimination."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    d = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            d = -d
        d *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return d


def rref(a: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Mat) -> int:
    return len(rref(a)[1])


def solve(a: Mat, b: Vec) -> Vec | None:
    """One rational solution of a x = b, or None if inconsistent."""
    n = len(a)
    cols = len(a[0]) if a else 0
    aug = [[Fraction(x) for x in row] + [Fraction(bb)] for row, bb in zip(a, b)]
    m, pivots = rref(aug)
    for row in m:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    if cols in pivots:
        return None
    # free variables zero; pivot columns read off directly
    x = [Fraction(0)] * cols
    for r, c in enumerate(pivots):
        x[c] = m[r][-1]
    return x


def rational_kernel(a: Mat) -> list[Vec]:
    """Basis of {x : a x = 0} over the rationals."""
    if not a:
        return []
    m, pivots = rref(a)
    cols = len(a[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -m[r][fc]
        basis.append(v)
    return basis


def inverse(a: Mat) -> Mat:
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, row in enumerate(a)]
    m, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in m]


# ---------------------------------------------------------------------------
# integer matrices: Smith normal form, saturated kernels, basis completion

def smith_normal_form(a: Mat) -> tuple[Mat, Mat, Mat]:
    """Smith normal form of an integer matrix.

    Returns (d, u, v) with u a v = d, u and v unimodular and d diagonal
    with d[i][i] | d[i+1][i+1].  Pivots are chosen smallest-in-absolute-value
    to keep entries from blowing up.
    """
    m = [[int(x) for x in row] for row in a]
    rows, cols = len(m), len(m[0]) if m else 0
    u = int_identity(rows)
    v = int_identity(cols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for row in m:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    t = 0
    while t < min(rows, cols):
        # smallest nonzero entry in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        done = False
        while not done:
            done = True
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    add_row(t, i, -q)
                    if m[i][t] != 0:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    add_col(t, j, -q)
                    if m[t][j] != 0:
                        swap_cols(t, j)
                        done = False
        t += 1
    # force divisibility chain
    t = min(rows, cols)
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            a_, b_ = m[i][i], m[i + 1][i + 1]
            if b_ != 0 and a_ != 0 and b_ % a_ != 0:
                add_col(i + 1, i, 1)
                # re-clear the 2x2 block
                while m[i + 1][i] != 0:
                    if m[i][i] != 0:
                        q = m[i + 1][i] // m[i][i]
                        add_row(i, i + 1, -q)
                    if m[i + 1][i] != 0:
                        swap_rows(i, i + 1)
                while m[i][i + 1] != 0:
                    q = m[i][i + 1] // m[i][i]
                    add_col(i, i + 1, -q)
                changed = True
            elif a_ == 0 and b_ != 0:
                swap_rows(i, i + 1)
                swap_cols(i, i + 1)
                changed = True
    for i in range(t):
        if m[i][i] < 0:
            for row in m:
                row[i] = -row[i]
            for row in v:
                row[i] = -row[i]
    return m, u, v


def integer_kernel(a: Mat) -> list[Vec]:
    """Saturated basis of {x in Z^n : a x = 0}.

    Rational rows are admitted: each is scaled to integers first (the
    kernel is unchanged); Smith reduction needs integer entries.
    """
    if not a:
        return []
    cols = len(a[0])
    a = [_clear_row(row) for row in a]
    d, _u, v = smith_normal_form(a)
    r = sum(1 for i in range(min(len(d), cols)) if d[i][i] != 0)
    vt = transpose(v)
    return [list(vt[j]) for j in range(r, cols)]


def _clear_row(row) -> list[int]:
    mult = 1
    for x in row:
        den = Fraction(x).denominator
        mult = mult * den // gcd(mult, den)
    return [int(Fraction(x) * mult) for x in row]


def saturate_rows(b: Mat, n: int) -> list[Vec]:
    """Saturation of the row space of integer matrix b inside Z^n."""
    if not b:
        return []
    k = integer_kernel(b)
    if not k:
        return [list(r) for r in int_identity(n)]
    return integer_kernel(k)


def complete_to_unimodular(rows: Mat, n: int) -> Mat:
    """Rows (saturated, independent, integral) completed to a basis of Z^n.

    Returns the complementary rows only.
    """
    if not rows:
        return [list(r) for r in int_identity(n)]
    d, _u, v = smith_normal_form(rows)
    k = len(rows)
    for i in range(k):
        if abs(d[i][i]) != 1:
            raise ValueError("rows are not saturated")
    # rows * v = d => the dual coordinates; v^{-T} rows k..n-1 complete
    vinv = inverse(frac_mat(v))
    comp = []
    for j in range(k, n):
        row = [vinv[j][c] for c in range(n)]
        assert all(x.denominator == 1 for x in row)
        comp.append([int(x) for x in row])
    return comp


def vec_gcd(v: Vec) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def primitivize(v: Vec) -> list[int]:
    """Scale a rational vector to a coprime integer vector (0 stays 0)."""
    mult = 1
    for x in v:
        mult = mult * Fraction(x).denominator // gcd(mult, Fraction(x).denominator)
    ints = [int(Fraction(x) * mult) for x in v]
    g = vec_gcd(ints)
    if g == 0:
        return [0] * len(v)
    return [x // g for x in ints]


# ---------------------------------------------------------------------------
# symmetric forms

def signature(g: Mat) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia of a symmetric rational matrix.

    Symmetric Gaussian elimination with exact pivots; a zero diagonal with
    nonzero off-diagonal entry is handled by a congruence row/column add.
    """
    n = len(g)
    m = [[Fraction(x) for x in row] for row in g]
    p = q = z = 0
    idx = list(range(n))

    def sym_add(i, j):  # row_i += row_j, col_i += col_j
        for c in range(n):
            m[i][c] += m[j][c]
        for r in range(n):
            m[r][i] += m[r][j]

    def sym_swap(i, j):
        m[i], m[j] = m[j], m[i]
        for r in range(n):
            m[r][i], m[r][j] = m[r][j], m[r][i]

    k = 0
    while k < n:
        if m[k][k] == 0:
            j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
            if j is None:
                # row k is zero in the remaining block
                if all(m[r][k] == 0 for r in range(k, n)):
                    z += 1
                    k += 1
                    continue
                j = next(r for r in range(k + 1, n) if m[r][k] != 0)
            if m[j][j] != 0:
                sym_swap(k, j)
            else:
                sym_add(k, j)  # makes m[k][k] = 2*m[k][j] != 0
        piv = m[k][k]
        if piv > 0:
            p += 1
        else:
            q += 1
        for r in range(k + 1, n):
            if m[r][k] != 0:
                f = m[r][k] / piv
                for c in range(k, n):
                    m[r][c] -= f * m[k][c]
                for c in range(k, n):
                    m[c][r] = m[r][c]
        k += 1
    del idx
    return p, q, z


def ldl(g: Mat) -> tuple[list, Mat] | None:
    """LDL data of a positive definite symmetric matrix.

    Returns (d, l) with Q(x) = sum_i d[i] * (x[i] + sum_{j>i} l[i][j] x[j])^2,
    or None if the matrix is not positive definite.
    """
    n = len(g)
    m = [[Fraction(x) for x in row] for row in g]
    d = []
    l = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        piv = m[i][i]
        if piv <= 0:
            return None
        d.append(piv)
        for j in range(i + 1, n):
            l[i][j] = m[i][j] / piv
        for r in range(i + 1, n):
            for c in range(r, n):
                m[r][c] -= m[i][r] * m[i][c] / piv
                m[c][r] = m[r][c]
    return d, l


def is_pos_def(g: Mat) -> bool:
    return ldl(g) is not None


def is_pos_semidef(g: Mat) -> bool:
    _p, q, _z = signature(g)
    return q == 0


# ---------------------------------------------------------------------------
# lattice reduction on a Gram matrix

def _lll_pre(g: Mat, delta: float = 0.99) -> list:
    """Unimodular u roughly LLL-reducing g, computed in floats.

    Only a warm start for the exact pass: numerical error can at worst
    leave the basis imperfectly reduced, never wrong.
    """
    n = len(g)
    u = int_identity(n)
    gf = [[float(x) for x in row] for row in g]
    gram = [row[:] for row in gf]

    def recompute():
        nonlocal gram
        tmp = [[sum(u[i][k] * gf[k][j] for k in range(n)) for j in range(n)]
               for i in range(n)]
        gram = [[sum(tmp[i][k] * u[j][k] for k in range(n)) for j in range(n)]
                for i in range(n)]

    def gso():
        mu = [[0.0] * n for _ in range(n)]
        bstar = [0.0] * n
        ip = [[0.0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1):
                ip[i][j] = gram[i][j] - sum(mu[j][k] * ip[i][k] for k in range(j))
            for j in range(i):
                if bstar[j] <= 0:
                    return None, None
                mu[i][j] = ip[i][j] / bstar[j]
            bstar[i] = ip[i][i]
        return mu, bstar

    mu, bstar = gso()
    if mu is None:
        return int_identity(n)
    k, steps = 1, 0
    while k < n and steps < 100000:
        steps += 1
        changed = False
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                u[k] = [x - q * y for x, y in zip(u[k], u[j])]
                changed = True
        if changed:
            recompute()
            mu, bstar = gso()
            if mu is None:
                return u
        if bstar[k] >= (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            u[k], u[k - 1] = u[k - 1], u[k]
            recompute()
            mu, bstar = gso()
            if mu is None:
                return u
            k = max(k - 1, 1)
    return u


def lll_gram(g: Mat, delta: Fraction = Fraction(3, 4)) -> tuple[Mat, Mat]:
    """LLL-reduce a positive definite Gram matrix.

    Returns (g', u) with g' = u g u^T and u unimodular.  A floating-point
    pre-pass does the bulk of the work; the exact rational pass below then
    certifies (and if needed finishes) the reduction.
    """
    pre = _lll_pre(g)
    g = mat_mul(mat_mul(frac_mat(pre), frac_mat(g)), transpose(frac_mat(pre)))
    n = len(g)
    u = int_identity(n)
    gram = [[Fraction(x) for x in row] for row in g]

    def gso():
        # b*_i norms and mu coefficients straight from the Gram matrix
        mu = [[Fraction(0)] * n for _ in range(n)]
        bstar = [Fraction(0)] * n
        # inner products of basis vectors with b*_j, built incrementally
        ip = [[Fraction(0)] * n for _ in range(n)]  # ip[i][j] = <b_i, b*_j>
        for i in range(n):
            for j in range(i + 1):
                ip[i][j] = gram[i][j] - sum(mu[j][k] * ip[i][k] for k in range(j))
            for j in range(i):
                mu[i][j] = ip[i][j] / bstar[j]
            bstar[i] = ip[i][i]
        return mu, bstar

    # keep it simple: recompute gram rows via u when mutating
    def recompute():
        nonlocal gram
        gram = mat_mul(mat_mul(frac_mat(u), frac_mat(g)), transpose(frac_mat(u)))

    mu, bstar = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q != 0:
                u[k] = [x - q * y for x, y in zip(u[k], u[j])]
                recompute()
                mu, bstar = gso()
        if bstar[k] >= (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            u[k], u[k - 1] = u[k - 1], u[k]
            recompute()
            mu, bstar = gso()
            k = max(k - 1, 1)
    recompute()
    comp = [[sum(u[i][k2] * pre[k2][j] for k2 in range(n)) for j in range(n)]
            for i in range(n)]
    return gram, comp


def isqrt_frac_floor(x: Fraction) -> int:
    """floor(sqrt(x)) for a nonnegative rational."""
    if x < 0:
        raise ValueError("negative radicand")
    num, den = x.numerator, x.denominator
    return isqrt(num * den) // den

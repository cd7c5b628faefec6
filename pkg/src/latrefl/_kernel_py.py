"""Pure-Python Fincke-Pohst tree search.

The kernel enumerates integer vectors x with Q(x + shift) == target for a
positive definite quadratic form given by exact LDL data, optionally pruned
by linear inequality constraints.  A compiled twin with identical semantics
lives in _kernel_cy; the active one is picked in latrefl.enumlib.

All denominators are cleared once up front, so the tree walk itself runs on
plain integers: with z = y + L y (the diagonalizing coordinates of
y = x + shift), the scaled quantities

    Z_i = QD * z_i          (integer affine form of x)
    A_i = R * DT * d_i      (positive integers)
    T   = R * DT * QD^2 * target

satisfy sum_i A_i Z_i^2 == T exactly on solutions.  Interval endpoints come
from integer square roots, so no candidate is ever lost to rounding.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .errors import EnumerationBudgetError

BACKEND = "python"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def prepare(d, l, shift, target, constraints):
    """Clear all denominators; returns the integer data for the tree walk.

    Kept separate from the walk so the compiled twin can share it verbatim.
    """
    n = len(d)
    d = [Fraction(x) for x in d]
    shift = [Fraction(s) for s in shift]
    target = Fraction(target)

    # z_i = y_i + sum_{k>i} l[i][k] y_k with y = x + shift:
    # integer scale QD makes every coefficient and constant integral
    qd = 1
    const = [shift[i] + sum(Fraction(l[i][k]) * shift[k] for k in range(i + 1, n))
             for i in range(n)]
    for i in range(n):
        qd = _lcm(qd, const[i].denominator)
        for k in range(i + 1, n):
            qd = _lcm(qd, Fraction(l[i][k]).denominator)
    lint = [[int(Fraction(l[i][k]) * qd) for k in range(n)] for i in range(n)]
    cint = [int(const[i] * qd) for i in range(n)]

    r = 1
    for x in d:
        r = _lcm(r, x.denominator)
    t0 = target * r * qd * qd
    dt = t0.denominator
    a = [int(x * r * dt) for x in d]
    t = int(t0 * dt)

    cons = []
    for u, c in constraints:
        u = [Fraction(x) for x in u]
        c = Fraction(c)
        # v with u . y = sum v_i z_i in the diagonalizing coordinates
        v = [Fraction(0)] * n
        for i in range(n):
            v[i] = u[i] - sum(Fraction(l[j][i]) * v[j] for j in range(i))
        qv = c.denominator
        for x in v:
            qv = _lcm(qv, x.denominator)
        vint = [int(x * qv) for x in v]
        cc = int(c * qv * qd)
        # prefix Cauchy-Schwarz masses m_i = sum_{j<=i} v_j^2 / d_j, scaled
        acc = Fraction(0)
        m = []
        for i in range(n):
            acc += v[i] * v[i] / d[i]
            m.append(acc * qv * qv)
        qm = 1
        for x in m:
            qm = _lcm(qm, x.denominator)
        mint = [int(x * qm) for x in m]
        # test slack^2 > m[i-1] * rem in scaled units:
        # (F - CC)^2 * K > MINT[i-1] * REM with K = R * DT * QM
        cons.append((vint, cc, mint, r * dt * qm))
    return n, qd, lint, cint, a, t, cons


def iter_qf(d, l, shift, target, constraints=(), budget=2_000_000):
    """Yield integer tuples x with Q(x + shift) == target.

    d, l       LDL data: Q(y) = sum_i d[i] * (y[i] + sum_{j>i} l[i][j] y[j])^2
    shift      rational vector; the enumerated point is y = x + shift
    target     exact rational norm
    constraints  iterable of (u, c): only points with u . y <= c survive;
                 u is a linear form on coordinates, c a rational bound
    budget     max number of tree nodes before EnumerationBudgetError

    Output order is deterministic: coordinates are chosen from the last to
    the first, each ascending.
    """
    n, qd, lint, cint, a, t, cons = prepare(d, l, shift, target, constraints)
    if n == 0:
        if t == 0:
            yield ()
        return
    if t < 0:
        return

    x = [0] * n
    z = [0] * n                       # scaled diagonal coordinates Z_i
    rem = [0] * (n + 1)               # scaled remaining norm before level i
    fvals = [[0] * (n + 1) for _ in cons]
    nodes = 0
    lo = [0] * n
    hi = [0] * n
    p_stack = [0] * n                 # affine part of Z_i from levels > i

    def child_bounds(i):
        # Z_i = qd * x_i + p with p collecting the already-fixed levels
        li = lint[i]
        p = cint[i]
        for k in range(i + 1, n):
            if x[k]:
                p += li[k] * x[k]
        # x_i ranges over ceil((-bound - p) / qd) .. floor((bound - p) / qd)
        bound = isqrt(rem[i + 1] // a[i])
        lo_i = -((bound + p) // qd)
        hi_i = (bound - p) // qd
        return p, lo_i, hi_i

    i = n - 1
    rem[n] = t
    p, lo[i], hi[i] = child_bounds(i)
    p_stack[i] = p
    x[i] = lo[i]

    while True:
        if x[i] > hi[i]:
            i += 1
            if i == n:
                return
            x[i] += 1
            continue
        nodes += 1
        if nodes > budget:
            raise EnumerationBudgetError(
                f"enumeration exceeded node budget of {budget}")
        zi = qd * x[i] + p_stack[i]
        new_rem = rem[i + 1] - a[i] * zi * zi
        if new_rem < 0:
            if zi > 0:
                # moving right only increases the term: close this level
                x[i] = hi[i] + 1
            else:
                x[i] += 1
            continue
        z[i] = zi
        rem[i] = new_rem
        pruned = False
        for ci_idx, (vint, cc, mint, k_scale) in enumerate(cons):
            f = fvals[ci_idx][i + 1] + vint[i] * zi
            fvals[ci_idx][i] = f
            slack = f - cc
            if i > 0:
                if slack > 0 and slack * slack * k_scale > mint[i - 1] * new_rem:
                    pruned = True
                    break
            elif slack > 0:
                pruned = True
                break
        if pruned:
            x[i] += 1
            continue
        if i == 0:
            if new_rem == 0:
                yield tuple(x)
            x[i] += 1
            continue
        i -= 1
        p, lo[i], hi[i] = child_bounds(i)
        p_stack[i] = p
        x[i] = lo[i]

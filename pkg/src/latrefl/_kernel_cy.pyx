# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Fincke-Pohst tree search; twin of _kernel_py.iter_qf.

Denominator clearing is shared with the pure kernel (prepare).  Two walks
are compiled: a machine-integer one used when conservative interval bounds
prove that every intermediate product fits in 64 bits, and an object one
(Python ints) otherwise.  Both produce the same vectors in the same order.
"""

from libc.stdlib cimport free, malloc
from libc.math cimport sqrt

from ._kernel_py import prepare
from .errors import EnumerationBudgetError

BACKEND = "cython"

# products are kept below 2^62 by the precheck
DEF LIMIT62 = 4611686018427387904


cdef inline long long ll_floordiv(long long a, long long b):
    # b > 0 always (b == qd)
    cdef long long q = a / b
    if a % b != 0 and (a < 0) != (b < 0):
        q -= 1
    return q


cdef inline long long ll_isqrt(long long x):
    if x <= 0:
        return 0
    cdef long long s = <long long>sqrt(<double>x)
    while s > 0 and s * s > x:
        s -= 1
    while (s + 1) * (s + 1) <= x:
        s += 1
    return s


def _fits_fast(n, qd, lint, cint, a, t, cons):
    """Interval bounds proving every product of the walk fits in 64 bits."""
    if t <= 0:
        return t == 0
    zmax = 1
    while zmax * zmax < t:
        zmax *= 2
    # |Z_i| <= sqrt(T); propagate loose per-level bounds on x and p
    xmax = [0] * n
    pmax = [0] * n
    for i in range(n - 1, -1, -1):
        p = abs(cint[i])
        for k in range(i + 1, n):
            p += abs(lint[i][k]) * xmax[k]
        pmax[i] = p
        xmax[i] = (zmax + p) // qd + 1
    big = LIMIT62
    for i in range(n):
        zi = qd * xmax[i] + pmax[i]
        if zi >= big or a[i] * zi * zi >= big or a[i] * zi * zi + t >= big:
            return False
    for vint, cc, mint, k_scale in cons:
        f = abs(cc)
        for i in range(n):
            f += abs(vint[i]) * (qd * xmax[i] + pmax[i])
        if f >= big or f * f >= big // max(1, k_scale):
            return False
        if mint[n - 1] >= big // max(1, t):
            return False
    return True


def iter_qf(d, l, shift, target, constraints=(), budget=2_000_000):
    """Yield integer tuples x with Q(x + shift) == target.

    Semantics and output order are identical to _kernel_py.iter_qf.
    """
    data = prepare(d, l, shift, target, constraints)
    n = data[0]
    t = data[5]
    if n == 0:
        return iter([()]) if t == 0 else iter(())
    if t < 0:
        return iter(())
    if _fits_fast(*data):
        return _walk_fast(data, budget)
    return _walk_obj(data, budget)


def _walk_fast(data, budget):
    cdef int n = data[0]
    cdef long long qd = data[1]
    lint = data[2]
    cint = data[3]
    a_py = data[4]
    cdef long long t = data[5]
    cons = data[6]
    cdef int i, k, ci, ncons = len(cons)
    cdef long long nodes = 0, budget_c = budget
    cdef long long zi, new_rem, p, bound, f, slack

    cdef long long *L = <long long *>malloc(n * n * sizeof(long long))
    cdef long long *C = <long long *>malloc(n * sizeof(long long))
    cdef long long *A = <long long *>malloc(n * sizeof(long long))
    cdef long long *X = <long long *>malloc(n * sizeof(long long))
    cdef long long *REM = <long long *>malloc((n + 1) * sizeof(long long))
    cdef long long *LO = <long long *>malloc(n * sizeof(long long))
    cdef long long *HI = <long long *>malloc(n * sizeof(long long))
    cdef long long *P = <long long *>malloc(n * sizeof(long long))
    cdef long long *V = <long long *>malloc(max(1, ncons * n) * sizeof(long long))
    cdef long long *CC = <long long *>malloc(max(1, ncons) * sizeof(long long))
    cdef long long *M = <long long *>malloc(max(1, ncons * n) * sizeof(long long))
    cdef long long *KS = <long long *>malloc(max(1, ncons) * sizeof(long long))
    cdef long long *F = <long long *>malloc(max(1, ncons * (n + 1)) * sizeof(long long))
    if not (L and C and A and X and REM and LO and HI and P
            and V and CC and M and KS and F):
        raise MemoryError()
    try:
        for i in range(n):
            C[i] = cint[i]
            A[i] = a_py[i]
            X[i] = 0
            for k in range(n):
                L[i * n + k] = lint[i][k]
        for ci in range(ncons):
            vint, cc, mint, k_scale = cons[ci]
            CC[ci] = cc
            KS[ci] = k_scale
            F[ci * (n + 1) + n] = 0
            for k in range(n):
                V[ci * n + k] = vint[k]
                M[ci * n + k] = mint[k]

        i = n - 1
        REM[n] = t
        p = C[i]
        bound = ll_isqrt(REM[i + 1] / A[i])
        LO[i] = -ll_floordiv(bound + p, qd)
        HI[i] = ll_floordiv(bound - p, qd)
        P[i] = p
        X[i] = LO[i]

        while True:
            if X[i] > HI[i]:
                i += 1
                if i == n:
                    return
                X[i] += 1
                continue
            nodes += 1
            if nodes > budget_c:
                raise EnumerationBudgetError(
                    f"enumeration exceeded node budget of {budget}")
            zi = qd * X[i] + P[i]
            new_rem = REM[i + 1] - A[i] * zi * zi
            if new_rem < 0:
                if zi > 0:
                    X[i] = HI[i] + 1
                else:
                    X[i] += 1
                continue
            REM[i] = new_rem
            for ci in range(ncons):
                f = F[ci * (n + 1) + i + 1] + V[ci * n + i] * zi
                F[ci * (n + 1) + i] = f
                slack = f - CC[ci]
                if slack > 0:
                    if i == 0:
                        break
                    if slack * slack * KS[ci] > M[ci * n + i - 1] * new_rem:
                        break
            else:
                if i == 0:
                    if new_rem == 0:
                        yield tuple([int(X[k]) for k in range(n)])
                    X[i] += 1
                    continue
                i -= 1
                p = C[i]
                for k in range(i + 1, n):
                    if X[k] != 0:
                        p += L[i * n + k] * X[k]
                bound = ll_isqrt(REM[i + 1] / A[i])
                LO[i] = -ll_floordiv(bound + p, qd)
                HI[i] = ll_floordiv(bound - p, qd)
                P[i] = p
                X[i] = LO[i]
                continue
            X[i] += 1
    finally:
        free(L); free(C); free(A); free(X); free(REM); free(LO); free(HI)
        free(P); free(V); free(CC); free(M); free(KS); free(F)


def _walk_obj(data, budget):
    cdef int n = data[0]
    qd = data[1]
    lint = data[2]
    cint = data[3]
    a = data[4]
    t = data[5]
    cons = data[6]
    cdef int i, k, ci_idx, ncons = len(cons)
    cdef long long nodes = 0, budget_c = budget
    x = [0] * n
    rem = [0] * (n + 1)
    fvals = [[0] * (n + 1) for _ in range(ncons)]
    lo = [0] * n
    hi = [0] * n
    p_stack = [0] * n

    def child_bounds(int i):
        li = lint[i]
        p = cint[i]
        for k in range(i + 1, n):
            if x[k]:
                p += li[k] * x[k]
        bound = _isqrt(rem[i + 1] // a[i])
        return p, -((bound + p) // qd), (bound - p) // qd

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
        if nodes > budget_c:
            raise EnumerationBudgetError(
                f"enumeration exceeded node budget of {budget}")
        zi = qd * x[i] + p_stack[i]
        new_rem = rem[i + 1] - a[i] * zi * zi
        if new_rem < 0:
            if zi > 0:
                x[i] = hi[i] + 1
            else:
                x[i] += 1
            continue
        rem[i] = new_rem
        pruned = False
        for ci_idx in range(ncons):
            vint, cc, mint, k_scale = cons[ci_idx]
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


from math import isqrt as _isqrt

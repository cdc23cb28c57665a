"""Independent reference computations used to pin down the linear algebra.

Nothing here imports from kzq.zlin internals beyond the IntMat container;
the Smith invariants come from gcds of k x k minors and the Hermite form
from an extended-gcd column sweep, so agreement with the package is a real
cross-check rather than the same code run twice.
"""

import itertools
from math import gcd


def det(rows):
    """Cofactor-expansion determinant, fine for the small sizes we test.

    >>> det([[1, 2], [3, 4]])
    -2
    >>> det([])
    1
    """
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[r[k] for k in range(n) if k != j] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * det(minor)
    return total


def smith_invariants_by_minors(rows):
    """Invariant factors of an integer matrix via determinantal divisors.

    d_k = gcd of all k x k minors; the k-th invariant factor is d_k/d_{k-1}.
    Brute force over all index subsets, so keep the matrices small.

    >>> smith_invariants_by_minors([[2, 0], [0, 4]])
    [2, 4]
    >>> smith_invariants_by_minors([[1, 1], [1, 1]])
    [1]
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    out = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for ri in itertools.combinations(range(m), k):
            for ci in itertools.combinations(range(n), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = gcd(g, det(sub))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def smith_invariants_by_elementary_ops(rows):
    """Invariant factors by plain elementary operations, leftmost pivoting.

    No transform bookkeeping and no minimal-absolute-value strategy, so this
    exercises a different code path than the package snf.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    A = [list(r) for r in rows]
    diag = []
    t = 0
    while t < min(m, n):
        pivot = None
        for j in range(t, n):
            for i in range(t, m):
                if A[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        A[t], A[pi] = A[pi], A[t]
        for r in A:
            r[t], r[pj] = r[pj], r[t]
        while True:
            for i in range(t + 1, m):
                q = A[i][t] // A[t][t]
                A[i] = [x - q * y for x, y in zip(A[i], A[t])]
            moved = False
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    A[t], A[i] = A[i], A[t]
                    moved = True
                    break
            if moved:
                continue
            for j in range(t + 1, n):
                q = A[t][j] // A[t][t]
                for r in A:
                    r[j] -= q * r[t]
            moved = False
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    for r in A:
                        r[t], r[j] = r[j], r[t]
                    moved = True
                    break
            if moved:
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % A[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
        t += 1
    return [d for d in diag if d != 0]


def hnf_by_extended_gcd(rows, ncols):
    """Canonical column Hermite form via extended-gcd column mixing.

    Same normal form convention as kzq.zlin.hnf (lower column echelon,
    positive pivots, left-of-pivot entries reduced into [0, pivot)), reached
    by a different route: two-column gcd transforms instead of repeated
    floor-division descent.
    """
    m = len(rows)
    n = ncols
    H = [list(r) for r in rows]

    def colmix(a, b, x, y, u, v):
        # (col_a, col_b) <- (x*col_a + y*col_b, u*col_a + v*col_b)
        for r in H:
            ra, rb = r[a], r[b]
            r[a] = x * ra + y * rb
            r[b] = u * ra + v * rb

    r = 0
    for i in range(m):
        if r == n:
            break
        for j in range(r, n):
            if H[i][j] != 0:
                for row in H:
                    row[r], row[j] = row[j], row[r]
                break
        else:
            continue
        for j in range(r + 1, n):
            if H[i][j] == 0:
                continue
            a, b = H[i][r], H[i][j]
            g, x, y = _xgcd(a, b)
            colmix(r, j, x, y, -(b // g), a // g)
            assert H[i][j] == 0
        if H[i][r] < 0:
            for row in H:
                row[r] = -row[r]
        for j in range(r):
            q = H[i][j] // H[i][r]
            if q:
                for row in H:
                    row[j] -= q * row[r]
        r += 1
    return H


def _xgcd(a, b):
    old_r, rr = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while rr != 0:
        q = old_r // rr
        old_r, rr = rr, old_r - q * rr
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t

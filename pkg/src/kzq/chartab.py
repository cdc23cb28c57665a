"""Exact character tables by the Dixon-Schneider method.

The class-algebra matrices are simultaneously diagonalized over a prime
field F_l with l = 1 (mod exponent) and l > 2|G|, degrees are recovered
from the orthogonality relation, and values are lifted to exact cyclotomic
numbers by inverting a discrete Fourier transform on eigenvalue
multiplicities. The finished table is verified against the orthogonality
relations in exact arithmetic, so the modular detour cannot leak error.
"""

import random
from fractions import Fraction

from .cyclo import Cyclotomic
from .perm import conjugacy_classes

MAX_SPLIT_RETRIES = 64


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def dixon_prime(exponent, order):
    """Smallest prime l = 1 (mod exponent) with l > 2*order.

    >>> dixon_prime(16, 32)
    97
    >>> dixon_prime(1, 1)
    3
    """
    l = exponent + 1
    while not (l > 2 * order and _is_prime(l)):
        l += exponent
    return l


def _primitive_root(l):
    facs = []
    n = l - 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            facs.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        facs.append(n)
    for g in range(2, l):
        if all(pow(g, (l - 1) // q, l) != 1 for q in facs):
            return g
    raise AssertionError("no primitive root found")


def _sqrt_mod(a, l):
    """A square root of a modulo prime l, by Tonelli-Shanks; None if none."""
    a %= l
    if a == 0:
        return 0
    if pow(a, (l - 1) // 2, l) != 1:
        return None
    if l % 4 == 3:
        return pow(a, (l + 1) // 4, l)
    q, s = l - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (l - 1) // 2, l) == 1:
        z += 1
    m, c, t, r = s, pow(z, q, l), pow(a, q, l), pow(a, (q + 1) // 2, l)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % l
            i += 1
        b = pow(c, 1 << (m - i - 1), l)
        m, c = i, b * b % l
        t, r = t * c % l, r * b % l
    return r


def _mat_mul(A, B, l):
    n, m = len(A), len(B[0])
    k = len(B)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    row[j] = (row[j] + a * Bt[j]) % l
    return out


def _solve_mod(A, B, l):
    """X with A X = B over F_l; A must have full column rank."""
    n = len(A)
    m = len(A[0])
    w = len(B[0])
    aug = [[A[i][j] % l for j in range(m)] + [B[i][j] % l for j in range(w)]
           for i in range(n)]
    r = 0
    piv = []
    for c in range(m):
        pr = next((i for i in range(r, n) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = pow(aug[r][c], l - 2, l)
        aug[r] = [x * inv % l for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(x - f * y) % l for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
    assert len(piv) == m, "coefficient matrix not of full column rank"
    for i in range(r, n):
        assert all(x == 0 for x in aug[i][m:]), "inconsistent system"
    X = [[0] * w for _ in range(m)]
    for row, c in enumerate(piv):
        X[c] = aug[row][m:]
    return X


def _kernel_mod(A, l):
    """Basis (list of columns) of the kernel of A over F_l."""
    n = len(A)
    m = len(A[0])
    aug = [[A[i][j] % l for j in range(m)] for i in range(n)]
    r = 0
    piv = []
    for c in range(m):
        pr = next((i for i in range(r, n) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = pow(aug[r][c], l - 2, l)
        aug[r] = [x * inv % l for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(x - f * y) % l for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
    free = [c for c in range(m) if c not in piv]
    basis = []
    for fc in free:
        v = [0] * m
        v[fc] = 1
        for row, c in enumerate(piv):
            v[c] = (-aug[row][fc]) % l
        basis.append(v)
    return basis


def _charpoly_mod(A, l):
    """Characteristic polynomial of A over F_l by Faddeev-LeVerrier.

    Returns coefficients of x^n + c1 x^(n-1) + ... low-to-high order.
    """
    n = len(A)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        for i in range(n):
            M[i][i] = (M[i][i] + c) % l
        M = _mat_mul(A, M, l)
        tr = sum(M[i][i] for i in range(n)) % l
        c = (-tr * pow(k, l - 2, l)) % l
        coeffs[n - k] = c
    return coeffs


def _poly_roots_mod(coeffs, l):
    """All roots in F_l by direct scan (fields here are small)."""
    roots = []
    for x in range(l):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % l
        if acc == 0:
            roots.append(x)
    return roots


class CharacterTable:
    """Exact complex character table with canonical row order.

    Rows sort by (degree, value fingerprint); columns follow the canonical
    conjugacy class order. Verified against exact first orthogonality at
    construction time.

    >>> from kzq.fppres import catalog
    >>> s3 = catalog("S3")
    >>> ct = CharacterTable(s3.group)
    >>> ct.degrees
    [1, 1, 2]
    >>> [str(v) for v in ct.rows[2]]
    ['2', '0', '-1']
    """

    __slots__ = ("group", "classes", "rows", "degrees", "prime")

    def __init__(self, group, classes=None, seed=0):
        self.group = group
        self.classes = classes or conjugacy_classes(group)
        self.prime = dixon_prime(group.exponent(), group.order)
        rows_mod = self._rows_mod(seed)
        self.rows, self.degrees = self._lift(rows_mod)
        order = sorted(range(len(self.rows)),
                       key=lambda i: (self.degrees[i],
                                      _row_fingerprint(self.rows[i])))
        self.rows = [self.rows[i] for i in order]
        self.degrees = [self.degrees[i] for i in order]
        self._verify()

    # ---- modular stage ----

    def _class_matrices(self):
        cd = self.classes
        G = self.group
        k = cd.n_classes
        mats = []
        for i in range(k):
            M = [[0] * k for _ in range(k)]
            for kk in range(k):
                gk = cd.reps[kk]
                for x in cd.classes[i]:
                    y = G.mult(G.inv(x), gk)
                    M[cd.class_of[y]][kk] += 1
            mats.append(M)
        return mats

    def _split(self, M, subspaces, l):
        out = []
        for B in subspaces:
            dim = len(B[0])
            if dim == 1:
                out.append(B)
                continue
            A = _solve_mod(B, _mat_mul(M, B, l), l)
            pieces = []
            for lam in _poly_roots_mod(_charpoly_mod(A, l), l):
                shifted = [[(A[i][j] - (lam if i == j else 0)) % l
                            for j in range(dim)] for i in range(dim)]
                kb = _kernel_mod(shifted, l)
                if kb:
                    pieces.append(_mat_mul(B, _cols_to_mat(kb), l))
            total = sum(len(p[0]) for p in pieces)
            assert total == dim, "class matrix not diagonalizable"
            out.extend(pieces)
        return out

    def _rows_mod(self, seed):
        G = self.group
        cd = self.classes
        k = cd.n_classes
        l = self.prime
        mats = self._class_matrices()
        subspaces = [[[1 if i == j else 0 for j in range(k)]
                      for i in range(k)]]
        for M in mats[1:]:
            subspaces = self._split(M, subspaces, l)
            if all(len(B[0]) == 1 for B in subspaces):
                break
        rng = random.Random(seed)
        tries = 0
        while not all(len(B[0]) == 1 for B in subspaces):
            tries += 1
            assert tries <= MAX_SPLIT_RETRIES, "eigenspace splitting stuck"
            combo = [[0] * k for _ in range(k)]
            for M in mats:
                r = rng.randrange(l)
                for i in range(k):
                    for j in range(k):
                        combo[i][j] = (combo[i][j] + r * M[i][j]) % l
            subspaces = self._split(combo, subspaces, l)
        assert len(subspaces) == k
        omegas = []
        for B in subspaces:
            v = [B[i][0] for i in range(k)]
            assert v[0] != 0, "omega vector with zero identity coordinate"
            inv0 = pow(v[0], l - 2, l)
            omegas.append([x * inv0 % l for x in v])
        # degrees from first orthogonality
        rows = []
        for om in omegas:
            s = 0
            for j in range(k):
                js = cd.inverse_class(j)
                s = (s + om[j] * om[js] * pow(cd.sizes[j], l - 2, l)) % l
            d2 = G.order * pow(s, l - 2, l) % l
            d = _sqrt_mod(d2, l)
            assert d is not None, "degree squared is not a square mod l"
            if d > l // 2:
                d = l - d
            assert 1 <= d * d <= G.order
            row = [om[j] * d % l * pow(cd.sizes[j], l - 2, l) % l
                   for j in range(k)]
            rows.append((d, row))
        return rows

    # ---- exact lift ----

    def _lift(self, rows_mod):
        cd = self.classes
        l = self.prime
        e = self.group.exponent()
        z = pow(_primitive_root(l), (l - 1) // e, l)
        lifted = []
        degrees = []
        for d, row in rows_mod:
            vals = []
            for j in range(cd.n_classes):
                o = cd.orders[j]
                w = pow(z, e // o, l)
                # chi(g^u) for u mod o, read off other classes
                powers = [row[cd.power_class(j, u)] for u in range(o)]
                val = Cyclotomic(0)
                total = 0
                inv_o = pow(o, l - 2, l)
                for t in range(o):
                    m = 0
                    for u in range(o):
                        m = (m + powers[u] * pow(w, (-t * u) % o, l)) % l
                    m = m * inv_o % l
                    assert m <= d, "multiplicity exceeds degree"
                    total += m
                    if m:
                        val = val + m * Cyclotomic.zeta(o, t)
                assert total == d, "eigenvalue multiplicities do not sum"
                vals.append(val)
            lifted.append(vals)
            degrees.append(d)
        return lifted, degrees

    # ---- verification ----

    def _verify(self):
        G = self.group
        cd = self.classes
        assert sum(d * d for d in self.degrees) == G.order
        for i, row in enumerate(self.rows):
            assert row[0] == self.degrees[i]
            for j in range(cd.n_classes):
                assert row[cd.inverse_class(j)] == row[j].conjugate()
        for i in range(len(self.rows)):
            for j in range(i, len(self.rows)):
                ip = self.inner_product(self.rows[i], self.rows[j])
                assert ip == (1 if i == j else 0), \
                    "orthogonality fails at rows %d, %d" % (i, j)

    def inner_product(self, row_a, row_b):
        """Exact <a, b> = (1/|G|) sum h_j a(g_j) conj(b(g_j)), a Fraction."""
        cd = self.classes
        total = Cyclotomic(0)
        for j in range(cd.n_classes):
            total = total + cd.sizes[j] * row_a[j] * row_b[j].conjugate()
        val = total * Fraction(1, self.group.order)
        assert val.is_rational(), "inner product of class functions"
        return val.as_fraction()

    def value_fingerprint(self, i):
        return (self.degrees[i], _row_fingerprint(self.rows[i]))


def _cols_to_mat(cols):
    n = len(cols[0])
    return [[c[i] for c in cols] for i in range(n)]


def _row_fingerprint(row):
    # negated coefficients so the all-ones (trivial) row sorts first
    return tuple((v.conductor, tuple(-c for c in v.coeffs)) for v in row)


def induce_class_function(hom, h_classes, g_classes, row):
    """Induction of a class function along an injective homomorphism.

    hom embeds H into G; row is indexed by H-classes. The value at a
    G-class C is |G| / (|C| |H|) times the sum of |c| chi(c) over H-classes
    c landing in C.

    >>> from kzq.fppres import catalog
    >>> from kzq.perm import GroupHom, conjugacy_classes
    >>> s3 = catalog("S3").group
    >>> c3 = catalog("C3").group
    >>> hom = GroupHom(c3, s3, [next(p for p in s3.elements
    ...                              if p.order() == 3)])
    >>> gcd = conjugacy_classes(s3)
    >>> hcd = conjugacy_classes(c3)
    >>> triv = [Cyclotomic(1)] * 3
    >>> [str(v) for v in induce_class_function(hom, hcd, gcd, triv)]
    ['2', '0', '2']
    """
    G = hom.target
    H = hom.source
    out = []
    class_image = [g_classes.class_of[hom(h_classes.reps[c])]
                   for c in range(h_classes.n_classes)]
    for j in range(g_classes.n_classes):
        acc = Cyclotomic(0)
        for c in range(h_classes.n_classes):
            if class_image[c] == j:
                acc = acc + h_classes.sizes[c] * row[c]
        scale = Fraction(G.order, g_classes.sizes[j] * H.order)
        out.append(acc * scale)
    return out


def restrict_class_function(hom, h_classes, g_classes, row):
    """Restriction along hom of a class function on the target."""
    return [row[g_classes.class_of[hom(h_classes.reps[c])]]
            for c in range(h_classes.n_classes)]

"""Exact arithmetic in cyclotomic fields.

Elements are kept in the power basis 1, z, ..., z^(phi(e)-1) of Q(zeta_e)
modulo the e-th cyclotomic polynomial, with Fraction coefficients, and are
always canonicalized to their minimal conductor. Two equal algebraic
numbers therefore compare equal structurally, whatever conductor they were
built in.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import NotCoprime


def divisors(n):
    """Positive divisors of n in increasing order.

    >>> divisors(12)
    [1, 2, 3, 4, 6, 12]
    """
    assert n >= 1
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients of the n-th cyclotomic polynomial, low to high.

    Computed by exact division of x^n - 1 by the lower cyclotomic factors,
    so deg = phi(n) comes out for free.

    >>> cyclotomic_poly(1)
    (-1, 1)
    >>> cyclotomic_poly(8)
    (1, 0, 0, 0, 1)
    >>> cyclotomic_poly(6)
    (1, -1, 1)
    """
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in divisors(n):
        if d < n:
            poly = _polydiv_exact(poly, cyclotomic_poly(d))
    out = []
    for c in poly:
        assert c.denominator == 1
        out.append(int(c))
    return tuple(out)


def phi(n):
    """Euler totient, read off as the degree of the cyclotomic polynomial."""
    return len(cyclotomic_poly(n)) - 1


def _polydiv_exact(num, den):
    num = [Fraction(c) for c in num]
    dn = len(den) - 1
    assert den[dn] == 1, "divisor must be monic"
    out = [Fraction(0)] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        q = num[i]
        out[i - dn] = q
        if q:
            for j, c in enumerate(den):
                num[i - dn + j] -= q * c
    assert all(c == 0 for c in num[:dn]), "division not exact"
    return out


def _polymod(p, modulus):
    # reduce p (Fractions, low to high) by a monic integer polynomial
    p = list(p)
    dn = len(modulus) - 1
    for i in range(len(p) - 1, dn - 1, -1):
        q = p[i]
        if q:
            for j, c in enumerate(modulus):
                p[i - dn + j] -= q * c
        p[i] = Fraction(0)
    return p[:dn] + [Fraction(0)] * (dn - len(p))


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def _subfield_basis(e, d):
    # columns: zeta_e^((e/d)*j) reduced mod Phi_e, for j < phi(d)
    mod = cyclotomic_poly(e)
    cols = []
    for j in range(phi(d)):
        k = (e // d) * j % e
        vec = [Fraction(0)] * (k + 1)
        vec[k] = Fraction(1)
        cols.append(tuple(_polymod(vec, mod)))
    return cols


def _solve_rat(cols, target):
    # one exact rational solution y with sum y_j cols_j = target, or None
    m = len(target)
    n = len(cols)
    aug = [[cols[j][i] for j in range(n)] + [target[i]] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if aug[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    y = [Fraction(0)] * n
    for row, c in enumerate(piv_cols):
        y[c] = aug[row][n]
    return y


class Cyclotomic:
    """An element of a cyclotomic field in canonical minimal-conductor form.

    >>> z = Cyclotomic.zeta(8)
    >>> r = z - z**3
    >>> r * r == 2
    True
    >>> Cyclotomic.zeta(4) ** 2
    Cyclotomic(-1)
    >>> Cyclotomic.zeta(6)
    Cyclotomic('1 + z3')
    >>> (z + z.conjugate()).conductor
    8
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, value=0):
        if isinstance(value, Cyclotomic):
            self.conductor = value.conductor
            self.coeffs = value.coeffs
            return
        q = Fraction(value)
        self.conductor = 1
        self.coeffs = (q,)

    @classmethod
    def _raw(cls, e, coeffs):
        # canonicalize: find the least divisor of e whose power basis spans it
        coeffs = list(coeffs)
        assert len(coeffs) == phi(e)
        for d in divisors(e):
            if d == e:
                break
            y = _solve_rat(_subfield_basis(e, d), coeffs)
            if y is not None:
                e, coeffs = d, y
                break
        self = object.__new__(cls)
        self.conductor = e
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        return self

    @classmethod
    def zeta(cls, e, k=1):
        """The root of unity zeta_e^k.

        >>> Cyclotomic.zeta(2)
        Cyclotomic(-1)
        >>> Cyclotomic.zeta(12, 6)
        Cyclotomic(-1)
        """
        assert e >= 1
        k %= e
        vec = [Fraction(0)] * (k + 1)
        vec[k] = Fraction(1)
        return cls._raw(e, _polymod(vec, cyclotomic_poly(e)))

    def _lift_coeffs(self, E):
        """Coefficient vector of self in the power basis of Q(zeta_E)."""
        assert E % self.conductor == 0
        if E == self.conductor:
            return list(self.coeffs)
        step = E // self.conductor
        p = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            p[step * i] = c
        return _polymod(p, cyclotomic_poly(E))

    def coords_in(self, E):
        """Coordinate tuple in the power basis of Q(zeta_E).

        The conductor must divide E. Useful for laying many values out in
        one fixed ambient field.

        >>> Cyclotomic.zeta(4).coords_in(8)
        (Fraction(0, 1), Fraction(0, 1), Fraction(1, 1), Fraction(0, 1))
        """
        return tuple(self._lift_coeffs(E))

    def is_rational(self):
        return self.conductor == 1

    def as_fraction(self):
        assert self.is_rational(), "not a rational number: %s" % self
        return self.coeffs[0]

    def is_zero(self):
        return self.conductor == 1 and self.coeffs[0] == 0

    def _common(self, other):
        other = _coerce(other)
        E = self.conductor * other.conductor // gcd(self.conductor,
                                                    other.conductor)
        return E, self._lift_coeffs(E), other._lift_coeffs(E)

    def __add__(self, other):
        E, a, b = self._common(other)
        return Cyclotomic._raw(E, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(Cyclotomic)
        out.conductor = self.conductor
        out.coeffs = tuple(-c for c in self.coeffs)
        return out

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        E, a, b = self._common(other)
        return Cyclotomic._raw(E, _polymod(_polymul(a, b),
                                           cyclotomic_poly(E)))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm.

        >>> x = Cyclotomic.zeta(5) + 2
        >>> x * x.inverse() == 1
        True
        """
        assert not self.is_zero(), "division by zero"
        if self.conductor == 1:
            return Cyclotomic(1 / self.coeffs[0])
        mod = [Fraction(c) for c in cyclotomic_poly(self.conductor)]
        # extended gcd of self.coeffs and the cyclotomic polynomial
        r0, r1 = mod, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(c != 0 for c in r1):
            q, rem = _polydivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
        lead = _leading(r0)
        assert len(_trim(r0)) == 1, "element not invertible"
        inv_coeffs = _polymod([c / lead for c in s0],
                              cyclotomic_poly(self.conductor))
        return Cyclotomic._raw(self.conductor, inv_coeffs)

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyclotomic(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def galois_apply(self, k):
        """Image under the automorphism zeta -> zeta^k of Q(zeta_conductor).

        >>> z = Cyclotomic.zeta(8)
        >>> z.galois_apply(3) == z ** 3
        True
        >>> Cyclotomic(7).galois_apply(5)
        Cyclotomic(7)
        """
        e = self.conductor
        k %= e
        if e == 1:
            return self
        if gcd(k, e) != 1:
            raise NotCoprime("automorphism index %d not coprime to %d" % (k, e))
        p = [Fraction(0)] * e
        for i, c in enumerate(self.coeffs):
            p[(k * i) % e] += c
        return Cyclotomic._raw(e, _polymod(p, cyclotomic_poly(e)))

    def conjugate(self):
        return self.galois_apply(-1)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return (self.conductor == other.conductor
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.conductor == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                z = "z%d" % self.conductor
                if i > 1:
                    z += "^%d" % i
                body = z if abs(c) == 1 else "%s*%s" % (abs(c), z)
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"

    def __repr__(self):
        if self.conductor == 1 and self.coeffs[0].denominator == 1:
            return "Cyclotomic(%d)" % self.coeffs[0]
        return "Cyclotomic(%r)" % str(self)


def _coerce(x):
    return x if isinstance(x, Cyclotomic) else Cyclotomic(x)


def _polydivmod(num, den):
    num = list(num)
    den = _trim(den)
    dn = len(den) - 1
    lead = den[dn]
    if len(_trim(num)) - 1 < dn:
        return [Fraction(0)], num
    out = [Fraction(0)] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        q = num[i] / lead
        out[i - dn] = q
        if q:
            for j, c in enumerate(den):
                num[i - dn + j] -= q * c
    return out, num[:dn]


def _polysub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _leading(p):
    return _trim(p)[-1]

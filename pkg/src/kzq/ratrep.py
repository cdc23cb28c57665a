"""Rational and p-adic representation structure on top of a character table.

Counts of irreducible representations over Q, Q_p, and F_p follow the
Witt-Berman fusion description: a subgroup U of (Z/e)^x acts on complex
irreducibles by Galois twisting and on conjugacy classes by powering, and
the two orbit counts must agree (Brauer's permutation lemma), which this
module checks on every call rather than trusting either side.

Schur indices are external data: a provider resolves them from bundled or
user-supplied files keyed by content fingerprints of the group and of each
rational orbit, with Frobenius-Schur indicators pinning the infinite place.
"""

import hashlib
from fractions import Fraction
from math import gcd, lcm

from .cyclo import Cyclotomic, phi
from .errors import DataConflict, NotPrime, UnknownSchurIndex


def unit_group(e):
    """Units of Z/e as a sorted list.

    >>> unit_group(8)
    [1, 3, 5, 7]
    >>> unit_group(1)
    [1]
    """
    if e == 1:
        return [1]
    return [k for k in range(1, e) if gcd(k, e) == 1]


def qp_fusion_units(e, p):
    """The subgroup of (Z/e)^x describing Q_p-conjugacy.

    Writing e = p^a m with p not dividing m, a unit k belongs iff k is a
    power of p modulo m (no constraint modulo p^a).

    >>> qp_fusion_units(8, 2)
    [1, 3, 5, 7]
    >>> qp_fusion_units(3, 2)
    [1, 2]
    >>> qp_fusion_units(12, 2)
    [1, 5, 7, 11]
    """
    m = e
    a = 0
    while m % p == 0:
        m //= p
        a += 1
    p_powers = set()
    x = 1 % m if m > 1 else 0
    while True:
        if x in p_powers:
            break
        p_powers.add(x)
        x = (x * p) % m if m > 1 else 0
    out = []
    for k in unit_group(e):
        if m == 1 or k % m in p_powers:
            out.append(k)
    return out


def fp_frobenius_units(e_regular, p):
    """The cyclic group generated by p inside (Z/e')^x.

    >>> fp_frobenius_units(7, 2)
    [1, 2, 4]
    """
    if e_regular == 1:
        return [1]
    out = set()
    x = 1 % e_regular
    while x not in out:
        out.add(x)
        x = (x * p) % e_regular
    return sorted(out)


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _orbits_under(points, step_images):
    """Orbits of a set of points under a list of self-maps, sorted."""
    points = list(points)
    seen = set()
    orbits = []
    for start in points:
        if start in seen:
            continue
        orbit = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for f in step_images:
                y = f(x)
                if y not in orbit:
                    orbit.add(y)
                    todo.append(y)
        seen |= orbit
        orbits.append(tuple(sorted(orbit)))
    orbits.sort(key=lambda o: o[0])
    return orbits


class QpStructure:
    """Q_p-level orbit data inside a RationalStructure."""

    __slots__ = ("p", "suborbits", "parent", "r_qp", "r_fp")

    def __init__(self, p, suborbits, parent, r_qp, r_fp):
        self.p = p
        self.suborbits = suborbits
        self.parent = parent
        self.r_qp = r_qp
        self.r_fp = r_fp


class RationalStructure:
    """Galois orbit decomposition of a character table.

    >>> from kzq.fppres import catalog
    >>> from kzq.chartab import CharacterTable
    >>> rs = RationalStructure(CharacterTable(catalog("S3").group))
    >>> rs.r_q
    3
    >>> rs.qp(2).r_qp, rs.qp(2).r_fp
    (3, 2)
    >>> rs.qp(3).r_qp, rs.qp(3).r_fp
    (3, 2)
    """

    __slots__ = ("table", "exponent", "q_orbits", "orbit_of_row",
                 "orbit_sums", "fs", "r_q", "_qp_cache", "_row_index")

    def __init__(self, table):
        self.table = table
        self.exponent = table.group.exponent()
        self._row_index = {_row_key(row): i
                           for i, row in enumerate(table.rows)}
        self.q_orbits = self._char_orbits(unit_group(self.exponent))
        class_count = self._class_orbit_count(unit_group(self.exponent))
        assert len(self.q_orbits) == class_count, \
            "rational orbit counts disagree between characters and classes"
        self.r_q = len(self.q_orbits)
        self.orbit_of_row = {}
        for oi, orbit in enumerate(self.q_orbits):
            for ri in orbit:
                self.orbit_of_row[ri] = oi
        self.orbit_sums = []
        for orbit in self.q_orbits:
            acc = [Cyclotomic(0)] * table.classes.n_classes
            for ri in orbit:
                acc = [a + v for a, v in zip(acc, table.rows[ri])]
            assert all(v.is_rational() for v in acc)
            self.orbit_sums.append(acc)
        self.fs = [self._fs_indicator(orbit[0]) for orbit in self.q_orbits]
        self._qp_cache = {}

    # ---- orbit machinery ----

    def _apply_sigma(self, ri, k):
        row = tuple(v.galois_apply(k) for v in self.table.rows[ri])
        out = self._row_index.get(_row_key(row))
        assert out is not None, "Galois twist left the character table"
        return out

    def _char_orbits(self, units):
        maps = [lambda ri, k=k: self._apply_sigma(ri, k) for k in units]
        return _orbits_under(range(len(self.table.rows)), maps)

    def _class_orbit_count(self, units):
        cd = self.table.classes
        maps = [lambda c, k=k: cd.power_class(c, k) for k in units]
        return len(_orbits_under(range(cd.n_classes), maps))

    def _fs_indicator(self, ri):
        cd = self.table.classes
        row = self.table.rows[ri]
        total = Cyclotomic(0)
        for j in range(cd.n_classes):
            total = total + cd.sizes[j] * row[cd.power_class(j, 2)]
        val = total * Fraction(1, self.table.group.order)
        assert val.is_rational()
        out = val.as_fraction()
        assert out.denominator == 1 and out in (-1, 0, 1)
        return int(out)

    def qp(self, p):
        """Q_p-level structure; p must be prime.

        Suborbits refine the rational orbits; r_fp counts p-regular classes
        up to Frobenius powering (Berman's theorem).
        """
        if p in self._qp_cache:
            return self._qp_cache[p]
        if not _is_prime(p):
            raise NotPrime("%r is not prime" % (p,))
        units = qp_fusion_units(self.exponent, p)
        suborbits = self._char_orbits(units)
        assert len(suborbits) == self._class_orbit_count(units), \
            "Q_p orbit counts disagree between characters and classes"
        parent = [self.orbit_of_row[sub[0]] for sub in suborbits]
        for si, sub in enumerate(suborbits):
            assert all(self.orbit_of_row[ri] == parent[si] for ri in sub)
        cd = self.table.classes
        regular = cd.regular_classes(p)
        e_reg = 1
        for c in regular:
            e_reg = lcm(e_reg, cd.orders[c])
        fmaps = [lambda c, k=k: cd.power_class(c, k)
                 for k in fp_frobenius_units(e_reg, p)]
        r_fp = len(_orbits_under(regular, fmaps))
        out = QpStructure(p, suborbits, parent, len(suborbits), r_fp)
        self._qp_cache[p] = out
        return out

    def suborbit_sum(self, qp_struct, si):
        """Sum of complex rows over one Q_p-suborbit."""
        acc = [Cyclotomic(0)] * self.table.classes.n_classes
        for ri in qp_struct.suborbits[si]:
            acc = [a + v for a, v in zip(acc, self.table.rows[ri])]
        return acc

    def orbit_degree(self, oi):
        """Degree of one complex constituent of the orbit."""
        return self.table.degrees[self.q_orbits[oi][0]]


def _row_key(row):
    return tuple(row)


def primes_dividing(n):
    """Sorted prime divisors.

    >>> primes_dividing(24)
    [2, 3]
    >>> primes_dividing(1)
    []
    """
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---- Schur index data ----


def group_fingerprint(table):
    """Content fingerprint: order, class (order, size) list, degree list."""
    cd = table.classes
    return (table.group.order,
            tuple((cd.orders[c], cd.sizes[c]) for c in range(cd.n_classes)),
            tuple(table.degrees))


def orbit_fingerprint(table, rs, oi):
    """Fingerprint of a rational orbit: constituent degree and sum values."""
    vals = tuple(v.as_fraction() for v in rs.orbit_sums[oi])
    return (rs.orbit_degree(oi), vals)


def fingerprint_hash(fp):
    """Short stable hash of a fingerprint tuple.

    >>> len(fingerprint_hash((1, (2, 3))))
    12
    """
    return hashlib.sha256(repr(fp).encode()).hexdigest()[:12]


class SchurProvider:
    """Schur index lookups from line-oriented data files.

    Lines: `schur group=<hash> complete` marks a group as fully described
    (unlisted orbit/prime pairs default to index 1); lines
    `schur group=<hash> irr=<hash> p=<prime|inf> m=<int>` give individual
    local indices. Groups without a complete marker raise
    UnknownSchurIndex when queried.
    """

    def __init__(self):
        self.complete = set()
        self.entries = {}

    @classmethod
    def from_files(cls, paths):
        out = cls()
        for path in paths:
            with open(path, encoding="utf-8") as fh:
                for lineno, raw in enumerate(fh, 1):
                    line = raw.strip()
                    if not line or line.startswith("#"):
                        continue
                    out._add_line(line, "%s:%d" % (path, lineno))
        return out

    def _add_line(self, line, where):
        parts = line.split()
        if parts[0] != "schur" or len(parts) < 3:
            raise DataConflict("bad schur line at %s: %r" % (where, line))
        fields = {}
        for part in parts[1:]:
            if part == "complete":
                fields["complete"] = True
                continue
            if "=" not in part:
                raise DataConflict("bad schur field at %s: %r" % (where, part))
            k, v = part.split("=", 1)
            fields[k] = v
        if "group" not in fields:
            raise DataConflict("schur line without group= at %s" % where)
        g = fields["group"]
        if fields.get("complete"):
            self.complete.add(g)
            return
        if "irr" not in fields or "p" not in fields or "m" not in fields:
            raise DataConflict("incomplete schur line at %s: %r"
                               % (where, line))
        p = fields["p"]
        if p != "inf":
            p = int(p)
            if not _is_prime(p):
                raise NotPrime("p=%r at %s" % (p, where))
        m = int(fields["m"])
        if m < 1:
            raise DataConflict("m must be >= 1 at %s" % where)
        key = (g, fields["irr"], p)
        if key in self.entries and self.entries[key] != m:
            raise DataConflict("conflicting schur entries for %r" % (key,))
        self.entries[key] = m

    def data_for(self, table, rs):
        """Resolve a SchurData for this table or raise UnknownSchurIndex."""
        ghash = fingerprint_hash(group_fingerprint(table))
        if ghash not in self.complete:
            raise UnknownSchurIndex(
                "no schur data for group of order %d (hash %s)"
                % (table.group.order, ghash))
        ohashes = [fingerprint_hash(orbit_fingerprint(table, rs, oi))
                   for oi in range(rs.r_q)]
        finite = {}
        primes = primes_dividing(table.group.order)
        for oi, oh in enumerate(ohashes):
            for p in primes:
                m = self.entries.get((ghash, oh, p), 1)
                finite[(oi, p)] = m
        m_inf = []
        for oi, oh in enumerate(ohashes):
            from_fs = 2 if rs.fs[oi] == -1 else 1
            stated = self.entries.get((ghash, oh, "inf"))
            if stated is not None and stated != from_fs:
                raise DataConflict(
                    "stated infinite index %d contradicts the indicator %d"
                    % (stated, rs.fs[oi]))
            m_inf.append(from_fs)
        return SchurData(rs, primes, finite, m_inf)


class SchurData:
    """Resolved local and global Schur indices per rational orbit."""

    __slots__ = ("rs", "primes", "finite", "m_inf", "m_global")

    def __init__(self, rs, primes, finite, m_inf):
        self.rs = rs
        self.primes = primes
        self.finite = finite
        self.m_inf = m_inf
        self.m_global = []
        for oi in range(rs.r_q):
            m = m_inf[oi]
            for p in primes:
                m = lcm(m, finite[(oi, p)])
            self.m_global.append(m)

    def finite_index(self, oi, p):
        return self.finite.get((oi, p), 1)

    def global_index(self, oi):
        return self.m_global[oi]

    def s_count(self):
        """Carter's s: orbits with even global index but odd index at
        every finite prime dividing the group order."""
        s = 0
        for oi in range(self.rs.r_q):
            if self.m_global[oi] % 2 == 0 and all(
                    self.finite[(oi, p)] % 2 == 1 for p in self.primes):
                s += 1
        return s


def trivial_schur_provider(table, rs):
    """SchurData with all finite indices 1 (still honest about infinity)."""
    primes = primes_dividing(table.group.order)
    finite = {(oi, p): 1 for oi in range(rs.r_q) for p in primes}
    m_inf = [2 if rs.fs[oi] == -1 else 1 for oi in range(rs.r_q)]
    return SchurData(rs, primes, finite, m_inf)

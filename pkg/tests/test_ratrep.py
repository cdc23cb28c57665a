"""Rational structure tests.

The cyclic-group oracle works directly on residues mod n (classes of C_n
are residues, powering is multiplication), with no group or character
machinery, so it exercises an independent data path. The indicator tests
lean on the involution-count identity sum(fs * degree) = #{g : g^2 = 1}.
"""

from math import gcd

import pytest

from kzq.chartab import CharacterTable
from kzq.errors import DataConflict, NotPrime, UnknownSchurIndex
from kzq.fppres import catalog
from kzq.ratrep import (RationalStructure, SchurProvider, fingerprint_hash,
                        fp_frobenius_units, group_fingerprint,
                        orbit_fingerprint, primes_dividing, qp_fusion_units,
                        trivial_schur_provider, unit_group)

_CACHE = {}


def structure(name):
    if name not in _CACHE:
        table = CharacterTable(catalog(name).group)
        _CACHE[name] = (table, RationalStructure(table))
    return _CACHE[name]


# ---- residue oracle for cyclic groups ----

def residue_orbits(n, multipliers, points=None):
    pts = list(range(n)) if points is None else list(points)
    seen = set()
    count = 0
    for start in pts:
        if start in seen:
            continue
        orbit = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for k in multipliers:
                y = (x * k) % n
                if y not in orbit:
                    orbit.add(y)
                    todo.append(y)
        seen |= orbit
        count += 1
    return count


def oracle_cyclic_counts(n):
    """(r_Q, {p: (r_Qp, r_Fp)}) for C_n computed on residues only."""
    full = [k for k in range(1, n + 1) if gcd(k, n) == 1]
    r_q = residue_orbits(n, full)
    per_p = {}
    for p in primes_dividing(n):
        r_qp = residue_orbits(n, qp_fusion_units(n, p))
        regular = [j for j in range(n) if (n // gcd(j, n)) % p != 0]
        r_fp = residue_orbits(n, [pow(p, i, n) for i in range(n)],
                              points=regular)
        per_p[p] = (r_qp, r_fp)
    return r_q, per_p


def test_unit_groups():
    assert unit_group(1) == [1]
    assert unit_group(12) == [1, 5, 7, 11]
    assert qp_fusion_units(16, 2) == unit_group(16)
    assert qp_fusion_units(15, 2) == [1, 2, 4, 8]
    assert fp_frobenius_units(1, 3) == [1]
    assert fp_frobenius_units(8, 3) == [1, 3]


def test_divisor_count_identity():
    # C_n has one rational irreducible per divisor of n
    for n in range(1, 25):
        divs = sum(1 for d in range(1, n + 1) if n % d == 0)
        assert oracle_cyclic_counts(n)[0] == divs


@pytest.mark.parametrize("n", list(range(1, 17)))
def test_cyclic_counts_match_residue_oracle(n):
    _, rs = structure("C%d" % n)
    r_q, per_p = oracle_cyclic_counts(n)
    assert rs.r_q == r_q
    for p, (r_qp, r_fp) in per_p.items():
        qp = rs.qp(p)
        assert (qp.r_qp, qp.r_fp) == (r_qp, r_fp)


def test_s3_counts():
    _, rs = structure("S3")
    assert rs.r_q == 3
    assert (rs.qp(2).r_qp, rs.qp(2).r_fp) == (3, 2)
    assert (rs.qp(3).r_qp, rs.qp(3).r_fp) == (3, 2)


def test_s4_counts():
    _, rs = structure("S4")
    assert rs.r_q == 5
    assert (rs.qp(2).r_qp, rs.qp(2).r_fp) == (5, 2)
    assert (rs.qp(3).r_qp, rs.qp(3).r_fp) == (5, 4)


def test_two_group_counts():
    for name, r_q, r_f2 in [("D8", 5, 1), ("Q8", 5, 1), ("Q16", 6, 1),
                            ("D16", 6, 1), ("QD32", 7, 1), ("Q32", 7, 1)]:
        _, rs = structure(name)
        assert rs.r_q == r_q, name
        qp = rs.qp(2)
        assert qp.r_qp == r_q, name
        assert qp.r_fp == r_f2, name


def test_c6_counts():
    _, rs = structure("C6")
    assert rs.r_q == 4
    assert (rs.qp(2).r_qp, rs.qp(2).r_fp) == (4, 2)
    assert (rs.qp(3).r_qp, rs.qp(3).r_fp) == (4, 2)


def test_count_inequalities():
    for name in ["C1", "C2", "C6", "C12", "S3", "S4", "D8", "Q8", "Q16",
                 "QD32", "C2xC2", "C4xC2"]:
        table, rs = structure(name)
        total = 1 - rs.r_q
        for p in primes_dividing(table.group.order):
            qp = rs.qp(p)
            assert rs.r_q <= qp.r_qp, name
            assert qp.r_fp <= qp.r_qp, name
            total += qp.r_qp - qp.r_fp
        assert total >= 0, name


def test_orbit_sums_have_integer_values():
    for name in ["C8", "S3", "Q16", "QD32"]:
        _, rs = structure(name)
        for row in rs.orbit_sums:
            for v in row:
                f = v.as_fraction()
                assert f.denominator == 1


def test_fs_constant_on_orbits():
    for name in ["C8", "Q16", "QD32"]:
        _, rs = structure(name)
        for oi, orbit in enumerate(rs.q_orbits):
            for ri in orbit:
                assert rs._fs_indicator(ri) == rs.fs[oi]


def test_fs_multisets():
    expected = {
        "S3": [1, 1, 1],
        "C4": [0, 1, 1],
        "Q8": [-1, 1, 1, 1, 1],
        "Q16": [-1, 1, 1, 1, 1, 1],
        "QD32": [0, 1, 1, 1, 1, 1, 1],
        "D8": [1, 1, 1, 1, 1],
    }
    for name, fs_sorted in expected.items():
        _, rs = structure(name)
        assert sorted(rs.fs) == fs_sorted, name


def test_fs_involution_identity():
    # sum over complex irreducibles of fs(chi) * chi(1) counts solutions
    # of g^2 = 1, squaring elements directly as the oracle
    for name in ["C1", "C2", "C4", "S3", "D8", "Q8", "Q16", "D16",
                 "QD32", "Q32", "S4", "C6", "C2xC2"]:
        table, rs = structure(name)
        g = table.group
        involutions = sum(1 for x in g.elements if (x * x).is_identity())
        total = 0
        for oi, orbit in enumerate(rs.q_orbits):
            total += rs.fs[oi] * len(orbit) * rs.orbit_degree(oi)
        assert total == involutions, name


def test_suborbits_partition_orbits():
    for name in ["C12", "Q16", "QD32", "S4"]:
        table, rs = structure(name)
        for p in primes_dividing(table.group.order):
            qp = rs.qp(p)
            for oi, orbit in enumerate(rs.q_orbits):
                members = []
                for si, sub in enumerate(qp.suborbits):
                    if qp.parent[si] == oi:
                        members.extend(sub)
                assert sorted(members) == list(orbit)


def test_qp_rejects_nonprime():
    _, rs = structure("S3")
    with pytest.raises(NotPrime):
        rs.qp(4)


# ---- Schur data ----

def quaternionic_orbit(rs):
    picks = [oi for oi in range(rs.r_q) if rs.fs[oi] == -1]
    assert len(picks) == 1
    return picks[0]


def write_schur(tmp_path, lines):
    path = tmp_path / "schur.txt"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


def hashes_for(name):
    table, rs = structure(name)
    g = fingerprint_hash(group_fingerprint(table))
    o = [fingerprint_hash(orbit_fingerprint(table, rs, oi))
         for oi in range(rs.r_q)]
    return table, rs, g, o


def test_provider_resolves_with_defaults(tmp_path):
    table, rs, g, o = hashes_for("Q16")
    path = write_schur(tmp_path, ["# comment", "schur group=%s complete" % g])
    data = SchurProvider.from_files([path]).data_for(table, rs)
    alpha = quaternionic_orbit(rs)
    assert data.finite_index(alpha, 2) == 1
    assert data.global_index(alpha) == 2
    assert data.s_count() == 1


def test_provider_finite_index_entry(tmp_path):
    table, rs, g, o = hashes_for("Q8")
    alpha = quaternionic_orbit(rs)
    path = write_schur(tmp_path, [
        "schur group=%s complete" % g,
        "schur group=%s irr=%s p=2 m=2" % (g, o[alpha]),
    ])
    data = SchurProvider.from_files([path]).data_for(table, rs)
    assert data.finite_index(alpha, 2) == 2
    assert data.global_index(alpha) == 2
    # even index at 2 disqualifies the orbit from Carter's count
    assert data.s_count() == 0


def test_provider_unknown_group(tmp_path):
    table, rs, g, o = hashes_for("S3")
    path = write_schur(tmp_path, ["schur group=deadbeef0000 complete"])
    with pytest.raises(UnknownSchurIndex):
        SchurProvider.from_files([path]).data_for(table, rs)


def test_provider_conflicting_lines(tmp_path):
    table, rs, g, o = hashes_for("Q8")
    alpha = quaternionic_orbit(rs)
    path = write_schur(tmp_path, [
        "schur group=%s irr=%s p=2 m=2" % (g, o[alpha]),
        "schur group=%s irr=%s p=2 m=1" % (g, o[alpha]),
    ])
    with pytest.raises(DataConflict):
        SchurProvider.from_files([path])


def test_provider_infinity_cross_check(tmp_path):
    table, rs, g, o = hashes_for("Q8")
    alpha = quaternionic_orbit(rs)
    path = write_schur(tmp_path, [
        "schur group=%s complete" % g,
        "schur group=%s irr=%s p=inf m=1" % (g, o[alpha]),
    ])
    with pytest.raises(DataConflict):
        SchurProvider.from_files([path]).data_for(table, rs)


def test_provider_infinity_agreement(tmp_path):
    table, rs, g, o = hashes_for("Q8")
    alpha = quaternionic_orbit(rs)
    path = write_schur(tmp_path, [
        "schur group=%s complete" % g,
        "schur group=%s irr=%s p=inf m=2" % (g, o[alpha]),
    ])
    data = SchurProvider.from_files([path]).data_for(table, rs)
    assert data.global_index(alpha) == 2


def test_provider_malformed_lines(tmp_path):
    for bad in ["schur nonsense",
                "schur group=abc irr=def p=2",
                "schur group=abc irr=def m=2",
                "notschur group=abc complete"]:
        path = write_schur(tmp_path, [bad])
        with pytest.raises(DataConflict):
            SchurProvider.from_files([path])
    path = write_schur(tmp_path, ["schur group=abc irr=def p=4 m=2"])
    with pytest.raises(NotPrime):
        SchurProvider.from_files([path])


def test_trivial_provider_matches_defaults():
    table, rs = structure("Q16")
    data = trivial_schur_provider(table, rs)
    alpha = quaternionic_orbit(rs)
    assert data.global_index(alpha) == 2
    assert data.s_count() == 1
    assert all(data.global_index(oi) == 1
               for oi in range(rs.r_q) if oi != alpha)


def test_group_fingerprints_distinguish_order_16():
    # D16, Q16, QD16 and the abelian order-16 groups all differ
    names = ["D16", "Q16", "QD16", "C16", "C4xC4", "C2xC8"]
    hashes = set()
    for name in names:
        table, rs = structure(name)
        hashes.add(fingerprint_hash(group_fingerprint(table)))
    assert len(hashes) == len(names)

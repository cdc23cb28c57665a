"""Generate the bundled data files under src/kzq/data.

Builds the five index-2 overgroups of Q16 (order 32) from their
presentations, checks them against hand-derived fingerprints, verifies
all shipped index-2 embeddings, and writes

    catalog.txt    permutation generators for the SG(...) groups
    amalgams.txt   index-2 embedding lines the corpus runner pairs up
    schur.txt      core local index data (always loaded)
    schur_sg.txt   gated data for the order-32 overgroup family

Run from the repository root:

    python3 tools/make_fixtures.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from kzq.chartab import CharacterTable
from kzq.fppres import (CatalogGroup, bundled_presentation, catalog,
                        evaluate_word_map, format_cycles,
                        parse_generator_map, parse_presentation,
                        todd_coxeter)
from kzq.perm import GroupHom, Perm
from kzq.ratrep import (RationalStructure, fingerprint_hash,
                        group_fingerprint, orbit_fingerprint)

DATA_DIR = os.path.join(os.path.dirname(__file__), "..", "src", "kzq",
                        "data")

# index-2 overgroups of Q16, with #solutions of g^2 = 1 (identity included)
OVERGROUPS = [
    ("QD32", "r=a^2;s=a*b", 10),
    ("Q32", "r=r^2;s=s", 2),
    ("Q16xC2", "r=r;s=s", 4),
    ("SG(32,42)", "r=r;s=s", 12),
    ("SG(32,44)", "r=r;s=s", 8),
]

# every embedding line shipped; the corpus runner forms all pairs per edge
EMBEDDINGS = [
    ("C1", "C2", "a=a^2"),
    ("C2", "C4", "a=a^2"),
    ("C2", "C2xC2", "a=a1"),
    ("C4", "C8", "a=a^2"),
    ("C4", "D8", "a=r"),
    ("C4", "Q8", "a=r"),
    ("C4", "C4xC2", "a=a1"),
    ("C8", "C16", "a=a^2"),
    ("C8", "D16", "a=r"),
    ("C8", "Q16", "a=r"),
    ("C8", "QD16", "a=a"),
    ("Q8", "Q16", "r=r^2;s=s"),
] + [("Q16", name, text) for name, text, _ in OVERGROUPS]

# groups whose schur data ships in the core file; all finite local
# indices are 1 unless listed in CORE_ENTRIES
CORE_COMPLETE = (
    ["C%d" % n for n in range(1, 17)] + ["C32"]
    + ["D6", "D8", "D10", "D12", "D14", "D16"]
    + ["S3", "S4"]
    + ["Q8", "Q16", "QD16", "Q32", "QD32"]
    + ["C2xC2", "C2xC4", "C4xC4", "C2xC8", "C2xC2xC2"]
)

GATED_COMPLETE = ["Q16xC2", "SG(32,42)", "SG(32,44)"]


def count_square_roots_of_identity(group):
    ident = Perm.identity(len(group.elements[0].img))
    return sum(1 for g in group.elements if (g * g).img == ident.img)


def build_overgroup(name):
    """Build an overgroup from its presentation, bypassing catalog.txt."""
    if name.startswith("SG("):
        pres = parse_presentation(bundled_presentation(name))
        return CatalogGroup(name, todd_coxeter(pres), pres.gens)
    return catalog(name)


def verify_embedding(cg_h, cg_k, text):
    gm = parse_generator_map(text, cg_h.gen_names, cg_k.gen_names)
    images = evaluate_word_map(gm, cg_k)
    hom = GroupHom(cg_h.group, cg_k.group, images)
    assert hom.is_injective(), "%s -> %s not injective" % (cg_h.name,
                                                           cg_k.name)
    assert cg_k.group.order == 2 * cg_h.group.order, \
        "%s -> %s not index 2" % (cg_h.name, cg_k.name)
    return hom


def quaternionic_orbits(table, rs):
    """Orbits with FS indicator -1: these carry the nonsplit local data."""
    return [oi for oi in range(rs.r_q) if rs.fs[oi] == -1]


def schur_lines(name, cg, finite_two=(), check_inf=False):
    """Lines for one group: a complete marker plus explicit entries."""
    t = CharacterTable(cg.group)
    rs = RationalStructure(t)
    gh = fingerprint_hash(group_fingerprint(t))
    lines = ["schur group=%s complete" % gh]
    for oi in finite_two:
        oh = fingerprint_hash(orbit_fingerprint(t, rs, oi))
        lines.append("schur group=%s irr=%s p=2 m=2" % (gh, oh))
    if check_inf:
        for oi in quaternionic_orbits(t, rs):
            oh = fingerprint_hash(orbit_fingerprint(t, rs, oi))
            lines.append("schur group=%s irr=%s p=inf m=2" % (gh, oh))
    return t, rs, lines


def main():
    os.makedirs(DATA_DIR, exist_ok=True)

    print("building the five order-32 overgroups of Q16 ...")
    q16 = catalog("Q16")
    built = {}
    fingerprints = set()
    for name, text, sq in OVERGROUPS:
        cg = build_overgroup(name)
        assert cg.group.order == 32, name
        got = count_square_roots_of_identity(cg.group)
        assert got == sq, "%s: %d solutions of g^2=1, expected %d" \
            % (name, got, sq)
        verify_embedding(q16, cg, text)
        t = CharacterTable(cg.group)
        fingerprints.add(fingerprint_hash(group_fingerprint(t)))
        built[name] = cg
        print("  %-10s order 32, %2d involutions, embedding ok"
              % (name, sq - 1))
    assert len(fingerprints) == len(OVERGROUPS), \
        "overgroups must be pairwise non-isomorphic"

    print("writing catalog.txt ...")
    with open(os.path.join(DATA_DIR, "catalog.txt"), "w",
              encoding="utf-8") as fh:
        fh.write("# permutation generators for catalog groups that have\n")
        fh.write("# no structural family; regenerate with"
                 " tools/make_fixtures.py\n")
        for name in ["SG(32,42)", "SG(32,44)"]:
            cg = built[name]
            degree = len(cg.group.gens[0].img)
            gens = ";".join(format_cycles(p) for p in cg.group.gens)
            fh.write("group %s degree=%d gens=%s\n" % (name, degree, gens))

    # round trip: the catalog must rebuild the same groups from the file
    for name in ["SG(32,42)", "SG(32,44)"]:
        again = catalog(name)
        t_a = CharacterTable(again.group)
        t_b = CharacterTable(built[name].group)
        assert group_fingerprint(t_a) == group_fingerprint(t_b), name

    print("verifying all embedding lines ...")
    for h_name, k_name, text in EMBEDDINGS:
        verify_embedding(catalog(h_name), catalog(k_name), text)

    print("writing amalgams.txt ...")
    with open(os.path.join(DATA_DIR, "amalgams.txt"), "w",
              encoding="utf-8") as fh:
        fh.write("# index-2 embeddings; the corpus runner pairs every two\n")
        fh.write("# embeddings that share an edge group\n")
        for h_name, k_name, text in EMBEDDINGS:
            fh.write("embed %s %s %s\n" % (h_name, k_name, text))

    print("writing schur.txt ...")
    core = [
        "# local Schur index data, keyed by group and orbit fingerprints.",
        "# Unlisted orbit/prime pairs of a complete group default to 1;",
        "# the infinite place is always derived from the FS indicator and",
        "# explicit p=inf lines only cross-check it.",
        "#",
        "# Every cyclic, dihedral and symmetric entry is split (index 1).",
        "# The generalized quaternion groups have one quaternionic orbit",
        "# each (FS -1): for Q8 the algebra is the rational quaternions,",
        "# nonsplit at 2 and at the real place (m_2 = 2); for Q16 and Q32",
        "# the algebra sits over the real subfield of an 8th/16th root of",
        "# unity and is ramified at the infinite places only (m_2 = 1).",
        "# The semidihedral groups are split everywhere.",
    ]
    for name in CORE_COMPLETE:
        cg = catalog(name)
        t = CharacterTable(cg.group)
        rs = RationalStructure(t)
        if name == "Q8":
            _, _, lines = schur_lines(name, cg,
                                      finite_two=quaternionic_orbits(t, rs),
                                      check_inf=True)
        elif name in ("Q16", "Q32"):
            _, _, lines = schur_lines(name, cg, check_inf=True)
        else:
            _, _, lines = schur_lines(name, cg)
        core.append("# %s" % name)
        core.extend(lines)
    with open(os.path.join(DATA_DIR, "schur.txt"), "w",
              encoding="utf-8") as fh:
        fh.write("\n".join(core) + "\n")

    print("writing schur_sg.txt ...")
    gated = [
        "# gated data for the order-32 overgroup family; remove this file",
        "# to exercise the skip paths.",
        "#",
        "# Q16xC2: the quaternionic orbits repeat the Q16 component, so",
        "# every finite index is 1.",
        "# SG(32,42): the faithful characters have values in the 8th",
        "# cyclotomic field and FS indicator 0; the component is a full",
        "# matrix algebra over its center, all indices 1.",
        "# SG(32,44): the faithful rational-valued orbits have FS -1 and",
        "# their component is a matrix algebra over the rational",
        "# quaternions, nonsplit at 2 (m_2 = 2).",
    ]
    for name in GATED_COMPLETE:
        cg = built.get(name) or catalog(name)
        t = CharacterTable(cg.group)
        rs = RationalStructure(t)
        if name == "SG(32,44)":
            quat = quaternionic_orbits(t, rs)
            assert quat, "SG(32,44) must have an FS -1 orbit"
            _, _, lines = schur_lines(name, cg, finite_two=quat,
                                      check_inf=True)
        elif name == "Q16xC2":
            _, _, lines = schur_lines(name, cg, check_inf=True)
        else:
            _, _, lines = schur_lines(name, cg)
        gated.append("# %s" % name)
        gated.extend(lines)
    with open(os.path.join(DATA_DIR, "schur_sg.txt"), "w",
              encoding="utf-8") as fh:
        fh.write("\n".join(gated) + "\n")

    print("done; files in %s" % os.path.abspath(DATA_DIR))


if __name__ == "__main__":
    main()

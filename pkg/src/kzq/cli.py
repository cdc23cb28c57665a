"""Command line front end: group specs in, reports out.

Group specs are "name:<catalog-name>" (products like "name:Q16xC2" work)
or "pres:<presentation>".  Reports come in two forms: aligned text and
JSON with a versioned schema ("schema": 1); identical inputs produce
byte-identical JSON.  All group values are rendered in Smith canonical
form, e.g. "Z^2 + Z/2".

Exit codes are stable: 0 success, 1 generic failure or corpus FAIL,
2 ParseError or unknown group name, 3 UnknownSchurIndex, 4 DataConflict,
5 NotIndexTwo, 6 NonCommutingLadder, 7 NotAutomorphism.
"""

import argparse
import json
import sys

from .corpus import acceptance_report, default_schur_paths, embedding_hom, \
    load_provider
from .errors import (DataConflict, KzqError, NonCommutingLadder,
                     NotAutomorphism, NotIndexTwo, ParseError,
                     UnknownName, UnknownSchurIndex)
from .fppres import resolve_group_spec
from .ktheory import (ContextCache, GroupKTheory, amalgam_image, vc1_image,
                      vc1_k0q)
from .perm import GroupHom

_EXIT_CODES = [
    (ParseError, 2),
    (UnknownName, 2),
    (UnknownSchurIndex, 3),
    (DataConflict, 4),
    (NotIndexTwo, 5),
    (NonCommutingLadder, 6),
    (NotAutomorphism, 7),
]


def exit_code_for(exc):
    for cls, code in _EXIT_CODES:
        if isinstance(exc, cls):
            return code
    return 1


def _iso_json(group):
    rank, torsion = group.iso_type()
    return {"rank": rank, "torsion": list(torsion)}


def _iso_text(d):
    parts = []
    if d["rank"] == 1:
        parts.append("Z")
    elif d["rank"] > 1:
        parts.append("Z^%d" % d["rank"])
    parts.extend("Z/%d" % t for t in d["torsion"])
    return " + ".join(parts) if parts else "0"


def _setup(schur_paths, seed):
    paths = default_schur_paths() if schur_paths is None else list(schur_paths)
    provider = load_provider(paths)
    return paths, ContextCache(provider, seed)


def invariants_payload(spec, schur_paths=None, seed=0):
    """All invariants of one group as the schema-1 report dict."""
    paths, cache = _setup(schur_paths, seed)
    ctx = cache.get(resolve_group_spec(spec))
    rep = GroupKTheory(ctx).report
    return {
        "schema": 1,
        "input": spec,
        "seed": seed,
        "schur_data": paths,
        "group": ctx.name,
        "r_q": rep.r_q,
        "r_qp": {str(p): rep.r_qp[p] for p in sorted(rep.r_qp)},
        "r_fp": {str(p): rep.r_fp[p] for p in sorted(rep.r_fp)},
        "carter_rank": rep.carter_rank,
        "s": rep.s,
        "k_minus_1": _iso_json(rep.k_minus_1),
        "sc_rank": rep.sc_rank,
        "image": None,
        "agreement": rep.agreement,
    }


def amalgam_payload(h, k1, embed1, k2, embed2, schur_paths=None, seed=0):
    """Image and kernel data of K1 *_H K2 as the schema-1 report dict."""
    paths, cache = _setup(schur_paths, seed)
    ctx_h = cache.get(resolve_group_spec(h))
    ctx_1 = cache.get(resolve_group_spec(k1))
    ctx_2 = cache.get(resolve_group_spec(k2))
    hom1 = embedding_hom(ctx_h, ctx_1, embed1, NotIndexTwo)
    hom2 = embedding_hom(ctx_h, ctx_2, embed2, NotIndexTwo)
    sk = amalgam_image(ctx_h, ctx_1, hom1, ctx_2, hom2)
    return {
        "schema": 1,
        "input": {"h": h, "k1": k1, "embed1": embed1,
                  "k2": k2, "embed2": embed2},
        "seed": seed,
        "schur_data": paths,
        "group": "%s *_%s %s" % (ctx_1.name, ctx_h.name, ctx_2.name),
        "ker_k0q": _iso_json(sk.ker_k0q),
        "ker_sc": _iso_json(sk.ker_sc),
        "ker_k_minus_1": _iso_json(sk.ker_k_minus_1),
        "image": _iso_json(sk.image),
        "agreement": True,
    }


def vc1_payload(h, aut_text, schur_paths=None, seed=0):
    """Twisted K0Q rank and (always zero) image as the schema-1 report dict.

    An empty automorphism string means the identity.
    """
    paths, cache = _setup(schur_paths, seed)
    ctx = cache.get(resolve_group_spec(h))
    if aut_text.strip():
        aut = embedding_hom(ctx, ctx, aut_text, NotAutomorphism)
    else:
        aut = GroupHom(ctx.group, ctx.group, ctx.group.gens)
    k0 = vc1_k0q(ctx, aut)
    sk = vc1_image(ctx, aut)
    return {
        "schema": 1,
        "input": {"h": h, "aut": aut_text},
        "seed": seed,
        "schur_data": paths,
        "group": ctx.name,
        "k0q": _iso_json(k0),
        "image": _iso_json(sk.image),
        "note": "twisted K0Q is free abelian; the image from the "
                "integral side is always 0",
        "agreement": True,
    }


def to_json(payload):
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _lines(pairs):
    width = max(len(k) for k, _ in pairs)
    return "\n".join("%-*s  %s" % (width, k, v) for k, v in pairs)


def invariants_text(p):
    pairs = [("group", p["group"]), ("input", p["input"]),
             ("seed", p["seed"]), ("schur data", ", ".join(p["schur_data"])),
             ("r_Q", p["r_q"])]
    for prime in sorted(p["r_qp"], key=int):
        pairs.append(("p = %s" % prime, "r_Qp %d, r_Fp %d"
                      % (p["r_qp"][prime], p["r_fp"][prime])))
    pairs.extend([
        ("carter", "rank %d, s = %d" % (p["carter_rank"], p["s"])),
        ("K_-1", "%s  (formula and via-SC route %s)"
         % (_iso_text(p["k_minus_1"]),
            "agree" if p["agreement"] else "DISAGREE")),
        ("SC rank", p["sc_rank"]),
    ])
    return _lines(pairs)


def amalgam_text(p):
    i = p["input"]
    return _lines([
        ("amalgam", p["group"]),
        ("edge", "%s via %r and %r" % (i["h"], i["embed1"], i["embed2"])),
        ("seed", p["seed"]),
        ("schur data", ", ".join(p["schur_data"])),
        ("ker K0Q", _iso_text(p["ker_k0q"])),
        ("ker SC", _iso_text(p["ker_sc"])),
        ("ker K_-1", _iso_text(p["ker_k_minus_1"])),
        ("image", "%s  (cokernel and snake routes agree)"
         % _iso_text(p["image"])),
    ])


def vc1_text(p):
    aut = p["input"]["aut"] or "(identity)"
    return _lines([
        ("group", p["group"]),
        ("aut", aut),
        ("seed", p["seed"]),
        ("schur data", ", ".join(p["schur_data"])),
        ("K0Q", "%s  (rank = twisted rational orbit count)"
         % _iso_text(p["k0q"])),
        ("image", "%s  (%s)" % (_iso_text(p["image"]), p["note"])),
    ])


def corpus_text(rows):
    lines = ["%2d  %-28s  %-4s  %s" % (r["criterion"], r["label"],
                                       r["status"], r["detail"])
             for r in rows]
    counts = {"PASS": 0, "SKIP": 0, "FAIL": 0}
    for r in rows:
        counts[r["status"]] += 1
    ran = counts["PASS"] + counts["FAIL"]
    pct = 100 * counts["PASS"] // ran if ran else 100
    summary = "PASS %d%% (%d passed, %d skipped, %d failed)" % (
        pct, counts["PASS"], counts["SKIP"], counts["FAIL"])
    return "\n".join(lines + [summary])


def _add_common(sub):
    sub.add_argument("--schur-data", action="append", metavar="PATH",
                     help="schur index data file; repeatable; replaces the "
                          "bundled defaults")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for the character table solver (default 0)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="kzq",
        description="Lower K-theory invariants of finite group rings, "
                    "exactly.")
    subs = ap.add_subparsers(dest="command", required=True)

    inv = subs.add_parser("invariants",
                          help="r_Q, local ranks, K_-1 both ways, SC rank")
    inv.add_argument("spec", help='group spec, e.g. "name:Q16"')
    _add_common(inv)
    inv.add_argument("--format", choices=("json", "text"), default="text")

    am = subs.add_parser("amalgam",
                         help="im(K0Z -> K0Q) of K1 *_H K2 with index-2 "
                              "embeddings")
    am.add_argument("--h", required=True, help="edge group spec")
    am.add_argument("--k1", required=True, help="first vertex group spec")
    am.add_argument("--embed1", required=True,
                    help='H -> K1 generator map, e.g. "r=a^2;s=a*b"')
    am.add_argument("--k2", required=True, help="second vertex group spec")
    am.add_argument("--embed2", required=True, help="H -> K2 generator map")
    _add_common(am)
    am.add_argument("--format", choices=("json", "text"), default="text")

    vc = subs.add_parser("vc1",
                         help="twisted K0Q of a finite-by-cyclic group")
    vc.add_argument("--h", required=True, help="finite group spec")
    vc.add_argument("--aut", default="",
                    help="automorphism as a generator map; empty for the "
                         "identity")
    _add_common(vc)
    vc.add_argument("--format", choices=("json", "text"), default="text")

    co = subs.add_parser("corpus",
                         help="run the ten acceptance checks over the "
                              "bundled corpus")
    _add_common(co)
    co.add_argument("--json", action="store_true",
                    help="machine-readable results array")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "invariants":
            payload = invariants_payload(args.spec, args.schur_data,
                                         args.seed)
            out = (to_json(payload) if args.format == "json"
                   else invariants_text(payload))
        elif args.command == "amalgam":
            payload = amalgam_payload(args.h, args.k1, args.embed1,
                                      args.k2, args.embed2,
                                      args.schur_data, args.seed)
            out = (to_json(payload) if args.format == "json"
                   else amalgam_text(payload))
        elif args.command == "vc1":
            payload = vc1_payload(args.h, args.aut, args.schur_data,
                                  args.seed)
            out = (to_json(payload) if args.format == "json"
                   else vc1_text(payload))
        else:
            rows = acceptance_report(args.schur_data, args.seed)
            out = to_json(rows) if args.json else corpus_text(rows)
            print(out)
            return 0 if all(r["status"] != "FAIL" for r in rows) else 1
    except KzqError as exc:
        print("kzq: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return exit_code_for(exc)
    print(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

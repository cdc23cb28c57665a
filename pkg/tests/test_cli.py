"""CLI contract: payload schema, text form, exit codes, determinism."""

import json

import pytest

from kzq import cli


def run_cli(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_json_schema(capsys):
    code, out, err = run_cli(["invariants", "name:Q16", "--format", "json"],
                             capsys)
    assert code == 0 and err == ""
    p = json.loads(out)
    assert set(p) == {"schema", "input", "seed", "schur_data", "group",
                      "r_q", "r_qp", "r_fp", "carter_rank", "s",
                      "k_minus_1", "sc_rank", "image", "agreement"}
    assert p["schema"] == 1
    assert p["group"] == "Q16" and p["input"] == "name:Q16"
    assert p["r_q"] == 6 and p["r_qp"] == {"2": 6} and p["r_fp"] == {"2": 1}
    assert p["carter_rank"] == 0 and p["s"] == 1
    assert p["k_minus_1"] == {"rank": 0, "torsion": [2]}
    assert p["sc_rank"] == 5
    assert p["image"] is None and p["agreement"] is True


def test_invariants_qd32_trivial_k_minus_1(capsys):
    _, out, _ = run_cli(["invariants", "name:QD32", "--format", "json"],
                        capsys)
    p = json.loads(out)
    assert p["k_minus_1"] == {"rank": 0, "torsion": []}


def test_invariants_trivial_group(capsys):
    _, out, _ = run_cli(["invariants", "name:C1", "--format", "json"],
                        capsys)
    p = json.loads(out)
    assert p["r_q"] == 1 and p["sc_rank"] == 0 and p["carter_rank"] == 0
    assert p["k_minus_1"] == {"rank": 0, "torsion": []}


def test_invariants_text_form(capsys):
    code, out, _ = run_cli(["invariants", "name:Q16"], capsys)
    assert code == 0
    assert "K_-1" in out and "Z/2" in out and "agree" in out
    assert "r_Q" in out and "p = 2" in out


def test_json_byte_identical_across_runs(capsys):
    a = run_cli(["invariants", "name:D8", "--format", "json"], capsys)[1]
    b = run_cli(["invariants", "name:D8", "--format", "json"], capsys)[1]
    assert a == b


def test_amalgam_headline(capsys):
    code, out, _ = run_cli(
        ["amalgam", "--h", "name:Q16",
         "--k1", "name:QD32", "--embed1", "r=a^2;s=a*b",
         "--k2", "name:QD32", "--embed2", "r=a^2;s=a*b",
         "--format", "json"], capsys)
    assert code == 0
    p = json.loads(out)
    assert p["group"] == "QD32 *_Q16 QD32"
    assert p["image"] == {"rank": 0, "torsion": [2]}
    assert p["ker_k0q"] == {"rank": 1, "torsion": []}
    assert p["ker_sc"] == {"rank": 1, "torsion": []}
    assert p["ker_k_minus_1"] == {"rank": 0, "torsion": [2]}


def test_amalgam_infinite_dihedral(capsys):
    code, out, _ = run_cli(
        ["amalgam", "--h", "name:C1",
         "--k1", "name:C2", "--embed1", "a=a^2",
         "--k2", "name:C2", "--embed2", "a=a^2",
         "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["image"] == {"rank": 0, "torsion": []}


def test_vc1_identity_on_trivial_group(capsys):
    code, out, _ = run_cli(["vc1", "--h", "name:C1", "--aut", "",
                            "--format", "json"], capsys)
    assert code == 0
    p = json.loads(out)
    assert p["k0q"] == {"rank": 1, "torsion": []}
    assert p["image"] == {"rank": 0, "torsion": []}


def test_vc1_inversion_on_c3(capsys):
    _, out, _ = run_cli(["vc1", "--h", "name:C3", "--aut", "a=a^-1",
                         "--format", "json"], capsys)
    assert json.loads(out)["k0q"] == {"rank": 2, "torsion": []}


def test_vc1_identity_on_q16(capsys):
    _, out, _ = run_cli(["vc1", "--h", "name:Q16", "--aut", "r=r;s=s",
                         "--format", "json"], capsys)
    assert json.loads(out)["k0q"] == {"rank": 6, "torsion": []}


def test_exit_code_parse_error_with_position(capsys):
    code, _, err = run_cli(
        ["amalgam", "--h", "name:Q16",
         "--k1", "name:QD32", "--embed1", "r=a^2;s=a*",
         "--k2", "name:QD32", "--embed2", "r=a^2;s=a*b"], capsys)
    assert code == 2
    assert "ParseError" in err and "position" in err


def test_exit_code_not_index_two(capsys):
    code, _, err = run_cli(
        ["amalgam", "--h", "name:C2",
         "--k1", "name:C8", "--embed1", "a=a^4",
         "--k2", "name:C8", "--embed2", "a=a^4"], capsys)
    assert code == 5 and "NotIndexTwo" in err


def test_exit_code_not_automorphism(capsys):
    code, _, err = run_cli(["vc1", "--h", "name:C2", "--aut", "a=a^2"],
                           capsys)
    assert code == 7 and "NotAutomorphism" in err


def test_exit_code_unknown_schur_index(capsys):
    code, _, err = run_cli(["invariants", "pres:a;a^17"], capsys)
    assert code == 3 and "UnknownSchurIndex" in err


def test_exit_code_unknown_name(capsys):
    code, _, err = run_cli(["invariants", "name:Nope"], capsys)
    assert code == 2


def test_exit_code_bad_spec_prefix(capsys):
    code, _, err = run_cli(["invariants", "Q16"], capsys)
    assert code == 2 and "name: or pres:" in err


def test_schur_data_override(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("# no data\n")
    code, _, err = run_cli(["invariants", "name:Q16",
                            "--schur-data", str(empty)], capsys)
    assert code == 3 and "UnknownSchurIndex" in err


def test_exit_code_data_conflict(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("schur group=deadbeef0000 complete\n"
                   "schur group=deadbeef0000 irr=cafe p=2 m=2\n"
                   "schur group=deadbeef0000 irr=cafe p=2 m=3\n")
    code, _, err = run_cli(["invariants", "name:Q16",
                            "--schur-data", str(bad)], capsys)
    assert code == 4 and "DataConflict" in err


def test_corpus_text_summary(monkeypatch, capsys):
    rows = [{"criterion": 1, "label": "a", "status": "PASS", "detail": "ok"},
            {"criterion": 2, "label": "b", "status": "SKIP", "detail": "gated"}]
    monkeypatch.setattr(cli, "acceptance_report", lambda paths, seed: rows)
    code, out, _ = run_cli(["corpus"], capsys)
    assert code == 0
    assert "PASS 100% (1 passed, 1 skipped, 0 failed)" in out


def test_corpus_fail_exit_and_json(monkeypatch, capsys):
    rows = [{"criterion": 1, "label": "a", "status": "PASS", "detail": "ok"},
            {"criterion": 2, "label": "b", "status": "FAIL", "detail": "bad"}]
    monkeypatch.setattr(cli, "acceptance_report", lambda paths, seed: rows)
    code, out, _ = run_cli(["corpus", "--json"], capsys)
    assert code == 1
    parsed = json.loads(out)
    assert isinstance(parsed, list) and parsed[1]["status"] == "FAIL"

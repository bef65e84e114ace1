import json

import pytest

import cbalg
from cbalg.cli import main

CORPUS = cbalg.corpus_dir()


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_heisenberg_exits_zero(capsys):
    code, out, _ = run(capsys, "check", str(CORPUS / "heisenberg.alg"))
    assert code == 0
    assert "anti_commutative" in out and "true" in out
    assert "lie" in out


def test_check_machine_output_is_stable(capsys):
    code1, out1, _ = run(capsys, "check", "--machine", str(CORPUS / "l43.alg"))
    code2, out2, _ = run(capsys, "check", "--machine", str(CORPUS / "l43.alg"))
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["identities"]["lie"] is True
    assert doc["cb"]["is_cb"] is False
    assert code1 == code2 == 1


def test_cb_brute_l43_f3_exits_one(capsys):
    code, out, _ = run(capsys, "cb", str(CORPUS / "l43.alg"), "--field", "F3", "--brute")
    assert code == 1
    doc_lines = out.splitlines()
    assert any("is_cb" in ln and "false" in ln for ln in doc_lines)
    assert "cb_witness" in out


def test_catalog_check_q(capsys):
    code, out, _ = run(capsys, "catalog", "check", "--field", "Q", "--eps", "0,1,-1,2")
    assert code == 0
    assert out.count("\n") >= 42
    assert "all_match" in out


def test_catalog_check_machine_counts_rows(capsys):
    code, out, _ = run(capsys, "catalog", "check", "--machine")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 42 and doc["all_match"] is True


def test_catalog_get_roundtrips(capsys):
    code, out, _ = run(capsys, "catalog", "get", "L5,4")
    assert code == 0
    from cbalg.fileformat import parse_algebra_text
    from cbalg.catalog import get_entry
    from cbalg.fields import Rationals

    assert parse_algebra_text(out).algebra.table == get_entry("L5,4", Rationals()).table


def test_catalog_get_parametric_needs_eps(capsys):
    code, _, err = run(capsys, "catalog", "get", "L6,22")
    assert code == 2 and "epsilon" in err


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "L6,26" in out


def test_series_command(capsys):
    code, out, _ = run(capsys, "series", str(CORPUS / "l43.alg"))
    assert code == 0
    assert "[4, 2, 1, 0]" in out


def test_centralizer_command(capsys):
    code, out, _ = run(capsys, "centralizer", str(CORPUS / "l43.alg"), "--element", "1,0,0,0")
    assert code == 0
    assert "e4" in out and "is_ideal" in out


def test_cb_elements_set(capsys):
    code, out, _ = run(capsys, "cb-elements", str(CORPUS / "l43.alg"), "--field", "F2")
    assert code == 0
    assert "count" in out and "4" in out


def test_cb_elements_single(capsys):
    code, out, _ = run(
        capsys, "cb-elements", str(CORPUS / "l43.alg"), "--field", "F3", "--element", "1,0,0,0"
    )
    assert code == 1
    assert "no" in out


def test_construct_command(capsys):
    code, out, _ = run(capsys, "construct", str(CORPUS / "example47.alg"))
    assert code == 0
    assert "well_defined" in out


def test_liesation_command(capsys):
    code, out, _ = run(capsys, "liesation", str(CORPUS / "symleibniz.alg"))
    assert code == 0
    assert "quotient_is_lie" in out


def test_liesation_rejects_non_leibniz(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text(
        '{"field": {"type": "Q"}, "dim": 1,'
        ' "products": [{"left": 1, "right": 1, "result": [{"k": 1, "c": "1"}]}]}'
    )
    code, _, err = run(capsys, "liesation", str(bad))
    assert code == 2 and "Leibniz" in err


def test_orbit_command(capsys):
    code, out, _ = run(
        capsys, "orbit", str(CORPUS / "heisenberg.alg"), "--field", "F3", "--element", "1,0,0"
    )
    assert code == 0
    assert "group_order" in out and "preservation_holds" in out


def test_orbit_over_q_skips_certification(capsys):
    code, out, _ = run(capsys, "orbit", str(CORPUS / "heisenberg.alg"))
    assert code == 0
    assert "skipped" in out


def test_parse_error_exits_two(capsys, tmp_path):
    bad = tmp_path / "p4.alg"
    bad.write_text('{"field": {"type": "Fp", "p": 4}, "dim": 1}')
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2
    assert "not prime" in err


def test_missing_file_exits_two(capsys):
    code, _, err = run(capsys, "check", "no_such_file.alg")
    assert code == 2


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_check_with_brute_runs_both_routes(capsys):
    code, out, _ = run(capsys, "check", str(CORPUS / "heisenberg.alg"), "--field", "F3", "--brute")
    assert code == 0
    assert "both" in out


def test_check_solvable2d_reports_failure(capsys):
    code, out, _ = run(capsys, "check", str(CORPUS / "solvable2d.alg"))
    assert code == 1
    assert "cb_witness" in out


def test_construct_ill_defined_exits_one(capsys, tmp_path):
    bad = tmp_path / "bad_decomp.alg"
    bad.write_text(
        """
        {"field": {"type": "Q"}, "dim": 0, "decomposition": {
          "r": 3, "dimB": 1, "dimZ": 1,
          "e": [{"i": 1, "j": 2, "coords": ["1"]},
                 {"i": 1, "j": 3, "coords": ["1"]},
                 {"i": 2, "j": 3, "coords": ["0"]}],
          "zij": [],
          "zijk": [{"i": 1, "j": 2, "k": 3, "coords": ["1"]}]
        }}
        """
    )
    code, out, _ = run(capsys, "construct", str(bad))
    assert code == 1
    assert "well_defined" in out and "false" in out


def test_cb_without_brute_needs_anticommutative(capsys):
    code, _, err = run(capsys, "cb", str(CORPUS / "symleibniz.alg"))
    assert code == 2
    assert "x*x" in err


def test_cb_brute_on_leibniz_file(capsys):
    code, out, _ = run(capsys, "cb", str(CORPUS / "symleibniz.alg"), "--field", "F3", "--brute")
    assert code == 0
    doc_lines = out.splitlines()
    assert any("is_cl" in ln and "true" in ln for ln in doc_lines)

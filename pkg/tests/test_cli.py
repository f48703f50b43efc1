"""Command surface: argument handling, report schema, exit codes, formats."""

import json

import pytest

import nmds.constructions as cons
from nmds.cli import main, run_verification
from nmds.codes import matrix_from_text

REPORT_KEYS = {
    "key", "id", "m", "q", "n", "k", "d", "d_dual", "class", "distribution",
    "dual_weight3_count", "pairing_ok", "locality", "bounds", "warnings",
}


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_all_m3(capsys):
    code, out, err = run(capsys, ["verify", "--all", "--m", "3"])
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 12
    assert {r["key"] for r in reports} == {f"{cid}@3" for cid in cons.CONSTRUCTION_IDS}
    for r in reports:
        assert set(r) == REPORT_KEYS
        assert r["class"] == "NMDS"
        assert r["pairing_ok"] is True
        assert r["warnings"] == []


def test_verify_report_schema_and_string_counts(capsys):
    code, out, _ = run(capsys, ["verify", "--id", "c", "--m", "3"])
    assert code == 0
    (report,) = json.loads(out)
    assert report["distribution"] == {"0": "1", "9": "70", "10": "252", "11": "42", "12": "147"}
    assert report["dual_weight3_count"] == "70"
    assert report["locality"] == {
        "code": 2, "dual": 8,
        "mechanism_code": "union-covers", "mechanism_dual": "intersection-empty",
    }
    assert report["bounds"]["sl_rhs_code"] == 9
    assert report["bounds"]["cm_rhs_dual"] == 9
    assert report["bounds"]["flags"]["code"] == {
        "d_optimal": True, "almost_d_optimal": False, "k_optimal": True,
    }


def test_verify_json_round_trips(capsys):
    _, out, _ = run(capsys, ["verify", "--id", "f3", "--m", "3,5"])
    reports = json.loads(out)
    assert json.loads(json.dumps(reports)) == reports
    assert [r["key"] for r in reports] == ["f3@3", "f3@5"]


def test_verify_m_constraint_warning(capsys):
    code, out, _ = run(capsys, ["verify", "--id", "c", "--m", "2"])
    assert code == 0  # warnings do not fail the run
    (report,) = json.loads(out)
    assert report["warnings"] and "m=2" in report["warnings"][0]
    assert report["class"] == "other"
    assert report["locality"] is None and report["bounds"] is None


def test_verify_e_passes_at_m2(capsys):
    code, out, _ = run(capsys, ["verify", "--id", "e", "--m", "2"])
    assert code == 0
    (report,) = json.loads(out)
    assert report["warnings"] == []
    assert report["class"] == "NMDS"


def test_verify_modulus_override(capsys):
    code, out, _ = run(capsys, ["verify", "--id", "c", "--m", "3", "--modulus", "0xD"])
    assert code == 0
    (report,) = json.loads(out)
    assert report["distribution"]["9"] == "70"


def test_verify_detects_mismatch(capsys, monkeypatch):
    real = cons._weights

    def corrupted(cid, q):
        w = dict(real(cid, q))
        if cid == "d":
            first = min(w)
            w[first] += 7  # break one closed form
        return w

    monkeypatch.setattr(cons, "_weights", corrupted)
    code, out, err = run(capsys, ["verify", "--id", "d", "--m", "3"])
    assert code == 1
    assert "FAIL d@3" in err
    assert "distribution" in err


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, ["verify", "--id", "zz", "--m", "3"])
    assert code == 2
    assert "unknown construction" in err


def test_verify_bad_m_rejected():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--all", "--m", "77"])
    assert exc.value.code == 2


def test_verify_bad_format_rejected():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--all", "--m", "3", "--format", "yaml"])
    assert exc.value.code == 2


def test_verify_out_file_csv(tmp_path, capsys):
    out_path = tmp_path / "reports.csv"
    code, out, _ = run(
        capsys, ["verify", "--id", "e", "--m", "3", "--format", "csv", "--out", str(out_path)]
    )
    assert code == 0 and out == ""
    lines = out_path.read_text().splitlines()
    assert lines[0].startswith("key,id,m,q,n,k,d,d_dual,class")
    assert lines[1].startswith("e@3,e,3,8,9,3,6,3,NMDS")


def test_verify_out_file_markdown(tmp_path, capsys):
    out_path = tmp_path / "reports.md"
    code, _, _ = run(
        capsys,
        ["verify", "--all", "--m", "3", "--format", "markdown", "--out", str(out_path)],
    )
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0].startswith("| key |")
    assert len(lines) == 14  # header, separator, 12 rows


# ---------------------------------------------------------------------------
# show
# ---------------------------------------------------------------------------

def test_show_matrix_roundtrip(capsys, ctx8):
    code, out, _ = run(capsys, ["show", "--id", "d", "--m", "3", "--what", "matrix"])
    assert code == 0
    mat = matrix_from_text(out)
    assert (mat.rows, mat.cols) == (3, 11)
    from nmds.constructions import build

    assert mat == build("d", ctx8).generator


def test_show_enumerator(capsys):
    code, out, _ = run(capsys, ["show", "--id", "c", "--m", "3", "--what", "enumerator"])
    assert code == 0
    assert out.strip() == "1 + 70z^9 + 252z^10 + 42z^11 + 147z^12"


def test_show_locality(capsys):
    code, out, _ = run(capsys, ["show", "--id", "f3", "--m", "3", "--what", "locality"])
    assert code == 0
    assert out.strip() == "(3, 7)"


def test_show_bounds(capsys):
    code, out, _ = run(capsys, ["show", "--id", "c", "--m", "3", "--what", "bounds"])
    assert code == 0
    assert "d-optimal" in out and "k-optimal" in out
    assert "singleton_like_rhs=9" in out


def test_show_unknown_id(capsys):
    code, _, err = run(capsys, ["show", "--id", "qq", "--m", "3", "--what", "matrix"])
    assert code == 2


# ---------------------------------------------------------------------------
# repair
# ---------------------------------------------------------------------------

def test_repair_c_coordinate_zero(capsys):
    code, out, _ = run(capsys, ["repair", "--id", "c", "--m", "3", "--erase", "0"])
    assert code == 0
    assert "recovered" in out and "ok" in out
    assert "repair set" in out


def test_repair_e1_uncovered_coordinate_uses_three_elements(capsys):
    code, out, _ = run(capsys, ["repair", "--id", "e1", "--m", "3", "--erase", "0"])
    assert code == 0
    line = next(l for l in out.splitlines() if l.startswith("repair set"))
    assert line.count("c[") == 4  # three sources plus the repaired symbol


def test_repair_every_coordinate_c(capsys):
    for i in range(12):
        code, out, _ = run(capsys, ["repair", "--id", "c", "--m", "3", "--erase", str(i)])
        assert code == 0, i


def test_repair_erase_out_of_range(capsys):
    code, _, err = run(capsys, ["repair", "--id", "c", "--m", "3", "--erase", "99"])
    assert code == 2
    assert "outside" in err


# ---------------------------------------------------------------------------
# library-level pipeline
# ---------------------------------------------------------------------------

def test_run_verification_clean():
    report, failures = run_verification("e1bar", 3)
    assert failures == []
    assert report["key"] == "e1bar@3"
    assert report["locality"] == {
        "code": 2, "dual": 6,
        "mechanism_code": "union-covers", "mechanism_dual": "intersection-empty",
    }


def test_run_verification_full_matrix_m3_m5():
    for m in (3, 5):
        for cid in cons.CONSTRUCTION_IDS:
            report, failures = run_verification(cid, m)
            assert failures == [], (cid, m, failures)


def test_cli_exit_zero_on_full_matrix(capsys):
    code, out, err = run(capsys, ["verify", "--all", "--m", "3,5"])
    assert code == 0
    assert len(json.loads(out)) == 24

import csv
import io
import json
import math

import pytest

from sphstruve.cli import main


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err

    return _run


class TestEval:
    def test_near_zero_of_sine(self, run):
        code, out, _ = run("eval", "sph_j", "--n", "0", "--x", "3.14159265358979")
        assert code == 0
        assert abs(float(out.strip())) < 1e-10

    def test_struve_closed_form_point(self, run):
        code, out, _ = run("eval", "struve_h", "--alpha", "0.5", "--x", "3.14159265358979")
        assert code == 0
        assert float(out.strip()) == pytest.approx(0.9003163161571061, rel=1e-10)

    def test_domain_error_exit_code(self, run):
        code, _, err = run("eval", "sph_j", "--n", "-1", "--x", "0")
        assert code == 2
        assert "singular" in err

    def test_unknown_function(self, run):
        code, _, err = run("eval", "frob", "--x", "1")
        assert code == 2
        assert "unknown function" in err

    def test_missing_argument(self, run):
        code, _, err = run("eval", "sph_j", "--x", "1")
        assert code == 2

    def test_verbose_json_metadata(self, run):
        code, out, _ = run(
            "eval", "cyl_j", "--nu", "0.5", "--x", "2", "--format", "json", "--verbose"
        )
        assert code == 0
        rec = json.loads(out)
        assert rec["value"] == pytest.approx(0.5130161365618278, rel=1e-12)
        assert rec["path"] == "series"
        assert rec["terms_used"] > 0


class TestVerify:
    def test_single_identity_json(self, run):
        code, out, _ = run("verify", "I01", "--format", "json")
        assert code == 0
        rec = json.loads(out.strip())
        assert rec["status"] == "pass"
        assert rec["lhs"] == pytest.approx(math.pi, abs=1e-8)
        for key in (
            "id",
            "params",
            "lhs",
            "rhs",
            "abs_err",
            "rel_err",
            "tol_abs",
            "tol_rel",
            "status",
            "seconds",
        ):
            assert key in rec

    def test_unknown_id(self, run):
        code, _, err = run("verify", "BOGUS")
        assert code == 2

    def test_csv_columns(self, run):
        code, out, _ = run("verify", "I20", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == [
            "id",
            "params",
            "lhs",
            "rhs",
            "abs_err",
            "rel_err",
            "tol_abs",
            "tol_rel",
            "status",
            "seconds",
        ]
        assert len(rows) == 1 + 20

    def test_multiple_ids_and_exit(self, run):
        code, out, _ = run("verify", "I02", "I05", "--format", "json")
        assert code == 0
        recs = [json.loads(line) for line in out.strip().splitlines()]
        assert {r["id"] for r in recs} == {"I02", "I05"}
        assert all(r["status"] == "pass" for r in recs)

    def test_determinism_modulo_timing(self, run):
        _, out1, _ = run("verify", "I02", "I16", "--format", "json", "--seed", "5")
        _, out2, _ = run("verify", "I02", "I16", "--format", "json", "--seed", "5")

        def strip(text):
            recs = [json.loads(line) for line in text.strip().splitlines()]
            for r in recs:
                r.pop("seconds")
            return recs

        assert strip(out1) == strip(out2)

    def test_catalog_listing(self, run):
        code, out, _ = run("verify", "--list-catalog")
        assert code == 0
        data = json.loads(out)
        assert len(data) == 24


class TestTable:
    def test_row_count_and_monotone(self, run):
        code, out, _ = run("table", "sph_j", "--n", "2", "--x", "0.1:10:100", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))[1:]
        assert len(rows) == 100
        xs = [float(r[0]) for r in rows]
        assert xs == sorted(xs)
        assert xs[0] == pytest.approx(0.1) and xs[-1] == pytest.approx(10.0)

    def test_series_value_row(self, run):
        code, out, _ = run("table", "struve_h", "--alpha", "0", "--x", "0.1:5:50", "--format", "csv")
        assert code == 0
        first = list(csv.reader(io.StringIO(out)))[1]
        assert float(first[1]) == pytest.approx(0.06359126999493356, rel=1e-10)

    def test_zero_count_rejected(self, run):
        code, _, err = run("table", "sph_j", "--n", "2", "--x", "0.1:10:0")
        assert code == 2

    def test_bad_sweep_spec(self, run):
        code, _, err = run("table", "sph_j", "--n", "2", "--x", "1:10")
        assert code == 2


class TestConfigFile:
    def test_flags_override_file(self, run, tmp_path):
        cfg = tmp_path / "cfg.txt"
        cfg.write_text("max_terms = 7\nformat = json\n")
        # file sets a tiny term budget; the flag restores it
        code, out, _ = run(
            "eval", "humbert2", "--mu", "0", "--nu", "0", "--z", "1",
            "--config", str(cfg), "--max-terms", "100",
        )
        assert code == 0
        rec = json.loads(out)
        assert rec["value"] == pytest.approx(0.12044213230101765, rel=1e-12)

    def test_file_applies_when_flag_missing(self, run, tmp_path):
        cfg = tmp_path / "cfg.txt"
        cfg.write_text("max_terms = 4\n")
        code, _, err = run(
            "eval", "humbert2", "--mu", "0", "--nu", "0", "--z", "9",
            "--config", str(cfg),
        )
        assert code == 2  # convergence failure surfaces as exit 2

    def test_unknown_key_rejected(self, run, tmp_path):
        cfg = tmp_path / "cfg.txt"
        cfg.write_text("wibble = 3\n")
        code, _, err = run("eval", "sph_j", "--n", "0", "--x", "1", "--config", str(cfg))
        assert code == 2


class TestOutFile:
    def test_output_redirect(self, run, tmp_path):
        target = tmp_path / "report.jsonl"
        code, out, _ = run("verify", "I01", "--format", "json", "--out", str(target))
        assert code == 0
        assert out == ""
        rec = json.loads(target.read_text().strip())
        assert rec["id"] == "I01"


class TestFullCatalogRun:
    def test_verify_all_json_record_count(self, run):
        code, out, _ = run("verify", "all", "--format", "json", "--parallelism", "2")
        assert code == 0
        recs = [json.loads(line) for line in out.strip().splitlines()]
        assert len(recs) >= 120
        assert all(r["status"] == "pass" for r in recs)
        assert {r["id"] for r in recs} == {f"I{k:02d}" for k in range(1, 25)}

    def test_non_finite_fields_become_null(self, run):
        code, out, _ = run("verify", "I23", "--format", "json")
        assert code == 0
        recs = [json.loads(line) for line in out.strip().splitlines()]
        assert all(r["rel_err"] is None for r in recs)  # rhs is exactly zero
        assert all(r["status"] == "pass" for r in recs)

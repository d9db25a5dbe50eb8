import csv
import io
import json

import pytest

from mendeleev_city.cli import main


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestTable:
    def test_csv_cardinality(self):
        code, out = run(["table", "--max-z", "10", "--format", "csv"])
        assert code == 0
        assert len(csv_rows(out)) == 10

    def test_text_shows_darmstadtium(self):
        code, out = run(["table", "--max-z", "116", "--format", "text"])
        assert code == 0
        assert "Ds" in out.split()

    def test_text_marks_unnamed_and_unobserved(self):
        code, out = run(["table", "--max-z", "120", "--format", "text"])
        assert code == 0
        tokens = out.split()
        assert "111?" in tokens  # observed, unnamed
        assert tokens.count("no") == 4  # 117..120 unobserved

    def test_csv_json_data_equality(self):
        code_c, out_c = run(["table", "--max-z", "120", "--format", "csv"])
        code_j, out_j = run(["table", "--max-z", "120", "--format", "json"])
        assert code_c == code_j == 0
        from_csv = csv_rows(out_c)
        from_json = json.loads(out_j)
        assert len(from_csv) == len(from_json) == 120
        for row_c, row_j in zip(from_csv, from_json):
            assert row_c == {k: str(v) for k, v in row_j.items()}

    def test_registry_override(self, tmp_path):
        reg = tmp_path / "reg.csv"
        reg.write_text(
            "z,symbol,name,status\n1,H,hydrogen,named\n", encoding="utf-8"
        )
        code, out = run(
            ["table", "--max-z", "3", "--format", "csv", "--registry", str(reg)]
        )
        rows = csv_rows(out)
        assert rows[0]["symbol"] == "H"
        assert rows[2]["status"] == "unobserved"

    def test_usage_error(self):
        code, _ = run(["table", "--max-z", "notanumber"])
        assert code == 1


class TestElement:
    def test_lanthanum(self):
        code, out = run(["element", "--z", "57", "--format", "json"])
        assert code == 0
        rec = json.loads(out)[0]
        assert rec["family"] == "other"
        assert rec["series"].startswith("inner transition (n=4")
        assert rec["subblock_j"] == "5/2"

    def test_quartet_lookup(self):
        code, out = run(["element", "--quartet", "1,0,1/2,-1/2", "--format", "json"])
        rec = json.loads(out)[0]
        assert rec["z"] == 1
        assert rec["family"] == "alkali metal"

    def test_domain_error_exit_2(self):
        code, _ = run(["element", "--z", "0"])
        assert code == 2

    def test_invalid_quartet_exit_2(self):
        code, _ = run(["element", "--quartet", "1,3,1/2,-1/2"])
        assert code == 2

    def test_both_or_neither_rejected(self):
        code, _ = run(["element", "--z", "1", "--quartet", "1,0,1/2,-1/2"])
        assert code == 2
        code, _ = run(["element"])
        assert code == 2

    def test_configuration_present(self):
        code, out = run(["element", "--z", "10", "--format", "text"])
        assert "1s2 2s2 2p6" in out

    def test_csv_json_equality(self):
        code_c, out_c = run(["element", "--z", "57", "--format", "csv"])
        code_j, out_j = run(["element", "--z", "57", "--format", "json"])
        row_c = csv_rows(out_c)[0]
        row_j = json.loads(out_j)[0]
        assert row_c == {k: str(v) for k, v in row_j.items()}


class TestNavigate:
    def test_one_step_so3(self):
        code, out = run(
            ["navigate", "--from-z", "1", "--to-z", "2", "--via", "so3", "--format", "json"]
        )
        report = json.loads(out)
        assert report["reachable"] and report["steps"] == 1

    def test_same_avenue_one_step(self):
        code, out = run(
            ["navigate", "--from-z", "1", "--to-z", "3", "--via", "so21", "--format", "json"]
        )
        assert json.loads(out)["steps"] == 1

    def test_taxi_one_step(self):
        code, out = run(
            ["navigate", "--from-z", "1", "--to-z", "80", "--via", "so42", "--format", "json"]
        )
        assert json.loads(out)["steps"] == 1

    def test_unreachable_text(self):
        code, out = run(
            ["navigate", "--from-z", "1", "--to-z", "2", "--via", "so21", "--max-z", "60"]
        )
        assert code == 0 and out.strip() == "unreachable"

    def test_unknown_algebra_exit_1(self):
        code, _ = run(["navigate", "--from-z", "1", "--to-z", "2", "--via", "so99"])
        assert code == 1

    def test_path_records_fields(self):
        code, out = run(
            ["navigate", "--from-z", "1", "--to-z", "5", "--via", "so42", "--format", "json"]
        )
        path = json.loads(out)["path"]
        assert path[0] == {"z": 1, "quartet": "(1,0,1/2,-1/2)", "algebra": None}
        assert path[1]["algebra"] == "so42"


@pytest.fixture
def alkali_data(tmp_path):
    path = tmp_path / "prop.csv"
    rows = ["z,value"]
    for z, n in [(1, 1), (3, 2), (11, 3), (19, 4), (37, 5), (55, 6), (87, 7)]:
        rows.append(f"{z},{2 + 3 * n}")
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    return path


class TestFitPredict:
    def test_fit_family_scope(self, alkali_data):
        code, out = run([
            "fit", "--data", str(alkali_data), "--property", "synthetic",
            "--scope", "family", "--column", "0,1/2,-1/2",
            "--allow-rank-deficient", "--format", "json",
        ])
        assert code == 0
        report = json.loads(out)
        assert report["max_abs_residual"] <= 1e-9
        assert report["scope"] == "family column (0,1/2,-1/2)"

    def test_fit_saves_model_and_predict_reads_it(self, alkali_data, tmp_path):
        model_file = tmp_path / "model.json"
        code, _ = run([
            "fit", "--data", str(alkali_data), "--scope", "family",
            "--column", "0,1/2,-1/2", "--allow-rank-deficient",
            "--output", str(model_file),
        ])
        assert code == 0
        code, out = run([
            "predict", "--model", str(model_file), "--at", "119", "--format", "json",
        ])
        assert code == 0
        prediction = json.loads(out)["predictions"][0]
        assert prediction["z"] == 119
        assert prediction["value"] == pytest.approx(2 + 3 * 8, abs=1e-6)

    def test_predict_refit(self, alkali_data):
        code, out = run([
            "predict", "--data", str(alkali_data), "--scope", "family",
            "--column", "0,1/2,-1/2", "--allow-rank-deficient",
            "--at", "119", "--format", "csv",
        ])
        assert code == 0
        row = csv_rows(out)[0]
        assert float(row["value"]) == pytest.approx(26.0, abs=1e-6)

    def test_underdetermined_exit_3(self, tmp_path):
        path = tmp_path / "tiny.csv"
        path.write_text("z,value\n1,1.0\n2,2.0\n", encoding="utf-8")
        code, _ = run([
            "fit", "--data", str(path), "--scope", "set", "--zs", "1,2",
        ])
        assert code == 3

    def test_missing_file_exit_4(self):
        code, _ = run([
            "fit", "--data", "/nonexistent/prop.csv", "--scope", "period", "--n", "2",
        ])
        assert code == 4

    def test_missing_scope_exit_1(self, alkali_data):
        code, _ = run(["fit", "--data", str(alkali_data)])
        assert code == 1

    def test_fit_period_scope(self, tmp_path):
        path = tmp_path / "p2.csv"
        lines = ["z,value"] + [f"{z},{float(z)}" for z in range(3, 11)]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        code, out = run([
            "fit", "--data", str(path), "--scope", "period", "--n", "2",
            "--allow-rank-deficient", "--format", "json",
        ])
        assert code == 0
        assert len(json.loads(out)["residuals"]) == 8

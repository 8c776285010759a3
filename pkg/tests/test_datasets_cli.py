"""Dataset round-trips and the command-line front end."""

import json

import pytest

from choquetlike import (
    Dataset, DatasetFormatError, Interval, KernelL, Scalar, Vector,
    capacity_family, parse_dataset, register_kernel, serialize_dataset,
)
from choquetlike.cli import main
from oracles import classical_choquet_increments, mu_lookup


class TestDatasets:
    def test_csv_round_trip(self):
        ds = parse_dataset("0.2,0.5,0.9\n0.1,0.1,0.4\n", "scalar")
        assert ds.kind == "scalar" and ds.n == 3 and len(ds.rows) == 2
        again = parse_dataset(serialize_dataset(ds), "scalar")
        assert again == ds

    def test_json_round_trip_intervals(self):
        text = json.dumps([[[0.2, 0.4], [0.5, 0.7]], [[0.0, 0.0], [1.0, 1.0]]])
        ds = parse_dataset(text, "interval")
        assert ds.rows[0][0] == Interval(0.2, 0.4)
        assert parse_dataset(serialize_dataset(ds), "interval") == ds

    def test_json_round_trip_vectors_with_ids(self):
        payload = {"kind": "vector", "ids": ["a", "b"],
                   "rows": [[[0.2, 0.4], [0.5, 0.7]], [[0, 0], [1, 1]]]}
        ds = parse_dataset(json.dumps(payload), "vector")
        assert ds.rows[0][0] == Vector((0.2, 0.4))
        assert ds.row_ids() == ["a", "b"]
        assert parse_dataset(serialize_dataset(ds), "vector") == ds

    def test_malformed_inputs(self):
        with pytest.raises(DatasetFormatError):
            parse_dataset("0.2,oops\n", "scalar")
        with pytest.raises(DatasetFormatError):
            parse_dataset("[[0.2, 0.4], [0.5]]", "interval")
        with pytest.raises(DatasetFormatError):
            parse_dataset("[]", "interval")
        with pytest.raises(DatasetFormatError):
            parse_dataset('[[[0.1,0.2],[0.3,0.4]],[[0.1,0.2]]]', "interval")

    def test_default_row_ids(self):
        ds = parse_dataset("0.5,0.5\n", "scalar")
        assert ds.row_ids() == ["0"]


@pytest.fixture
def scalar_files(tmp_path):
    data = tmp_path / "rows.csv"
    data.write_text("0.2,0.5,0.9\n0.0,0.0,0.0\n0.25,0.5,0.75\n")
    cap = tmp_path / "cap.json"
    cap.write_text(json.dumps({"n": 3, "kind": "cardinality"}))
    out = tmp_path / "out.json"
    return data, cap, out


class TestAggregateCommand:
    def test_scalar_rows_match_reference_sums(self, scalar_files):
        data, cap, out = scalar_files
        code = main(["aggregate", "--input", str(data), "--capacity", str(cap),
                     "--order", "scalar", "--output", str(out)])
        assert code == 0
        results = json.loads(out.read_text())["results"]
        mu = capacity_family("cardinality", 3)
        of = mu_lookup(mu)
        rows = [(0.2, 0.5, 0.9), (0.0, 0.0, 0.0), (0.25, 0.5, 0.75)]
        for rec, row in zip(results, rows):
            assert rec["value"] == pytest.approx(
                classical_choquet_increments(row, of), abs=1e-12)
            assert rec["consistent"] and rec["in_K"]
        assert results[1]["value"] == 0.0  # all-zero row stays at the bottom

    def test_interval_rows(self, tmp_path):
        data = tmp_path / "rows.json"
        data.write_text(json.dumps([[[0.2, 0.4], [0.5, 0.7]]]))
        cap = tmp_path / "cap.json"
        cap.write_text(json.dumps({"n": 2, "kind": "table", "entries": [
            {"subset": [], "value": 0}, {"subset": [1], "value": 0.5},
            {"subset": [2], "value": 0.5}, {"subset": [1, 2], "value": 1}]}))
        out = tmp_path / "out.json"
        code = main(["aggregate", "--input", str(data), "--capacity", str(cap),
                     "--order", "ab:0.5:1", "--output", str(out)])
        assert code == 0
        rec = json.loads(out.read_text())["results"][0]
        assert rec["value"] == pytest.approx([0.35, 0.55])
        assert rec["in_K"]

    def test_csv_output_format(self, scalar_files):
        data, cap, out = scalar_files
        out = out.with_suffix(".csv")
        code = main(["aggregate", "--input", str(data), "--capacity", str(cap),
                     "--output", str(out), "--format", "csv"])
        assert code == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "id,value,consistent,in_K"
        assert len(lines) == 4

    def test_inconsistent_rows_exit_two(self, tmp_path):
        register_kernel(KernelL(
            "ci", lambda x, b1, b2: Scalar(b1 * x.value), "cli-first-weight"))
        data = tmp_path / "rows.csv"
        data.write_text("0.5,0.5\n")
        cap = tmp_path / "cap.json"
        cap.write_text(json.dumps({"n": 2, "kind": "table", "entries": [
            {"subset": [], "value": 0}, {"subset": [1], "value": 0.2},
            {"subset": [2], "value": 0.7}, {"subset": [1, 2], "value": 1}]}))
        out = tmp_path / "out.json"
        code = main(["aggregate", "--input", str(data), "--capacity", str(cap),
                     "--kernel", "cli-first-weight", "--output", str(out)])
        assert code == 2
        rec = json.loads(out.read_text())["results"][0]
        assert rec["consistent"] is False
        assert rec["value"] == pytest.approx(0.85)  # value still written

    def test_parse_error_exit_one(self, scalar_files, capsys):
        data, cap, out = scalar_files
        code = main(["aggregate", "--input", "/no/such/file.csv",
                     "--capacity", str(cap)])
        assert code == 1
        err = json.loads(capsys.readouterr().err)
        assert err["error"]["type"] == "DatasetFormatError"

    def test_bad_capacity_exit_one(self, scalar_files, capsys):
        data, cap, out = scalar_files
        cap.write_text(json.dumps({"n": 3, "kind": "table", "entries": [
            {"subset": [], "value": 0.5}]}))
        code = main(["aggregate", "--input", str(data), "--capacity", str(cap)])
        assert code == 1
        assert "error" in json.loads(capsys.readouterr().err)


class TestVerifyCommand:
    def test_order_suite_passes(self, tmp_path):
        out = tmp_path / "order.json"
        code = main(["verify", "--suite", "order", "--grid", "2",
                     "--output", str(out)])
        assert code == 0
        reports = json.loads(out.read_text())
        assert all(r["verdict"] == "pass" for r in reports)
        assert {r["suite"] for r in reports} == {"order"}

    def test_aggregation_suite_passes(self, tmp_path):
        out = tmp_path / "agg.json"
        code = main(["verify", "--suite", "aggregation", "--grid", "2",
                     "--output", str(out)])
        assert code == 0

    def test_takac_suite_reports_deliberate_failure(self, tmp_path):
        out = tmp_path / "takac.json"
        code = main(["verify", "--suite", "appendix-c", "--output", str(out)])
        assert code == 3
        reports = json.loads(out.read_text())
        assert reports[0]["verdict"] == "fail"
        assert reports[0]["witness"]["x1"] is not None

    def test_dissimilarity_suite(self, tmp_path):
        out = tmp_path / "dis.json"
        code = main(["verify", "--suite", "dissimilarity", "--grid", "4",
                     "--output", str(out)])
        assert code == 0

    def test_missing_config_exit_one(self, capsys):
        code = main(["verify", "--suite", "order", "--config", "/no/such.json"])
        assert code == 1
        assert "error" in json.loads(capsys.readouterr().err)

    def test_config_overrides(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"grid": 2, "alpha": 0.5, "beta": 1.0,
                                   "Md": "min", "delta_d": "abs-diff"}))
        out = tmp_path / "takac.json"
        code = main(["verify", "--suite", "appendix-c", "--config", str(cfg),
                     "--output", str(out)])
        assert code == 3

    def test_csv_report_format(self, tmp_path):
        out = tmp_path / "order.csv"
        code = main(["verify", "--suite", "order", "--grid", "2",
                     "--output", str(out), "--format", "csv"])
        assert code == 0
        assert out.read_text().startswith("suite,law,verdict")

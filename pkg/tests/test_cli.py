import json

import pytest

from nosql_advisor.advisor import canonical_bundle_path
from nosql_advisor.cli import main
from nosql_advisor.dataset import AREA_NAMES


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_reports_counts_and_success(capsys):
    code, out, _ = run(capsys, "validate")
    assert code == 0
    assert "records: 80" in out
    assert "wide_column: 7" in out
    assert "graph: 17" in out
    assert "dataset valid" in out


def test_validate_flags_bad_dataset(tmp_path, capsys):
    from nosql_advisor.dataset import AREA_NAMES, FEATURE_NAMES

    header = ",".join(("name",) + FEATURE_NAMES + AREA_NAMES)
    bad = tmp_path / "bad.csv"
    bad.write_text(header + "\nX,0,0,0,0,1,0,0,1,0,0,0,0,0,0,0\n")
    code, out, _ = run(capsys, "--dataset", str(bad), "validate")
    assert code == 1
    assert "VIOLATION" in out


def test_predict_prints_six_verdict_lines(capsys):
    code, out, _ = run(capsys, "predict", "--features", "100110010")
    assert code == 0
    lines = [ln for ln in out.splitlines() if any(a in ln for a in AREA_NAMES)]
    assert len(lines) == 6
    assert all(("Suitable" in ln or "NotSuitable" in ln) for ln in lines)


def test_predict_json_output(capsys):
    code, out, _ = run(capsys, "predict", "--features", "000000000", "--json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["verdicts"]) == 6


def test_predict_rejects_bad_feature_string(capsys):
    code, _, err = run(capsys, "predict", "--features", "10011001")
    assert code == 2
    assert "9 bits" in err


def test_unknown_flag_is_usage_error(capsys):
    code, _, _ = run(capsys, "predict", "--nope", "1")
    assert code == 2


def test_unknown_command_is_usage_error(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_scan_rows_sum_to_80(tmp_path, capsys):
    out_file = tmp_path / "scan.csv"
    code, out, _ = run(capsys, "scan", "--out", str(out_file))
    assert code == 0
    lines = out_file.read_text().splitlines()
    data_rows = [ln for ln in lines if ln.split(",")[0] in ("All", "DMCAP", "CAPFP", "DMFP")]
    assert len(data_rows) == 28
    for row in data_rows:
        assert sum(int(v) for v in row.split(",")[1:]) == 80


def test_cluster_prints_sizes_and_agreement(capsys):
    code, out, _ = run(capsys, "cluster", "--k", "6", "--config", "All")
    assert code == 0
    assert "sizes=[22, 17, 16, 13, 8, 4]" in out
    assert "adjusted_rand=0.6322" in out


def test_cluster_unknown_config(capsys):
    code, _, err = run(capsys, "cluster", "--config", "WAT")
    assert code == 2


def test_stats_writes_heatmaps(tmp_path, capsys):
    code, out, _ = run(capsys, "stats", "--out", str(tmp_path / "viz"))
    assert code == 0
    assert (tmp_path / "viz" / "spearman.csv").exists()
    assert (tmp_path / "viz" / "spearman.svg").exists()
    assert (tmp_path / "viz" / "chi_square_p.csv").exists()
    assert "pairs with |rho| >= 0.4: 3" in out
    assert "pairs with p < 0.05: 11" in out


def test_train_reproduces_committed_bundle(tmp_path, capsys):
    out_file = tmp_path / "bundle.json"
    code, out, _ = run(capsys, "train", "--seed", "302", "--bundle-out", str(out_file))
    assert code == 0
    assert out_file.read_bytes() == canonical_bundle_path().read_bytes()
    assert "held-out accuracy" in out

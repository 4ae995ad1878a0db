import csv
import io
import json
import subprocess
import sys

import pytest

from gordon.cli import SCHEMA_VERSION, run
from gordon.relations import RELATIONS


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


POINT = ["--b", "0.3", "--bp", "1.7", "--c", "2.5", "--j", "1", "--lambda", "1.5",
         "--w", "0.4", "--z", "-0.3"]


def test_eval_json_record():
    code, out, _ = call("eval", *POINT)
    assert code == 0
    (rec,) = records(out)
    assert rec["schema_version"] == SCHEMA_VERSION and rec["kind"] == "eval"
    assert rec["strategy"] == "F2-SERIES"
    assert rec["value"] == pytest.approx(0.58826513314233585772, rel=1e-13)
    assert set(rec) >= {"err_est", "warnings", "params"}
    assert list(rec) == sorted(rec)


def test_eval_named_strategy_and_catalog():
    code, out, _ = call("eval", *POINT, "--strategy", "F1-SUM")
    assert code == 0 and records(out)[0]["strategy"] == "F1-SUM"
    code, out, _ = call("eval", "--bp", "0.7", "--c", "1.6", "--lambda", "2", "--z", "0.8")
    assert records(out)[0]["strategy"] == "SPECIAL-39"


def test_oracle_record():
    code, out, _ = call("oracle", *POINT)
    (rec,) = records(out)
    assert code == 0 and rec["kind"] == "oracle"
    assert rec["value"] == pytest.approx(0.58826513314233585772, rel=1e-10)


def test_compare_lists_strategies_and_summary():
    code, out, _ = call("compare", *POINT)
    recs = records(out)
    assert code == 0
    summary = recs[-1]
    assert summary["kind"] == "summary" and summary["strategies"] >= 5
    assert summary["max_pairwise_rel_diff"] < 1e-12
    assert summary["max_rel_diff_vs_oracle"] < 1e-9


def test_csv_and_human_formats():
    code, out, _ = call("eval", *POINT, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 1 and rows[0]["strategy"] == "F2-SERIES"
    code, out, _ = call("eval", *POINT, "--format", "human")
    assert code == 0 and "F2-SERIES" in out


def test_usage_error_exit_code():
    code, _, err = call("eval", "--j", "one")
    assert code == 2
    code, _, _ = call("nonsense")
    assert code == 2


def test_bad_env_is_usage_error(monkeypatch):
    monkeypatch.setenv("GORDON_MAX_TERMS", "lots")
    code, _, err = call("eval", *POINT)
    assert code == 2 and json.loads(err)["error"] == "USAGE"


def test_max_terms_env_is_honoured(monkeypatch):
    monkeypatch.setenv("GORDON_MAX_TERMS", "3")
    code, _, err = call("eval", *POINT, "--strategy", "F2-SERIES")
    assert code == 3 and json.loads(err)["kind"] == "error"


def test_evaluation_error_exit_code():
    code, out, err = call("eval", "--c", "1.5", "--lambda", "-1")
    assert code == 3 and out == ""
    rec = json.loads(err)
    assert rec["kind"] == "error" and rec["error"] == "DOMAIN"


def test_nonfinite_values_are_encoded():
    code, out, _ = call("eval", *POINT)
    assert "NaN" not in out and "Infinity" not in out


def test_sweep_random_with_oracle():
    code, out, _ = call("sweep", "--random", "5", "--seed", "2", "--with-oracle")
    recs = records(out)
    assert code == 0 and len(recs) == 5
    assert all(r["rel_diff_vs_oracle"] < 1e-7 for r in recs)


def test_verify_orthogonality_scope():
    code, out, _ = call("verify", "--scope", "orthogonality")
    recs = records(out)
    summary = recs[-1]
    assert code == 0 and summary["pass"] == 2178 and summary["fail"] == 0
    ledger = [r for r in recs if r["kind"] == "deviation"]
    assert {r["identity"] for r in ledger} >= {"A8", "Eq22", "SPECIAL-70"}


def test_verify_recurrences_marks_every_relation():
    code, out, _ = call("verify", "--scope", "recurrences")
    recs = [r for r in records(out) if r["kind"] == "recurrence"]
    assert code == 0 and len(recs) == 81 * len(RELATIONS)
    statuses = {(r["identity"], r["status"]) for r in recs}
    assert ("A8[b']", "pass") in statuses
    assert ("A8[b'-c]", "failed-as-printed") in statuses
    assert ("A1[printed]", "failed-as-printed") in statuses
    assert all(r["status"] in ("pass", "failed-as-printed", "inapplicable") for r in recs)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gordon", "eval", *POINT],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["strategy"] == "F2-SERIES"

import json

import pytest

from zumkeller.cli import main
from zumkeller.partition import PartitionWitness
from zumkeller.partition import verify_witness


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "945")
    assert code == 0
    obj = json.loads(out)
    assert obj["zumkeller"] == "yes" and obj["half_zumkeller"] == "no"
    assert obj["sigma"] == 1920


def test_classify_six(capsys):
    code, out, _ = run(capsys, "classify", "6")
    obj = json.loads(out)
    assert code == 0 and obj["zumkeller"] == "yes" and obj["practical"] is True


def test_classify_usage_error(capsys):
    code, _, _ = run(capsys, "classify", "0")
    assert code == 2
    code, _, _ = run(capsys, "classify", "abc")
    assert code == 2


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "6", "--csv")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 2
    assert lines[0].startswith("n,sigma,")


def test_witness_roundtrip_through_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "witness", "945")
    assert code == 0
    w = PartitionWitness.from_json_dict(json.loads(out))
    assert verify_witness(w)
    path = tmp_path / "w.json"
    path.write_text(out)
    code, out, _ = run(capsys, "verify-witness", str(path))
    assert code == 0 and json.loads(out)["valid"] is True


def test_witness_absent_is_exit_one(capsys):
    code, _, err = run(capsys, "witness", "1575", "--kind", "half")
    assert code == 1 and "no witness" in err


def test_verify_witness_rejects_tampered(capsys, tmp_path):
    blob = {"n": 6, "kind": "zumkeller", "part_a": [6, 3], "part_b": [1, 2]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(blob))
    code, out, _ = run(capsys, "verify-witness", str(path))
    assert code == 1 and json.loads(out)["valid"] is False


def test_lift_pipeline(capsys, tmp_path):
    code, out, _ = run(capsys, "witness", "6")
    path = tmp_path / "w6.json"
    path.write_text(out)
    code, out, _ = run(capsys, "lift", str(path), "--op", "coprime",
                       "--prime", "5", "--power", "1")
    assert code == 0
    lifted = PartitionWitness.from_json_dict(json.loads(out))
    assert lifted.n == 30 and verify_witness(lifted)
    code, out, _ = run(capsys, "lift", str(path), "--op", "double")
    assert code == 0 and json.loads(out)["n"] == 12
    code, _, err = run(capsys, "lift", str(path), "--op", "coprime",
                       "--prime", "3")
    assert code == 2  # gcd violation is a usage-level error


def test_scan_stdout_and_summary(capsys):
    code, out, err = run(capsys, "scan", "--predicate", "zumkeller",
                         "--to", "40", "--jobs", "1")
    assert code == 0
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert [r["n"] for r in records] == [6, 12, 20, 24, 28, 30, 40]
    summary = json.loads(err.strip().splitlines()[-1])
    assert summary["match_count"] == 7 and summary["unknown_count"] == 0


def test_scan_seed_does_not_change_matches(capsys):
    _, out1, _ = run(capsys, "scan", "--predicate", "zumkeller",
                     "--to", "2000", "--jobs", "1")
    _, out2, _ = run(capsys, "scan", "--predicate", "zumkeller",
                     "--to", "2000", "--jobs", "1", "--seed", "0x1234")
    assert out1 == out2


def test_verify_property_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--property", "znoth_goldens")
    assert code == 0 and json.loads(out)["passed"] is True
    code, out, _ = run(capsys, "verify", "--property", "conjecture2",
                       "--to", "5000", "--jobs", "1")
    assert code == 0 and json.loads(out)["counterexamples"] == []


def test_density_command(capsys):
    code, out, _ = run(capsys, "density", "--to", "2000", "--bucket", "500",
                       "--jobs", "1")
    assert code == 0
    rep = json.loads(out)
    assert len(rep["buckets"]) == 4 and rep["unknowns"] == []


def test_unknown_subcommand_is_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2

import json

import pytest

import conecalc


def vfc_job():
    return {
        "schema": "conecalc-job/1",
        "task": "vfc",
        "ring": {"variables": ["x0", "x1", "x2"], "projective": True},
        "ideal": ["x0*x2 - x1^2"],
        "params": {"kind": "section", "twists": [2], "section": ["x0*x2 - x1^2"]},
    }


def test_vfc_job_roundtrip():
    out = conecalc.run(vfc_job())
    assert out["exit_code"] == 0
    report = out["report"]
    assert report["schema"] == "conecalc-report/1"
    assert report["ok"] is True
    assert report["seed"] == conecalc.CLASS_SEED
    assert report["result"]["rank"] == 1
    assert report["result"]["vfc"]["display"] == "2[P^1]"
    assert report["result"]["closed_formula_agrees"] is True
    assert "2[P^1]" in out["summary"]


def test_reports_are_deterministic():
    a = conecalc.run_job(json.dumps(vfc_job()))
    b = conecalc.run_job(json.dumps(vfc_job()))
    strip = lambda text: {k: v for k, v in json.loads(text).items() if k != "timings_ms"}
    assert strip(a["report"]) == strip(b["report"])


def test_bad_job_exits_with_input_code():
    out = conecalc.run("{broken")
    assert out["exit_code"] == 2
    assert out["report"]["error"]["kind"] == "input"


def test_fixture_and_suite_catalogs():
    assert conecalc.fixture_names() == [
        "fat-point",
        "conic",
        "twisted-cubic",
        "double-line",
        "p2-smooth",
    ]
    assert len(conecalc.suite_names()) == 9


def test_run_suite_passes_and_mutation_is_detected():
    ok = conecalc.run_suite("left-inverse", count=2)
    assert ok["ok"] is True
    assert ok["passed"] == 2

    flipped = conecalc.run_suite("left-inverse", count=2, mutated=True)
    assert flipped["ok"] is False
    assert flipped["failed_index"] == 0
    assert flipped["instance"]

    with pytest.raises(conecalc.InputError):
        conecalc.run_suite("no-such-law")


def test_check_job_writes_replay_dump(tmp_path):
    job = {
        "schema": "conecalc-job/1",
        "task": "check",
        "params": {"suites": ["left-inverse"], "count": 1, "mutated": True},
    }
    out = conecalc.run(job, dump_dir=str(tmp_path))
    assert out["exit_code"] == 3
    assert len(out["dump_paths"]) == 1
    replay = json.loads((tmp_path / "conecalc-replay-left-inverse-0.json").read_text())
    assert replay["task"] == "check"
    again = conecalc.run(json.dumps(replay), dump_dir=str(tmp_path))
    assert again["exit_code"] == 3
    assert again["report"]["result"]["suites"][0]["failed_index"] == 0

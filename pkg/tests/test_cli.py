"""Command-line behavior: exit codes, JSON round trips, fault injection."""

import json
import os
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "knlab.cli"]


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("KN_PRECISION", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        CLI + list(args), capture_output=True, text=True, env=env, timeout=300
    )


def test_group_exit_zero_and_text():
    res = run_cli("group", "--subject", "gamma")
    assert res.returncode == 0
    assert "passed: true" in res.stdout
    assert "Z/4" in res.stdout


def test_group_all_subjects():
    for subject, token in (("gamma1", "Z^2"), ("gamma2", "Z^2")):
        res = run_cli("group", "--subject", subject)
        assert res.returncode == 0
        assert token in res.stdout


def test_horikawa_defaults():
    res = run_cli("horikawa")
    assert res.returncode == 0
    assert "[[0, [], 8]]" in res.stdout


def test_bicanonical_json_round_trip():
    res = run_cli("bicanonical", "--lambda1", "2", "--lambda2", "3", "--format", "json")
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert list(data.keys()) == ["params", "checks", "passed"]
    for check in data["checks"]:
        assert list(check.keys()) == ["name", "paper_ref", "status", "value", "expected", "tolerance"]
    assert data["passed"] is True
    reparsed = json.loads(json.dumps(data))
    assert reparsed == data


def test_construct_with_seed():
    res = run_cli("construct", "--lambda1", "2", "--lambda2", "3", "--seed", "1")
    assert res.returncode == 0
    assert "[PASS] construct.invariant-ledger: [4, 1, 0, 0]" in res.stdout


def test_construct_with_explicit_coeffs():
    res = run_cli(
        "construct", "--lambda1", "2", "--lambda2", "3", "--coeffs", "1,0,0,0,1"
    )
    assert res.returncode == 0


def test_construct_reports_are_deterministic():
    args = ("construct", "--lambda1", "2", "--lambda2", "3", "--seed", "9", "--format", "json")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.stdout == b.stdout


def test_usage_errors_exit_two():
    cases = [
        ("construct", "--lambda1", "1", "--lambda2", "3", "--seed", "1"),  # singular lambda
        ("construct", "--lambda1", "0.5", "--lambda2", "3", "--seed", "1"),  # float rejected
        ("construct", "--lambda1", "2", "--lambda2", "3", "--coeffs", "0,0,0,0,0"),
        ("construct", "--lambda1", "2", "--lambda2", "3", "--coeffs", "1,2,3"),
        ("construct", "--lambda1", "2", "--lambda2", "3"),  # neither coeffs nor seed
        ("group", "--subject", "nope"),
        ("bogus-command",),
    ]
    for case in cases:
        res = run_cli(*case)
        assert res.returncode == 2, case


def test_output_file(tmp_path):
    target = tmp_path / "report.json"
    res = run_cli(
        "group", "--subject", "gamma", "--format", "json", "--output", str(target)
    )
    assert res.returncode == 0
    data = json.loads(target.read_text())
    assert data["passed"] is True


def test_env_precision_override():
    # an absurdly demanding precision makes the numeric margin check fail
    res = run_cli(
        "construct",
        "--lambda1", "2", "--lambda2", "3", "--seed", "1",
        env_extra={"KN_PRECISION": "1e300"},
    )
    assert res.returncode == 1
    assert "construct.free-action" in res.stderr


def test_flag_beats_env_precision():
    res = run_cli(
        "construct",
        "--lambda1", "2", "--lambda2", "3", "--seed", "1",
        "--precision", "1e-12",
        env_extra={"KN_PRECISION": "1e300"},
    )
    assert res.returncode == 0


@pytest.mark.slow
def test_verify_core_passes():
    res = run_cli("verify-core", "--format", "json")
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert data["passed"] is True
    assert len(data["checks"]) >= 30
    names = [c["name"] for c in data["checks"]]
    assert names == sorted(names)


@pytest.mark.slow
@pytest.mark.parametrize("fault,expected_name", [
    ("relator-sign", "group.gamma.relators-sound"),
    ("scale-z4", "bicanonical."),
    ("wrong-chi", "horikawa."),
])
def test_fault_injection_detected(fault, expected_name):
    res = run_cli("verify-core", "--inject-fault", fault)
    assert res.returncode == 1
    assert "FAILED" in res.stderr
    assert expected_name in res.stderr
    if fault == "relator-sign":
        assert "e2'" in res.stderr  # the tampered relator is named

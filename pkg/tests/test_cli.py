"""Golden tests for the command-line interface."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from codecalc.cli import main
from codecalc.core import canonical_json


def _run(capsys, *argv, env_format=None, monkeypatch=None):
    if env_format is not None:
        monkeypatch.setenv("CODECALC_FORMAT", env_format)
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


GOLDEN_TEXT = [
    (("straighten", "--algebra", "b", "1,3,1,6,2"), "+1 * B[3,3,3,2,2]\n"),
    (("straighten", "--algebra", "b", "2,3"), "0\n"),
    (("straighten", "--algebra", "q", "--method", "perm", "2,3"), "-1 * Q[3,2]\n"),
    (("straighten", "--algebra", "q", "--method", "all", "2,3"), "-1 * Q[3,2]\n"),
    (("straighten", "--algebra", "b", "--method", "all", "1,3,1,6,2"), "+1 * B[3,3,3,2,2]\n"),
    (("act", "--algebra", "q", "-n", "2", "--index", "3"), "-1 * Q[3,2]\n"),
    (("act", "--algebra", "b", "-n", "1", "--index", "3,1"), "-1 * B[2,2,1]\n"),
    (("act", "--algebra", "b", "-n", "-3", "--index", "2"), "0\n"),
    (("code", "--shifted", "--index", "4,2,1"), "UURU\n"),
    (("code", "--index", "4,2,2,1"), "RURUURRU\n"),
    (("code", "--decode", "URRU"), "2,0\n"),
    (("code", "--shifted", "--decode", "UURU"), "4,2,1\n"),
    (
        ("series", "--algebra", "q", "--index", "2", "--n-max", "3"),
        "-t^0 * Q[2,0]\n-t^1 * Q[2,1]\n+t^3 * Q[3,2]\n",
    ),
    (
        ("series", "--algebra", "b", "--index", "1", "--i-max", "3"),
        "-t^-1 * B[0,0]\n+t^1 * B[1,1]\n+t^2 * B[2,1]\n",
    ),
]


@pytest.mark.parametrize("argv,expected", GOLDEN_TEXT)
def test_golden_text(capsys, argv, expected):
    code, out, err = _run(capsys, *argv)
    assert code == 0 and err == ""
    assert out == expected


def test_json_output_and_round_trip(capsys):
    code, out, _ = _run(capsys, "straighten", "--algebra", "b", "--format", "json", "1,3,1,6,2")
    assert code == 0
    assert out == '{"index":[3,3,3,2,2],"sign":1}\n'
    assert canonical_json(json.loads(out)) + "\n" == out

    code, out, _ = _run(capsys, "straighten", "--algebra", "b", "--format", "json", "2,3")
    assert out == '{"zero":true}\n'

    code, out, _ = _run(
        capsys, "series", "--algebra", "q", "--index", "2", "--n-max", "3", "--format", "json"
    )
    parsed = json.loads(out)
    assert [t["index"] for t in parsed["terms"]] == [[2, 0], [2, 1], [3, 2]]
    assert canonical_json(parsed) + "\n" == out


def test_env_var_selects_format(capsys, monkeypatch):
    code, out, _ = _run(
        capsys, "code", "--index", "2,0", env_format="json", monkeypatch=monkeypatch
    )
    assert code == 0 and out == '{"letters":"URRU"}\n'
    # explicit flag wins over the environment
    code, out, _ = _run(
        capsys,
        "code",
        "--index",
        "2,0",
        "--format",
        "text",
        env_format="json",
        monkeypatch=monkeypatch,
    )
    assert code == 0 and out == "URRU\n"


def test_bad_env_var_is_a_usage_error(capsys, monkeypatch):
    code, _, err = _run(
        capsys, "code", "--index", "1", env_format="bogus", monkeypatch=monkeypatch
    )
    assert code == 1 and "CODECALC_FORMAT" in err


def test_usage_errors_exit_1(capsys):
    assert _run(capsys, "straighten", "--algebra", "x", "1")[0] == 1
    assert _run(capsys, "straighten", "1,2")[0] == 1  # missing --algebra
    assert _run(capsys, "straighten", "--algebra", "b", "--method", "perm", "1,2")[0] == 1
    assert _run(capsys, "straighten", "--algebra", "q", "--method", "oracle", "1,2")[0] == 1
    assert _run(capsys, "series", "--algebra", "b", "--index", "1")[0] == 1  # no window
    assert (
        _run(capsys, "series", "--algebra", "b", "--index", "1", "--i-max", "2", "--n-max", "3")[0]
        == 1
    )


def test_domain_errors_exit_1(capsys):
    assert _run(capsys, "act", "--algebra", "q", "-n", "-1", "--index", "3")[0] == 1
    assert _run(capsys, "act", "--algebra", "b", "-n", "1", "--index", "1,2")[0] == 1
    assert _run(capsys, "code", "--decode", "RL")[0] == 1
    assert _run(capsys, "straighten", "--algebra", "b", "1,x")[0] == 1


def test_method_all_skips_shifted_on_zero_rows(capsys):
    code, out, _ = _run(capsys, "straighten", "--algebra", "q", "--method", "all", "0,2")
    assert code == 0 and out == "-1 * Q[2,0]\n"


def test_act_on_empty_index(capsys):
    code, out, _ = _run(capsys, "act", "--algebra", "b", "-n", "3")
    assert code == 0 and out == "+1 * B[3]\n"
    code, out, _ = _run(capsys, "act", "--algebra", "q", "-n", "0")
    assert code == 0 and out == "+1 * Q[0]\n"


def test_verify_corpus_subcommand(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "corpus")
    assert code == 0
    assert out.startswith("suite=corpus cases=")
    assert "failures=0" in out


def test_verify_small_sweep_json(capsys):
    code, out, _ = _run(
        capsys,
        "verify",
        "--suite",
        "codes",
        "--max-part",
        "2",
        "--max-len",
        "2",
        "--format",
        "json",
    )
    assert code == 0
    report = json.loads(out.splitlines()[0])
    assert report["suite"] == "codes" and report["failures"] == 0


def test_corpus_file_replay(tmp_path, capsys):
    lines = [
        canonical_json(
            {
                "op": "straighten_B",
                "args": {"index": [1, 3]},
                "expected": {"sign": -1, "index": [2, 2]},
            }
        ),
        canonical_json(
            {
                "op": "encode_shifted",
                "args": {"index": [2, 3, 1]},
                "expected": {"letters": "URULLU"},
            }
        ),
    ]
    path = tmp_path / "mini.jsonl"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    code, out, _ = _run(capsys, "verify", "--suite", "corpus", "--file", str(path))
    assert code == 0 and "cases=2 failures=0" in out


def test_corpus_failure_reporting(tmp_path, capsys):
    entry = canonical_json(
        {"op": "straighten_B", "args": {"index": [1, 3]}, "expected": {"zero": True}}
    )
    path = tmp_path / "bad.jsonl"
    path.write_text(entry + "\n", encoding="utf-8")
    out_path = tmp_path / "failures.jsonl"
    code, out, _ = _run(
        capsys, "verify", "--suite", "corpus", "--file", str(path), "--output", str(out_path)
    )
    assert code == 1 and "failures=1" in out
    failure = json.loads(out_path.read_text().splitlines()[0])
    assert failure["suite"] == "corpus" and failure["expected"] == {"zero": True}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "codecalc", "straighten", "--algebra", "b", "1,3,1,6,2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "+1 * B[3,3,3,2,2]\n"

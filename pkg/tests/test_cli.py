"""End-to-end tests for the command-line interface."""

from __future__ import annotations

import json

import pytest

from palstream.cli import main


def _run(capsys, *argv) -> tuple[int, str]:
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse errors
        code = int(exc.code or 0)
    out = capsys.readouterr().out
    return (code or 0), out


def test_run_final_summary(tmp_path, capsys):
    """run --emit final prints one summary JSON object with the answer."""
    path = tmp_path / "t.txt"
    path.write_text("abacabad")
    code, out = _run(
        capsys, "run", "--mode", "additive", "--error", "1",
        "--engine", "compressed", "--input", str(path), "--emit", "final",
    )
    assert code == 0
    report = json.loads(out)
    assert report["answer"] == 7
    assert report["n"] == 8


def test_run_per_char_jsonl(tmp_path, capsys):
    """Per-char mode emits one JSONL line per input character."""
    path = tmp_path / "t.txt"
    path.write_text("aba")
    code, out = _run(
        capsys, "run", "--mode", "multiplicative", "--eps", "0.25",
        "--engine", "basic", "--input", str(path), "--emit", "per-char",
    )
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert [line["h"] for line in lines] == [1, 2, 3]
    answers = [line["answer"] for line in lines]
    assert answers == sorted(answers)
    assert answers[-1] == 3


def test_run_is_deterministic(tmp_path, capsys):
    """The same flags and seed produce byte-identical output."""
    path = tmp_path / "t.txt"
    path.write_text("abbacddc")
    argv = (
        "run", "--mode", "additive", "--error", "2", "--engine", "both",
        "--input", str(path), "--seed", "77", "--telemetry",
    )
    code1, out1 = _run(capsys, *argv)
    code2, out2 = _run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_run_both_engines_per_char_is_usage_error(tmp_path, capsys):
    """Per-char emission is a single-stream format: --engine both is refused."""
    path = tmp_path / "t.txt"
    path.write_text("ab")
    code, _ = _run(
        capsys, "run", "--mode", "additive", "--error", "1",
        "--engine", "both", "--input", str(path), "--emit", "per-char",
    )
    assert code == 2


def test_gen_emits_the_described_word(capsys):
    """gen reproduces generator output from a JSON spec."""
    code, out = _run(capsys, "gen", "--spec", '{"kind": "nu", "length": 10}')
    assert code == 0
    assert out.strip() == "0100110001"


def test_verify_clean_run_exits_zero(capsys):
    """verify on stock engines reports zero violations and exit code 0."""
    code, out = _run(
        capsys, "verify", "--trials", "12", "--max-len", "200",
        "--mode", "additive", "--error", "8", "--engines", "both", "--seed", "1",
    )
    assert code == 0
    report = json.loads(out)
    assert report["violations"] == 0


def test_verify_multiplicative_nu(capsys):
    """verify handles the multiplicative contract on adversarial inputs."""
    code, out = _run(
        capsys, "verify", "--trials", "6", "--max-len", "300",
        "--mode", "multiplicative", "--eps", "0.5", "--kind", "nu",
    )
    assert code == 0
    assert json.loads(out)["violations"] == 0


def test_verify_guard_rejects_oversized_oracle(capsys):
    """Per-prefix verification beyond the oracle guard is a usage error."""
    code, _ = _run(
        capsys, "verify", "--trials", "1", "--max-len", str((1 << 13) + 1),
        "--mode", "additive", "--error", "1",
    )
    assert code == 2

"""Command-line behavior: outputs, pipes, and exit codes."""

import io
import shutil
import subprocess

import pytest

from tamilstem.cli import (
    EX_DATA,
    EX_NOINPUT,
    EX_OK,
    EX_RULE_CONFLICT,
    EX_USAGE,
    main,
)

GOLD_TEXT = "பெண்கள்\tபெண்\nமரங்கள்\tமரம்\nபடித்தேன்\tபடி\n"


def run_cli(argv, stdin_text=""):
    stdin = io.StringIO(stdin_text)
    stdout = io.StringIO()
    stderr = io.StringIO()
    code = main(argv, stdin=stdin, stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_stem_basic():
    code, out, err = run_cli(["stem", "--algo", "light"], "பெண்கள்\n")
    assert code == EX_OK
    assert out == "பெண்கள்\tபெண்\n"
    assert err == ""


def test_stem_empty_stdin():
    code, out, _ = run_cli(["stem", "--algo", "light"], "")
    assert code == EX_OK
    assert out == ""


def test_stem_preserves_line_count_and_order():
    code, out, _ = run_cli(["stem"], "மரங்கள்\n\nபடி\nhello\n")
    assert code == EX_OK
    assert out.split("\n")[:-1] == [
        "மரங்கள்\tமரம்",
        "",
        "படி\tபடி",
        "hello\thello",
    ]


def test_stem_trace_lines_are_hash_prefixed():
    code, out, _ = run_cli(["stem", "--trace"], "மரங்கள்உக்கு\n")
    assert code == EX_OK
    lines = out.strip().split("\n")
    assert lines[0] == "மரங்கள்உக்கு\tமரம்"
    assert [l for l in lines[1:]] == [
        "# Case\tஉக்கு\t\tமரங்கள்",
        "# Plural\tங்கள்\tம்\tமரம்",
    ]


def test_stem_strip_algo():
    code, out, _ = run_cli(["stem", "--algo", "strip"], "படித்தேன்\n")
    assert code == EX_OK
    assert out == "படித்தேன்\tபடி\n"


def test_eval_from_stdin():
    code, out, _ = run_cli(["eval", "--algo", "light"], GOLD_TEXT)
    assert code == EX_OK
    assert out == "n_unique\t3\nn_correct\t3\naccuracy\t100.0\n"


def test_eval_from_file(tmp_path):
    gold = tmp_path / "gold.tsv"
    gold.write_text(GOLD_TEXT + "படிsquash\tபடி\n", encoding="utf-8")
    code, out, _ = run_cli(["eval", "--gold", str(gold)])
    assert code == EX_OK
    assert "n_unique\t4" in out
    assert "n_correct\t3" in out
    assert "accuracy\t75.0" in out


def test_generate_then_eval_pipe():
    code, generated, _ = run_cli(
        ["generate", "--paradigm", "verb"], "படி\n"
    )
    assert code == EX_OK
    assert "படித்தேன்\tபடி" in generated
    code, out, _ = run_cli(["eval", "--algo", "light"], generated)
    assert code == EX_OK
    assert "accuracy\t100.0" in out


def test_generate_noun_paradigm():
    code, out, _ = run_cli(["generate", "--paradigm", "noun"], "மரம்\n")
    assert code == EX_OK
    assert "மரங்கள்\tமரம்" in out
    assert len(out.strip().split("\n")) == 18


def test_generate_rejects_short_root():
    code, _, err = run_cli(["generate", "--paradigm", "noun"], "மரம்\nப\n")
    assert code == EX_DATA
    assert "line 2" in err


def test_compare_csv_output():
    code, out, _ = run_cli(
        ["compare", "--chunks", "2,3", "--format", "csv"], GOLD_TEXT
    )
    assert code == EX_OK
    lines = out.strip().split("\n")
    assert lines[0].startswith("n_words,")
    assert lines[1].split(",")[0] == "2"
    assert lines[2].split(",")[0] == "3"
    assert lines[3].startswith("avg,,,")


def test_compare_default_single_chunk():
    code, out, _ = run_cli(["compare"], GOLD_TEXT)
    assert code == EX_OK
    assert len(out.strip().split("\n")) == 3  # header + row + avg


def test_compare_chunk_exceeding_gold_is_data_error():
    code, _, err = run_cli(["compare", "--chunks", "5"], GOLD_TEXT)
    assert code == EX_DATA
    assert "5" in err


def test_compare_malformed_chunks_is_usage_error():
    code, _, err = run_cli(["compare", "--chunks", "2;3"], GOLD_TEXT)
    assert code == EX_USAGE
    assert "chunks" in err


def test_rules_validate_builtin_ok():
    code, out, _ = run_cli(["rules-validate"])
    assert code == EX_OK
    assert out.startswith("ok: ")


def test_rules_validate_conflict(tmp_path):
    bad = tmp_path / "rules.tsv"
    bad.write_text(
        "Plural\tகள்\t\t2\t\nPlural\tகள்\t\t2\t\n", encoding="utf-8"
    )
    code, out, _ = run_cli(["rules-validate", str(bad)])
    assert code == EX_RULE_CONFLICT
    assert "lines 1 and 2" in out


def test_rules_validate_malformed(tmp_path):
    bad = tmp_path / "rules.tsv"
    bad.write_text("nonsense\n", encoding="utf-8")
    code, out, _ = run_cli(["rules-validate", str(bad)])
    assert code == EX_DATA
    assert "line 1" in out


def test_custom_rules_flag(tmp_path):
    rules = tmp_path / "rules.tsv"
    rules.write_text("Case\ts\t\t1\t\n", encoding="utf-8")
    code, out, _ = run_cli(["stem", "--rules", str(rules)], "cats\n")
    assert code == EX_OK
    assert out == "cats\tcat\n"


def test_unreadable_file_exits_66():
    code, _, err = run_cli(["eval", "--gold", "/no/such/file.tsv"])
    assert code == EX_NOINPUT
    assert "/no/such/file.tsv" in err


def test_malformed_gold_exits_65():
    code, _, err = run_cli(["eval"], "justoneword\n")
    assert code == EX_DATA
    assert "line 1" in err


def test_empty_gold_exits_65():
    code, _, err = run_cli(["eval"], "")
    assert code == EX_DATA
    assert "empty gold" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["stem", "--algo", "bogus"],
        ["unknown-command"],
        [],
        ["compare", "--format", "yaml"],
        ["generate"],  # --paradigm is required
    ],
)
def test_bad_flags_exit_64(argv):
    code, _, err = run_cli(argv, "")
    assert code == EX_USAGE
    assert "usage" in err.lower()


def test_output_is_deterministic():
    first = run_cli(["compare", "--chunks", "2,3", "--format", "json"], GOLD_TEXT)
    second = run_cli(["compare", "--chunks", "2,3", "--format", "json"], GOLD_TEXT)
    assert first == second


@pytest.mark.skipif(
    shutil.which("tamilstem") is None, reason="console script not on PATH"
)
def test_console_script_runs():
    proc = subprocess.run(
        ["tamilstem", "stem"],
        input="பெண்கள்\n",
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout == "பெண்கள்\tபெண்\n"

"""Command-line interface: batch stemming, evaluation, and generation.

Subcommands:

- ``stem``            read words from stdin, write ``word<TAB>stem``
- ``eval``            score one engine against a gold file
- ``compare``         score both engines over cumulative chunks
- ``rules-validate``  lint a rule file, reporting every defect
- ``generate``        expand roots from stdin into gold-format pairs

Exit codes: 0 success; 2 rule conflicts found by ``rules-validate``;
64 bad command line; 65 malformed input data (with line numbers);
66 unreadable input file.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .evaluation import (
    GoldError,
    accuracy,
    compare,
    evaluate,
    format_accuracy,
    load_gold,
    render,
    REPORT_FORMATS,
)
from .paradigm import PARADIGMS, generate_forms
from .rules import RuleError, RuleSet, builtin_rules, parse_rules, validate_rules
from .stemmers import ENGINES

EX_OK = 0
EX_RULE_CONFLICT = 2
EX_USAGE = 64
EX_DATA = 65
EX_NOINPUT = 66

_CONFLICT_MARKER = "duplicate rule"


class _UsageError(Exception):
    """Raised instead of argparse's default sys.exit on bad flags."""


class _CliError(Exception):
    """A reportable failure with a specific exit code."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _chunk_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"chunks must be comma-separated integers, got {text!r}"
        ) from None


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="tamilstem",
        description="Tamil stemmers with declarative suffix rules.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_rules_flag(p):
        p.add_argument(
            "--rules",
            metavar="PATH",
            help="rule file to use instead of the built-in rules",
        )

    p_stem = sub.add_parser("stem", help="stem words read from stdin")
    p_stem.add_argument(
        "--algo", choices=sorted(ENGINES), default="light",
        help="stemming engine (default: light)",
    )
    p_stem.add_argument(
        "--trace", action="store_true",
        help="emit '#'-prefixed rule applications after each word",
    )
    add_rules_flag(p_stem)

    p_eval = sub.add_parser("eval", help="score an engine against gold data")
    p_eval.add_argument(
        "--algo", choices=sorted(ENGINES), default="light",
        help="stemming engine (default: light)",
    )
    p_eval.add_argument(
        "--gold", metavar="PATH",
        help="gold file (default: read gold data from stdin)",
    )
    add_rules_flag(p_eval)

    p_cmp = sub.add_parser(
        "compare", help="score both engines over cumulative chunks"
    )
    p_cmp.add_argument(
        "--gold", metavar="PATH",
        help="gold file (default: read gold data from stdin)",
    )
    p_cmp.add_argument(
        "--chunks", type=_chunk_list, metavar="N,N,...",
        help="cumulative chunk sizes (default: one chunk of everything)",
    )
    p_cmp.add_argument(
        "--format", choices=REPORT_FORMATS, default="table",
        help="report format (default: table)",
    )
    add_rules_flag(p_cmp)

    p_val = sub.add_parser("rules-validate", help="lint a rule file")
    p_val.add_argument(
        "path", nargs="?", metavar="PATH",
        help="rule file to check (default: the built-in rules)",
    )

    p_gen = sub.add_parser(
        "generate", help="expand roots from stdin into gold-format pairs"
    )
    p_gen.add_argument(
        "--paradigm", choices=PARADIGMS, required=True,
        help="inflection table to apply to every root",
    )
    return parser


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise _CliError(
            EX_NOINPUT, f"cannot read {path}: {exc.strerror or exc}"
        ) from None


def _load_rules(path: "str | None") -> RuleSet:
    if path is None:
        return builtin_rules()
    text = _read_file(path)
    try:
        return parse_rules(text)
    except RuleError as exc:
        raise _CliError(EX_DATA, f"{path}: {exc}") from None


def _load_gold_entries(path, stdin):
    text = _read_file(path) if path is not None else stdin.read()
    source = path if path is not None else "<stdin>"
    try:
        entries = load_gold(text)
    except GoldError as exc:
        raise _CliError(EX_DATA, f"{source}: {exc}") from None
    if not entries:
        raise _CliError(EX_DATA, f"{source}: empty gold standard")
    return entries


def _cmd_stem(args, stdin, stdout) -> int:
    rules = _load_rules(args.rules)
    engine = ENGINES[args.algo]
    for raw in stdin:
        token = raw.strip()
        if not token:
            print("", file=stdout)
            continue
        result = engine(token, rules)
        print(f"{token}\t{result.stem.text}", file=stdout)
        if args.trace:
            for step in result.trace:
                print(
                    f"# {step.rule.klass}\t{step.rule.pattern.text}\t"
                    f"{step.rule.replacement.text}\t{step.after.text}",
                    file=stdout,
                )
    return EX_OK


def _cmd_eval(args, stdin, stdout) -> int:
    rules = _load_rules(args.rules)
    engine = ENGINES[args.algo]
    entries = _load_gold_entries(args.gold, stdin)
    n_unique, n_correct = evaluate(lambda w: engine(w, rules), entries)
    print(f"n_unique\t{n_unique}", file=stdout)
    print(f"n_correct\t{n_correct}", file=stdout)
    print(f"accuracy\t{format_accuracy(accuracy(n_correct, n_unique))}",
          file=stdout)
    return EX_OK


def _cmd_compare(args, stdin, stdout) -> int:
    rules = _load_rules(args.rules)
    entries = _load_gold_entries(args.gold, stdin)
    chunks = args.chunks if args.chunks is not None else [len(entries)]
    try:
        report = compare(entries, chunks, rules)
    except ValueError as exc:
        raise _CliError(EX_DATA, str(exc)) from None
    stdout.write(render(report, args.format))
    return EX_OK


def _cmd_rules_validate(args, stdin, stdout) -> int:
    if args.path is not None:
        text = _read_file(args.path)
    else:
        from importlib import resources

        text = (
            resources.files("tamilstem.data")
            .joinpath("builtin_rules.tsv")
            .read_text(encoding="utf-8")
        )
    problems = validate_rules(text)
    if not problems:
        count = len(parse_rules(text))
        print(f"ok: {count} rules", file=stdout)
        return EX_OK
    for problem in problems:
        print(problem, file=stdout)
    if any(_CONFLICT_MARKER in p for p in problems):
        return EX_RULE_CONFLICT
    return EX_DATA


def _cmd_generate(args, stdin, stdout) -> int:
    for lineno, raw in enumerate(stdin, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            pairs = generate_forms(line, args.paradigm)
        except ValueError as exc:
            raise _CliError(EX_DATA, f"line {lineno}: {exc}") from None
        for surface, stem in pairs:
            print(f"{surface.text}\t{stem.text}", file=stdout)
    return EX_OK


_COMMANDS = {
    "stem": _cmd_stem,
    "eval": _cmd_eval,
    "compare": _cmd_compare,
    "rules-validate": _cmd_rules_validate,
    "generate": _cmd_generate,
}


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    """Run the CLI; returns the process exit code."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(str(exc), file=stderr)
        return EX_USAGE
    try:
        return _COMMANDS[args.command](args, stdin, stdout)
    except _CliError as exc:
        print(f"tamilstem: error: {exc}", file=stderr)
        return exc.code


def entry() -> None:
    """Console-script entry point."""
    sys.exit(main())

"""Gold-standard evaluation: dataset statistics, accuracy, and reports.

Accuracy is the fraction of distinct surface forms whose computed stem
matches the expected stem exactly, expressed as a percentage.  Values
are kept as exact rationals (`fractions.Fraction`) internally; display
truncates toward zero to one decimal place, so 85.59… renders as
``85.5``.

A comparison report runs both engines over cumulative prefixes of a
gold sequence ("the first 200 entries, the first 400, …") and appends
the arithmetic mean of the per-chunk accuracies.
"""

from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from numbers import Rational

from .graphemes import GraphemeWord, word
from .paradigm import build_corpus
from .rules import RuleSet, builtin_rules
from .stemmers import light_stem, strip_stem

CSV_HEADER = (
    "n_words",
    "n_unique",
    "correct_strip",
    "acc_strip",
    "correct_light",
    "acc_light",
)


class GoldError(ValueError):
    """A malformed gold file, pointing at the offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class GoldConflictWarning(UserWarning):
    """Duplicate surfaces with different expected stems."""


@dataclass(frozen=True)
class GoldEntry:
    """One labelled example: an inflected surface and its expected stem."""

    surface: GraphemeWord
    expected_stem: GraphemeWord


@dataclass(frozen=True)
class DatasetStats:
    """Word counts and length range of a word list."""

    total_words: int
    unique_words: int
    min_len: int
    max_len: int


@dataclass(frozen=True)
class EvalRow:
    """Both engines' scores over one cumulative chunk."""

    n_words: int
    n_unique: int
    n_correct_strip: int
    n_correct_light: int
    acc_strip: Fraction
    acc_light: Fraction


@dataclass(frozen=True)
class EvalReport:
    """Chunk rows plus arithmetic-mean averages (None when empty)."""

    rows: tuple[EvalRow, ...]
    avg_strip: Fraction | None
    avg_light: Fraction | None


def load_gold(text: str) -> list[GoldEntry]:
    """Parse ``surface<TAB>stem`` lines; ``#`` comments and blanks skip."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise GoldError(
                lineno,
                f"expected 2 tab-separated fields, got {len(fields)}",
            )
        surface, stem = fields[0].strip(), fields[1].strip()
        if not surface or not stem:
            raise GoldError(lineno, "empty field")
        entries.append(GoldEntry(word(surface), word(stem)))
    return entries


def dataset_stats(words: "list[GraphemeWord | str]") -> DatasetStats:
    """Total and distinct counts plus min/max word length in letters."""
    if not words:
        return DatasetStats(0, 0, 0, 0)
    segmented = [w if isinstance(w, GraphemeWord) else word(w) for w in words]
    lengths = [len(w) for w in segmented]
    return DatasetStats(
        total_words=len(segmented),
        unique_words=len({w.text for w in segmented}),
        min_len=min(lengths),
        max_len=max(lengths),
    )


def accuracy(n_correct: int, n_unique: int) -> Fraction:
    """Correctly stemmed share of unique words, as an exact percentage."""
    if n_unique == 0:
        raise ValueError("accuracy undefined: no unique words")
    if not 0 <= n_correct <= n_unique:
        raise ValueError(
            f"n_correct must be within [0, {n_unique}], got {n_correct}"
        )
    return Fraction(100 * n_correct, n_unique)


def format_accuracy(value: Rational) -> str:
    """Render a percentage truncated toward zero to one decimal place."""
    tenths = int(Fraction(value) * 10)
    return f"{tenths // 10}.{tenths % 10}"


def _dedupe(gold: "list[GoldEntry]") -> dict[str, str]:
    expected: dict[str, str] = {}
    conflicts = []
    for entry in gold:
        surface = entry.surface.text
        stem = entry.expected_stem.text
        if surface not in expected:
            expected[surface] = stem
        elif expected[surface] != stem:
            conflicts.append(surface)
    if conflicts:
        warnings.warn(
            "conflicting expected stems for duplicated surfaces "
            f"(first occurrence wins): {', '.join(sorted(set(conflicts)))}",
            GoldConflictWarning,
            stacklevel=3,
        )
    return expected


def evaluate(stemmer, gold: "list[GoldEntry]") -> tuple[int, int]:
    """Score one engine: (n_unique, n_correct) over deduplicated gold.

    Duplicate surfaces keep their first expected stem; conflicting
    duplicates additionally raise a `GoldConflictWarning`.
    """
    if not gold:
        raise ValueError("empty gold standard: nothing to evaluate")
    expected = _dedupe(gold)
    n_correct = sum(
        1
        for surface, stem in expected.items()
        if stemmer(word(surface)).stem.text == stem
    )
    return len(expected), n_correct


def compare(
    gold: "list[GoldEntry]",
    chunk_sizes: "list[int]",
    rules: RuleSet | None = None,
) -> EvalReport:
    """Score both engines over cumulative prefixes of *gold*.

    ``chunk_sizes`` must be ascending; each must fit within the gold
    sequence.  Row k covers the first ``chunk_sizes[k]`` entries, so
    unique counts are non-decreasing across rows.
    """
    if rules is None:
        rules = builtin_rules()
    sizes = list(chunk_sizes)
    previous = 0
    for size in sizes:
        if size <= previous:
            raise ValueError(f"chunk sizes must be ascending, got {sizes}")
        if size > len(gold):
            raise ValueError(
                f"chunk size {size} exceeds gold length {len(gold)}"
            )
        previous = size

    expected = _dedupe(gold)
    boundaries = set(sizes)
    seen: set[str] = set()
    correct_strip = correct_light = 0
    rows = []
    for position, entry in enumerate(gold, start=1):
        surface = entry.surface.text
        if surface not in seen:
            seen.add(surface)
            stem = expected[surface]
            w = word(surface)
            if strip_stem(w, rules).stem.text == stem:
                correct_strip += 1
            if light_stem(w, rules).stem.text == stem:
                correct_light += 1
        if position in boundaries:
            n_unique = len(seen)
            rows.append(
                EvalRow(
                    n_words=position,
                    n_unique=n_unique,
                    n_correct_strip=correct_strip,
                    n_correct_light=correct_light,
                    acc_strip=accuracy(correct_strip, n_unique),
                    acc_light=accuracy(correct_light, n_unique),
                )
            )
    if not rows:
        return EvalReport((), None, None)
    avg_strip = sum(r.acc_strip for r in rows) / len(rows)
    avg_light = sum(r.acc_light for r in rows) / len(rows)
    return EvalReport(tuple(rows), Fraction(avg_strip), Fraction(avg_light))


def _render_table(report: EvalReport) -> str:
    widths = (8, 8, 13, 9, 13, 9)
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(CSV_HEADER, widths)).rstrip()
    ]
    for row in report.rows:
        cells = (
            str(row.n_words),
            str(row.n_unique),
            str(row.n_correct_strip),
            format_accuracy(row.acc_strip),
            str(row.n_correct_light),
            format_accuracy(row.acc_light),
        )
        lines.append(
            "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
        )
    if report.rows:
        cells = (
            "avg",
            "",
            "",
            format_accuracy(report.avg_strip),
            "",
            format_accuracy(report.avg_light),
        )
        lines.append(
            "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
        )
    return "\n".join(lines) + "\n"


def _render_csv(report: EvalReport) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in report.rows:
        writer.writerow(
            (
                row.n_words,
                row.n_unique,
                row.n_correct_strip,
                format_accuracy(row.acc_strip),
                row.n_correct_light,
                format_accuracy(row.acc_light),
            )
        )
    if report.rows:
        writer.writerow(
            (
                "avg",
                "",
                "",
                format_accuracy(report.avg_strip),
                "",
                format_accuracy(report.avg_light),
            )
        )
    return out.getvalue()


def _fraction_fields(value: Fraction | None) -> "str | None":
    return None if value is None else str(value)


def _render_json(report: EvalReport) -> str:
    payload = {
        "rows": [
            {
                "n_words": row.n_words,
                "n_unique": row.n_unique,
                "correct_strip": row.n_correct_strip,
                "acc_strip": str(row.acc_strip),
                "correct_light": row.n_correct_light,
                "acc_light": str(row.acc_light),
            }
            for row in report.rows
        ],
        "avg_strip": _fraction_fields(report.avg_strip),
        "avg_light": _fraction_fields(report.avg_light),
    }
    return json.dumps(payload, indent=2) + "\n"


_RENDERERS = {
    "table": _render_table,
    "csv": _render_csv,
    "json": _render_json,
}

REPORT_FORMATS = tuple(_RENDERERS)


def render(report: EvalReport, format: str = "table") -> str:
    """Serialize a report deterministically in the chosen format.

    Percentages are truncated for display in ``table`` and ``csv``; the
    ``json`` format carries exact fractions.  Counts appear verbatim in
    every format, so a CSV report can be parsed back without loss.
    """
    try:
        renderer = _RENDERERS[format]
    except KeyError:
        raise ValueError(f"unknown report format: {format!r}") from None
    return renderer(report)


def parse_report_csv(text: str) -> EvalReport:
    """Rebuild a report from its CSV rendering.

    Counts are read back verbatim; exact accuracies and averages are
    recomputed from the counts, which restores full precision.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = tuple(next(reader))
    except StopIteration:
        raise ValueError("empty report: missing header") from None
    if header != CSV_HEADER:
        raise ValueError(f"unexpected header: {','.join(header)}")
    rows = []
    for record in reader:
        if not record:
            continue
        if record[0] == "avg":
            break
        n_words, n_unique = int(record[0]), int(record[1])
        correct_strip, correct_light = int(record[2]), int(record[4])
        rows.append(
            EvalRow(
                n_words=n_words,
                n_unique=n_unique,
                n_correct_strip=correct_strip,
                n_correct_light=correct_light,
                acc_strip=accuracy(correct_strip, n_unique),
                acc_light=accuracy(correct_light, n_unique),
            )
        )
    if not rows:
        return EvalReport((), None, None)
    avg_strip = sum(r.acc_strip for r in rows) / len(rows)
    avg_light = sum(r.acc_light for r in rows) / len(rows)
    return EvalReport(tuple(rows), Fraction(avg_strip), Fraction(avg_light))


@lru_cache(maxsize=1)
def bundled_gold() -> tuple[GoldEntry, ...]:
    """The shipped gold set: generated paradigms plus hand-picked forms."""
    entries = [
        GoldEntry(surface, stem) for surface, stem in build_corpus()
    ]
    entries.extend(extra_gold())
    return tuple(entries)


@lru_cache(maxsize=1)
def extra_gold() -> tuple[GoldEntry, ...]:
    """The hand-picked gold entries shipped alongside the paradigms."""
    text = (
        resources.files("tamilstem.data")
        .joinpath("extra_gold.tsv")
        .read_text(encoding="utf-8")
    )
    return tuple(load_gold(text))

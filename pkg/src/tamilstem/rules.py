"""Suffix rule model: parsing, validation, lookup, and the shipped inventory.

A rule says: if a word ends with *pattern*, replace that ending with
*replacement* (often empty), provided at least *min_stem* letters remain.
Rules are grouped into classes (plural markers, case endings, tense
endings, ...) and each rule names which classes are allowed to match next,
which is what lets the light stemmer walk suffix layers from the outside
in.

Rule files are tab-separated UTF-8 lines::

    class <TAB> pattern <TAB> replacement <TAB> min_stem <TAB> next_classes

with ``#`` comments, blank lines ignored, and next_classes a
comma-separated list (empty means terminal).  Replacements must be
strictly shorter than their patterns so every application shortens the
word and stemming always terminates.
"""

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .graphemes import GraphemeWord, ends_with, normalize, segment


class SuffixClass(enum.Enum):
    VOCATIVE = "Vocative"
    CASE = "Case"
    PLURAL = "Plural"
    ADJECTIVAL_PARTICIPLE = "AdjectivalParticiple"
    TENSE = "Tense"
    PERSON_NUMBER_GENDER = "PersonNumberGender"
    NEGATIVE_COMPOUND = "NegativeCompound"

    def __str__(self) -> str:
        return self.value


_CLASS_BY_NAME = {c.value: c for c in SuffixClass}

ALL_CLASSES = frozenset(SuffixClass)


class RuleError(ValueError):
    """A rule file failed validation; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class RuleConflictError(RuleError):
    """Two rules share the same (class, pattern)."""

    def __init__(self, message: str, first_line: int, second_line: int):
        super().__init__(message, line=second_line)
        self.first_line = first_line
        self.second_line = second_line


@dataclass(frozen=True)
class SuffixRule:
    klass: SuffixClass
    pattern: GraphemeWord
    replacement: GraphemeWord
    min_stem: int
    next_classes: frozenset[SuffixClass]
    order: int

    def stem_length_after(self, word_len: int) -> int:
        """Letters left if this rule is applied to a word of *word_len*."""
        return word_len - len(self.pattern) + len(self.replacement)


@dataclass(frozen=True)
class RuleSet:
    """Immutable, validated rule collection with per-class lookup."""

    rules: tuple[SuffixRule, ...]
    by_class: dict[SuffixClass, tuple[SuffixRule, ...]] = field(
        compare=False, repr=False, default_factory=dict
    )
    # Buckets rules by the final letter of their pattern so candidate
    # lookup touches only rules that can possibly match.
    _by_last: dict[str, tuple[SuffixRule, ...]] = field(
        compare=False, repr=False, default_factory=dict
    )

    def __len__(self) -> int:
        return len(self.rules)

    def find(self, klass: SuffixClass, pattern_text: str) -> SuffixRule | None:
        target = normalize(pattern_text)
        for rule in self.by_class.get(klass, ()):
            if rule.pattern.text == target:
                return rule
        return None


def _build_ruleset(rules: list[SuffixRule]) -> RuleSet:
    ordered = tuple(rules)
    match_order = sorted(ordered, key=lambda r: (-len(r.pattern), r.order))
    by_class: dict[SuffixClass, tuple[SuffixRule, ...]] = {}
    for c in SuffixClass:
        group = tuple(r for r in match_order if r.klass is c)
        if group:
            by_class[c] = group
    by_last: dict[str, list[SuffixRule]] = {}
    for rule in match_order:
        by_last.setdefault(rule.pattern.graphemes[-1], []).append(rule)
    return RuleSet(
        ordered, by_class, {k: tuple(v) for k, v in by_last.items()}
    )


def _parse_line(lineno: int, line: str, order: int) -> SuffixRule:
    fields = line.split("\t")
    if len(fields) != 5:
        raise RuleError(
            f"line {lineno}: expected 5 tab-separated fields, got {len(fields)}",
            line=lineno,
        )
    class_name, pattern_text, replacement_text, min_stem_text, next_text = fields
    klass = _CLASS_BY_NAME.get(class_name.strip())
    if klass is None:
        raise RuleError(
            f"line {lineno}: unknown suffix class {class_name.strip()!r}",
            line=lineno,
        )
    pattern = segment(normalize(pattern_text))
    if len(pattern) == 0:
        raise RuleError(f"line {lineno}: empty pattern", line=lineno)
    replacement = segment(normalize(replacement_text))
    if len(replacement) >= len(pattern):
        raise RuleError(
            f"line {lineno}: replacement {replacement.text!r} is not shorter "
            f"than pattern {pattern.text!r}; rule would not terminate",
            line=lineno,
        )
    try:
        min_stem = int(min_stem_text)
    except ValueError:
        raise RuleError(
            f"line {lineno}: min_stem {min_stem_text!r} is not an integer",
            line=lineno,
        ) from None
    if min_stem < 1:
        raise RuleError(f"line {lineno}: min_stem must be >= 1", line=lineno)
    next_classes = set()
    if next_text.strip():
        for name in next_text.split(","):
            nc = _CLASS_BY_NAME.get(name.strip())
            if nc is None:
                raise RuleError(
                    f"line {lineno}: unknown next class {name.strip()!r}",
                    line=lineno,
                )
            next_classes.add(nc)
    return SuffixRule(
        klass, pattern, replacement, min_stem, frozenset(next_classes), order
    )


def parse_rules(text: str) -> RuleSet:
    """Parse and validate a rule file; raises RuleError on the first defect."""
    rules: list[SuffixRule] = []
    seen: dict[tuple[SuffixClass, str], int] = {}
    order = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        rule = _parse_line(lineno, line, order)
        key = (rule.klass, rule.pattern.text)
        if key in seen:
            raise RuleConflictError(
                f"duplicate rule for class {rule.klass} pattern "
                f"{rule.pattern.text!r}: lines {seen[key]} and {lineno}",
                first_line=seen[key],
                second_line=lineno,
            )
        seen[key] = lineno
        rules.append(rule)
        order += 1
    return _build_ruleset(rules)


def validate_rules(text: str) -> list[str]:
    """Collect every diagnostic in a rule file instead of stopping at one."""
    problems: list[str] = []
    seen: dict[tuple[SuffixClass, str], int] = {}
    order = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            rule = _parse_line(lineno, line, order)
        except RuleError as exc:
            problems.append(str(exc))
            continue
        order += 1
        key = (rule.klass, rule.pattern.text)
        if key in seen:
            problems.append(
                f"duplicate rule for class {rule.klass} pattern "
                f"{rule.pattern.text!r}: lines {seen[key]} and {lineno}"
            )
        else:
            seen[key] = lineno
    return problems


def render_rules(ruleset: RuleSet) -> str:
    """Serialize back to the rule-file format; inverse of parse_rules."""
    lines = []
    for rule in ruleset.rules:
        next_text = ",".join(
            sorted(c.value for c in rule.next_classes)
        )
        lines.append(
            "\t".join(
                (
                    rule.klass.value,
                    rule.pattern.text,
                    rule.replacement.text,
                    str(rule.min_stem),
                    next_text,
                )
            )
        )
    return "\n".join(lines) + ("\n" if lines else "")


@lru_cache(maxsize=1)
def builtin_rules() -> RuleSet:
    """The shipped rule inventory (see data/builtin_rules.tsv)."""
    text = (
        resources.files("tamilstem.data")
        .joinpath("builtin_rules.tsv")
        .read_text(encoding="utf-8")
    )
    return parse_rules(text)


def candidates(
    rules: RuleSet,
    word: GraphemeWord,
    allowed: frozenset[SuffixClass] | set[SuffixClass],
) -> list[SuffixRule]:
    """Applicable rules for *word*, longest pattern first, file order on ties.

    A rule is applicable when its class is allowed, its pattern is a
    suffix of the word, and applying it would leave at least min_stem
    letters.
    """
    if not word.graphemes:
        return []
    bucket = rules._by_last.get(word.graphemes[-1])
    if not bucket:
        return []
    out = []
    n = len(word)
    for rule in bucket:
        if (
            rule.klass in allowed
            and rule.stem_length_after(n) >= rule.min_stem
            and ends_with(word, rule.pattern)
        ):
            out.append(rule)
    return out


def apply_rule(word: GraphemeWord, rule: SuffixRule) -> GraphemeWord:
    """Strip the matched pattern and append the replacement.

    Re-segments the result so the letter-sequence invariant holds even
    for user rules whose replacement begins with a dependent sign.
    """
    kept = word.graphemes[: len(word) - len(rule.pattern)]
    return segment("".join(kept) + rule.replacement.text)

"""Two stemming engines over the same declarative rule data.

``strip_stem`` is the baseline: it repeatedly removes the single longest
matching suffix, pooling every rule class and ignoring the class
transition table.

``light_stem`` is the conservative engine: after each applied rule, only
the classes named by that rule's ``next_classes`` may match next, so
suffixes are peeled outermost-first along grammatically plausible paths
and stripping stops at a terminal class.  Substitution rules (plural
``ங்கள்``→``ம்``, participle ``டிய``→``டு``) restore the base form
instead of merely cutting.

Both engines leave unmatched words untouched, including non-Tamil input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphemes import GraphemeWord, word
from .rules import (
    ALL_CLASSES,
    RuleSet,
    SuffixClass,
    SuffixRule,
    apply_rule,
    builtin_rules,
    candidates,
)

_TENSE_LAYER = frozenset(
    {
        SuffixClass.TENSE,
        SuffixClass.NEGATIVE_COMPOUND,
        SuffixClass.PERSON_NUMBER_GENDER,
    }
)


@dataclass(frozen=True)
class StemStep:
    """One applied rule: the word before and after the application."""

    rule: SuffixRule
    before: GraphemeWord
    after: GraphemeWord


@dataclass(frozen=True)
class StemResult:
    """Final stem plus the ordered trace of rule applications."""

    word: GraphemeWord
    stem: GraphemeWord
    trace: tuple[StemStep, ...]


def _as_word(text: GraphemeWord | str) -> GraphemeWord:
    return text if isinstance(text, GraphemeWord) else word(text)


def _best(
    rules: RuleSet, w: GraphemeWord, allowed: frozenset[SuffixClass]
) -> SuffixRule | None:
    matched = candidates(rules, w, allowed)
    return matched[0] if matched else None


def _apply_once(
    rules: RuleSet, w: GraphemeWord, allowed: frozenset[SuffixClass]
) -> GraphemeWord:
    rule = _best(rules, w, allowed)
    return apply_rule(w, rule) if rule else w


def strip_stem(
    text: GraphemeWord | str, rules: RuleSet | None = None
) -> StemResult:
    """Iteratively remove the longest matching suffix of any class.

    Stops when no rule matches or stripping would drop below a rule's
    minimum stem length.  Every step strictly shortens the word, so the
    loop always terminates.
    """
    if rules is None:
        rules = builtin_rules()
    start = w = _as_word(text)
    trace = []
    while True:
        rule = _best(rules, w, ALL_CLASSES)
        if rule is None:
            break
        after = apply_rule(w, rule)
        trace.append(StemStep(rule, w, after))
        w = after
    return StemResult(start, w, tuple(trace))


def stem_batch(
    words: "list[GraphemeWord | str]",
    rules: RuleSet | None = None,
    engine=strip_stem,
) -> list[StemResult]:
    """Elementwise stemming; output order matches input order."""
    if rules is None:
        rules = builtin_rules()
    return [engine(w, rules) for w in words]


def strip_plural(
    text: GraphemeWord | str, rules: RuleSet | None = None
) -> GraphemeWord:
    """Apply the single longest plural rule, or return the word as is."""
    if rules is None:
        rules = builtin_rules()
    return _apply_once(rules, _as_word(text), frozenset({SuffixClass.PLURAL}))


def adjectival_to_verb(
    text: GraphemeWord | str, rules: RuleSet | None = None
) -> GraphemeWord:
    """Substitute an adjectival-participle ending with its verb base."""
    if rules is None:
        rules = builtin_rules()
    return _apply_once(
        rules, _as_word(text), frozenset({SuffixClass.ADJECTIVAL_PARTICIPLE})
    )


def strip_tense(
    text: GraphemeWord | str, rules: RuleSet | None = None
) -> GraphemeWord:
    """Remove one finite-verb ending (tense, negative, or bare PNG)."""
    if rules is None:
        rules = builtin_rules()
    return _apply_once(rules, _as_word(text), _TENSE_LAYER)


def light_stem(
    text: GraphemeWord | str, rules: RuleSet | None = None
) -> StemResult:
    """Strip suffixes outermost-first along the class transition table.

    The first rule may come from any class; each subsequent rule must
    belong to the previous rule's ``next_classes``.  An empty
    ``next_classes`` marks a terminal layer and ends the loop.
    """
    if rules is None:
        rules = builtin_rules()
    start = w = _as_word(text)
    trace = []
    allowed = ALL_CLASSES
    while True:
        rule = _best(rules, w, allowed)
        if rule is None:
            break
        after = apply_rule(w, rule)
        trace.append(StemStep(rule, w, after))
        w = after
        if not rule.next_classes:
            break
        allowed = rule.next_classes
    return StemResult(start, w, tuple(trace))


ENGINES = {"strip": strip_stem, "light": light_stem}

"""Both stemming engines and the single-layer helpers."""

import random
import unicodedata

from tamilstem.graphemes import word
from tamilstem.paradigm import build_corpus
from tamilstem.rules import SuffixClass, builtin_rules, parse_rules
from tamilstem.stemmers import (
    ENGINES,
    adjectival_to_verb,
    light_stem,
    stem_batch,
    strip_plural,
    strip_stem,
    strip_tense,
)

STRIP_CASES = [
    ("படித்தேன்", "படி"),
    ("மரங்கள்உக்கு", "மரம்"),        # strips உக்கு, then rewrites ங்கள் to ம்
    ("பெண்கள்", "பெண்"),
    ("மரம்", "மரம்"),
    ("படி", "படி"),
]


def test_strip_examples():
    for surface, expected in STRIP_CASES:
        assert strip_stem(surface).stem.text == expected


def test_strip_bare_root_has_empty_trace():
    result = strip_stem("படி")
    assert result.stem.text == "படி"
    assert result.trace == ()


def test_strip_trace_replays_to_stem():
    result = strip_stem("மரங்கள்உக்கு")
    assert [step.rule.pattern.text for step in result.trace] == ["உக்கு", "ங்கள்"]
    w = result.word
    for step in result.trace:
        assert step.before == w
        assert len(step.after) < len(step.before)
        w = step.after
    assert w == result.stem


def test_strip_respects_min_stem():
    # Every rule keeps at least 2 letters, so 2-letter inputs never shrink.
    for text in ("படி", "ஓடு", "தம்", "ஏறு"):
        assert strip_stem(text).stem.text == text


def test_strip_longest_match_wins():
    # க்கும் (3 letters) must beat கும் (2 letters).
    result = strip_stem("ஓடுக்கும்")
    assert result.trace[0].rule.pattern.text == "க்கும்"
    assert result.stem.text == "ஓடு"


def test_stem_batch_matches_individual_calls():
    words = [s for s, _ in STRIP_CASES]
    batch = stem_batch(words)
    assert [r.stem.text for r in batch] == [
        strip_stem(w).stem.text for w in words
    ]
    assert stem_batch([]) == []


def test_strip_plural_single_step():
    assert strip_plural("பெண்கள்").text == "பெண்"
    assert strip_plural("மரங்கள்").text == "மரம்"
    assert strip_plural("மரம்").text == "மரம்"
    # Only the plural layer: the dative stays in place.
    assert strip_plural("பெண்கள்உக்கு").text == "பெண்கள்உக்கு"


def test_adjectival_to_verb_single_step():
    assert adjectival_to_verb("ஓடிய").text == "ஓடு"
    assert adjectival_to_verb("பாடிய").text == "பாடு"
    assert adjectival_to_verb("படி").text == "படி"


def test_strip_tense_single_step():
    assert strip_tense("பாடுகின்ற").text == "பாடு"
    assert strip_tense("பாடும்").text == "பாடு"
    assert strip_tense("படிக்கமாட்டேன்").text == "படி"
    assert strip_tense("மரம்").text == "மரம்"


LIGHT_CASES = [
    ("பெண்கள்உக்கு", "பெண்"),       # Case then Plural
    ("படிக்கமாட்டேன்", "படி"),
    ("மரங்கள்ஏ", "மரம்"),            # Vocative, Case skipped, Plural
    ("படி", "படி"),
    ("மரம்", "மரம்"),
]


def test_light_examples():
    for surface, expected in LIGHT_CASES:
        assert light_stem(surface).stem.text == expected


def test_light_trace_respects_transitions():
    for surface, _ in LIGHT_CASES + STRIP_CASES:
        trace = light_stem(surface).trace
        for earlier, later in zip(trace, trace[1:]):
            assert later.rule.klass in earlier.rule.next_classes


def test_light_stops_at_terminal_class():
    # Plural is terminal: nothing may strip after it, even if a pattern
    # would match the remaining word.
    trace = light_stem("பெண்கள்உக்கு").trace
    assert [step.rule.klass for step in trace] == [
        SuffixClass.CASE,
        SuffixClass.PLURAL,
    ]


def test_light_keeps_at_least_two_letters():
    for surface, _ in LIGHT_CASES:
        result = light_stem(surface)
        assert len(result.stem) >= min(len(result.word), 2)


def test_non_tamil_passes_through():
    for text in ("hello", "123", "stemming"):
        assert strip_stem(text).stem.text == text
        assert light_stem(text).stem.text == text
        assert strip_stem(text).trace == ()


def test_custom_rules_override_builtins():
    rules = parse_rules("Case\ts\t\t1\t\n")
    assert strip_stem("cats", rules).stem.text == "cat"
    assert light_stem("cats", rules).stem.text == "cat"
    # Built-ins are untouched by the custom set.
    assert strip_stem("cats").stem.text == "cats"


def test_light_round_trips_generated_corpus():
    rules = builtin_rules()
    for surface, root in build_corpus():
        assert light_stem(surface, rules).stem == root


def test_engines_registry():
    assert set(ENGINES) == {"strip", "light"}
    assert ENGINES["strip"] is strip_stem
    assert ENGINES["light"] is light_stem


def _random_tamil_words(count, seed):
    consonants = [
        chr(c)
        for c in range(0x0B95, 0x0BBA)
        if unicodedata.category(chr(c)) == "Lo"
    ]
    signs = [
        chr(c)
        for c in range(0x0BBE, 0x0BCE)
        if unicodedata.category(chr(c)) in ("Mn", "Mc")
    ]
    rng = random.Random(seed)
    words = []
    for _ in range(count):
        parts = []
        for _ in range(rng.randint(1, 8)):
            base = rng.choice(consonants)
            parts.append(
                base + rng.choice(signs) if rng.random() < 0.7 else base
            )
        words.append(word("".join(parts)))
    return words


def test_strip_idempotent_on_random_sample():
    rules = builtin_rules()
    for w in _random_tamil_words(500, seed=11):
        once = strip_stem(w, rules).stem
        assert strip_stem(once, rules).stem == once


def test_light_idempotent_on_paradigm_corpus():
    rules = builtin_rules()
    for surface, _ in build_corpus():
        once = light_stem(surface, rules).stem
        assert light_stem(once, rules).stem == once

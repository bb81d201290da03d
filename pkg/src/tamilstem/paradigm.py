"""Synthetic inflection tables for Tamil nouns and verbs.

Nouns decline for number (singular/plural) crossed with case endings plus
a vocative; verbs conjugate for tense (past/present/future) and a negative
series, each crossed with person/number/gender endings.  Every generated
surface is the plain concatenation of the root (or its plural/oblique
base) with one suffix, so a correct stemmer recovers the root exactly.

Nouns whose final letter is the bare consonant ``ம்`` ("m-final" nouns
like மரம்) swap that letter for ``ங்கள்`` in the plural and for ``த்``
before the locative ``இல்``; all other nouns take plain ``கள்``.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .graphemes import GraphemeWord, word

PARADIGMS = ("noun", "verb")

_M_FINAL = "ம்"

# Case endings shared by both numbers: accusative, dative, sociative,
# genitive, instrumental.  Locative and ablative depend on the noun type
# and are handled separately below; the vocative closes each number block.
_SHARED_CASES = ("ஐ", "உக்கு", "ஓடு", "உடைய", "ஆல்")
_VOCATIVE = "ஏ"

# Animate-style locative/ablative (attaches to any base).
_LOC_ANIMATE = "இடம்"
_ABL_ANIMATE = "இடமிருந்து"
# Inanimate-style locative/ablative for m-final nouns.
_LOC_PLAIN = "இல்"
_ABL_PLAIN = "இலிருந்து"
_OBLIQUE = "த்"

# Person/number/gender cells in table order: 1sg, 2sg, 3sg-m, 3sg-f,
# 3sg-honorific, 3sg-n, 1pl, 2pl, 3pl, 3pl-n.
_PAST = ("த்தேன்", "த்தாய்", "த்தான்", "த்தாள்", "த்தார்", "த்தது",
         "த்தோம்", "த்தீர்கள்", "த்தார்கள்", "த்தன")
_PRESENT = ("க்கிறேன்", "க்கிறாய்", "க்கிறான்", "க்கிறாள்", "க்கிறார்",
            "க்கிறது", "க்கிறோம்", "க்கிறீர்கள்", "க்கிறார்கள்",
            "க்கின்றன")
_FUTURE = ("ப்பேன்", "ப்பாய்", "ப்பான்", "ப்பாள்", "ப்பார்", "க்கும்",
           "ப்போம்", "ப்பீர்கள்", "ப்பார்கள்", "க்கும்")
_NEGATIVE = ("க்கமாட்டேன்", "க்கமாட்டாய்", "க்கமாட்டான்", "க்கமாட்டாள்",
             "க்கமாட்டார்", "க்காது", "க்கமாட்டோம்", "க்கமாட்டீர்கள்",
             "க்கமாட்டார்கள்", "க்காது", "க்கவில்லை")


def _as_word(root: GraphemeWord | str) -> GraphemeWord:
    return root if isinstance(root, GraphemeWord) else word(root)


def is_m_final(root: GraphemeWord | str) -> bool:
    """True for nouns that pluralize by swapping final ம் for ங்கள்."""
    w = _as_word(root)
    return bool(w) and w.graphemes[-1] == _M_FINAL


def plural_base(root: GraphemeWord | str) -> GraphemeWord:
    """The noun base that plural case forms attach to."""
    w = _as_word(root)
    if is_m_final(w):
        return word("".join(w.graphemes[:-1]) + "ங்கள்")
    return word(w.text + "கள்")


def _noun_number_block(base: GraphemeWord, loc: str, abl: str) -> list[str]:
    forms = [base.text]
    forms.extend(base.text + case for case in _SHARED_CASES)
    forms.append(base.text + loc)
    forms.append(base.text + abl)
    forms.append(base.text + _VOCATIVE)
    return forms


def _noun_forms(root: GraphemeWord) -> list[str]:
    plural = plural_base(root)
    if is_m_final(root):
        oblique = "".join(root.graphemes[:-1]) + _OBLIQUE
        singular = _noun_number_block(root, _LOC_PLAIN, _ABL_PLAIN)
        # The locative rides on the oblique base (marath-il), not the
        # nominative; patch the slot built above.
        singular[6] = oblique + _LOC_PLAIN
        return singular + _noun_number_block(plural, _LOC_PLAIN, _ABL_PLAIN)
    singular = _noun_number_block(root, _LOC_ANIMATE, _ABL_ANIMATE)
    return singular + _noun_number_block(plural, _LOC_ANIMATE, _ABL_ANIMATE)


def _verb_forms(root: GraphemeWord) -> list[str]:
    forms = []
    for series in (_PAST, _PRESENT, _FUTURE, _NEGATIVE):
        forms.extend(root.text + ending for ending in series)
    return forms


def generate_forms(
    root: GraphemeWord | str, paradigm: str
) -> list[tuple[GraphemeWord, GraphemeWord]]:
    """All inflected surfaces of *root*, each paired with the root.

    ``paradigm`` selects the noun declension (18 forms) or the verb
    conjugation (41 table cells; a few cells share a surface).  Roots
    shorter than 2 letters are rejected: nothing that short can be
    recovered once a suffix is attached.
    """
    w = _as_word(root)
    if len(w) < 2:
        raise ValueError(
            f"root too short: need at least 2 letters, got {w.text!r}"
        )
    if paradigm == "noun":
        surfaces = _noun_forms(w)
    elif paradigm == "verb":
        surfaces = _verb_forms(w)
    else:
        raise ValueError(f"unknown paradigm: {paradigm!r}")
    return [(word(s), w) for s in surfaces]


def load_roots(text: str) -> list[tuple[GraphemeWord, str]]:
    """Parse a root inventory: ``root<TAB>paradigm`` per line.

    ``#`` starts a comment; blank lines are skipped.  Errors carry the
    offending line number.
    """
    roots = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValueError(
                f"line {lineno}: expected 2 tab-separated fields, "
                f"got {len(fields)}"
            )
        root, paradigm = fields[0].strip(), fields[1].strip()
        if paradigm not in PARADIGMS:
            raise ValueError(f"line {lineno}: unknown paradigm: {paradigm!r}")
        roots.append((word(root), paradigm))
    return roots


@lru_cache(maxsize=1)
def default_roots() -> tuple[tuple[GraphemeWord, str], ...]:
    """The root inventory shipped with the package."""
    text = (
        resources.files("tamilstem.data")
        .joinpath("default_roots.tsv")
        .read_text(encoding="utf-8")
    )
    return tuple(load_roots(text))


def build_corpus(
    roots: "list[tuple[GraphemeWord | str, str]] | None" = None,
) -> list[tuple[GraphemeWord, GraphemeWord]]:
    """Concatenated (surface, root) pairs for every root in *roots*.

    Defaults to the shipped inventory.
    """
    if roots is None:
        roots = list(default_roots())
    pairs = []
    for root, paradigm in roots:
        pairs.extend(generate_forms(root, paradigm))
    return pairs

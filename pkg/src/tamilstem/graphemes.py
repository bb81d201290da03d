"""Unicode normalization and Tamil orthographic letter segmentation.

Everything downstream (rule matching, stripping, evaluation) operates on
sequences of orthographic letters, never on raw code points.  In Tamil a
user-perceived letter is either an independent vowel, or a consonant plus
an optional dependent vowel sign or pulli (virama).  Vowel signs and the
pulli are separate code points, so naive code-point suffix matching would
tear letters apart; clustering here makes suffix patterns match whole
letters only.

Text in other scripts degrades gracefully: a base character absorbs any
following combining marks, so ASCII romanizations segment one letter per
character and the engine works on them unchanged.
"""

import unicodedata
from dataclasses import dataclass

# Tamil block ranges (U+0B80..U+0BFF).
_AYTHAM = "ஃ"                      # ஃ stands alone
_INDEPENDENT_VOWELS = frozenset(chr(c) for c in range(0x0B85, 0x0B95))
_CONSONANTS = frozenset(
    chr(c) for c in range(0x0B95, 0x0BBA) if unicodedata.category(chr(c)) != "Cn"
)
# Dependent vowel signs, pulli, and the AU length mark attach to the
# preceding consonant.
_DEPENDENT_SIGNS = frozenset(
    chr(c) for c in range(0x0BBE, 0x0BCE) if unicodedata.category(chr(c)) != "Cn"
) | {"ௗ"}

_ZERO_WIDTH_JOINERS = frozenset("‌‍")


def normalize(text: str) -> str:
    """Return the canonical composed (NFC) form of *text*.

    Idempotent.  Rejects strings carrying lone surrogates (the residue of
    a failed byte decode) rather than letting them propagate.
    """
    for i, ch in enumerate(text):
        if "\ud800" <= ch <= "\udfff":
            raise ValueError(f"malformed text: lone surrogate at offset {i}")
    return unicodedata.normalize("NFC", text)


@dataclass(frozen=True)
class GraphemeWord:
    """A word as an ordered sequence of orthographic letters.

    Invariant: ``"".join(graphemes) == text`` and *text* is NFC.
    """

    graphemes: tuple[str, ...]
    text: str

    def __len__(self) -> int:
        return len(self.graphemes)

    def __bool__(self) -> bool:
        return bool(self.graphemes)

    def __str__(self) -> str:
        return self.text

    def ends_with(self, suffix: "GraphemeWord") -> bool:
        return ends_with(self, suffix)


def segment(text: str) -> GraphemeWord:
    """Split normalized *text* into orthographic letters.

    A Tamil consonant absorbs following dependent signs (vowel sign,
    pulli, AU length mark); independent vowels and aytham stand alone.
    Any other base character absorbs following combining marks and
    joiners, which is enough for romanized fixtures and incidental
    non-Tamil input.
    """
    clusters: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        j = i + 1
        if ch in _CONSONANTS:
            while j < n and text[j] in _DEPENDENT_SIGNS:
                j += 1
        elif ch in _INDEPENDENT_VOWELS or ch == _AYTHAM:
            # Absorb a stray length mark (ஔ decomposes to ஒ + ௗ; NFC
            # recomposes it, but be safe on non-NFC input).
            while j < n and text[j] == "ௗ":
                j += 1
        else:
            while j < n and (
                unicodedata.category(text[j]) in ("Mn", "Mc", "Me")
                or text[j] in _ZERO_WIDTH_JOINERS
            ):
                j += 1
        clusters.append(text[i:j])
        i = j
    return GraphemeWord(tuple(clusters), text)


def word(text: str) -> GraphemeWord:
    """Normalize then segment; the usual ingestion path for raw strings."""
    return segment(normalize(text))


def ends_with(w: GraphemeWord, suffix: GraphemeWord) -> bool:
    """True iff the last ``len(suffix)`` letters of *w* equal *suffix*."""
    k = len(suffix.graphemes)
    if k == 0:
        return True
    if k > len(w.graphemes):
        return False
    return w.graphemes[-k:] == suffix.graphemes


def is_tamil(w: GraphemeWord) -> bool:
    """True if every letter of *w* starts in the Tamil block."""
    return bool(w.graphemes) and all(
        "஀" <= g[0] <= "௿" for g in w.graphemes
    )

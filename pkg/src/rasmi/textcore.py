"""Unicode normalization, character classes and tokenization for Persian text.

Every other module consumes this module's output. The normalization is
deliberately minimal and idempotent: canonical composition, a small
Arabic-to-Persian codepoint map, whitespace collapsing, and collapsing
of 3+ letter runs (emphatic vowel lengthening) into a single letter
plus an emphasis flag.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

from rasmi.kernels import collapse_runs

ZWNJ = "‌"

# Arabic yeh / kaf (and their presentation variants) to the Persian
# codepoints, Arabic-Indic digits to Extended Arabic-Indic. Everything
# else passes through.
CHAR_MAP: dict[int, str] = {
    0x064A: "ی",  # ARABIC LETTER YEH
    0x0649: "ی",  # ARABIC LETTER ALEF MAKSURA
    0x0643: "ک",  # ARABIC LETTER KAF
    0xFEF1: "ی", 0xFEF2: "ی", 0xFEF3: "ی", 0xFEF4: "ی",
    0xFEEF: "ی", 0xFEF0: "ی",
    0xFBFC: "ی", 0xFBFD: "ی", 0xFBFE: "ی", 0xFBFF: "ی",
    0xFED9: "ک", 0xFEDA: "ک", 0xFEDB: "ک", 0xFEDC: "ک",
    0xFB8E: "ک", 0xFB8F: "ک", 0xFB90: "ک", 0xFB91: "ک",
}
CHAR_MAP.update({0x0660 + i: chr(0x06F0 + i) for i in range(10)})

# Spacing characters folded into a plain space before collapsing.
_SPACE_CHARS = {" ", " ", " ", "﻿", "​"}

VOWEL_LETTERS = frozenset("اویآ")
PERSIAN_DIGITS = frozenset("۰۱۲۳۴۵۶۷۸۹")
PUNCTUATION = frozenset("؟،؛«»…!\"'(),-.:;?[]{}٪%")
_PERSIAN_LETTERS = frozenset("ءآأؤئابپتثجچحخدذرزژسشصضطظعغفقکگلمنوهی")
CONSONANTS = frozenset(_PERSIAN_LETTERS - VOWEL_LETTERS)


@dataclass(frozen=True)
class CharClass:
    """A named, pairwise-disjoint character set used by rule patterns."""

    name: str
    members: frozenset[str]

    def __contains__(self, ch: str) -> bool:
        return ch in self.members


CHAR_CLASSES: dict[str, CharClass] = {
    "consonant": CharClass("consonant", CONSONANTS),
    "vowel-letter": CharClass("vowel-letter", VOWEL_LETTERS),
    "digit": CharClass("digit", PERSIAN_DIGITS),
    "punctuation": CharClass("punctuation", PUNCTUATION),
    "joiner": CharClass("joiner", frozenset(ZWNJ)),
}


class DecodeError(ValueError):
    """Raised for undecodable byte input; carries the byte offset."""

    def __init__(self, offset: int, reason: str):
        super().__init__(f"invalid encoding at byte offset {offset}: {reason}")
        self.offset = offset


@dataclass(frozen=True)
class NormalizedText:
    """Normalized text plus the records needed to map offsets back to the raw input."""

    text: str
    emphasis_flags: tuple[tuple[int, int], ...] = ()
    whitespace_runs: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class Token:
    surface: str
    index: int
    char_span: tuple[int, int]


TokenSequence = list[Token]


def map_chars(text: str) -> str:
    """Canonical composition plus the Arabic-to-Persian codepoint map."""
    return unicodedata.normalize("NFC", text).translate(CHAR_MAP)


def _collapse_whitespace(text: str) -> tuple[str, list[tuple[int, int]]]:
    out: list[str] = []
    runs: list[tuple[int, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace() or ch in _SPACE_CHARS:
            j = i + 1
            while j < n and (text[j].isspace() or text[j] in _SPACE_CHARS):
                j += 1
            run = j - i
            at_edge = not out or j == n
            if run > 1 or at_edge or ch != " ":
                runs.append((len(out), run))
            if not at_edge:
                out.append(" ")
            i = j
        else:
            out.append(ch)
            i += 1
    return "".join(out), runs


def collapse_repetition(text: str) -> tuple[str, list[tuple[int, int]]]:
    """Collapse maximal runs of 3+ identical letters; flag each as emphasis.

    Expects text that already went through the character mapping stage.
    """
    return collapse_runs(text)


def normalize_text(raw: str | bytes) -> NormalizedText:
    """Full normalization pipeline; idempotent on its own output."""
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DecodeError(exc.start, exc.reason) from exc
    mapped = map_chars(raw)
    spaced, ws_runs = _collapse_whitespace(mapped)
    collapsed, flags = collapse_repetition(spaced)
    # whitespace records were taken before the repetition collapse;
    # shift their offsets into final-text coordinates
    remapped = []
    for off, run in ws_runs:
        removed = 0
        for f_off, f_run in flags:
            if f_off + removed < off:
                removed += f_run - 1
            else:
                break
        remapped.append((off - removed, run))
    return NormalizedText(collapsed, tuple(flags), tuple(remapped))


def tokenize(text: NormalizedText | str) -> TokenSequence:
    """Split on spaces into maximal space-free runs; ZWNJ stays token-internal."""
    s = text.text if isinstance(text, NormalizedText) else text
    tokens: TokenSequence = []
    pos = 0
    for index, surface in enumerate(s.split(" ") if s else []):
        tokens.append(Token(surface, index, (pos, pos + len(surface))))
        pos += len(surface) + 1
    return tokens


def detokenize(tokens: TokenSequence | list[str]) -> str:
    """Single-space join; inverse of tokenize on normalized text."""
    return " ".join(t.surface if isinstance(t, Token) else t for t in tokens)

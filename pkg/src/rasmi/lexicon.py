"""The informal-to-formal phrase dictionary.

Entries pair an informal phrase (1..4 tokens) with its formal
replacement, a frequency and a bounded set of context samples. Identity
pairs are excluded: the dictionary records what *changes*.

Serialization is a diff-friendly TSV, one entry per line, columns
informal / formal / frequency / category, sorted by (informal, formal).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

MAX_PHRASE_TOKENS = 4
CONTEXT_BOUND = 50

Context = tuple[str, str]


class LexiconFormatError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class AmbiguityEntry:
    """Expansion candidates for a homographic informal suffix.

    Candidates are (expansion-template, grammatical-role, context-cue)
    triples; their order is the deterministic fallback priority.
    """

    suffix_surface: str
    candidates: tuple[tuple[str, str, str], ...]

    def __post_init__(self) -> None:
        if not self.candidates:
            raise ValueError(f"suffix {self.suffix_surface!r} has no candidates")


@dataclass
class LexEntry:
    informal: str
    formal: str
    frequency: int = 1
    category: str | None = None
    contexts: Counter = field(default_factory=Counter, compare=False)

    def __post_init__(self) -> None:
        if self.informal == self.formal:
            raise ValueError(f"identity pair not allowed in dictionary: {self.informal!r}")
        if self.frequency < 1:
            raise ValueError("persisted entries must have frequency >= 1")
        if len(self.informal.split(" ")) > MAX_PHRASE_TOKENS:
            raise ValueError(f"informal phrase longer than {MAX_PHRASE_TOKENS} tokens")


def _cap_contexts(contexts: Counter) -> Counter:
    """Deterministically retain at most CONTEXT_BOUND samples (by count, then key)."""
    total = sum(contexts.values())
    if total <= CONTEXT_BOUND:
        return contexts
    capped: Counter = Counter()
    remaining = CONTEXT_BOUND
    for key, cnt in sorted(contexts.items(), key=lambda kv: (-kv[1], kv[0])):
        take = min(cnt, remaining)
        if take:
            capped[key] = take
        remaining -= take
        if remaining == 0:
            break
    return capped


class Lexicon:
    """Immutable-by-convention snapshot of the dictionary; mutation builds state in place
    only through add/merge, which callers serialize externally."""

    def __init__(self, entries: list[LexEntry] | None = None):
        self._by_pair: dict[tuple[str, str], LexEntry] = {}
        self._by_informal: dict[str, list[LexEntry]] = {}
        for e in entries or []:
            self.add(e.informal, e.formal, e.frequency, e.category, e.contexts)

    def __len__(self) -> int:
        return len(self._by_pair)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        mine = {k: (v.frequency, v.category) for k, v in self._by_pair.items()}
        theirs = {k: (v.frequency, v.category) for k, v in other._by_pair.items()}
        return mine == theirs

    def __iter__(self):
        return iter(sorted(self._by_pair.values(), key=lambda e: (e.informal, e.formal)))

    def add(self, informal: str, formal: str, frequency: int = 1,
            category: str | None = None, contexts: Counter | None = None) -> None:
        if informal == formal:
            raise ValueError(f"identity pair not allowed in dictionary: {informal!r}")
        key = (informal, formal)
        entry = self._by_pair.get(key)
        if entry is None:
            entry = LexEntry(informal, formal, frequency, category)
            self._by_pair[key] = entry
            self._by_informal.setdefault(informal, []).append(entry)
        else:
            entry.frequency += frequency
            if entry.category is None:
                entry.category = category
        if contexts:
            entry.contexts.update(contexts)
            entry.contexts = _cap_contexts(entry.contexts)

    def lookup(self, phrase: str) -> list[LexEntry]:
        """Entries for a normalized informal phrase, most frequent first,
        ties broken by formal text in codepoint order."""
        entries = self._by_informal.get(phrase, [])
        return sorted(entries, key=lambda e: (-e.frequency, e.formal))

    def informal_phrases(self) -> set[str]:
        return set(self._by_informal)

    def max_phrase_len(self) -> int:
        if not self._by_informal:
            return 0
        return max(len(p.split(" ")) for p in self._by_informal)


def merge(a: Lexicon, b: Lexicon) -> Lexicon:
    """Union of entries; shared (informal, formal) pairs sum frequencies."""
    out = Lexicon()
    for lex in (a, b):
        for e in lex:
            out.add(e.informal, e.formal, e.frequency, e.category, e.contexts)
    return out


def save(lexicon: Lexicon, path: str | Path) -> None:
    lines = []
    for e in lexicon:
        lines.append(f"{e.informal}\t{e.formal}\t{e.frequency}\t{e.category or ''}")
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def loads(text: str, warn: list[str] | None = None) -> Lexicon:
    lex = Lexicon()
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) not in (3, 4):
            raise LexiconFormatError(line_no, f"expected 3 or 4 tab-separated columns, got {len(cols)}")
        informal, formal, freq_s = cols[0], cols[1], cols[2]
        category = cols[3] or None if len(cols) == 4 else None
        try:
            freq = int(freq_s)
        except ValueError:
            raise LexiconFormatError(line_no, f"frequency is not an integer: {freq_s!r}") from None
        if freq < 1:
            raise LexiconFormatError(line_no, f"frequency must be >= 1, got {freq}")
        if informal == formal:
            raise LexiconFormatError(line_no, f"identity pair: {informal!r}")
        if (informal, formal) in lex._by_pair and warn is not None:
            warn.append(f"line {line_no}: duplicate pair {informal!r} -> {formal!r}; frequencies summed")
        lex.add(informal, formal, freq, category)
    return lex


def load(path: str | Path, warn: list[str] | None = None) -> Lexicon:
    return loads(Path(path).read_text(encoding="utf-8"), warn)

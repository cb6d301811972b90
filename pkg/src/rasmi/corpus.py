"""Parallel-corpus records: persistence, filtering, validation, statistics
and dictionary extraction.

Records serialize as UTF-8 line-delimited JSON, one record per line,
with spans as [start, end) integer pairs, so corpora stream record at a
time and diff cleanly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Iterator

from rasmi import textcore
from rasmi.alignment import (AlignmentLink, has_syntactic_change, out_of_bounds,
                             side_overlaps, uncovered)
from rasmi.lexicon import Lexicon

SOURCES = ("web", "twitter", "instagram", "myself", "movie", "messenger",
           "weblog", "book")
STATUSES = ("draft", "reviewed", "confirmed")

MIN_TOKENS = 26
MAX_TOKENS = 40
MIN_INFORMAL_HITS = 4


class CorpusFormatError(ValueError):
    def __init__(self, line_no: int, message: str, record_id: str | None = None):
        ident = f" (record {record_id})" if record_id else ""
        super().__init__(f"line {line_no}{ident}: {message}")
        self.line_no = line_no
        self.record_id = record_id


@dataclass
class CorpusRecord:
    id: str
    informal: str
    formal: str
    links: list[AlignmentLink] = field(default_factory=list)
    source: str = "myself"
    annotator: str = ""
    created_at: str = ""
    status: str = "draft"
    syntactic_change: bool = False
    version: int = 1

    def __post_init__(self) -> None:
        if not self.created_at:
            self.created_at = datetime.now(timezone.utc).isoformat(timespec="seconds")

    def informal_tokens(self) -> list[str]:
        return [t.surface for t in textcore.tokenize(self.informal)]

    def formal_tokens(self) -> list[str]:
        return [t.surface for t in textcore.tokenize(self.formal)]

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "informal": self.informal,
            "formal": self.formal,
            "links": [l.to_json() for l in self.links],
            "source": self.source,
            "annotator": self.annotator,
            "created_at": self.created_at,
            "status": self.status,
            "syntactic_change": self.syntactic_change,
            "version": self.version,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CorpusRecord":
        return cls(
            id=obj["id"],
            informal=obj["informal"],
            formal=obj["formal"],
            links=[AlignmentLink.from_json(l) for l in obj.get("links", [])],
            source=obj.get("source", "myself"),
            annotator=obj.get("annotator", ""),
            created_at=obj.get("created_at", ""),
            status=obj.get("status", "draft"),
            syntactic_change=obj.get("syntactic_change", False),
            version=obj.get("version", 1),
        )


Corpus = list[CorpusRecord]


@dataclass(frozen=True)
class Issue:
    severity: str  # "error" | "warning"
    message: str

    @property
    def is_error(self) -> bool:
        return self.severity == "error"


def legal_transition(old: str, new: str) -> bool:
    """Status only moves forward one step: draft -> reviewed -> confirmed."""
    if old == new:
        return True
    return STATUSES.index(new) - STATUSES.index(old) == 1 if (
        old in STATUSES and new in STATUSES) else False


def validate_record(record: CorpusRecord, prev_status: str | None = None) -> list[Issue]:
    """Out-of-bounds or overlapping spans and illegal transitions are errors;
    uncovered tokens and a stale stored flag are warnings."""
    issues: list[Issue] = []
    if record.source not in SOURCES:
        issues.append(Issue("error", f"unknown source {record.source!r}"))
    if record.status not in STATUSES:
        issues.append(Issue("error", f"unknown status {record.status!r}"))
    elif prev_status is not None and not legal_transition(prev_status, record.status):
        issues.append(Issue("error",
                            f"illegal status transition {prev_status!r} -> {record.status!r}"))

    n_inf = len(record.informal_tokens()) if record.informal else 0
    n_for = len(record.formal_tokens()) if record.formal else 0
    for li in out_of_bounds(record.links, n_inf, n_for):
        issues.append(Issue("error", f"link {li} is out of bounds"))
    for side, label in (("informal_span", "informal"), ("formal_span", "formal")):
        for a, b in side_overlaps(record.links, side):
            issues.append(Issue("error", f"links {a} and {b} overlap on the {label} side"))
        for tok in uncovered(record.links, side, n_inf if side == "informal_span" else n_for):
            issues.append(Issue("warning", f"{label} token {tok} is covered by no link"))
    recomputed = has_syntactic_change(record.links)
    if record.links and record.syntactic_change != recomputed:
        issues.append(Issue("warning",
                            f"stored syntactic_change={record.syntactic_change} "
                            f"but links imply {recomputed}"))
    return issues


def filter_candidates(sentences: Iterable[str], informal_lexicon: Lexicon,
                      min_tokens: int = MIN_TOKENS, max_tokens: int = MAX_TOKENS,
                      min_hits: int = MIN_INFORMAL_HITS) -> list[str]:
    """Keep sentences of 26-40 space-separated tokens containing at least
    four informal words (dictionary hits); order preserved."""
    accepted = []
    for sentence in sentences:
        normalized = textcore.normalize_text(sentence)
        tokens = textcore.tokenize(normalized)
        if not (min_tokens <= len(tokens) <= max_tokens):
            continue
        hits = 0
        for tok in tokens:
            from rasmi.converter import split_punct
            core = split_punct(tok.surface)[1]
            if core and informal_lexicon.lookup(core):
                hits += 1
        if hits >= min_hits:
            accepted.append(sentence)
    return accepted


@dataclass(frozen=True)
class CorpusStats:
    record_count: int = 0
    avg_formal_length: float = 0.0
    avg_informal_length: float = 0.0
    alignment_count: int = 0
    unique_word_pairs: int = 0
    pct_syntactic_change: float = 0.0
    dictionary_size: int = 0
    source_distribution: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "record_count": self.record_count,
            "avg_formal_length": self.avg_formal_length,
            "avg_informal_length": self.avg_informal_length,
            "alignment_count": self.alignment_count,
            "unique_word_pairs": self.unique_word_pairs,
            "pct_syntactic_change": self.pct_syntactic_change,
            "dictionary_size": self.dictionary_size,
            "source_distribution": dict(sorted(self.source_distribution.items())),
        }


def _link_pairs(record: CorpusRecord) -> Iterator[tuple[str, str, int]]:
    """(informal phrase, formal phrase, informal start) for non-empty links."""
    inf = record.informal_tokens()
    form = record.formal_tokens()
    for link in record.links:
        ia, ib = link.informal_span
        fa, fb = link.formal_span
        if ia == ib or fa == fb:
            continue
        yield " ".join(inf[ia:ib]), " ".join(form[fa:fb]), ia


def compute_stats(corpus: Corpus) -> CorpusStats:
    n = len(corpus)
    if n == 0:
        return CorpusStats()
    inf_len = sum(len(r.informal_tokens()) for r in corpus)
    for_len = sum(len(r.formal_tokens()) for r in corpus)
    alignments = sum(len(r.links) for r in corpus)
    pairs: set[tuple[str, str]] = set()
    non_identity: set[tuple[str, str]] = set()
    for record in corpus:
        for informal, formal, _ in _link_pairs(record):
            pairs.add((informal, formal))
            if informal != formal:
                non_identity.add((informal, formal))
    syn = sum(1 for r in corpus if r.syntactic_change)
    dist: dict[str, int] = {}
    for r in corpus:
        dist[r.source] = dist.get(r.source, 0) + 1
    return CorpusStats(
        record_count=n,
        avg_formal_length=for_len / n,
        avg_informal_length=inf_len / n,
        alignment_count=alignments,
        unique_word_pairs=len(pairs),
        pct_syntactic_change=100.0 * syn / n,
        dictionary_size=len(non_identity),
        source_distribution=dist,
    )


def extract_dictionary(corpus: Corpus) -> Lexicon:
    """Count every non-identity aligned phrase pair; contexts come from the
    informal neighbors of the span."""
    lex = Lexicon()
    for record in corpus:
        inf = record.informal_tokens()
        for link in record.links:
            ia, ib = link.informal_span
            fa, fb = link.formal_span
            if ia == ib or fa == fb:
                continue
            informal = " ".join(inf[ia:ib])
            formal = " ".join(record.formal_tokens()[fa:fb])
            if informal == formal:
                continue
            left = inf[ia - 1] if ia > 0 else ""
            right = inf[ib] if ib < len(inf) else ""
            lex.add(informal, formal, 1, None, {(left, right): 1})
    return lex


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for record in corpus:
            fh.write(json.dumps(record.to_json(), ensure_ascii=False) + "\n")


def iter_records(path: str | Path) -> Iterator[CorpusRecord]:
    """Stream records one line at a time with bounded memory."""
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(line_no, f"invalid JSON: {exc.msg}") from exc
            try:
                yield CorpusRecord.from_json(obj)
            except (KeyError, TypeError, ValueError) as exc:
                raise CorpusFormatError(line_no, f"bad record: {exc}",
                                        obj.get("id") if isinstance(obj, dict) else None) from exc


def load_corpus(path: str | Path) -> Corpus:
    return list(iter_records(path))

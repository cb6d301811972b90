"""Automatic alignment suggestion from previously accepted alignments.

Given a new informal/formal sentence pair, propose links ranked by how
often the phrase pair occurred before, breaking ties by context
similarity and then by position. Material never seen before falls back
to a diagonal (relative-position, monotonic) alignment so the proposal
always covers both sentences and an annotator only has to accept or
correct it.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from rasmi.alignment import AlignmentLink
from rasmi.corpus import CorpusRecord, validate_record

HISTORY_FORMAT = "rasmi-history"
HISTORY_VERSION = 1
MAX_NGRAM = 4


class HistoryFormatError(ValueError):
    pass


@dataclass
class AlignmentHistory:
    """Pair frequencies plus, per pair, the (left, right) informal-neighbor
    samples seen when the pair was aligned. Contexts are keyed by the
    full pair so they can discriminate between formal candidates that
    tie on frequency."""

    pair_counts: dict[tuple[str, str], int] = field(default_factory=dict)
    context_index: dict[tuple[str, str], Counter] = field(default_factory=dict)

    def copy(self) -> "AlignmentHistory":
        return AlignmentHistory(dict(self.pair_counts),
                                {k: Counter(v) for k, v in self.context_index.items()})

    def candidates(self, phrase: str) -> list[tuple[str, int]]:
        return sorted(((f, c) for (i, f), c in self.pair_counts.items() if i == phrase),
                      key=lambda fc: (-fc[1], fc[0]))

    def context_overlap(self, phrase: str, formal: str, left: str, right: str) -> int:
        return self.context_index.get((phrase, formal), Counter()).get((left, right), 0)


@dataclass(frozen=True)
class Suggestion:
    link: AlignmentLink
    score: int
    tie_break: int
    provenance: str  # "history" | "diagonal-fallback"

    def to_json(self) -> dict:
        return {"link": self.link.to_json(), "score": self.score,
                "tie_break": self.tie_break, "provenance": self.provenance}


def ingest(record: CorpusRecord, history: AlignmentHistory) -> AlignmentHistory:
    """Fold one record's accepted alignments into the history (in place)."""
    issues = [i for i in validate_record(record) if i.is_error]
    if issues:
        raise ValueError(f"record {record.id} rejected: " + "; ".join(i.message for i in issues))
    inf = record.informal_tokens()
    form = record.formal_tokens()
    for link in record.links:
        ia, ib = link.informal_span
        fa, fb = link.formal_span
        if ia == ib or fa == fb:
            continue
        phrase = " ".join(inf[ia:ib])
        formal = " ".join(form[fa:fb])
        key = (phrase, formal)
        history.pair_counts[key] = history.pair_counts.get(key, 0) + 1
        left = inf[ia - 1] if ia > 0 else ""
        right = inf[ib] if ib < len(inf) else ""
        history.context_index.setdefault(key, Counter())[(left, right)] += 1
    return history


def rebuild(records, statuses: tuple[str, ...] = ("reviewed", "confirmed")) -> AlignmentHistory:
    """Reconstruct the history from scratch; equivalent to incremental ingest."""
    history = AlignmentHistory()
    for record in records:
        if record.status in statuses:
            ingest(record, history)
    return history


def _find_occurrences(tokens: list[str], phrase_tokens: list[str],
                      claimed: set[int]) -> list[int]:
    n = len(phrase_tokens)
    hits = []
    for start in range(len(tokens) - n + 1):
        if any((start + k) in claimed for k in range(n)):
            continue
        if tokens[start:start + n] == phrase_tokens:
            hits.append(start)
    return hits


def _segments(unclaimed: list[int]) -> list[tuple[int, int]]:
    segs = []
    for idx in unclaimed:
        if segs and segs[-1][1] == idx:
            segs[-1] = (segs[-1][0], idx + 1)
        else:
            segs.append((idx, idx + 1))
    return segs


def suggest(informal_tokens: list[str], formal_tokens: list[str],
            history: AlignmentHistory) -> list[Suggestion]:
    """Propose a total, non-overlapping link set for a sentence pair."""
    if not informal_tokens or not formal_tokens:
        raise ValueError("both token sequences must be non-empty")
    inf_claimed: set[int] = set()
    for_claimed: set[int] = set()
    out: list[Suggestion] = []

    for n in range(min(MAX_NGRAM, len(informal_tokens)), 0, -1):
        for start in range(len(informal_tokens) - n + 1):
            if any((start + k) in inf_claimed for k in range(n)):
                continue
            phrase_tokens = informal_tokens[start:start + n]
            phrase = " ".join(phrase_tokens)
            candidates = history.candidates(phrase)
            if not candidates:
                continue
            left = informal_tokens[start - 1] if start > 0 else ""
            right = informal_tokens[start + n] if start + n < len(informal_tokens) else ""
            options = []
            for formal, count in candidates:
                ftoks = formal.split(" ")
                ctx = history.context_overlap(phrase, formal, left, right)
                for pos in _find_occurrences(formal_tokens, ftoks, for_claimed):
                    options.append((-count, -ctx, pos, formal, len(ftoks)))
            if not options:
                continue
            neg_count, neg_ctx, pos, formal, flen = min(options)
            count, ctx = -neg_count, -neg_ctx
            link = AlignmentLink((start, start + n), (pos, pos + flen))
            out.append(Suggestion(link, count, ctx, "history"))
            inf_claimed.update(range(start, start + n))
            for_claimed.update(range(pos, pos + flen))

    out.extend(_diagonal_fallback(informal_tokens, formal_tokens,
                                  inf_claimed, for_claimed))
    out.sort(key=lambda s: (s.link.informal_span, s.link.formal_span))
    return out


def _diagonal_fallback(informal_tokens, formal_tokens, inf_claimed, for_claimed):
    """Cover the unclaimed remainder with monotonic relative-position links."""
    inf_segs = _segments([i for i in range(len(informal_tokens)) if i not in inf_claimed])
    for_segs = _segments([i for i in range(len(formal_tokens)) if i not in for_claimed])
    out: list[Suggestion] = []
    for (ia, ib), (fa, fb) in zip(inf_segs, for_segs):
        m, f = ib - ia, fb - fa
        if m <= f:
            for k in range(m - 1):
                out.append(_fallback_link((ia + k, ia + k + 1), (fa + k, fa + k + 1)))
            out.append(_fallback_link((ib - 1, ib), (fa + m - 1, fb)))
        else:
            for k in range(f - 1):
                out.append(_fallback_link((ia + k, ia + k + 1), (fa + k, fa + k + 1)))
            out.append(_fallback_link((ia + f - 1, ib), (fb - 1, fb)))
    # leftover segments on one side only: empty-span links keep coverage total
    for ia, ib in inf_segs[len(for_segs):]:
        for i in range(ia, ib):
            out.append(_fallback_link((i, i + 1), (len(formal_tokens), len(formal_tokens))))
    for fa, fb in for_segs[len(inf_segs):]:
        for f in range(fa, fb):
            out.append(_fallback_link((len(informal_tokens), len(informal_tokens)), (f, f + 1)))
    return out


def _fallback_link(informal_span, formal_span) -> Suggestion:
    return Suggestion(AlignmentLink(informal_span, formal_span), 0, 0, "diagonal-fallback")


def save_history(history: AlignmentHistory, path: str | Path) -> None:
    doc = {
        "format": HISTORY_FORMAT,
        "version": HISTORY_VERSION,
        "pairs": [[i, f, c] for (i, f), c in sorted(history.pair_counts.items())],
        "contexts": [
            [i, f, l, r, c]
            for (i, f), ctr in sorted(history.context_index.items())
            for (l, r), c in sorted(ctr.items())
        ],
    }
    Path(path).write_text(json.dumps(doc, ensure_ascii=False, indent=0) + "\n",
                          encoding="utf-8")


def load_history(path: str | Path) -> AlignmentHistory:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    if doc.get("format") != HISTORY_FORMAT:
        raise HistoryFormatError(f"not a history snapshot: {path}")
    if doc.get("version") != HISTORY_VERSION:
        raise HistoryFormatError(f"unsupported history version {doc.get('version')}")
    history = AlignmentHistory()
    for informal, formal, count in doc["pairs"]:
        history.pair_counts[(informal, formal)] = count
    for informal, formal, left, right, count in doc["contexts"]:
        history.context_index.setdefault((informal, formal), Counter())[(left, right)] = count
    return history

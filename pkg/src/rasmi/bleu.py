"""BLEU scoring (modified n-gram precision, brevity penalty) and the
corpus evaluation harness.

Corpus scores aggregate clipped counts over all pairs rather than
averaging per-sentence scores. Add-one smoothing applies only to orders
of 2 and up whose clipped match count is zero; a zero unigram precision
clamps the score to 0.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence

from rasmi import textcore
from rasmi.kernels import ngram_counts

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BleuConfig:
    max_ngram_order: int = 4
    weights: tuple[float, ...] | None = None  # None = uniform
    smoothing: bool = True  # add-one on orders >= 2 with zero matches
    length_filter: tuple[int, int] | None = None  # reference token-count range

    def __post_init__(self) -> None:
        if self.max_ngram_order < 1:
            raise ValueError("max_ngram_order must be >= 1")
        if self.weights is not None:
            if len(self.weights) != self.max_ngram_order:
                raise ValueError("need one weight per order")
            if abs(sum(self.weights) - 1.0) > 1e-9:
                raise ValueError("weights must sum to 1")


Tokens = Sequence[str]


def _as_tokens(x) -> list[str]:
    if isinstance(x, str):
        return [t.surface for t in textcore.tokenize(textcore.normalize_text(x))]
    return [t.surface if isinstance(t, textcore.Token) else t for t in x]


def _clipped_matches(candidate: list[str], references: list[list[str]],
                     order: int) -> tuple[int, int]:
    cand_counts = ngram_counts(candidate, order)
    total = sum(cand_counts.values())
    if not total:
        return 0, 0
    max_ref: dict = {}
    for ref in references:
        for gram, cnt in ngram_counts(ref, order).items():
            if gram in cand_counts and cnt > max_ref.get(gram, 0):
                max_ref[gram] = cnt
    matches = sum(min(cnt, max_ref.get(gram, 0)) for gram, cnt in cand_counts.items())
    return matches, total


def _closest_ref_len(cand_len: int, ref_lens: list[int]) -> int:
    return min(ref_lens, key=lambda r: (abs(r - cand_len), r))


def _score(stats: list[tuple[int, int]], cand_len: int, ref_len: int,
           config: BleuConfig) -> float:
    """Combine per-order (matches, total) statistics into a BLEU score."""
    if cand_len == 0:
        return 0.0
    usable = [(order, m, t) for order, (m, t) in enumerate(stats, start=1) if t > 0]
    if not usable:
        return 0.0
    precisions: list[float] = []
    for order, matches, total in usable:
        if matches == 0:
            if order == 1 or not config.smoothing:
                return 0.0
            precisions.append(1.0 / (total + 1))
        else:
            precisions.append(matches / total)
    if config.weights is not None:
        weights = [config.weights[o - 1] for o, _, _ in usable]
        norm = sum(weights)
        weights = [w / norm for w in weights]
    else:
        weights = [1.0 / len(usable)] * len(usable)
    log_sum = math.fsum(w * math.log(p) for w, p in zip(weights, precisions))
    bp = 1.0 if cand_len > ref_len else math.exp(1.0 - ref_len / cand_len)
    return bp * math.exp(log_sum)


def bleu(candidate, references, config: BleuConfig | None = None) -> float:
    """Sentence BLEU in [0, 1]."""
    config = config or BleuConfig()
    cand = _as_tokens(candidate)
    refs = [_as_tokens(r) for r in references]
    if not refs:
        raise ValueError("at least one reference is required")
    if not cand:
        log.warning("empty candidate scored as 0")
        return 0.0
    stats = [_clipped_matches(cand, refs, n)
             for n in range(1, config.max_ngram_order + 1)]
    ref_len = _closest_ref_len(len(cand), [len(r) for r in refs])
    return _score(stats, len(cand), ref_len, config)


def evaluate_corpus(outputs: list, references: list,
                    config: BleuConfig | None = None) -> dict:
    """Corpus-level BLEU report with an optional reference-length filter."""
    config = config or BleuConfig()
    if len(outputs) != len(references):
        raise ValueError(f"outputs and references differ in length: "
                         f"{len(outputs)} vs {len(references)}")
    scored: list[tuple[list[str], list[str]]] = []
    filtered_out = 0
    for out, ref in zip(outputs, references):
        ref_tokens = _as_tokens(ref)
        if config.length_filter is not None:
            lo, hi = config.length_filter
            if not (lo <= len(ref_tokens) <= hi):
                filtered_out += 1
                continue
        scored.append((_as_tokens(out), ref_tokens))

    totals = [[0, 0] for _ in range(config.max_ngram_order)]
    cand_len = ref_len = 0
    sentence_scores = []
    for cand, ref in scored:
        for n in range(1, config.max_ngram_order + 1):
            m, t = _clipped_matches(cand, [ref], n)
            totals[n - 1][0] += m
            totals[n - 1][1] += t
        cand_len += len(cand)
        ref_len += _closest_ref_len(len(cand), [len(ref)])
        sentence_scores.append(bleu(cand, [ref], config))

    corpus = _score([tuple(t) for t in totals], cand_len, ref_len, config)
    return {
        "corpus_bleu": corpus,
        "corpus_bleu_pct": f"{corpus * 100:.4f}",
        "sentence_bleu": sentence_scores,
        "pairs_scored": len(scored),
        "pairs_filtered_out": filtered_out,
        "candidate_tokens": cand_len,
        "reference_tokens": ref_len,
    }

import math
import random
from collections import Counter

import pytest

from rasmi.bleu import BleuConfig, bleu, evaluate_corpus


class TestSentenceBleu:
    def test_identity_is_one(self):
        tokens = ["الف", "ب", "پ", "ت", "ث"]
        assert abs(bleu(tokens, [tokens]) - 1.0) < 1e-12

    def test_brevity_penalty_hand_case(self):
        # all precisions 1, only the brevity penalty differs:
        # candidate 4 tokens vs reference 5 -> exp(1 - 5/4) = exp(-0.25)
        score = bleu(["a", "b", "c", "d"], [["a", "b", "c", "d", "e"]])
        assert abs(score - math.exp(-0.25)) < 1e-6

    def test_zero_unigram_overlap_is_zero(self):
        assert bleu(["x", "y"], [["a", "b"]]) == 0.0

    def test_empty_candidate_warns_and_zero(self, caplog):
        with caplog.at_level("WARNING"):
            assert bleu([], [["a"]]) == 0.0
        assert any("empty candidate" in r.message for r in caplog.records)

    def test_reference_required(self):
        with pytest.raises(ValueError):
            bleu(["a"], [])

    def test_smoothing_only_on_zero_match_higher_orders(self):
        # unigrams all match, bigram "b a" does not: p2 = 1/(2), p2 smoothed? no -
        # one bigram of two matches, so no smoothing branch is taken
        score = bleu(["a", "b", "a"], [["a", "b", "b", "a"]], BleuConfig(max_ngram_order=2))
        p1 = 3 / 3
        p2 = 2 / 2  # "a b" and "b a" both occur in the reference
        bp = math.exp(1 - 4 / 3)
        assert abs(score - bp * math.exp(0.5 * (math.log(p1) + math.log(p2)))) < 1e-9

    def test_smoothed_path(self):
        # shared unigrams but no shared bigram: order-2 precision smoothed to 1/(n+1)
        score = bleu(["a", "c"], [["a", "b", "c", "d"]], BleuConfig(max_ngram_order=2))
        p1 = 2 / 2
        p2 = 1 / 2  # add-one: (0 + 1) / (1 + 1)
        bp = math.exp(1 - 4 / 2)
        assert abs(score - bp * math.exp(0.5 * (math.log(p1) + math.log(p2)))) < 1e-9

    def test_short_candidate_uses_effective_orders(self):
        # a 2-token identical pair has no 3- or 4-grams; score stays 1 under BP
        assert abs(bleu(["a", "b"], [["a", "b"]]) - 1.0) < 1e-12

    def test_string_inputs_tokenized(self):
        assert abs(bleu("یک هندوانه بردار", ["یک هندوانه بردار"]) - 1.0) < 1e-12

    def test_range(self):
        rng = random.Random(1)
        vocab = list("abcdefgh")
        for _ in range(200):
            cand = [rng.choice(vocab) for _ in range(rng.randint(1, 10))]
            ref = [rng.choice(vocab) for _ in range(rng.randint(1, 10))]
            s = bleu(cand, [ref])
            assert 0.0 <= s <= 1.0


def brute_force_corpus_bleu(pairs, max_order=4):
    """Independent aggregation: explicit n-gram enumeration, no shared helpers."""
    matches = [0] * max_order
    totals = [0] * max_order
    cand_total = ref_total = 0
    for cand, ref in pairs:
        cand_total += len(cand)
        ref_total += len(ref)
        for n in range(1, max_order + 1):
            cand_grams = [tuple(cand[i:i + n]) for i in range(len(cand) - n + 1)]
            ref_grams = [tuple(ref[i:i + n]) for i in range(len(ref) - n + 1)]
            ref_counts = Counter(ref_grams)
            clipped = Counter()
            for g in cand_grams:
                clipped[g] += 1
            m = sum(min(c, ref_counts[g]) for g, c in clipped.items())
            matches[n - 1] += m
            totals[n - 1] += len(cand_grams)
    precisions = []
    for n in range(max_order):
        if totals[n] == 0:
            continue
        if matches[n] == 0:
            if n == 0:
                return 0.0
            precisions.append(1.0 / (totals[n] + 1))
        else:
            precisions.append(matches[n] / totals[n])
    s = sum(math.log(p) for p in precisions) / len(precisions)
    bp = 1.0 if cand_total > ref_total else math.exp(1 - ref_total / cand_total)
    return bp * math.exp(s)


class TestCorpusEvaluation:
    def test_all_equal_is_one(self):
        outs = ["الف ب پ ت", "ث ج چ ح"]
        report = evaluate_corpus(outs, list(outs))
        assert abs(report["corpus_bleu"] - 1.0) < 1e-12

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            evaluate_corpus(["a"], ["a", "b"])

    def test_length_filter_excludes_pairs(self):
        outs = ["الف ب", " ".join(["تا"] * 20)]
        refs = ["الف ب", " ".join(["تا"] * 20)]
        report = evaluate_corpus(outs, refs, BleuConfig(length_filter=(15, 25)))
        assert report["pairs_scored"] == 1
        assert report["pairs_filtered_out"] == 1

    def test_three_pair_toy_matches_brute_force(self):
        pairs = [
            (["a", "b", "c", "d"], ["a", "b", "c", "d", "e"]),
            (["x", "b", "c"], ["x", "b", "d"]),
            (["p", "q", "r", "s", "t"], ["p", "q", "r", "s", "t"]),
        ]
        report = evaluate_corpus([" ".join(c) for c, _ in pairs],
                                 [" ".join(r) for _, r in pairs])
        assert abs(report["corpus_bleu"] - brute_force_corpus_bleu(pairs)) < 1e-9

    def test_permutation_invariant(self):
        outs = ["الف ب پ ت", "ج چ ح خ", "د ذ ر ز"]
        refs = ["الف ب پ ث", "ج چ خ ح", "د ذ ر ز"]
        a = evaluate_corpus(outs, refs)["corpus_bleu"]
        b = evaluate_corpus(outs[::-1], refs[::-1])["corpus_bleu"]
        assert a == b

    def test_per_sentence_scores_bounded(self):
        outs = ["الف ب پ ت", "ج چ ح خ"]
        refs = ["الف ب پ ث", "ج چ خ ح"]
        report = evaluate_corpus(outs, refs)
        assert all(0.0 <= s <= 1.0 for s in report["sentence_bleu"])
        assert len(report["sentence_bleu"]) == 2

    def test_pct_format(self):
        report = evaluate_corpus(["الف ب پ ت"], ["الف ب پ ت"])
        assert report["corpus_bleu_pct"] == "100.0000"

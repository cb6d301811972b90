#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Run: python3 benchmarks/bench_kernels.py
"""

import random
import statistics
import time

from rasmi.kernels import _pure

try:
    from rasmi.kernels import _speedups
except ImportError:
    _speedups = None


def make_corpus(n_sentences: int, seed: int = 7) -> list[str]:
    rng = random.Random(seed)
    letters = "ابپتثجچحخدذرزژسشصضطظعغفقکگلمنوهی"
    sentences = []
    for _ in range(n_sentences):
        words = []
        for _ in range(rng.randint(8, 30)):
            word = "".join(rng.choice(letters) for _ in range(rng.randint(2, 8)))
            if rng.random() < 0.15:  # emphatic lengthening
                word += word[-1] * rng.randint(3, 7)
            words.append(word)
        sentences.append(" ".join(words))
    return sentences


def timeit(fn, repeats: int = 5) -> float:
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def bench_collapse(sentences):
    def run(mod):
        def inner():
            for s in sentences:
                mod.collapse_runs(s)
        return inner

    pure = timeit(run(_pure))
    print(f"collapse_runs   pure:     {pure * 1000:8.1f} ms")
    if _speedups:
        fast = timeit(run(_speedups))
        print(f"collapse_runs   compiled: {fast * 1000:8.1f} ms   ({pure / fast:4.1f}x)")


def bench_ngrams(sentences):
    token_lists = [s.split(" ") for s in sentences]

    def run(mod):
        def inner():
            for toks in token_lists:
                for order in (1, 2, 3, 4):
                    mod.ngram_counts(toks, order)
        return inner

    pure = timeit(run(_pure))
    print(f"ngram_counts    pure:     {pure * 1000:8.1f} ms")
    if _speedups:
        fast = timeit(run(_speedups))
        print(f"ngram_counts    compiled: {fast * 1000:8.1f} ms   ({pure / fast:4.1f}x)")


def main():
    sentences = make_corpus(20_000)
    print(f"corpus: {len(sentences)} sentences, "
          f"{sum(len(s) for s in sentences)} chars")
    if _speedups is None:
        print("note: compiled extension not available; showing pure timings only")
    bench_collapse(sentences)
    bench_ngrams(sentences)


if __name__ == "__main__":
    main()

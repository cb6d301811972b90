"""Pure-Python reference implementations of the hot kernels.

Semantics here are the contract; the compiled twin in ``_speedups.pyx``
must match them exactly (the test suite cross-checks both backends).
"""

from __future__ import annotations


def collapse_runs(text: str) -> tuple[str, list[tuple[int, int]]]:
    """Collapse runs of 3+ identical letters to a single occurrence.

    Returns the collapsed string and a list of (offset, run_length)
    flags, where offset is the index of the kept character in the
    *output* string. Runs of 1 or 2 and non-letter runs are untouched.
    """
    out: list[str] = []
    flags: list[tuple[int, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        j = i + 1
        while j < n and text[j] == ch:
            j += 1
        run = j - i
        if run >= 3 and ch.isalpha():
            flags.append((len(out), run))
            out.append(ch)
        else:
            out.extend(ch * run)
        i = j
    return "".join(out), flags


def ngram_counts(tokens: list[str] | tuple[str, ...], order: int) -> dict[tuple[str, ...], int]:
    """Count n-grams of exactly ``order`` over a token sequence."""
    counts: dict[tuple[str, ...], int] = {}
    n = len(tokens)
    for i in range(n - order + 1):
        key = tuple(tokens[i:i + order])
        counts[key] = counts.get(key, 0) + 1
    return counts

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_pure``.

These are the per-character / per-token inner loops that dominate
corpus-scale runs (normalizing hundreds of thousands of candidate
sentences, n-gram counting over whole corpora). Behaviour must stay
bit-identical to the pure versions.
"""

from cpython.unicode cimport Py_UNICODE_ISALPHA


def collapse_runs(str text):
    cdef Py_ssize_t i = 0, j, n = len(text)
    cdef Py_ssize_t run
    cdef Py_UCS4 ch
    out = []
    flags = []
    cdef Py_ssize_t out_len = 0
    while i < n:
        ch = text[i]
        j = i + 1
        while j < n and <Py_UCS4>text[j] == ch:
            j += 1
        run = j - i
        if run >= 3 and Py_UNICODE_ISALPHA(ch):
            flags.append((out_len, run))
            out.append(chr(ch))
            out_len += 1
        else:
            out.append(chr(ch) * run)
            out_len += run
        i = j
    return "".join(out), flags


def ngram_counts(tokens, Py_ssize_t order):
    cdef Py_ssize_t i, n = len(tokens)
    counts = {}
    seq = tuple(tokens)
    for i in range(n - order + 1):
        key = seq[i:i + order]
        if key in counts:
            counts[key] += 1
        else:
            counts[key] = 1
    return counts

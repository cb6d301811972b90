"""Kernel backend selection.

The compiled extension is preferred when importable; setting the
environment variable ``RASMI_PURE=1`` forces the pure-Python fallback
(useful for benchmarking and debugging).
"""

from __future__ import annotations

import os

if os.environ.get("RASMI_PURE"):
    from rasmi.kernels._pure import collapse_runs, ngram_counts

    BACKEND = "pure"
else:
    try:
        from rasmi.kernels._speedups import collapse_runs, ngram_counts

        BACKEND = "c"
    except ImportError:
        from rasmi.kernels._pure import collapse_runs, ngram_counts

        BACKEND = "pure"

__all__ = ["collapse_runs", "ngram_counts", "BACKEND"]

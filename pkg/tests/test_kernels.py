"""The compiled and pure kernel backends must agree exactly."""

import pytest
from hypothesis import given, strategies as st

from rasmi.kernels import BACKEND
from rasmi.kernels import _pure

try:
    from rasmi.kernels import _speedups
except ImportError:
    _speedups = None

needs_ext = pytest.mark.skipif(_speedups is None, reason="C extension not built")


@needs_ext
@given(st.text(max_size=120))
def test_collapse_runs_backends_agree(text):
    assert _speedups.collapse_runs(text) == _pure.collapse_runs(text)


@needs_ext
@given(st.lists(st.text(alphabet="abcابپ", min_size=1, max_size=4), max_size=20),
       st.integers(min_value=1, max_value=4))
def test_ngram_counts_backends_agree(tokens, order):
    assert _speedups.ngram_counts(tokens, order) == _pure.ngram_counts(tokens, order)


def test_extension_is_active_by_default():
    if _speedups is not None:
        assert BACKEND == "c"

"""rasmi: informal-to-formal Persian conversion and corpus tooling."""

__version__ = "0.1.0"

from rasmi.alignment import AlignmentLink
from rasmi.textcore import NormalizedText, Token, normalize_text, tokenize

__all__ = [
    "AlignmentLink",
    "NormalizedText",
    "Token",
    "normalize_text",
    "tokenize",
    "__version__",
]

"""Small text helpers shared by several stages."""

from __future__ import annotations

import unicodedata


def collapse_whitespace(text: str) -> str:
    """Collapse runs of whitespace to single spaces and strip the ends."""
    return " ".join(text.split())


def normalize_paragraphs(text: str) -> str:
    """Apply the raw-document text invariants to ``text``.

    Carriage returns are removed, each line is whitespace-collapsed, and
    empty lines are dropped, so the result has no leading/trailing/double
    newlines.
    """
    lines = []
    for line in text.replace("\r", "\n").split("\n"):
        line = collapse_whitespace(line)
        if line:
            lines.append(line)
    return "\n".join(lines)


def tokens(text: str) -> list[str]:
    """Whitespace tokens (wc-style maximal non-whitespace runs)."""
    return text.split()


def alpha_tokens(text: str) -> list[str]:
    """Case-folded runs of alphabetic characters, for dictionary lookups."""
    out = []
    current = []
    for ch in text:
        if ch.isalpha():
            current.append(ch)
        elif current:
            out.append("".join(current).casefold())
            current = []
    if current:
        out.append("".join(current).casefold())
    return out


def strip_punctuation(text: str) -> str:
    """Remove Unicode punctuation and re-collapse whitespace.

    Case is preserved; this is the key normalization for pair-level
    de-duplication and overlap counting.
    """
    kept = []
    for ch in text:
        if unicodedata.category(ch).startswith("P"):
            continue
        kept.append(ch)
    return collapse_whitespace("".join(kept))


def alpha_fraction(text: str) -> float:
    """Fraction of characters that are alphabetic; 0.0 for empty text."""
    if not text:
        return 0.0
    alpha = sum(1 for ch in text if ch.isalpha())
    return alpha / len(text)

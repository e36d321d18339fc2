"""Record types carried between pipeline stages, and their serializations.

The JSONL document schema is fixed: field order, nesting and the
2-decimal string rendering of fluency scores are part of the release
format (see docs/formats.md) and are asserted by tests, so serialization
lives here next to the types instead of being left to callers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .hashing import fnv1a_hex


@dataclass
class RawDoc:
    """One extracted web page: input to both pipelines.

    ``text`` holds paragraphs joined by single newlines, with no HTML,
    no carriage returns, no empty paragraphs and whitespace collapsed
    within each paragraph.
    """

    url: str
    collection: str
    doc_lang: str
    text: str

    def paragraphs(self) -> list[str]:
        return self.text.split("\n") if self.text else []


@dataclass
class MonoRecord:
    """A released monolingual JSONL document with per-paragraph metadata."""

    id: int
    document_lang: str
    scores: list[str]
    langs: list[str]
    text: str
    url: str
    collection: str

    def to_json(self) -> str:
        # Field order is part of the format; scores stay strings.
        obj = {
            "id": self.id,
            "document_lang": self.document_lang,
            "scores": self.scores,
            "langs": self.langs,
            "text": self.text,
            "url": self.url,
            "collection": self.collection,
        }
        return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "MonoRecord":
        obj = json.loads(line)
        return cls(
            id=obj["id"],
            document_lang=obj["document_lang"],
            scores=list(obj["scores"]),
            langs=list(obj["langs"]),
            text=obj["text"],
            url=obj["url"],
            collection=obj["collection"],
        )

    def paragraphs(self) -> list[str]:
        return self.text.split("\n") if self.text else []


def format_score(value: float) -> str:
    """Fluency scores are released as 2-decimal strings, e.g. "0.76"."""
    return f"{value:.2f}"


@dataclass
class SentencePair:
    """A mined bilingual segment pair with release metadata.

    ``text_src`` is always the English side. Checksums are 16-hex FNV-1a
    values of each original sentence; segments merged by the aligner
    carry one checksum per component joined with "+".
    """

    text_src: str
    text_trg: str
    score: float
    urls_src: set[str] = field(default_factory=set)
    urls_trg: set[str] = field(default_factory=set)
    collections: set[str] = field(default_factory=set)
    alignment_type: str = "1:1"
    checksum_src: str = ""
    checksum_trg: str = ""

    def with_checksums(self) -> "SentencePair":
        """Fill missing checksums from the segment texts (1:1 case)."""
        if not self.checksum_src:
            self.checksum_src = fnv1a_hex(self.text_src)
        if not self.checksum_trg:
            self.checksum_trg = fnv1a_hex(self.text_trg)
        return self


def pair_sort_key(pair: SentencePair) -> tuple:
    """Deterministic ordering for released pair streams."""
    return (pair.text_src, pair.text_trg, sorted(pair.urls_src), sorted(pair.urls_trg))

"""Plain-text extraction from HTML payloads.

A tolerant tag-level scan (html.parser, no DOM) in which a fixed,
configurable set of block-level tags introduces paragraph breaks and
everything inline flows together. Script/style/noscript/template content
is dropped. The result obeys the raw-document text invariants: paragraphs
separated by single newlines, whitespace collapsed, nothing empty.
"""

from __future__ import annotations

import codecs
import re
from collections import Counter
from html.parser import HTMLParser

from ..textutil import collapse_whitespace, normalize_paragraphs

# Tags whose start or end closes the current paragraph. Derived from the
# HTML block-level element list; <br> is included because it visually
# breaks a line even though it is void.
BLOCK_TAGS = frozenset(
    """
    address article aside blockquote br caption dd div dl dt fieldset
    figcaption figure footer form h1 h2 h3 h4 h5 h6 header hr li main nav
    ol p pre section table tbody td tfoot th thead title tr ul
    """.split()
)

SKIP_TAGS = frozenset({"script", "style", "noscript", "template"})

_META_CHARSET = re.compile(
    rb"""<meta[^>]+charset\s*=\s*["']?\s*([a-zA-Z0-9_\-]+)""", re.IGNORECASE
)
_CHARSET_PARAM = re.compile(r"""charset\s*=\s*["']?\s*([a-zA-Z0-9_\-]+)""", re.IGNORECASE)


class _ParagraphCollector(HTMLParser):
    def __init__(self, block_tags: frozenset[str]):
        super().__init__(convert_charrefs=True)
        self.block_tags = block_tags
        self.skip_depth = 0
        self.paragraphs: list[str] = []
        self.current: list[str] = []

    def _flush(self):
        if self.current:
            self.paragraphs.append("".join(self.current))
            self.current = []

    def handle_starttag(self, tag, attrs):
        if tag in SKIP_TAGS:
            self.skip_depth += 1
        if tag in self.block_tags:
            self._flush()

    def handle_endtag(self, tag):
        if tag in SKIP_TAGS and self.skip_depth > 0:
            self.skip_depth -= 1
        if tag in self.block_tags:
            self._flush()

    def handle_startendtag(self, tag, attrs):
        if tag in self.block_tags:
            self._flush()

    def handle_data(self, data):
        if self.skip_depth == 0 and data:
            self.current.append(data)

    def close(self):
        super().close()
        self._flush()


def detect_charset(payload: bytes, content_type: str = "") -> str:
    """Charset from BOM, HTTP content type or meta tag; UTF-8 otherwise."""
    if payload.startswith(codecs.BOM_UTF8):
        return "utf-8-sig"
    if payload.startswith(codecs.BOM_UTF16_LE) or payload.startswith(codecs.BOM_UTF16_BE):
        return "utf-16"
    m = _CHARSET_PARAM.search(content_type or "")
    if m:
        return m.group(1)
    m = _META_CHARSET.search(payload[:4096])
    if m:
        return m.group(1).decode("ascii", "replace")
    return "utf-8"


def decode_payload(payload: bytes, content_type: str = "") -> str:
    charset = detect_charset(payload, content_type)
    try:
        codecs.lookup(charset)
    except LookupError:
        charset = "utf-8"
    try:
        return payload.decode(charset, errors="replace")
    except Exception:
        return payload.decode("utf-8", errors="replace")


def extract_text(
    payload: bytes,
    content_type: str = "",
    block_tags: frozenset[str] = BLOCK_TAGS,
    counters: Counter | None = None,
) -> str:
    """Extract newline-separated paragraph text from an HTML payload.

    Plain-text payloads (no tags) pass through paragraph normalization
    unchanged, which also makes the function idempotent on its own
    output. Returns "" when no text remains.
    """
    counters = counters if counters is not None else Counter()
    try:
        html = decode_payload(payload, content_type)
    except Exception:
        counters["extract.undecodable"] += 1
        return ""

    # Plain text has no markup to scan; its lines already are paragraphs.
    if content_type.split(";")[0].strip().lower() == "text/plain":
        text = normalize_paragraphs(html)
        if not text:
            counters["extract.empty"] += 1
        return text

    collector = _ParagraphCollector(block_tags)
    try:
        collector.feed(html)
        collector.close()
    except Exception:
        counters["extract.parser_error"] += 1

    lines = []
    for paragraph in collector.paragraphs:
        cleaned = collapse_whitespace(paragraph.replace("\r", " "))
        if cleaned:
            lines.append(cleaned)
    if not lines:
        counters["extract.empty"] += 1
    return "\n".join(lines)

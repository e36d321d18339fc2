"""Fast preliminary record filtering on URL, MIME type and tag markers.

This gate is intentionally coarse: it only rejects records that are
clearly not wanted (binary MIME, blocklisted URL, a robots-noindex
marker in the payload head). Anything undecidable passes; later stages
do the thorough filtering.
"""

from __future__ import annotations

import re
from urllib.parse import urlsplit

from .warc import WarcRecord

TEXT_MIME_PREFIXES = ("text/html", "application/xhtml+xml", "text/plain")

# Payload-head markers that flag a page as undesirable. The exact set is
# configuration, not contract; the default catches robots noindex metas.
DEFAULT_TAG_MARKERS = (
    re.compile(rb"""<meta[^>]+name\s*=\s*["']?robots["']?[^>]*noindex""", re.IGNORECASE),
)
_HEAD_BYTES = 4096


class UrlPatternList:
    """URL patterns: bare hosts match by host suffix, else by URL prefix.

    Host matching is case-insensitive and label-aligned, so ``example.com``
    matches ``www.example.com`` but not ``notexample.com``.
    """

    def __init__(self, patterns: list[str] | None = None):
        self.hosts: set[str] = set()
        self.prefixes: list[str] = []
        for pattern in patterns or []:
            pattern = pattern.strip()
            if not pattern or pattern.startswith("#"):
                continue
            if "/" in pattern:
                self.prefixes.append(pattern)
            else:
                self.hosts.add(pattern.lower())

    @classmethod
    def from_file(cls, path) -> "UrlPatternList":
        with open(path, encoding="utf-8") as fh:
            return cls(fh.read().splitlines())

    def __len__(self) -> int:
        return len(self.hosts) + len(self.prefixes)

    def matches(self, url: str) -> bool:
        try:
            host = (urlsplit(url).hostname or "").lower()
        except ValueError:
            host = ""
        if host:
            parts = host.split(".")
            for i in range(len(parts)):
                if ".".join(parts[i:]) in self.hosts:
                    return True
        bare = url.split("://", 1)[-1]
        for prefix in self.prefixes:
            if url.startswith(prefix) or bare.startswith(prefix):
                return True
        return False


def prefilter(
    record: WarcRecord,
    url_blocklist: UrlPatternList | None = None,
    tag_markers: tuple[re.Pattern, ...] = DEFAULT_TAG_MARKERS,
) -> bool:
    """True when the response record should continue down the pipeline."""
    if url_blocklist is not None and url_blocklist.matches(record.target_url):
        return False
    mime = record.content_type.split(";")[0].strip().lower()
    if mime and not mime.startswith(TEXT_MIME_PREFIXES):
        return False
    head = record.payload[:_HEAD_BYTES]
    for marker in tag_markers:
        if marker.search(head):
            return False
    return True

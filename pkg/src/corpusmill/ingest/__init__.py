"""WARC ingest: record reading, prefiltering, text extraction, raw output."""

from .warc import WarcFormatError, WarcRecord, read_warc, write_warc
from .extract import extract_text
from .prefilter import UrlPatternList, prefilter
from .emit import emit_raw

__all__ = [
    "WarcFormatError",
    "WarcRecord",
    "read_warc",
    "write_warc",
    "extract_text",
    "UrlPatternList",
    "prefilter",
    "emit_raw",
]

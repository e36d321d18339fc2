"""Minimal streaming WARC 1.0/1.1 reader and a writer for fixtures.

The reader is deliberately tolerant: a malformed record is skipped (it
resyncs on the next ``WARC/1.x`` version line) and counted rather than
aborting the whole file, because a single broken capture in a multi-GB
crawl file must not cost the rest of the file. Only an unreadable stream
head is fatal. A truncated final record produces a warning counter and a
clean stop.

Response records normally wrap a full HTTP response
(``Content-Type: application/http``); the reader strips the HTTP envelope
so ``payload`` is the entity body and ``content_type`` the payload MIME.
"""

from __future__ import annotations

import gzip
import io
import logging
from collections import Counter
from dataclasses import dataclass
from typing import BinaryIO, Iterator

log = logging.getLogger(__name__)

CRLF = b"\r\n"


class WarcFormatError(Exception):
    """The stream does not look like WARC at all."""


@dataclass
class WarcRecord:
    record_type: str  # "response" or "other"
    target_url: str
    content_type: str
    payload: bytes
    collection: str = ""


def _open_maybe_gzip(source: BinaryIO) -> BinaryIO:
    buffered = io.BufferedReader(source)  # type: ignore[arg-type]
    head = buffered.peek(2)[:2]
    if head == b"\x1f\x8b":
        # GzipFile reads concatenated members, so member-per-record and
        # whole-file compression look the same here.
        return io.BufferedReader(gzip.GzipFile(fileobj=buffered))  # type: ignore[arg-type]
    return buffered


def _read_header_block(stream: BinaryIO, first_line: bytes) -> dict[str, str] | None:
    """Parse WARC named fields until the blank line; None when malformed."""
    if not first_line.startswith(b"WARC/1."):
        return None
    headers: dict[str, str] = {}
    while True:
        line = stream.readline()
        if not line:
            return None  # EOF inside header block
        if line in (CRLF, b"\n"):
            return headers
        if b":" not in line:
            return None
        name, _, value = line.partition(b":")
        headers[name.decode("ascii", "replace").strip().lower()] = (
            value.decode("utf-8", "replace").strip()
        )


def _split_http_payload(block: bytes) -> tuple[str, bytes]:
    """Return (mime type, body) from an HTTP response block."""
    sep = block.find(b"\r\n\r\n")
    if sep < 0:
        sep = block.find(b"\n\n")
        if sep < 0:
            return "", block
        head, body = block[:sep], block[sep + 2 :]
    else:
        head, body = block[:sep], block[sep + 4 :]
    content_type = ""
    for line in head.split(b"\n")[1:]:  # skip the status line
        if b":" not in line:
            continue
        name, _, value = line.partition(b":")
        if name.strip().lower() == b"content-type":
            content_type = value.decode("utf-8", "replace").strip()
            break
    return content_type, body


def read_warc(
    source: BinaryIO,
    collection: str = "",
    counters: Counter | None = None,
) -> Iterator[WarcRecord]:
    """Yield records from a possibly-gzipped WARC stream in file order.

    Raises :class:`WarcFormatError` if the stream head is not WARC.
    """
    counters = counters if counters is not None else Counter()
    stream = _open_maybe_gzip(source)

    line = stream.readline()
    if not line:
        return  # empty stream: vacuously fine
    if not line.startswith(b"WARC/1."):
        raise WarcFormatError("stream does not start with a WARC/1.x version line")

    while line:
        headers = _read_header_block(stream, line)
        if headers is None or "content-length" not in headers:
            counters["warc.malformed_record"] += 1
            log.warning("malformed WARC record header, resyncing")
            line = _resync(stream)
            continue
        try:
            length = int(headers["content-length"])
        except ValueError:
            counters["warc.malformed_record"] += 1
            line = _resync(stream)
            continue

        block = stream.read(length)
        if len(block) < length:
            counters["warc.truncated_record"] += 1
            log.warning("truncated final WARC record, stopping")
            return

        record_type = headers.get("warc-type", "").lower()
        if record_type == "response":
            content_type = headers.get("content-type", "")
            payload = block
            if content_type.lower().startswith("application/http"):
                content_type, payload = _split_http_payload(block)
            yield WarcRecord(
                record_type="response",
                target_url=headers.get("warc-target-uri", ""),
                content_type=content_type,
                payload=payload,
                collection=collection,
            )
        else:
            counters["warc.non_response"] += 1
            yield WarcRecord(
                record_type="other",
                target_url=headers.get("warc-target-uri", ""),
                content_type=headers.get("content-type", ""),
                payload=block,
                collection=collection,
            )
        counters["warc.records"] += 1

        line = _skip_record_gap(stream)


def _skip_record_gap(stream: BinaryIO) -> bytes:
    """Consume the blank lines between records, return the next version line."""
    while True:
        line = stream.readline()
        if not line:
            return b""
        if line in (CRLF, b"\n"):
            continue
        return line


def _resync(stream: BinaryIO) -> bytes:
    while True:
        line = stream.readline()
        if not line:
            return b""
        if line.startswith(b"WARC/1."):
            return line


def write_warc(
    out: BinaryIO,
    records: list[tuple[str, str, str, bytes]],
    gzip_members: bool = False,
) -> None:
    """Write (record_type, url, content_type, payload) tuples as WARC 1.0.

    Response payloads get an HTTP/1.1 envelope, mirroring real crawls.
    Used to build synthetic crawls for demos and tests; not a release
    surface.
    """
    for record_type, url, content_type, payload in records:
        if record_type == "response":
            http = (
                b"HTTP/1.1 200 OK\r\n"
                + f"Content-Type: {content_type}\r\n".encode("ascii")
                + f"Content-Length: {len(payload)}\r\n\r\n".encode("ascii")
                + payload
            )
            block = http
            block_type = "application/http; msgtype=response"
        else:
            block = payload
            block_type = content_type or "application/octet-stream"
        head = (
            b"WARC/1.0\r\n"
            + f"WARC-Type: {record_type}\r\n".encode("ascii")
            + (f"WARC-Target-URI: {url}\r\n".encode("ascii") if url else b"")
            + f"Content-Type: {block_type}\r\n".encode("ascii")
            + f"Content-Length: {len(block)}\r\n\r\n".encode("ascii")
        )
        member = head + block + b"\r\n\r\n"
        if gzip_members:
            buf = io.BytesIO()
            with gzip.GzipFile(fileobj=buf, mode="wb", mtime=0) as gz:
                gz.write(member)
            out.write(buf.getvalue())
        else:
            out.write(member)

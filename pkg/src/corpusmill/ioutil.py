"""Deterministic file I/O helpers.

Output corpora must be byte-identical across runs and platforms, so all
gzip members are written with a zeroed mtime and no embedded filename,
and JSON reports are serialized with sorted keys.
"""

from __future__ import annotations

import gzip
import io
import json
import os
from pathlib import Path
from typing import Iterable, Iterator, TextIO


def gzip_writer(path: str | os.PathLike, text: bool = True):
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    raw = open(path, "wb")
    gz = gzip.GzipFile(filename="", mode="wb", fileobj=raw, mtime=0)
    if text:
        return io.TextIOWrapper(gz, encoding="utf-8", newline="\n")
    return gz


def gzip_reader(path: str | os.PathLike, text: bool = True):
    gz = gzip.open(path, "rb")
    if text:
        return io.TextIOWrapper(gz, encoding="utf-8", newline="\n")
    return gz


def open_maybe_gzip(path: str | os.PathLike, text: bool = True):
    if str(path).endswith(".gz"):
        return gzip_reader(path, text=text)
    return open(path, "r", encoding="utf-8") if text else open(path, "rb")


def write_lines(path: str | os.PathLike, lines: Iterable[str]) -> int:
    """Write one value per line into a gzip column file; returns line count."""
    count = 0
    with gzip_writer(path) as fh:
        for line in lines:
            fh.write(line)
            fh.write("\n")
            count += 1
    return count


def read_lines(path: str | os.PathLike) -> Iterator[str]:
    with open_maybe_gzip(path) as fh:
        for line in fh:
            yield line.rstrip("\n")


def write_json(path: str | os.PathLike, obj) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, ensure_ascii=False, sort_keys=True, indent=2)
        fh.write("\n")


def read_json(path: str | os.PathLike):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)

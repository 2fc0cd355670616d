"""Reading and writing the prepared-corpus file.

Format contract, shared by every downstream consumer including the
transformer harness: UTF-8, one review per line, ``stars<TAB>text``.
The text field is escaped so it never contains a literal tab or newline:
backslash doubles to ``\\\\``, newline becomes ``\\n``, tab becomes
``\\t``. Files are framed by ``\\n`` only; a stray carriage return inside
a review survives the round trip untouched.
"""

from __future__ import annotations

import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import Iterable, Iterator


def escape_text(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\n", "\\n").replace("\t", "\\t")


def unescape_text(text: str) -> str:
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\\" and i + 1 < n:
            nxt = text[i + 1]
            if nxt == "n":
                out.append("\n")
                i += 2
                continue
            if nxt == "t":
                out.append("\t")
                i += 2
                continue
            if nxt == "\\":
                out.append("\\")
                i += 2
                continue
        out.append(ch)
        i += 1
    return "".join(out)


def format_row(stars: int, text: str) -> str:
    return f"{stars}\t{escape_text(text)}\n"


def parse_row(line: str) -> tuple[int, str]:
    line = line.rstrip("\n")
    stars_str, sep, rest = line.partition("\t")
    if not sep:
        raise ValueError(f"prepared-corpus row has no tab separator: {line[:80]!r}")
    stars = int(stars_str)
    if stars not in (1, 2, 3, 4, 5):
        raise ValueError(f"stars out of range in prepared corpus: {stars}")
    return stars, unescape_text(rest)


def iter_rows(path) -> Iterator[tuple[int, str]]:
    """Stream (stars, text) pairs; memory independent of file size."""
    with open(path, "r", encoding="utf-8", newline="\n") as f:
        for line in f:
            yield parse_row(line)


def read_rows(path) -> list[tuple[int, str]]:
    return list(iter_rows(path))


def iter_labels(path) -> Iterator[int]:
    """Stars column only, skipping the unescape work."""
    with open(path, "r", encoding="utf-8", newline="\n") as f:
        for line in f:
            stars_str, sep, _ = line.partition("\t")
            if not sep:
                raise ValueError(f"prepared-corpus row has no tab separator: {line[:80]!r}")
            yield int(stars_str)


def write_rows(path, rows: Iterable[tuple[int, str]]) -> int:
    """Atomically write rows; returns the number written."""
    n = 0
    with atomic_writer(path) as f:
        for stars, text in rows:
            f.write(format_row(stars, text))
            n += 1
    return n


def scan_offsets(path) -> tuple[list[int], list[int]]:
    """One pass over a prepared file: (byte offset, stars) per row.

    Offsets let split/balance shuffle row indices without holding text
    in memory, then copy rows by seek.
    """
    offsets: list[int] = []
    labels: list[int] = []
    pos = 0
    with open(path, "rb") as f:
        for raw in f:
            offsets.append(pos)
            pos += len(raw)
            stars_bytes = raw.split(b"\t", 1)[0]
            labels.append(int(stars_bytes))
    return offsets, labels


def copy_rows_by_offset(src_path, offsets: list[int], out_path) -> int:
    """Write the rows starting at the given byte offsets, in the given order."""
    with open(src_path, "rb") as src, atomic_writer(out_path, binary=True) as out:
        for off in offsets:
            src.seek(off)
            line = src.readline()
            if not line.endswith(b"\n"):
                line += b"\n"
            out.write(line)
    return len(offsets)


@contextmanager
def atomic_writer(path, binary: bool = False):
    """Write to a temp file in the target directory, rename on success."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    mode = "wb" if binary else "w"
    try:
        with os.fdopen(fd, mode, encoding=None if binary else "utf-8", newline=None if binary else "\n") as f:
            yield f
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise

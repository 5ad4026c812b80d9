"""Plain-text frame files (format FRM1).

Layout::

    FRM1 <rows> <cols>
    # key=value          (zero or more metadata lines)
    <re>:<im> <re>:<im> ...   (one line per row, cols entries each)

Entries use the shortest decimal representation that round-trips the
underlying double, so format -> parse reproduces the matrix bit for bit.
"""

from __future__ import annotations

import os

import numpy as np

from .frames import FrameMatrix


class FrameFormatError(ValueError):
    """Malformed frame file; carries the 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def format_frame(frame: FrameMatrix) -> str:
    lines = [f"FRM1 {frame.rows} {frame.cols}"]
    meta = dict(frame.provenance)
    meta["normalized"] = "true" if frame.normalized else "false"
    for key, value in meta.items():
        if "=" not in key and "\n" not in key and "\n" not in str(value):
            lines.append(f"# {key}={value}")
        else:
            raise ValueError(f"metadata key/value not representable: {key!r}")
    for row in frame.entries:
        lines.append(" ".join(f"{float(z.real)!r}:{float(z.imag)!r}" for z in row))
    return "\n".join(lines) + "\n"


def parse_frame(text: str) -> FrameMatrix:
    lines = text.splitlines()
    if not lines:
        raise FrameFormatError(1, 1, "empty file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "FRM1":
        raise FrameFormatError(1, 1, "expected header 'FRM1 <rows> <cols>'")
    try:
        rows, cols = int(header[1]), int(header[2])
    except ValueError:
        raise FrameFormatError(1, 6, "row/column counts must be integers") from None
    if rows < 1 or cols < 1:
        raise FrameFormatError(1, 6, "row/column counts must be positive")

    meta: dict[str, str] = {}
    body_start = 1
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.startswith("#"):
            break
        body_start = lineno
        payload = line[1:].strip()
        if "=" not in payload:
            raise FrameFormatError(lineno, 2, "metadata line must be '# key=value'")
        key, value = payload.split("=", 1)
        meta[key.strip()] = value
    else:
        body_start = len(lines)
    normalized = meta.pop("normalized", "true") == "true"

    body = lines[body_start:]
    if len(body) != rows:
        raise FrameFormatError(
            body_start + 1, 1, f"expected {rows} data rows, found {len(body)}"
        )
    entries = np.empty((rows, cols), dtype=np.complex128)
    for i, line in enumerate(body):
        tokens = line.split()
        lineno = body_start + 1 + i
        if len(tokens) != cols:
            raise FrameFormatError(
                lineno, 1, f"expected {cols} entries, found {len(tokens)}"
            )
        for j, token in enumerate(tokens):
            parts = token.split(":")
            if len(parts) != 2:
                raise FrameFormatError(lineno, j + 1, f"entry {token!r} is not re:im")
            try:
                entries[i, j] = complex(float(parts[0]), float(parts[1]))
            except ValueError:
                raise FrameFormatError(
                    lineno, j + 1, f"entry {token!r} has non-numeric parts"
                ) from None
    return FrameMatrix(entries, normalized=normalized, provenance=meta)


def write_frame(path: str | os.PathLike, frame: FrameMatrix) -> None:
    with open(path, "w") as fh:
        fh.write(format_frame(frame))


def read_frame(path: str | os.PathLike) -> FrameMatrix:
    with open(path) as fh:
        return parse_frame(fh.read())

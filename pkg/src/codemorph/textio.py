"""Plain-text formats.

``.code`` / ``.bmat``: one row per line of ``0``/``1`` characters, ``#``
comments and blank lines ignored, all rows the same length.  Codes
deduplicate rows, matrices keep them.

Canonical-form files hold one pseudomonomial per line, e.g.
``x2*(1-x1)*(1-x3)``; factor order and whitespace are free.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .bits import DomainError
from .code import Code, as_bitmatrix
from .ideal import CanonicalForm, Pseudomonomial, _sorted


class ParseError(DomainError):
    def __init__(self, message: str, line: int, column: int, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column


def parse_matrix(text: str, source: str = "<input>", width: int | None = None) -> np.ndarray:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        offset = raw.index(line[0]) + 1
        for col, ch in enumerate(line, start=offset):
            if ch not in "01":
                raise ParseError(f"unexpected character {ch!r}", lineno, col, source)
        if width is None:
            width = len(line)
        elif len(line) != width:
            raise ParseError(f"row has length {len(line)}, expected {width}", lineno, offset + len(line), source)
        rows.append([int(ch) for ch in line])
    return np.array(rows, dtype=np.uint8).reshape(len(rows), width or 0)


def parse_code(text: str, source: str = "<input>") -> Code:
    return Code.from_matrix(parse_matrix(text, source))


def read_matrix(path) -> np.ndarray:
    p = Path(path)
    return parse_matrix(p.read_text(), str(p))


def read_code(path) -> Code:
    p = Path(path)
    return parse_code(p.read_text(), str(p))


def format_matrix(M) -> str:
    M = as_bitmatrix(M)
    return "".join("".join(str(int(b)) for b in row) + "\n" for row in M)


def format_code(C: Code) -> str:
    return format_matrix(C.matrix())


_FACTOR = re.compile(r"\s*(?:(x)(\d+)|\(\s*1\s*-\s*x(\d+)\s*\)|(1))\s*")


def parse_pseudomonomial(line: str, lineno: int = 1, source: str = "<input>") -> Pseudomonomial:
    sigma = tau = 0
    pos = 0
    text = line.rstrip()
    expect_factor = True
    while pos < len(text):
        if not expect_factor:
            if text[pos] == "*":
                pos += 1
                expect_factor = True
                continue
            if text[pos].isspace():
                pos += 1
                continue
            raise ParseError(f"expected '*', found {text[pos]!r}", lineno, pos + 1, source)
        m = _FACTOR.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("expected a factor like x3 or (1-x3)", lineno, pos + 1, source)
        if m.group(2):
            i = int(m.group(2)) - 1
            if i < 0:
                raise ParseError("variables are numbered from 1", lineno, pos + 1, source)
            sigma |= 1 << i
        elif m.group(3):
            i = int(m.group(3)) - 1
            if i < 0:
                raise ParseError("variables are numbered from 1", lineno, pos + 1, source)
            tau |= 1 << i
        pos = m.end()
        expect_factor = False
    if expect_factor:
        raise ParseError("missing factor", lineno, pos + 1, source)
    try:
        return Pseudomonomial(sigma, tau)
    except DomainError as exc:
        raise ParseError(str(exc), lineno, 1, source) from None


def parse_cf(text: str, n: int | None = None, source: str = "<input>") -> CanonicalForm:
    elems = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        elems.append(parse_pseudomonomial(line, lineno, source))
    if n is None:
        n = max((p.support.bit_length() for p in elems), default=0)
    return CanonicalForm(_sorted(elems), n)


def format_cf(G) -> str:
    return "".join(str(p) + "\n" for p in G)

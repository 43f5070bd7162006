"""Bitmask helpers shared by every module.

Subsets of ``[n]`` are stored as Python ints: bit ``i`` set means neuron ``i``
(0-based) is present.  The user-facing text form is 1-based, so the set
``{0, 1}`` prints as ``12`` the way codewords are usually written by hand.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np


class DomainError(ValueError):
    """Input violates an operation's precondition."""


class ResourceError(RuntimeError):
    """Input is beyond the size an exact routine is willing to handle.

    ``bounds`` carries whatever cheap information was computed before giving up.
    """

    def __init__(self, message, bounds=None):
        super().__init__(message)
        self.bounds = bounds or {}


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits_of(x: int) -> Iterator[int]:
    """Yield the set bit positions of ``x`` in increasing order."""
    i = 0
    while x:
        if x & 1:
            yield i
        x >>= 1
        i += 1


def as_mask(s) -> int:
    """Accept an int mask or an iterable of 0-based indices."""
    if isinstance(s, (int, np.integer)):
        if s < 0:
            raise DomainError("negative bitmask")
        return int(s)
    m = 0
    for i in s:
        if i < 0:
            raise DomainError(f"negative neuron index {i}")
        m |= 1 << int(i)
    return m


def parse_word(text: str) -> int:
    """Parse the hand-written 1-based form: ``"12"``, ``"{1,2}"``, ``"∅"``.

    Digit strings without separators only work for neurons 1..9; use braces
    with commas beyond that.
    """
    t = text.strip()
    if t in ("", "0", "∅", "{}", "empty"):
        return 0
    if t.startswith("{") and t.endswith("}"):
        parts = [p for p in t[1:-1].replace(" ", "").split(",") if p]
        return as_mask(int(p) - 1 for p in parts)
    if not t.isdigit() or "0" in t:
        raise DomainError(f"cannot parse codeword {text!r}")
    return as_mask(int(ch) - 1 for ch in t)


def format_word(x: int, n: int | None = None) -> str:
    idx = [i + 1 for i in bits_of(x)]
    if not idx:
        return "∅"
    if max(idx) <= 9:
        return "".join(str(i) for i in idx)
    return "{" + ",".join(str(i) for i in idx) + "}"


def mask_to_vec(x: int, n: int) -> np.ndarray:
    return np.array([(x >> i) & 1 for i in range(n)], dtype=np.uint8)


def vec_to_mask(v: Iterable) -> int:
    m = 0
    for i, b in enumerate(v):
        if b:
            m |= 1 << i
    return m


def word_key(x: int):
    """Sort key used for printing codes: by size, then lexicographically."""
    return (popcount(x), [i for i in bits_of(x)])

"""Braid words in B3 and the twisted generalized hybrid weaving family.

A word is a tuple of ``(generator, power)`` letters with generator 1 or 2.
Words are never reduced; the literal input is preserved.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "BraidWord",
    "BraidParseError",
    "TghwParams",
    "parse_word",
    "render_word",
    "parse_params",
    "expand_tghw",
    "exponent_sum",
    "letter_count",
    "invert",
]

Letter = tuple[int, int]


class BraidParseError(ValueError):
    """Malformed braid word or parameter literal; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class BraidWord(tuple):
    """Immutable sequence of ``(generator, power)`` letters."""

    def __new__(cls, letters: Iterable[Sequence[int]] = ()):
        items = []
        for letter in letters:
            gen, power = letter
            if gen not in (1, 2):
                raise ValueError(f"generator index must be 1 or 2, got {gen}")
            if power == 0:
                raise ValueError("letter power must be nonzero")
            items.append((int(gen), int(power)))
        return super().__new__(cls, items)

    def __add__(self, other):
        return BraidWord(tuple.__add__(self, tuple(other)))

    def __mul__(self, k: int):
        return BraidWord(tuple.__mul__(self, k))

    def __getitem__(self, idx):
        out = tuple.__getitem__(self, idx)
        return BraidWord(out) if isinstance(idx, slice) else out

    def __repr__(self) -> str:
        return f"BraidWord({list(self)!r})"

    def __str__(self) -> str:
        return render_word(self)


@dataclass(frozen=True)
class TghwParams:
    """Parameters (m1, m2, n, l) of the closure of (s1^m1 s2^-m2)^n (s1 s2)^(3l)."""

    m1: int
    m2: int
    n: int
    l: int

    def __post_init__(self):
        for name in ("m1", "m2", "n", "l"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"{name} must be an integer")
        if self.m1 < 1 or self.m2 < 1 or self.n < 1:
            raise ValueError(f"m1, m2 and n must be positive, got {self.astuple()}")

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.m1, self.m2, self.n, self.l)

    def as_dict(self) -> dict[str, int]:
        return {"m1": self.m1, "m2": self.m2, "n": self.n, "l": self.l}

    def __str__(self) -> str:
        return ",".join(map(str, self.astuple()))


_TOKEN = re.compile(r"s(\d+)(?:\^([+-]?\d+))?")


def parse_word(text: str) -> BraidWord:
    """Parse whitespace-separated tokens ``s1``, ``s2^-3`` ... into a word."""
    letters = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        tm = _TOKEN.fullmatch(tok)
        if tm is None:
            raise BraidParseError(f"unexpected token {tok!r}", m.start())
        gen = int(tm.group(1))
        if gen not in (1, 2):
            raise BraidParseError(
                f"generator s{gen} out of range, B3 has s1 and s2 only", m.start()
            )
        power = int(tm.group(2)) if tm.group(2) is not None else 1
        if power == 0:
            raise BraidParseError(f"zero power in token {tok!r}", m.start())
        letters.append((gen, power))
    return BraidWord(letters)


def render_word(w: Iterable[Letter]) -> str:
    return " ".join(f"s{g}" if p == 1 else f"s{g}^{p}" for g, p in w)


def parse_params(text: str) -> TghwParams:
    """Parse the ``m1,m2,n,l`` literal."""
    fields = text.strip().split(",")
    if len(fields) != 4:
        raise BraidParseError(f"expected four comma-separated integers m1,m2,n,l, got {text!r}")
    values = []
    offset = 0
    for f in fields:
        if not re.fullmatch(r"\s*[+-]?\d+\s*", f):
            raise BraidParseError(f"not an integer: {f.strip()!r}", offset)
        values.append(int(f))
        offset += len(f) + 1
    try:
        return TghwParams(*values)
    except ValueError as exc:
        raise BraidParseError(str(exc)) from None


def expand_tghw(p: TghwParams) -> BraidWord:
    letters: list[Letter] = [(1, p.m1), (2, -p.m2)] * p.n
    if p.l > 0:
        letters += [(1, 1), (2, 1)] * (3 * p.l)
    elif p.l < 0:
        letters += [(2, -1), (1, -1)] * (3 * -p.l)
    return BraidWord(letters)


def exponent_sum(w: Iterable[Letter]) -> int:
    return sum(p for _, p in w)


def letter_count(w: Iterable[Letter]) -> int:
    """Number of elementary crossings, sum of |power|."""
    return sum(abs(p) for _, p in w)


def invert(w: Iterable[Letter]) -> BraidWord:
    return BraidWord((g, -p) for g, p in reversed(list(w)))

"""Words in named generators with integer exponents.

A word is a finite sequence of letters (generator name, nonzero exponent).
Words are not freely reduced on construction; reduction is explicit.
Text syntax: whitespace-separated tokens ``sym`` or ``sym^k`` with k a
nonzero integer, e.g. ``a b^-1 a^3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import WordFormatError

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
TOKEN_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")

Letter = tuple[str, int]


@dataclass(frozen=True)
class Word:
    """Immutable word; ``letters`` holds (name, exponent) pairs, exponents nonzero."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for item in self.letters:
            if not (isinstance(item, tuple) and len(item) == 2):
                raise WordFormatError(f"bad letter {item!r}")
            name, exp = item
            if not (isinstance(name, str) and NAME_RE.fullmatch(name)):
                raise WordFormatError(f"bad generator name {name!r}")
            if not isinstance(exp, int) or exp == 0:
                raise WordFormatError(f"exponent of {name} must be a nonzero integer")

    @classmethod
    def from_text(cls, text: str) -> "Word":
        """Parse ``a b^-1 a^3``. The empty string is the empty word.

        >>> Word.from_text("a b^-1").letters
        (('a', 1), ('b', -1))
        """
        letters = []
        for token in text.split():
            m = TOKEN_RE.fullmatch(token)
            if not m:
                raise WordFormatError(f"bad word token {token!r}")
            exp = int(m.group(2)) if m.group(2) is not None else 1
            if exp == 0:
                raise WordFormatError(f"zero exponent in token {token!r}")
            letters.append((m.group(1), exp))
        return cls(tuple(letters))

    @classmethod
    def generator(cls, name: str, exp: int = 1) -> "Word":
        return cls(((name, exp),))

    def to_text(self) -> str:
        return " ".join(n if e == 1 else f"{n}^{e}" for n, e in self.letters)

    def __str__(self) -> str:
        return self.to_text()

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        if k == 0:
            return Word()
        base = self if k > 0 else self.inverse()
        return Word(base.letters * abs(k))

    def inverse(self) -> "Word":
        return Word(tuple((n, -e) for n, e in reversed(self.letters)))

    def free_reduce(self) -> "Word":
        """Merge adjacent letters on the same generator, dropping zero exponents."""
        out: list[list] = []
        for name, exp in self.letters:
            if out and out[-1][0] == name:
                out[-1][1] += exp
                if out[-1][1] == 0:
                    out.pop()
            else:
                out.append([name, exp])
        return Word(tuple((n, e) for n, e in out))

    def units(self) -> Iterator[tuple[str, int]]:
        """Yield single steps (name, +1 or -1), expanding exponents."""
        for name, exp in self.letters:
            sign = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield name, sign

    def exponent_sums(self) -> dict[str, int]:
        sums: dict[str, int] = {}
        for name, exp in self.letters:
            sums[name] = sums.get(name, 0) + exp
        return {n: e for n, e in sums.items() if e != 0}

    def support(self) -> frozenset[str]:
        return frozenset(n for n, _ in self.letters)

    def syllable_length(self) -> int:
        return sum(abs(e) for _, e in self.letters)


def alternating(u: str, v: str, n: int) -> Word:
    """The length-n alternating word u v u v ... starting with u.

    >>> alternating("a", "b", 3).to_text()
    'a b a'
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    pair = (u, v)
    return Word(tuple((pair[i % 2], 1) for i in range(n)))


def rename_word(w: Word, mapping: dict[str, str]) -> Word:
    return Word(tuple((mapping.get(n, n), e) for n, e in w.letters))

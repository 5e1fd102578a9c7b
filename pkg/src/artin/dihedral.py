"""The word problem in dihedral Artin groups, solved by normal forms.

The dihedral Artin group on label n is generated by a, b subject to the
equality of the two length-n alternating words. Its centre is generated
by z = Delta^2 for odd n and z = Delta for even n, where Delta is the
alternating word of length n starting with a.

Change of generators, writing m = n // 2:

* odd n:  x = alternating(a, b, n), y = a b. The group becomes the
  amalgam <x, y | x^2 = y^n>, with a = y^-h x and b = x^-1 y^(h+1) for
  h = (n - 1) // 2. The centre is generated by c = x^2 = y^n.
* even n: x = a, y = a b. The group becomes the HNN extension
  <x, y | x y^m x^-1 = y^m>, with a = x and b = x^-1 y. The centre is
  generated by z = y^m.

Killing the centre leaves a free product (Z/2 * Z/n for odd n, Z/m * Z
for even n, with x spanning the infinite factor). Group elements
correspond bijectively to pairs (central exponent, reduced syllable
sequence in the free product); the engines below maintain that pair one
letter at a time, which solves the word problem. Label 2 is Z^2 and is
handled by exponent pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import PreconditionError, WordFormatError
from .words import Word, alternating

GENERATORS = ("a", "b")


@dataclass(frozen=True)
class OddNormalForm:
    """Central exponent of c = x^2 = y^n plus a reduced word in Z/2 * Z/n."""

    label: int
    central: int
    syllables: tuple[tuple[str, int], ...]

    def __str__(self) -> str:
        parts = [f"c^{self.central}"] if self.central else []
        parts += ["x" if s == "x" else f"y^{e}" if e != 1 else "y" for s, e in self.syllables]
        return " ".join(parts) if parts else "1"


@dataclass(frozen=True)
class EvenNormalForm:
    """Central exponent of z = y^m plus a reduced word in Z/m * Z.

    Syllables alternate between ("y", r) with 0 < r < m and ("x", t)
    with t nonzero. Printing folds the centre into a trailing power
    of y, giving the Britton-reduced shape y^s0 x^t1 y^s1 ... y^s_last.
    """

    label: int
    central: int
    syllables: tuple[tuple[str, int], ...]

    def __str__(self) -> str:
        m = self.label // 2
        parts = []
        tail = self.central * m
        body = self.syllables
        if body and body[-1][0] == "y":
            tail += body[-1][1]
            body = body[:-1]
        for s, e in body:
            parts.append(s if e == 1 else f"{s}^{e}")
        if tail:
            parts.append(f"y^{tail}" if tail != 1 else "y")
        return " ".join(parts) if parts else "1"


@dataclass(frozen=True)
class AbelianNormalForm:
    """Exponent pair in Z^2, the label 2 case."""

    label: int
    a_exp: int
    b_exp: int

    def __str__(self) -> str:
        parts = []
        if self.a_exp:
            parts.append(f"a^{self.a_exp}" if self.a_exp != 1 else "a")
        if self.b_exp:
            parts.append(f"b^{self.b_exp}" if self.b_exp != 1 else "b")
        return " ".join(parts) if parts else "1"


NormalForm = Union[OddNormalForm, EvenNormalForm, AbelianNormalForm]


@dataclass(frozen=True)
class GarsideData:
    label: int
    delta: Word
    z: Word


def _check_word(w: Word):
    stray = w.support() - set(GENERATORS)
    if stray:
        raise WordFormatError(
            f"dihedral words use generators a, b only; got {sorted(stray)}"
        )


def _check_label(n: int):
    if not isinstance(n, int) or n < 2:
        raise PreconditionError("edge labels start at 2")


class _OddEngine:
    """Reduced form in Z/2 * Z/n with the central exponent of c tracked."""

    def __init__(self, n: int):
        self.n = n
        self.central = 0
        self.stack: list[list] = []

    def push(self, sym: str, exp: int):
        if self.stack and self.stack[-1][0] == sym:
            self.stack[-1][1] += exp
        else:
            self.stack.append([sym, exp])
        modulus = 2 if sym == "x" else self.n
        e = self.stack[-1][1]
        r = e % modulus
        self.central += (e - r) // modulus
        if r == 0:
            self.stack.pop()
        else:
            self.stack[-1][1] = r

    def result(self, label: int) -> OddNormalForm:
        return OddNormalForm(label, self.central, tuple((s, e) for s, e in self.stack))


class _EvenEngine:
    """Reduced form in Z/m * Z with the central exponent of z = y^m tracked."""

    def __init__(self, m: int):
        self.m = m
        self.central = 0
        self.stack: list[list] = []

    def _settle_y(self):
        top = self.stack[-1]
        r = top[1] % self.m
        self.central += (top[1] - r) // self.m
        if r == 0:
            self.stack.pop()
        else:
            top[1] = r

    def push(self, sym: str, exp: int):
        if sym == "y":
            if self.stack and self.stack[-1][0] == "y":
                self.stack[-1][1] += exp
                if self.stack[-1][1] == 0:
                    self.stack.pop()
            else:
                self.stack.append(["y", exp])
            return
        if self.stack and self.stack[-1][0] == "y":
            self._settle_y()
        if self.stack and self.stack[-1][0] == "x":
            self.stack[-1][1] += exp
            if self.stack[-1][1] == 0:
                self.stack.pop()
        else:
            self.stack.append(["x", exp])

    def result(self, label: int) -> EvenNormalForm:
        if self.stack and self.stack[-1][0] == "y":
            self._settle_y()
        return EvenNormalForm(label, self.central, tuple((s, e) for s, e in self.stack))


def normal_form(n: int, w: Word) -> NormalForm:
    """Normal form of a word over a, b in the dihedral group on label n.

    >>> str(normal_form(3, Word.from_text("a b a b^-1 a^-1 b^-1")))
    '1'
    >>> str(normal_form(3, Word.from_text("a b")))
    'y'
    """
    _check_label(n)
    _check_word(w)
    if n == 2:
        sums = w.exponent_sums()
        return AbelianNormalForm(2, sums.get("a", 0), sums.get("b", 0))
    if n % 2 == 1:
        h = (n - 1) // 2
        eng = _OddEngine(n)
        for name, exp in w.letters:
            steps = abs(exp)
            if name == "a":
                seq = ((("y", -h), ("x", 1)) if exp > 0 else (("x", -1), ("y", h)))
            else:
                seq = ((("x", -1), ("y", h + 1)) if exp > 0 else (("y", -h - 1), ("x", 1)))
            for _ in range(steps):
                for s, e in seq:
                    eng.push(s, e)
        return eng.result(n)
    meng = _EvenEngine(n // 2)
    for name, exp in w.letters:
        if name == "a":
            meng.push("x", exp)
            continue
        seq = (("x", -1), ("y", 1)) if exp > 0 else (("y", -1), ("x", 1))
        for _ in range(abs(exp)):
            for s, e in seq:
                meng.push(s, e)
    return meng.result(n)


def words_equal(n: int, u: Word, v: Word) -> bool:
    """Whether two words represent the same element.

    >>> words_equal(4, Word.from_text("a b a b"), Word.from_text("b a b a"))
    True
    """
    return normal_form(n, u) == normal_form(n, v)


def is_central(n: int, w: Word) -> bool:
    """Whether the word commutes with both generators."""
    a = Word.generator("a")
    b = Word.generator("b")
    return words_equal(n, w * a, a * w) and words_equal(n, w * b, b * w)


def garside(n: int) -> GarsideData:
    """The Garside element Delta and the centre generator z."""
    _check_label(n)
    delta = alternating("a", "b", n)
    z = delta if n % 2 == 0 else delta ** 2
    return GarsideData(n, delta, z)


def delta_conjugates_generators(n: int) -> bool:
    """For odd n, conjugation by Delta swaps the generators."""
    _check_label(n)
    if n % 2 == 0:
        raise PreconditionError("generator swap under Delta is an odd-label property")
    delta = alternating("a", "b", n)
    a = Word.generator("a")
    b = Word.generator("b")
    return words_equal(n, delta * a * delta.inverse(), b) and words_equal(
        n, delta * b * delta.inverse(), a
    )


def as_defining_generators(nf: NormalForm) -> Word:
    """Rewrite a normal form as a word over a, b again."""
    n = nf.label
    if isinstance(nf, AbelianNormalForm):
        out = Word()
        if nf.a_exp:
            out = out * Word.generator("a", nf.a_exp)
        if nf.b_exp:
            out = out * Word.generator("b", nf.b_exp)
        return out
    if isinstance(nf, OddNormalForm):
        x = alternating("a", "b", n)
        c = x ** 2
    else:
        x = Word.generator("a")
        c = alternating("a", "b", n)
    y = Word.from_text("a b")
    out = c ** nf.central
    for s, e in nf.syllables:
        out = out * ((x if s == "x" else y) ** e)
    return out


def membership_a_z(n: int, w: Word) -> tuple[int, int] | None:
    """Solve membership of w in the subgroup <a, z>, for even n >= 4.

    Returns (i, j) with w = a^i z^j when w lies in the subgroup, else
    None. In normal form coordinates <a, z> is exactly the set of forms
    with at most one syllable, a power of x.
    """
    _check_label(n)
    if n % 2 or n < 4:
        raise PreconditionError("membership in <a, z> is an even-label operation")
    nf = normal_form(n, w)
    if not nf.syllables:
        return (0, nf.central)
    if len(nf.syllables) == 1 and nf.syllables[0][0] == "x":
        return (nf.syllables[0][1], nf.central)
    return None


def reduced_words(max_len: int) -> Iterator[Word]:
    """Freely reduced nonempty words over a, b up to the given length."""
    units = [("a", 1), ("a", -1), ("b", 1), ("b", -1)]

    def extend(prefix: list):
        if prefix:
            yield Word(tuple(prefix))
        if len(prefix) == max_len:
            return
        for name, exp in units:
            if prefix and prefix[-1][0] == name and prefix[-1][1] == -exp:
                continue
            prefix.append((name, exp))
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def root_bound_search(n: int, max_len: int, max_degree: int) -> tuple:
    """Search for primitive elements of <a, z> with roots of degree above m.

    For even n = 2m, scans all freely reduced words w up to max_len
    (deduplicated by normal form) and all degrees m < k <= max_degree
    for w^k = a^i z^j with gcd(i, j) = 1. Any hit (w, k, (i, j)) would
    contradict the root bound, so the expected result is empty; degree
    m itself is achieved by r = a b with r^m = z.
    """
    _check_label(n)
    if n % 2 or n < 4:
        raise PreconditionError("the root bound search needs an even label >= 4")
    m = n // 2
    seen: set = set()
    hits = []
    for w in reduced_words(max_len):
        nf = normal_form(n, w)
        key = (nf.central, nf.syllables)
        if key in seen:
            continue
        seen.add(key)
        for k in range(m + 1, max_degree + 1):
            res = membership_a_z(n, w ** k)
            if res is not None and math.gcd(res[0], res[1]) == 1:
                hits.append((w, k, res))
    return tuple(hits)

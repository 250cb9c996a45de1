"""Formal words in the generators E_h^(a), F_h^(a), K_i^e.

A word is a tuple of letters written left to right; as an operator product the
rightmost letter acts first.  E/F letters carry a divided-power exponent
a >= 1 (the a-fold application divided by [a]!); K letters carry an integer
exponent, possibly negative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .linear import LinComb
from .qcoeff import quantum_factorial

E, F, K = "E", "F", "K"


@dataclass(frozen=True)
class GenLetter:
    kind: str
    index: int
    power: int = 1

    def __post_init__(self):
        if self.kind not in (E, F, K):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.index < 1:
            raise ValueError("generator index must be >= 1")
        if self.kind == K:
            if self.power == 0:
                raise ValueError("K letter needs a nonzero exponent")
        elif self.power < 1:
            raise ValueError("divided-power exponent must be >= 1")

    def text(self) -> str:
        if self.kind == K:
            return f"K{self.index}" if self.power == 1 else f"K{self.index}^{self.power}"
        if self.power == 1:
            return f"{self.kind}{self.index}"
        return f"{self.kind}{self.index}^({self.power})"


Word = tuple  # tuple[GenLetter, ...]


def e(h: int, a: int = 1) -> GenLetter:
    return GenLetter(E, h, a)


def f(h: int, a: int = 1) -> GenLetter:
    return GenLetter(F, h, a)


def k(i: int, exp: int = 1) -> GenLetter:
    return GenLetter(K, i, exp)


def word_text(word: Word) -> str:
    return " ".join(letter.text() for letter in word)


_LETTER_RE = re.compile(r"^([EFK])(\d+)(?:\^(?:\((-?\d+)\)|(-?\d+)))?$")


def word_from_text(text: str) -> Word:
    out = []
    for tok in text.split():
        m = _LETTER_RE.match(tok)
        if not m:
            raise ValueError(f"cannot parse generator letter {tok!r}")
        kind, idx, p1, p2 = m.groups()
        power = int(p1 if p1 is not None else p2) if (p1 or p2) else 1
        out.append(GenLetter(kind, int(idx), power))
    return tuple(out)


def apply_word(word: Word, x: LinComb, act) -> LinComb:
    """Apply a word to an element, rightmost letter first.

    act(letter, key) -> LinComb must handle E/F letters of power 1 and K
    letters of arbitrary exponent.
    """
    for letter in reversed(word):
        if x.is_zero():
            return x
        if letter.kind == K or letter.power == 1:
            x = x.bind(lambda key: act(letter, key))
        else:
            single = GenLetter(letter.kind, letter.index, 1)
            for _ in range(letter.power):
                x = x.bind(lambda key: act(single, key))
                if x.is_zero():
                    return x
            x = x.scale(quantum_factorial(letter.power).inv())
    return x

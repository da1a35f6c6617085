"""Braid words and their conversion to Morse diagrams."""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass

from .diagram import EventKind, MorseDiagram, MorseEvent, validate

__all__ = [
    "LetterKind",
    "BraidLetter",
    "BraidWord",
    "BraidParseError",
    "parse_braid",
    "exponent_sum",
    "braid_to_morse",
    "random_braid",
    "closure_permutation",
]


class BraidParseError(ValueError):
    pass


class LetterKind(str, enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"
    VIRTUAL = "v"


@dataclass(frozen=True)
class BraidLetter:
    index: int  # 1-based generator index
    kind: LetterKind

    def __str__(self) -> str:
        if self.kind is LetterKind.VIRTUAL:
            return f"v{self.index}"
        return f"s{self.index}" + ("^-1" if self.kind is LetterKind.NEGATIVE else "")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 1:
            raise BraidParseError("a braid needs at least one strand")
        for letter in self.letters:
            if not 1 <= letter.index < self.strands:
                raise BraidParseError(
                    f"generator index {letter.index} out of range for {self.strands} strands"
                )

    @property
    def is_classical(self) -> bool:
        return all(l.kind is not LetterKind.VIRTUAL for l in self.letters)

    def inverse(self) -> BraidWord:
        flip = {LetterKind.POSITIVE: LetterKind.NEGATIVE, LetterKind.NEGATIVE: LetterKind.POSITIVE}
        return BraidWord(
            self.strands,
            tuple(BraidLetter(l.index, flip.get(l.kind, l.kind)) for l in reversed(self.letters)),
        )

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise ValueError("cannot compose braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __str__(self) -> str:
        body = " ".join(str(l) for l in self.letters)
        return f"{self.strands}: {body}".rstrip()


_TOKEN = re.compile(r"^(s|v)(\d+)(\^(-?1))?$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"n: s1 s2^-1 v1"``."""
    head, sep, body = text.partition(":")
    if not sep:
        raise BraidParseError("expected '<strands>: <letters>'")
    try:
        n = int(head.strip())
    except ValueError:
        raise BraidParseError(f"bad strand count {head.strip()!r}") from None
    letters = []
    for tok in body.split():
        m = _TOKEN.match(tok)
        if not m:
            raise BraidParseError(f"bad braid token {tok!r}")
        gen, idx, _, power = m.groups()
        if gen == "v":
            kind = LetterKind.VIRTUAL  # v^-1 = v
        else:
            kind = LetterKind.NEGATIVE if power == "-1" else LetterKind.POSITIVE
        letters.append(BraidLetter(int(idx), kind))
    return BraidWord(n, tuple(letters))


def exponent_sum(b: BraidWord) -> int:
    return sum(
        1 if l.kind is LetterKind.POSITIVE else -1 if l.kind is LetterKind.NEGATIVE else 0
        for l in b.letters
    )


_EVENT_OF = {
    LetterKind.POSITIVE: EventKind.CROSS_POS,
    LetterKind.NEGATIVE: EventKind.CROSS_NEG,
    LetterKind.VIRTUAL: EventKind.VIRTUAL,
}


def braid_to_morse(b: BraidWord, close: bool = True) -> MorseDiagram:
    """Lower a braid to a Morse diagram.

    Open: ``b.strands`` parallel strands enter at the top. Closed: nested
    cups put the braid strands at positions ``0..n-1`` with their return arcs
    at ``n..2n-1`` on the right; matching nested caps close them below.
    """
    n = b.strands
    body = [MorseEvent(_EVENT_OF[l.kind], l.index - 1) for l in b.letters]
    if not close:
        d = MorseDiagram(tuple(body), n)
    else:
        cups = [MorseEvent(EventKind.CUP, k) for k in range(n)]
        caps = [MorseEvent(EventKind.CAP, k) for k in reversed(range(n))]
        d = MorseDiagram(tuple(cups + body + caps), 0)
    validate(d)
    return d


def closure_permutation(b: BraidWord) -> list[int]:
    """Where each top strand position ends up at the bottom of the braid."""
    pos = list(range(b.strands))  # pos[k] = strand currently at position k
    for l in b.letters:
        i = l.index - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    out = [0] * b.strands
    for k, s in enumerate(pos):
        out[s] = k
    return out


def random_braid(
    rng: random.Random,
    strands: int,
    length: int,
    virtual_rate: float = 0.0,
) -> BraidWord:
    """Uniform random letters; ``virtual_rate`` is the chance of a virtual letter."""
    letters = []
    if strands >= 2:
        for _ in range(length):
            idx = rng.randint(1, strands - 1)
            if virtual_rate and rng.random() < virtual_rate:
                kind = LetterKind.VIRTUAL
            else:
                kind = LetterKind.POSITIVE if rng.random() < 0.5 else LetterKind.NEGATIVE
            letters.append(BraidLetter(idx, kind))
    return BraidWord(strands, tuple(letters))

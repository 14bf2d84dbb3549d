"""Braid words and the semicircular move alphabet.

A braid word on n strands is a sequence of nonzero integers: the letter v
stands for the Artin generator sigma_|v| when v > 0 and for its inverse when
v < 0, with 1 <= |v| <= n-1.  Words act first letter first: the diagram of
``w + [v]`` is the generator v applied to the diagram of ``w``.

The canonical text format is whitespace-separated signed decimal integers,
e.g. ``"-1 2 1"``.  A dotted word makes the decomposition of an output word
into semicircular factors explicit; its text form joins factor words with
`` . `` as in ``"2 . -1 -2"``.

Canonical letter order, used for move enumeration and greedy tie-breaking
everywhere: sigma_1 < sigma_1^-1 < sigma_2 < sigma_2^-1 < ...  Moves are
ordered by comparing their expanded letter sequences lexicographically in
this order (prefixes sort first).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass


class ParseError(ValueError):
    """Malformed word text."""


class DomainError(ValueError):
    """Structurally valid input outside the allowed range."""


def letter_key(v: int) -> tuple[int, int]:
    """Sort key realising the canonical letter order."""
    return (abs(v), 0 if v > 0 else 1)


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on n strands."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError(f"strand count must be >= 2, got {self.n}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for v in self.letters:
            if not isinstance(v, int) or v == 0 or abs(v) > self.n - 1:
                raise DomainError(
                    f"letter {v!r} out of range for {self.n} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise DomainError(
                f"cannot concatenate words on {self.n} and {other.n} strands")
        return BraidWord(self.n, self.letters + other.letters)

    def __str__(self) -> str:
        return format_word(self)


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices."""
    letters = []
    for tok in text.split():
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"bad token {tok!r} in word") from None
        if v == 0 or abs(v) > n - 1:
            raise DomainError(f"generator index {v} out of range for n={n}")
        letters.append(v)
    return BraidWord(n, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(v) for v in w.letters)


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for v in w.letters:
        if out and out[-1] == -v:
            out.pop()
        else:
            out.append(v)
    return BraidWord(w.n, tuple(out))


def invert_word(w: BraidWord) -> BraidWord:
    """Group inverse: reversed letters with flipped signs."""
    return BraidWord(w.n, tuple(-v for v in reversed(w.letters)))


@dataclass(frozen=True)
class SemicircularMove:
    """A monotone run sigma_i^eps sigma_{i+-1}^eps ... sigma_j^eps."""

    i: int
    j: int
    eps: int

    def __post_init__(self) -> None:
        if self.i < 1 or self.j < 1:
            raise DomainError(f"bad move indices ({self.i}, {self.j})")
        if self.eps not in (1, -1):
            raise DomainError(f"move sign must be +-1, got {self.eps}")

    def letter_tuple(self) -> tuple[int, ...]:
        step = 1 if self.j >= self.i else -1
        return tuple(self.eps * g for g in range(self.i, self.j + step, step))

    def __len__(self) -> int:
        return abs(self.i - self.j) + 1


def expand_move(m: SemicircularMove, n: int) -> BraidWord:
    """The move as a braid word; length |i-j|+1, constant sign."""
    return BraidWord(n, m.letter_tuple())


@functools.lru_cache(maxsize=None)
def enumerate_moves(n: int) -> tuple[SemicircularMove, ...]:
    """All 2(n-1)^2 semicircular moves in canonical order."""
    if n < 2:
        raise DomainError(f"strand count must be >= 2, got {n}")
    moves = [
        SemicircularMove(i, j, eps)
        for i in range(1, n)
        for j in range(1, n)
        for eps in (1, -1)
    ]
    moves.sort(key=lambda m: tuple(letter_key(v) for v in m.letter_tuple()))
    return tuple(moves)


@dataclass(frozen=True)
class DottedWord:
    """An output word with its semicircular factorisation made explicit."""

    n: int
    factors: tuple[SemicircularMove, ...] = ()

    def flatten(self) -> BraidWord:
        letters: list[int] = []
        for m in self.factors:
            letters.extend(m.letter_tuple())
        return BraidWord(self.n, tuple(letters))

    def __len__(self) -> int:
        return len(self.flatten())

    def __str__(self) -> str:
        return " . ".join(
            " ".join(str(v) for v in m.letter_tuple()) for m in self.factors)


def parse_dotted(text: str, n: int) -> DottedWord:
    """Inverse of str(DottedWord); factors must be valid monotone runs."""
    factors = []
    stripped = text.strip()
    if not stripped:
        return DottedWord(n, ())
    for part in stripped.split("."):
        w = parse_word(part, n)
        if not w.letters:
            raise ParseError("empty dotted factor")
        signs = {1 if v > 0 else -1 for v in w.letters}
        if len(signs) != 1:
            raise ParseError(f"factor {part!r} mixes signs")
        idx = [abs(v) for v in w.letters]
        steps = {b - a for a, b in zip(idx, idx[1:])}
        if steps - {1} and steps - {-1}:
            raise ParseError(f"factor {part!r} is not a monotone run")
        factors.append(SemicircularMove(idx[0], idx[-1], signs.pop()))
    return DottedWord(n, tuple(factors))

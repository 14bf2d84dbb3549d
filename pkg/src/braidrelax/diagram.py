"""Curve-diagram engine: integer coding of reduced diagrams and the
generator action on them.

A braid on n strands acts on a reference system of n-1 disjoint arcs in the
punctured disk.  The reduced image diagram is stored arc by arc as the
sequence of horizontal-axis segments the arc crosses (see _kernels for the
rewrite rule realising the generator action).  That state is exact: two
diagrams are equal iff all their crossing sequences agree.

The classical band coding summarises the diagram as 6(n+1) nonnegative
integers: cut the disk along vertical lines through the punctures and count
the connected components of the diagram inside each of the n+1 bands by
type: sup/sub are hugs whose two endpoints lie on the left/right wall,
over/under are pieces that stay above/below the axis, up/down are the two
slopes of crossing pieces.  Two conventions make the published values come
out: the hug containing an arc's first crossing counts as an `up` slope and
the run feeding it counts as `over` pieces shifted one band towards the hug
(dually, last-crossing hugs count as `down` with their tail run as shifted
`under` pieces), and a still-vertical arc counts as `sub` in its home band.
Only the four crossing types enter the complexity, so the complexity equals
the total number of axis crossings either way.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

import numpy as np

from ._kernels import rewrite_arc
from .words import BraidWord, DomainError, SemicircularMove

__all__ = [
    "BandCounts",
    "DiagramCoding",
    "IntegrityError",
    "ContractError",
    "Sigma1Class",
    "apply_generator",
    "apply_move",
    "band_coding",
    "complexity",
    "diagram_of_word",
    "dump_text",
    "is_trivial",
    "mirror",
    "sigma1_class",
    "sigma_k_class",
    "to_machine",
    "trivial_coding",
]


class IntegrityError(RuntimeError):
    """The coding is in a state the transition rules cannot produce."""


class ContractError(ValueError):
    """An operation was called outside its stated precondition."""


class Sigma1Class(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class BandCounts:
    """The six coefficients of one band."""

    sup: int = 0
    sub: int = 0
    over: int = 0
    under: int = 0
    up: int = 0
    down: int = 0

    def crossing_total(self) -> int:
        return self.sup + self.sub + self.up + self.down

    def mirrored(self) -> "BandCounts":
        return BandCounts(self.sup, self.sub, self.under, self.over,
                          self.down, self.up)


class DiagramCoding:
    """Immutable reduced curve diagram of a braid on n strands."""

    __slots__ = ("n", "_arcs", "_bands")

    def __init__(self, n: int, arcs: tuple[np.ndarray, ...]):
        if n < 2:
            raise DomainError(f"strand count must be >= 2, got {n}")
        if len(arcs) != n - 1:
            raise ValueError(f"expected {n - 1} arcs, got {len(arcs)}")
        frozen = []
        for seq in arcs:
            a = np.asarray(seq, dtype=np.int8)
            if a.ndim != 1 or a.size % 2 != 1:
                raise IntegrityError("each arc crosses the axis an odd number of times")
            a = a.copy()
            a.flags.writeable = False
            frozen.append(a)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_arcs", tuple(frozen))
        object.__setattr__(self, "_bands", None)

    def __setattr__(self, *a):  # immutability guard
        raise AttributeError("DiagramCoding is immutable")

    @property
    def arcs(self) -> tuple[np.ndarray, ...]:
        return self._arcs

    @property
    def bands(self) -> tuple[BandCounts, ...]:
        cached = self._bands
        if cached is None:
            cached = band_coding(self)
            object.__setattr__(self, "_bands", cached)
        return cached

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiagramCoding) or self.n != other.n:
            return NotImplemented if not isinstance(other, DiagramCoding) else False
        return all(a.size == b.size and bool(np.array_equal(a, b))
                   for a, b in zip(self._arcs, other._arcs))

    def __hash__(self) -> int:
        return hash((self.n, tuple(a.tobytes() for a in self._arcs)))

    def __repr__(self) -> str:
        cx = complexity(self)
        return f"DiagramCoding(n={self.n}, complexity={cx})"


def trivial_coding(n: int) -> DiagramCoding:
    """The reference diagram: arc j crosses only its own segment."""
    return DiagramCoding(n, tuple(np.array([j], dtype=np.int8)
                                  for j in range(1, n)))


def apply_move(c: DiagramCoding, move: SemicircularMove) -> DiagramCoding:
    """Act by a semicircular move (single pass per arc)."""
    if not 1 <= move.i <= c.n - 1 and 1 <= move.j <= c.n - 1:
        raise DomainError(f"move {move} out of range for n={c.n}")
    if move.i > c.n - 1 or move.j > c.n - 1:
        raise DomainError(f"move {move} out of range for n={c.n}")
    arcs = tuple(rewrite_arc(seq, move.i, move.j, move.eps) for seq in c.arcs)
    return DiagramCoding(c.n, arcs)


def apply_generator(c: DiagramCoding, i: int, sign: int) -> DiagramCoding:
    """Act by sigma_i (sign=+1) or its inverse (sign=-1)."""
    if not 1 <= i <= c.n - 1:
        raise DomainError(f"generator index {i} out of range for n={c.n}")
    if sign not in (1, -1):
        raise DomainError(f"sign must be +-1, got {sign}")
    return apply_move(c, SemicircularMove(i, i, sign))


def diagram_of_word(w: BraidWord) -> DiagramCoding:
    """Fold the generator action over the letters, first letter first."""
    c = trivial_coding(w.n)
    for v in w.letters:
        c = apply_generator(c, abs(v), 1 if v > 0 else -1)
    return c


def complexity(c: DiagramCoding) -> int:
    """Number of intersections of the diagram with the horizontal line."""
    return sum(seq.size for seq in c.arcs)


def is_trivial(c: DiagramCoding) -> bool:
    return all(seq.size == 1 and seq[0] == j
               for j, seq in enumerate(c.arcs, start=1))


def mirror(c: DiagramCoding) -> DiagramCoding:
    """Reflection across the horizontal axis.

    Reverses every crossing sequence; on the band coding this swaps
    over <-> under and up <-> down in every band.
    """
    return DiagramCoding(c.n, tuple(seq[::-1].copy() for seq in c.arcs))


def band_coding(c: DiagramCoding) -> tuple[BandCounts, ...]:
    """The 6(n+1) band coefficients of the diagram."""
    n = c.n
    bands = [[0] * 6 for _ in range(n + 1)]
    SUP, SUB, OVER, UNDER, UP, DOWN = range(6)

    for j, arr in enumerate(c.arcs, start=1):
        seq = arr.tolist()
        m = len(seq)
        if m == 1 and seq[0] == j:
            bands[j][SUB] += 1
            continue

        first_hug = False
        last_hug = False
        for k in range(m):
            cc = seq[k]
            up = (k % 2 == 0)
            prev = seq[k - 1] if k > 0 else j
            nxt = seq[k + 1] if k < m - 1 else j
            entry = "B" if (k == 0 and cc == j) else ("R" if prev > cc else "L")
            exit_ = "T" if (k == m - 1 and cc == j) else ("R" if nxt > cc else "L")

            if entry == "R" and exit_ == "R":
                if k == 0:
                    bands[cc][UP] += 1
                    first_hug = True
                elif k == m - 1:
                    bands[cc][DOWN] += 1
                    last_hug = True
                else:
                    bands[cc][SUB] += 1
            elif entry == "L" and exit_ == "L":
                bands[cc][SUP] += 1
            elif entry == "B" or exit_ == "T":
                rising_right = (entry == "L") or (exit_ == "R")
                bands[cc][UP if rising_right else DOWN] += 1
            else:
                slope_up = (entry == "L") == up
                bands[cc][UP if slope_up else DOWN] += 1

        # initial run below the axis: cap piece in band j plus spans
        if seq[0] != j:
            lo, hi = min(j, seq[0]), max(j, seq[0])
            for b in [j] + list(range(lo + 1, hi)):
                if first_hug:
                    bands[b - 1][OVER] += 1
                else:
                    bands[b][UNDER] += 1
        # final run above the axis
        if seq[-1] != j:
            lo, hi = min(j, seq[-1]), max(j, seq[-1])
            for b in [j] + list(range(lo + 1, hi)):
                if last_hug:
                    bands[b - 1][UNDER] += 1
                else:
                    bands[b][OVER] += 1
        # middle runs
        for k in range(m - 1):
            above = (k % 2 == 0)
            for b in range(min(seq[k], seq[k + 1]) + 1, max(seq[k], seq[k + 1])):
                bands[b][OVER if above else UNDER] += 1

    return tuple(BandCounts(*row) for row in bands)


def _head_tail_class(c: DiagramCoding, k: int) -> Sigma1Class:
    pos = neg = False
    for j, seq in enumerate(c.arcs, start=1):
        if j < k:
            continue
        if seq.size == 1 and seq[0] == j:
            continue
        if seq[0] == k - 1:
            pos = True
        if seq[-1] == k - 1:
            neg = True
    if pos and neg:
        raise IntegrityError(
            f"diagram classifies as both sigma_{k}-positive and negative")
    if pos:
        return Sigma1Class.POSITIVE
    if neg:
        return Sigma1Class.NEGATIVE
    return Sigma1Class.NEUTRAL


def sigma1_class(c: DiagramCoding) -> Sigma1Class:
    """Positive iff d^0_up > 0, negative iff d^0_down > 0, else neutral."""
    return _head_tail_class(c, 1)


def sigma_k_class(c: DiagramCoding, k: int) -> Sigma1Class:
    """Sign of the diagram on the sub-disk right of puncture k-1.

    Requires the diagram to be sigma_j-neutral for all j < k, i.e. arcs
    1..k-1 already in reference position.
    """
    if not 1 <= k <= c.n - 1:
        raise DomainError(f"k={k} out of range for n={c.n}")
    for j in range(1, k):
        seq = c.arcs[j - 1]
        if not (seq.size == 1 and seq[0] == j):
            raise ContractError(
                f"sigma_{k} class needs arcs below {k} in reference position")
    return _head_tail_class(c, k)


def dump_text(c: DiagramCoding) -> str:
    lines = []
    for i, b in enumerate(c.bands):
        lines.append(
            f"band {i}: sup={b.sup} sub={b.sub} over={b.over} "
            f"under={b.under} up={b.up} down={b.down}")
    return "\n".join(lines)


def to_machine(c: DiagramCoding) -> dict:
    return {
        "n": c.n,
        "bands": [
            {"sup": b.sup, "sub": b.sub, "over": b.over,
             "under": b.under, "up": b.up, "down": b.down}
            for b in c.bands
        ],
    }

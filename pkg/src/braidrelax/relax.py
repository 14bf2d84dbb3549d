"""Greedy relaxation engines.

Both algorithms repeatedly act on the curve diagram by the semicircular move
that lowers its complexity the most (ties broken by the canonical move
order) until the diagram is back in reference position; the concatenation of
the chosen moves then expresses the inverse braid.

The consistent variant restricts the candidate moves: while the diagram is
sigma_k-positive (negative), moves may not use the letter sigma_k
(sigma_k^-1), and a move is rejected if the acted diagram would switch to
the opposite sign.  Once the diagram is sigma_k-neutral the active index
advances, so letters below the active index never reappear and the output
word never contains both sigma_1 and its inverse.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import diagram as dg
from ._kernels import rewrite_arc, rewrite_len
from .words import (BraidWord, DottedWord, SemicircularMove, enumerate_moves)

__all__ = [
    "EngineError",
    "Mode",
    "MoveConstraint",
    "RelaxationTrace",
    "check_condition_b",
    "greedy_step",
    "relax_standard",
    "relax_sigma1",
]

_SEP = np.int8(-3)


class EngineError(RuntimeError):
    """No admissible complexity-decreasing move exists (must not happen)."""


class Mode(enum.Enum):
    STANDARD = "standard"
    SIGMA1 = "sigma1"


@dataclass(frozen=True)
class MoveConstraint:
    """Restriction on candidate moves during one phase.

    ``polarity`` is the only sign allowed for letters with the active index
    (0 = unrestricted).  Moves using indices below the active index are
    excluded, and a move must not turn the diagram sigma_k-``polarity``
    (condition (b)): when the diagram is positive only inverse letters are
    allowed and the result may not come out negative, and symmetrically.
    """

    active_index: int = 1
    polarity: int = 0


@dataclass(frozen=True)
class RelaxationTrace:
    """Audit trail of one relaxation run."""

    input: BraidWord
    mode: Mode
    initial_complexity: int
    steps: tuple[tuple[SemicircularMove, int], ...]
    output: DottedWord

    def complexities(self) -> tuple[int, ...]:
        return (self.initial_complexity,) + tuple(c for _, c in self.steps)


class _State:
    """Mutable working state: all arcs in one array with separators."""

    __slots__ = ("n", "combined", "scratch")

    def __init__(self, c: dg.DiagramCoding):
        self.n = c.n
        parts = []
        for k, seq in enumerate(c.arcs):
            if k:
                parts.append(np.array([_SEP], dtype=np.int8))
            parts.append(seq)
        self.combined = np.concatenate(parts) if parts else np.zeros(0, np.int8)
        self.scratch = np.empty(3 * self.combined.size + 16, dtype=np.int8)

    def complexity(self) -> int:
        return self.combined.size - (self.n - 2)

    def arcs(self) -> list[np.ndarray]:
        out = []
        start = 0
        comb = self.combined
        seps = np.flatnonzero(comb == _SEP)
        for pos in list(seps) + [comb.size]:
            out.append(comb[start:pos])
            start = pos + 1
        return out

    def coding(self) -> dg.DiagramCoding:
        return dg.DiagramCoding(self.n, tuple(self.arcs()))

    def is_trivial(self) -> bool:
        if self.combined.size != 2 * (self.n - 1) - 1:
            return False
        return all(seq.size == 1 and seq[0] == j
                   for j, seq in enumerate(self.arcs(), start=1))

    def candidate(self, move: SemicircularMove) -> int:
        """Complexity after the move, without committing."""
        if self.scratch.size < 3 * self.combined.size + 16:
            self.scratch = np.empty(3 * self.combined.size + 16, np.int8)
        n_out, _, _ = rewrite_len(self.combined, move.i, move.j, move.eps,
                                  self.scratch)
        return n_out - (self.n - 2)

    def candidate_class(self, move: SemicircularMove, k: int) -> dg.Sigma1Class:
        """Sign of the acted diagram at active index k, without committing."""
        n_out, _, _ = rewrite_len(self.combined, move.i, move.j, move.eps,
                                  self.scratch)
        out = self.scratch[:n_out]
        seps = np.flatnonzero(out == _SEP)
        bounds = [0] + [int(p) + 1 for p in seps]
        ends = [int(p) for p in seps] + [n_out]
        pos = neg = False
        for j, (a, b) in enumerate(zip(bounds, ends), start=1):
            if j < k:
                continue
            if b - a == 1 and out[a] == j:
                continue
            if out[a] == k - 1:
                pos = True
            if out[b - 1] == k - 1:
                neg = True
        if pos and neg:
            raise dg.IntegrityError("candidate classifies as both signs")
        if pos:
            return dg.Sigma1Class.POSITIVE
        if neg:
            return dg.Sigma1Class.NEGATIVE
        return dg.Sigma1Class.NEUTRAL

    def commit(self, move: SemicircularMove) -> None:
        if self.scratch.size < 3 * self.combined.size + 16:
            self.scratch = np.empty(3 * self.combined.size + 16, np.int8)
        n_out, _, _ = rewrite_len(self.combined, move.i, move.j, move.eps,
                                  self.scratch)
        self.combined = self.scratch[:n_out].copy()

    def sign(self, k: int) -> dg.Sigma1Class:
        pos = neg = False
        start = 0
        comb = self.combined
        seps = list(np.flatnonzero(comb == _SEP)) + [comb.size]
        for j, stop in enumerate(seps, start=1):
            stop = int(stop)
            if j >= k and not (stop - start == 1 and comb[start] == j):
                if comb[start] == k - 1:
                    pos = True
                if comb[stop - 1] == k - 1:
                    neg = True
            start = stop + 1
        if pos and neg:
            raise dg.IntegrityError("diagram classifies as both signs")
        if pos:
            return dg.Sigma1Class.POSITIVE
        if neg:
            return dg.Sigma1Class.NEGATIVE
        return dg.Sigma1Class.NEUTRAL


def _admissible(move: SemicircularMove, constraint: MoveConstraint) -> bool:
    k = constraint.active_index
    lo = min(move.i, move.j)
    if lo < k:
        return False
    if constraint.polarity and lo == k and move.eps != constraint.polarity:
        return False
    return True


def check_condition_b(c: dg.DiagramCoding, m: SemicircularMove,
                      constraint: MoveConstraint) -> bool:
    """True iff acting by m does not produce the forbidden sign."""
    if not constraint.polarity:
        return True
    state = _State(c)
    cls = state.candidate_class(m, constraint.active_index)
    forbidden = (dg.Sigma1Class.NEGATIVE if constraint.polarity < 0
                 else dg.Sigma1Class.POSITIVE)
    return cls is not forbidden


def _best_move(state: _State, constraint: MoveConstraint,
               moves: tuple[SemicircularMove, ...]) -> SemicircularMove:
    forbidden = None
    if constraint.polarity:
        forbidden = (dg.Sigma1Class.NEGATIVE if constraint.polarity < 0
                     else dg.Sigma1Class.POSITIVE)
    best = None
    best_move = None
    for move in moves:
        if not _admissible(move, constraint):
            continue
        c_after = state.candidate(move)
        if best is not None and c_after >= best:
            continue
        if forbidden is not None and \
                state.candidate_class(move, constraint.active_index) is forbidden:
            continue
        best = c_after
        best_move = move
    if best_move is None or best >= state.complexity():
        raise EngineError(
            "no admissible complexity-decreasing move; the descent "
            "guarantee is violated")
    return best_move


def greedy_step(c: dg.DiagramCoding,
                constraint: MoveConstraint = MoveConstraint(),
                ) -> tuple[SemicircularMove, dg.DiagramCoding]:
    """One greedy move: minimal resulting complexity, canonical tie-break."""
    if dg.is_trivial(c):
        raise ContractError("diagram already in reference position")
    state = _State(c)
    move = _best_move(state, constraint, enumerate_moves(c.n))
    return move, dg.apply_move(c, move)


ContractError = dg.ContractError


def _run(w: BraidWord, mode: Mode) -> RelaxationTrace:
    c0 = dg.diagram_of_word(w)
    state = _State(c0)
    n = w.n
    moves = enumerate_moves(n)
    steps: list[tuple[SemicircularMove, int]] = []
    k = 1
    while not state.is_trivial():
        if mode is Mode.SIGMA1:
            cls = state.sign(k)
            while cls is dg.Sigma1Class.NEUTRAL:
                k += 1
                if k > n - 1:
                    raise EngineError("all signs neutral on a nontrivial diagram")
                cls = state.sign(k)
            polarity = -1 if cls is dg.Sigma1Class.POSITIVE else 1
            constraint = MoveConstraint(k, polarity)
        else:
            constraint = MoveConstraint()
        move = _best_move(state, constraint, moves)
        state.commit(move)
        steps.append((move, state.complexity()))
    output = DottedWord(n, tuple(m for m, _ in steps))
    return RelaxationTrace(
        input=w,
        mode=mode,
        initial_complexity=dg.complexity(c0),
        steps=tuple(steps),
        output=output,
    )


def relax_standard(w: BraidWord) -> RelaxationTrace:
    """Untangle with unrestricted greedy moves."""
    return _run(w, Mode.STANDARD)


def relax_sigma1(w: BraidWord) -> RelaxationTrace:
    """Untangle with sign-consistent moves; the output never contains both
    sigma_1 and its inverse."""
    return _run(w, Mode.SIGMA1)

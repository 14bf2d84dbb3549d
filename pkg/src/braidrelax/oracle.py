"""Independent verifiers: the free-group representation and a B_3
breadth-first minimal-length search.

The braid group acts faithfully on the free group generated by loops
x_1..x_n around the punctures: sigma_i sends x_i to x_i x_{i+1} x_i^-1 and
x_{i+1} to x_i, fixing the rest.  Composition convention: words act first
letter first, so endo(w1 + w2) = endo(w2) o endo(w1).  A braid word is
trivial exactly when its endomorphism is the identity, which is the
word-problem oracle used to check relaxation outputs end to end.

Free-group words are stored as bytes: letter b is the byte b, its inverse
the byte b | 8, so inversion is a reversal plus a translate table and
boundary cancellation between reduced words is found by binary search on
slice equality.  This keeps the oracle usable even when intermediate images
grow to millions of letters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import BraidWord, DomainError

__all__ = [
    "FreeGroupEndo",
    "MinLengthCertificate",
    "SearchBoundError",
    "artin_endo",
    "bfs_min_length",
    "compose",
    "identity_endo",
    "is_trivial_braid",
]

_INV_TABLE = bytes((x ^ 8) if (1 <= x <= 7 or 9 <= x <= 15) else x
                   for x in range(256))


def _enc(letters) -> bytes:
    return bytes((v if v > 0 else (-v) | 8) for v in letters)


def _dec(word: bytes) -> tuple[int, ...]:
    return tuple((b & 7) if b < 8 else -(b & 7) for b in word)


def _inv(word: bytes) -> bytes:
    return word[::-1].translate(_INV_TABLE)


def _common_suffix_len(x: bytes, y: bytes) -> int:
    lo, hi = 0, min(len(x), len(y))
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if x[-mid:] == y[-mid:]:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _concat(*parts: bytes) -> bytes:
    """Concatenate reduced words, cancelling at the seams."""
    cur = b""
    for p in parts:
        if not p:
            continue
        if not cur:
            cur = p
            continue
        m = min(len(cur), len(p))
        d = _common_suffix_len(cur[-m:], _inv(p[:m]))
        cur = cur[:len(cur) - d] + p[d:]
    return cur


@dataclass(frozen=True)
class FreeGroupEndo:
    """Images of the free generators x_1..x_n, freely reduced."""

    n: int
    images: tuple[bytes, ...]

    def image_letters(self, b: int) -> tuple[int, ...]:
        return _dec(self.images[b - 1])

    def is_identity(self) -> bool:
        return all(img == bytes([b]) for b, img in enumerate(self.images, 1))

    def apply(self, letters) -> tuple[int, ...]:
        """Image of a free-group word under the endomorphism."""
        parts = []
        for v in letters:
            img = self.images[abs(v) - 1]
            parts.append(img if v > 0 else _inv(img))
        return _dec(_concat(*parts))


def identity_endo(n: int) -> FreeGroupEndo:
    return FreeGroupEndo(n, tuple(bytes([b]) for b in range(1, n + 1)))


def _extend_left(images: tuple[bytes, ...], v: int) -> tuple[bytes, ...]:
    """Images of endo(word) o sub(v), i.e. of the word with v prepended."""
    i = abs(v)
    xi, xi1 = images[i - 1], images[i]
    out = list(images)
    if v > 0:
        out[i - 1] = _concat(xi, xi1, _inv(xi))
        out[i] = xi
    else:
        out[i - 1] = xi1
        out[i] = _concat(_inv(xi1), xi, xi1)
    return tuple(out)


def artin_endo(w: BraidWord) -> FreeGroupEndo:
    """Endomorphism of the braid word, letters acting first to last."""
    images = identity_endo(w.n).images
    for v in reversed(w.letters):
        images = _extend_left(images, v)
    return FreeGroupEndo(w.n, images)


def compose(outer: FreeGroupEndo, inner: FreeGroupEndo) -> FreeGroupEndo:
    """(outer o inner)(x) = outer(inner(x))."""
    if outer.n != inner.n:
        raise DomainError("rank mismatch")
    images = []
    for img in inner.images:
        parts = []
        for b in img:
            src = outer.images[(b & 7) - 1]
            parts.append(src if b < 8 else _inv(src))
        images.append(_concat(*parts))
    return FreeGroupEndo(outer.n, tuple(images))


def is_trivial_braid(w: BraidWord) -> bool:
    """Faithfulness: the braid is trivial iff its endomorphism is."""
    return artin_endo(w).is_identity()


class SearchBoundError(RuntimeError):
    """The search radius was exhausted before the element was found."""


@dataclass(frozen=True)
class MinLengthCertificate:
    word: BraidWord
    min_length: int
    witness: BraidWord


class _Ball:
    """Breadth-first ball in B_3, extended on demand."""

    def __init__(self) -> None:
        e = identity_endo(3)
        self.dist: dict[tuple[bytes, ...], int] = {e.images: 0}
        self.witness: dict[tuple[bytes, ...], tuple[int, ...]] = {e.images: ()}
        self.frontier: list[tuple[bytes, ...]] = [e.images]
        self.radius = 0

    def extend_to(self, radius: int) -> None:
        while self.radius < radius:
            nxt = []
            for images in self.frontier:
                w = self.witness[images]
                for v in (1, -1, 2, -2):
                    new = _extend_left(images, v)
                    if new not in self.dist:
                        self.dist[new] = self.radius + 1
                        self.witness[new] = (v,) + w
                        nxt.append(new)
            self.frontier = nxt
            self.radius += 1

    def sphere_sizes(self, radius: int) -> list[int]:
        self.extend_to(radius)
        sizes = [0] * (radius + 1)
        for d in self.dist.values():
            if d <= radius:
                sizes[d] += 1
        return sizes


_BALL: _Ball | None = None


def _ball() -> _Ball:
    global _BALL
    if _BALL is None:
        _BALL = _Ball()
    return _BALL


def bfs_min_length(w: BraidWord, max_radius: int = 12) -> MinLengthCertificate:
    """Exact minimal word length of a 3-strand braid, with a witness."""
    if w.n != 3:
        raise DomainError("minimal-length search is implemented for n=3 only")
    target = artin_endo(w).images
    ball = _ball()
    for radius in range(ball.radius, max_radius + 1):
        ball.extend_to(radius)
        if target in ball.dist:
            break
    if target not in ball.dist:
        raise SearchBoundError(
            f"element not found within radius {max_radius}")
    d = ball.dist[target]
    return MinLengthCertificate(
        word=w,
        min_length=d,
        witness=BraidWord(3, ball.witness[target]),
    )

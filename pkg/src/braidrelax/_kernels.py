"""Hot inner loop for the curve-diagram engine.

A reduced curve diagram is stored as one crossing sequence per arc: the
segments of the horizontal reference line that the arc meets, in order from
its lower endpoint.  Crossings alternate upward/downward starting upward, so
the direction of entry k is its parity.

Applying the semicircular move sigma_i^e ... sigma_j^e replaces every entry c
with min(i,j) <= c <= max(i,j) by a three-entry run and cancels adjacent
equal pairs:

    ascending  (i <= j), upward entry:  c -> (c-1, j, j+1)
    descending (i > j),  upward entry:  c -> (j-1, j, c+1)

Downward entries get the reversed run; a negative move swaps the two cases.
Entries outside [min(i,j), max(i,j)] are untouched.  Coefficient growth is
geometric in the word length, but the alphabet is tiny, so sequences are kept
as int8 arrays and the rewrite is a single linear pass.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def deco(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return deco


@njit(cache=True)
def _rewrite(seq, lo, hi, asc, positive, out):
    n_out = 0
    for k in range(seq.size):
        c = seq[k]
        if lo <= c <= hi:
            up = (k & 1) == 0
            if asc:
                a, b, d = c - 1, hi, hi + 1
            else:
                a, b, d = lo - 1, lo, c + 1
            if positive != up:
                a, d = d, a
            if n_out > 0 and out[n_out - 1] == a:
                n_out -= 1
            else:
                out[n_out] = a
                n_out += 1
            if n_out > 0 and out[n_out - 1] == b:
                n_out -= 1
            else:
                out[n_out] = b
                n_out += 1
            if n_out > 0 and out[n_out - 1] == d:
                n_out -= 1
            else:
                out[n_out] = d
                n_out += 1
        else:
            if n_out > 0 and out[n_out - 1] == c:
                n_out -= 1
            else:
                out[n_out] = c
                n_out += 1
    return n_out


def _rewrite_py(seq, lo, hi, asc, positive, out):
    n_out = 0
    for k in range(len(seq)):
        c = seq[k]
        if lo <= c <= hi:
            up = (k & 1) == 0
            if asc:
                pat = (c - 1, hi, hi + 1)
            else:
                pat = (lo - 1, lo, c + 1)
            if positive != up:
                pat = pat[::-1]
            for s in pat:
                if n_out > 0 and out[n_out - 1] == s:
                    n_out -= 1
                else:
                    out[n_out] = s
                    n_out += 1
        else:
            if n_out > 0 and out[n_out - 1] == c:
                n_out -= 1
            else:
                out[n_out] = c
                n_out += 1
    return n_out


def rewrite_arc(seq: np.ndarray, i: int, j: int, eps: int,
                out: np.ndarray | None = None) -> np.ndarray:
    """Return the rewritten, reduced crossing sequence as a fresh array."""
    if out is None:
        out = np.empty(3 * seq.size + 4, dtype=np.int8)
    lo, hi = (i, j) if i <= j else (j, i)
    fn = _rewrite if HAVE_NUMBA else _rewrite_py
    n_out = fn(seq, lo, hi, i <= j, eps > 0, out)
    return out[:n_out].copy()


def rewrite_len(seq: np.ndarray, i: int, j: int, eps: int,
                out: np.ndarray) -> tuple[int, int, int]:
    """Length, first and last entry of the rewritten sequence (no copy)."""
    lo, hi = (i, j) if i <= j else (j, i)
    fn = _rewrite if HAVE_NUMBA else _rewrite_py
    n_out = fn(seq, lo, hi, i <= j, eps > 0, out)
    return n_out, int(out[0]), int(out[n_out - 1])

"""Independent reference model for the curve-diagram engine.

Computes the arcs' axis-crossing sequences through the free-group action
alone: the based loop of arc j is x_{j+1}..x_n, a braid word acts by
letterwise substitution, and the crossing sequence falls out of the reduced
image word (generator b crosses segments b-1 then b).  No code is shared
with the production engine, so agreement on random words is a genuine
cross-check of the rewrite rule.
"""

from __future__ import annotations


def _reduce_concat(*parts):
    out = []
    for part in parts:
        for letter in part:
            if out and out[-1] == -letter:
                out.pop()
            else:
                out.append(letter)
    return tuple(out)


def _inv(word):
    return tuple(-x for x in reversed(word))


def _sub_image(word, images):
    parts = []
    for letter in word:
        img = images[abs(letter)]
        parts.append(img if letter > 0 else _inv(img))
    return _reduce_concat(*parts)


def _braid_images(n, letters):
    images = {b: (b,) for b in range(1, n + 1)}
    for letter in reversed(letters):
        i = abs(letter)
        if letter > 0:
            sub_i, sub_i1 = (i, i + 1, -i), (i,)
        else:
            sub_i, sub_i1 = (i + 1,), (-(i + 1), i, i + 1)
        new_i = _sub_image(sub_i, images)
        new_i1 = _sub_image(sub_i1, images)
        images[i], images[i + 1] = new_i, new_i1
    return images


def _crossing_sequence(word):
    seq = []
    for letter in word:
        pair = ((abs(letter) - 1, abs(letter)) if letter > 0
                else (abs(letter), abs(letter) - 1))
        for s in pair:
            if seq and seq[-1] == s:
                seq.pop()
            else:
                seq.append(s)
    return seq


def reference_arcs(n, letters):
    """Crossing sequences of all arcs of the diagram of the given word."""
    images = _braid_images(n, letters)
    arcs = []
    for j in range(1, n):
        loop = _reduce_concat(*[images[b] for b in range(j + 1, n + 1)])
        seq = _crossing_sequence(loop)
        if seq and seq[-1] == n:
            arc = seq[:-1]
        else:
            arc = seq + [n]
        assert len(arc) % 2 == 1
        arcs.append(tuple(arc))
    return tuple(arcs)


def reference_complexity(n, letters):
    return sum(len(s) for s in reference_arcs(n, letters))

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidrelax import diagram as dg
from braidrelax.diagram import (BandCounts, ContractError, Sigma1Class,
                                apply_generator, band_coding, complexity,
                                diagram_of_word, is_trivial, mirror,
                                sigma1_class, sigma_k_class, trivial_coding)
from braidrelax.words import BraidWord, DomainError, parse_word

from reference import reference_arcs


def w(text, n):
    return parse_word(text, n)


def words(min_n=2, max_n=6, max_len=10):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.lists(
            st.integers(1, n - 1).flatmap(
                lambda i: st.sampled_from([i, -i])),
            max_size=max_len,
        ).map(lambda ls: BraidWord(n, tuple(ls))))


# published anchor values

def test_complexity_anchors():
    assert complexity(diagram_of_word(w("", 4))) == 3
    assert complexity(diagram_of_word(w("1", 4))) == 5
    assert complexity(diagram_of_word(w("1 -2", 4))) == 9
    assert complexity(trivial_coding(4)) == 3
    assert complexity(trivial_coding(3)) == 2
    assert complexity(trivial_coding(2)) == 1
    assert complexity(diagram_of_word(w("-1 2 1", 3))) == 8
    assert complexity(diagram_of_word(w("-1 2 1 2", 3))) == 6


def test_reference_vector_exact():
    c = diagram_of_word(w("-1 2 1 2", 3))
    expected = {
        0: BandCounts(up=2, over=2),
        1: BandCounts(down=2, over=2),
        2: BandCounts(over=1, sup=1, under=1),
        3: BandCounts(sup=1),
    }
    for b, counts in enumerate(c.bands):
        assert counts == expected[b], (b, counts)


def test_mirror_of_reference_vector():
    c = mirror(diagram_of_word(w("-1 2 1 2", 3)))
    expected = {
        0: BandCounts(down=2, under=2),
        1: BandCounts(up=2, under=2),
        2: BandCounts(under=1, sup=1, over=1),
        3: BandCounts(sup=1),
    }
    for b, counts in enumerate(c.bands):
        assert counts == expected[b], (b, counts)


def test_trivial_coding_shape():
    for n in range(2, 8):
        c = trivial_coding(n)
        nonzero = [(b, f) for b, counts in enumerate(c.bands)
                   for f, v in vars(counts).items() if v]
        assert len(nonzero) == n - 1
        assert all(f == "sub" and 1 <= b <= n - 1 for b, f in nonzero)
        assert is_trivial(c)


def test_sigma1_class_anchors():
    assert sigma1_class(diagram_of_word(w("1", 4))) is Sigma1Class.POSITIVE
    assert sigma1_class(diagram_of_word(w("1 -2", 4))) is Sigma1Class.POSITIVE
    assert sigma1_class(diagram_of_word(w("-1", 4))) is Sigma1Class.NEGATIVE
    assert sigma1_class(trivial_coding(5)) is Sigma1Class.NEUTRAL


def test_sigma_k_class_shift_examples():
    assert sigma_k_class(trivial_coding(4), 2) is Sigma1Class.NEUTRAL
    assert sigma_k_class(diagram_of_word(w("2", 3)), 2) is Sigma1Class.POSITIVE
    assert sigma_k_class(diagram_of_word(w("-2", 3)), 2) is Sigma1Class.NEGATIVE
    with pytest.raises(ContractError):
        sigma_k_class(diagram_of_word(w("1", 3)), 2)


def test_is_trivial_examples():
    assert is_trivial(trivial_coding(5))
    assert not is_trivial(diagram_of_word(w("1", 3)))
    assert is_trivial(diagram_of_word(w("1 -1", 3)))


def test_apply_generator_range_check():
    c = trivial_coding(3)
    with pytest.raises(DomainError):
        apply_generator(c, 3, 1)
    with pytest.raises(DomainError):
        apply_generator(c, 0, 1)
    with pytest.raises(DomainError):
        apply_generator(c, 1, 2)


@given(words())
@settings(max_examples=150, deadline=None)
def test_engine_matches_reference_model(word):
    c = diagram_of_word(word)
    ref = reference_arcs(word.n, list(word.letters))
    got = tuple(tuple(int(x) for x in seq) for seq in c.arcs)
    assert got == ref


@given(words())
@settings(max_examples=100, deadline=None)
def test_complexity_equals_crossing_coefficients(word):
    c = diagram_of_word(word)
    assert complexity(c) == sum(b.crossing_total() for b in c.bands)
    assert complexity(c) >= word.n - 1
    if complexity(c) == word.n - 1:
        assert is_trivial(c)


@given(words())
@settings(max_examples=100, deadline=None)
def test_generator_inverse_cancels(word):
    c = diagram_of_word(word)
    for i in range(1, word.n):
        assert apply_generator(apply_generator(c, i, 1), i, -1) == c
        assert apply_generator(apply_generator(c, i, -1), i, 1) == c


@given(words(min_n=3))
@settings(max_examples=80, deadline=None)
def test_braid_relation_on_codings(word):
    c = diagram_of_word(word)
    for i in range(1, word.n - 1):
        lhs = rhs = c
        for g in (i, i + 1, i):
            lhs = apply_generator(lhs, g, 1)
        for g in (i + 1, i, i + 1):
            rhs = apply_generator(rhs, g, 1)
        assert lhs == rhs


@given(words(min_n=4))
@settings(max_examples=60, deadline=None)
def test_far_commutation_on_codings(word):
    c = diagram_of_word(word)
    for i in range(1, word.n):
        for j in range(i + 2, word.n):
            ab = apply_generator(apply_generator(c, i, 1), j, 1)
            ba = apply_generator(apply_generator(c, j, 1), i, 1)
            assert ab == ba


@given(words())
@settings(max_examples=100, deadline=None)
def test_mirror_involution_and_swap(word):
    c = diagram_of_word(word)
    m = mirror(c)
    assert mirror(m) == c
    assert complexity(m) == complexity(c)
    for a, b in zip(c.bands, m.bands):
        assert b == a.mirrored()
    # geometric content: the mirror is the diagram of the sign-flipped word
    flipped = BraidWord(word.n, tuple(-v for v in word.letters))
    assert m == diagram_of_word(flipped)


@given(words())
@settings(max_examples=100, deadline=None)
def test_well_defined_under_free_insertion(word):
    rng = random.Random(complexity(diagram_of_word(word)) + len(word))
    letters = list(word.letters)
    pos = rng.randrange(0, len(letters) + 1)
    v = rng.choice([x for i in range(1, word.n) for x in (i, -i)])
    inserted = letters[:pos] + [v, -v] + letters[pos:]
    assert diagram_of_word(BraidWord(word.n, tuple(inserted))) == \
        diagram_of_word(word)


@given(words())
@settings(max_examples=60, deadline=None)
def test_coefficients_nonnegative(word):
    for counts in diagram_of_word(word).bands:
        assert all(v >= 0 for v in vars(counts).values())


def test_mirror_fixes_trivial():
    for n in (2, 3, 5):
        assert mirror(trivial_coding(n)) == trivial_coding(n)


def test_coding_immutable_and_hashable():
    c = trivial_coding(3)
    with pytest.raises(AttributeError):
        c.n = 4
    with pytest.raises(ValueError):
        c.arcs[0][0] = 2
    assert hash(c) == hash(trivial_coding(3))
    assert c == trivial_coding(3)
    assert c != trivial_coding(4)


def test_machine_format_keys():
    payload = dg.to_machine(trivial_coding(3))
    assert payload["n"] == 3
    assert len(payload["bands"]) == 4
    assert set(payload["bands"][0]) == {"sup", "sub", "over", "under", "up", "down"}


def test_dump_text_format():
    lines = dg.dump_text(trivial_coding(3)).splitlines()
    assert lines[0] == "band 0: sup=0 sub=0 over=0 under=0 up=0 down=0"
    assert lines[1] == "band 1: sup=0 sub=1 over=0 under=0 up=0 down=0"

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidrelax.diagram import (Sigma1Class, complexity, diagram_of_word,
                                sigma1_class)
from braidrelax.oracle import is_trivial_braid
from braidrelax.relax import (Mode, MoveConstraint, check_condition_b,
                              greedy_step, relax_sigma1, relax_standard)
from braidrelax.words import BraidWord, SemicircularMove, parse_word


def words(min_n=2, max_n=5, max_len=12):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.lists(
            st.integers(1, n - 1).flatmap(
                lambda i: st.sampled_from([i, -i])),
            max_size=max_len,
        ).map(lambda ls: BraidWord(n, tuple(ls))))


def test_worked_example_consistent():
    trace = relax_sigma1(parse_word("-1 2 1", 3))
    assert str(trace.output) == "2 . -1 -2"
    assert trace.initial_complexity == 8
    assert [c for _, c in trace.steps] == [6, 2]
    drops = [a - b for a, b in zip(trace.complexities(),
                                   trace.complexities()[1:])]
    assert drops == [2, 4]


def test_worked_example_standard_first_move():
    trace = relax_standard(parse_word("-1 2 1", 3))
    move, cx = trace.steps[0]
    assert (move.i, move.j, move.eps) == (1, 2, -1)
    assert trace.initial_complexity - cx == 4


def test_greedy_step_examples():
    c = diagram_of_word(parse_word("-1 2 1", 3))
    move, res = greedy_step(c)
    assert (move.i, move.j, move.eps) == (1, 2, -1)
    assert complexity(res) == 4

    constrained = MoveConstraint(active_index=1, polarity=-1)
    move, res = greedy_step(c, constrained)
    assert (move.i, move.j, move.eps) == (2, 2, 1)
    assert complexity(res) == 6

    c1 = diagram_of_word(parse_word("1", 3))
    move, res = greedy_step(c1)
    assert (move.i, move.j, move.eps) == (1, 1, -1)
    assert complexity(res) == 2


def test_condition_b_examples():
    c = diagram_of_word(parse_word("-1 2 1", 3))
    constraint = MoveConstraint(active_index=1, polarity=-1)
    assert not check_condition_b(c, SemicircularMove(1, 2, -1), constraint)
    assert check_condition_b(c, SemicircularMove(2, 2, 1), constraint)
    assert check_condition_b(c, SemicircularMove(1, 2, -1), MoveConstraint())


def test_empty_and_single_letter():
    for fn in (relax_standard, relax_sigma1):
        trace = fn(parse_word("", 4))
        assert trace.steps == ()
        assert str(trace.output) == ""
        trace = fn(parse_word("1", 3))
        assert trace.output.flatten().letters == (-1,)
        assert len(trace.steps) == 1


def test_positive_input_gives_negative_output():
    trace = relax_sigma1(parse_word("1 -2", 4))
    letters = trace.output.flatten().letters
    assert any(v == -1 for v in letters)
    assert all(v != 1 for v in letters)


def test_rank_one_powers():
    for length in (1, 4, 9):
        word = BraidWord(2, (1,) * length)
        for fn in (relax_standard, relax_sigma1):
            trace = fn(word)
            assert len(trace.output.flatten()) == length
            assert trace.output.flatten().letters == (-1,) * length


@given(words())
@settings(max_examples=60, deadline=None)
def test_roundtrip_descent_and_consistency(word):
    for fn, mode in ((relax_standard, Mode.STANDARD),
                     (relax_sigma1, Mode.SIGMA1)):
        trace = fn(word)
        assert trace.mode is mode
        comps = trace.complexities()
        assert all(b < a for a, b in zip(comps, comps[1:]))
        assert comps[-1] == word.n - 1
        assert len(trace.steps) <= trace.initial_complexity // 2
        assert is_trivial_braid(word + trace.output.flatten())
        flat = []
        for m, _ in trace.steps:
            flat.extend(m.letter_tuple())
        assert tuple(flat) == trace.output.flatten().letters
        if mode is Mode.SIGMA1:
            letters = trace.output.flatten().letters
            assert not ({1, -1} <= {v for v in letters})


@given(words(min_n=3, max_n=4, max_len=10))
@settings(max_examples=40, deadline=None)
def test_index_one_moves_stop_once_neutral(word):
    # replay the run: after the diagram first classifies sigma_1-neutral,
    # no later move may involve the letter sigma_1 in either sign
    trace = relax_sigma1(word)
    c = diagram_of_word(word)
    neutral_seen = sigma1_class(c) is Sigma1Class.NEUTRAL
    from braidrelax.diagram import apply_move
    for move, _ in trace.steps:
        if neutral_seen:
            assert min(move.i, move.j) >= 2
        c = apply_move(c, move)
        if sigma1_class(c) is Sigma1Class.NEUTRAL:
            neutral_seen = True


@given(words())
@settings(max_examples=30, deadline=None)
def test_determinism(word):
    for fn in (relax_standard, relax_sigma1):
        t1, t2 = fn(word), fn(word)
        assert t1.steps == t2.steps
        assert t1.output == t2.output


def test_sign_of_input_matches_output_sign():
    # a sigma_1-positive braid unwinds with sigma_1^-1 letters only
    for text, n in (("1 2 1", 3), ("1", 4), ("2 1 -2", 3)):
        word = parse_word(text, n)
        cls = sigma1_class(diagram_of_word(word))
        letters = relax_sigma1(word).output.flatten().letters
        ones = {v for v in letters if abs(v) == 1}
        if cls is Sigma1Class.POSITIVE:
            assert ones <= {-1}
        elif cls is Sigma1Class.NEGATIVE:
            assert ones <= {1}
        else:
            assert not ones

import random

import pytest
from hypothesis import given, settings, strategies as st

from ceger.aligner import EmptyReference, align, edit_distance, wer
from ceger.tokens import OpKind, tokenize

from oracles import dp_counts, dp_distance, random_pairs

small = st.lists(st.sampled_from(["a", "b", "c", "d"]), max_size=12)


def kinds(al):
    return [op.kind for op in al.ops]


def test_identity():
    assert kinds(align(["a", "b", "c"], ["a", "b", "c"])) == [OpKind.MATCH] * 3


def test_worked_example_alignment():
    al = align(
        tokenize("I went to the store and bought apples."),
        tokenize("I went to the market and bought red apples."),
    )
    M, S, I = OpKind.MATCH, OpKind.SUBSTITUTE, OpKind.INSERT
    assert kinds(al) == [M, M, M, M, S, M, M, I, M]
    assert al.ops[4].hyp_words == ("store",) and al.ops[4].ref_words == ("market",)
    assert al.ops[7].ref_words == ("red",)


def test_single_delete():
    assert kinds(align(["x"], [])) == [OpKind.DELETE]


def test_empty_pair():
    al = align([], [])
    assert al.ops == () and al.hyp_len == 0 and al.ref_len == 0


def test_tie_break_prefers_substitute_then_delete():
    # both (sub b->x, del d) and other orders cost 2
    al = align(["a", "b", "c", "d"], ["a", "x", "c"])
    assert kinds(al) == [OpKind.MATCH, OpKind.SUBSTITUTE, OpKind.MATCH, OpKind.DELETE]
    # two substitutions beat delete+match+insert at the final cell
    assert kinds(align(["a", "b"], ["b", "a"])) == [OpKind.SUBSTITUTE, OpKind.SUBSTITUTE]


@pytest.mark.parametrize(
    "hyp, ref, d",
    [(["a", "b"], ["a", "b"], 0), (["a", "b", "c", "d"], ["a", "x", "c"], 2), ([], ["a", "b"], 2)],
)
def test_edit_distance_examples(hyp, ref, d):
    assert edit_distance(hyp, ref) == d
    assert dp_distance(hyp, ref) == d


def test_wer_examples():
    assert wer(["a"], ["a"]).wer == 0.0
    b = wer(["a", "b", "c", "d"], ["a", "x", "c"])
    assert (b.substitutions, b.deletions, b.insertions) == (1, 1, 0)
    assert b.wer == pytest.approx(2 / 3)
    b = wer([], ["a"])
    assert (b.substitutions, b.deletions, b.insertions, b.wer) == (0, 0, 1, 1.0)
    assert wer([], []).wer == 0.0


def test_wer_empty_reference():
    with pytest.raises(EmptyReference):
        wer(["a"], [])


def test_random_pairs_against_oracle():
    for hyp, ref in random_pairs(seed=11, count=300, max_len=15):
        al = align(hyp, ref)
        assert al.distance == dp_distance(hyp, ref)
        assert al.replay() == list(ref)


@given(small, small)
def test_replay_and_consumption(hyp, ref):
    al = align(hyp, ref)
    assert al.replay() == ref
    assert [w for op in al.ops for w in op.hyp_words] == hyp
    assert sum(len(op.hyp_words) for op in al.ops) == al.hyp_len == len(hyp)
    assert sum(len(op.ref_words) for op in al.ops) == al.ref_len == len(ref)
    assert all(len(op.hyp_words) <= 1 and len(op.ref_words) <= 1 for op in al.ops)


@given(small, small)
def test_symmetry(a, b):
    assert edit_distance(a, b) == edit_distance(b, a)


@given(small, small, small)
def test_triangle_inequality(a, b, c):
    assert edit_distance(a, c) <= edit_distance(a, b) + edit_distance(b, c)


@given(small, st.lists(st.sampled_from(["a", "b", "c", "d"]), min_size=1, max_size=12))
def test_wer_zero_iff_equal(hyp, ref):
    b = wer(hyp, ref)
    assert (b.wer == 0) == (hyp == ref)
    assert b.errors == align(hyp, ref).distance


@settings(max_examples=50)
@given(small, small)
def test_counts_match_oracle_backtrace(hyp, ref):
    b = wer(hyp, ref) if ref or not hyp else None
    if b is not None:
        assert (b.substitutions, b.deletions, b.insertions) == dp_counts(hyp, ref)


def test_deterministic():
    rng = random.Random(3)
    hyp = [rng.choice("abc") for _ in range(30)]
    ref = [rng.choice("abc") for _ in range(30)]
    assert align(hyp, ref) == align(list(hyp), list(ref))

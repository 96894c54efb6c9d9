from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from brauer_f4.action import (
    GenWord,
    act_f4,
    act_word_left,
    act_word_right,
    e6_case3_choices,
    e6_tables,
    f4_tables,
    left_set,
    phi,
    right_set,
    word,
)
from brauer_f4.admissible import e6_catalog, f4_catalog, project_set, sigma_lift
from brauer_f4.relations import e6_relations, f4_relations
from brauer_f4.rootsys import build_e6, build_f4, e6_vector, f4_simple_combination


def e6(*c):
    return build_e6().index(e6_vector(*c))


def f4(*c):
    return build_f4().index(f4_simple_combination(*c))


letters_f4 = st.lists(st.sampled_from(["r1", "r2", "r3", "r4", "e1", "e2", "e3", "e4"]), max_size=12)


def test_examples_e6():
    assert act_word_left(word("E2 E4 E5", "E6"), {e6(0, 0, 0, 0, 0, 1)}) == {e6(0, 1, 0, 0, 0, 0)}
    got = act_word_left(word("E1 E3", "E6"), {e6(0, 0, 0, 1, 0, 0), e6(0, 0, 0, 0, 0, 1)})
    assert got == {e6(1, 0, 0, 0, 0, 0), e6(0, 0, 0, 0, 0, 1)}


def test_e2e3_sets():
    w = word("e2 e3")
    assert left_set(w) == {f4(0, 1, 0, 0)}
    # direct evaluation; the pair {b3, b2+b3} would not even be orthogonal
    assert right_set(w) == {f4(0, 0, 1, 0), f4(0, 2, 1, 0)}
    f = build_f4()
    assert f.inner_index(f4(0, 0, 1, 0), f4(0, 1, 1, 0)) != 0


def test_phi_letters():
    assert str(phi(word("r1 e2 r3 e4"))) == "R1 R6 E3 E5 R4 E2"


def test_case3_choice_is_irrelevant():
    cat = e6_catalog()
    assert all(len(e6_case3_choices(n, B)) <= 1 for B in cat.sets for n in range(1, 7))


def test_relations_respect_actions():
    assert e6_relations().action_incompatible() == []
    assert f4_relations().action_incompatible() == []
    assert f4_relations().phi_incompatible() == []


@given(letters_f4)
@settings(max_examples=80, deadline=None)
def test_f4_action_is_folded_e6_action(ls):
    w = GenWord.parse(" ".join(ls))
    tf, te = f4_tables(), e6_tables()
    for X in f4_catalog().sets[::7]:
        b = tf.left(w, tf.catalog.index[X])
        lifted = te.left(phi(w), te.catalog.index[sigma_lift(X)])
        assert tf.catalog.sets[b] == project_set(te.catalog.sets[lifted])
        assert act_f4(w, X) == tf.catalog.sets[b]


@given(letters_f4)
@settings(max_examples=50, deadline=None)
def test_right_action_is_left_action_of_reverse(ls):
    w = GenWord.parse(" ".join(ls))
    img = phi(w)
    for B in e6_catalog().sets[::40]:
        assert act_word_right(B, img) == act_word_left(img.op(), B)

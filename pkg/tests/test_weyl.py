from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from brauer_f4.rootsys import E6, F4, build_f4
from brauer_f4.weyl import (
    cayley_table,
    from_word,
    generate,
    identity,
    left_coset_reps,
    reduced_word,
    setwise_stabilizer,
    shortlex_elements,
    simple_reflection,
    weyl_group,
)

f4_words = st.lists(st.integers(1, 4), max_size=24)


def test_orders():
    assert weyl_group(F4).order == 1152
    assert weyl_group(E6).order == 51840


def test_coxeter_relations_f4():
    s = [simple_reflection(F4, k) for k in range(1, 5)]
    m = {(1, 2): 3, (2, 3): 4, (3, 4): 3, (1, 3): 2, (1, 4): 2, (2, 4): 2}
    for (i, j), order in m.items():
        assert (s[i - 1] * s[j - 1]).order() == order
    assert all(g.order() == 2 for g in s)


def test_longest_element_length():
    assert max(g.length for g in weyl_group(F4).elements) == 24


@given(f4_words)
@settings(max_examples=60, deadline=None)
def test_reduced_word_roundtrip(w):
    g = from_word(F4, w)
    r = reduced_word(g)
    assert from_word(F4, r) == g
    assert len(r) == g.length <= len(w)


@given(f4_words, f4_words)
@settings(max_examples=40, deadline=None)
def test_cayley_table_matches_products(a, b):
    t = cayley_table(F4)
    g, h = from_word(F4, a), from_word(F4, b)
    assert t.element(t.mul[t.index[g], t.index[h]]) == g * h
    assert t.element(t.inv[t.index[g]]) == g.inverse()


def test_shortlex_order_starts_with_identity():
    els = shortlex_elements(F4)
    assert els[0] == identity(F4)
    assert [g.length for g in els] == sorted(g.length for g in els)


def test_coset_reps_and_stabilizer():
    W = weyl_group(F4)
    f4 = build_f4()
    stab = setwise_stabilizer(W, {f4.simple_roots[0]})
    reps = left_coset_reps(W, stab)
    assert stab.order * len(reps) == 1152
    assert len(reps) == 12  # one per positive long root


def test_generated_subgroup():
    H = generate([simple_reflection(F4, 1), simple_reflection(F4, 2)], kind=F4)
    assert H.order == 6

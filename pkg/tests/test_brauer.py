from __future__ import annotations

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from brauer_f4 import (
    GenWord,
    basis_nf,
    basis_size,
    generator_nf,
    identity_nf,
    leftmul,
    multiply,
    normalize,
    op,
)
from brauer_f4.action import GenLetter
from brauer_f4.relations import F4_RELATION_KINDS
from brauer_f4.brauer import (
    closure_law_report,
    commutation_law_report,
    enumerate_basis,
    op_on_basis,
    relation_failures,
    shape_enumeration,
    shape_totals,
    structured_relation_failures,
)

GENS = ["r1", "r2", "r3", "r4", "e1", "e2", "e3", "e4"]
nodes = st.integers(0, 14984)
words = st.lists(st.sampled_from(GENS), max_size=10).map(lambda ls: GenWord.parse(" ".join(ls)))


def test_size():
    assert basis_size() == 14985


def test_small_normal_forms():
    e2 = normalize("e2")
    assert e2.delta_exp == 0 and e2.shape_id == 2
    assert str(e2) == "[r1 r2 e1 r2 r1]"
    assert normalize("e2 r3 e2") == normalize("d e2")
    assert normalize("e2 e3 e2") == normalize("d e2")
    assert normalize("e2 e2").delta_exp == 2
    assert normalize("e3 e3").delta_exp == 1
    assert normalize("r1 r1") == identity_nf()
    assert normalize("e1 e1 d^-1 d^-1") == normalize("e1")


def test_leftmul_generator_letters():
    x = normalize("e3 e2")
    assert leftmul(GenLetter("r", 4), x) == normalize("r4 e3 e2")
    assert leftmul(GenLetter("d", 1), x).delta_exp == x.delta_exp + 1


def test_closure_and_shapes():
    keys = enumerate_basis()
    assert len(keys) == 14985
    assert shape_totals(keys) == (10881, 1296, 1296, 1296, 108, 108)
    assert set(keys) == shape_enumeration()


def test_cross_check_sample(br):
    assert br.cross_check(range(0, br.size, 7)) == 0


def test_relations_table():
    fails = relation_failures()
    assert set(fails) == set(F4_RELATION_KINDS)
    assert sum(fails.values()) == 0


def test_relations_structured_sample():
    assert structured_relation_failures(range(0, 14985, 11)) == 0


def test_pass_maps_logged(br):
    assert br.pass_log
    assert len(br.reduce) == 24 * 11


def test_op_examples():
    x = normalize("e4 r3 e2 e3 e4")
    assert x.shape_id == 8
    assert op(x) == x
    assert op(normalize("e3 e2")) == normalize("e2 e3")
    for g in GENS:
        assert op(generator_nf(g)) == generator_nf(g)


def test_op_involution_on_basis():
    perm = op_on_basis()
    ys = perm[:, 0]
    assert np.array_equal(ys[ys], np.arange(len(ys)))
    assert not (perm[:, 1] + perm[ys, 1]).any()


@given(nodes, nodes, nodes)
@settings(max_examples=60, deadline=None)
def test_associativity(a, b, c):
    x, y, z = basis_nf(a), basis_nf(b), basis_nf(c)
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@given(nodes, nodes)
@settings(max_examples=60, deadline=None)
def test_op_antihomomorphism(a, b):
    x, y = basis_nf(a), basis_nf(b)
    assert op(multiply(x, y)) == multiply(op(y), op(x))


@given(words, words)
@settings(max_examples=60, deadline=None)
def test_normalize_is_multiplicative(u, v):
    assert normalize(u + v) == multiply(normalize(u), normalize(v))


@given(nodes)
@settings(max_examples=40, deadline=None)
def test_basis_word_roundtrip(x):
    nf = basis_nf(x)
    assert normalize(nf.word()) == nf


def test_closure_law():
    rep = closure_law_report()
    assert len(rep) == 84
    assert all(power == extra == 1 for _, _, extra, power in rep)


def test_commutation_law():
    rep = commutation_law_report()
    assert len(rep) == 90
    assert all(ok for *_, ok in rep)

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brauer_f4 import _enum_py
from brauer_f4.enumeration import BACKEND, DeltaCollapse, EnumerationOverflow, build_table, enumerate_raw
from brauer_f4.relations import f4_relations

# Temperley-Lieb TL_3: e1 e1 = d e1, e2 e2 = d e2, e1 e2 e1 = e1, e2 e1 e2 = e2  (Catalan(3) = 5 monomials)
TL3 = [((0, 0), (0,), 1), ((1, 1), (1,), 1), ((0, 1, 0), (0,), 0), ((1, 0, 1), (1,), 0)]
# symmetric group S3 as a monoid
S3 = [((0, 0), (), 0), ((1, 1), (), 0), ((0, 1, 0), (1, 0, 1), 0)]


@pytest.mark.parametrize("backend", ["python", "compiled"])
def test_small_presentations(backend):
    if backend == "compiled" and BACKEND != "compiled":
        pytest.skip("extension not built")
    assert build_table(2, TL3, backend=backend).targets.shape == (5, 2)
    assert len(build_table(2, S3, backend=backend)) == 6


def test_tl3_delta_weights():
    t = build_table(2, TL3, backend="python")
    node, d = t.trace((0, 0, 0))
    assert d == 2 and node == t.trace((0,))[0]


@pytest.mark.parametrize("backend", ["python", "compiled"])
def test_delta_collapse_detected(backend):
    if backend == "compiled" and BACKEND != "compiled":
        pytest.skip("extension not built")
    bad = [((0, 0), (0,), 1), ((0, 0), (0,), 0)]
    with pytest.raises(DeltaCollapse):
        enumerate_raw(1, bad, backend=backend)


def test_overflow():
    free = [((0, 1), (1, 0), 0)]  # free commutative monoid: infinite
    with pytest.raises(EnumerationOverflow):
        _enum_py.enumerate_monoid(2, free, max_nodes=500)


@given(st.integers(1, 7), st.integers(1, 7))
@settings(max_examples=25, deadline=None)
def test_cyclic_monoids(a, b):
    # x^(a+b) = x^a leaves 1, x, ..., x^(a+b-1)
    rel = [((0,) * (a + b), (0,) * a, 0)]
    n = len(build_table(1, rel))
    assert n == a + b


def test_f4_backends_agree():
    rels = f4_relations().as_int_relations()
    a = build_table(8, rels, backend="python")
    assert len(a) == 14985
    assert a.n_defined == 144811
    if BACKEND == "compiled":
        b = build_table(8, rels, backend="compiled")
        assert np.array_equal(a.targets, b.targets)
        assert np.array_equal(a.shifts, b.shifts)
        assert a.words == b.words


def test_canonical_words_carry_no_delta(br):
    t = br.table
    for x in range(0, len(t), 997):
        node, d = t.trace(t.words[x])
        assert node == x and d == 0

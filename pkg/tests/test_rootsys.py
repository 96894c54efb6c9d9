from __future__ import annotations

from fractions import Fraction

import pytest

from brauer_f4.rootsys import (
    build_e6,
    build_f4,
    e6_vector,
    f4_simple_combination,
    f4_vector,
    folding,
    inner,
    preimage,
    project,
    sigma_root,
)


def test_counts():
    assert build_f4().n_pos == 24
    assert build_e6().n_pos == 36
    assert len(build_f4().roots) == 48
    assert len(build_e6().roots) == 72


def test_long_short_split():
    f4 = build_f4()
    long_ = [i for i in range(f4.n_pos) if f4.is_long(i)]
    assert len(long_) == 12
    assert {f4.norm2(i) for i in range(f4.n_pos)} == {Fraction(1), Fraction(2)}


def test_fibers():
    f4, fold = build_f4(), folding()
    for i in range(f4.n_pos):
        assert fold.fiber_size(i) == (1 if f4.is_long(i) else 2)
    assert sum(fold.fiber_size(i) for i in range(f4.n_pos)) == 36


def test_sigma_is_involution_compatible_with_projection():
    e6 = build_e6()
    for r in e6.roots:
        assert sigma_root(sigma_root(r)) == r
        assert project(sigma_root(r)) == project(r)


def test_simple_roots_project():
    e6 = build_e6()
    # alpha_1, alpha_6 -> beta_1; alpha_3, alpha_5 -> beta_2; alpha_4 -> beta_3; alpha_2 -> beta_4
    expect = {1: 1, 6: 1, 3: 2, 5: 2, 4: 3, 2: 4}
    for a, b in expect.items():
        c = [0] * 4
        c[b - 1] = 1
        assert project(e6.simple(a)) == f4_simple_combination(*c)


def test_highest_root_of_e6():
    top = e6_vector(1, 2, 2, 3, 2, 1)
    assert build_e6().is_root(top)
    assert not build_e6().is_root(e6_vector(1, 2, 2, 3, 2, 2))


def test_preimage_of_short_root_is_sigma_pair():
    b2 = f4_simple_combination(0, 1, 0, 0)
    pre = preimage(b2)
    assert pre == {e6_vector(0, 0, 1, 0, 0, 0), e6_vector(0, 0, 0, 0, 1, 0)}


def test_inner_products_exact():
    f4 = build_f4()
    assert inner(f4_vector(1, 0, 0, 0), f4_vector(1, 0, 0, 0)) == 1
    assert inner(f4_vector(1, 1, 0, 0), f4_vector(1, -1, 0, 0)) == 0
    with pytest.raises(ValueError):
        f4.index(f4_vector(1, 1, 1, 0))

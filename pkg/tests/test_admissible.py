from __future__ import annotations

import pytest

from brauer_f4.admissible import (
    close_e6,
    closure_e6,
    closure_f4,
    e6_catalog,
    f4_catalog,
    is_admissible_f4,
    orbit_base_e6,
    project_set,
    sigma_bijection_check,
    sigma_invariant_counts,
    sigma_lift,
    sigma_set,
)
from brauer_f4.rootsys import build_e6, build_f4, e6_vector, f4_simple_combination


def e6(*c):
    return build_e6().index(e6_vector(*c))


def test_f4_catalog():
    cat = f4_catalog()
    assert cat.orbit_sizes() == (1, 12, 12, 18, 36, 3)
    assert len(cat) == 82


def test_e6_sigma_counts():
    assert sigma_invariant_counts() == (1, 12, 30, 39)
    assert sum(sigma_invariant_counts()) == 82


def test_bijection():
    assert sigma_bijection_check()
    for s in f4_catalog().sets:
        lift = sigma_lift(s)
        assert sigma_set(lift) == lift
        assert project_set(lift) == s


def test_closure_adds_fourth_root():
    # three mutually orthogonal roots of a D4 subsystem close to four
    X = {e6(0, 0, 1, 0, 0, 0), e6(0, 0, 0, 0, 1, 0), e6(0, 1, 0, 0, 0, 0)}
    cl = close_e6(X)
    assert len(cl) == 4
    assert e6(0, 1, 1, 2, 1, 0) in cl


def test_closure_idempotent_on_catalog():
    for s in e6_catalog().sets:
        assert close_e6(s) == s


def test_orbit_bases_have_height_zero():
    cat = e6_catalog()
    for Y in [(), (2,), (1, 6), (2, 3, 5)]:
        assert cat.heights[cat.index[orbit_base_e6(Y)]] == 0


def test_closure_entry_points():
    B = closure_e6([e6_vector(0, 1, 0, 0, 0, 0)])
    assert B.sigma_invariant and B.height == 0
    assert is_admissible_f4([f4_simple_combination(0, 0, 0, 1)])
    b = f4_simple_combination
    assert is_admissible_f4([b(0, 1, 0, 0)])
    assert not is_admissible_f4([b(0, 1, 0, 0), b(0, 0, 0, 1)])
    # the lift {a3, a5, a2} closes up by a2+a3+a5+2a4, which folds to 2b2+2b3+b4
    X = closure_f4([b(0, 1, 0, 0), b(0, 0, 0, 1)])
    f4 = build_f4()
    assert set(X.roots) == {f4.index(b(0, 1, 0, 0)), f4.index(b(0, 0, 0, 1)), f4.index(b(0, 2, 2, 1))}


def test_non_root_rejected():
    with pytest.raises(ValueError):
        closure_e6([e6_vector(1, 1, 0, 0, 0, 0)])

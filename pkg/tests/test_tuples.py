from __future__ import annotations

from brauer_f4.brauer import (
    E6_ORBIT_BASES,
    action_compatibility_failures,
    e6_tuple_count,
    enumerate_e6_tuples,
    lower_rank_formula,
    m_y_fixed_group,
    m_y_group,
    match_phi_to_tuples,
    sigma_invariant_orbit,
)


def test_fixed_groups():
    assert [m_y_fixed_group(Y).order for Y in E6_ORBIT_BASES] == [1152, 48, 6, 1]
    assert [m_y_group(Y).order for Y in E6_ORBIT_BASES] == [51840, 720, 6, 1]


def test_orbit_sizes():
    assert [len(sigma_invariant_orbit(Y)) for Y in E6_ORBIT_BASES] == [1, 12, 30, 39]


def test_tuple_counts():
    assert e6_tuple_count() == 14985
    assert lower_rank_formula() == 14985
    assert sum(1 for _ in enumerate_e6_tuples()) == 14985


def test_phi_matches_tuples():
    rep = match_phi_to_tuples()
    assert rep["subtotals"] == {(): 1152, (2,): 6912, (1, 6): 5400, (2, 3, 5): 1521}
    assert all(rep["multiplicity_ok"].values())
    assert all(rep["coverage_ok"].values())
    assert rep["sigma_ok"]


def test_action_compatibility():
    assert action_compatibility_failures() == 0

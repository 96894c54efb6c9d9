from __future__ import annotations

import math

import pytest

from brauer_f4.rootsys import build_f4, f4_simple_combination
from brauer_f4.stabilizers import (
    FIRST_TABLE,
    GROUP_TYPES,
    SECOND_TABLE,
    build_groups,
    build_x_sets,
    count_upper_bound,
    derived_type,
    e_root_word,
    first_table,
    group_types_report,
    named_group,
    second_table,
    semidirect_report,
    shape_counts,
    verify_normalizers,
    x_orbit_sizes,
)


def test_first_table():
    assert first_table() == ((1, 1152, 1), (12, 48, 2), (12, 6, 16), (18, 2, 32), (36, 1, 32), (3, 1, 384))
    assert first_table() == FIRST_TABLE
    assert all(math.prod(r) == 1152 for r in first_table())


def test_second_table():
    assert second_table() == (18, 36, 2, 36, 3, 36) == SECOND_TABLE


def test_x_sets():
    assert x_orbit_sizes() == (1, 12, 12, 18, 36, 3)
    assert [len(x) for x in build_x_sets()] == [0, 1, 1, 2, 3, 4]


def test_normalizers():
    assert verify_normalizers() == {f"N{i}": True for i in range(6)}


def test_semidirect():
    rep = semidirect_report()
    assert all(v["semidirect"] for v in rep.values())
    # read literally, "C normalized by A" fails where C is not normal
    assert {k for k, v in rep.items() if not v["C_normalized_by_A"]} == {"N2", "N3"}


def test_group_types():
    rep = group_types_report()
    assert {k for k, v in rep.items() if not (v["subsystem"] and v["printed_generators"])} == {"N5"}
    derived = {n: derived_type(named_group(n)) for n in GROUP_TYPES}
    assert {n for n in GROUP_TYPES if derived[n] != GROUP_TYPES[n]} == {"N5"}
    # same order as B3xB2, different group
    assert derived["N5"] == "B4"
    assert named_group("N5").order == 384


@pytest.mark.parametrize("name,order", [("N1", 96), ("N2", 96), ("N3", 64), ("N4", 32), ("A2", 16), ("C2", 6)])
def test_named_group_orders(name, order):
    assert named_group(name).order == order


def test_counts():
    assert shape_counts() == (1152, 6912, 864, 648, 1296, 9, 1296, 1296, 1296, 108, 108)
    assert sum(shape_counts()) == count_upper_bound() == 14985


def test_shapes_consistent():
    for sd in build_groups():
        assert sd.size == len(sd.left_transversal) * sd.pass_group.order * len(sd.right_transversal)


def test_root_words():
    f4 = build_f4()
    assert str(e_root_word(f4.index(f4_simple_combination(0, 0, 1, 0)))) == "e3"
    assert str(e_root_word(f4.index(f4_simple_combination(0, 1, 1, 0)))) == "r3 e2 r3"

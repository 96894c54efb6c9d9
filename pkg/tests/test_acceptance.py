"""Acceptance criteria 1-11; each prints one PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` or through pytest,
where the lines are also repeated in the terminal summary.
"""
from __future__ import annotations

import math
import random
import sys
import time

import numpy as np

from brauer_f4.action import act_word_left, left_set, right_set, word
from brauer_f4.admissible import f4_catalog, sigma_bijection_check, sigma_invariant_counts
from brauer_f4.brauer import (
    E6_ORBIT_BASES,
    basis_nf,
    brauer,
    closure_law_report,
    commutation_law_report,
    e6_tuple_count,
    enumerate_basis,
    generator_nf,
    lower_rank_formula,
    m_y_fixed_group,
    match_phi_to_tuples,
    multiply,
    normalize,
    op,
    op_on_basis,
    relation_failures,
    shape_enumeration,
    shape_totals,
    structured_relation_failures,
)
from brauer_f4.cellular import build_chain, chain_ok, form_symmetry_failures, idempotent_checks, z_sets
from brauer_f4.relations import F4_RELATION_KINDS
from brauer_f4.rootsys import E6, F4, build_e6, build_f4, e6_vector, f4_simple_combination, folding
from brauer_f4.stabilizers import (
    count_upper_bound,
    first_table,
    second_table,
    semidirect_report,
    verify_normalizers,
)
from brauer_f4.weyl import weyl_group

try:
    from conftest import CRITERIA
except ImportError:  # standalone run
    CRITERIA = {}

GENS = ["r1", "r2", "r3", "r4", "e1", "e2", "e3", "e4"]


def _record(n: int, text: str, checks: dict[str, bool], t0: float) -> None:
    ok = all(checks.values())
    failed = [k for k, v in checks.items() if not v]
    detail = f"{text} [{time.perf_counter() - t0:.1f} s]" + (f" failed: {', '.join(failed)}" if failed else "")
    CRITERIA[n] = (ok, detail)
    print(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, failed


def _e6(*c):
    return build_e6().index(e6_vector(*c))


def _f4(*c):
    return build_f4().index(f4_simple_combination(*c))


def test_criterion_01_root_data():
    t0 = time.perf_counter()
    f4, fold = build_f4(), folding()
    _record(1, "24 F4 / 36 E6 positive roots; fibers 1 (long) and 2 (short)", {
        "f4": f4.n_pos == 24,
        "e6": build_e6().n_pos == 36,
        "fibers": all(fold.fiber_size(i) == (1 if f4.is_long(i) else 2) for i in range(24)),
    }, t0)


def test_criterion_02_group_orders():
    t0 = time.perf_counter()
    _record(2, "|W(F4)| = 1152, |W(E6)| = 51840, |W(E6)^sigma| = 1152", {
        "W(F4)": weyl_group(F4).order == 1152,
        "W(E6)": weyl_group(E6).order == 51840,
        "W(E6)^sigma": m_y_fixed_group(()).order == 1152,
    }, t0)


def test_criterion_03_catalogs():
    t0 = time.perf_counter()
    _record(3, "F4 orbits (1,12,12,18,36,3), 82 sets; sigma counts (1,12,30,39); bijection", {
        "f4 orbits": f4_catalog().orbit_sizes() == (1, 12, 12, 18, 36, 3),
        "total": len(f4_catalog()) == 82,
        "sigma counts": sigma_invariant_counts() == (1, 12, 30, 39),
        "bijection": sigma_bijection_check(),
    }, t0)


def test_criterion_04_stabilizer_tables():
    t0 = time.perf_counter()
    t1 = first_table()
    _record(4, "first and second tables, normalizers, semidirect products", {
        "first table": t1 == ((1, 1152, 1), (12, 48, 2), (12, 6, 16), (18, 2, 32), (36, 1, 32), (3, 1, 384)),
        "row products": all(math.prod(r) == 1152 for r in t1),
        "second table": second_table() == (18, 36, 2, 36, 3, 36),
        "normalizers": all(verify_normalizers().values()) and len(verify_normalizers()) == 6,
        "semidirect": all(v["semidirect"] for v in semidirect_report().values()),
    }, t0)


def test_criterion_05_rank_both_ways():
    t0 = time.perf_counter()
    _record(5, "rank 14985 from the tables and from 1152 + 12^2*48 + 30^2*6 + 39^2", {
        "upper": count_upper_bound() == 14985,
        "lower": lower_rank_formula() == 1152 + 12**2 * 48 + 30**2 * 6 + 39**2 == 14985,
        "tuples": e6_tuple_count() == 14985,
    }, t0)


def test_criterion_06_basis():
    t0 = time.perf_counter()
    keys = enumerate_basis()
    _record(6, "closure of the identity: 14985, per shape (10881,1296,1296,1296,108,108)", {
        "size": len(keys) == 14985,
        "shapes": shape_totals(keys) == (10881, 1296, 1296, 1296, 108, 108),
        "matches shape enumeration": set(keys) == shape_enumeration(),
    }, t0)


def test_criterion_07_relation_soundness():
    t0 = time.perf_counter()
    table = relation_failures()
    _record(7, "all defining relations act identically on all 14985 basis elements", {
        "all labels present": set(table) == set(F4_RELATION_KINDS),
        "table": sum(table.values()) == 0,
        "structured leftmul": structured_relation_failures(range(14985)) == 0,
    }, t0)


def test_criterion_08_phi_compatibility():
    t0 = time.perf_counter()
    rep = match_phi_to_tuples()
    _record(8, "phi fingerprints: subtotals (1152,6912,5400,1521) with multiplicity |W(M_Y)^sigma|; examples", {
        "subtotals": [rep["subtotals"][Y] for Y in E6_ORBIT_BASES] == [1152, 6912, 5400, 1521],
        "multiplicity": all(rep["multiplicity_ok"].values()),
        "coverage": all(rep["coverage_ok"].values()),
        "E2E4E5{a6}": act_word_left(word("E2 E4 E5", E6), {_e6(0, 0, 0, 0, 0, 1)}) == {_e6(0, 1, 0, 0, 0, 0)},
        "E1E3{a4,a6}": act_word_left(word("E1 E3", E6), {_e6(0, 0, 0, 1, 0, 0), _e6(0, 0, 0, 0, 0, 1)})
        == {_e6(1, 0, 0, 0, 0, 0), _e6(0, 0, 0, 0, 0, 1)},
        "left set e2e3": left_set(word("e2 e3")) == {_f4(0, 1, 0, 0)},
        "right set e2e3 (derived)": right_set(word("e2 e3")) == {_f4(0, 0, 1, 0), _f4(0, 2, 1, 0)},
    }, t0)


def test_criterion_09_anti_involution():
    t0 = time.perf_counter()
    n = brauer().size
    perm = op_on_basis()
    ys = perm[:, 0]
    gen = {g: generator_nf(g) for g in GENS}
    rng = random.Random(20240)
    pairs = [(basis_nf(rng.randrange(n)), basis_nf(rng.randrange(n))) for _ in range(10_000)]
    x = normalize("e4 r3 e2 e3 e4")
    _record(9, "op fixes generators, op^2 = id, op(ab) = op(b)op(a) on generator and 10^4 random pairs", {
        "generators fixed": all(op(v) == v for v in gen.values()),
        "op^2 = id": bool(np.array_equal(ys[ys], np.arange(n))) and not (perm[:, 1] + perm[ys, 1]).any(),
        "generator pairs": all(op(multiply(a, b)) == multiply(op(b), op(a)) for a in gen.values() for b in gen.values()),
        "random pairs": all(op(multiply(a, b)) == multiply(op(b), op(a)) for a, b in pairs),
        "op(e4r3e2e3e4)": op(x) == x,
    }, t0)


def test_criterion_10_cellular_layers():
    t0 = time.perf_counter()
    chain = build_chain()
    top = _e6(0, 1, 1, 2, 1, 0)
    a2, a3, a5 = _e6(0, 1, 0, 0, 0, 0), _e6(0, 0, 1, 0, 0, 0), _e6(0, 0, 0, 0, 1, 0)
    _record(10, "chain Z0..Z3, layers (1152,6912,5400,1521), idempotent law, form symmetry", {
        "chain": chain_ok() and z_sets() == [frozenset(), {a2}, {a2, top}, {a2, a3, a5, top}],
        "dims": [l.dim for l in chain] == [1152, 6912, 5400, 1521],
        "sum": sum(l.dim for l in chain) == 14985,
        "idempotents": all(idempotent_checks().values()),
        "symmetry": [form_symmetry_failures(l) for l in chain] == [0, 0, 0, 0],
    }, t0)


def test_criterion_11_closure_and_commutation_laws():
    t0 = time.perf_counter()
    cl = closure_law_report()
    comm = commutation_law_report()
    _record(11, "e_{X^cl} = delta^{|X^cl - X|} e_X; co-admissible pairs commute", {
        "closure law": len(cl) == 84 and all(p == k for _, _, k, p in cl),
        "commutation": len(comm) == 90 and all(ok for *_, ok in comm),
    }, t0)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

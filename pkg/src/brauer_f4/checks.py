"""Named verification checks, grouped by scope; shared by the CLI and the test suite."""
from __future__ import annotations

import math
import multiprocessing as mp
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Any, Callable

import numpy as np

SCOPES = ("roots", "groups", "admissible", "action", "counts", "basis", "tuples", "cellular")


@dataclass
class Report:
    check: str
    status: str
    expected: Any
    actual: Any
    elapsed_ms: int
    anchor: str

    def to_json(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["expected"] = jsonable(self.expected)
        d["actual"] = jsonable(self.actual)
        if not timing:
            del d["elapsed_ms"]
        return d


def jsonable(x: Any) -> Any:
    """Exact, deterministic JSON form: sets sorted, tuples as lists, keys as strings."""
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (set, frozenset)):
        return sorted(jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    return x


def _run(name: str, anchor: str, expected: Any, fn: Callable[[], Any]) -> Report:
    t0 = time.perf_counter()
    actual = fn()
    ms = int((time.perf_counter() - t0) * 1000)
    status = "pass" if jsonable(actual) == jsonable(expected) else "fail"
    return Report(name, status, expected, actual, ms, anchor)


# sharded sweeps -------------------------------------------------------------------


def _shard_relations(chunk: list[int]) -> int:
    from .brauer import structured_relation_failures

    return structured_relation_failures(chunk)


def _shard_cross(chunk: list[int]) -> int:
    from .brauer import brauer

    return brauer().cross_check(chunk)


def sharded(fn: Callable[[list[int]], int], n: int, jobs: int) -> int:
    """Sum fn over index shards, in worker processes when jobs > 1."""
    idx = list(range(n))
    if jobs <= 1:
        return fn(idx)
    from .brauer import brauer

    brauer()  # build before forking so workers inherit the tables
    size = math.ceil(n / (4 * jobs))
    chunks = [idx[i : i + size] for i in range(0, n, size)]
    ctx = mp.get_context("fork")
    with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as ex:
        return sum(ex.map(fn, chunks))


# scopes ------------------------------------------------------------------------------


def roots_checks(jobs: int = 1) -> list[Report]:
    from .rootsys import build_e6, build_f4, folding

    f4, e6 = build_f4(), build_e6()

    def fibers():
        fold = folding()
        return {
            "long": sorted({fold.fiber_size(i) for i in range(f4.n_pos) if f4.is_long(i)}),
            "short": sorted({fold.fiber_size(i) for i in range(f4.n_pos) if not f4.is_long(i)}),
        }

    def sigma_compatible():
        fold = folding()
        return all(fold.project[fold.sigma[j]] == fold.project[j] for j in range(len(e6.roots)))

    return [
        _run("f4 positive roots", "F4 positive roots", 24, lambda: f4.n_pos),
        _run("e6 positive roots", "E6 positive roots", 36, lambda: e6.n_pos),
        _run("fiber sizes", "long roots have one preimage, short roots two", {"long": [1], "short": [2]}, fibers),
        _run("projection is sigma-invariant", "p o sigma = p", True, sigma_compatible),
    ]


def groups_checks(jobs: int = 1) -> list[Report]:
    from .brauer import m_y_fixed_group
    from .rootsys import E6, F4
    from .stabilizers import (
        FIRST_TABLE,
        GROUP_TYPES,
        SECOND_TABLE,
        derived_type,
        first_table,
        named_group,
        second_table,
        semidirect_report,
        verify_normalizers,
    )
    from .weyl import weyl_group

    return [
        _run("|W(F4)|", "Weyl group order", 1152, lambda: weyl_group(F4).order),
        _run("|W(E6)|", "Weyl group order", 51840, lambda: weyl_group(E6).order),
        _run("|W(E6)^sigma|", "fixed points of the diagram automorphism", 1152, lambda: m_y_fixed_group(()).order),
        _run("first table", "(#D_i, #C_i, #A_i) per X-orbit", [list(r) for r in FIRST_TABLE], lambda: first_table()),
        _run("first table row products", "#D_i * #C_i * #A_i = |W(F4)|", [1152] * 6,
             lambda: [math.prod(r) for r in first_table()]),
        _run("second table", "#D6L #D6R #C6 #D8 #D9L #D9R", list(SECOND_TABLE), lambda: second_table()),
        _run("normalizers", "N_i is the stabilizer of X_i", {f"N{i}": True for i in range(6)}, verify_normalizers),
        _run("semidirect products", "N_i = A_i x| C_i", {f"N{i}": True for i in range(6)},
             lambda: {k: v["semidirect"] for k, v in semidirect_report().items()}),
        _run("coxeter types", "claimed isomorphism types of the stabilizer groups", dict(GROUP_TYPES),
             lambda: {n: derived_type(named_group(n)) for n in GROUP_TYPES}),
    ]


def admissible_checks(jobs: int = 1) -> list[Report]:
    from .admissible import f4_catalog, sigma_bijection_check, sigma_invariant_counts

    return [
        _run("f4 orbit sizes", "admissible F4 sets per W(F4)-orbit", [1, 12, 12, 18, 36, 3],
             lambda: f4_catalog().orbit_sizes()),
        _run("f4 catalog size", "admissible F4 sets", 82, lambda: len(f4_catalog())),
        _run("e6 sigma-invariant counts", "sigma-invariant sets per W(E6)-orbit", [1, 12, 30, 39],
             sigma_invariant_counts),
        _run("projection bijection", "p: sigma-invariant admissible E6 sets -> admissible F4 sets", True,
             sigma_bijection_check),
    ]


def _e6(*c: int) -> int:
    from .rootsys import build_e6, e6_vector

    return build_e6().index(e6_vector(*c))


def _f4(*c: int) -> int:
    from .rootsys import build_f4, f4_simple_combination

    return build_f4().index(f4_simple_combination(*c))


def action_checks(jobs: int = 1) -> list[Report]:
    from .action import act_word_left, e6_case3_choices, left_set, right_set, word
    from .admissible import e6_catalog
    from .brauer import action_compatibility_failures

    def ex1():
        return act_word_left(word("E2 E4 E5", "E6"), {_e6(0, 0, 0, 0, 0, 1)}) == {_e6(0, 1, 0, 0, 0, 0)}

    def ex2():
        got = act_word_left(word("E1 E3", "E6"), {_e6(0, 0, 0, 1, 0, 0), _e6(0, 0, 0, 0, 0, 1)})
        return got == {_e6(1, 0, 0, 0, 0, 0), _e6(0, 0, 0, 0, 0, 1)}

    def case3():
        cat = e6_catalog()
        return max(len(e6_case3_choices(n, B)) for B in cat.sets for n in range(1, 7))

    return [
        _run("E2E4E5{a6}", "action example", True, ex1),
        _run("E1E3{a4,a6}", "action example", True, ex2),
        _run("left set of e2e3", "left set {b2}", True, lambda: left_set(word("e2 e3")) == {_f4(0, 1, 0, 0)}),
        _run("right set of e2e3", "right set by direct evaluation {b3, 2b2+b3}", True,
             lambda: right_set(word("e2 e3")) == {_f4(0, 0, 1, 0), _f4(0, 2, 1, 0)}),
        _run("case-3 independence", "E_i image independent of the non-orthogonal root chosen", 1, case3),
        _run("action compatibility", "F4 sets = p(E6 sets of the phi-image) on every basis word", 0,
             action_compatibility_failures),
    ]


def counts_checks(jobs: int = 1) -> list[Report]:
    from .brauer import e6_tuple_count, lower_rank_formula
    from .stabilizers import count_upper_bound

    return [
        _run("rank upper bound", "normal-form count from the stabilizer tables", 14985, count_upper_bound),
        _run("rank lower bound", "1152 + 12^2*48 + 30^2*6 + 39^2", 14985, lower_rank_formula),
        _run("e6 tuple count", "sigma-invariant (Y, B, h, B') tuples", 14985, e6_tuple_count),
    ]


def basis_checks(jobs: int = 1, probes: int = 10_000, seed: int = 2024) -> list[Report]:
    from .action import word
    from .brauer import (
        basis_nf,
        brauer,
        closure_law_report,
        commutation_law_report,
        enumerate_basis,
        generator_nf,
        multiply,
        normalize,
        op,
        op_on_basis,
        relation_failures,
        shape_enumeration,
        shape_totals,
    )

    br = brauer()
    gens = ["r1", "r2", "r3", "r4", "e1", "e2", "e3", "e4"]

    def closure():
        keys = enumerate_basis()
        return {"size": len(keys), "shapes": shape_totals(keys), "matches_shapes": set(keys) == shape_enumeration()}

    def op_square():
        perm = op_on_basis()
        ys, es = perm[:, 0], perm[:, 1]
        return bool(np.array_equal(ys[ys], np.arange(br.size)) and not (es + es[ys]).any())

    def antihom_generators():
        bad = 0
        for a in gens:
            for b in gens:
                x, y = generator_nf(a), generator_nf(b)
                bad += op(multiply(x, y)) != multiply(op(y), op(x))
        return bad

    def antihom_random():
        rng = random.Random(seed)
        bad = 0
        for _ in range(probes):
            a, b = basis_nf(rng.randrange(br.size)), basis_nf(rng.randrange(br.size))
            bad += op(multiply(a, b)) != multiply(op(b), op(a))
        return bad

    def closure_law():
        rep = closure_law_report()
        return sum(1 for _, _, k, p in rep if p != k)

    def commutation():
        return sum(1 for *_, ok in commutation_law_report() if not ok)

    nf = normalize(word("e4 r3 e2 e3 e4"))
    return [
        _run("enumerated monomials", "rank of the algebra", 14985, lambda: br.size),
        _run("left-multiplication closure", "closure of the identity normal form",
             {"size": 14985, "shapes": [10881, 1296, 1296, 1296, 108, 108], "matches_shapes": True}, closure),
        _run("structured vs tabulated leftmul", "normal-form multiplication agrees with the enumeration", 0,
             lambda: sharded(_shard_cross, br.size, jobs)),
        _run("relations on the table", "defining relations hold on every basis element", 0,
             lambda: sum(relation_failures().values())),
        _run("relations via normal forms", "defining relations hold under structured leftmul", 0,
             lambda: sharded(_shard_relations, br.size, jobs)),
        _run("op fixes generators", "op(g) = g", True, lambda: all(op(generator_nf(g)) == generator_nf(g) for g in gens)),
        _run("op squared", "op^2 = id on the basis", True, op_square),
        _run("op anti-hom on generators", "op(ab) = op(b)op(a), generator pairs", 0, antihom_generators),
        _run("op anti-hom on random pairs", f"op(ab) = op(b)op(a), {probes} random basis pairs", 0, antihom_random),
        _run("op(e4r3e2e3e4)", "e4 r3 e2 e3 e4 is op-invariant", True, lambda: op(nf) == nf),
        _run("closure law", "e_{X^cl} = delta^{|X^cl - X|} e_X", 0, closure_law),
        _run("commutation law", "e_g1 e_g2 = e_g2 e_g1 for co-admissible orthogonal pairs", 0, commutation),
    ]


def tuples_checks(jobs: int = 1) -> list[Report]:
    from .brauer import E6_ORBIT_BASES, m_y_fixed_group, match_phi_to_tuples

    rep = {}

    def get():
        if not rep:
            rep.update(match_phi_to_tuples())
        return rep

    ys = [str(y) for y in E6_ORBIT_BASES]
    return [
        _run("fixed group orders", "|W(M_Y)^sigma|", [1152, 48, 6, 1],
             lambda: [m_y_fixed_group(y).order for y in E6_ORBIT_BASES]),
        _run("phi subtotals", "basis elements per Y", dict(zip(ys, [1152, 6912, 5400, 1521])),
             lambda: {str(k): v for k, v in get()["subtotals"].items()}),
        _run("phi multiplicities", "each (Y, B, B') occurs |W(M_Y)^sigma| times", dict.fromkeys(ys, True),
             lambda: {str(k): v for k, v in get()["multiplicity_ok"].items()}),
        _run("phi coverage", "every sigma-invariant (B, B') pair occurs", dict.fromkeys(ys, True),
             lambda: {str(k): v for k, v in get()["coverage_ok"].items()}),
        _run("phi sigma-invariance", "left and right sets are sigma-invariant", True, lambda: get()["sigma_ok"]),
    ]


def cellular_checks(jobs: int = 1) -> list[Report]:
    from .action import act_word_left, word
    from .admissible import e6_catalog
    from .cellular import (
        ZERO,
        a_word_failures,
        build_chain,
        chain_ok,
        form_symmetry_failures,
        form_values,
        idempotent_checks,
        unit_idempotent,
    )

    def z2_example():
        return act_word_left(word("E2 E4 E5 E3", "E6"), {_e6(1, 0, 0, 0, 0, 0), _e6(0, 0, 0, 0, 0, 1)}) == build_chain()[2].Z

    def ht_z2():
        cat = e6_catalog()
        return cat.heights[cat.index[build_chain()[2].Z]]

    def zero_in_layer1():
        return any(v is ZERO for v in form_values(build_chain()[1]).values())

    return [
        _run("chain", "sigma-invariant admissible Z0 < Z1 < Z2 < Z3", True, chain_ok),
        _run("V sizes", "sigma-invariant sets per layer", [1, 12, 30, 39], lambda: [len(l.V_basis) for l in build_chain()]),
        _run("layer groups", "layer group orders", [1152, 48, 6, 1], lambda: [l.group_order for l in build_chain()]),
        _run("layer dimensions", "|V|^2 * |group|", [1152, 6912, 5400, 1521], lambda: [l.dim for l in build_chain()]),
        _run("layer total", "sum of layer dimensions", 14985, lambda: sum(l.dim for l in build_chain())),
        _run("E2E4E5E3{a1,a6}", "reaches Z2", True, z2_example),
        _run("ht(Z2)", "height of Z2", 0, ht_z2),
        _run("a-words", "a-words reach B from Z, are cost-minimal and not below ht(B)", [0, 0, 0, 0],
             lambda: [len(a_word_failures(l)) for l in build_chain()]),
        _run("idempotent law", "E_Zi E_Zj = delta^{#Zi} E_Zj for i <= j", True, lambda: all(idempotent_checks().values())),
        _run("layer units", "delta^{-#Z} E_Z is idempotent", [True] * 4, lambda: [unit_idempotent(l) for l in build_chain()]),
        _run("form symmetry", "op(phi(u, v)) = phi(v, u)", [0, 0, 0, 0],
             lambda: [form_symmetry_failures(l) for l in build_chain()]),
        _run("zero form value in layer 1", "some pair falls into a lower layer", True, zero_in_layer1),
    ]


SCOPE_FUNCS: dict[str, Callable[..., list[Report]]] = {
    "roots": roots_checks,
    "groups": groups_checks,
    "admissible": admissible_checks,
    "action": action_checks,
    "counts": counts_checks,
    "basis": basis_checks,
    "tuples": tuples_checks,
    "cellular": cellular_checks,
}


def run_scope(scope: str, jobs: int = 1) -> list[Report]:
    scopes = SCOPES if scope == "all" else (scope,)
    out: list[Report] = []
    for s in scopes:
        out.extend(SCOPE_FUNCS[s](jobs=jobs))
    return out

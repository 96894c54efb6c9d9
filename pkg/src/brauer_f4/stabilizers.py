"""Distinguished admissible sets X_0..X_5, their stabilizer groups and transversals.

Every group is generated from its printed list of reflections, so the checks
here (orders, Coxeter types, normalizers, semidirect splittings, coset counts)
test the printed data rather than reconstruct it.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .action import GenLetter, GenWord, word
from .admissible import closure_f4, f4_catalog
from .rootsys import F4, RootVector, build_f4, f4_simple_combination, f4_vector
from .weyl import (
    Subgroup,
    WeylElement,
    complement_normalized_by,
    coxeter_type_check,
    generate,
    left_coset_reps,
    reduced_word,
    reflection,
    semidirect_check,
    setwise_stabilizer,
    shortlex_elements,
    shortlex_key,
    simple_reflection,
    trivial,
    weyl_group,
)

H = Fraction(1, 2)

# reflection generators by name; "eps4+eps3" etc. are non-simple roots in epsilon coordinates
ROOTS: dict[str, RootVector] = {
    "r1": f4_simple_combination(1, 0, 0, 0),
    "r2": f4_simple_combination(0, 1, 0, 0),
    "r3": f4_simple_combination(0, 0, 1, 0),
    "r4": f4_simple_combination(0, 0, 0, 1),
    "eps1": f4_vector(1, 0, 0, 0),
    "eps3": f4_vector(0, 0, 1, 0),
    "eps4": f4_vector(0, 0, 0, 1),
    "eps4+eps3": f4_vector(0, 0, 1, 1),
    "eps4-eps1": f4_vector(-1, 0, 0, 1),
    "(1,1,1,-1)/2": f4_vector(H, H, H, -H),
    "(1,1,-1,1)/2": f4_vector(H, H, -H, H),
    "(1,-1,1,1)/2": f4_vector(H, -H, H, H),
}

# printed generator lists
GROUP_GENERATORS: dict[str, tuple[str, ...]] = {
    "N1": ("r1", "r2", "eps4+eps3", "r4"),
    "C1": ("r1", "r2", "eps4+eps3"),
    "A1": ("r4",),
    "N2": ("r1", "r3", "r4", "(1,1,1,-1)/2"),
    "C2": ("r3", "r4"),
    "A2": ("r1", "(1,1,1,-1)/2", "(1,1,-1,1)/2", "(1,-1,1,1)/2"),
    "N3": ("r2", "r3", "eps4", "eps4-eps1"),
    "C3": ("eps4-eps1",),
    "A3": ("r2", "r3", "eps4", "eps1"),
    "N4": ("r3", "r1", "(1,1,1,-1)/2", "(1,-1,1,1)/2"),
    "N5": ("r1", "r2", "r3", "eps4", "eps1"),
    "N6L": ("r2", "r3", "eps4", "eps4-eps1"),
    "N6R": ("r2", "eps3", "eps4", "eps4-eps1"),
    "C6": ("eps4-eps1",),
    "N8": ("r2", "r4", "eps1", "eps3"),
}

# claimed isomorphism types, as products of irreducible Coxeter types
GROUP_TYPES: dict[str, str] = {
    "N0": "F4",
    "N1": "B3xA1",
    "C1": "B3",
    "A1": "A1",
    "N2": "B3xA1",
    "C2": "A2",
    "A2": "A1xA1xA1xA1",
    "N3": "B2xB2",
    "C3": "A1",
    "A3": "B2xA1xA1",
    "N4": "B2xA1xA1",
    "N5": "B3xB2",
    "N6L": "B2xB2",
    "N6R": "B2xA1xA1",
    "C6": "A1",
    "N8": "B2xA1xA1",
}

# (#D_i, #C_i, #A_i) for i = 0..5
FIRST_TABLE = ((1, 1152, 1), (12, 48, 2), (12, 6, 16), (18, 2, 32), (36, 1, 32), (3, 1, 384))
# #D6L, #D6R, #C6, #D8, #D9L, #D9R
SECOND_TABLE = (18, 36, 2, 36, 3, 36)

MIRROR_SHAPE = {0: 0, 1: 1, 2: 2, 3: 3, 4: 4, 5: 5, 6: 7, 7: 6, 8: 8, 9: 10, 10: 9}
N_SHAPES = 11


class TableMismatch(RuntimeError):
    pass


def group_element(name: str) -> WeylElement:
    return reflection(ROOTS[name])


@functools.lru_cache(maxsize=None)
def named_group(name: str) -> Subgroup:
    """One of the printed groups (N_i, A_i, C_i, N6L, N6R, C6, N8)."""
    if name == "N0" or name == "C0":
        return weyl_group(F4)
    if name in ("A0", "C4", "C5"):
        return trivial(F4)
    if name == "A4":
        return named_group("N4")
    if name == "A5":
        return named_group("N5")
    return generate([group_element(g) for g in GROUP_GENERATORS[name]], kind=F4)


# Coxeter types ----------------------------------------------------------------


def _type_order(t: str) -> int:
    kind, rank = t[0], int(t[1:])
    if kind == "A":
        return math.factorial(rank + 1)
    if kind == "B":
        return 2**rank * math.factorial(rank)
    if t == "F4":
        return 1152
    raise ValueError(t)


def coxeter_components(gens: list[WeylElement]) -> list[str]:
    """Irreducible types of the Coxeter graph of ``gens`` (paths of type A, B or F4 only)."""
    k = len(gens)
    m = [[(gens[i] * gens[j]).order() if i != j else 1 for j in range(k)] for i in range(k)]
    adj = {i: [j for j in range(k) if j != i and m[i][j] > 2] for i in range(k)}
    seen: set[int] = set()
    out = []
    for s in range(k):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        ends = [x for x in comp if len(adj[x]) <= 1]
        edges = sorted(m[x][y] for x in comp for y in adj[x] if x < y)
        n = len(comp)
        if n > 1 and (len(ends) != 2 or len(edges) != n - 1 or any(len(adj[x]) > 2 for x in comp)):
            out.append(f"?{n}")
            continue
        if n == 1 or all(e == 3 for e in edges):
            out.append(f"A{n}")
            continue
        # walk the path from one end to read the bond sequence
        path = [ends[0]]
        while len(path) < n:
            nxt = [y for y in adj[path[-1]] if y not in path]
            path.append(nxt[0])
        bonds = [m[path[t]][path[t + 1]] for t in range(n - 1)]
        if bonds[-1] == 4:
            bonds.reverse()
        if bonds[0] == 4 and all(e == 3 for e in bonds[1:]):
            out.append(f"B{n}")
        elif bonds == [3, 4, 3]:
            out.append("F4")
        else:
            out.append(f"?{n}")
    return sorted(out)


def type_check(gens: list[WeylElement], expected: str) -> bool:
    """The printed generators form a Coxeter system of the expected type with the right order."""
    comps = coxeter_components(gens)
    want = sorted(expected.split("x"))
    if comps != want:
        return False
    k = len(gens)
    matrix = [[(gens[i] * gens[j]).order() if i != j else 1 for j in range(k)] for i in range(k)]
    return coxeter_type_check(gens, matrix, order=math.prod(_type_order(t) for t in want))


def simple_system(G: Subgroup) -> list[int]:
    """Simple roots (positive indices) of the root subsystem of a reflection subgroup.

    A positive root alpha of the subsystem is simple iff r_alpha permutes the
    other positive roots of the subsystem.
    """
    f4 = build_f4()
    pos = [b for b in range(f4.n_pos) if reflection(f4.roots[b]) in G]
    pos_set = set(pos)
    simple = []
    for a in pos:
        r = reflection(f4.roots[a])
        if all(r.act(b) in pos_set for b in pos if b != a):
            simple.append(a)
    return simple


def subsystem_type_check(G: Subgroup, expected: str) -> bool:
    """G is generated by the reflections of its simple system, which has the expected type."""
    f4 = build_f4()
    gens = [reflection(f4.roots[a]) for a in simple_system(G)]
    return type_check(gens, expected) and generate(gens, kind=F4).same_set(G)


def derived_type(G: Subgroup) -> str:
    """Coxeter type of the simple system of a reflection subgroup, e.g. ``"B2xA1xA1"``."""
    f4 = build_f4()
    comps = coxeter_components([reflection(f4.roots[a]) for a in simple_system(G)])
    return "x".join(sorted(comps, key=lambda t: (-int(t[1:]), t)))


def _printed_generators(name: str) -> list[WeylElement]:
    if name == "N0":
        return [simple_reflection(F4, k) for k in range(1, 5)]
    return [group_element(g) for g in GROUP_GENERATORS[name]]


def group_types_report() -> dict[str, dict[str, bool]]:
    """Per group: does its simple system have the claimed type, and do the printed generators?"""
    out = {}
    for name, t in GROUP_TYPES.items():
        out[name] = {
            "subsystem": subsystem_type_check(named_group(name), t),
            "printed_generators": type_check(_printed_generators(name), t),
        }
    return out


# X sets -----------------------------------------------------------------------


def _idx(v: RootVector) -> int:
    return build_f4().index(v)


@functools.lru_cache(maxsize=None)
def build_x_sets() -> tuple[frozenset[int], ...]:
    b = lambda *c: f4_simple_combination(*c)  # noqa: E731
    x0 = frozenset()
    x1 = frozenset({_idx(b(0, 0, 0, 1))})
    x2 = frozenset({_idx(b(1, 0, 0, 0))})
    x3 = frozenset({_idx(b(0, 0, 1, 0)), _idx(b(0, 2, 1, 0))})
    x4 = closure_f4([b(1, 0, 0, 0), b(0, 0, 1, 0)]).as_set
    x5 = closure_f4([b(0, 0, 1, 0), b(0, 2, 1, 0), b(2, 2, 1, 0)]).as_set
    for x in (x1, x2, x3):
        if closure_f4(x).as_set != x:
            raise TableMismatch(f"printed set {sorted(x)} is not admissible")
    return (x0, x1, x2, x3, x4, x5)


def x_orbit_sizes() -> tuple[int, ...]:
    cat = f4_catalog()
    return tuple(len(cat.orbits[cat.orbit_of[cat.index[x]]]) for x in build_x_sets())


# conjugated idempotents ---------------------------------------------------------


@functools.lru_cache(maxsize=None)
def root_conjugator(beta: int) -> tuple[int, tuple[int, ...]]:
    """(node i, reduced word of u) with u.beta_i = +-beta, u shortlex-least over both same-length nodes."""
    f4 = build_f4()
    beta = f4.pos(beta)
    nodes = [i for i in range(1, 5) if f4.is_long(f4.simple_roots[i - 1]) == f4.is_long(beta)]
    best = None
    for g in shortlex_elements(F4):
        if best is not None and g.length > best[0][0][0]:
            break
        for i in nodes:
            if g.act_pos(f4.simple_roots[i - 1]) == beta:
                key = (shortlex_key(g), i)
                if best is None or key < best[0]:
                    best = (key, i, reduced_word(g))
    assert best is not None
    return best[1], best[2]


def e_root_word(beta: int | RootVector) -> GenWord:
    """u e_i u^-1 spelling e_beta for a positive F4 root."""
    if isinstance(beta, RootVector):
        beta = build_f4().index(beta)
    i, u = root_conjugator(beta)
    letters = [GenLetter("r", k) for k in u] + [GenLetter("e", i)] + [GenLetter("r", k) for k in reversed(u)]
    return GenWord(F4, tuple(letters))


def e_set_word(X) -> GenWord:
    """e_X = product of e_beta over X in root order."""
    out = GenWord(F4, ())
    for b in sorted(X):
        out = out + e_root_word(b)
    return out


def weyl_word(g: WeylElement) -> GenWord:
    return GenWord(F4, tuple(GenLetter("r", k) for k in reduced_word(g)))


# shapes -----------------------------------------------------------------------

EXTRA_MIDDLES = {6: "e3 e2", 7: "e2 e3", 8: "e4 r3 e2 e3 e4", 9: "e3 e2 e1 e3", 10: "e3 e1 e2 e3"}
SHAPE_GROUPS = {
    6: ("N6L", "N6R", "C6"),
    7: ("N6R", "N6L", "C6"),
    8: ("N8", "N8", "A0"),
    9: ("N5", "N4", "A0"),
    10: ("N4", "N5", "A0"),
}


@dataclass
class ShapeData:
    shape_id: int
    middle_word: GenWord
    left_group: Subgroup
    right_group: Subgroup
    pass_group: Subgroup
    left_transversal: list[WeylElement]
    right_transversal: list[WeylElement]  # elements w with w^-1 in the left transversal of the right group
    absorb_left: Subgroup | None = None
    absorb_right: Subgroup | None = None
    x_set: frozenset[int] | None = None
    notes: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.left_transversal) * self.pass_group.order * len(self.right_transversal)


@functools.lru_cache(maxsize=None)
def build_groups() -> tuple[ShapeData, ...]:
    W = weyl_group(F4)
    xs = build_x_sets()
    shapes: list[ShapeData] = []
    for i in range(6):
        N, A, C = named_group(f"N{i}"), named_group(f"A{i}"), named_group(f"C{i}")
        D = left_coset_reps(W, N)
        shapes.append(
            ShapeData(i, e_set_word(xs[i]), N, N, C, D, [d.inverse() for d in D], A, A, xs[i])
        )
    for s in range(6, 11):
        ln, rn, cn = SHAPE_GROUPS[s]
        L, R, C = named_group(ln), named_group(rn), named_group(cn)
        DL, DR = left_coset_reps(W, L), left_coset_reps(W, R)
        absorb = (L, R) if C.order == 1 else (None, None)
        shapes.append(
            ShapeData(s, word(EXTRA_MIDDLES[s]), L, R, C, DL, [d.inverse() for d in DR], absorb[0], absorb[1])
        )
    _check_tables(shapes)
    return tuple(shapes)


def first_table() -> tuple[tuple[int, int, int], ...]:
    W = weyl_group(F4)
    return tuple(
        (len(left_coset_reps(W, named_group(f"N{i}"))), named_group(f"C{i}").order, named_group(f"A{i}").order)
        for i in range(6)
    )


def second_table() -> tuple[int, ...]:
    sh = build_groups()
    return (
        len(sh[6].left_transversal),
        len(sh[6].right_transversal),
        sh[6].pass_group.order,
        len(sh[8].left_transversal),
        len(sh[9].left_transversal),
        len(sh[9].right_transversal),
    )


def _check_tables(shapes: list[ShapeData]) -> None:
    for i in range(6):
        got = (len(shapes[i].left_transversal), shapes[i].pass_group.order, shapes[i].absorb_left.order)
        if got != FIRST_TABLE[i]:
            raise TableMismatch(f"row {i}: expected {FIRST_TABLE[i]}, got {got}")
    got2 = (
        len(shapes[6].left_transversal),
        len(shapes[6].right_transversal),
        shapes[6].pass_group.order,
        len(shapes[8].left_transversal),
        len(shapes[9].left_transversal),
        len(shapes[9].right_transversal),
    )
    if got2 != SECOND_TABLE:
        raise TableMismatch(f"second table: expected {SECOND_TABLE}, got {got2}")


def verify_normalizers() -> dict[str, bool]:
    W = weyl_group(F4)
    xs = build_x_sets()
    out = {f"N{i}": setwise_stabilizer(W, xs[i]).same_set(named_group(f"N{i}")) for i in range(6)}
    return out


def semidirect_report() -> dict[str, dict[str, bool]]:
    """Per i: A normal with complement C, and the literal reading 'C normalized by A'."""
    out = {}
    for i in range(6):
        N, A, C = named_group(f"N{i}"), named_group(f"A{i}"), named_group(f"C{i}")
        out[f"N{i}"] = {
            "semidirect": semidirect_check(N, A, C),
            "C_normalized_by_A": complement_normalized_by(A, C),
        }
    return out


def count_upper_bound() -> int:
    t1 = first_table()
    d6l, d6r, c6, d8, d9l, d9r = second_table()
    return sum(d * d * c for d, c, _ in t1) + 2 * d6l * d6r * c6 + d8 * d8 + 2 * d9l * d9r


def shape_counts() -> tuple[int, ...]:
    """Monomials per shape 0..10 from the transversal sizes."""
    return tuple(s.size for s in build_groups())

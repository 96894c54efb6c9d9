"""Finite Weyl groups as signed permutations of positive roots.

An element is stored as the tuple of images of the positive roots, each image
being an index into the full root list of its system (so an image ``>= N``
means the positive root went negative).  That packs the permutation and the
sign bits into one hashable tuple.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .rootsys import RootSystem, RootVector, system_of


@dataclass(frozen=True)
class WeylElement:
    kind: str
    images: tuple[int, ...]

    @property
    def system(self) -> RootSystem:
        return system_of(self.kind)

    @property
    def perm(self) -> tuple[int, ...]:
        n = len(self.images)
        return tuple(x % n for x in self.images)

    @property
    def signs(self) -> tuple[bool, ...]:
        n = len(self.images)
        return tuple(x >= n for x in self.images)

    def act(self, i: int) -> int:
        """Image of root index i (positive or negative)."""
        n = len(self.images)
        if i < n:
            return self.images[i]
        j = self.images[i - n]
        return j + n if j < n else j - n

    def act_pos(self, i: int) -> int:
        """Image of root i with the sign dropped (the action on positive roots)."""
        return self.act(i) % len(self.images)

    def act_root(self, v: RootVector) -> RootVector:
        s = self.system
        return s.roots[self.act(s.index(v))]

    def act_set(self, xs: Iterable[int]) -> frozenset[int]:
        return frozenset(self.act_pos(i) for i in xs)

    def __mul__(self, other: WeylElement) -> WeylElement:
        if other.kind != self.kind:
            raise ValueError("cannot multiply elements of different Weyl groups")
        return WeylElement(self.kind, tuple(self.act(j) for j in other.images))

    def inverse(self) -> WeylElement:
        n = len(self.images)
        out = [0] * n
        for i, j in enumerate(self.images):
            if j < n:
                out[j] = i
            else:
                out[j - n] = i + n
        return WeylElement(self.kind, tuple(out))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    @property
    def length(self) -> int:
        n = len(self.images)
        return sum(1 for j in self.images if j >= n)

    def order(self) -> int:
        g, k = self, 1
        while not g.is_identity():
            g = g * self
            k += 1
        return k

    def full_action(self) -> np.ndarray:
        """Images of all 2N root indices."""
        return np.array([self.act(i) for i in range(2 * len(self.images))], dtype=np.int32)

    def __repr__(self) -> str:
        return f"WeylElement({self.kind}, {reduced_word(self)})"


def identity(kind: str) -> WeylElement:
    return WeylElement(kind, tuple(range(system_of(kind).n_pos)))


def reflection(root: RootVector) -> WeylElement:
    s = system_of(root.kind)
    m = s.index(root)
    return WeylElement(root.kind, tuple(s.reflect_index(m, i) for i in range(s.n_pos)))


@functools.lru_cache(maxsize=None)
def simple_reflection(kind: str, node: int) -> WeylElement:
    return reflection(system_of(kind).simple(node))


def from_word(kind: str, word: Sequence[int]) -> WeylElement:
    g = identity(kind)
    for s in word:
        g = g * simple_reflection(kind, s)
    return g


def left_descents(g: WeylElement) -> list[int]:
    s = g.system
    ginv = g.inverse()
    return [k + 1 for k, a in enumerate(s.simple_roots) if not s.is_positive_index(ginv.act(a))]


@functools.lru_cache(maxsize=None)
def reduced_word(g: WeylElement) -> tuple[int, ...]:
    """Lexicographically least reduced word in the simple reflections."""
    word = []
    while not g.is_identity():
        s = left_descents(g)[0]
        word.append(s)
        g = simple_reflection(g.kind, s) * g
    return tuple(word)


def shortlex_key(g: WeylElement) -> tuple[int, tuple[int, ...]]:
    w = reduced_word(g)
    return (len(w), w)


@functools.lru_cache(maxsize=None)
def shortlex_elements(kind: str) -> tuple[WeylElement, ...]:
    """The whole Weyl group in shortlex order of reduced words."""
    return tuple(sorted(weyl_group(kind).elements, key=shortlex_key))


class Subgroup:
    """A fully enumerated finite group of Weyl elements."""

    def __init__(self, kind: str, generators: Sequence[WeylElement], elements: Sequence[WeylElement]):
        self.kind = kind
        self.generators = tuple(generators)
        self.elements: tuple[WeylElement, ...] = tuple(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self.index

    def __repr__(self) -> str:
        return f"Subgroup({self.kind}, order={self.order})"

    def issubset(self, other: Subgroup) -> bool:
        return all(g in other for g in self.elements)

    def same_set(self, other: Subgroup) -> bool:
        return self.order == other.order and self.issubset(other)

    def as_array(self) -> np.ndarray:
        return np.array([g.images for g in self.elements], dtype=np.int32)


class GroupTooLarge(RuntimeError):
    pass


def generate(gens: Sequence[WeylElement], kind: str | None = None, bound: int = 100_000) -> Subgroup:
    """Breadth-first closure of the generators under left multiplication."""
    if kind is None:
        if not gens:
            raise ValueError("generate needs a kind when no generators are given")
        kind = gens[0].kind
    if any(g.kind != kind for g in gens):
        raise ValueError("generators from different systems")
    n = system_of(kind).n_pos
    fulls = [g.full_action() for g in gens]
    start = np.arange(n, dtype=np.int32)[None, :]
    seen = {start.tobytes(): 0}
    rows = [start[0]]
    frontier = start
    while len(frontier):
        fresh = []
        for f in fulls:
            cand = f[frontier]
            for row in cand:
                key = row.tobytes()
                if key not in seen:
                    seen[key] = len(rows)
                    rows.append(row)
                    fresh.append(row)
                    if len(rows) > bound:
                        raise GroupTooLarge(f"closure exceeded {bound} elements")
        frontier = np.array(fresh, dtype=np.int32).reshape(-1, n)
    elements = [WeylElement(kind, tuple(r.tolist())) for r in rows]
    return Subgroup(kind, gens, elements)


def trivial(kind: str) -> Subgroup:
    return generate([], kind=kind)


@functools.lru_cache(maxsize=None)
def weyl_group(kind: str) -> Subgroup:
    s = system_of(kind)
    return generate([simple_reflection(kind, k) for k in range(1, s.rank + 1)])


def left_coset_reps(G: Subgroup, H: Subgroup) -> list[WeylElement]:
    """Canonical left transversal: each coset gH is represented by its shortlex-least member."""
    if not H.issubset(G):
        raise ValueError("H is not a subgroup of G")
    covered: set[WeylElement] = set()
    reps = []
    ordered = shortlex_elements(G.kind) if G.order == weyl_group(G.kind).order else sorted(G.elements, key=shortlex_key)
    for g in ordered:
        if g in covered:
            continue
        reps.append(g)
        covered.update(g * h for h in H.elements)
    assert len(reps) * H.order == G.order
    return reps


def setwise_stabilizer(G: Subgroup, X: Iterable[int]) -> Subgroup:
    """All g in G with g.X = X as sets of positive roots (X given as positive root indices)."""
    xs = frozenset(X)
    els = [g for g in G.elements if g.act_set(xs) == xs]
    return Subgroup(G.kind, (), els)


def is_normal(H: Subgroup, N: Subgroup) -> bool:
    return all(n * h * n.inverse() in H for n in N.elements for h in H.elements)


def semidirect_check(N: Subgroup, A: Subgroup, C: Subgroup) -> bool:
    """N = A x| C: trivial intersection, |A||C| = |N|, A normal in N and C a complement.

    The literal reading "C is normalised by A" is available as
    :func:`complement_normalized_by`.
    """
    if not (A.issubset(N) and C.issubset(N)):
        return False
    if sum(1 for g in A.elements if g in C) != 1:
        return False
    if A.order * C.order != N.order:
        return False
    return is_normal(A, N)


def complement_normalized_by(A: Subgroup, C: Subgroup) -> bool:
    """True iff a C a^-1 = C for every a in A."""
    return all(a * c * a.inverse() in C for a in A.elements for c in C.elements)


def fixed_subgroup(G: Subgroup, auto: Sequence[int] | Callable[[int], int]) -> Subgroup:
    """Elements commuting with a root-index permutation ``auto`` of all 2N roots."""
    n = system_of(G.kind).n_pos
    if callable(auto):
        auto = [auto(i) for i in range(2 * n)]
    a = np.asarray(auto, dtype=np.int32)
    arr = G.as_array()
    # g(a(i)) for positive i needs the action on negative indices too
    full = np.concatenate([arr, np.where(arr < n, arr + n, arr - n)], axis=1)
    lhs = a[arr]
    rhs = full[:, a[:n]]
    mask = np.all(lhs == rhs, axis=1)
    els = [g for g, keep in zip(G.elements, mask) if keep]
    return Subgroup(G.kind, (), els)


def coxeter_type_check(gens: Sequence[WeylElement], matrix: Sequence[Sequence[int]], order: int | None = None) -> bool:
    """Pairwise orders of the generators equal the Coxeter matrix (and the group has the given order)."""
    k = len(gens)
    for i in range(k):
        if gens[i].order() != 2:
            return False
        for j in range(i + 1, k):
            if (gens[i] * gens[j]).order() != matrix[i][j]:
                return False
    if order is not None:
        return generate(gens, kind=gens[0].kind if gens else None).order == order
    return True


def coxeter_matrix(k: int, bonds: Iterable[tuple[int, int, int]] = ()) -> list[list[int]]:
    """Coxeter matrix on k nodes (0-based) with bonds (i, j, m); other pairs commute."""
    m = [[1 if i == j else 2 for j in range(k)] for i in range(k)]
    for i, j, v in bonds:
        m[i][j] = m[j][i] = v
    return m


class CayleyTable:
    """Integer multiplication table of a fully enumerated group.

    Elements are numbered as in ``G.elements``; ``mul[a, b]`` is the index of
    ``G.elements[a] * G.elements[b]`` and ``root_image[a, i]`` the image of root
    index ``i`` (over all 2N roots) under element ``a``.
    """

    def __init__(self, G: Subgroup):
        self.group = G
        n = system_of(G.kind).n_pos
        simple = list(system_of(G.kind).simple_roots)
        arr = G.as_array()
        full = np.concatenate([arr, np.where(arr < n, arr + n, arr - n)], axis=1)
        self.root_image = full
        base = 2 * n
        weights = base ** np.arange(len(simple), dtype=np.int64)
        codes = (full[:, simple].astype(np.int64) * weights).sum(axis=1)
        lookup = {int(c): i for i, c in enumerate(codes)}
        if len(lookup) != len(codes):
            raise ValueError("elements are not determined by their images of the simple roots")
        # (a*b)(s) = a(b(s)) for every simple root s
        prod_codes = (full[:, full[:, simple]].astype(np.int64) * weights).sum(axis=2)
        sorter = np.argsort(codes)
        pos = np.searchsorted(codes[sorter], prod_codes)
        self.mul = sorter[pos].astype(np.int32)
        if not np.array_equal(codes[self.mul], prod_codes):
            raise ValueError("group is not closed under multiplication")
        self.identity = int(lookup[int((np.array(simple, dtype=np.int64) * weights).sum())])
        self.inv = np.argmax(self.mul == self.identity, axis=1).astype(np.int32)
        self.index = G.index

    def __len__(self) -> int:
        return len(self.group.elements)

    def element(self, a: int) -> WeylElement:
        return self.group.elements[a]


@functools.lru_cache(maxsize=None)
def cayley_table(kind: str) -> CayleyTable:
    return CayleyTable(weyl_group(kind))

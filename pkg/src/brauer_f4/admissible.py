"""Admissible root sets of E6 and F4: closure, catalogs, orbits and heights.

Sets are handled internally as frozensets of positive-root indices; the
catalogs wrap every admissible set in an :class:`AdmSet` carrying its orbit,
height and (for E6) whether the diagram flip fixes it.

The E6 closure rule: whenever three mutually orthogonal roots of the set are
the three outer nodes of a D4 subsystem whose central node is a root eta, the
fourth mutually orthogonal root of that D4 (beta + gamma + delta + 2 eta, with
signs chosen so that eta pairs to -1 with each outer root) joins the set.
"""
from __future__ import annotations

import functools
import heapq
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .rootsys import E6, F4, RootSystem, RootVector, build_e6, build_f4, folding, system_of
from .weyl import simple_reflection

# Y-labels of the orbit bases B_Y, listed in orbit order
E6_ORBIT_BASES: tuple[tuple[int, ...], ...] = ((), (2,), (1, 6), (2, 3, 5))


class ClosureError(RuntimeError):
    pass


@dataclass(frozen=True)
class AdmSet:
    system: str
    roots: tuple[int, ...]
    orbit_id: int
    height: int
    sigma_invariant: bool | None = None

    @property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.roots)

    def vectors(self) -> list[RootVector]:
        s = system_of(self.system)
        return [s.roots[i] for i in self.roots]

    def __len__(self) -> int:
        return len(self.roots)

    def __str__(self) -> str:
        s = system_of(self.system)
        return "{" + ", ".join(s.label(i) for i in self.roots) + "}"


def _indices(system: RootSystem, X: Iterable[int | RootVector]) -> frozenset[int]:
    out = set()
    for x in X:
        i = system.index(x) if isinstance(x, RootVector) else int(x)
        out.add(system.pos(i))
    return frozenset(out)


def mutually_orthogonal(system: RootSystem, xs: Iterable[int]) -> bool:
    xs = list(xs)
    return all(system.orthogonal(a, b) for a, b in itertools.combinations(xs, 2))


@functools.lru_cache(maxsize=None)
def _fourth_root_table() -> dict[tuple[int, int, int], int]:
    """(i<j<k) orthogonal positive E6 roots -> positive index of the completing root."""
    e6 = build_e6()
    n = e6.n_pos
    table: dict[tuple[int, int, int], int] = {}
    for tri in itertools.combinations(range(n), 3):
        if not mutually_orthogonal(e6, tri):
            continue
        found = None
        for eta in range(2 * n):
            prods = [e6.inner_index(eta, b) for b in tri]
            if any(abs(p) != 1 for p in prods):
                continue
            v = 2 * e6.roots[eta]
            for p, b in zip(prods, tri):
                v = v + (-int(p)) * e6.roots[b]
            if not e6.is_root(v):
                raise ClosureError(f"closure rule produced non-root {v}")
            idx = e6.pos(e6.index(v))
            if not all(e6.orthogonal(idx, b) for b in tri):
                raise ClosureError(f"closure rule produced non-orthogonal root {v}")
            if found is not None and found != idx:
                raise ClosureError(f"closure rule is ambiguous on {tri}")
            found = idx
        if found is not None:
            table[tri] = found
    return table


def close_e6(X: Iterable[int]) -> frozenset[int]:
    """Admissible closure of a mutually orthogonal set of positive E6 root indices."""
    e6 = build_e6()
    cur = set(X)
    if not mutually_orthogonal(e6, cur):
        raise ClosureError("closure of a non-orthogonal set")
    table = _fourth_root_table()
    changed = True
    while changed:
        changed = False
        for tri in itertools.combinations(sorted(cur), 3):
            extra = table.get(tri)
            if extra is not None and extra not in cur:
                cur.add(extra)
                changed = True
        if not mutually_orthogonal(e6, cur):
            raise ClosureError("closure rule broke orthogonality")
    return frozenset(cur)


def is_closed_e6(X: Iterable[int]) -> bool:
    X = frozenset(X)
    return mutually_orthogonal(build_e6(), X) and close_e6(X) == X


def preimage_set(X: Iterable[int]) -> frozenset[int]:
    """Positive E6 indices over a set of positive F4 indices."""
    fib = folding().fiber
    return frozenset(j for i in X for j in fib[i])


def project_set(B: Iterable[int]) -> frozenset[int]:
    proj = folding().project
    return frozenset(proj[j] for j in B)


def sigma_set(B: Iterable[int]) -> frozenset[int]:
    sig = folding().sigma
    return frozenset(sig[j] for j in B)


def is_admissible_f4_indices(X: frozenset[int]) -> bool:
    f4 = build_f4()
    if not mutually_orthogonal(f4, X):
        return False
    pre = preimage_set(X)
    return is_closed_e6(pre)


def _orthogonal_subsets(system: RootSystem) -> list[frozenset[int]]:
    n = system.n_pos
    out: list[frozenset[int]] = [frozenset()]

    def grow(cur: tuple[int, ...], start: int) -> None:
        for k in range(start, n):
            if all(system.orthogonal(k, c) for c in cur):
                nxt = cur + (k,)
                out.append(frozenset(nxt))
                grow(nxt, k + 1)

    grow((), 0)
    return out


class Catalog:
    """All admissible sets of one system, partitioned into Weyl orbits."""

    def __init__(self, system: str, sets: Sequence[frozenset[int]], orbit_key):
        self.system = system
        root_sys = system_of(system)
        gens = [simple_reflection(system, k) for k in range(1, root_sys.rank + 1)]
        remaining = set(sets)
        orbits: list[list[frozenset[int]]] = []
        while remaining:
            seed = min(remaining, key=lambda s: (len(s), sorted(s)))
            orbit = {seed}
            frontier = [seed]
            while frontier:
                nxt = []
                for s in frontier:
                    for g in gens:
                        t = g.act_set(s)
                        if t not in orbit:
                            orbit.add(t)
                            nxt.append(t)
                frontier = nxt
            if not orbit <= remaining:
                raise RuntimeError("Weyl group moved an admissible set outside the catalog")
            remaining -= orbit
            orbits.append(sorted(orbit, key=lambda s: sorted(s)))
        orbits.sort(key=lambda o: orbit_key(o[0]))
        self.orbits: list[list[frozenset[int]]] = orbits
        self.sets: list[frozenset[int]] = [s for o in orbits for s in o]
        self.index: dict[frozenset[int], int] = {s: i for i, s in enumerate(self.sets)}
        self.orbit_of: list[int] = [k for k, o in enumerate(orbits) for _ in o]
        self.heights: list[int] = [0] * len(self.sets)
        self.entries: list[AdmSet] = []

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.entries)

    def orbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)

    def lookup(self, X: Iterable[int]) -> AdmSet:
        return self.entries[self.index[frozenset(X)]]

    def _finish(self, heights: Sequence[int], sigma: Sequence[bool | None]) -> None:
        self.heights = list(heights)
        self.entries = [
            AdmSet(self.system, tuple(sorted(s)), self.orbit_of[i], heights[i], sigma[i])
            for i, s in enumerate(self.sets)
        ]


@functools.lru_cache(maxsize=None)
def e6_catalog() -> Catalog:
    e6 = build_e6()
    sets = [s for s in _orthogonal_subsets(e6) if close_e6(s) == s]
    cat = Catalog(E6, sets, orbit_key=lambda s: len(s))
    sig = folding().sigma
    inv = [frozenset(sig[j] for j in s) == s for s in cat.sets]
    cat._finish(_heights_e6(cat), inv)
    return cat


@functools.lru_cache(maxsize=None)
def f4_catalog() -> Catalog:
    f4 = build_f4()
    sets = [s for s in _orthogonal_subsets(f4) if is_admissible_f4_indices(s)]
    # orbit order: by size, then by number of short roots
    cat = Catalog(F4, sets, orbit_key=lambda s: (len(s), sum(1 for i in s if not f4.is_long(i))))
    e6cat = e6_catalog()
    heights = [e6cat.heights[e6cat.index[preimage_set(s)]] for s in cat.sets]
    cat._finish(heights, [None] * len(cat.sets))
    return cat


def orbit_base_e6(Y: Sequence[int]) -> frozenset[int]:
    """B_Y: closure of the simple roots labelled by Y."""
    e6 = build_e6()
    return close_e6(e6.simple_roots[y - 1] for y in Y)


def _heights_e6(cat: Catalog) -> list[int]:
    # local import: the letter action lives in the action module
    from .action import e6_set_action

    heights = [-1] * len(cat.sets)
    moves = [("R", k) for k in range(1, 7)] + [("E", k) for k in range(1, 7)]
    for Y in E6_ORBIT_BASES:
        base = orbit_base_e6(Y)
        orbit = cat.orbit_of[cat.index[base]]
        dist = {base: 0}
        dq = deque([base])
        while dq:
            b = dq.popleft()
            for kind, node in moves:
                t = e6_set_action(kind, node, b)
                if t == b or cat.orbit_of[cat.index[t]] != orbit:
                    continue
                c = dist[b] + (kind == "R")
                if t not in dist or c < dist[t]:
                    dist[t] = c
                    if kind == "R":
                        dq.append(t)
                    else:
                        dq.appendleft(t)
        for s, d in dist.items():
            heights[cat.index[s]] = d
    if min(heights) < 0:
        raise RuntimeError("some admissible set is unreachable from its orbit base")
    return heights


# public surface -------------------------------------------------------------


def closure_e6(X: Iterable[int | RootVector]) -> AdmSet:
    return e6_catalog().lookup(close_e6(_indices(build_e6(), X)))


def is_admissible_f4(X: Iterable[int | RootVector]) -> bool:
    return is_admissible_f4_indices(_indices(build_f4(), X))


def closure_f4_indices(X: frozenset[int]) -> frozenset[int]:
    cat = f4_catalog()
    supers = [s for s in cat.sets if X <= s]
    if not supers:
        raise ClosureError("no admissible F4 set contains the given roots")
    meet = frozenset.intersection(*supers)
    if meet not in cat.index:
        raise ClosureError("the admissible supersets have no least element")
    return meet


def closure_f4(X: Iterable[int | RootVector]) -> AdmSet:
    return f4_catalog().lookup(closure_f4_indices(_indices(build_f4(), X)))


def enumerate_catalog(system: str) -> Catalog:
    return e6_catalog() if system == E6 else f4_catalog()


def sigma_invariant_counts() -> tuple[int, ...]:
    cat = e6_catalog()
    return tuple(sum(1 for s in orbit if sigma_set(s) == s) for orbit in cat.orbits)


def sigma_bijection_check() -> bool:
    """p maps sigma-fixed E6 admissible sets bijectively onto admissible F4 sets."""
    e6cat, f4cat = e6_catalog(), f4_catalog()
    fixed = [s for s in e6cat.sets if sigma_set(s) == s]
    images = [project_set(s) for s in fixed]
    if len(set(images)) != len(fixed) or set(images) != set(f4cat.sets):
        return False
    return all(close_e6(preimage_set(x)) == s for s, x in zip(fixed, images))


def sigma_lift(X: Iterable[int]) -> frozenset[int]:
    """The sigma-invariant E6 admissible set over an admissible F4 set."""
    return close_e6(preimage_set(X))


def height(B: AdmSet) -> int:
    return B.height

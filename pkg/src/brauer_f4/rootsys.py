"""Exact root systems of type F4 and E6, the folding map and the diagram flip.

F4 roots are stored with doubled epsilon coordinates so that every entry is an
integer; E6 roots are stored as coefficient vectors on the simple roots
``alpha_1 .. alpha_6`` (Bourbaki labelling: 1-3-4-5-6 is the long arm and 2
hangs off 4).

Every root system keeps its roots in one fixed order: the positive roots sorted
lexicographically by stored coordinates occupy indices ``0 .. N-1`` and the
negative of root ``i`` sits at ``i + N``.  All downstream canonical choices are
made relative to this order.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

F4 = "F4"
E6 = "E6"

E6_CARTAN = (
    (2, 0, -1, 0, 0, 0),
    (0, 2, 0, -1, 0, 0),
    (-1, 0, 2, -1, 0, 0),
    (0, -1, -1, 2, -1, 0),
    (0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, -1, 2),
)

# doubled epsilon coordinates of beta_1 .. beta_4
F4_SIMPLE = (
    (1, -1, -1, -1),
    (0, 2, 0, 0),
    (0, -2, 2, 0),
    (0, 0, -2, 2),
)

# p(alpha_i) as an F4 simple-root number, i = 1..6
PROJECTION_TABLE = {1: 1, 2: 4, 3: 2, 4: 3, 5: 2, 6: 1}

# sigma on E6 node labels
SIGMA_NODES = {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}


@dataclass(frozen=True, order=True)
class RootVector:
    """An integer vector tagged with the root system it lives in."""

    kind: str
    coords: tuple[int, ...]

    def __add__(self, other: RootVector) -> RootVector:
        _same_kind(self, other)
        return RootVector(self.kind, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: RootVector) -> RootVector:
        _same_kind(self, other)
        return RootVector(self.kind, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> RootVector:
        return RootVector(self.kind, tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> RootVector:
        return RootVector(self.kind, tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        if self.kind == E6:
            terms = [f"{c}a{i}" if c != 1 else f"a{i}" for i, c in enumerate(self.coords, 1) if c]
            return "+".join(terms).replace("+-", "-") or "0"
        return "(" + ",".join(_half(c) for c in self.coords) + ")"


def _half(c: int) -> str:
    return str(c // 2) if c % 2 == 0 else f"{c}/2"


def _same_kind(u: RootVector, v: RootVector) -> None:
    if u.kind != v.kind:
        raise ValueError(f"mixed root systems: {u.kind} and {v.kind}")


def _raw_inner(kind: str, a: tuple[int, ...], b: tuple[int, ...]) -> Fraction:
    if kind == F4:
        return Fraction(sum(x * y for x, y in zip(a, b)), 4)
    return Fraction(sum(a[i] * E6_CARTAN[i][j] * b[j] for i in range(6) for j in range(6)))


class RootSystem:
    """Roots of F4 or E6 with a fixed index order and an exact bilinear form."""

    def __init__(self, kind: str, positive: Iterable[tuple[int, ...]], simple: Iterable[tuple[int, ...]]):
        self.kind = kind
        pos = sorted(set(positive))
        self.n_pos = len(pos)
        self.roots: tuple[RootVector, ...] = tuple(RootVector(kind, c) for c in pos) + tuple(
            RootVector(kind, tuple(-x for x in c)) for c in pos
        )
        self._index = {r: i for i, r in enumerate(self.roots)}
        if len(self._index) != 2 * self.n_pos:
            raise ValueError("positive roots are not closed away from their negatives")
        self.simple_roots: tuple[int, ...] = tuple(self._index[RootVector(kind, c)] for c in simple)
        self.rank = len(self.simple_roots)
        n = len(self.roots)
        self._gram = [[_raw_inner(kind, self.roots[i].coords, self.roots[j].coords) for j in range(n)] for i in range(n)]

    def __repr__(self) -> str:
        return f"RootSystem({self.kind}, {self.n_pos} positive roots)"

    @property
    def positive_roots(self) -> tuple[RootVector, ...]:
        return self.roots[: self.n_pos]

    def simple(self, node: int) -> RootVector:
        """Simple root with 1-based node label."""
        return self.roots[self.simple_roots[node - 1]]

    def index(self, v: RootVector) -> int:
        if v.kind != self.kind:
            raise ValueError(f"{v.kind} vector passed to {self.kind} system")
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"{v} is not a root of {self.kind}") from None

    def is_root(self, v: RootVector) -> bool:
        return v.kind == self.kind and v in self._index

    def is_positive_index(self, i: int) -> bool:
        return i < self.n_pos

    def neg(self, i: int) -> int:
        return i + self.n_pos if i < self.n_pos else i - self.n_pos

    def pos(self, i: int) -> int:
        """Index of the positive root among +-root i."""
        return i if i < self.n_pos else i - self.n_pos

    def inner_index(self, i: int, j: int) -> Fraction:
        return self._gram[i][j]

    def inner(self, u: RootVector, v: RootVector) -> Fraction:
        _same_kind(u, v)
        if u.kind != self.kind:
            raise ValueError(f"{u.kind} vectors passed to {self.kind} system")
        return _raw_inner(self.kind, u.coords, v.coords)

    def norm2(self, i: int) -> Fraction:
        return self._gram[i][i]

    def is_long(self, i: int) -> bool:
        return self._gram[i][i] == 2

    def reflect(self, mirror: RootVector, target: RootVector) -> RootVector:
        if mirror.is_zero():
            raise ValueError("cannot reflect in the zero vector")
        k = 2 * self.inner(target, mirror) / self.inner(mirror, mirror)
        if k.denominator != 1:
            raise ValueError(f"{mirror} does not act integrally on {target}")
        return target - int(k) * mirror

    def reflect_index(self, m: int, t: int) -> int:
        k = 2 * self._gram[t][m] / self._gram[m][m]
        v = self.roots[t] - int(k) * self.roots[m]
        return self._index[v]

    def orthogonal(self, i: int, j: int) -> bool:
        return self._gram[i][j] == 0

    def label(self, i: int) -> str:
        return str(self.roots[i])


@functools.lru_cache(maxsize=None)
def build_f4() -> RootSystem:
    """The 24 positive roots of F4 in doubled epsilon coordinates.

    Positivity is the one induced by the simple roots beta_1..beta_4, which
    makes eps_1 - eps_j (j > 1) positive rather than eps_j - eps_1.
    """
    roots: set[tuple[int, ...]] = set()
    for signs in itertools.product((1, -1), repeat=4):
        roots.add(signs)
    for i in range(4):
        for s in (2, -2):
            v = [0, 0, 0, 0]
            v[i] = s
            roots.add(tuple(v))
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product((2, -2), repeat=2):
            v = [0, 0, 0, 0]
            v[i], v[j] = si, sj
            roots.add(tuple(v))
    # positive on every simple root: a1 > a2 + a3 + a4 and 0 < a2 < a3 < a4
    height = (10, 1, 2, 3)
    pos = [r for r in roots if sum(a * b for a, b in zip(height, r)) > 0]
    return RootSystem(F4, pos, F4_SIMPLE)


@functools.lru_cache(maxsize=None)
def build_e6() -> RootSystem:
    """Close the E6 simple roots under simple reflections; keep the positive half."""
    simple = [tuple(int(i == j) for j in range(6)) for i in range(6)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for s in range(6):
                k = sum(E6_CARTAN[s][j] * v[j] for j in range(6))
                w = tuple(v[j] - k * (j == s) for j in range(6))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
        if len(seen) > 72:
            break
    if len(seen) != 72:
        raise RuntimeError(f"E6 reflection closure gave {len(seen)} roots, expected 72")
    pos = [v for v in seen if all(c >= 0 for c in v)]
    return RootSystem(E6, pos, simple)


def system_of(kind: str) -> RootSystem:
    if kind == F4:
        return build_f4()
    if kind == E6:
        return build_e6()
    raise ValueError(f"unknown root system {kind!r}")


def f4_vector(*eps: Fraction | int) -> RootVector:
    """F4 vector from ordinary epsilon coordinates (halves allowed)."""
    doubled = []
    for x in eps:
        d = Fraction(x) * 2
        if d.denominator != 1:
            raise ValueError(f"coordinate {x} is not a half-integer")
        doubled.append(int(d))
    return RootVector(F4, tuple(doubled))


def e6_vector(*coeffs: int) -> RootVector:
    return RootVector(E6, tuple(coeffs))


def f4_simple_combination(*coeffs: int) -> RootVector:
    """sum c_i beta_i as an F4 vector."""
    acc = [0, 0, 0, 0]
    for c, b in zip(coeffs, F4_SIMPLE):
        for k in range(4):
            acc[k] += c * b[k]
    return RootVector(F4, tuple(acc))


def inner(u: RootVector, v: RootVector, system: RootSystem | None = None) -> Fraction:
    _same_kind(u, v)
    system = system or system_of(u.kind)
    return system.inner(u, v)


def reflect(mirror: RootVector, target: RootVector) -> RootVector:
    _same_kind(mirror, target)
    return system_of(mirror.kind).reflect(mirror, target)


def project(e6_root: RootVector) -> RootVector:
    """The folding map p, extended linearly from its values on simple roots."""
    if e6_root.kind != E6:
        raise ValueError("project expects an E6 vector")
    return f4_simple_combination(*_projected_coeffs(e6_root.coords))


def _projected_coeffs(c: tuple[int, ...]) -> list[int]:
    out = [0, 0, 0, 0]
    for node, coeff in enumerate(c, 1):
        out[PROJECTION_TABLE[node] - 1] += coeff
    return out


def sigma_root(e6_root: RootVector) -> RootVector:
    if e6_root.kind != E6:
        raise ValueError("sigma_root expects an E6 vector")
    c = [0] * 6
    for node, coeff in enumerate(e6_root.coords, 1):
        c[SIGMA_NODES[node] - 1] += coeff
    return RootVector(E6, tuple(c))


def preimage(f4_root: RootVector) -> frozenset[RootVector]:
    """Positive E6 roots folding onto a positive F4 root."""
    f4 = build_f4()
    i = f4.index(f4_root)
    if not f4.is_positive_index(i):
        raise ValueError(f"{f4_root} is not a positive F4 root")
    return frozenset(build_e6().roots[j] for j in folding().fiber[i])


@dataclass(frozen=True)
class Folding:
    """Index-level tables for p and sigma between the E6 and F4 root lists."""

    project: tuple[int, ...]  # E6 root index -> F4 root index
    sigma: tuple[int, ...]  # E6 root index -> E6 root index
    fiber: tuple[tuple[int, ...], ...]  # positive F4 index -> positive E6 indices

    def fiber_size(self, f4_index: int) -> int:
        return len(self.fiber[f4_index])


@functools.lru_cache(maxsize=None)
def folding() -> Folding:
    e6, f4 = build_e6(), build_f4()
    proj = tuple(f4.index(project(r)) for r in e6.roots)
    sig = tuple(e6.index(sigma_root(r)) for r in e6.roots)
    fib: list[list[int]] = [[] for _ in range(f4.n_pos)]
    for j in range(e6.n_pos):
        i = proj[j]
        if not f4.is_positive_index(i):
            raise RuntimeError(f"positive E6 root {e6.roots[j]} folds to a negative root")
        fib[i].append(j)
    return Folding(proj, sig, tuple(tuple(f) for f in fib))

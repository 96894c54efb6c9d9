"""Defining relations of Br(F4) and of the simply laced Brauer monoid on E6.

Each relation reads ``lhs = delta**shift * rhs`` and carries a short kind
label; ``F4_RELATION_KINDS`` lists the kinds of the F4 presentation in order,
from ``r_i^2 = 1`` to ``e2 e3 r2 = e2 e3``.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .action import GenLetter, GenWord, e6_tables, f4_tables, phi
from .rootsys import E6, F4

F4_SIMPLE_BONDS = ((1, 2), (3, 4))
F4_NON_ADJACENT = ((1, 3), (1, 4), (2, 4))
F4_SHORT = (1, 2)

E6_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4))

F4_RELATION_KINDS = (
    "involution",
    "absorb",
    "loop",
    "short-loop",
    "commute-rr",
    "commute-er",
    "commute-ee",
    "braid",
    "braid-e",
    "conjugate-e",
    "braid-b2",
    "b2-absorb",
    "b2-ee",
    "b2-conjugate",
    "b2-loop-r",
    "b2-loop-e",
    "b2-tail-r",
    "b2-tail-e",
)


@dataclass(frozen=True)
class Relation:
    label: str
    lhs: GenWord
    rhs: GenWord
    shift: int = 0

    def __str__(self) -> str:
        d = "" if self.shift == 0 else ("d " if self.shift == 1 else f"d^{self.shift} ")
        return f"({self.label}) {self.lhs} = {d}{self.rhs}"


def _w(system: str, text: str) -> GenWord:
    return GenWord.parse(text, system)


@dataclass(frozen=True)
class RelationPack:
    system: str
    relations: tuple[Relation, ...]

    def __iter__(self):
        return iter(self.relations)

    def __len__(self) -> int:
        return len(self.relations)

    def by_label(self, label: str) -> list[Relation]:
        return [r for r in self.relations if r.label == label]

    def restrict(self, nodes: set[int]) -> RelationPack:
        keep = [r for r in self.relations if all(x.kind == "d" or x.node in nodes for x in r.lhs.letters + r.rhs.letters)]
        return RelationPack(self.system, tuple(keep))

    def as_int_relations(self) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
        """Relations over generator numbers 0..2n-1 (r_1..r_n, e_1..e_n)."""
        return [(letter_codes(r.lhs), letter_codes(r.rhs), r.shift) for r in self.relations]

    def action_incompatible(self) -> list[Relation]:
        """Relations whose two sides act differently (left or right) on some admissible set."""
        tables = e6_tables() if self.system == E6 else f4_tables()
        bad = []
        n = len(tables.catalog)
        for r in self.relations:
            for b in range(n):
                if tables.left(r.lhs, b) != tables.left(r.rhs, b) or tables.right(b, r.lhs) != tables.right(b, r.rhs):
                    bad.append(r)
                    break
        return bad

    def phi_incompatible(self) -> list[Relation]:
        """F4 relations whose phi-images act differently on some admissible E6 set."""
        if self.system != F4:
            raise ValueError("phi is defined on F4 words")
        t = e6_tables()
        bad = []
        for r in self.relations:
            lhs, rhs = phi(r.lhs), phi(r.rhs)
            for b in range(len(t.catalog)):
                if t.left(lhs, b) != t.left(rhs, b) or t.right(b, lhs) != t.right(b, rhs):
                    bad.append(r)
                    break
        return bad


def letter_codes(w: GenWord) -> tuple[int, ...]:
    """r_i -> i-1, e_i -> rank+i-1; delta letters must be absent."""
    from .rootsys import system_of

    rank = system_of(w.system).rank
    out = []
    for x in w.letters:
        if x.kind == "d":
            raise ValueError("delta letters have no generator code")
        out.append(x.node - 1 if x.kind == "r" else rank + x.node - 1)
    return tuple(out)


def code_letter(code: int, rank: int) -> GenLetter:
    return GenLetter("r", code + 1) if code < rank else GenLetter("e", code - rank + 1)


@functools.lru_cache(maxsize=None)
def f4_relations() -> RelationPack:
    rels: list[Relation] = []

    def add(label: str, lhs: str, rhs: str, shift: int = 0) -> None:
        rels.append(Relation(label, _w(F4, lhs), _w(F4, rhs), shift))

    for i in range(1, 5):
        add("involution", f"r{i} r{i}", "")
    for i in range(1, 5):
        add("absorb", f"r{i} e{i}", f"e{i}")
        add("absorb", f"e{i} r{i}", f"e{i}")
    for i in (3, 4):
        add("loop", f"e{i} e{i}", f"e{i}", 1)
    for i in F4_SHORT:
        add("short-loop", f"e{i} e{i}", f"e{i}", 2)
    for i, j in F4_NON_ADJACENT:
        add("commute-rr", f"r{i} r{j}", f"r{j} r{i}")
    for i, j in F4_NON_ADJACENT:
        add("commute-er", f"e{i} r{j}", f"r{j} e{i}")
        add("commute-er", f"e{j} r{i}", f"r{i} e{j}")
    for i, j in F4_NON_ADJACENT:
        add("commute-ee", f"e{i} e{j}", f"e{j} e{i}")
    for i, j in F4_SIMPLE_BONDS:
        add("braid", f"r{i} r{j} r{i}", f"r{j} r{i} r{j}")
    for a, b in F4_SIMPLE_BONDS:
        for i, j in ((a, b), (b, a)):
            add("braid-e", f"r{j} r{i} e{j}", f"e{i} e{j}")
    for i, j in F4_SIMPLE_BONDS:
        add("conjugate-e", f"r{i} e{j} r{i}", f"r{j} e{i} r{j}")
    add("braid-b2", "r2 r3 r2 r3", "r3 r2 r3 r2")
    add("b2-absorb", "r2 r3 e2", "r3 e2")
    add("b2-ee", "r2 e3 r2 e3", "e3 e2 e3")
    add("b2-conjugate", "r2 r3 r2 e3", "e3 r2 r3 r2")
    add("b2-loop-r", "e2 r3 e2", "e2", 1)
    add("b2-loop-e", "e2 e3 e2", "e2", 1)
    add("b2-tail-r", "e2 r3 r2", "e2 r3")
    add("b2-tail-e", "e2 e3 r2", "e2 e3")
    return RelationPack(F4, tuple(rels))


@functools.lru_cache(maxsize=None)
def e6_relations() -> RelationPack:
    rels: list[Relation] = []

    def add(label: str, lhs: str, rhs: str, shift: int = 0) -> None:
        rels.append(Relation(label, _w(E6, lhs), _w(E6, rhs), shift))

    adjacent = {frozenset(e) for e in E6_EDGES}
    for i in range(1, 7):
        add("involution", f"r{i} r{i}", "")
        add("absorb", f"r{i} e{i}", f"e{i}")
        add("absorb", f"e{i} r{i}", f"e{i}")
        add("loop", f"e{i} e{i}", f"e{i}", 1)
    for i, j in itertools.combinations(range(1, 7), 2):
        if frozenset((i, j)) in adjacent:
            add("braid", f"r{i} r{j} r{i}", f"r{j} r{i} r{j}")
            add("braid-e", f"r{j} r{i} e{j}", f"e{i} e{j}")
            add("braid-e", f"r{i} r{j} e{i}", f"e{j} e{i}")
            add("conjugate-e", f"r{i} e{j} r{i}", f"r{j} e{i} r{j}")
        else:
            add("commute-rr", f"r{i} r{j}", f"r{j} r{i}")
            add("commute-er", f"e{i} r{j}", f"r{j} e{i}")
            add("commute-er", f"e{j} r{i}", f"r{i} e{j}")
            add("commute-ee", f"e{i} e{j}", f"e{j} e{i}")
    return RelationPack(E6, tuple(rels))

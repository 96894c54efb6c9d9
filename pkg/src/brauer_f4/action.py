"""Generator words and the Brauer-monoid action on admissible root sets.

E6 letters act on admissible E6 sets: ``R_i`` by reflection (negatives made
positive), ``E_i`` by the three-case rule, ``delta`` trivially.  F4 letters act
on admissible F4 sets by translating through phi, acting on the
sigma-invariant lift and folding back with p.  Right actions are left actions
of the reversed word.
"""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .admissible import (
    close_e6,
    e6_catalog,
    f4_catalog,
    project_set,
    sigma_lift,
)
from .rootsys import E6, F4, build_e6, system_of
from .weyl import reflection, simple_reflection

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True, order=True)
class GenLetter:
    """One generator: kind 'r' or 'e' with a node, or 'd' with exponent +-1 for delta."""

    kind: str
    node: int

    def __post_init__(self) -> None:
        if self.kind not in ("r", "e", "d"):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.kind == "d" and self.node not in (1, -1):
            raise ValueError("delta letters carry exponent +1 or -1")

    def __str__(self) -> str:
        if self.kind == "d":
            return "d" if self.node == 1 else "d^-1"
        return f"{self.kind}{self.node}"


@dataclass(frozen=True)
class GenWord:
    system: str
    letters: tuple[GenLetter, ...] = ()

    def __post_init__(self) -> None:
        rank = system_of(self.system).rank
        for x in self.letters:
            if x.kind != "d" and not 1 <= x.node <= rank:
                raise ValueError(f"node {x.node} out of range for {self.system}")

    def __add__(self, other: GenWord) -> GenWord:
        if other.system != self.system:
            raise ValueError("cannot concatenate words of different systems")
        return GenWord(self.system, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def op(self) -> GenWord:
        return GenWord(self.system, self.letters[::-1])

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        upper = self.system == E6
        return " ".join(str(x).upper() if upper and x.kind != "d" else str(x) for x in self.letters)

    @classmethod
    def parse(cls, text: str, system: str = F4) -> GenWord:
        """Parse e.g. ``"e4 r3 e2 e3 e4"``, ``"R1 E6 d d^-1"`` or ``"e2e3"``."""
        letters = []
        for tok in re.findall(r"d\^-1|[rReEdD]\d*", text.replace(" ", "")):
            low = tok.lower()
            if low.startswith("d"):
                letters.append(GenLetter("d", -1 if "^-1" in low else 1))
            else:
                letters.append(GenLetter(low[0], int(low[1:])))
        return cls(system, tuple(letters))

    def delta_degree(self) -> int:
        return sum(x.node for x in self.letters if x.kind == "d")


def word(text: str, system: str = F4) -> GenWord:
    return GenWord.parse(text, system)


# E6 action on frozensets --------------------------------------------------------


def e6_set_action(kind: str, node: int, B: frozenset[int]) -> frozenset[int]:
    """R_node or E_node applied on the left to an admissible E6 set."""
    kind = kind.upper()
    e6 = build_e6()
    if kind == "R":
        return simple_reflection(E6, node).act_set(B)
    if kind != "E":
        raise ValueError(kind)
    a = e6.simple_roots[node - 1]
    if a in B:
        return B
    off = sorted(b for b in B if not e6.orthogonal(a, b))
    if not off:
        return close_e6(B | {a})
    beta = off[0]
    return reflection(e6.roots[beta]).act_set(simple_reflection(E6, node).act_set(B))


def e6_case3_choices(node: int, B: frozenset[int]) -> set[frozenset[int]]:
    """Every possible case-3 image of E_node on B, one per non-orthogonal beta."""
    e6 = build_e6()
    a = e6.simple_roots[node - 1]
    ri = simple_reflection(E6, node).act_set(B)
    return {reflection(e6.roots[b]).act_set(ri) for b in B if not e6.orthogonal(a, b)}


# phi on letters -------------------------------------------------------------

PHI_LETTERS: dict[tuple[str, int], tuple[tuple[str, int], ...]] = {
    ("r", 1): (("r", 1), ("r", 6)),
    ("r", 2): (("r", 3), ("r", 5)),
    ("r", 3): (("r", 4),),
    ("r", 4): (("r", 2),),
    ("e", 1): (("e", 1), ("e", 6)),
    ("e", 2): (("e", 3), ("e", 5)),
    ("e", 3): (("e", 4),),
    ("e", 4): (("e", 2),),
}


def phi(w: GenWord) -> GenWord:
    """Letterwise substitution of an F4 word into E6 letters; delta passes through."""
    if w.system != F4:
        raise ValueError("phi expects an F4 word")
    out: list[GenLetter] = []
    for x in w.letters:
        if x.kind == "d":
            out.append(x)
        else:
            out.extend(GenLetter(k, n) for k, n in PHI_LETTERS[(x.kind, x.node)])
    return GenWord(E6, tuple(out))


# tabulated actions ------------------------------------------------------------


class ActionTables:
    """Letter actions as integer tables over a catalog's set indices."""

    def __init__(self, system: str):
        self.system = system
        if system == E6:
            cat = e6_catalog()
            self.catalog = cat
            self.table = {
                (k, n): [cat.index[e6_set_action(k, n, s)] for s in cat.sets]
                for k in ("r", "e")
                for n in range(1, 7)
            }
        else:
            cat = f4_catalog()
            e6t = e6_tables()
            self.catalog = cat
            lifts = [e6t.catalog.index[sigma_lift(s)] for s in cat.sets]
            self.table = {}
            for (k, n), seq in PHI_LETTERS.items():
                row = []
                for li in lifts:
                    b = li
                    for kk, nn in reversed(seq):
                        b = e6t.table[(kk, nn)][b]
                    row.append(cat.index[project_set(e6t.catalog.sets[b])])
                self.table[(k, n)] = row

    def left(self, w: GenWord, b: int) -> int:
        for x in reversed(w.letters):
            if x.kind != "d":
                b = self.table[(x.kind, x.node)][b]
        return b

    def right(self, b: int, w: GenWord) -> int:
        for x in w.letters:
            if x.kind != "d":
                b = self.table[(x.kind, x.node)][b]
        return b

    @property
    def empty(self) -> int:
        return self.catalog.index[frozenset()]


@functools.lru_cache(maxsize=None)
def e6_tables() -> ActionTables:
    return ActionTables(E6)


@functools.lru_cache(maxsize=None)
def f4_tables() -> ActionTables:
    return ActionTables(F4)


# public surface -------------------------------------------------------------


def _tables(system: str) -> ActionTables:
    return e6_tables() if system == E6 else f4_tables()


def act_left(letter: GenLetter, B: Iterable[int], system: str = E6) -> frozenset[int]:
    t = _tables(system)
    b = t.catalog.index[frozenset(B)]
    return t.catalog.sets[t.left(GenWord(system, (letter,)), b)]


def act_word_left(w: GenWord, B: Iterable[int]) -> frozenset[int]:
    t = _tables(w.system)
    return t.catalog.sets[t.left(w, t.catalog.index[frozenset(B)])]


def act_word_right(B: Iterable[int], w: GenWord) -> frozenset[int]:
    t = _tables(w.system)
    return t.catalog.sets[t.right(t.catalog.index[frozenset(B)], w)]


def act_f4(w: GenWord, X: Iterable[int], side: str = LEFT) -> frozenset[int]:
    """F4 action computed through the sigma-invariant lift (independently of the F4 tables)."""
    if w.system != F4:
        raise ValueError("act_f4 expects an F4 word")
    e6t = e6_tables()
    b = e6t.catalog.index[sigma_lift(X)]
    img = phi(w)
    b = e6t.left(img, b) if side == LEFT else e6t.right(b, img)
    return project_set(e6t.catalog.sets[b])


def left_set(w: GenWord) -> frozenset[int]:
    """w applied to the empty set."""
    return act_word_left(w, frozenset())


def right_set(w: GenWord) -> frozenset[int]:
    """The empty set acted on by w from the right."""
    return act_word_right(frozenset(), w)


def fingerprint(w: GenWord) -> tuple[int, int]:
    """(left set, right set) of a word as catalog indices of its own system."""
    t = _tables(w.system)
    return t.left(w, t.empty), t.right(t.empty, w)


def letters(seq: Sequence[tuple[str, int]], system: str = F4) -> GenWord:
    return GenWord(system, tuple(GenLetter(k, n) for k, n in seq))

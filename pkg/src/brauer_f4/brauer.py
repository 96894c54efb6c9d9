"""Monomials of Br(F4) in normal form, left multiplication, products and op.

The regular representation comes from a complete enumeration of the monoid
presented by the defining relations, with delta treated as a central weight
(see :mod:`brauer_f4.enumeration`).  On top of that table every monomial gets
a normal form

    delta^k * u * s * v * w,   u in D^L(s), v in C(s), w^-1 in D^R(s),

with ``s`` one of eleven middle words.  The normal-form tuples are matched
bijectively with the enumerated nodes; the pass-through maps and the
``e_gamma * s`` reduce table are read off the table, and a structured left
multiplication built only from group arithmetic plus those two tables is
checked against the table on every (generator, basis element) pair.
"""
from __future__ import annotations

import functools
import itertools
import logging
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .action import GenLetter, GenWord, e6_tables, f4_tables, phi
from .admissible import E6_ORBIT_BASES, closure_f4_indices, e6_catalog, f4_catalog, orbit_base_e6, sigma_set
from .enumeration import MonoidTable, build_table
from .relations import code_letter, f4_relations, letter_codes
from .rootsys import E6, F4, build_e6, build_f4, folding
from .stabilizers import (
    MIRROR_SHAPE,
    N_SHAPES,
    ShapeData,
    build_groups,
    e_root_word,
    e_set_word,
)
from .weyl import (
    Subgroup,
    WeylElement,
    cayley_table,
    fixed_subgroup,
    generate,
    reduced_word,
    simple_reflection,
    trivial,
    weyl_group,
)

log = logging.getLogger(__name__)

RANK = 4
NGENS = 2 * RANK
GEN_NAMES = tuple(f"r{i}" for i in range(1, 5)) + tuple(f"e{i}" for i in range(1, 5))


class CertificationError(RuntimeError):
    """A derived table disagrees with the enumerated monoid."""


@dataclass(frozen=True, order=True)
class NormalFormF4:
    """delta^delta_exp * u * middle(shape_id) * v * w."""

    delta_exp: int
    shape_id: int
    u: WeylElement
    v: WeylElement
    w: WeylElement

    def word(self) -> GenWord:
        """The monomial without its delta power."""
        br = brauer()
        return br.word_of_state((0, self.shape_id, br.W.index[self.u], br.W.index[self.v], br.W.index[self.w]))

    def key(self) -> tuple[int, WeylElement, WeylElement, WeylElement]:
        return (self.shape_id, self.u, self.v, self.w)

    def __str__(self) -> str:
        d = "" if self.delta_exp == 0 else f"d^{self.delta_exp} "
        return f"{d}[{self.word()}]"


# internal states are (k, shape, u, v, w) with group elements as Cayley indices
State = tuple[int, int, int, int, int]


def word_codes(w: GenWord) -> tuple[tuple[int, ...], int]:
    """(generator codes, delta degree) of an F4 word."""
    if w.system != F4:
        raise ValueError("expected an F4 word")
    plain = GenWord(F4, tuple(x for x in w.letters if x.kind != "d"))
    return letter_codes(plain), w.delta_degree()


def codes_word(codes: Iterable[int]) -> GenWord:
    return GenWord(F4, tuple(code_letter(c, RANK) for c in codes))


@dataclass
class ShapeTables:
    data: ShapeData
    middle: tuple[int, ...]
    left: np.ndarray  # Cayley indices of D^L
    pass_elems: np.ndarray  # Cayley indices of C
    right: np.ndarray  # Cayley indices of right transversal
    lsplit_d: np.ndarray  # g -> d with g = d n
    lsplit_n: np.ndarray
    rsplit_n: np.ndarray  # g -> n with g = n w
    rsplit_w: np.ndarray
    pass_left: np.ndarray  # n in N^L -> c with n s = s c (others -1)
    pass_right: np.ndarray  # n in N^R -> c with s n = s c


class BrauerF4:
    """All derived tables; build once through :func:`brauer`."""

    def __init__(self, table: MonoidTable | None = None):
        self.W = cayley_table(F4)
        self.table = table if table is not None else build_table(NGENS, f4_relations().as_int_relations())
        self.left_t, self.left_s = self.table.left_table()
        self.size = len(self.table)
        f4 = build_f4()
        self.n_pos = f4.n_pos
        self.simple_roots = list(f4.simple_roots)
        self.wwords: list[tuple[int, ...]] = [tuple(k - 1 for k in reduced_word(g)) for g in self.W.group.elements]
        self.shapes = [self._shape_tables(sd) for sd in build_groups()]
        self._match_nodes()
        self._derive_pass_maps()
        self._build_reduce_table()

    # construction ------------------------------------------------------------

    def _shape_tables(self, sd: ShapeData) -> ShapeTables:
        ix = self.W.index
        idx = lambda els: np.array([ix[g] for g in els], dtype=np.int32)  # noqa: E731
        left, right, pass_elems = idx(sd.left_transversal), idx(sd.right_transversal), idx(sd.pass_group.elements)
        NL, NR = idx(sd.left_group.elements), idx(sd.right_group.elements)
        n = len(self.W)
        ld, ln = np.full(n, -1, np.int32), np.full(n, -1, np.int32)
        for d in left:
            g = self.W.mul[d, NL]
            ld[g], ln[g] = d, NL
        rn, rw = np.full(n, -1, np.int32), np.full(n, -1, np.int32)
        for w in right:
            g = self.W.mul[NR, w]
            rn[g], rw[g] = NR, w
        if (ld < 0).any() or (rn < 0).any():
            raise CertificationError(f"shape {sd.shape_id}: transversal does not cover W(F4)")
        middle, _ = word_codes(sd.middle_word)
        pl = np.full(n, -1, np.int32)
        pr = np.full(n, -1, np.int32)
        pl[NL] = -2
        pr[NR] = -2
        return ShapeTables(sd, middle, left, pass_elems, right, ld, ln, rn, rw, pl, pr)

    def _match_nodes(self) -> None:
        """Trace every normal-form word; the map to enumerated nodes must be a bijection."""
        n = self.size
        self.node_state = np.full((n, 4), -1, dtype=np.int32)  # shape, u, v, w
        self.node_corr = np.zeros(n, dtype=np.int64)  # word(nf) = delta^corr m_node
        self.state_node: dict[tuple[int, int, int, int], int] = {}
        trace = self.table.trace
        for s, st in enumerate(self.shapes):
            for u in st.left:
                x0, d0 = trace(self.wwords[u] + st.middle)
                for v in st.pass_elems:
                    x1, d1 = trace(self.wwords[v], x0)
                    for w in st.right:
                        x, d = trace(self.wwords[w], x1)
                        if self.node_state[x, 0] >= 0:
                            raise CertificationError(
                                f"normal forms {tuple(self.node_state[x])} and {(s, u, v, w)} give the same monomial"
                            )
                        self.node_state[x] = (s, u, v, w)
                        self.node_corr[x] = d0 + d1 + d
                        self.state_node[(s, int(u), int(v), int(w))] = x
        if len(self.state_node) != n:
            raise CertificationError(f"{len(self.state_node)} normal forms for {n} monomials")

    def _derive_pass_maps(self) -> None:
        trace = self.table.trace
        self.pass_log: list[str] = []
        for s, st in enumerate(self.shapes):
            target = {}
            for c in st.pass_elems:
                x, d = trace(st.middle + self.wwords[c])
                if x in target:
                    raise CertificationError(f"shape {s}: middle * c is not injective on C")
                target[x] = (int(c), d)
            for side, arr in (("left", st.pass_left), ("right", st.pass_right)):
                for g in np.nonzero(arr == -2)[0]:
                    word = self.wwords[g] + st.middle if side == "left" else st.middle + self.wwords[g]
                    x, d = trace(word)
                    if x not in target or target[x][1] != d:
                        raise CertificationError(f"shape {s}: {side} group element {g} does not pass through")
                    arr[g] = target[x][0]
            # restricted to C the maps are the identity and they are homomorphisms
            for arr, grp in ((st.pass_left, st.data.left_group), (st.pass_right, st.data.right_group)):
                if not np.array_equal(arr[st.pass_elems], st.pass_elems):
                    raise CertificationError(f"shape {s}: pass map is not the identity on C")
                members = np.array([self.W.index[g] for g in grp.elements], dtype=np.int32)
                for gen in grp.generators or grp.elements[:0]:
                    a = self.W.index[gen]
                    lhs = arr[self.W.mul[a, members]]
                    rhs = self.W.mul[arr[a], arr[members]]
                    if not np.array_equal(lhs, rhs):
                        raise CertificationError(f"shape {s}: pass map is not a homomorphism")
            for gen in st.data.left_group.generators:
                self.pass_log.append(
                    f"shape {s} left  {gen!r} -> {self.W.element(st.pass_left[self.W.index[gen]])!r}"
                )
            for gen in st.data.right_group.generators:
                self.pass_log.append(
                    f"shape {s} right {gen!r} -> {self.W.element(st.pass_right[self.W.index[gen]])!r}"
                )

    def _build_reduce_table(self) -> None:
        """e_gamma * s for every positive root gamma and every middle s."""
        self.reduce: dict[tuple[int, int], State] = {}
        self.e_words = [word_codes(e_root_word(g))[0] for g in range(self.n_pos)]
        for gamma in range(self.n_pos):
            for s, st in enumerate(self.shapes):
                x, d = self.table.trace(self.e_words[gamma] + st.middle)
                s2, u2, v2, w2 = (int(t) for t in self.node_state[x])
                self.reduce[(gamma, s)] = (d - int(self.node_corr[x]), s2, u2, v2, w2)

    # conversions ---------------------------------------------------------------

    def state_of_node(self, x: int, delta: int = 0) -> State:
        """Normal form of delta^delta * m_x."""
        s, u, v, w = (int(t) for t in self.node_state[x])
        return (delta - int(self.node_corr[x]), s, u, v, w)

    def node_of_state(self, st: State) -> tuple[int, int]:
        """(x, e) with nf = delta^e * m_x."""
        k, s, u, v, w = st
        x = self.state_node[(s, u, v, w)]
        return x, k + int(self.node_corr[x])

    def word_of_state(self, st: State) -> GenWord:
        k, s, u, v, w = st
        codes = self.wwords[u] + self.shapes[s].middle + self.wwords[v] + self.wwords[w]
        letters = codes_word(codes).letters
        d = (GenLetter("d", 1 if k > 0 else -1),) * abs(k)
        return GenWord(F4, d + letters)

    def to_nf(self, st: State) -> NormalFormF4:
        k, s, u, v, w = st
        e = self.W.element
        return NormalFormF4(k, s, e(u), e(v), e(w))

    def from_nf(self, nf: NormalFormF4) -> State:
        ix = self.W.index
        return (nf.delta_exp, nf.shape_id, ix[nf.u], ix[nf.v], ix[nf.w])

    # structured left multiplication ---------------------------------------------

    def identity_state(self) -> State:
        e = self.W.identity
        return (0, 0, e, e, e)

    def _assemble(self, k: int, s: int, g: int, h: int) -> State:
        """Normal form of delta^k * g * s * h for group elements g, h."""
        st = self.shapes[s]
        mul = self.W.mul
        d, n = int(st.lsplit_d[g]), int(st.lsplit_n[g])
        h = int(mul[st.pass_left[n], h])
        n2, w = int(st.rsplit_n[h]), int(st.rsplit_w[h])
        return (k, s, d, int(st.pass_right[n2]), w)

    def leftmul_code(self, code: int, st: State) -> State:
        k, s, u, v, w = st
        mul = self.W.mul
        if code < RANK:
            g = int(mul[self.W.index[simple_reflection(F4, code + 1)], u])
            return self._assemble(k, s, g, int(mul[v, w]))
        j = code - RANK
        gamma = int(self.W.root_image[self.W.inv[u], self.simple_roots[j]]) % self.n_pos
        m, s2, u2, v2, w2 = self.reduce[(gamma, s)]
        h = int(mul[mul[v2, w2], mul[v, w]])
        return self._assemble(k + m, s2, int(mul[u, u2]), h)

    def leftmul_table(self, code: int, st: State) -> State:
        x, e = self.node_of_state(st)
        return self.state_of_node(int(self.left_t[code, x]), e + int(self.left_s[code, x]))

    def cross_check(self, nodes: Iterable[int] | None = None) -> int:
        """Compare structured and tabulated left multiplication; returns the number of mismatches."""
        bad = 0
        for x in range(self.size) if nodes is None else nodes:
            st = self.state_of_node(x)
            for c in range(NGENS):
                if self.leftmul_code(c, st) != self.leftmul_table(c, st):
                    bad += 1
        return bad

    def apply_codes(self, codes: Sequence[int], st: State) -> State:
        for c in reversed(codes):
            st = self.leftmul_code(c, st)
        return st


@functools.lru_cache(maxsize=None)
def brauer() -> BrauerF4:
    return BrauerF4()


# public operations ---------------------------------------------------------------

_GEN_CODE = {("r", i): i - 1 for i in range(1, 5)} | {("e", i): RANK + i - 1 for i in range(1, 5)}


def identity_nf() -> NormalFormF4:
    br = brauer()
    return br.to_nf(br.identity_state())


def leftmul(g: GenLetter, nf: NormalFormF4) -> NormalFormF4:
    br = brauer()
    st = br.from_nf(nf)
    if g.kind == "d":
        k, s, u, v, w = st
        return br.to_nf((k + g.node, s, u, v, w))
    return br.to_nf(br.leftmul_code(_GEN_CODE[(g.kind, g.node)], st))


def normalize(w: GenWord | str) -> NormalFormF4:
    if isinstance(w, str):
        w = GenWord.parse(w, F4)
    br = brauer()
    codes, deg = word_codes(w)
    k, s, u, v, ww = br.apply_codes(codes, br.identity_state())
    return br.to_nf((k + deg, s, u, v, ww))


def multiply(a: NormalFormF4, b: NormalFormF4) -> NormalFormF4:
    br = brauer()
    sa = br.from_nf(a)
    codes, _ = word_codes(br.word_of_state((0,) + sa[1:]))
    k, s, u, v, w = br.apply_codes(codes, br.from_nf(b))
    return br.to_nf((k + a.delta_exp, s, u, v, w))


def op(nf: NormalFormF4) -> NormalFormF4:
    br = brauer()
    st = br.from_nf(nf)
    codes, _ = word_codes(br.word_of_state((0,) + st[1:]))
    k, s, u, v, w = br.apply_codes(codes[::-1], br.identity_state())
    return br.to_nf((k + nf.delta_exp, s, u, v, w))


def generator_nf(name: str) -> NormalFormF4:
    return normalize(GenWord.parse(name, F4))


def basis_nf(x: int) -> NormalFormF4:
    """The normal form (delta power 0) attached to enumerated node x."""
    br = brauer()
    k, s, u, v, w = br.state_of_node(x)
    return br.to_nf((0, s, u, v, w))


def basis_size() -> int:
    return brauer().size


def derive_pass_maps() -> dict[int, dict[str, dict[WeylElement, WeylElement]]]:
    """Per shape, the left and right pass-through maps N -> C as dictionaries."""
    br = brauer()
    out = {}
    for s, st in enumerate(br.shapes):
        d = {}
        for side, arr in (("left", st.pass_left), ("right", st.pass_right)):
            d[side] = {br.W.element(g): br.W.element(int(arr[g])) for g in np.nonzero(arr >= 0)[0]}
        out[s] = d
    return out


def build_reduce_table() -> dict[tuple[int, int], NormalFormF4]:
    br = brauer()
    return {key: br.to_nf(st) for key, st in br.reduce.items()}


def enumerate_basis() -> dict[tuple[int, int, int, int], int]:
    """Closure of the identity under structured left multiplication, modulo delta.

    Returns normal-form keys (shape, u, v, w as Cayley indices) in order of discovery.
    """
    br = brauer()
    start = br.identity_state()
    seen = {start[1:]: 0}
    dq = deque([start])
    while dq:
        st = dq.popleft()
        for c in range(NGENS):
            nxt = br.leftmul_code(c, st)
            key = nxt[1:]
            if key not in seen:
                seen[key] = len(seen)
                dq.append((0,) + key)
    return seen


def shape_enumeration() -> set[tuple[int, int, int, int]]:
    """All normal-form keys from the transversal products."""
    br = brauer()
    return {
        (s, int(u), int(v), int(w))
        for s, st in enumerate(br.shapes)
        for u in st.left
        for v in st.pass_elems
        for w in st.right
    }


def shape_totals(keys: Iterable[tuple[int, ...]]) -> tuple[int, ...]:
    """Counts grouped as (shapes 0-5, shape 6, 7, 8, 9, 10)."""
    c = Counter(k[0] for k in keys)
    return (sum(c[s] for s in range(6)),) + tuple(c[s] for s in range(6, 11))


# relation soundness ----------------------------------------------------------------


def _apply_vector(codes: Sequence[int], nodes: np.ndarray, shifts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    br = brauer()
    for c in reversed(codes):
        shifts = shifts + br.left_s[c, nodes]
        nodes = br.left_t[c, nodes]
    return nodes, shifts


def relation_failures(nodes: Sequence[int] | None = None) -> dict[str, int]:
    """Per relation label, the number of basis elements where lhs*m != delta^shift rhs*m."""
    br = brauer()
    xs = np.arange(br.size) if nodes is None else np.asarray(nodes)
    out: Counter[str] = Counter()
    for r in f4_relations():
        lhs, _ = word_codes(r.lhs)
        rhs, _ = word_codes(r.rhs)
        a, da = _apply_vector(lhs, xs, np.zeros(len(xs), dtype=np.int64))
        b, db = _apply_vector(rhs, xs, np.full(len(xs), r.shift, dtype=np.int64))
        out[r.label] += int(np.count_nonzero((a != b) | (da != db)))
    return dict(out)


def structured_relation_failures(nodes: Sequence[int]) -> int:
    """Same check through structured left multiplication (slower)."""
    br = brauer()
    bad = 0
    for r in f4_relations():
        lhs, _ = word_codes(r.lhs)
        rhs, _ = word_codes(r.rhs)
        for x in nodes:
            st = br.state_of_node(int(x))
            k, *rest = br.apply_codes(rhs, st)
            if br.apply_codes(lhs, st) != (k + r.shift, *rest):
                bad += 1
    return bad


# closure and commutation laws ------------------------------------------------------------------


def _orthogonal_subsets_of_catalog() -> set[frozenset[int]]:
    out = set()
    for s in f4_catalog().sets:
        items = sorted(s)
        for k in range(len(items) + 1):
            for sub in itertools.combinations(items, k):
                out.add(frozenset(sub))
    return out


def closure_law_report() -> list[tuple[frozenset[int], frozenset[int], int, int | None]]:
    """For every non-admissible X inside an admissible set: (X, X^cl, #(X^cl - X), observed delta power).

    The observed power is None when e_{X^cl} and e_X are not proportional.
    """
    out = []
    for X in sorted(_orthogonal_subsets_of_catalog(), key=lambda s: (len(s), sorted(s))):
        cl = closure_f4_indices(X)
        if cl == X:
            continue
        a, b = normalize(e_set_word(cl)), normalize(e_set_word(X))
        power = a.delta_exp - b.delta_exp if a.key() == b.key() else None
        out.append((X, cl, len(cl - X), power))
    return out


def commutation_law_report() -> list[tuple[int, int, bool]]:
    """(gamma1, gamma2, e1 e2 == e2 e1) for orthogonal pairs inside some admissible set."""
    pairs = set()
    for s in f4_catalog().sets:
        for a, b in itertools.combinations(sorted(s), 2):
            pairs.add((a, b))
    out = []
    for a, b in sorted(pairs):
        wa, wb = e_root_word(a), e_root_word(b)
        out.append((a, b, normalize(wa + wb) == normalize(wb + wa)))
    return out


# anti-involution checks --------------------------------------------------------------


def op_on_basis() -> np.ndarray:
    """Permutation x -> node of op(m_x) with delta powers, as an (n, 2) array."""
    br = brauer()
    out = np.empty((br.size, 2), dtype=np.int64)
    ident = br.identity_state()
    for x in range(br.size):
        codes = br.table.words[x]
        y, e = br.node_of_state(br.apply_codes(codes[::-1], ident))
        out[x] = (y, e)
    return out


# E6 side -------------------------------------------------------------------------------


@dataclass(frozen=True)
class E6Tuple:
    delta_exp: int
    Y: tuple[int, ...]
    B: int  # E6 catalog index
    h: WeylElement
    B_prime: int


def e6_sigma_perm() -> list[int]:
    return list(folding().sigma)


@functools.lru_cache(maxsize=None)
def m_y_fixed_group(Y: tuple[int, ...]) -> Subgroup:
    """W(M_Y)^sigma, with W(M_Y) realised on the subdiagram attached to Y."""
    sub_nodes = {(): None, (2,): (1, 3, 4, 5, 6), (1, 6): (2, 4), (2, 3, 5): ()}[tuple(Y)]
    if sub_nodes is None:
        G = weyl_group(E6)
    elif not sub_nodes:
        return trivial(E6)
    else:
        G = generate([simple_reflection(E6, k) for k in sub_nodes], kind=E6)
    return fixed_subgroup(G, e6_sigma_perm())


def m_y_group(Y: tuple[int, ...]) -> Subgroup:
    sub_nodes = {(): None, (2,): (1, 3, 4, 5, 6), (1, 6): (2, 4), (2, 3, 5): ()}[tuple(Y)]
    if sub_nodes is None:
        return weyl_group(E6)
    if not sub_nodes:
        return trivial(E6)
    return generate([simple_reflection(E6, k) for k in sub_nodes], kind=E6)


def sigma_invariant_orbit(Y: tuple[int, ...]) -> list[int]:
    cat = e6_catalog()
    orbit = cat.orbit_of[cat.index[orbit_base_e6(Y)]]
    return [i for i, s in enumerate(cat.sets) if cat.orbit_of[i] == orbit and sigma_set(s) == s]


def enumerate_e6_tuples() -> Iterator[E6Tuple]:
    for Y in E6_ORBIT_BASES:
        sets = sigma_invariant_orbit(Y)
        for B in sets:
            for h in m_y_fixed_group(Y).elements:
                for B2 in sets:
                    yield E6Tuple(0, Y, B, h, B2)


def e6_tuple_count() -> int:
    return sum(len(sigma_invariant_orbit(Y)) ** 2 * m_y_fixed_group(Y).order for Y in E6_ORBIT_BASES)


def lower_rank_formula() -> int:
    return 1152 + 12**2 * 48 + 30**2 * 6 + 39**2


def y_of_orbit() -> dict[int, tuple[int, ...]]:
    cat = e6_catalog()
    return {cat.orbit_of[cat.index[orbit_base_e6(Y)]]: Y for Y in E6_ORBIT_BASES}


def phi_fingerprints() -> list[tuple[tuple[int, ...], int, int]]:
    """(Y, B, B') of phi(m_x) for every basis node, from the E6 two-sided action on the empty set."""
    br = brauer()
    t = e6_tables()
    cat = e6_catalog()
    ymap = y_of_orbit()
    out = []
    for x in range(br.size):
        img = phi(codes_word(br.table.words[x]))
        b = t.left(img, t.empty)
        b2 = t.right(t.empty, img)
        out.append((ymap[cat.orbit_of[b]], b, b2))
    return out


def match_phi_to_tuples() -> dict:
    """Per-Y subtotals, multiplicity per (B, B') and coverage of the sigma-invariant pairs."""
    fps = phi_fingerprints()
    cat = e6_catalog()
    subtotal = Counter(y for y, _, _ in fps)
    mult = Counter(fps)
    report = {"subtotals": {}, "multiplicity_ok": {}, "coverage_ok": {}, "sigma_ok": True}
    for Y in E6_ORBIT_BASES:
        order = m_y_fixed_group(Y).order
        sets = sigma_invariant_orbit(Y)
        keys = [k for k in mult if k[0] == Y]
        report["subtotals"][Y] = subtotal[Y]
        report["multiplicity_ok"][Y] = all(mult[k] == order for k in keys)
        report["coverage_ok"][Y] = {(k[1], k[2]) for k in keys} == {(a, b) for a in sets for b in sets}
    report["sigma_ok"] = all(
        sigma_set(cat.sets[b]) == cat.sets[b] and sigma_set(cat.sets[b2]) == cat.sets[b2] for _, b, b2 in mult
    )
    return report


def action_compatibility_failures() -> int:
    """Basis elements whose F4 two-sided sets differ from p of the E6 sets of the phi-image."""
    br = brauer()
    tf, te = f4_tables(), e6_tables()
    from .admissible import project_set

    bad = 0
    for x in range(br.size):
        w = codes_word(br.table.words[x])
        img = phi(w)
        left = project_set(te.catalog.sets[te.left(img, te.empty)])
        right = project_set(te.catalog.sets[te.right(te.empty, img)])
        if tf.catalog.sets[tf.left(w, tf.empty)] != left or tf.catalog.sets[tf.right(tf.empty, w)] != right:
            bad += 1
    return bad


def fingerprint_of(nf: NormalFormF4) -> tuple[frozenset[int], frozenset[int]]:
    """(left set, right set) in E6 of phi of the monomial."""
    t = e6_tables()
    img = phi(nf.word())
    return t.catalog.sets[t.left(img, t.empty)], t.catalog.sets[t.right(t.empty, img)]


__all__ = [
    "BrauerF4",
    "action_compatibility_failures",
    "op_on_basis",
    "structured_relation_failures",
    "fingerprint_of",
    "sigma_invariant_orbit",
    "m_y_group",
    "y_of_orbit",
    "CertificationError",
    "E6Tuple",
    "NormalFormF4",
    "MIRROR_SHAPE",
    "N_SHAPES",
    "basis_nf",
    "basis_size",
    "brauer",
    "build_reduce_table",
    "closure_law_report",
    "commutation_law_report",
    "derive_pass_maps",
    "e_root_word",
    "e6_tuple_count",
    "enumerate_basis",
    "enumerate_e6_tuples",
    "generator_nf",
    "identity_nf",
    "leftmul",
    "lower_rank_formula",
    "m_y_fixed_group",
    "match_phi_to_tuples",
    "multiply",
    "normalize",
    "op",
    "phi",
    "phi_fingerprints",
    "relation_failures",
    "shape_enumeration",
    "shape_totals",
]

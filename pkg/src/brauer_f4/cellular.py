"""Cellular stratification data: the chain Z_0 < Z_1 < Z_2 < Z_3 and its layers.

Each layer is V (x) V (x) B with V spanned by the sigma-invariant sets in the
W(E6)-orbit of Z_i and B the group algebra of the fixed group attached to Z_i.
All checks are monomial identities in the F4 realization: an E6 set Z is
handled through the F4 set p(Z), and E_Z through e_{p(Z)}, whose delta weight
is the size of Z counted in E6.
"""
from __future__ import annotations

import functools
import heapq
from collections import deque
from dataclasses import dataclass

from .action import GenWord, f4_tables
from .admissible import close_e6, e6_catalog, project_set, sigma_set
from .brauer import (
    NormalFormF4,
    brauer,
    codes_word,
    fingerprint_of,
    m_y_fixed_group,
    multiply,
    normalize,
    op,
    word_codes,
)
from .rootsys import build_e6, e6_vector
from .stabilizers import e_set_word

# the chain, as E6 root coefficient vectors
Z_CHAIN: tuple[tuple[tuple[int, ...], ...], ...] = (
    (),
    ((0, 1, 0, 0, 0, 0),),
    ((0, 1, 0, 0, 0, 0), (0, 1, 1, 2, 1, 0)),
    ((0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 1, 0), (0, 1, 1, 2, 1, 0)),
)
LAYER_Y: tuple[tuple[int, ...], ...] = ((), (2,), (1, 6), (2, 3, 5))

# R letters in phi of each F4 generator r1..r4, e1..e4
R_COST = (2, 2, 1, 1, 0, 0, 0, 0)


class Zero:
    """Marker for a bilinear-form value that falls into a lower layer."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "ZERO"


ZERO = Zero()


@dataclass
class LayerData:
    index: int
    Z: frozenset[int]  # E6 positive-root indices
    Z_f4: frozenset[int]
    V_basis: list[int]  # E6 catalog indices, sigma-invariant, in the orbit of Z
    group_order: int
    a_words: dict[int, GenWord]  # V-basis member -> a_{Z,B}
    a_costs: dict[int, int]  # R letters in phi(a_{Z,B})
    e_word: GenWord  # E_Z in F4 letters
    weight: int  # #Z counted in E6

    @property
    def dim(self) -> int:
        return len(self.V_basis) ** 2 * self.group_order

    @property
    def unit_word(self) -> tuple[int, GenWord]:
        """(delta exponent, word) of the layer unit."""
        return -self.weight, self.e_word

    def unit(self) -> NormalFormF4:
        """1_B = delta^{-#Z} E_Z."""
        nf = normalize(self.e_word)
        return NormalFormF4(nf.delta_exp - self.weight, nf.shape_id, nf.u, nf.v, nf.w)


def z_sets() -> list[frozenset[int]]:
    e6 = build_e6()
    return [frozenset(e6.index(e6_vector(*c)) for c in z) for z in Z_CHAIN]


def chain_ok() -> bool:
    zs = z_sets()
    admissible = all(close_e6(z) == z for z in zs)
    invariant = all(sigma_set(z) == z for z in zs)
    nested = all(a < b for a, b in zip(zs, zs[1:]))
    return admissible and invariant and nested


def _a_words(Zf: frozenset[int], e_word: GenWord) -> tuple[dict[frozenset[int], list[int]], dict[frozenset[int], int]]:
    """0-1 search over monomials p * e_Z (left multiplication), R letters cost by phi.

    For every F4 set B reachable as the left set with right set still Z, keep
    the cheapest path (ties: first found).
    """
    br = brauer()
    tf = f4_tables()
    codes, _ = word_codes(e_word)
    x0, _ = br.table.trace(codes)
    dist = {x0: 0}
    path: dict[int, list[int]] = {x0: []}
    dq = deque([x0])
    done = set()
    while dq:
        x = dq.popleft()
        if x in done:
            continue
        done.add(x)
        for c in range(8):
            y = int(br.left_t[c, x])
            nd = dist[x] + R_COST[c]
            if y not in dist or nd < dist[y]:
                dist[y] = nd
                path[y] = [c] + path[x]
                if R_COST[c] == 0:
                    dq.appendleft(y)
                else:
                    dq.append(y)
    best: dict[frozenset[int], list[int]] = {}
    cost: dict[frozenset[int], int] = {}
    cat = tf.catalog
    for x in sorted(dist, key=lambda y: (dist[y], len(path[y]), path[y])):
        w = codes_word(path[x]) + e_word
        left = cat.sets[tf.left(w, tf.empty)]
        right = cat.sets[tf.right(tf.empty, w)]
        if right != Zf or left in best:
            continue
        best[left] = path[x]
        cost[left] = dist[x]
    return best, cost


@functools.lru_cache(maxsize=None)
def build_chain() -> tuple[LayerData, ...]:
    e6cat = e6_catalog()
    layers = []
    for i, Z in enumerate(z_sets()):
        orbit = e6cat.orbit_of[e6cat.index[Z]]
        V = [b for b, s in enumerate(e6cat.sets) if e6cat.orbit_of[b] == orbit and sigma_set(s) == s]
        Zf = project_set(Z)
        e_word = e_set_word(Zf)
        paths, costs = _a_words(Zf, e_word)
        a_words, a_costs = {}, {}
        for b in V:
            key = project_set(e6cat.sets[b])
            if key not in paths:
                raise RuntimeError(f"layer {i}: no a-word reaches {sorted(key)}")
            a_words[b] = codes_word(paths[key]) + e_word
            a_costs[b] = costs[key]
        layers.append(
            LayerData(i, Z, Zf, V, m_y_fixed_group(LAYER_Y[i]).order, a_words, a_costs, e_word, len(Z))
        )
    return tuple(layers)


def layer_dims() -> tuple[int, ...]:
    return tuple(layer.dim for layer in build_chain())


def height_gaps(layer: LayerData) -> dict[int, tuple[int, int]]:
    """V-basis members whose a-word has more R letters than the E6 height of the set.

    The R-count of an expression only bounds the height of the monomial from
    above, so a gap is not a contradiction; it means no sigma-symmetric
    expression reaches the E6 height.
    """
    cat = e6_catalog()
    return {b: (layer.a_costs[b], cat.heights[b]) for b in layer.V_basis if layer.a_costs[b] != cat.heights[b]}


def f4_set_costs(layer: LayerData) -> dict[int, int]:
    """Cheapest R-cost (by phi) of an F4 word moving p(Z) to p(B), over the set action."""
    tf = f4_tables()
    cat = tf.catalog
    start = cat.index[layer.Z_f4]
    dist = {start: 0}
    pq = [(0, start)]
    letters = [codes_word([c]) for c in range(8)]
    while pq:
        d, s = heapq.heappop(pq)
        if d > dist[s]:
            continue
        for c in range(8):
            t = tf.left(letters[c], s)
            nd = d + R_COST[c]
            if t not in dist or nd < dist[t]:
                dist[t] = nd
                heapq.heappush(pq, (nd, t))
    e6cat = e6_catalog()
    return {b: dist[cat.index[project_set(e6cat.sets[b])]] for b in layer.V_basis}


def a_word_failures(layer: LayerData) -> list[int]:
    """a-words that are not cost-minimal, fall below the set height, or miss B / Z."""
    tf = f4_tables()
    cat = tf.catalog
    e6cat = e6_catalog()
    best = f4_set_costs(layer)
    bad = []
    for b in layer.V_basis:
        w = layer.a_words[b]
        ok = (
            layer.a_costs[b] == best[b]
            and layer.a_costs[b] >= e6cat.heights[b]
            and cat.sets[tf.left(w, tf.empty)] == project_set(e6cat.sets[b])
            and cat.sets[tf.right(tf.empty, w)] == layer.Z_f4
        )
        if not ok:
            bad.append(b)
    return bad


def bilinear_form(layer: LayerData, B: int, B2: int) -> NormalFormF4 | Zero:
    """a_B^op a_{B'} when its left set is Z, the zero marker when the left set is larger."""
    a = normalize(layer.a_words[B])
    b = normalize(layer.a_words[B2])
    prod = multiply(op(a), b)
    left, _ = fingerprint_of(prod)
    if left == layer.Z:
        return prod
    if layer.Z < left:
        return ZERO
    raise AssertionError(f"left set {sorted(left)} does not contain Z")


def form_symmetry_failures(layer: LayerData) -> int:
    bad = 0
    vals = {}
    for B in layer.V_basis:
        for B2 in layer.V_basis:
            vals[(B, B2)] = bilinear_form(layer, B, B2)
    for (B, B2), v in vals.items():
        w = vals[(B2, B)]
        if isinstance(v, Zero) or isinstance(w, Zero):
            bad += not (v is w)
        elif op(v) != w:
            bad += 1
    return bad


def form_values(layer: LayerData) -> dict[tuple[int, int], NormalFormF4 | Zero]:
    return {(B, B2): bilinear_form(layer, B, B2) for B in layer.V_basis for B2 in layer.V_basis}


def idempotent_checks() -> dict[tuple[int, int], bool]:
    """E_{Z_i} E_{Z_j} = delta^{#Z_i} E_{Z_j} for i <= j, and 1_B idempotent."""
    layers = build_chain()
    out = {}
    for i, li in enumerate(layers):
        for j in range(i, len(layers)):
            lj = layers[j]
            lhs = normalize(li.e_word + lj.e_word)
            rhs = normalize(lj.e_word)
            out[(i, j)] = lhs.key() == rhs.key() and lhs.delta_exp == rhs.delta_exp + li.weight
    return out


def unit_idempotent(layer: LayerData) -> bool:
    u = layer.unit()
    return multiply(u, u) == u


def layer_report() -> list[dict]:
    e6 = build_e6()
    return [
        {
            "index": layer.index,
            "Z": [list(e6.roots[r].coords) for r in sorted(layer.Z)],
            "dim_V": len(layer.V_basis),
            "group_order": layer.group_order,
            "layer_dim": layer.dim,
        }
        for layer in build_chain()
    ]

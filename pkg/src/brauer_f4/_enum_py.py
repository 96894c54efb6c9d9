"""Pure-Python monoid enumeration (reference backend).

Weighted Todd-Coxeter for a finitely presented monoid with a central,
invertible loop parameter delta.  Nodes stand for monomials modulo delta; every
edge ``x --g--> y`` carries an integer ``w`` with ``m_x * g = delta**w * m_y``.
Coincidences are merged with a union-find that remembers the delta offset
between a node and its parent.  A coincidence that would force
``m = delta**k * m`` with ``k != 0`` aborts: the presentation would then not be
free over Z[delta^{+-1}].

The compiled backend in ``_enum_ext.pyx`` implements the same algorithm and
must return identical tables.
"""
from __future__ import annotations

from typing import Sequence


class DeltaCollapse(RuntimeError):
    pass


class EnumerationOverflow(RuntimeError):
    pass


def enumerate_monoid(
    ngens: int,
    relations: Sequence[tuple[Sequence[int], Sequence[int], int]],
    max_nodes: int = 4_000_000,
) -> tuple[int, list[int], list[int], int]:
    """Return ``(n_alive, targets, weights, n_defined)``.

    ``targets``/``weights`` are flat row-major ``n_alive * ngens`` lists over
    the surviving nodes, numbered in order of definition; node 0 is the
    identity.
    """
    table: list[int] = []
    wt: list[int] = []
    parent: list[int] = []
    pot: list[int] = []

    def new() -> int:
        n = len(parent)
        if n >= max_nodes:
            raise EnumerationOverflow(f"more than {max_nodes} nodes defined")
        table.extend([-1] * ngens)
        wt.extend([0] * ngens)
        parent.append(n)
        pot.append(0)
        return n

    def find(x: int) -> tuple[int, int]:
        x0 = x
        acc = 0
        while parent[x] != x:
            acc += pot[x]
            x = parent[x]
        root = x
        y, rem = x0, acc
        while parent[y] != y:
            nxt = parent[y]
            p = pot[y]
            parent[y] = root
            pot[y] = rem
            rem -= p
            y = nxt
        return root, acc

    def coincide(a: int, b: int, d: int) -> None:
        # m_a = delta^d m_b
        queue = [(a, b, d)]
        while queue:
            a, b, d = queue.pop()
            ra, pa = find(a)
            rb, pb = find(b)
            dd = d + pb - pa  # m_ra = delta^dd m_rb
            if ra == rb:
                if dd != 0:
                    raise DeltaCollapse(f"node {ra} would equal delta^{dd} times itself")
                continue
            if ra < rb:
                ra, rb, dd = rb, ra, -dd
            parent[ra] = rb
            pot[ra] = dd
            base_a, base_b = ra * ngens, rb * ngens
            for g in range(ngens):
                t = table[base_a + g]
                if t < 0:
                    continue
                w = wt[base_a + g] - dd  # m_rb g = delta^w m_t
                tb = table[base_b + g]
                if tb < 0:
                    table[base_b + g] = t
                    wt[base_b + g] = w
                else:
                    # delta^wt(rb,g) m_tb = delta^w m_t
                    queue.append((t, tb, wt[base_b + g] - w))

    def trace(x: int, word: Sequence[int]) -> tuple[int, int]:
        acc = 0
        for g in word:
            x, p = find(x)
            acc += p
            k = x * ngens + g
            t = table[k]
            if t < 0:
                t = new()
                table[k] = t
                wt[k] = 0
            acc += wt[k]
            x = t
        r, p = find(x)
        return r, acc + p

    new()
    x = 0
    while x < len(parent):
        if parent[x] == x:
            for lhs, rhs, shift in relations:
                if parent[x] != x:
                    break
                a, wa = trace(x, lhs)
                b, wb = trace(x, rhs)
                # m_x lhs = delta^wa m_a, m_x rhs = delta^wb m_b, lhs = delta^shift rhs
                coincide(a, b, shift + wb - wa)
            if parent[x] == x:
                for g in range(ngens):
                    trace(x, (g,))
        x += 1

    n_defined = len(parent)
    ids = {}
    for v in range(n_defined):
        if parent[v] == v:
            ids[v] = len(ids)
    targets = [0] * (len(ids) * ngens)
    weights = [0] * (len(ids) * ngens)
    for v, i in ids.items():
        for g in range(ngens):
            t = table[v * ngens + g]
            r, p = find(t)
            targets[i * ngens + g] = ids[r]
            weights[i * ngens + g] = wt[v * ngens + g] + p
    return len(ids), targets, weights, n_defined

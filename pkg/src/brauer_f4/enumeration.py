"""Backend selection and the canonical multiplication table of a presented monoid.

The hot kernel (weighted Todd-Coxeter) comes from the compiled extension when
it is importable and from ``_enum_py`` otherwise.  Setting the environment
variable ``BRAUER_F4_PURE=1`` forces the pure-Python backend.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _enum_py
from ._enum_py import DeltaCollapse, EnumerationOverflow

_pure = os.environ.get("BRAUER_F4_PURE", "").strip() not in ("", "0")
try:
    if _pure:
        raise ImportError("pure backend requested")
    from . import _enum_ext as _backend  # type: ignore[attr-defined]

    BACKEND = "compiled"
except ImportError:
    _backend = _enum_py
    BACKEND = "python"

__all__ = [
    "BACKEND",
    "DeltaCollapse",
    "EnumerationOverflow",
    "MonoidTable",
    "enumerate_raw",
    "build_table",
]


def enumerate_raw(ngens: int, relations, max_nodes: int = 4_000_000, backend: str | None = None):
    """Run the enumeration on a chosen backend ('compiled', 'python' or None for the default)."""
    if backend is None:
        mod = _backend
    elif backend == "python":
        mod = _enum_py
    elif backend == "compiled":
        from . import _enum_ext as mod  # type: ignore[attr-defined,no-redef]
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return mod.enumerate_monoid(ngens, relations, max_nodes)


@dataclass(frozen=True)
class MonoidTable:
    """Right-multiplication table of a monoid modulo a central delta.

    Node 0 is the identity.  ``targets[x, g]`` is the node of ``m_x * g`` and
    ``shifts[x, g]`` the power of delta: ``m_x * g = delta**shifts[x, g] * m_target``.
    Nodes are numbered in shortlex order of their representative words, and
    every representative word evaluates to its node with no delta factor.
    """

    ngens: int
    targets: np.ndarray
    shifts: np.ndarray
    words: tuple[tuple[int, ...], ...]
    n_defined: int

    def __len__(self) -> int:
        return len(self.words)

    def trace(self, word: Sequence[int], start: int = 0) -> tuple[int, int]:
        """(node, delta power) of ``m_start * word``."""
        x, d = start, 0
        t, s = self.targets, self.shifts
        for g in word:
            d += int(s[x, g])
            x = int(t[x, g])
        return x, d

    def left_table(self) -> tuple[np.ndarray, np.ndarray]:
        """Left multiplication ``g * m_x = delta**L_shift[g, x] * m_{L[g, x]}``."""
        n = len(self.words)
        lt = np.empty((self.ngens, n), dtype=np.int32)
        ls = np.empty((self.ngens, n), dtype=np.int32)
        t, s = self.targets, self.shifts
        for g in range(self.ngens):
            lt[g, 0] = t[0, g]
            ls[g, 0] = s[0, g]
        # words are shortlex ordered, so the prefix of x is processed before x
        for x in range(1, n):
            w = self.words[x]
            p, _ = self.trace(w[:-1])
            c = w[-1]
            for g in range(self.ngens):
                y = int(lt[g, p])
                lt[g, x] = t[y, c]
                ls[g, x] = int(ls[g, p]) + int(s[y, c])
        return lt, ls


def build_table(ngens: int, relations, max_nodes: int = 4_000_000, backend: str | None = None) -> MonoidTable:
    n, targets, weights, n_defined = enumerate_raw(ngens, relations, max_nodes, backend)
    t = np.asarray(targets, dtype=np.int64).reshape(n, ngens)
    w = np.asarray(weights, dtype=np.int64).reshape(n, ngens)
    order = [0]
    pot = {0: 0}
    words: dict[int, tuple[int, ...]] = {0: ()}
    dq = deque([0])
    while dq:
        x = dq.popleft()
        for g in range(ngens):
            y = int(t[x, g])
            if y not in pot:
                pot[y] = pot[x] + int(w[x, g])
                words[y] = words[x] + (g,)
                order.append(y)
                dq.append(y)
    if len(order) != n:
        raise RuntimeError("enumerated monoid is not generated from the identity")
    new_id = np.empty(n, dtype=np.int64)
    new_id[order] = np.arange(n)
    P = np.array([pot[x] for x in range(n)], dtype=np.int64)
    old = np.array(order, dtype=np.int64)
    nt = new_id[t[old]]
    ns = w[old] + P[old][:, None] - P[t[old]]
    return MonoidTable(
        ngens,
        nt.astype(np.int32),
        ns.astype(np.int32),
        tuple(words[x] for x in order),
        int(n_defined),
    )

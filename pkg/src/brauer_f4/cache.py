"""Binary multiplication-table cache and JSON basis export.

Layout (little-endian)::

    b"BRF4"  u32 version  u32 basis size  32-byte sha256 of the root/catalog data
    then for generator g = 0..7, basis index i = 0..n-1:  u32 target, i32 delta shift

An entry (y, s) at (g, i) means  g * b_i = delta^s * b_y, where b_i is the
basis monomial written by its normal form with delta power 0.
"""
from __future__ import annotations

import hashlib
import json
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .admissible import e6_catalog, f4_catalog
from .brauer import basis_nf, brauer
from .relations import f4_relations
from .rootsys import build_e6, build_f4
from .weyl import reduced_word

MAGIC = b"BRF4"
VERSION = 1
HEADER = struct.Struct("<4sII32s")
NGENS = 8


class CacheError(RuntimeError):
    """Unreadable, truncated, or stale cache file."""


def content_hash(
    f4_roots: Sequence[tuple[int, ...]] | None = None,
    e6_roots: Sequence[tuple[int, ...]] | None = None,
) -> bytes:
    """sha256 over root orders, both catalogs and the relation list."""
    if f4_roots is None:
        f4_roots = [r.coords for r in build_f4().roots]
    if e6_roots is None:
        e6_roots = [r.coords for r in build_e6().roots]
    payload = {
        "f4_roots": [list(r) for r in f4_roots],
        "e6_roots": [list(r) for r in e6_roots],
        "f4_catalog": [sorted(s) for s in f4_catalog().sets],
        "e6_catalog": [sorted(s) for s in e6_catalog().sets],
        "relations": [[list(a), list(b), s] for a, b, s in f4_relations().as_int_relations()],
    }
    return hashlib.sha256(json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()).digest()


def basis_table() -> tuple[np.ndarray, np.ndarray]:
    """(targets, shifts), each of shape (8, n), relative to the normal-form basis."""
    br = brauer()
    corr = br.node_corr
    targets = br.left_t.astype(np.uint32)
    shifts = (corr[None, :] + br.left_s - corr[br.left_t]).astype(np.int32)
    return targets, shifts


def file_size(n: int) -> int:
    return HEADER.size + NGENS * n * 8


def save_table(path: str | Path, digest: bytes | None = None) -> int:
    targets, shifts = basis_table()
    n = targets.shape[1]
    body = np.empty((NGENS, n), dtype=[("t", "<u4"), ("s", "<i4")])
    body["t"] = targets
    body["s"] = shifts
    data = HEADER.pack(MAGIC, VERSION, n, digest or content_hash()) + body.tobytes()
    Path(path).write_bytes(data)
    return len(data)


@dataclass(frozen=True)
class LoadedTable:
    targets: np.ndarray
    shifts: np.ndarray

    @property
    def size(self) -> int:
        return self.targets.shape[1]

    def leftmul(self, code: int, index: int, delta: int = 0) -> tuple[int, int]:
        return int(self.targets[code, index]), delta + int(self.shifts[code, index])


def load_table(path: str | Path, digest: bytes | None = None) -> LoadedTable:
    raw = Path(path).read_bytes()
    if len(raw) < HEADER.size:
        raise CacheError("file shorter than the header")
    magic, version, n, stored = HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise CacheError(f"bad magic {magic!r}")
    if version != VERSION:
        raise CacheError(f"format version {version}, expected {VERSION}")
    if len(raw) != file_size(n):
        raise CacheError(f"size {len(raw)} does not match {n} basis elements")
    if stored != (digest or content_hash()):
        raise CacheError("content hash mismatch; rebuild the cache")
    body = np.frombuffer(raw, dtype=[("t", "<u4"), ("s", "<i4")], offset=HEADER.size).reshape(NGENS, n)
    targets = body["t"].astype(np.int64)
    if (targets >= n).any():
        raise CacheError("target index out of range")
    return LoadedTable(targets, body["s"].astype(np.int64))


def export_basis(path: str | Path) -> int:
    rows = []
    for x in range(brauer().size):
        nf = basis_nf(x)
        rows.append(
            {
                "shape_id": nf.shape_id,
                "u_word": list(reduced_word(nf.u)),
                "v_word": list(reduced_word(nf.v)),
                "w_word": list(reduced_word(nf.w)),
            }
        )
    Path(path).write_text(json.dumps(rows, separators=(",", ":")) + "\n")
    return len(rows)

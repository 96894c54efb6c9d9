from __future__ import annotations

import json
import random

import pytest

from brauer_f4.cache import (
    HEADER,
    CacheError,
    content_hash,
    export_basis,
    file_size,
    load_table,
    save_table,
)
from brauer_f4.rootsys import build_f4


@pytest.fixture(scope="module")
def table_file(tmp_path_factory):
    p = tmp_path_factory.mktemp("cache") / "table.bin"
    save_table(p)
    return p


def test_size(table_file):
    assert HEADER.size == 44
    assert table_file.stat().st_size == file_size(14985) == 44 + 8 * 14985 * 8


def test_roundtrip_probes(table_file, br):
    t = load_table(table_file)
    rng = random.Random(7)
    for _ in range(1000):
        c, x = rng.randrange(8), rng.randrange(t.size)
        y, s = t.leftmul(c, x)
        got = br.leftmul_code(c, br.state_of_node(x, int(br.node_corr[x])))
        assert got == br.state_of_node(y, int(br.node_corr[y]) + s)


def test_root_order_change_refused(table_file):
    roots = [r.coords for r in build_f4().roots]
    with pytest.raises(CacheError, match="hash"):
        load_table(table_file, content_hash(roots[1:] + roots[:1]))


def test_corruption_refused(tmp_path, table_file):
    raw = bytearray(table_file.read_bytes())
    bad = tmp_path / "bad.bin"
    bad.write_bytes(raw[:100])
    with pytest.raises(CacheError):
        load_table(bad)
    raw[0:4] = b"XXXX"
    bad.write_bytes(raw)
    with pytest.raises(CacheError, match="magic"):
        load_table(bad)


def test_basis_export(tmp_path):
    p = tmp_path / "basis.json"
    assert export_basis(p) == 14985
    rows = json.loads(p.read_text())
    assert rows[0] == {"shape_id": 0, "u_word": [], "v_word": [], "w_word": []}
    assert {r["shape_id"] for r in rows} == set(range(11))

from __future__ import annotations

import json

from brauer_f4.cli import main, orbit_tables


def test_orbits(capsys):
    assert main(["orbits"]) == 0
    out = capsys.readouterr().out
    assert "1 12 12 18 36 3" in out
    assert "1 12 30 39" in out
    assert "1152 48 6 1" in out
    assert out == orbit_tables() + "\n"


def test_verify_counts(tmp_path):
    rep = tmp_path / "r.json"
    assert main(["verify", "--scope", "counts", "--report", str(rep)]) == 0
    data = json.loads(rep.read_text())
    assert [d["actual"] for d in data if d["check"].startswith("rank")] == [14985, 14985]
    assert set(data[0]) == {"check", "status", "expected", "actual", "elapsed_ms", "anchor"}


def test_verify_roots(tmp_path):
    rep = tmp_path / "r.json"
    assert main(["verify", "--scope", "roots", "--report", str(rep)]) == 0
    data = {d["check"]: d["actual"] for d in json.loads(rep.read_text())}
    assert data["f4 positive roots"] == 24 and data["e6 positive roots"] == 36


def test_deterministic_reports(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["verify", "--scope", "admissible", "--report", str(p), "--no-timing"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_groups_reports_type_discrepancy(tmp_path):
    rep = tmp_path / "r.json"
    assert main(["verify", "--scope", "groups", "--report", str(rep)]) == 1
    data = json.loads(rep.read_text())
    failed = [d for d in data if d["status"] == "fail"]
    assert [d["check"] for d in failed] == ["coxeter types"]
    assert failed[0]["actual"]["N5"] == "B4" and failed[0]["expected"]["N5"] == "B3xB2"


def test_cache_gate(tmp_path):
    cache = tmp_path / "t.bin"
    assert main(["verify", "--scope", "roots", "--cache", str(cache)]) == 0
    assert cache.exists()
    assert main(["verify", "--scope", "roots", "--cache", str(cache)]) == 0
    raw = bytearray(cache.read_bytes())
    raw[20] ^= 0xFF  # inside the stored hash
    cache.write_bytes(raw)
    assert main(["verify", "--scope", "all", "--cache", str(cache)]) == 2


def test_table_command(tmp_path, capsys):
    out = tmp_path / "t.bin"
    assert main(["table", "--out", str(out)]) == 0
    assert out.stat().st_size == 44 + 8 * 14985 * 8
    assert len(json.loads((tmp_path / "t.basis.json").read_text())) == 14985
    assert main(["table", "--out", str(tmp_path / "missing" / "t.bin")]) == 3


def test_jobs_and_rewrite_depth_flags(tmp_path):
    assert main(["verify", "--scope", "counts", "--jobs", "2", "--rewrite-depth", "5"]) == 0

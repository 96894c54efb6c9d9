"""Command line: ``brauer-f4 verify | table | orbits``.

Exit codes: 0 all checks pass, 1 a check failed, 2 build or certification
failure (including a stale or corrupt cache), 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

log = logging.getLogger("brauer_f4")

EXIT_OK, EXIT_FAIL, EXIT_BUILD, EXIT_IO = 0, 1, 2, 3


def _build_errors() -> tuple[type[BaseException], ...]:
    from ._enum_py import DeltaCollapse, EnumerationOverflow
    from .admissible import ClosureError
    from .brauer import CertificationError
    from .cache import CacheError
    from .stabilizers import TableMismatch

    return (DeltaCollapse, EnumerationOverflow, ClosureError, CertificationError, CacheError, TableMismatch)


def _write_report(path: str | None, reports, timing: bool) -> None:
    if not path:
        return
    data = [r.to_json(timing=timing) for r in reports]
    Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")


def _cache_check(path: str):
    from .cache import basis_table, load_table, save_table
    from .checks import _run

    p = Path(path)
    if not p.exists():
        log.info("writing cache %s", p)
        save_table(p)
    loaded = load_table(p)

    def same():
        t, s = basis_table()
        return bool(np.array_equal(loaded.targets, t) and np.array_equal(loaded.shifts, s))

    return _run("cache matches build", "stored multiplication table equals the fresh build", True, same)


def cmd_verify(args: argparse.Namespace) -> int:
    from .checks import SCOPES, SCOPE_FUNCS

    scopes = SCOPES if args.scope == "all" else (args.scope,)
    reports = []
    code = EXIT_OK
    try:
        # a stale cache is a build failure; check it before the long sweeps
        if args.cache:
            reports.append(_cache_check(args.cache))
        for s in scopes:
            reports.extend(SCOPE_FUNCS[s](jobs=args.jobs))
    except _build_errors() as exc:
        print(f"build failure: {exc}", file=sys.stderr)
        code = EXIT_BUILD
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        code = EXIT_IO
    for r in reports:
        print(f"{r.status.upper():4}  {r.check}  ({r.elapsed_ms} ms)")
        if r.status != "pass":
            print(f"      expected {json.dumps(_j(r.expected))}\n      actual   {json.dumps(_j(r.actual))}")
    try:
        _write_report(args.report, reports, timing=not args.no_timing)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    if code:
        return code
    return EXIT_OK if all(r.status == "pass" for r in reports) else EXIT_FAIL


def _j(x):
    from .checks import jsonable

    return jsonable(x)


def cmd_table(args: argparse.Namespace) -> int:
    from .cache import export_basis, save_table

    out = Path(args.out)
    basis = out.with_suffix(".basis.json")
    try:
        n = save_table(out)
        m = export_basis(basis)
    except _build_errors() as exc:
        print(f"build failure: {exc}", file=sys.stderr)
        return EXIT_BUILD
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {out} ({n} bytes) and {basis} ({m} basis elements)")
    return EXIT_OK


def orbit_tables() -> str:
    from .admissible import E6_ORBIT_BASES, f4_catalog, sigma_invariant_counts
    from .brauer import m_y_fixed_group
    from .stabilizers import first_table

    sizes = f4_catalog().orbit_sizes()
    lines = ["F4 admissible orbits", "i  size  #D_i  #C_i  #A_i"]
    for i, (n, (d, c, a)) in enumerate(zip(sizes, first_table())):
        lines.append(f"{i}  {n:<4}  {d:<4}  {c:<4}  {a}")
    lines.append(" ".join(str(n) for n in sizes))
    lines += ["", "E6 sigma-invariant orbits", "Y        sets  |W(M_Y)^sigma|"]
    counts = sigma_invariant_counts()
    orders = [m_y_fixed_group(Y).order for Y in E6_ORBIT_BASES]
    for Y, n, o in zip(E6_ORBIT_BASES, counts, orders):
        label = "{" + ",".join(map(str, Y)) + "}"
        lines.append(f"{label:<8} {n:<5} {o}")
    lines.append(" ".join(map(str, counts)))
    lines.append(" ".join(map(str, orders)))
    return "\n".join(lines)


def cmd_orbits(args: argparse.Namespace) -> int:
    print(orbit_tables())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="brauer-f4", description="Brauer algebra of type F4: build and verify.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("--scope", default="all",
                   choices=["roots", "groups", "admissible", "action", "counts", "basis", "tuples", "cellular", "all"])
    v.add_argument("--report", help="write a JSON report here")
    v.add_argument("--cache", help="multiplication-table cache to validate (written if missing)")
    v.add_argument("--jobs", type=int, default=1, help="worker processes for the basis sweeps")
    v.add_argument("--rewrite-depth", type=int, default=12,
                   help="accepted for compatibility; the enumeration is exact and needs no depth bound")
    v.add_argument("--no-timing", action="store_true", help="omit elapsed_ms from the report")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="write the binary table cache and the JSON basis export")
    t.add_argument("--out", required=True)
    t.set_defaults(func=cmd_table)

    o = sub.add_parser("orbits", help="print the orbit tables")
    o.set_defaults(func=cmd_orbits)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

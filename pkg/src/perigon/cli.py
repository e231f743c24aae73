"""Command-line front end: single counts, tables, b-files, verification, timing.

Exit codes: 0 on success (and on a fully agreeing verify run), 1 when a
verification cross-check disagrees, 2 for usage or range errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import census, fixcount, model, oracle

__all__ = ["SequenceSpec", "main"]

REPORT_SCHEMA = "perigon-report/1"
VERIFY_SCHEMA = "perigon-verify/1"

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2

DEFAULT_SEED = 1729

FAMILIES = ("pmn", "pn", "pmn-cyclic", "pn-cyclic",
            "triangles-nearest", "quadrilaterals-nearest")


class CliError(Exception):
    """Usage or range error; reported on stderr and mapped to exit status 2."""


# ---------------------------------------------------------------------------
# shared helpers


def _decimal_digits(v: int) -> int:
    """Digit count without converting to a decimal string (cheap for huge v)."""
    v = abs(v)
    if v == 0:
        return 1
    # 30103/100000 ~ log10(2); correct the estimate in both directions
    est = max(1, v.bit_length() * 30103 // 100000)
    while est > 1 and 10 ** (est - 1) > v:
        est -= 1
    while 10**est <= v:
        est += 1
    return est


def _fmt_count(v: int) -> str:
    """Decimal text of a count, lifting the int-to-str size guard if needed."""
    if hasattr(sys, "set_int_max_str_digits"):
        digits = _decimal_digits(v)
        if digits + 10 > sys.get_int_max_str_digits():
            sys.set_int_max_str_digits(digits + 10)
    return str(v)


def _evaluate_count(n: int, m: int | None, cyclic: bool, method: str) -> int:
    if m is not None and not 3 <= m <= n:
        return 0  # empty census for degenerate side counts, whatever the method
    if method == "closed":
        if m is None:
            return census.count_polygons_cyclic(n) if cyclic else census.count_polygons(n)
        return census.count_mgons_cyclic(n, m) if cyclic else census.count_mgons(n, m)
    if method == "burnside":
        if m is None:
            return census.count_polygons_via_burnside(n)
        return census.count_mgons_via_burnside(n, m)
    kind = oracle.GroupKind.CYCLIC if cyclic else oracle.GroupKind.DIHEDRAL
    return oracle.orbit_count(n, kind, weight=m)


METHOD_NAMES = {"closed": "closed-form", "burnside": "burnside", "oracle": "oracle"}


# ---------------------------------------------------------------------------
# count


def cmd_count(args: argparse.Namespace) -> int:
    n, m = args.n, args.m
    if n < 3:
        raise CliError(f"--n must be at least 3 (a polygon needs perimeter >= 3), got {n}")
    if args.method == "oracle" and n > oracle.ORACLE_MAX_N:
        raise CliError(f"--n {n} exceeds the oracle bound {oracle.ORACLE_MAX_N}")
    if args.method == "burnside" and args.cyclic:
        raise CliError("--method burnside covers the rotation+reflection census only; "
                       "use --method closed or oracle together with --cyclic")
    value = _evaluate_count(n, m, args.cyclic, args.method)
    if args.format == "json":
        report = {
            "schema": REPORT_SCHEMA,
            "n": n,
            "m": m,
            "cyclic": args.cyclic,
            "method": METHOD_NAMES[args.method],
            "value": _fmt_count(value),
            "agreement": None,
        }
        print(json.dumps(report, indent=2))
    else:
        print(_fmt_count(value))
    return EXIT_OK


# ---------------------------------------------------------------------------
# table


def _table_rows(max_n: int) -> list[list[str]]:
    ns = range(3, max_n + 1)
    rows = [["m\\n"] + [str(n) for n in ns]]
    for m in ns:
        cells = [str(m)]
        for n in ns:
            cells.append(str(census.count_mgons(n, m)) if m <= n else "")
        rows.append(cells)
    totals = ["total"] + [str(census.count_polygons(n)) for n in ns]
    rows.append(totals)
    return rows


def cmd_table(args: argparse.Namespace) -> int:
    if args.max_n < 3:
        raise CliError(f"--max-n must be at least 3, got {args.max_n}")
    rows = _table_rows(args.max_n)
    if args.format == "csv":
        for row in rows:
            print(",".join(row))
        return EXIT_OK
    widths = [max(len(row[col]) for row in rows) for col in range(len(rows[0]))]
    for row in rows[:-1]:
        print(" ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip())
    print("-" * (sum(widths) + len(widths) - 1))
    print(" ".join(cell.rjust(w) for cell, w in zip(rows[-1], widths)).rstrip())
    return EXIT_OK


# ---------------------------------------------------------------------------
# b-files


@dataclass(frozen=True)
class SequenceSpec:
    """One emittable sequence: a value family and an inclusive index range.

    The printed index starts at `offset` when given, else at the true n.
    """

    family: str
    start: int
    end: int
    m: int | None = None
    offset: int | None = None

    def smallest_index(self) -> int:
        if self.family in ("pn", "pn-cyclic"):
            return 3
        if self.family in ("pmn", "pmn-cyclic"):
            return self.m if self.m is not None else 3
        return 1  # the nearest-integer rules evaluate from perimeter 1

    def value(self, n: int) -> int:
        if self.family == "pmn":
            return census.count_mgons(n, self.m)
        if self.family == "pn":
            return census.count_polygons(n)
        if self.family == "pmn-cyclic":
            return census.count_mgons_cyclic(n, self.m)
        if self.family == "pn-cyclic":
            return census.count_polygons_cyclic(n)
        if self.family == "triangles-nearest":
            return census.triangles_nearest(n)
        return census.quadrilaterals_nearest(n)

    def lines(self) -> list[str]:
        base = self.offset if self.offset is not None else self.start
        return [f"{base + i} {_fmt_count(self.value(n))}"
                for i, n in enumerate(range(self.start, self.end + 1))]


def cmd_bfile(args: argparse.Namespace) -> int:
    if args.family in ("pmn", "pmn-cyclic"):
        if args.m is None:
            raise CliError(f"--family {args.family} needs --m")
        if args.m < 3:
            raise CliError(f"--m must be at least 3, got {args.m}")
    elif args.m is not None:
        raise CliError(f"--m applies to the pmn families only, not {args.family}")
    lo = SequenceSpec(args.family, 0, 0, args.m).smallest_index()
    spec = SequenceSpec(args.family, args.start if args.start is not None else lo,
                        args.end, args.m, args.offset)
    if spec.start < lo:
        raise CliError(f"--start {spec.start} is below the smallest valid index {lo} "
                       f"for family {spec.family}")
    if spec.end < spec.start:
        raise CliError(f"--end {spec.end} is below --start {spec.start}")
    text = "\n".join(spec.lines()) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args: argparse.Namespace) -> int:
    max_n = args.max_n
    if max_n < 3:
        raise CliError(f"--max-n must be at least 3, got {max_n}")
    if max_n > oracle.ORACLE_MAX_N:
        raise CliError(f"--max-n {max_n} exceeds the oracle bound {oracle.ORACLE_MAX_N}")

    rng = random.Random(args.seed)
    checks: list[dict] = []
    failure: dict | None = None

    def record(entry: dict, lhs: int, rhs: int) -> None:
        nonlocal failure
        entry["agree"] = lhs == rhs
        if not entry["agree"]:
            entry["values"] = [str(lhs), str(rhs)]
            if failure is None:
                failure = entry
        checks.append(entry)

    for n in range(3, max_n + 1):
        record({"n": n, "m": None, "subject": "polygons",
                "pair": ["closed-form", "burnside"]},
               census.count_polygons(n), census.count_polygons_via_burnside(n))
        record({"n": n, "m": None, "subject": "polygons",
                "pair": ["closed-form", "oracle"]},
               census.count_polygons(n),
               oracle.orbit_count(n, oracle.GroupKind.DIHEDRAL))
        record({"n": n, "m": None, "subject": "polygons-cyclic",
                "pair": ["closed-form", "oracle"]},
               census.count_polygons_cyclic(n),
               oracle.orbit_count(n, oracle.GroupKind.CYCLIC))
        for m in range(3, n + 1):
            record({"n": n, "m": m, "subject": "mgons",
                    "pair": ["closed-form", "burnside"]},
                   census.count_mgons(n, m), census.count_mgons_via_burnside(n, m))
            record({"n": n, "m": m, "subject": "mgons",
                    "pair": ["closed-form", "oracle"]},
                   census.count_mgons(n, m),
                   oracle.orbit_count(n, oracle.GroupKind.DIHEDRAL, weight=m))
            record({"n": n, "m": m, "subject": "mgons-cyclic",
                    "pair": ["closed-form", "oracle"]},
                   census.count_mgons_cyclic(n, m),
                   oracle.orbit_count(n, oracle.GroupKind.CYCLIC, weight=m))

        # fixed-set formulas per element class, plus same-count within a class
        seen: dict[model.ElementClass, int] = {}
        independent = True
        for sigma in model.dihedral_group(n):
            cls = model.classify(sigma)
            direct_good = oracle.fix_count_direct(n, sigma, oracle.TupleSet.GOOD)
            if cls not in seen:
                seen[cls] = direct_good
                record({"n": n, "m": None, "subject": "fix-polygons",
                        "class": str(cls), "pair": ["formula", "direct"]},
                       fixcount.fix_polygons(n, cls), direct_good)
                record({"n": n, "m": None, "subject": "fix-partition",
                        "class": str(cls), "pair": ["good", "all-minus-bad"]},
                       direct_good,
                       oracle.fix_count_direct(n, sigma, oracle.TupleSet.ALL)
                       - oracle.fix_count_direct(n, sigma, oracle.TupleSet.BAD))
                for m in range(3, n + 1):
                    record({"n": n, "m": m, "subject": "fix-mgons",
                            "class": str(cls), "pair": ["formula", "direct"]},
                           fixcount.fix_mgons(n, m, cls),
                           oracle.fix_count_direct(n, sigma, oracle.TupleSet.GOOD,
                                                   weight=m))
            elif seen[cls] != direct_good:
                independent = False
        record({"n": n, "m": None, "subject": "fix-class-independence",
                "pair": ["direct", "direct"]}, independent, True)

        # randomized canonical-form probes (idempotence + orbit invariance)
        probes_ok = True
        for _ in range(args.probes):
            a = model.CircularTuple(tuple(rng.randrange(2) for _ in range(n)))
            sigma = model.GroupElement(n, rng.randrange(n), rng.random() < 0.5)
            for kind in (oracle.GroupKind.CYCLIC, oracle.GroupKind.DIHEDRAL):
                c = oracle.canonical_form(a, kind)
                if oracle.canonical_form(c, kind) != c:
                    probes_ok = False
                if kind is oracle.GroupKind.DIHEDRAL or not sigma.is_reflection:
                    moved = model.apply(sigma, a)
                    if oracle.canonical_form(moved, kind) != c:
                        probes_ok = False
        record({"n": n, "m": None, "subject": "canonical-probes",
                "pair": ["oracle", "oracle"]}, probes_ok, True)

    report = {
        "schema": VERIFY_SCHEMA,
        "max_n": max_n,
        "seed": args.seed,
        "all_agree": failure is None,
        "first_failure": failure,
        "checks": checks,
    }
    print(json.dumps(report, indent=2))
    if failure is not None:
        where = f"n={failure['n']}" + (f", m={failure['m']}" if failure.get("m") else "")
        if "class" in failure:
            where += f", class={failure['class']}"
        print(f"verification failed at {where}: {failure['subject']} "
              f"{failure['pair'][0]} != {failure['pair'][1]}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench


def cmd_bench(args: argparse.Namespace) -> int:
    n = args.n
    if n < 3:
        raise CliError(f"--n must be at least 3, got {n}")
    started = time.perf_counter()
    value = census.count_polygons(n)
    elapsed = time.perf_counter() - started
    # hash the big-endian bytes: bit-for-bit reproducibility without the cost
    # of a decimal conversion on very large results
    digest = hashlib.sha256(value.to_bytes((value.bit_length() + 7) // 8, "big")).hexdigest()
    print(f"n {n}")
    print(f"digits {_decimal_digits(value)}")
    print(f"sha256 {digest}")
    print(f"seconds {elapsed:.4f}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perigon",
        description="Exact census of integer polygons and m-gons by perimeter.")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="print one census value")
    count.add_argument("--n", type=int, required=True, help="perimeter")
    count.add_argument("--m", type=int, default=None,
                       help="side count (omit to count polygons of any side count)")
    count.add_argument("--cyclic", action="store_true",
                       help="quotient by rotations only (no reversals)")
    count.add_argument("--method", choices=("closed", "burnside", "oracle"),
                       default="closed", help="evaluation route")
    count.add_argument("--format", choices=("plain", "json"), default="plain")
    count.set_defaults(handler=cmd_count)

    table = sub.add_parser("table", help="emit the m-gon triangle and polygon totals")
    table.add_argument("--max-n", type=int, required=True, help="largest perimeter")
    table.add_argument("--format", choices=("plain", "csv"), default="plain")
    table.set_defaults(handler=cmd_table)

    bfile = sub.add_parser("bfile", help="emit a sequence in OEIS b-file format")
    bfile.add_argument("--family", choices=FAMILIES, required=True)
    bfile.add_argument("--m", type=int, default=None,
                       help="side count, for the pmn families")
    bfile.add_argument("--start", type=int, default=None,
                       help="first n (default: the family minimum)")
    bfile.add_argument("--end", type=int, required=True, help="last n, inclusive")
    bfile.add_argument("--offset", type=int, default=None,
                       help="override the printed start index")
    bfile.add_argument("--out", type=str, default=None,
                       help="output path (default: standard output)")
    bfile.set_defaults(handler=cmd_bfile)

    verify = sub.add_parser("verify",
                            help="cross-check closed forms, group averages and the oracle")
    verify.add_argument("--max-n", type=int, required=True,
                        help=f"sweep perimeters 3..max-n (at most {oracle.ORACLE_MAX_N})")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for the randomized probes")
    verify.add_argument("--probes", type=int, default=5,
                        help="randomized canonical-form probes per perimeter")
    verify.set_defaults(handler=cmd_verify)

    bench = sub.add_parser("bench", help="time one polygon count")
    bench.add_argument("--n", type=int, required=True, help="perimeter")
    bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on usage errors; surface the code
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

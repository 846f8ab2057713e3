"""Command-line front end.

Usage:
    ksl invariants "T(2,3)" [--format text|json]
    ksl surgery "T(4,5)" 21 [--format text|json]
    ksl pairs --k 1 --n 2..8 [--format text|json|csv]
    ksl staircases --genus 5 --mode collisions
    ksl verify --scope appendix

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from . import pairsgen, staircase
from .surgery import Lens, Slope, UnsupportedSlope, classify_torus_surgery
from .torusknot import TorusKnot, alexander, delta_dd_half, genus, signature
from .verify import SCOPES, run_suite, worker_count

KNOT_RE = re.compile(r"^\s*T\s*\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*$")
PAIR_COLUMNS = ("k", "n", "a", "b", "c", "d", "p", "lens1", "lens2", "genus1", "genus2", "ddHalf", "verified")
STAIRCASE_NOTE = "necessary conditions only; realizability by an L-space knot is not checked"


class UsageError(Exception):
    pass


def parse_knot(text: str) -> TorusKnot:
    m = KNOT_RE.match(text)
    if not m:
        raise UsageError(f"cannot parse knot descriptor {text!r}; expected T(a,b)")
    try:
        return TorusKnot(int(m.group(1)), int(m.group(2)))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_slope(text: str) -> Slope:
    try:
        return Slope.parse(text)
    except ValueError:
        raise UsageError(f"cannot parse slope {text!r}; expected p or p/q") from None


def parse_int_list(values: list[str]) -> list[int]:
    """Accept repeated integers and inclusive ranges like ``2..8``."""
    out: list[int] = []
    for v in values:
        lo, sep, hi = v.partition("..")
        try:
            if sep:
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(v))
        except ValueError:
            raise UsageError(f"cannot parse integer or range {v!r}") from None
    return out


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def cmd_invariants(args) -> int:
    T = parse_knot(args.knot)
    delta = alexander(T)
    row = {
        "knot": str(T),
        "trivial": T.is_trivial(),
        "genus": genus(T),
        "alexander": str(delta),
        "ddHalf": delta_dd_half(T),
        "signature": signature(T),
    }
    if args.format == "csv":
        raise UsageError("invariants supports --format text or json")
    text = "\n".join(f"{k:<10} {v}" for k, v in row.items())
    _emit(row, args.format, text)
    return 0


def cmd_surgery(args) -> int:
    T = parse_knot(args.knot)
    r = parse_slope(args.slope)
    if T.is_trivial():
        raise UsageError(f"{T} is the unknot")
    try:
        cls = classify_torus_surgery(T, r, require_params=True)
    except UnsupportedSlope as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        raise UsageError("surgery supports --format text or json")
    obj = {"knot": str(T), "slope": str(r), "class": type(cls).__name__, "result": str(cls)}
    if isinstance(cls, Lens) and cls.lens is not None:
        obj["order"], obj["param"] = cls.lens.order, cls.lens.param
    _emit(obj, args.format, str(cls))
    return 0


def _pair_row(k: int, n: int, states) -> dict:
    inst = pairsgen.instantiate(states[k + 1], n)
    checks = pairsgen.verify_pair(inst)
    a, b, c, d = inst.raw
    return {
        "k": k,
        "n": n,
        "a": a,
        "b": b,
        "c": c,
        "d": d,
        "p": inst.slope,
        "lens1": str(inst.lens1),
        "lens2": str(inst.lens2),
        "genus1": genus(inst.K1),
        "genus2": genus(inst.K2),
        "ddHalf": delta_dd_half(inst.K1),
        "verified": all(ch.passed for ch in checks),
        "_failed": [ch.id for ch in checks if not ch.passed],
    }


def cmd_pairs(args) -> int:
    ks = parse_int_list(args.k or ["1"])
    ns = parse_int_list(args.n or ["2"])
    bad = [k for k in ks if k < 1] + [n for n in ns if n < 2]
    states = pairsgen.generate(max(ks))
    grid = [(k, n) for k in ks for n in ns]
    try:
        for k, n in grid:
            # surface degenerate instances (e.g. n = 1) as usage errors
            pairsgen.instantiate(states[k + 1], n)
    except pairsgen.DegenerateInstance as exc:
        raise UsageError(f"degenerate instance: {exc}") from None
    if bad:
        raise UsageError(f"need k >= 1 and n >= 2, got {bad}")
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        rows = list(pool.map(lambda kn: _pair_row(kn[0], kn[1], states), grid))
    failed = [r for r in rows if not r["verified"]]
    for r in failed:
        print(f"verification failed for k={r['k']}, n={r['n']}: {', '.join(r['_failed'])}", file=sys.stderr)
    rows = [{c: r[c] for c in PAIR_COLUMNS} for r in rows]
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(PAIR_COLUMNS)
        for r in rows:
            w.writerow([str(r[c]).lower() if c == "verified" else r[c] for c in PAIR_COLUMNS])
        sys.stdout.write(buf.getvalue())
    else:
        for r in rows:
            print(
                f"k={r['k']} n={r['n']}: S^3_{r['p']}(T({r['a']},{r['b']})) = {r['lens1']} ~ "
                f"{r['lens2']} = S^3_{r['p']}(T({r['c']},{r['d']}))  genus {r['genus1']} vs "
                f"{r['genus2']}  ddHalf {r['ddHalf']}  verified={str(r['verified']).lower()}"
            )
    return 1 if failed else 0


def cmd_staircases(args) -> int:
    g = args.genus
    if g < 1:
        raise UsageError("--genus must be at least 1")
    if args.format == "csv":
        raise UsageError("staircases supports --format text or json")
    mode = args.mode
    if mode == "list":
        items = staircase.enumerate_staircases(g)
        obj = {"genus": g, "staircases": [list(s.exps) for s in items], "note": STAIRCASE_NOTE}
        text = "\n".join(str(s) for s in items)
    elif mode == "count":
        n = len(staircase.enumerate_staircases(g))
        obj = {"genus": g, "count": n, "note": STAIRCASE_NOTE}
        text = str(n)
    elif mode == "extremal":
        value, best = staircase.extremal_bound_check(g)
        obj = {"genus": g, "max": value, "argmax": list(best.exps), "note": STAIRCASE_NOTE}
        text = f"max {value} at {best}"
    else:
        hits = staircase.dd_collision_search(g)
        obj = {
            "g_max": g,
            "collisions": [{"genus": h, "first": list(s1.exps), "second": list(s2.exps),
                            "ddHalf": staircase.delta_dd_half(s1)} for h, s1, s2 in hits],
            "note": STAIRCASE_NOTE,
        }
        text = "none" if not hits else "\n".join(
            f"g={h}: {s1} {s2} ddHalf={staircase.delta_dd_half(s1)}" for h, s1, s2 in hits)
    _emit(obj, args.format, text)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.scope)
    print(report.to_json())
    s = report.summary()
    print(f"{report.suite}: {s['passed']}/{s['total']} checks passed", file=sys.stderr)
    for c in report.checks:
        if not c.passed:
            print(f"  FAIL {c.id}: {c.description}", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ksl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "json", "csv")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("invariants", help="genus, Alexander polynomial, Delta''(1)/2, signature")
    p.add_argument("knot", help='torus knot descriptor, e.g. "T(2,3)"')
    fmt(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("surgery", help="classify a surgery on a torus knot")
    p.add_argument("knot")
    p.add_argument("slope", help="p or p/q")
    fmt(p)
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("pairs", help="torus-knot pairs with a common lens space surgery")
    p.add_argument("--k", action="append", help="level k >= 1 (repeatable, or a range a..b)")
    p.add_argument("--n", action="append", help="n >= 2 (repeatable, or a range a..b)")
    fmt(p)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("staircases", help="enumerate L-space staircases of a given genus")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--mode", choices=("list", "count", "extremal", "collisions"), default="list")
    fmt(p)
    p.set_defaults(func=cmd_staircases)

    p = sub.add_parser("verify", help="run the self-verification suite and print a JSON report")
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ksl: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Self-verification suites emitted as machine-readable reports."""

from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import gcd
from typing import Callable

from . import pairsgen, staircase, surgery, torusknot
from .exactalg import NonExactDivision
from .pairsgen import Check

SCHEMA_VERSION = 1
SCOPES = ("all", "appendix", "staircase", "surgery")

# Rendered family polynomials for k = 1..5, as (a, b, c, d, p).
FAMILY_TABLE = {
    1: ("n+2", "n^2+n-1", "n", "n^2+3n+1", "n^3+3n^2+n-1"),
    2: ("n^2+3n+1", "n^3+2n^2-n-1", "n^2+n-1", "n^3+4n^2+3n-1", "n^5+5n^4+6n^3-2n^2-4n"),
    3: (
        "n^3+4n^2+3n-1",
        "n^4+3n^3-3n",
        "n^3+2n^2-n-1",
        "n^4+5n^3+6n^2-n-2",
        "n^7+7n^6+15n^5+5n^4-15n^3-9n^2+3n+1",
    ),
    4: (
        "n^4+5n^3+6n^2-n-2",
        "n^5+4n^4+2n^3-5n^2-2n+1",
        "n^4+3n^3-3n",
        "n^5+6n^4+10n^3+n^2-6n-1",
        "n^9+9n^8+28n^7+28n^6-21n^5-49n^4-6n^3+18n^2+3n-1",
    ),
    5: (
        "n^5+6n^4+10n^3+n^2-6n-1",
        "n^6+5n^5+5n^4-6n^3-7n^2+2n+1",
        "n^5+4n^4+2n^3-5n^2-2n+1",
        "n^6+7n^5+15n^4+6n^3-11n^2-6n+1",
        "n^11+11n^10+45n^9+75n^8+6n^7-126n^6-98n^5+50n^4+60n^3-4n^2-8n",
    ),
}


def compact(text: str) -> str:
    return "".join(text.split()).replace("{", "").replace("}", "")


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary(self) -> dict:
        passed = sum(c.passed for c in self.checks)
        return {"total": len(self.checks), "passed": passed, "failed": len(self.checks) - passed}

    def to_dict(self) -> dict:
        checks = []
        for c in self.checks:
            d = asdict(c)
            d["status"] = "pass" if d.pop("passed") else "fail"
            checks.append(d)
        return {
            "schema_version": self.schema_version,
            "suite": self.suite,
            "checks": checks,
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def worker_count() -> int:
    try:
        n = int(os.environ.get("KSL_THREADS", "0"))
    except ValueError:
        n = 0
    return n if n > 0 else min(8, os.cpu_count() or 1)


# Each check builder returns a Check; failures inside a builder become a failed
# check rather than an exception.
CheckFn = Callable[[], Check]
Entry = tuple[str, CheckFn]


def _guard(entry: Entry) -> Check:
    cid, fn = entry
    try:
        return fn()
    except Exception as exc:  # noqa: BLE001
        return Check(cid, "check raised", "n/a", False, {"error": f"{type(exc).__name__}: {exc}"})


@lru_cache(maxsize=1)
def _states() -> tuple[pairsgen.PairFamilyState, ...]:
    return tuple(pairsgen.generate(20))


def _appendix_checks() -> list[Entry]:
    specs = []
    anchor_rec = "family recursion in Z[n] from (-1, 1, 1, 1, 0, n+1)"

    for k, row in FAMILY_TABLE.items():

        def table_check(k=k, row=row):
            s = _states()[k + 1]
            got = tuple(compact(f.render()) for f in (s.a, s.b, s.c, s.d, s.p))
            want = tuple(compact(x) for x in row)
            return Check(f"table-k{k}", f"level {k} polynomials match the printed table",
                         "printed table k=1..5", got == want, {"got": list(got)})

        specs.append((f"table-k{k}", table_check))

    for k in range(0, 21):

        def ident(k=k):
            s = _states()[k + 1]
            bad = pairsgen.invariant_failures(s)
            return Check(f"identities-k{k:02d}",
                         f"ab+1=p=cd-1, b^2d^2=pq+1, monic degrees at level {k}",
                         "lens-slope and q-defining identities", not bad, {"failures": bad})

        specs.append((f"identities-k{k:02d}", ident))

    def no_nonexact():
        try:
            _states()
        except NonExactDivision as exc:
            return Check("integrality", "all recursion divisions are exact up to k=20", anchor_rec,
                         False, {"error": str(exc)})
        return Check("integrality", "all recursion divisions are exact up to k=20", anchor_rec, True,
                     {"k_max": 20})

    specs.append(("integrality", no_nonexact))

    def cd_minus_ab():
        bad = [s.k for s in _states()[1:] if s.c * s.d - s.a * s.b != 2]
        return Check("cd-minus-ab", "c_k d_k - a_k b_k = 2 for k = 0..20",
                     "gcd(a,c) and gcd(b,d) divide 2", not bad, {"bad_levels": bad})

    specs.append(("cd-minus-ab", cd_minus_ab))

    def first_instance():
        inst = pairsgen.instantiate(_states()[2], 2)
        checks = pairsgen.verify_pair(inst)
        ok = (
            inst.raw == (4, 5, 2, 11)
            and inst.slope == 21
            and str(inst.lens1) == "L(21,4)"
            and str(inst.lens2) == "L(21,16)"
            and torusknot.genus(inst.K1) == 6
            and torusknot.genus(inst.K2) == 5
            and torusknot.delta_dd_half(inst.K1) == torusknot.delta_dd_half(inst.K2) == 15
            and all(c.passed for c in checks)
        )
        return Check("first-instance", "k=1, n=2 gives 21-surgery on T(4,5) and T(2,11)",
                     "S^3_21(T(4,5)) = S^3_21(T(2,11))", ok,
                     {"lens1": str(inst.lens1), "lens2": str(inst.lens2)})

    specs.append(("first-instance", first_instance))

    for k in range(1, 9):

        def grid(k=k):
            failed = []
            for n in range(2, 9):
                inst = pairsgen.instantiate(_states()[k + 1], n)
                failed.extend(f"n={n}:{c.id}" for c in pairsgen.verify_pair(inst) if not c.passed)
            return Check(f"pair-grid-k{k}", f"all five pair checks for k={k}, n=2..8",
                         "common lens surgery on torus knots of different genera", not failed,
                         {"failures": failed})

        specs.append((f"pair-grid-k{k}", grid))

    def degenerate():
        try:
            pairsgen.instantiate(_states()[2], 1)
        except pairsgen.DegenerateInstance:
            return Check("n1-degenerate", "n=1 yields unknots and is rejected",
                         "n=1 specialization gives b_k(1) = c_k(1) = 1", True)
        return Check("n1-degenerate", "n=1 yields unknots and is rejected",
                     "n=1 specialization gives b_k(1) = c_k(1) = 1", False)

    specs.append(("n1-degenerate", degenerate))

    def fib():
        st = _states()
        bad = [k for k in range(-1, 16) if not pairsgen.fibonacci_specialization(k, st)]
        return Check("fibonacci", "n=2 values are Fibonacci numbers for k=-1..15",
                     "n=2 Fibonacci closed forms", not bad, {"bad_levels": bad})

    def n1():
        st = _states()
        bad = [k for k in range(-1, 16) if not pairsgen.n1_specialization(k, st)]
        return Check("n1-closed-form", "n=1 values are (2k+1,1,1,2k+3,2k+2,2k+4) for k=-1..15",
                     "n=1 closed form", not bad, {"bad_levels": bad})

    specs += [("fibonacci", fib), ("n1-closed-form", n1)]
    return specs


def _staircase_checks() -> list[Entry]:
    specs = []
    for g in range(1, 13):

        def extremal(g=g):
            tops = staircase.maximizers(g)
            value = staircase.delta_dd_half(tops[0])
            ok = value == g * (g + 1) // 2 and tops == [staircase.t2_staircase(g)]
            return Check(f"extremal-g{g:02d}", f"max Delta''(1)/2 over genus {g} staircases is g(g+1)/2, "
                         "attained only by T(2,2g+1)", "equality exactly for T(2,2g+1)", ok,
                         {"max": value, "argmax": [str(s) for s in tops]})

        specs.append((f"extremal-g{g:02d}", extremal))

    def injective():
        hits = staircase.dd_collision_search(5)
        return Check("dd-injective-g5", "Delta''(1)/2 separates staircases of equal genus g <= 5",
                     "injectivity for g <= 5", not hits, {"collisions": len(hits)})

    def first_collision():
        g = staircase.first_collision_genus(10)
        return Check("dd-first-collision", "first genus <= 10 with a Delta''(1)/2 collision (reported)",
                     "injectivity fails in general", True, {"first_collision_genus": g})

    def dual_route():
        bad = [str(s) for g in range(1, 13) for s in staircase.enumerate_staircases(g)
               if 2 * staircase.delta_dd_half(s) != staircase.to_alexander(s).second_derivative_at_one()]
        return Check("dd-dual-route-staircase", "closed-form and direct Delta''(1)/2 agree for g <= 12",
                     "Delta''(1)/2 = sum a_i + g(g-1)/2", not bad, {"bad": bad})

    def hfk():
        bad = []
        for g in range(1, 11):
            for s in staircase.enumerate_staircases(g):
                if staircase.hfk_postcondition_failures(s):
                    bad.append(str(s))
        trefoil = staircase.hfk_bigraded(staircase.Staircase(1, (1,)))
        ok = not bad and sorted(trefoil) == sorted([(1, 0), (0, -1), (-1, -2)])
        return Check("hfk-consistency", "bigraded generators: Euler characteristic, symmetry, top grading",
                     "knot Floer homology of L-space knots is determined by Delta", ok, {"bad": bad})

    def dims():
        bad = []
        for g in range(1, 7):
            s = staircase.t2_staircase(g)
            for p in range(-40, 41):
                for q in range(1, 6):
                    if p == 0 or gcd(p, q) != 1:
                        continue
                    d = staircase.surgery_hf_dim(s, p, q)
                    if (p >= q * (2 * g - 1)) != (d == abs(p)) or d < abs(p):
                        bad.append((g, p, q))
        odd = [staircase.hf_odd_dim_large(s, m) for g in range(1, 7)
               for s in staircase.enumerate_staircases(g) for m in range(max(1, 2 * g - 1), 2 * g + 20)]
        return Check("surgery-dimensions", "dim HF-hat = |p| exactly on L-space slopes; odd part vanishes",
                     "dim HF-hat(S^3_{p/q}) = q(2g-1) + |p - q(2g-1)|", not bad and not any(odd),
                     {"bad": bad[:10]})

    specs += [("dd-injective-g5", injective), ("dd-first-collision", first_collision),
              ("dd-dual-route-staircase", dual_route), ("hfk-consistency", hfk),
              ("surgery-dimensions", dims)]
    return specs


def _coprime_knots(limit: int, lo: int = 2):
    for A, B in itertools.combinations(range(lo, limit + 1), 2):
        if gcd(A, B) == 1:
            yield A, B


def _surgery_checks() -> list[Entry]:
    def exclusion():
        hits = {g: surgery.satellite_lspace_exclusion(g) for g in range(1, 201)}
        bad = {g: h for g, h in hits.items() if h}
        return Check("satellite-exclusion", "no satellite decomposition survives for g = 1..200",
                     "L-space knots with the T(2,2g+1) Alexander polynomial are not satellites",
                     not bad, {"survivors": {str(g): h for g, h in bad.items()}})

    def zero_compare():
        knots = [torusknot.TorusKnot(s * A, B) for A, B in _coprime_knots(12) for s in (1, -1)]
        same = [
            (str(J), str(K))
            for J, K in itertools.combinations(knots, 2)
            if surgery.zero_surgery_torus_compare(J, K) is surgery.Verdict.SAME
        ]
        return Check("zero-surgery-compare", "distinct torus knots with parameters <= 12 are separated",
                     "torus knots are determined by their 0-surgery", not same,
                     {"knots": len(knots), "undistinguished": same})

    def dd_torus():
        bad = [(A, B) for A, B in _coprime_knots(30)
               if 2 * torusknot.delta_dd_half(torusknot.TorusKnot(A, B))
               != torusknot.alexander(torusknot.TorusKnot(A, B)).second_derivative_at_one()]
        return Check("dd-dual-route-torus", "(a^2-1)(b^2-1)/24 matches the direct Delta''(1)/2",
                     "Delta''(1)/2 = (a^2-1)(b^2-1)/24", not bad, {"bad": bad})

    def sig_sign():
        bad = []
        for A, B in _coprime_knots(12):
            T = torusknot.TorusKnot(A, B)
            s, m = torusknot.signature(T), torusknot.signature(torusknot.mirror(T))
            if not (s < 0 and s % 2 == 0 and s + m == 0):
                bad.append(str(T))
        return Check("signature-sign", "positive torus knots have negative even signature, mirrors negate",
                     "signature sign separates a torus knot from its mirror", not bad, {"bad": bad})

    def lens_examples():
        T45, T211 = torusknot.TorusKnot(4, 5), torusknot.TorusKnot(2, 11)
        r = surgery.Slope(21)
        c1 = surgery.classify_torus_surgery(T45, r)
        c2 = surgery.classify_torus_surgery(T211, r)
        c3 = surgery.classify_torus_surgery(torusknot.TorusKnot(2, 3), surgery.Slope(6))
        ok = (
            str(c1) == "L(21,4)"
            and str(c2) == "L(21,16)"
            and surgery.lens_homeo_oriented(c1.lens, c2.lens)
            and c3 == surgery.ConnectedSumOfLens(2, 3)
        )
        return Check("moser-examples", "surgery classification on T(4,5), T(2,11), T(2,3)",
                     "Moser classification of torus knot surgeries", ok,
                     {"T(4,5)": str(c1), "T(2,11)": str(c2), "T(2,3)@6": str(c3)})

    return [("satellite-exclusion", exclusion), ("zero-surgery-compare", zero_compare),
            ("dd-dual-route-torus", dd_torus), ("signature-sign", sig_sign),
            ("moser-examples", lens_examples)]


SUITES = {
    "appendix": _appendix_checks,
    "staircase": _staircase_checks,
    "surgery": _surgery_checks,
}


def run_suite(scope: str = "all") -> Report:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; expected one of {', '.join(SCOPES)}")
    names = list(SUITES) if scope == "all" else [scope]
    entries = [e for name in names for e in SUITES[name]()]
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        checks = list(pool.map(_guard, entries))
    return Report(scope, checks)

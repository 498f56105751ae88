"""The full verification suite behind ``hirzscroll verify-paper``.

Every check compares a closed form with an independent exact computation and
records one entry per failing parameter (plus a summary entry), so a report
names exactly what broke. Closed forms are looked up through their modules at
call time; patching one of them is enough to make the suite fail.
"""

from __future__ import annotations

import time
import traceback
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from hirzscroll import __version__, cech, chow, divisors, hilbert, p1, scroll
from hirzscroll.divisors import DivisorClass, Surface

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Check:
    id: str
    statement: str
    status: str = PASS
    expected: object = None
    actual: object = None
    seconds: float = 0.0
    time_limit: Optional[float] = None
    failures: list[dict] = field(default_factory=list)
    cases: int = 0

    def expect(self, label: str, expected, actual) -> None:
        self.cases += 1
        if expected != actual:
            self.status = FAIL
            if len(self.failures) < 20:
                self.failures.append({"case": label, "expected": _jsonable(expected), "actual": _jsonable(actual)})

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "status": self.status,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "cases": self.cases,
            "time_limit_s": None if self.time_limit is None else int(self.time_limit),
            "failures": self.failures,
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, (p1.SplittingType,)):
        return list(x.alphas)
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


@dataclass
class Grid:
    """Optional restriction of every sweep to ``b`` in ``b_range`` and ``k`` in
    ``k_range`` (inclusive)."""

    b_range: Optional[tuple[int, int]] = None
    k_range: Optional[tuple[int, int]] = None

    def bs(self, lo: int, hi: int) -> range:
        if self.b_range:
            lo, hi = max(lo, self.b_range[0]), min(hi, self.b_range[1])
        return range(lo, hi + 1)

    def ks(self, lo: int, hi: int) -> range:
        if self.k_range:
            lo, hi = max(lo, self.k_range[0]), min(hi, self.k_range[1])
        return range(lo, hi + 1)


def _run(check: Check, body: Callable[[Check], None]) -> Check:
    start = time.perf_counter()
    try:
        body(check)
    except Exception as exc:  # a crash is a failure, reported with its reason
        check.status = FAIL
        check.failures.append({"case": "exception", "error": f"{type(exc).__name__}: {exc}",
                               "trace": traceback.format_exc(limit=3)})
    check.seconds = time.perf_counter() - start
    if check.time_limit is not None and check.seconds > check.time_limit:
        check.status = FAIL
        check.failures.append({"case": "runtime", "expected": f"< {check.time_limit} s",
                               "actual": f"{check.seconds:.3f} s"})
    if check.cases == 0 and check.status == PASS:
        check.status = SKIPPED
    return check


def check_golden_tables(grid: Grid) -> Check:
    c = Check("golden_tables", "(d, g, n, dim) of the two degree-10/11 scrolls over F_1",
              time_limit=1.0)

    def body(c: Check):
        golden = {(5, 11): (10, 5, 7, 77), (5, 10): (11, 5, 8, 90)}
        c.expected = {f"{b},{k}": v for (b, k), v in golden.items()}
        c.actual = {}
        for (b, k), want in golden.items():
            row = hilbert.table_row(b, k)
            got = (row.d, row.g, row.n, row.dim)
            c.actual[f"{b},{k}"] = got
            c.expect(f"b={b},k={k}", want, got)
            c.expect(f"b={b},k={k} c1,c2", ("3C0+5f", k), (row.c1, row.c2))

    return _run(c, body)


def check_chi_normal(grid: Grid) -> Check:
    c = Check("chi_normal_identity",
              "HRR chi(N) = (-2b+8+d)n - 29 + 16b - 3d = n(n+1) + 3k - 2b - 2 for 5 <= b <= 12, b <= k <= 4b-8",
              time_limit=5.0)

    def body(c: Check):
        for b in grid.bs(5, 12):
            for k in grid.ks(b, 4 * b - 8):
                hrr = chow.chi_normal_hrr(scroll.ScrollFamily(b, k))
                collapsed = chow.chi_normal_collapsed(b, k)
                expected = chow.chi_normal_expected(b, k)
                c.expect(f"b={b},k={k} hrr=collapsed", collapsed, hrr)
                c.expect(f"b={b},k={k} collapsed=expected", expected, collapsed)
                c.expect(f"b={b},k={k} expected_dim", expected, hilbert.expected_dim(b, k))

    return _run(c, body)


def check_cohomology_lemmas(grid: Grid) -> Check:
    c = Check("cohomology_oracle_vs_lemmas",
              "exact h^i of A, B, A-B reproduce h^1(A), h^0 formulas, dim Ext^1 and the vanishings "
              "for 4 <= b <= 12, b <= k <= 4b",
              time_limit=5.0)

    def body(c: Check):
        for b in grid.bs(4, 12):
            for k in grid.ks(b, 4 * b):
                fam = scroll.ScrollFamily(b, k)
                A = divisors.cohomology_divisor(fam.A, fam.surface)
                B = divisors.cohomology_divisor(fam.B, fam.surface)
                AB = divisors.cohomology_divisor(fam.A - fam.B, fam.surface)
                tag = f"b={b},k={k}"
                c.expect(f"{tag} h1(A)", scroll.h1_A(b, k), A.h1)
                c.expect(f"{tag} h0(A)", scroll.h0_A(b, k), A.h0)
                c.expect(f"{tag} h0(B)", scroll.h0_B(b, k), B.h0)
                c.expect(f"{tag} dim Ext1", scroll.dim_ext1(b, k), AB.h1)
                c.expect(f"{tag} h2(A),h1(B),h2(B)", (0, 0, 0), (A.h2, B.h1, B.h2))
                c.expect(f"{tag} h0(B)>=h1(A)", k <= 4 * b - 1, scroll.check_h0B_ge_h1A(b, k))
                tab = scroll.cohomology_table(b, k)
                if k <= 4 * b - 1:
                    c.expect(f"{tag} chi(E)", tab.h0E_generic, fam.chi_E())

    return _run(c, body)


def check_duality(grid: Grid, bound: int = 15) -> Check:
    c = Check("serre_duality_riemann_roch",
              f"h^i(D) = h^(2-i)(K-D) and h0-h1+h2 = chi(D) for |a|,|b| <= {bound}, e in 0..3",
              time_limit=10.0)

    def body(c: Check):
        for e in range(4):
            S = Surface(e)
            K = divisors.canonical_class(S)
            for a in range(-bound, bound + 1):
                for b in range(-bound, bound + 1):
                    D = DivisorClass(a, b)
                    h = divisors.cohomology_divisor(D, S)
                    dual = divisors.cohomology_divisor(K - D, S)
                    c.expect(f"e={e} D={D} duality", h, dual.reversed())
                    c.expect(f"e={e} D={D} RR", divisors.chi_divisor(D, S), h.chi)

    return _run(c, body)


def check_nonspecial(grid: Grid, trials: int = 5, seed: int = 0, coeff_bound: int = 100) -> Check:
    c = Check("generic_nonspecial_cech",
              "general E has h^1 = 0 and h^0 = 4b-k-1 for 5 <= b <= 9, 2b-2 <= k <= 4b-1; "
              "every class has h^1 = 0 for b <= k <= 2b-3",
              time_limit=60.0)

    def body(c: Check):
        for b in grid.bs(5, 9):
            for k in grid.ks(b, 4 * b - 1):
                tag = f"b={b},k={k}"
                if k >= 2 * b - 2:
                    h0, h1, cert = cech.generic_extension_cohomology(b, k, trials, seed, coeff_bound)
                    c.expect(f"{tag} (h0,h1)", (4 * b - k - 1, 0), (h0, h1))
                    c.expect(f"{tag} certified", True, cert.certified)
                    c.expect(f"{tag} table", scroll.cohomology_table(b, k).h0E_generic, h0)
                else:
                    for trial in range(trials):
                        x = cech.sample_extension(b, k, seed, coeff_bound, trial)
                        c.expect(f"{tag} trial {trial} h1", 0, cech.extension_cohomology(x)[1])
                    c.expect(f"{tag} zero class h1", 0,
                             cech.extension_cohomology(cech.StructuredExtension.zero(b, k))[1])

    return _run(c, body)


def check_balanced_splitting(grid: Grid, seed: int = 0, coeff_bound: int = 100) -> Check:
    c = Check("balanced_splitting",
              "generic pi_*E splits as balanced_partition(4b-k-6, 5), all five residues mod 5, "
              "5 <= b <= 9, 2b-2 <= k <= 4b-1",
              time_limit=60.0)

    def body(c: Check):
        c.actual = {}
        for b in grid.bs(5, 9):
            residues = set()
            for k in grid.ks(2 * b - 2, 4 * b - 1):
                x = cech.sample_extension(b, k, seed, coeff_bound)
                T = cech.splitting_type_of_extension(x)
                want = p1.balanced_partition(4 * b - k - 6, 5)
                c.expect(f"b={b},k={k}", want, T)
                residues.add((4 * b - k - 6) % 5)
                if b == 5:
                    c.actual[f"k={k}"] = list(T.alphas)
            if len(grid.ks(2 * b - 2, 4 * b - 1)) >= 5:
                c.expect(f"b={b} residues", {0, 1, 2, 3, 4}, residues)

    return _run(c, body)


def check_cup_ranks(grid: Grid, seed: int = 0, coeff_bound: int = 100) -> Check:
    c = Check("cup_product_ranks",
              "b=5, k in {9, 11}: rank(sigma cup -) = h^1(A), its kernel has dim k+1, rank(- cup e) = h^1(A)")

    def body(c: Check):
        b = 5
        for k in (9, 11):
            if b not in grid.bs(b, b) or k not in grid.ks(k, k):
                continue
            h1A = scroll.h1_A(b, k)
            sigma = cech.sample_section(b, k, seed, coeff_bound)
            Phi = cech.cup_with_section(b, k, sigma)
            c.expect(f"k={k} rank Phi", h1A, Phi.rank())
            c.expect(f"k={k} nullity Phi", k + 1, Phi.nullity())
            c.expect(f"k={k} Ext dim", scroll.dim_ext1(b, k), Phi.shape[1])
            x = cech.sample_extension(b, k, seed, coeff_bound)
            c.expect(f"k={k} rank d_e", h1A, cech.coboundary_matrix(x).rank())

    return _run(c, body)


def check_parameter_count(grid: Grid) -> Check:
    c = Check("parameter_count_identity",
              "tau + n(n+2) - h^0(E (x) E^dual) - 5 = n(n+1) + 3k - 2b - 2 on 5 <= b <= k <= 4b-8")

    def body(c: Check):
        for b in grid.bs(5, 12):
            for k in grid.ks(b, 4 * b - 8):
                tag = f"b={b},k={k}"
                split = 2 * k < 3 * b - 3
                c.expect(f"{tag} lower=expected", hilbert.expected_dim(b, k), hilbert.dim_Y_lower_bound(b, k))
                fam = scroll.ScrollFamily(b, k)
                if split:
                    exact_end = (
                        2
                        + divisors.cohomology_divisor(fam.A - fam.B, fam.surface).h0
                        + divisors.cohomology_divisor(fam.B - fam.A, fam.surface).h0
                    )
                    c.expect(f"{tag} tau", 0, hilbert.tau(b, k))
                    c.expect(f"{tag} end_dim", (6 * b - 4 * k - 5, exact_end),
                             (scroll.end_dim(b, k), scroll.end_dim(b, k)))
                else:
                    c.expect(f"{tag} tau", (4 * k - 6 * b + 6, scroll.dim_ext1(b, k) - 1),
                             (hilbert.tau(b, k), hilbert.tau(b, k)))
                    c.expect(f"{tag} end_dim", 1, scroll.end_dim(b, k))

    return _run(c, body)


def check_f0(grid: Grid) -> Check:
    c = Check("f0_scrolls",
              "F_0, k in 7..10: n+k = 16, (20-k)(n-3)-3n+49 = n(n+2)-27+4k, dim P(Ext^1) = 4k-21 = h^1(A-B) - 1")

    def body(c: Check):
        c.actual = {}
        flags = []
        for k in grid.ks(7, 10):
            rep = hilbert.f0_invariants(k)
            fam = scroll.ScrollFamily(3, k, e=0)
            exact = divisors.cohomology_divisor(fam.A - fam.B, divisors.F0).h1 - 1
            c.expect(f"k={k} n+k", 16, rep.n + k)
            c.expect(f"k={k} identity", rep.n * (rep.n + 2) - 27 + 4 * k, rep.dim_component)
            c.expect(f"k={k} identity_holds", True, rep.identity_holds)
            c.expect(f"k={k} dim P(Ext1)", (4 * k - 21, exact), (rep.dim_proj_ext, rep.dim_proj_ext))
            c.expect(f"k={k} chi(N)", rep.dim_component, rep.chi_normal)
            c.actual[f"k={k}"] = {"n": rep.n, "dim": rep.dim_component}
            if not rep.n_in_quoted_range:
                flags.append(k)
        # documented discrepancy, not a failure: n = 16-k gives n in 6..9, the quoted range is 7..10
        c.expected = {"n_outside_quoted_range_for_k": flags}

    return _run(c, body)


CHECKS: list[tuple[str, Callable[..., Check]]] = [
    ("1", check_golden_tables),
    ("2", check_chi_normal),
    ("3", check_cohomology_lemmas),
    ("4", check_duality),
    ("5", check_nonspecial),
    ("6", check_balanced_splitting),
    ("7", check_cup_ranks),
    ("8", check_parameter_count),
    ("9", check_f0),
]


def run_all(grid: Grid | None = None, seed: int = 0, trials: int = 5, coeff_bound: int = 100,
            only: Iterable[str] | None = None) -> dict:
    grid = grid or Grid()
    results = []
    only = set(only) if only else None
    for num, fn in CHECKS:
        if only and num not in only:
            continue
        if fn is check_nonspecial:
            ch = fn(grid, trials=trials, seed=seed, coeff_bound=coeff_bound)
        elif fn in (check_balanced_splitting, check_cup_ranks):
            ch = fn(grid, seed=seed, coeff_bound=coeff_bound)
        else:
            ch = fn(grid)
        ch.id = f"{num}:{ch.id}"
        results.append(ch)
    counts = {s: sum(1 for r in results if r.status == s) for s in (PASS, FAIL, SKIPPED)}
    return {
        "checks": results,
        "summary": counts,
        "failed": [r.id for r in results if r.status == FAIL],
        "seed": seed,
        "version": __version__,
    }

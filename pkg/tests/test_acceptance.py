"""Acceptance criteria 1-10, each at its stated tolerance and time limit.

One PASS/FAIL line per criterion is printed in the terminal summary.
"""

import json
import subprocess
import sys
import time
from dataclasses import replace

import pytest

from conftest import ACCEPTANCE_LINES
from hirzscroll import chow, hilbert, p1, scroll, verify
from hirzscroll.cli import main
from hirzscroll.p1 import SplittingType


@pytest.fixture
def record(request):
    crit = request.node.get_closest_marker("criterion").args[0]
    ACCEPTANCE_LINES.setdefault(crit, f"criterion {crit:>2}: FAIL  {request.node.name}")

    def done(detail: str):
        ACCEPTANCE_LINES[crit] = f"criterion {crit:>2}: PASS  {detail}"

    return done


def assert_check(check: verify.Check):
    assert check.status == verify.PASS, json.dumps(check.as_dict()["failures"][:5], indent=1)
    assert check.cases > 0


@pytest.mark.criterion("1")
def test_golden_tables(capsys, record):
    start = time.perf_counter()
    rows = {}
    for k in (11, 10):
        assert main(["scroll", "--b", "5", "--k", str(k), "--format", "json"]) == 0
        r = json.loads(capsys.readouterr().out)["results"]["table_row"]
        rows[k] = (r["d"], r["g"], r["n"], r["dim"])
    elapsed = time.perf_counter() - start
    assert rows == {11: (10, 5, 7, 77), 10: (11, 5, 8, 90)}
    assert elapsed < 1.0
    record(f"(d,g,n,dim) = {rows[11]}, {rows[10]} in {elapsed:.2f} s")


@pytest.mark.criterion("2")
def test_chi_normal_identity(record):
    c = verify.check_chi_normal(verify.Grid())
    assert_check(c)
    assert c.seconds < 5.0
    assert c.cases == 3 * sum(4 * b - 8 - b + 1 for b in range(5, 13))
    record(f"{c.cases // 3} (b,k) pairs, HRR = collapsed = expected, {c.seconds:.2f} s")


@pytest.mark.criterion("3")
def test_cohomology_lemmas(record):
    c = verify.check_cohomology_lemmas(verify.Grid())
    assert_check(c)
    assert c.seconds < 5.0
    record(f"{c.cases} comparisons on 4 <= b <= 12, b <= k <= 4b, {c.seconds:.2f} s")


@pytest.mark.criterion("4")
def test_duality_riemann_roch(record):
    c = verify.check_duality(verify.Grid())
    assert_check(c)
    assert c.cases == 2 * 4 * 31 * 31
    assert c.seconds < 10.0
    record(f"{c.cases // 2} divisors on F_0..F_3, {c.seconds:.2f} s")


@pytest.mark.criterion("5")
def test_generic_nonspecial(record):
    c = verify.check_nonspecial(verify.Grid(), trials=5, seed=0, coeff_bound=100)
    assert_check(c)
    assert c.seconds < 60.0
    record(f"h^1(E) = 0 for 5 <= b <= 9, b <= k <= 4b-1 ({c.cases} comparisons), {c.seconds:.2f} s")


@pytest.mark.criterion("6")
def test_balanced_splitting(record):
    from hirzscroll import cech

    for k in range(8, 13):
        T = cech.splitting_type_of_extension(cech.sample_extension(5, k, seed=0))
        assert T == p1.balanced_partition(4 * 5 - k - 6, 5)
    residues = {(4 * 5 - k - 6) % 5 for k in range(8, 13)}
    assert residues == {0, 1, 2, 3, 4}
    c = verify.check_balanced_splitting(verify.Grid())
    assert_check(c)
    record(f"balanced types at b=5, k=8..12 and across b=5..9 ({c.cases} cases), {c.seconds:.2f} s")


@pytest.mark.criterion("7")
def test_cup_ranks(record):
    c = verify.check_cup_ranks(verify.Grid())
    assert_check(c)
    assert c.cases == 8
    record("rank(Phi_sigma) = h^1(A), nullity k+1, rank(d_e) = h^1(A) at b=5, k=9,11")


@pytest.mark.criterion("8")
def test_parameter_count(record):
    c = verify.check_parameter_count(verify.Grid())
    assert_check(c)
    split = [(b, k) for b in range(5, 13) for k in range(b, 4 * b - 7) if 2 * k < 3 * b - 3]
    assert split and len(split) < 180
    record(f"lower bound = expected dim on the full grid ({len(split)} split pairs), {c.seconds:.2f} s")


@pytest.mark.criterion("9")
def test_f0(record):
    c = verify.check_f0(verify.Grid())
    assert_check(c)
    assert c.expected == {"n_outside_quoted_range_for_k": [10]}
    record("n+k = 16, identity and dim P(Ext^1) = 4k-21 for k=7..10; k=10 range flag reported")


@pytest.mark.criterion("10")
def test_verify_paper_full_run(tmp_path, record):
    out = tmp_path / "report.json"
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "hirzscroll", "verify-paper", "--out", str(out)],
                          capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert elapsed < 90.0
    report = json.loads(out.read_text())
    assert [c["id"].split(":")[0] for c in report["results"]["checks"]] == [str(i) for i in range(1, 10)]
    assert report["results"]["summary"] == {"pass": 9, "fail": 0, "skipped": 0}
    FULL_RUN.append(elapsed)


def _perturb_partition(orig):
    def mutated(d, r):
        a = list(orig(d, r).alphas)
        if len(a) > 1:
            a[0] -= 1
            a[-1] += 1
        return SplittingType(a)
    return mutated


def _shift(orig, delta):
    return lambda *args: orig(*args) + delta


FULL_RUN: list[float] = []
DETECTED: set[str] = set()

MUTATIONS = {
    "h1_A": (scroll, "h1_A", lambda b, k: 0 if k <= 2 * b - 3 else 1 if k == 2 * b - 2 else 3 * k - 6 * b + 5, "3"),
    "h0_B": (scroll, "h0_B", lambda b, k: 2 * k - 2 * b + 6, "3"),
    "dim_ext1": (scroll, "dim_ext1", lambda b, k: 0 if 2 * k < 3 * b - 3 else 4 * k - 6 * b + 8, "3"),
    "end_dim": (scroll, "end_dim", lambda b, k: 6 * b - 4 * k - 4 if 2 * k < 3 * b - 3 else 1, "8"),
    "embedding_dim": (scroll, "embedding_dim", lambda b, k: 4 * b - k - 1, "1"),
    "tau": (hilbert, "tau", lambda b, k: 0 if 2 * k < 3 * b - 3 else 4 * k - 6 * b + 5, "8"),
    "expected_dim": (hilbert, "expected_dim", _shift(hilbert.expected_dim, 1), "2"),
    "chi_normal_collapsed": (chow, "chi_normal_collapsed", _shift(chow.chi_normal_collapsed, 1), "2"),
    "chi_normal_expected": (chow, "chi_normal_expected", _shift(chow.chi_normal_expected, -1), "2"),
    "closed_form_invariants": (
        chow, "closed_form_invariants",
        lambda b, k, orig=chow.closed_form_invariants: replace(orig(b, k), c2L=2 * b + 8), "1"),
    "balanced_partition": (p1, "balanced_partition", _perturb_partition(p1.balanced_partition), "6"),
    "f0_embedding_dim": (
        hilbert, "f0_invariants",
        lambda k, orig=hilbert.f0_invariants: replace(orig(k), n=17 - k), "9"),
    "f0_proj_ext": (
        hilbert, "f0_invariants",
        lambda k, orig=hilbert.f0_invariants: replace(orig(k), dim_proj_ext=4 * k - 20), "9"),
}


@pytest.mark.criterion("10")
@pytest.mark.parametrize("name", list(MUTATIONS))
def test_mutation_negative_control(name, monkeypatch, capsys):
    module, attr, mutated, expect_failing = MUTATIONS[name]
    monkeypatch.setattr(module, attr, mutated)
    code = main(["verify-paper", "--grid-b", "5..6", "--format", "json"])
    report = json.loads(capsys.readouterr().out)
    assert code == 1
    failed = [f.split(":")[0] for f in report["results"]["failed"]]
    assert expect_failing in failed, failed
    DETECTED.add(name)


@pytest.mark.criterion("10")
def test_mutation_controls_summary(record):
    # runs last in this file; any earlier criterion-10 failure leaves it red
    assert FULL_RUN, "the unmutated verify-paper run did not pass"
    assert DETECTED == set(MUTATIONS), sorted(set(MUTATIONS) - DETECTED)
    record(f"verify-paper exit 0 in {FULL_RUN[0]:.1f} s; all {len(MUTATIONS)} single-formula mutations exit 1")

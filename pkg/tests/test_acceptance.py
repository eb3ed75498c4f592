"""Acceptance gate.

One test per release criterion, every comparison exact.  Run with

    pytest tests/test_acceptance.py -v -s

to get one ACCEPTANCE line per criterion.  The timing criterion assumes
the compiled backend and is skipped (with a printed reason) when the
interpreted fallback is active.
"""

import math
import time
from contextlib import contextmanager

import pytest

import meshperm
import meshperm.verify as V
from meshperm import (
    BivariatePolynomial,
    ClaimSpec,
    Permutation,
    active_zone,
    big_theta,
    catalan,
    catalog,
    f_poly_bruteforce,
    f_poly_recurrence,
    lehmer,
    m0_set,
    m1_set,
    occurrences,
    phi,
    psi,
    refined_vector,
    run_claim,
    s_poly_bruteforce,
    s_poly_recurrence,
    theta_code,
    unlehmer,
)
from meshperm.cli import main as cli_main

from _golden import PHI_EXAMPLE, PSI_EXAMPLE, THETA_EXAMPLE


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    # the gate must run the full stated ranges, unclipped and unmutated
    monkeypatch.delenv("MESHPERM_MAX_N", raising=False)
    monkeypatch.delenv("MESHPERM_MUTATE", raising=False)


@contextmanager
def criterion(num, desc):
    info = {}
    try:
        yield info
    except BaseException:
        note = f"  [{info['note']}]" if info.get("note") else ""
        print(f"ACCEPTANCE {num}: FAIL  {desc}{note}")
        raise
    note = f"  [{info['note']}]" if info.get("note") else ""
    print(f"ACCEPTANCE {num}: PASS  {desc}{note}")


def run_ok(cid, lo=None, hi=None, jobs=1):
    rep = run_claim(ClaimSpec(cid, min_n=lo, max_n=hi, jobs=jobs))
    assert rep.ok, f"{cid} failed: {rep.counterexample}"
    return rep


def occ_value_sets(host, name):
    return sorted(o.values for o in occurrences(host, catalog(name)))


def test_criterion_01_worked_examples():
    with criterion(1, "worked examples reproduce bit-exact in under 1s") as info:
        t0 = time.perf_counter()

        sig = Permutation.parse(PHI_EXAMPLE["sigma"])
        img = Permutation.parse(PHI_EXAMPLE["image"])
        assert phi(sig) == img and phi(img) == sig
        for name, want in PHI_EXAMPLE["sets"].items():
            assert occ_value_sets(sig, name) == want
        for name, want in PHI_EXAMPLE["image_sets"].items():
            assert occ_value_sets(img, name) == want
        assert refined_vector(sig, 3) == PHI_EXAMPLE["vec3"]
        assert refined_vector(sig, 4) == PHI_EXAMPLE["vec4"]
        assert refined_vector(img, 4) == PHI_EXAMPLE["vec3"]
        assert refined_vector(img, 3) == PHI_EXAMPLE["vec4"]

        sig = Permutation.parse(PSI_EXAMPLE["sigma"])
        img = Permutation.parse(PSI_EXAMPLE["image"])
        assert psi(sig) == img and psi(img) == sig
        zone = active_zone(sig)
        assert (zone.a, zone.b) == PSI_EXAMPLE["zone"]
        for name, want in PSI_EXAMPLE["sets"].items():
            assert occ_value_sets(sig, name) == want
        for name, want in PSI_EXAMPLE["image_sets"].items():
            assert occ_value_sets(img, name) == want

        sig = Permutation.parse(THETA_EXAMPLE["sigma"])
        img = Permutation.parse(THETA_EXAMPLE["image"])
        code = lehmer(sig)
        assert tuple(code) == THETA_EXAMPLE["code"]
        assert m0_set(code) == THETA_EXAMPLE["m0"]
        assert m1_set(code) == THETA_EXAMPLE["m1"]
        flipped = theta_code(code)
        assert tuple(flipped) == THETA_EXAMPLE["flipped"]
        assert unlehmer(flipped) == img
        assert big_theta(sig) == img and big_theta(img) == sig
        for name, want in THETA_EXAMPLE["sets"].items():
            assert occ_value_sets(sig, name) == want
        for name, want in THETA_EXAMPLE["image_sets"].items():
            assert occ_value_sets(img, name) == want

        dt = time.perf_counter() - t0
        info["note"] = f"{dt:.2f}s"
        assert dt < 1.0


def test_criterion_02_joint_symmetry_conjectures():
    with criterion(2, "conj1..conj7 joint symmetry over S_1..S_8") as info:
        t0 = time.perf_counter()
        for t in range(1, 8):
            rep = run_ok(f"conj{t}")
            assert (rep.n_lo, rep.n_hi) == (1, 8)
        info["note"] = f"{time.perf_counter() - t0:.2f}s"


def test_criterion_03_pointwise_swap_theorems():
    with criterion(3, "pointwise swap theorems (refined vectors, lrmin) n<=7"):
        for cid in ("thm-quintuple", "thm-quadruple", "thm-theta-swap"):
            rep = run_ok(cid)
            assert rep.n_hi == 7


def test_criterion_04_involutions_square_to_identity():
    with criterion(4, "phi, psi, theta square to the identity n<=7"):
        rep = run_ok("involutions")
        assert rep.n_hi == 7


def test_criterion_05_characterizations_match_mesh_engine():
    with criterion(5, "characterizations equal mesh engine, P1..P14, all of S_7"):
        check = V._make_oracle_check(tuple(range(1, 15)))
        for n in range(1, 8):
            ok, cex = check(n, 1, 0)
            assert ok, cex


def test_criterion_06_enumeration_table():
    with criterion(6, "enumeration table, all eight rows at stated ranges") as info:
        t0 = time.perf_counter()
        rep = run_ok("prop-AD-empty")
        assert rep.n_lo <= 2 and rep.n_hi == 10
        rep = run_ok("thm-AD3")
        assert (rep.n_lo, rep.n_hi) == (2, 10)
        rep = run_ok("thm-A3D3")
        assert rep.n_hi == 10
        rep = run_ok("table1-132-A")
        assert rep.n_hi == 12
        rep = run_ok("table1-132-Ak")
        assert rep.n_hi == 11
        for cid in ("table1-132-D", "table1-132-D3", "table1-132-D4"):
            rep = run_ok(cid)
            assert rep.n_hi == 12
        info["note"] = f"{time.perf_counter() - t0:.2f}s"


def test_criterion_07_corner_patterns_coincide():
    with criterion(7, "two-corner and four-corner avoidance coincide, k=2..4, n<=9"):
        rep = run_ok("prop-corners")
        assert (rep.n_lo, rep.n_hi) == (2, 9)


def test_criterion_08_bivariate_distribution_polynomial():
    with criterion(8, "F: recurrence, symmetry, constant term, zero locus"):
        rep = run_ok("thm-F-recurrence")
        assert rep.n_hi == 9
        rep = run_ok("F-symmetry")
        assert rep.n_hi == 9
        rep = run_ok("F-zero-locus")
        assert rep.n_hi == 7
        B = BivariatePolynomial
        assert f_poly_recurrence(1) == B.constant(1)
        assert f_poly_recurrence(2) == B.constant(2)
        assert f_poly_recurrence(3) == B.constant(4) + B.s_plus_t()
        assert f_poly_bruteforce(7) == f_poly_recurrence(7)
        for n in range(2, 10):
            assert f_poly_recurrence(n).evaluate(0, 0) == 2 * math.factorial(n - 1)


def test_criterion_09_corner_ascent_polynomial():
    with criterion(9, "S: recurrence vs sweep, specializations, functional equation n<=12"):
        rep = run_ok("thm-S-functional")
        assert rep.n_hi == 12
        for n in range(1, 13):
            s = s_poly_recurrence(n)
            assert s.evaluate(1) == catalan(n)
            if n >= 2:
                assert s.coefficient(0) == catalan(n) - catalan(n - 1)
        assert s_poly_recurrence(12) == s_poly_bruteforce(12)


def test_criterion_10_fault_injection_is_detected(monkeypatch):
    with criterion(10, "injected fault fails a claim with a counterexample") as info:
        monkeypatch.setenv("MESHPERM_MUTATE", "1")
        rep = run_claim(ClaimSpec("lemma-lehmer-p13p14", max_n=4))
        assert rep.status == "fail"
        assert rep.counterexample is not None
        assert rep.counterexample["n"] == 1
        rep2 = run_claim(ClaimSpec("conj7", max_n=4))
        assert rep2.status == "fail" and rep2.counterexample is not None
        info["note"] = f"counterexample: {rep.counterexample}"


def test_criterion_11_verification_runtime():
    if meshperm.BACKEND != "numba":
        print("ACCEPTANCE 11: SKIP  timing budgets assume the compiled backend")
        pytest.skip("timing budgets assume the compiled backend")
    with criterion(11, "verify --all budgets: max-n 7 < 60s, max-n 8 --jobs 8 < 600s") as info:
        V._DIST_CACHE.clear()
        t0 = time.perf_counter()
        code = cli_main(["verify", "--all", "--max-n", "7"])
        t_single = time.perf_counter() - t0
        assert code == 0
        assert t_single < 60.0

        V._DIST_CACHE.clear()
        t0 = time.perf_counter()
        code = cli_main(["verify", "--all", "--max-n", "8", "--jobs", "8"])
        t_par = time.perf_counter() - t0
        assert code == 0
        assert t_par < 600.0
        info["note"] = f"max-n 7: {t_single:.1f}s; max-n 8 jobs 8: {t_par:.1f}s"

"""Acceptance criteria 1-10.

Each test prints exactly one ``criterion N: PASS|FAIL`` line (shown live and
repeated in the terminal summary) and then asserts. Every check is exact.
"""

import math
import random
from fractions import Fraction

import pytest

from hfplus.exactmath import dedekind_euclid, dedekind_naive, eval_hj, hj_expansion
from hfplus.formulas import (
    EXTREMA_FAMILIES,
    SURGERY_PAIRS,
    TABULATED_FAMILIES,
    Family,
    compare_closed,
    compare_extrema,
    conjecture_check,
    delta_report,
    eq1_module,
    lemma57_extrema,
    pipeline_module,
    table1_closed,
    table1_module,
    thm_minus_module,
)
from hfplus.cli import run
from hfplus.gradedroot import HFPlusModule, grading_shift
from hfplus.exactmath import pairwise_coprime
from hfplus.plumbing import bad_vertices, determinant, intersection_matrix, is_negative_definite, star_plumbing
from hfplus.seifert import brieskorn_seifert
from hfplus.tau import delta_ceil, delta_sawtooth, reduced_tau, truncation_bound

from conftest import ACCEPTANCE_LINES, CORPUS

GRID = [(p, q, n) for p, q in SURGERY_PAIRS for n in (1, 2, 3)]
OFFSET_ROWS = {Family(2, 5, -1), Family(2, 7, -1)}


def report(capsys, number: int, failures: list, detail: str) -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {number}: {status}  {detail}"
    if failures:
        line += f"  ({len(failures)} failing checks; first: {failures[0]})"
    ACCEPTANCE_LINES.append(line)
    with capsys.disabled():
        print("\n" + line)
    assert not failures, line


def test_criterion_01_dedekind(capsys):
    failures = []
    spots = {(1, 4): Fraction(1, 8), (4, 5): Fraction(-1, 5), (8, 9): Fraction(-14, 27), (6, 17): Fraction(5, 17)}
    for (h, k), v in spots.items():
        if not dedekind_naive(h, k) == dedekind_euclid(h, k) == v:
            failures.append(("spot", h, k))
    naive = {}
    pairs = [(h, k) for k in range(2, 201) for h in range(1, k) if math.gcd(h, k) == 1]
    for h, k in pairs:
        naive[(h, k)] = dedekind_naive(h, k)
        if dedekind_euclid(h, k) != naive[(h, k)]:
            failures.append(("euclid", h, k))
    for h, k in pairs:
        lhs = naive[(h, k)] + (naive[(k % h, h)] if h > 1 else dedekind_naive(k, 1))
        rhs = Fraction(-1, 4) + (Fraction(h, k) + Fraction(k, h) + Fraction(1, h * k)) / 12
        if lhs != rhs:
            failures.append(("reciprocity", h, k))
    report(capsys, 1, failures, f"{len(pairs)} coprime pairs, euclid = naive, reciprocity, 4 spot values")


def test_criterion_02_delta_equivalence(capsys):
    failures, count = [], 0
    for triple in CORPUS:
        S = brieskorn_seifert(*triple)
        for j in range(truncation_bound(S) + 1):
            count += 1
            if delta_ceil(S, j) != delta_sawtooth(S, j):
                failures.append((triple, j))
    report(capsys, 2, failures, f"{len(CORPUS)} manifolds, {count} increments compared")


def test_criterion_03_eq1(capsys):
    failures = [(p, q, n) for p, q, n in GRID
                if not (eq1_module(p, q, n) == pipeline_module((p, q, p * q * n + 1)) and eq1_module(p, q, n).d == 0)]
    report(capsys, 3, failures, f"Sigma(p,q,pqn+1) on the {len(GRID)}-point grid")


def test_criterion_04_thm_minus(capsys):
    failures = [(p, q, n) for p, q, n in GRID if thm_minus_module(p, q, n) != pipeline_module((p, q, p * q * n - 1))]
    anchor = pipeline_module((2, 5, 9))
    if anchor != HFPlusModule.from_towers(-2, [(-2, 1), (-2, 1)]):
        failures.append(("anchor Sigma(2,5,9)", anchor.describe()))
    report(capsys, 4, failures, f"Sigma(p,q,pqn-1) on the {len(GRID)}-point grid plus the Sigma(2,5,9) anchor")


def test_criterion_05_table1(capsys):
    failures, exact, offset_checked = [], 0, 0
    for fam in TABULATED_FAMILIES:
        for n in range(1, 5):
            pipeline = pipeline_module(fam.triple(n))
            if fam == Family(2, 7, -5) and n == 1:
                continue  # documented domain edge
            if fam in OFFSET_ROWS:
                r = compare_closed(table1_closed(fam, n), pipeline)
                if not (r["d_equal"] and r["multiplicities_equal"] and r["indexed_offset"] == 2):
                    failures.append((fam.name, n, r["indexed_offset"]))
                if thm_minus_module(fam.p, fam.q, n) != pipeline:
                    failures.append((fam.name, n, "thm_minus"))
                offset_checked += 1
            else:
                exact += 1
                if table1_module(fam, n) != pipeline:
                    failures.append((fam.name, n))
    report(capsys, 5, failures, f"{exact} rows exact, {offset_checked} rows with uniform +2 indexed offset")


def test_criterion_06_extrema_tables(capsys):
    failures, checked = [], 0
    for fam in EXTREMA_FAMILIES:
        for n in range(1, 5):
            r = compare_extrema(lemma57_extrema(fam, n), reduced_tau(brieskorn_seifert(*fam.triple(n))))
            checked += r["checked"]
            failures += [(fam.name, n, m["row"], m["i"], m["predicted"], m["measured"]) for m in r["mismatches"]]
    minima = reduced_tau(brieskorn_seifert(2, 7, 17)).minima
    if minima != [0, -2, -3, -3, -3, -3, -2, 0]:
        failures.append(("Sigma(2,7,17) minima", minima))
    families = sorted({f[0] for f in failures if isinstance(f[1], int)})
    report(capsys, 6, failures, f"{checked} table entries over 6 families x n=1..4; mismatching families: {families}")


TABLE1_D = {-1: -2, 1: 0, -3: 0, 3: -2}, {-1: -4, 1: 0, -3: -2, 3: 0, -5: -2, 5: 0}


def test_criterion_07_d_and_shift(capsys):
    failures = []
    for n in (1, 2, 3):
        S = brieskorn_seifert(2, 7, 14 * n + 3)
        if grading_shift(S) != 6 * n:
            failures.append(("shift", n, grading_shift(S)))
        if pipeline_module((2, 7, 14 * n + 3)).d != 0:
            failures.append(("d 14n+3", n))
    for fam in TABULATED_FAMILIES:
        printed = TABLE1_D[0 if fam.q == 5 else 1][fam.offset]
        for n in range(1, 5):
            if pipeline_module(fam.triple(n)).d != printed:
                failures.append((fam.name, n))
    report(capsys, 7, failures, "shift = 6n for 14n+3 (n=1..3), all 40 tabulated d values")


def test_criterion_08_delta(capsys):
    rows = delta_report([1, 2, 3])
    failures = [(r["family"], r["n"], r["delta2"]) for r in rows if not r["table_agrees"]]
    surfaced = sorted({r["family"] for r in rows if not r["list_agrees"]})
    if surfaced != ["2,5,plus3"]:
        failures.append(("sign conflict not surfaced as expected", surfaced))
    report(capsys, 8, failures, f"{len(rows)} delta_2 values match the published table; sign conflict with the second list surfaced for {surfaced}")


def test_criterion_09_structure(capsys):
    failures = []
    for triple in CORPUS:
        G = star_plumbing(brieskorn_seifert(*triple))
        if not (is_negative_definite(G) and abs(determinant(intersection_matrix(G))) == 1 and len(bad_vertices(G)) <= 1):
            failures.append(("plumbing", triple))
    rng = random.Random(20240601)
    hj = 0
    while hj < 500:
        a = rng.randint(2, 5000)
        b = rng.randint(1, a - 1)
        if math.gcd(a, b) != 1:
            continue
        hj += 1
        if eval_hj(hj_expansion(a, b)) != Fraction(a, b):
            failures.append(("hj", a, b))
    cases = 0
    while cases < 100:
        a = [rng.randint(2, 30) for _ in range(3)]
        if not pairwise_coprime(a):
            continue
        cases += 1
        S = brieskorn_seifert(*a)
        T = S.shifted(rng.randrange(3))
        for j in rng.sample(range(truncation_bound(S) + 1), 25):
            if delta_ceil(S, j) != delta_ceil(T, j):
                failures.append(("representative", tuple(a), j))
    report(capsys, 9, failures, f"{len(CORPUS)} plumbings, {hj} HJ round trips, {cases} representative changes")


def test_criterion_10_conjecture(capsys):
    import csv
    import io

    failures = []
    for p, k in ((5, 3), (7, 3), (7, 5)):
        rows = conjecture_check(p, k, range(1, 5))
        failures += [(p, k, r["n"], r["sign"], r["d"]) for r in rows if not r["agrees"]]
    out, err = io.StringIO(), io.StringIO()
    code = run(["conjecture", "9", "5", "--n", "1..2", "--csv"], stdout=out, stderr=err)
    table = list(csv.reader(io.StringIO(out.getvalue())))
    if code != 0 or len(table) != 5 or any(len(r) != len(table[0]) for r in table):
        failures.append(("csv (9,5)", code, err.getvalue()))
    report(capsys, 10, failures, "(5,3), (7,3), (7,5) agree for n=1..4; (9,5) CSV well formed")

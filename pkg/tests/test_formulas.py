import pytest

from hfplus.errors import DomainEdge, InvalidArgs, NotCoprime
from hfplus.formulas import (
    LISTED_DELTA2,
    EXTREMA_FAMILIES,
    TABLED_MINUS_DELTA2,
    SURGERY_PAIRS,
    TABULATED_FAMILIES,
    Family,
    compare_closed,
    compare_extrema,
    conjecture_check,
    delta_invariant,
    delta_report,
    eq1_module,
    family_report,
    is_prime_power,
    lemma31_extrema,
    lemma57_extrema,
    pipeline_module,
    table1_closed,
    table1_module,
    thm_minus_closed,
    thm_minus_module,
)
from hfplus.gradedroot import HFPlusModule
from hfplus.seifert import brieskorn_seifert
from hfplus.tau import reduced_tau


def test_family_parse_and_names():
    f = Family.parse("2,5,minus1")
    assert f == Family(2, 5, -1) == Family.parse("2,5,-1")
    assert f.name == "2,5,minus1"
    assert f.label() == "-Sigma(2,5,10n-1)"
    assert Family.parse("2,7,plus3").triple(2) == (2, 7, 31)
    for bad in ["2,5", "2,5,minusx", "2,4,plus1", "2,5,plus5", "2,5,plus0"]:
        with pytest.raises(InvalidArgs):
            Family.parse(bad)
    with pytest.raises(InvalidArgs):
        Family(2, 5, 1).triple(0)


def test_family_order_is_numeric():
    names = sorted(TABULATED_FAMILIES)
    assert names[0] == Family(2, 5, -3)
    assert len(TABULATED_FAMILIES) == 10 and len(EXTREMA_FAMILIES) == 6


def test_eq1_small():
    M = eq1_module(2, 3, 1)
    assert M.d == 0
    assert M == pipeline_module((2, 3, 7))


def test_thm_minus_small():
    assert thm_minus_module(2, 3, 1) == HFPlusModule(-2, ())
    assert thm_minus_module(2, 3, 3) == HFPlusModule.from_towers(-2, [(-2, 1)] * 2)
    assert thm_minus_module(2, 5, 1) == HFPlusModule.from_towers(-2, [(-2, 1)] * 2)


@pytest.mark.parametrize("p,q", SURGERY_PAIRS)
def test_surgery_formulas_grid(p, q):
    for n in (1, 2, 3):
        assert eq1_module(p, q, n) == pipeline_module((p, q, p * q * n + 1))
        assert thm_minus_module(p, q, n) == pipeline_module((p, q, p * q * n - 1))


def test_closed_form_argument_errors():
    with pytest.raises(InvalidArgs):
        eq1_module(2, 4, 1)
    with pytest.raises(InvalidArgs):
        thm_minus_module(2, 5, 0)


def test_table1_domain_edge():
    with pytest.raises(DomainEdge):
        table1_module(Family(2, 7, -5), 1)
    assert table1_module(Family(2, 7, -5), 2) == pipeline_module((2, 7, 23))


def test_compare_detects_uniform_offset():
    f = Family(2, 5, -1)
    report = compare_closed(table1_closed(f, 2), pipeline_module(f.triple(2)))
    assert not report["equal"]
    assert report["d_equal"] and report["multiplicities_equal"]
    assert report["indexed_offset"] == 2
    agree = compare_closed(thm_minus_closed(2, 5, 2), pipeline_module((2, 5, 19)))
    assert agree["equal"] and agree["indexed_offset"] == 0


def test_family_report_marks_domain_edge():
    rows = family_report(Family(2, 7, -5), [1, 2])
    edge = [r for r in rows if "domain_edge" in r]
    assert [r["n"] for r in edge] == [1]
    assert all(r["equal"] for r in rows if "domain_edge" not in r)


@pytest.mark.parametrize("p,q,n", [(p, q, n) for p, q in ((2, 3), (2, 5), (3, 4), (2, 7)) for n in (1, 2, 3)])
def test_surgery_extrema_match_measurement(p, q, n):
    report = compare_extrema(lemma31_extrema(p, q, n), reduced_tau(brieskorn_seifert(p, q, p * q * n - 1)))
    assert report["equal"], report["mismatches"][:3]


def test_extrema_suppressed_pieces_at_n1():
    f = Family(2, 7, 3)
    t1, t2 = lemma57_extrema(f, 1), lemma57_extrema(f, 2)
    R1 = reduced_tau(brieskorn_seifert(*f.triple(1)))
    assert t1.n_min == len(R1.minima) == 8
    assert t2.n_min == len(reduced_tau(brieskorn_seifert(*f.triple(2))).minima)


# The transcribed extrema tables disagree with the measured tau in exactly
# these places (README, criterion 6). Any further drift fails here.
EXPECTED_57_MISMATCHES = {
    "2,5,minus3": {("tau_m",)},
    "2,7,plus5": {("M",), ("m",)},
}


@pytest.mark.parametrize("family", EXTREMA_FAMILIES, ids=lambda f: f.name)
def test_extrema_mismatch_set_is_pinned(family):
    for n in (1, 2, 3, 4):
        report = compare_extrema(lemma57_extrema(family, n), reduced_tau(brieskorn_seifert(*family.triple(n))))
        rows = {(m["row"],) for m in report["mismatches"]}
        assert rows == EXPECTED_57_MISMATCHES.get(family.name, set()), (family.name, n, report["mismatches"][:3])


def test_extrema_10n_minus_3_excess():
    f = Family(2, 5, -3)
    for n in (1, 2, 3, 4):
        report = compare_extrema(lemma57_extrema(f, n), reduced_tau(brieskorn_seifert(*f.triple(n))))
        assert report["mismatches"]
        excess = {m["i"]: m["predicted"] - m["measured"] for m in report["mismatches"]}
        assert excess == {i: 1 if i < 2 * n else 2 for i in range(n, 3 * n)}


def test_prime_power():
    assert [k for k in range(1, 30) if is_prime_power(k)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]


def test_delta_invariant_errors():
    with pytest.raises(InvalidArgs):
        delta_invariant(6, (5, 7))
    with pytest.raises(NotCoprime):
        delta_invariant(2, (5, 10))
    assert delta_invariant(2, (3, 5)) == 2 * pipeline_module((2, 3, 5)).d


def test_delta_report_surfaces_sign_conflict():
    rows = delta_report([1, 2])
    assert all(r["table_agrees"] for r in rows)
    assert {r["family"] for r in rows if not r["list_agrees"]} == {"2,5,plus3"}
    assert set(TABLED_MINUS_DELTA2) == set(LISTED_DELTA2) == set(EXTREMA_FAMILIES)


def test_conjecture_rows_and_errors():
    rows = conjecture_check(5, 3, [1, 2])
    assert [(r["n"], r["sign"], r["d"]) for r in rows] == [(1, "-", 0), (1, "+", -2), (2, "-", 0), (2, "+", -2)]
    assert all(r["agrees"] for r in rows)
    for p, k in [(4, 3), (5, 1), (5, 9), (5, 5)]:
        with pytest.raises(InvalidArgs):
            conjecture_check(p, k, [1])

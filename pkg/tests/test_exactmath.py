import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hfplus.errors import EmptyList, InvalidArgs, NotInvertible
from hfplus.exactmath import (
    dedekind_euclid,
    dedekind_naive,
    euclid_remainders,
    eval_hj,
    hj_expansion,
    mod_inverse,
    pairwise_coprime,
    sawtooth,
)


def coprime_pair(max_k=400):
    return st.integers(2, max_k).flatmap(
        lambda k: st.integers(1, k - 1).filter(lambda h: math.gcd(h, k) == 1).map(lambda h: (h, k))
    )


@pytest.mark.parametrize(
    "h,k,expected",
    [(1, 4, Fraction(1, 8)), (4, 5, Fraction(-1, 5)), (8, 9, Fraction(-14, 27)), (6, 17, Fraction(5, 17)),
     (1, 2, Fraction(0)), (1, 3, Fraction(1, 18))],
)
def test_known_dedekind_values(h, k, expected):
    assert dedekind_naive(h, k) == expected
    assert dedekind_euclid(h, k) == expected


def test_s1k_closed_form():
    # s(1, k) = (k-1)(k-2) / (12k)
    for k in range(2, 60):
        assert dedekind_naive(1, k) == Fraction((k - 1) * (k - 2), 12 * k)


@given(coprime_pair())
def test_euclid_matches_naive(pair):
    h, k = pair
    assert dedekind_euclid(h, k) == dedekind_naive(h, k)


@given(coprime_pair(), st.integers(-5, 5))
def test_naive_periodic_and_odd(pair, t):
    h, k = pair
    assert dedekind_naive(h + t * k, k) == dedekind_naive(h, k)
    assert dedekind_naive(-h, k) == -dedekind_naive(h, k)


def test_inverse_symmetry():
    # s(h', k) = s(h, k) when h*h' = 1 mod k
    for k in range(3, 80):
        for h in range(1, k):
            if math.gcd(h, k) == 1:
                assert dedekind_naive(pow(h, -1, k), k) == dedekind_naive(h, k)


def test_remainder_chain_shape():
    assert euclid_remainders(3, 8) == [8, 3, 2, 1]
    assert euclid_remainders(1, 5) == [5, 1]
    with pytest.raises(InvalidArgs):
        euclid_remainders(2, 4)
    with pytest.raises(InvalidArgs):
        euclid_remainders(5, 5)


def test_sawtooth():
    assert sawtooth(3) == 0
    assert sawtooth(Fraction(1, 4)) == Fraction(-1, 4)
    assert sawtooth(Fraction(-1, 4)) == Fraction(1, 4)


def test_mod_inverse():
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(-1, 7) == 6
    with pytest.raises(NotInvertible):
        mod_inverse(4, 8)
    with pytest.raises(InvalidArgs):
        mod_inverse(1, 1)


def test_pairwise_coprime():
    assert pairwise_coprime([2, 3, 5])
    assert not pairwise_coprime([2, 3, 4])
    assert pairwise_coprime([])


@pytest.mark.parametrize("a,b,ks", [(5, 3, [2, 3]), (7, 1, [7]), (9, 8, [2] * 8), (5, 2, [3, 2])])
def test_hj_known(a, b, ks):
    assert hj_expansion(a, b) == ks
    assert eval_hj(ks) == Fraction(a, b)


@given(coprime_pair(1000))
def test_hj_round_trip(pair):
    b, a = pair
    ks = hj_expansion(a, b)
    assert all(k >= 2 for k in ks)
    assert eval_hj(ks) == Fraction(a, b)


def test_hj_errors():
    with pytest.raises(EmptyList):
        eval_hj([])
    with pytest.raises(InvalidArgs):
        eval_hj([1, 3])
    with pytest.raises(InvalidArgs):
        hj_expansion(4, 2)


def test_naive_matches_sawtooth_definition():
    for k in range(1, 40):
        for h in range(-k, 2 * k):
            direct = sum((sawtooth(Fraction(i, k)) * sawtooth(Fraction(h * i, k)) for i in range(1, k)), Fraction(0))
            assert dedekind_naive(h, k) == direct

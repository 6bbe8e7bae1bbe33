"""Exact integer and rational kernels.

``Rational`` is :class:`fractions.Fraction`: always in lowest terms with a
positive denominator, arbitrary precision on both sides.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptyList, InvalidArgs, NotInvertible

Rational = Fraction

__all__ = [
    "Rational",
    "gcd",
    "mod_inverse",
    "sawtooth",
    "dedekind_naive",
    "dedekind_euclid",
    "euclid_remainders",
    "hj_expansion",
    "eval_hj",
    "pairwise_coprime",
]


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def pairwise_coprime(values: Iterable[int]) -> bool:
    vals = list(values)
    return all(
        math.gcd(vals[i], vals[j]) == 1
        for i in range(len(vals))
        for j in range(i + 1, len(vals))
    )


def mod_inverse(a: int, m: int) -> int:
    """Return ``x`` in ``[1, m-1]`` with ``a*x = 1 (mod m)``."""
    if m < 2:
        raise InvalidArgs(f"modulus must be >= 2, got {m}")
    if math.gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m)


def sawtooth(x: Fraction | int) -> Fraction:
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def dedekind_naive(h: int, k: int) -> Fraction:
    """Dedekind sum s(h, k) by its defining sum over i = 1..k-1.

    ``h`` is reduced modulo ``k`` first, so any integer is accepted.
    """
    if k < 1:
        raise InvalidArgs(f"k must be >= 1, got {k}")
    h %= k
    # ((i/k)) = (2i - k) / 2k for 0 < i < k; accumulate numerators over 4k^2
    total = 0
    for i in range(1, k):
        r = h * i % k
        if r:
            total += (2 * i - k) * (2 * r - k)
    return Fraction(total, 4 * k * k)


def euclid_remainders(h: int, k: int) -> list[int]:
    """Remainder chain ``[k, h, ..., 1]`` of the Euclidean algorithm."""
    if not 0 < h < k or math.gcd(h, k) != 1:
        raise InvalidArgs(f"need 0 < h < k with gcd 1, got h={h}, k={k}")
    chain = [k, h]
    while chain[-1] != 1:
        chain.append(chain[-2] % chain[-1])
    return chain


def dedekind_euclid(h: int, k: int) -> Fraction:
    """Dedekind sum via the alternating sum over the Euclidean remainder chain."""
    r = euclid_remainders(h, k)
    n = len(r) - 2  # chain is r_0 .. r_{n+1}
    acc = Fraction(0)
    for j in range(1, n + 2):
        term = Fraction(1 + r[j] ** 2 + r[j - 1] ** 2, r[j] * r[j - 1])
        acc += term if j % 2 == 1 else -term
    return acc / 12 - Fraction(1 + (-1) ** n, 8)


def hj_expansion(a: int, b: int) -> list[int]:
    """Negative (Hirzebruch-Jung) continued fraction of a/b, all entries >= 2."""
    if not (a > b >= 1) or math.gcd(a, b) != 1:
        raise InvalidArgs(f"need a > b >= 1 coprime, got a={a}, b={b}")
    ks = []
    while b:
        k = -(-a // b)
        ks.append(k)
        a, b = b, k * b - a
    return ks


def eval_hj(ks: Sequence[int]) -> Fraction:
    if not ks:
        raise EmptyList("continued fraction needs at least one entry")
    if any(k < 2 for k in ks):
        raise InvalidArgs(f"entries must be >= 2, got {list(ks)}")
    value = Fraction(ks[-1])
    for k in reversed(ks[:-1]):
        value = k - 1 / value
    return value

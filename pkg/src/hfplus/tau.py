"""The tau function of a Seifert homology sphere and its reduced extrema.

Two closed forms for the increments are provided: the ceiling form used by
the kernels and the sawtooth form used as an independent check.

Truncation: by the sawtooth form, Delta_j > 1 - m + j/A (A = a_1...a_m),
so for j >= (m-1)*A every increment is a positive integer and tau is
strictly increasing from there on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _kernels
from .errors import InternalInconsistency, MalformedSequence
from .exactmath import sawtooth
from .seifert import SeifertInvariants


@dataclass(frozen=True)
class TauFunction:
    seifert: SeifertInvariants
    values: tuple[int, ...]
    bound: int

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def minimum(self) -> int:
        return min(self.values)


@dataclass(frozen=True)
class ReducedTau:
    """Alternating extrema m_0, M_0, m_1, ..., m_t.

    ``indices`` holds the first index of each (possibly flat) extremum and
    ``ends`` the last index of the same plateau.
    """

    values: tuple[int, ...]
    indices: tuple[int, ...] = ()
    ends: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.indices:
            object.__setattr__(self, "indices", tuple(range(len(self.values))))
        if not self.ends:
            object.__setattr__(self, "ends", self.indices)
        check_alternating(self.values)

    @property
    def minima(self) -> list[int]:
        return list(self.values[0::2])

    @property
    def maxima(self) -> list[int]:
        return list(self.values[1::2])

    @property
    def minima_plateaus(self) -> list[tuple[int, int]]:
        return list(zip(self.indices[0::2], self.ends[0::2]))

    @property
    def maxima_plateaus(self) -> list[tuple[int, int]]:
        return list(zip(self.indices[1::2], self.ends[1::2]))


def check_alternating(values: Sequence[int]) -> None:
    if len(values) % 2 == 0:
        raise MalformedSequence(f"need an odd number of extrema, got {len(values)}")
    for k in range(1, len(values), 2):
        if not (values[k] > values[k - 1] and values[k] > values[k + 1]):
            raise MalformedSequence(f"entry {k} ({values[k]}) is not a strict local maximum")


def epsilon_count(arms: Sequence[tuple[int, int]], j: int) -> int:
    """Number of arms whose multiplicity divides ``j``."""
    return sum(1 for a, _ in arms if j % a == 0)


def delta_ceil(S: SeifertInvariants, j: int) -> int:
    return 1 - j * S.e0 - sum(-((-j * b) // a) for a, b in S.arms)


def delta_sawtooth(S: SeifertInvariants, j: int) -> int:
    value = (
        1
        - Fraction(S.m, 2)
        + Fraction(j, S.product)
        + Fraction(epsilon_count(S.arms, j), 2)
        + sum((sawtooth(Fraction(j * b, a)) for a, b in S.arms), Fraction(0))
    )
    if value.denominator != 1:
        raise InternalInconsistency(f"Delta_{j} evaluated to non-integer {value} for {S.label()}")
    return int(value)


def truncation_bound(S: SeifertInvariants) -> int:
    return (S.m - 1) * S.product


def tau_sequence(S: SeifertInvariants, margin: int = 0) -> TauFunction:
    """tau(0..B+margin). With a positive margin the tail past B is re-checked."""
    base = truncation_bound(S)
    bound = base + margin
    a = [x for x, _ in S.arms]
    b = [y for _, y in S.arms]
    values = _kernels.tau_values(S.e0, a, b, bound)
    for j in range(base, bound):
        if values[j + 1] - values[j] < 1:
            raise InternalInconsistency(f"Delta_{j} < 1 beyond the truncation bound for {S.label()}")
    return TauFunction(S, tuple(values), bound)


def reduce(T: TauFunction) -> ReducedTau:
    vals, starts, ends = _kernels.extrema(T.values)
    return ReducedTau(tuple(vals), tuple(starts), tuple(ends))


def reduced_tau(S: SeifertInvariants, margin: int = 0) -> ReducedTau:
    return reduce(tau_sequence(S, margin))

"""Two-generator numerical semigroups S_{p,q} of torus knots."""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field

from .errors import InvalidArgs


@dataclass(frozen=True)
class TorusKnotSemigroup:
    p: int
    q: int
    _gaps: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.p < 2 or self.q < 2 or math.gcd(self.p, self.q) != 1:
            raise InvalidArgs(f"need coprime p, q >= 2, got ({self.p}, {self.q})")
        frob = self.p * self.q - self.p - self.q
        table = [_member_below_pq(self.p, self.q, s) for s in range(frob + 1)]
        object.__setattr__(self, "_gaps", tuple(s for s, inside in enumerate(table) if not inside))

    @property
    def frobenius(self) -> int:
        return self.p * self.q - self.p - self.q

    def contains(self, s: int) -> bool:
        if s < 0:
            raise InvalidArgs(f"s must be >= 0, got {s}")
        if s > self.frobenius:
            return True
        return _member_below_pq(self.p, self.q, s)

    def __contains__(self, s: int) -> bool:
        return self.contains(s)

    def gaps(self) -> list[int]:
        return list(self._gaps)

    def genus(self) -> int:
        return (self.p - 1) * (self.q - 1) // 2

    def alpha(self, i: int) -> int:
        """Number of gaps strictly greater than ``i``."""
        if i < 0:
            raise InvalidArgs(f"i must be >= 0, got {i}")
        return len(self._gaps) - bisect_right(self._gaps, i)

    def count_in(self, upto: int) -> int:
        """#{s in S : s <= upto}."""
        if upto < 0:
            return 0
        return upto + 1 - (len(self._gaps) - self.alpha(upto))


def _member_below_pq(p: int, q: int, s: int) -> bool:
    # For 0 <= s < pq: s is in S iff s = a*p + b*q with 0 <= a < q; b is then forced.
    a = (s * pow(p, -1, q)) % q
    return a * p <= s


def contains(S: TorusKnotSemigroup, s: int) -> bool:
    return S.contains(s)


def gaps(S: TorusKnotSemigroup) -> list[int]:
    return S.gaps()


def genus(S: TorusKnotSemigroup) -> int:
    return S.genus()


def alpha(S: TorusKnotSemigroup, i: int) -> int:
    return S.alpha(i)

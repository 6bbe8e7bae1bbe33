"""Seifert invariants of integer homology spheres."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidArgs, MalformedInput, NotCoprime
from .exactmath import mod_inverse, pairwise_coprime


@dataclass(frozen=True)
class SeifertInvariants:
    """``e0`` together with the exceptional-fibre pairs ``(a_i, b_i)``."""

    e0: int
    arms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arms", tuple((int(a), int(b)) for a, b in self.arms))

    @property
    def m(self) -> int:
        return len(self.arms)

    @property
    def multipliers(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.arms)

    @property
    def product(self) -> int:
        return math.prod(self.multipliers)

    def check_structure(self) -> None:
        if not self.arms:
            raise MalformedInput("at least one arm is required")
        for a, b in self.arms:
            if a < 2:
                raise MalformedInput(f"arm multiplicity must be >= 2, got {a}")
            if not 0 < b < a:
                raise MalformedInput(f"arm ({a},{b}) needs 0 < b < a")

    def shifted(self, arm: int) -> "SeifertInvariants":
        """Equivalent presentation with b_arm -> b_arm + a_arm and e0 -> e0 - 1.

        The result is deliberately non-normalized and skips ``check_structure``.
        """
        arms = list(self.arms)
        a, b = arms[arm]
        arms[arm] = (a, b + a)
        return SeifertInvariants(self.e0 - 1, tuple(arms))

    def label(self) -> str:
        arms = ",".join(f"{a}/{b}" for a, b in self.arms)
        return f"e0={self.e0} arms={arms}"


def homology_sphere_identity(S: SeifertInvariants) -> int:
    """Right-hand side of ``-1 = e0*A + sum b_i*A/a_i``; equals -1 for a homology sphere."""
    A = S.product
    return S.e0 * A + sum(b * (A // a) for a, b in S.arms)


def validate(S: SeifertInvariants) -> bool:
    S.check_structure()
    return homology_sphere_identity(S) == -1 and orbifold_e(S) < 0


def orbifold_e(S: SeifertInvariants) -> Fraction:
    return S.e0 + sum((Fraction(b, a) for a, b in S.arms), Fraction(0))


def orbifold_epsilon(S: SeifertInvariants) -> Fraction:
    e = orbifold_e(S)
    if e == 0:
        raise InvalidArgs("orbifold Euler number vanishes")
    return (2 - S.m + sum((Fraction(1, a) for a in S.multipliers), Fraction(0))) / e


def brieskorn_seifert(*a: int) -> SeifertInvariants:
    """Normalized Seifert data of Sigma(a1, ..., am), m >= 3."""
    if len(a) < 3:
        raise InvalidArgs(f"need at least three multiplicities, got {a}")
    if any(x < 2 for x in a):
        raise InvalidArgs(f"multiplicities must be >= 2, got {a}")
    if not pairwise_coprime(a):
        raise NotCoprime(f"multiplicities {a} are not pairwise coprime")
    A = math.prod(a)
    arms = []
    for ai in a:
        bi = (-mod_inverse((A // ai) % ai, ai)) % ai
        arms.append((ai, bi))
    e0, rem = divmod(-1 - sum(b * (A // ai) for ai, b in arms), A)
    assert rem == 0
    return SeifertInvariants(e0, tuple(arms))


def surgery_target(p: int, q: int, n: int, sign: int) -> tuple[int, int, int]:
    """Brieskorn triple of the manifold obtained by ``sign``/n surgery on T_{p,q}.

    +1/n surgery gives -Sigma(p, q, pqn - 1); -1/n surgery gives Sigma(p, q, pqn + 1).
    """
    if p < 2 or q < 2 or math.gcd(p, q) != 1:
        raise InvalidArgs(f"need coprime p, q >= 2, got ({p}, {q})")
    if n < 1:
        raise InvalidArgs(f"n must be >= 1, got {n}")
    if sign not in (1, -1):
        raise InvalidArgs(f"sign must be +1 or -1, got {sign}")
    return (p, q, p * q * n - sign)


_ARM_RE = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")


def parse_seifert(text: str | Sequence[str]) -> SeifertInvariants:
    """Parse ``e0=-2 arms=2/1,5/3,9/8``."""
    tokens = text.split() if isinstance(text, str) else list(text)
    fields: dict[str, str] = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or key not in ("e0", "arms") or key in fields:
            raise MalformedInput(f"unexpected token {tok!r}; expected e0=<int> arms=a/b,...")
        fields[key] = value
    if set(fields) != {"e0", "arms"}:
        raise MalformedInput("need both e0=<int> and arms=a/b,...")
    try:
        e0 = int(fields["e0"])
    except ValueError:
        raise MalformedInput(f"e0 must be an integer, got {fields['e0']!r}") from None
    arms = []
    for part in fields["arms"].split(","):
        m = _ARM_RE.match(part)
        if not m:
            raise MalformedInput(f"bad arm {part!r}; expected a/b")
        arms.append((int(m.group(1)), int(m.group(2))))
    S = SeifertInvariants(e0, tuple(arms))
    S.check_structure()
    return S


def parse_ints(tokens: Iterable[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None

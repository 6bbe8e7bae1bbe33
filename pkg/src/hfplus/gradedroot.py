"""Graded roots and the HF+ module they determine.

All reported modules are HF+(-Sigma) where Sigma is the Seifert manifold
bounding the negative-definite plumbing.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import MalformedSequence, NonIntegralShift
from .exactmath import dedekind_naive
from .seifert import SeifertInvariants, orbifold_e, orbifold_epsilon
from .tau import ReducedTau, check_alternating, reduced_tau


@dataclass(frozen=True)
class Pairing:
    leaf: int  # position among the minima
    value: int
    merge: int
    parent: int  # leaf whose branch absorbs this one


@dataclass(frozen=True)
class GradedRoot:
    leaves: tuple[tuple[int, int], ...]  # (value, first attaining index)
    pairs: tuple[Pairing, ...]
    trunk: int

    @property
    def trunk_value(self) -> int:
        return self.leaves[self.trunk][0]

    @property
    def merge_values(self) -> list[int]:
        return sorted({p.merge for p in self.pairs})

    def pair_multiset(self) -> Counter:
        return Counter((p.value, p.merge) for p in self.pairs)


def build_root(R: ReducedTau | Iterable[int]) -> GradedRoot:
    """Merge tree of an alternating min/max sequence via a monotone stack.

    Each maximum is a barrier between neighbouring valleys. Valleys merge in
    order of barrier height; at a merge the branch with the higher minimum
    dies (ties: the right one), so the leftmost global minimum is the trunk.
    """
    if isinstance(R, ReducedTau):
        values, indices = list(R.values), list(R.indices)
    else:
        values = list(R)
        indices = list(range(len(values)))
        check_alternating(values)
    if not values:
        raise MalformedSequence("empty extrema sequence")
    minima = values[0::2]
    leaves = tuple(zip(minima, indices[0::2]))
    pairs: list[Pairing] = []

    def merge(left: list[int], right: list[int], level: int) -> list[int]:
        # entries are [leaf, barrier-to-right]; the survivor keeps right's barrier
        lv, rv = minima[left[0]], minima[right[0]]
        if rv >= lv:
            pairs.append(Pairing(right[0], rv, level, left[0]))
            return [left[0], right[1]]
        pairs.append(Pairing(left[0], lv, level, right[0]))
        return [right[0], right[1]]

    stack: list[list[int]] = [[0, 0]]
    for k in range(1, len(minima)):
        barrier = values[2 * k - 1]
        while len(stack) >= 2 and stack[-2][1] <= barrier:
            right = stack.pop()
            left = stack.pop()
            stack.append(merge(left, right, left[1]))
        stack[-1][1] = barrier
        stack.append([k, 0])
    while len(stack) >= 2:
        right = stack.pop()
        left = stack.pop()
        stack.append(merge(left, right, left[1]))
    pairs.sort(key=lambda p: p.leaf)
    return GradedRoot(leaves, tuple(pairs), stack[0][0])


@dataclass(frozen=True)
class HFPlusModule:
    """d-invariant plus finite towers T+_bottom(length) with multiplicities.

    ``towers`` is a sorted tuple of (bottom, length, mult) with mult > 0.
    The odd part is always zero for the manifolds handled here.
    """

    d: int
    towers: tuple[tuple[int, int, int], ...] = ()
    odd_rank: int = 0
    manifold: str = field(default="", compare=False)

    @classmethod
    def from_towers(cls, d: int, towers: Iterable[tuple[int, int]], manifold: str = "") -> "HFPlusModule":
        counts = Counter((int(b), int(l)) for b, l in towers)
        return cls(d, normalize_counts(counts), 0, manifold)

    @classmethod
    def from_counts(cls, d: int, counts: Counter, manifold: str = "") -> "HFPlusModule":
        return cls(d, normalize_counts(counts), 0, manifold)

    def counts(self) -> Counter:
        return Counter({(b, l): m for b, l, m in self.towers})

    def rank(self) -> int:
        return sum(l * m for _, l, m in self.towers)

    def to_dict(self) -> dict:
        out: dict = {}
        if self.manifold:
            out["manifold"] = self.manifold
        out["d"] = self.d
        out["towers"] = [{"bottom": b, "length": l, "mult": m} for b, l, m in self.towers]
        out["odd_rank"] = self.odd_rank
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "HFPlusModule":
        counts: Counter = Counter()
        for t in data.get("towers", []):
            counts[(int(t["bottom"]), int(t["length"]))] += int(t.get("mult", 1))
        module = cls(int(data["d"]), normalize_counts(counts), int(data.get("odd_rank", 0)), data.get("manifold", ""))
        return module

    def describe(self) -> str:
        parts = [f"T+_{b}({l})" + (f"^{m}" if m > 1 else "") for b, l, m in self.towers]
        return " + ".join(parts) if parts else "0"


def normalize_counts(counts: Counter) -> tuple[tuple[int, int, int], ...]:
    return tuple(sorted((b, l, m) for (b, l), m in counts.items() if m > 0))


def grading_shift(S: SeifertInvariants) -> int:
    """Grading offset between 2*tau and the absolute grading of HF+(-Sigma)."""
    e = orbifold_e(S)
    eps = orbifold_epsilon(S)
    s = sum((dedekind_naive(b, a) for a, b in S.arms), Fraction(0))
    shift = -(eps * eps * e + e + 5 - 12 * s) / 4
    if shift.denominator != 1 or shift.numerator % 2:
        raise NonIntegralShift(f"grading shift {shift} is not an even integer for {S.label()}")
    return int(shift)


def assemble_hf(root: GradedRoot, shift: int, manifold: str = "") -> HFPlusModule:
    towers = [(2 * p.value + shift, p.merge - p.value) for p in root.pairs]
    return HFPlusModule.from_towers(2 * root.trunk_value + shift, towers, manifold)


def d_invariant_direct(S: SeifertInvariants) -> int:
    """d(-Sigma) from the minimum of tau and the grading shift, no graded root."""
    from .tau import tau_sequence

    return 2 * tau_sequence(S).minimum() + grading_shift(S)


def manifold_name(S: SeifertInvariants, triple: tuple[int, ...] | None = None) -> str:
    if triple:
        return "-Sigma(" + ",".join(map(str, triple)) + ")"
    return f"-Sigma[{S.label()}]"


def hf_plus(S: SeifertInvariants, triple: tuple[int, ...] | None = None, margin: int = 0) -> HFPlusModule:
    """Full pipeline: tau, reduction, graded root, grading shift."""
    root = build_root(reduced_tau(S, margin))
    return assemble_hf(root, grading_shift(S), manifold_name(S, triple))


def render_ascii(root: GradedRoot, shift: int = 0) -> str:
    """Text drawing of the root: one column per branch, one row per tau level.

    Row labels are absolute gradings 2*level + shift; ``|`` marks a live
    branch, ``+`` the vertex where a branch joins its parent, ``^`` the trunk
    continuing upward.
    """
    merges = {p.leaf: p for p in root.pairs}
    order = [root.trunk] + sorted(merges, key=lambda k: (merges[k].merge, k))
    top = max([p.merge for p in root.pairs] + [root.trunk_value])
    bottom = min(v for v, _ in root.leaves)
    width = len(f"{2 * top + shift}")
    lines = []
    for level in range(top, bottom - 1, -1):
        cells = []
        for leaf in order:
            value = root.leaves[leaf][0]
            if leaf == root.trunk:
                cell = "^" if level == top else ("|" if level > value else "o")
            else:
                merge = merges[leaf].merge
                if level == merge:
                    cell = "+"
                elif value < level < merge:
                    cell = "|"
                elif level == value:
                    cell = "o"
                else:
                    cell = " "
            cells.append(cell)
        lines.append(f"{2 * level + shift:>{width}} " + " ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def root_to_dot(root: GradedRoot, shift: int = 0, name: str = "graded_root") -> str:
    """DOT graph with one node per (branch, level) vertex of the finite part."""
    merges = {p.leaf: p for p in root.pairs}
    top = max([p.merge for p in root.pairs] + [root.trunk_value])
    lines = [f"graph {name} {{"]
    owner: dict[tuple[int, int], str] = {}

    def node(leaf: int, level: int) -> str:
        return f"b{leaf}_{level - min(v for v, _ in root.leaves)}"

    trunk_value = root.trunk_value
    for level in range(trunk_value, top + 1):
        nid = node(root.trunk, level)
        owner[(root.trunk, level)] = nid
        lines.append(f'  {nid} [label="{2 * level + shift}"];')
        if level > trunk_value:
            lines.append(f"  {node(root.trunk, level - 1)} -- {nid};")
    for leaf in sorted(merges, key=lambda k: (merges[k].merge, k), reverse=True):
        p = merges[leaf]
        for level in range(p.value, p.merge):
            nid = node(leaf, level)
            owner[(leaf, level)] = nid
            lines.append(f'  {nid} [label="{2 * level + shift}"];')
            if level > p.value:
                lines.append(f"  {node(leaf, level - 1)} -- {nid};")
    for leaf, p in merges.items():
        parent = _resolve_owner(merges, root.trunk, p.parent, p.merge)
        lines.append(f"  {node(leaf, p.merge - 1)} -- {node(parent, p.merge)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _resolve_owner(merges: dict[int, Pairing], trunk: int, leaf: int, level: int) -> int:
    # follow parents until the branch still exists at ``level``
    while leaf != trunk and merges[leaf].merge <= level:
        leaf = merges[leaf].parent
    return leaf

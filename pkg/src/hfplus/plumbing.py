"""Star-shaped plumbing graphs built from Seifert invariants.

The graph is informational: the tau pipeline reads Seifert data directly.
Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmath import hj_expansion
from .seifert import SeifertInvariants

Matrix = list[list[int]]


@dataclass(frozen=True)
class PlumbingGraph:
    vertices: tuple[tuple[int, int], ...]  # (id, weight)
    edges: tuple[tuple[int, int], ...]
    center: int

    @property
    def weights(self) -> dict[int, int]:
        return dict(self.vertices)

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def neighbours(self, v: int) -> list[int]:
        return [b if a == v else a for a, b in self.edges if v in (a, b)]

    def arms(self) -> list[list[int]]:
        """Weights along each arm, ordered outward from the center."""
        out = []
        for start in self.neighbours(self.center):
            chain, prev, cur = [], self.center, start
            while True:
                chain.append(self.weights[cur])
                nxt = [w for w in self.neighbours(cur) if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
            out.append(chain)
        return out

    def is_star(self) -> bool:
        ids = [v for v, _ in self.vertices]
        if len(self.edges) != len(ids) - 1 or len(set(ids)) != len(ids):
            return False
        if any(self.degree(v) > 2 for v in ids if v != self.center):
            return False
        return sum(len(arm) for arm in self.arms()) == len(ids) - 1


def star_plumbing(S: SeifertInvariants) -> PlumbingGraph:
    vertices = [(0, S.e0)]
    edges = []
    next_id = 1
    for a, b in S.arms:
        prev = 0
        for k in hj_expansion(a, b):
            vertices.append((next_id, -k))
            edges.append((prev, next_id))
            prev = next_id
            next_id += 1
    return PlumbingGraph(tuple(vertices), tuple(edges), 0)


def intersection_matrix(G: PlumbingGraph) -> Matrix:
    index = {v: i for i, (v, _) in enumerate(G.vertices)}
    M = [[0] * len(index) for _ in index]
    for v, w in G.vertices:
        M[index[v]][index[v]] = w
    for u, v in G.edges:
        M[index[u]][index[v]] = M[index[v]][index[u]] = 1
    return M


def leading_minors(M: Matrix) -> list[int]:
    """Leading principal minors via Bareiss elimination without pivoting.

    Stops early (returning a shorter list ending in 0) at the first vanishing minor.
    """
    n = len(M)
    A = [row[:] for row in M]
    minors = []
    prev = 1
    for k in range(n):
        pivot = A[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * pivot - A[i][k] * A[k][j]) // prev
        prev = pivot
    return minors


def determinant(M: Matrix) -> int:
    """Fraction-free (Bareiss) determinant with row pivoting."""
    n = len(M)
    if n == 0:
        return 1
    A = [row[:] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def is_negative_definite(G: PlumbingGraph) -> bool:
    minors = leading_minors(intersection_matrix(G))
    if len(minors) < len(G.vertices):
        return False
    return all((-1) ** (k + 1) * d > 0 for k, d in enumerate(minors))


def bad_vertices(G: PlumbingGraph) -> list[int]:
    return [v for v, w in G.vertices if G.degree(v) > abs(w)]


def is_almost_rational(G: PlumbingGraph) -> bool:
    return len(bad_vertices(G)) <= 1


def to_dot(G: PlumbingGraph, name: str = "plumbing") -> str:
    lines = [f"graph {_dot_id(name)} {{"]
    for v, w in G.vertices:
        shape = "doublecircle" if v == G.center else "circle"
        lines.append(f'  v{v} [label="{w}", shape={shape}];')
    for u, v in G.edges:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def adjacency_text(G: PlumbingGraph) -> str:
    lines = []
    for v, w in G.vertices:
        tag = " (center)" if v == G.center else ""
        nbrs = " ".join(str(u) for u in sorted(G.neighbours(v)))
        lines.append(f"{v} [{w}]{tag}: {nbrs}".rstrip())
    return "\n".join(lines) + "\n"


def _dot_id(name: str) -> str:
    cleaned = "".join(c if c.isalnum() else "_" for c in name)
    return cleaned if cleaned and not cleaned[0].isdigit() else f"g_{cleaned}"

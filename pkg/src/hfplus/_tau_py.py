"""Pure-Python tau kernels; the reference the compiled kernels must match."""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def tau_values(e0: int, a: Sequence[int], b: Sequence[int], bound: int) -> list[int]:
    """tau(0..bound) as prefix sums of 1 - j*e0 - sum ceil(j*b_i/a_i)."""
    arms = list(zip(a, b))
    values = [0] * (bound + 1)
    t = 0
    for j in range(bound):
        d = 1 - j * e0
        for ai, bi in arms:
            d += (-j * bi) // ai
        t += d
        values[j + 1] = t
    return values


def extrema(values: Sequence[int]) -> tuple[list[int], list[int], list[int]]:
    """Alternating local extrema of ``values`` with +inf beyond both ends.

    Plateaus collapse to one entry; returns (values, first index, last index).
    """
    runs: list[list[int]] = []
    for i, v in enumerate(values):
        if runs and runs[-1][0] == v:
            runs[-1][2] = i
        else:
            runs.append([v, i, i])
    vals: list[int] = []
    starts: list[int] = []
    ends: list[int] = []
    last = len(runs) - 1
    for k, (v, s, e) in enumerate(runs):
        left_up = k == 0 or runs[k - 1][0] > v
        right_up = k == last or runs[k + 1][0] > v
        left_down = k > 0 and runs[k - 1][0] < v
        right_down = k < last and runs[k + 1][0] < v
        if (left_up and right_up) or (left_down and right_down):
            vals.append(v)
            starts.append(s)
            ends.append(e)
    return vals, starts, ends

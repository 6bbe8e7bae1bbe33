"""Compare the compiled and pure-Python tau kernels.

    python benchmarks/bench_tau.py [--repeat 5] [--json]

Times tau_values and extrema for a fixed set of Brieskorn spheres on both
backends, checks the outputs are identical, and prints per-case timings.
"""

from __future__ import annotations

import argparse
import json
import sys
import timeit

from hfplus import _kernels, _tau_py
from hfplus.seifert import brieskorn_seifert
from hfplus.tau import truncation_bound

CASES = [(2, 7, 61), (3, 5, 46), (2, 13, 105), (5, 7, 106), (7, 11, 79), (2, 3, 5, 7, 11, 13)]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)
    compiled = _kernels.compiled_backend
    if compiled is None:
        print("compiled kernel not available; build with `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    rows = []
    for triple in CASES:
        S = brieskorn_seifert(*triple)
        call = (S.e0, [a for a, _ in S.arms], [b for _, b in S.arms], truncation_bound(S))
        values = _tau_py.tau_values(*call)
        if compiled.tau_values(*call) != values or compiled.extrema(values) != _tau_py.extrema(values):
            print(f"backend mismatch on {triple}", file=sys.stderr)
            return 1
        row = {"manifold": "Sigma(" + ",".join(map(str, triple)) + ")", "length": len(values)}
        for name, mod in (("python", _tau_py), ("cython", compiled)):
            t_tau = min(timeit.repeat(lambda: mod.tau_values(*call), number=1, repeat=args.repeat))
            t_ext = min(timeit.repeat(lambda: mod.extrema(values), number=1, repeat=args.repeat))
            row[name] = {"tau_ms": round(t_tau * 1e3, 3), "extrema_ms": round(t_ext * 1e3, 3)}
        row["speedup"] = round((row["python"]["tau_ms"] + row["python"]["extrema_ms"])
                               / max(row["cython"]["tau_ms"] + row["cython"]["extrema_ms"], 1e-9), 1)
        rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    print(f"{'manifold':<24}{'length':>9}{'python ms':>12}{'cython ms':>12}{'speedup':>9}")
    for r in rows:
        py = r["python"]["tau_ms"] + r["python"]["extrema_ms"]
        cy = r["cython"]["tau_ms"] + r["cython"]["extrema_ms"]
        print(f"{r['manifold']:<24}{r['length']:>9}{py:>12.2f}{cy:>12.2f}{r['speedup']:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""``hf`` command line.

Exit status: 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence

from . import _kernels
from .errors import HFError, MalformedInput
from .formulas import (
    Family,
    conjecture_check,
    delta_invariant,
    delta_report,
    family_report,
    pipeline_module,
)
from .gradedroot import (
    HFPlusModule,
    assemble_hf,
    build_root,
    grading_shift,
    manifold_name,
    render_ascii,
    root_to_dot,
)
from .plumbing import adjacency_text, bad_vertices, determinant, intersection_matrix, is_negative_definite, star_plumbing, to_dot
from .seifert import (
    SeifertInvariants,
    brieskorn_seifert,
    orbifold_e,
    orbifold_epsilon,
    parse_ints,
    parse_seifert,
    surgery_target,
    validate,
)
from .tau import reduce, tau_sequence, truncation_bound

FORMATS = ("text", "json", "csv", "dot", "ascii-root")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument helpers


def parse_range(text: str) -> list[int]:
    """``1..4``, ``2``, or ``1,3,5``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            out = list(range(int(lo), int(hi) + 1))
        else:
            out = [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use 1..4 or 1,2,3") from None
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError(f"range {text!r} must be non-empty and start at >= 1")
    return out


def parse_manifold(tokens: Sequence[str]) -> tuple[SeifertInvariants, tuple[int, ...] | None, str]:
    """Manifold from ``brieskorn a b c``, ``surgery p q n +|-`` or ``e0=.. arms=..``."""
    if not tokens:
        raise UsageError("missing manifold: use 'brieskorn a b c', 'surgery p q n +|-' or 'e0=E arms=a/b,...'")
    head, rest = tokens[0], list(tokens[1:])
    if head == "brieskorn":
        triple = tuple(parse_ints(rest))
        if len(triple) < 3:
            raise UsageError("brieskorn needs at least three integers")
        return brieskorn_seifert(*triple), triple, manifold_name(None, triple)  # type: ignore[arg-type]
    if head == "surgery":
        if len(rest) != 4:
            raise UsageError("surgery needs p q n and a sign (+ or -)")
        p, q, n = parse_ints(rest[:3])
        sign = {"+": 1, "+1": 1, "plus": 1, "-": -1, "-1": -1, "minus": -1}.get(rest[3])
        if sign is None:
            raise UsageError(f"surgery sign must be + or -, got {rest[3]!r}")
        triple = surgery_target(p, q, n, sign)
        return brieskorn_seifert(*triple), triple, manifold_name(None, triple)
    if head.startswith("e0=") or head.startswith("arms="):
        S = parse_seifert(tokens)
        if not validate(S):
            raise MalformedInput(f"{S.label()} is not an integer homology sphere with e < 0")
        return S, None, manifold_name(S)
    raise UsageError(f"unknown manifold kind {head!r}")


def _fmt(args: argparse.Namespace, default: str = "text") -> str:
    return args.format or default


def _emit_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _frac(x: Fraction) -> str:
    return str(x)


def _require(args: argparse.Namespace, allowed: Sequence[str]) -> str:
    fmt = _fmt(args)
    if fmt not in allowed:
        raise UsageError(f"--{fmt} is not supported by '{args.command}' (allowed: {', '.join(allowed)})")
    return fmt


# ---------------------------------------------------------------------------
# subcommands


def cmd_seifert_info(args: argparse.Namespace) -> str:
    if args.command == "brieskorn":
        tokens = ["brieskorn", *args.values]
    elif args.command == "surgery":
        tokens = ["surgery", *args.values]
    else:
        tokens = list(args.values)
    S, triple, name = parse_manifold(tokens)
    fmt = _require(args, ("text", "json"))
    info = {
        "manifold": name,
        "e0": S.e0,
        "arms": [[a, b] for a, b in S.arms],
        "e": _frac(orbifold_e(S)),
        "epsilon": _frac(orbifold_epsilon(S)),
        "homology_sphere": validate(S),
        "truncation_bound": truncation_bound(S),
    }
    if triple:
        info["triple"] = list(triple)
    if fmt == "json":
        return _emit_json(info)
    lines = [f"{name}", f"  seifert: {S.label()}", f"  e = {info['e']}", f"  epsilon = {info['epsilon']}",
             f"  homology sphere: {'yes' if info['homology_sphere'] else 'no'}",
             f"  truncation bound: {info['truncation_bound']}"]
    return "\n".join(lines) + "\n"


def cmd_tau(args: argparse.Namespace) -> str:
    S, _, name = parse_manifold(args.manifold)
    fmt = _require(args, ("text", "json", "csv"))
    T = tau_sequence(S, args.bound_margin)
    R = reduce(T)
    if args.extrema:
        mins, maxs = R.minima, R.maxima
        rows = []
        for i in range(len(mins)):
            M = [R.maxima_plateaus[i][0], maxs[i]] if i < len(maxs) else ["", ""]
            rows.append([i, M[0], R.minima_plateaus[i][0], M[1], mins[i]])
        header = ["i", "M_i", "m_i", "tau(M_i)", "tau(m_i)"]
        if fmt == "csv":
            return _emit_csv(header, rows)
        if fmt == "json":
            return _emit_json({"manifold": name, "reduced": list(R.values), "indices": list(R.indices),
                               "plateau_ends": list(R.ends)})
        width = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
        out = [f"{name}  reduced tau: {list(R.values)}"]
        out.append("  ".join(h.rjust(w) for h, w in zip(header, width)))
        for r in rows:
            out.append("  ".join(str(x).rjust(w) for x, w in zip(r, width)).rstrip())
        return "\n".join(out) + "\n"
    if fmt == "csv":
        return _emit_csv(["k", "tau"], list(enumerate(T.values)))
    if fmt == "json":
        return _emit_json({"manifold": name, "bound": T.bound, "values": list(T.values)})
    return f"{name}  bound={T.bound}  min={T.minimum()}\n" + " ".join(map(str, T.values)) + "\n"


def cmd_root(args: argparse.Namespace) -> str:
    S, _, name = parse_manifold(args.manifold)
    fmt = _require(args, ("text", "json", "dot", "ascii-root"))
    R = reduce(tau_sequence(S, args.bound_margin))
    root = build_root(R)
    shift = grading_shift(S)
    if fmt == "dot":
        return root_to_dot(root, shift)
    if fmt == "json":
        return _emit_json({
            "manifold": name,
            "shift": shift,
            "trunk": {"value": root.trunk_value, "index": root.leaves[root.trunk][1]},
            "pairs": [{"leaf": p.leaf, "value": p.value, "merge": p.merge, "parent": p.parent} for p in root.pairs],
        })
    return f"{name}  (rows: absolute grading)\n" + render_ascii(root, shift)


def _module_text(M: HFPlusModule) -> str:
    return (f"{M.manifold or 'HF+'}\n  d = {M.d}\n  HF+ = T+_{M.d} + {M.describe()}\n"
            f"  odd part: {M.odd_rank}\n")


def cmd_hf(args: argparse.Namespace) -> str:
    fmt = _require(args, ("text", "json"))
    if args.from_json:
        try:
            with open(args.from_json, encoding="utf-8") if args.from_json != "-" else sys.stdin as fh:
                module = HFPlusModule.from_dict(json.load(fh))
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
            raise MalformedInput(f"cannot read module JSON: {exc}") from None
    else:
        S, _, name = parse_manifold(args.manifold)
        root = build_root(reduce(tau_sequence(S, args.bound_margin)))
        module = assemble_hf(root, grading_shift(S), name)
    if fmt == "json":
        return _emit_json(module.to_dict())
    return _module_text(module)


def cmd_plumb(args: argparse.Namespace) -> str:
    S, _, name = parse_manifold(args.manifold)
    fmt = _require(args, ("text", "json", "dot"))
    G = star_plumbing(S)
    if fmt == "dot":
        return to_dot(G, name)
    info = {
        "manifold": name,
        "center": G.center,
        "vertices": [[v, w] for v, w in G.vertices],
        "edges": [list(e) for e in G.edges],
        "determinant": determinant(intersection_matrix(G)),
        "negative_definite": is_negative_definite(G),
        "bad_vertices": bad_vertices(G),
    }
    if fmt == "json":
        return _emit_json(info)
    head = (f"{name}\n  arms: {G.arms()}\n  det = {info['determinant']}, negative definite: "
            f"{'yes' if info['negative_definite'] else 'no'}, bad vertices: {info['bad_vertices']}\n")
    return head + adjacency_text(G)


def cmd_compare(args: argparse.Namespace) -> str:
    fmt = _require(args, ("text", "json"))
    family = Family.parse(args.family)
    rows = family_report(family, args.n, args.source, args.bound_margin)
    if fmt == "json":
        return _emit_json(rows)
    out = []
    for r in rows:
        if "domain_edge" in r:
            out.append(f"{r['manifold']:<18} {r['source']:<10} domain edge: {r['domain_edge']}")
            continue
        status = "equal" if r["equal"] else "DIFFERENT"
        extra = "" if r["equal"] else (f" (d equal: {r['d_equal']}, lengths equal: {r['multiplicities_equal']},"
                                       f" indexed offset: {r['indexed_offset']})")
        out.append(f"{r['manifold']:<18} {r['source']:<10} {status}{extra}")
    return "\n".join(out) + "\n"


def _sweep_one(job: tuple[str, int, int]) -> tuple[str, int, dict]:
    name, n, margin = job
    fam = Family.parse(name)
    return name, n, pipeline_module(fam.triple(n), margin).to_dict()


def cmd_sweep(args: argparse.Namespace) -> str:
    fmt = _require(args, ("csv", "json", "text"))
    families = [Family.parse(f) for f in args.family]
    jobs = sorted({(f.name, n, args.bound_margin) for f in families for n in args.n})
    for f in families:
        for n in args.n:
            f.triple(n)  # validate before fanning out
    if args.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_sweep_one, jobs))
    else:
        results = [_sweep_one(j) for j in jobs]
    results.sort(key=lambda r: (Family.parse(r[0]), r[1]))
    if fmt == "json":
        return _emit_json([{"family": f, "n": n, **m} for f, n, m in results])
    rows = []
    for fam, n, m in results:
        if not m["towers"]:
            rows.append([fam, n, m["d"], "", "", ""])
        for t in m["towers"]:
            rows.append([fam, n, m["d"], t["bottom"], t["length"], t["mult"]])
    return _emit_csv(["family", "n", "d", "tower_bottom", "tower_len", "mult"], rows)


def cmd_delta(args: argparse.Namespace) -> str:
    fmt = _require(args, ("text", "json", "csv"))
    if args.report:
        rows = delta_report(args.n, args.bound_margin)
        if fmt == "json":
            return _emit_json(rows)
        header = list(rows[0].keys())
        if fmt == "csv":
            return _emit_csv(header, [[r[h] for h in header] for r in rows])
        out = []
        for r in rows:
            note = "" if r["list_agrees"] else "  <- second published value differs"
            out.append(f"delta_2({r['knot']}) = {r['delta2']}  table: {r['table_value']}  "
                       f"list: {r['list_value']}{note}")
        return "\n".join(out) + "\n"
    if args.cover is None or args.knot is None:
        raise UsageError("delta needs --cover and --knot, or --report")
    try:
        p, q = (int(t) for t in args.knot.split(","))
    except ValueError:
        raise UsageError(f"--knot must look like 7,11; got {args.knot!r}") from None
    value = delta_invariant(args.cover, (p, q), args.bound_margin)
    if fmt == "json":
        return _emit_json({"cover": args.cover, "knot": [p, q], "delta": value})
    if fmt == "csv":
        return _emit_csv(["cover", "p", "q", "delta"], [[args.cover, p, q, value]])
    return f"delta_{args.cover}(T({p},{q})) = {value}\n"


def cmd_conjecture(args: argparse.Namespace) -> str:
    fmt = _require(args, ("csv", "json", "text"))
    rows = conjecture_check(args.p, args.k, args.n, args.bound_margin)
    if fmt == "json":
        return _emit_json({"p": args.p, "k": args.k, "all_agree": all(r["agrees"] for r in rows), "rows": rows})
    header = ["p", "k", "n", "sign", "manifold", "d", "conjectured", "agrees"]
    if fmt == "csv":
        return _emit_csv(header, [[r[h] for h in header] for r in rows])
    out = [f"{r['manifold']:<18} d = {r['d']:>3}  conjectured {r['conjectured']:>3}  "
           f"{'agree' if r['agrees'] else 'DISAGREE'}" for r in rows]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    for name in FORMATS:
        fmt.add_argument(f"--{name}", dest="format", action="store_const", const=name,
                         help=f"emit {name} output")
    common.add_argument("--bound-margin", type=int, default=0, metavar="K",
                        help="extend the tau truncation bound by K and re-check monotonicity")

    parser = argparse.ArgumentParser(prog="hf", description="HF+ of Seifert-fibered integer homology spheres via graded roots.")
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({_kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("brieskorn", parents=[common], help="Seifert invariants of Sigma(a1,a2,a3)")
    p.add_argument("values", nargs="+")
    p.set_defaults(func=cmd_seifert_info)
    p = sub.add_parser("seifert", parents=[common], help="validate e0=E arms=a/b,...")
    p.add_argument("values", nargs="+")
    p.set_defaults(func=cmd_seifert_info)
    p = sub.add_parser("surgery", parents=[common], help="Brieskorn data of +-1/n surgery on T_{p,q}")
    p.add_argument("values", nargs="+")
    p.set_defaults(func=cmd_seifert_info)

    for name, func, helptext in (
        ("tau", cmd_tau, "tau function and its extrema"),
        ("root", cmd_root, "graded root"),
        ("hf", cmd_hf, "HF+ module of -Sigma"),
        ("plumb", cmd_plumb, "star-shaped plumbing graph"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("manifold", nargs="*")
        p.set_defaults(func=func)
        if name == "tau":
            p.add_argument("--extrema", action="store_true", help="print the reduced extrema table")
        if name == "hf":
            p.add_argument("--from-json", metavar="FILE", help="re-read a module from JSON ('-' for stdin)")

    p = sub.add_parser("compare", parents=[common], help="closed forms vs the pipeline")
    p.add_argument("--family", required=True, help="e.g. 2,5,minus1 or 2,7,plus3")
    p.add_argument("--n", type=parse_range, default=[1, 2, 3])
    p.add_argument("--source", choices=("eq1", "thm_minus", "table1"))
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sweep", parents=[common], help="pipeline over families, CSV out")
    p.add_argument("--family", action="append", required=True)
    p.add_argument("--n", type=parse_range, default=[1, 2, 3])
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("delta", parents=[common], help="delta concordance invariants of torus knots")
    p.add_argument("--cover", type=int)
    p.add_argument("--knot", help="p,q")
    p.add_argument("--report", action="store_true", help="six knot families, computed vs published values")
    p.add_argument("--n", type=parse_range, default=[1, 2, 3])
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("conjecture", parents=[common], help="check the d-invariant conjecture")
    p.add_argument("p", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--n", type=parse_range, default=[1, 2, 3])
    p.set_defaults(func=cmd_conjecture)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.bound_margin < 0:
        print("hf: error: --bound-margin must be >= 0", file=stderr)
        return 2
    try:
        stdout.write(args.func(args))
    except UsageError as exc:
        print(f"hf {args.command}: usage error: {exc}", file=stderr)
        return 2
    except HFError as exc:
        print(f"hf {args.command}: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command line: ``anchorhom {homology,euler,verify}``.

JSON reports go to stdout and a short human summary to stderr.  Exit code
0 means every executed check passed, 1 means a check failed and 2 means
the input was rejected or a resource limit was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from . import __version__
from .combinatorics import binomial
from .complex import DEFAULT_GENERATOR_BUDGET, build_complex
from .errors import AnchorHomError, HypothesisViolation, InvalidParameterError
from .euler import euler_brute_force, euler_closed_form, euler_cycle_generalized
from .graph import AnchorSpec, load_graph_file, make_cycle, validate_for_euler
from .homology import betti_closed_form, homology
from .verify import Check, run_grid


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _report(command: str, argv: List[str], params: dict, results: dict, checks: List[Check], t0: float) -> dict:
    return {
        "command": command,
        "argv": list(argv),
        "parameters": params,
        "results": results,
        "checks": [c.to_json() for c in checks],
        "pass": all(c.passed for c in checks),
        "wall_time": round(time.perf_counter() - t0, 6),
    }


def cmd_homology(args, argv) -> dict:
    t0 = time.perf_counter()
    k, n, q = args.k, args.n, args.q
    P = None if args.P is None else [p - 1 for p in args.P]
    c = build_complex(k, n, P, q, budget=args.budget)
    h = homology(c, cross_check=args.cross_check)
    full = len(c.P) == k
    checks: List[Check] = []
    if full and q == 0:
        checks.append(Check("torus_betti", [binomial(n, i) for i in range(n + 1)], h.betti))
    elif full:
        checks.append(Check("betti_closed_form", betti_closed_form(k, n, q), h.betti))
        checks.append(Check("chain_euler", euler_cycle_generalized(k, n, q).chi, c.euler_characteristic()))
    else:
        off_top = [i for i in range(len(h.betti)) if i != n - q]
        checks.append(Check("concentrated_top", [0] * len(off_top), [h.betti[i] + len(h.torsion[i]) for i in off_top]))
        if q == 0:
            checks.append(Check("top_rank", (k - len(c.P)) ** n, h.betti_at(n)))
    if full:
        checks.append(Check("torsion_free", [[] for _ in h.torsion], [list(t) for t in h.torsion]))
    if args.dump_matrices:
        with open(args.dump_matrices, "w") as fh:
            for line in c.dump_lines():
                fh.write(line + "\n")
    params = {"k": k, "n": n, "q": q, "P": sorted(v + 1 for v in c.P)}
    results = {"homology": h.to_json(), "groups": [h.group_str(i) for i in range(len(h.betti))]}
    rep = _report("homology", argv, params, results, checks, t0)
    print(f"H_*(C^{{P,q}}) k={k} n={n} q={q} P={params['P']}: " + ", ".join(results["groups"]), file=sys.stderr)
    return rep


def cmd_euler(args, argv) -> dict:
    t0 = time.perf_counter()
    if args.cycle is not None:
        g = make_cycle(args.cycle)
        if args.q is None:
            raise InvalidParameterError("--q is required with --cycle")
        a = AnchorSpec(frozenset(range(args.cycle)), args.q)
        source = {"cycle": args.cycle}
    else:
        gf = load_graph_file(args.graph)
        g = gf.graph
        a = gf.anchor_spec(args.q)
        source = {"graph_file": str(args.graph)}
    n = args.n
    results = {}
    checks: List[Check] = []
    if args.method in ("formula", "both"):
        if a.q >= 1:
            verdict = validate_for_euler(g, a, n)
            if not verdict:
                raise HypothesisViolation(verdict.hypothesis, verdict.message)
        results["formula"] = euler_closed_form(g, a, n).to_json()
    if args.method in ("brute", "both"):
        results["brute"] = euler_brute_force(g, a, n, budget=args.budget, workers=args.workers).to_json()
    if args.method == "both":
        checks.append(Check("formula_equals_brute", results["brute"]["chi"], results["formula"]["chi"]))
    params = dict(source, n=n, q=a.q, anchors=sorted(v + 1 for v in a.K), method=args.method)
    rep = _report("euler", argv, params, results, checks, t0)
    vals = ", ".join(f"{m}={r['chi']}" for m, r in results.items())
    print(f"chi: {vals}", file=sys.stderr)
    return rep


def cmd_verify(args, argv) -> dict:
    t0 = time.perf_counter()
    if args.kmax < 2 or args.nmax < 2:
        raise InvalidParameterError("--kmax and --nmax must both be at least 2")
    cases = run_grid(args.kmax, args.nmax, budget=args.budget, workers=args.workers)
    checks = []
    for case in cases:
        tag = " ".join(f"{key}={val}" for key, val in sorted(case.params.items()))
        for c in case.checks:
            checks.append(Check(f"{case.family} {tag}: {c.name}", c.expected, c.actual))
    counts = {s: sum(1 for c in cases if c.status == s) for s in ("pass", "fail", "skipped")}
    results = {"cases": [c.to_json() for c in cases], "summary": counts}
    params = {"kmax": args.kmax, "nmax": args.nmax, "budget": args.budget}
    rep = _report("verify", argv, params, results, checks, t0)
    print(
        f"verify kmax={args.kmax} nmax={args.nmax}: {counts['pass']} passed, "
        f"{counts['fail']} failed, {counts['skipped']} skipped",
        file=sys.stderr,
    )
    return rep


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="anchorhom", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", help="homology of the complex C^{P,q} on the cycle C_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--P", type=int, nargs="+", help="vertex labels 1..k (default: all)")
    p.add_argument("--dump-matrices", metavar="FILE", help="write boundary matrices as text")
    p.add_argument("--cross-check", action="store_true", help="also compare SNF ranks with rational ranks")
    p.add_argument("--budget", type=int, default=DEFAULT_GENERATOR_BUDGET, help="max number of generators")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("euler", help="Euler characteristic by formula and/or brute force")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--cycle", type=int, metavar="K")
    src.add_argument("--graph", metavar="FILE")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--method", choices=("formula", "brute", "both"), default="formula")
    p.add_argument("--budget", type=int, help="max tuples for brute force (default: $ANCHORHOM_BUDGET or 1e8)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("verify", help="run the verification grid")
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--budget", type=int, default=DEFAULT_GENERATOR_BUDGET,
                   help="per-case size budget; larger cases are skipped")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    try:
        rep = args.func(args, argv)
    except (AnchorHomError, OSError) as exc:
        err = {"type": getattr(exc, "kind", "io"), "message": str(exc)}
        if isinstance(exc, HypothesisViolation):
            err["hypothesis"] = exc.hypothesis
        sys.stdout.write(dumps({"command": args.command, "argv": argv, "error": err}))
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(dumps(rep))
    return 0 if rep["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())

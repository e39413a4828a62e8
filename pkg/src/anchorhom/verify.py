"""Verification grid: every check compares exact integers.

A case is a small picklable tuple ``(family, params)``; :func:`run_case`
turns it into a :class:`CaseResult`.  Cases that would exceed the size
budget are reported as skipped, never as failed.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, Iterator, List, Optional, Tuple

from .combinatorics import binomial, factorial, stirling2
from .complex import DEFAULT_GENERATOR_BUDGET, build_complex, quotient_complex
from .errors import IntegrityError, ResourceError
from .euler import euler_anchored, euler_brute_force, euler_closed_form, euler_cycle_generalized
from .graph import AnchorSpec, Graph, make_complete, make_cycle, make_theta
from .homology import betti_closed_form, euler_poincare, homology


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "pass": self.passed}


@dataclass
class CaseResult:
    family: str
    params: Dict[str, Any]
    checks: List[Check] = field(default_factory=list)
    skipped: Optional[str] = None

    @property
    def status(self) -> str:
        if self.skipped is not None:
            return "skipped"
        return "pass" if all(c.passed for c in self.checks) else "fail"

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "params": self.params,
            "status": self.status,
            "checks": [c.to_json() for c in self.checks],
        }
        if self.skipped is not None:
            out["skipped"] = self.skipped
        return out


def reference_graphs() -> Dict[str, Graph]:
    """Connected non-tree graphs used by the Euler-formula family."""
    c3_pendant = Graph(4, ((0, 1), (1, 2), (2, 0), (0, 3)))
    return {
        "C2": make_cycle(2),
        "C3": make_cycle(3),
        "C4": make_cycle(4),
        "theta": make_theta(3),
        "C3+pendant": c3_pendant,
        "K4": make_complete(4),
    }


def _labels(P) -> List[int]:
    return [v + 1 for v in sorted(P)]


def _proper_subsets(k: int) -> Iterator[Tuple[int, ...]]:
    for size in range(k):
        yield from combinations(range(k), size)


def _dd_zero(c) -> bool:
    try:
        c.check_dd()
    except IntegrityError:
        return False
    return True


def _homology_checks(res: CaseResult, c, h) -> None:
    res.checks.append(Check("dd_zero", True, _dd_zero(c)))
    res.checks.append(Check("euler_poincare", c.euler_characteristic(), euler_poincare(h)))


def _case_main(k: int, n: int, q: int, budget: int) -> CaseResult:
    res = CaseResult("main" if q else "torus", {"k": k, "n": n, "q": q})
    c = build_complex(k, n, None, q, budget=budget)
    h = homology(c)
    _homology_checks(res, c, h)
    res.checks.append(Check("torsion", [[] for _ in h.torsion], [list(t) for t in h.torsion]))
    if q == 0:
        res.checks.append(Check("betti", [binomial(n, i) for i in range(n + 1)], h.betti))
    else:
        res.checks.append(Check("betti", betti_closed_form(k, n, q), h.betti))
        res.checks.append(Check("chain_euler", euler_cycle_generalized(k, n, q).chi, c.euler_characteristic()))
    return res


def _case_concentration(k: int, n: int, P: Tuple[int, ...], q: int, budget: int) -> CaseResult:
    res = CaseResult("concentration", {"k": k, "n": n, "P": _labels(P), "q": q})
    c = build_complex(k, n, P, q, budget=budget)
    h = homology(c)
    _homology_checks(res, c, h)
    off_top = [i for i in range(len(h.betti)) if i != n - q]
    res.checks.append(
        Check("off_top_zero", [0] * len(off_top), [h.betti[i] + len(h.torsion[i]) for i in off_top])
    )
    if q == 0:
        res.checks.append(Check("top_rank", (k - len(P)) ** n, h.betti_at(n)))
    return res


def _case_quotient(k: int, n: int, P: Tuple[int, ...], q: int, budget: int) -> CaseResult:
    res = CaseResult("quotient", {"k": k, "n": n, "P": _labels(P), "q": q})
    qc = quotient_complex(k, n, P, q, budget=budget)
    hq = homology(qc)
    _homology_checks(res, qc, hq)
    width = qc.top + 1
    total = [0] * width
    for S in combinations(sorted(P), q - 1):
        hs = homology(build_complex(k, n, S, q - 1, budget=budget))
        for i, b in enumerate(hs.betti):
            total[i] += b
    res.checks.append(Check("betti_sum", total, hq.betti))
    return res


def _case_euler(name: str, K: Tuple[int, ...], q: int, n: int, budget: int) -> CaseResult:
    g = reference_graphs()[name]
    a = AnchorSpec(frozenset(K), q)
    res = CaseResult("euler", {"graph": name, "K": _labels(K), "q": q, "n": n})
    brute = euler_brute_force(g, a, n, budget=budget).chi
    res.checks.append(Check("closed_vs_brute", brute, euler_closed_form(g, a, n).chi))
    if q == len(K):
        res.checks.append(Check("anchored_vs_brute", brute, euler_anchored(g, K, n).chi))
    return res


def _case_anchored(k: int, n: int, budget: int) -> CaseResult:
    res = CaseResult("anchored", {"k": k, "n": n})
    expected = (-1) ** (n - k) * factorial(k) * stirling2(n, k)
    res.checks.append(Check("anchored_cycle", expected, euler_anchored(make_cycle(k), range(k), n).chi))
    return res


_FAMILIES = {
    "main": _case_main,
    "concentration": _case_concentration,
    "quotient": _case_quotient,
    "euler": _case_euler,
    "anchored": _case_anchored,
}


def run_case(case: Tuple[str, tuple, int]) -> CaseResult:
    family, args, budget = case
    try:
        return _FAMILIES[family](*args, budget)
    except ResourceError as exc:
        res = CaseResult(family, {"args": list(args)})
        res.skipped = str(exc)
        return res
    except IntegrityError as exc:
        res = CaseResult(family, {"args": list(args)})
        res.checks.append(Check("integrity", "ok", str(exc)))
        return res


def grid(kmax: int, nmax: int) -> List[Tuple[str, tuple]]:
    """The acceptance grid restricted to ``k <= kmax`` and ``n <= nmax``."""
    cases: List[Tuple[str, tuple]] = []
    for k in range(2, min(3, kmax) + 1):
        for n in range(2, min(3, nmax) + 1):
            cases.append(("main", (k, n, 0)))
    for k in range(2, min(4, kmax) + 1):
        for q in range(1, k + 1):
            for n in range(max(q, 2), min(5, nmax) + 1):
                cases.append(("main", (k, n, q)))
    for name, g in reference_graphs().items():
        for size in range(1, min(3, g.vertex_count) + 1):
            for K in combinations(range(g.vertex_count), size):
                for q in range(1, size + 1):
                    for n in range(q, min(4, nmax) + 1):
                        cases.append(("euler", (name, K, q, n)))
    for k in range(2, min(4, kmax) + 1):
        for n in range(k, min(6, nmax) + 1):
            cases.append(("anchored", (k, n)))
    for k in range(2, min(4, kmax) + 1):
        for P in _proper_subsets(k):
            for q in range(0, len(P) + 1):
                for n in range(max(q, 1), min(4, nmax) + 1):
                    cases.append(("concentration", (k, n, P, q)))
    for k in range(2, min(3, kmax) + 1):
        subsets = [tuple(range(k))] + list(_proper_subsets(k))
        for P in subsets:
            for q in (1, 2):
                if q - 1 > len(P):
                    continue
                for n in range(1, min(4, nmax) + 1):
                    cases.append(("quotient", (k, n, P, q)))
    return cases


def run_grid(
    kmax: int,
    nmax: int,
    budget: Optional[int] = None,
    workers: int = 1,
) -> List[CaseResult]:
    budget = DEFAULT_GENERATOR_BUDGET if budget is None else budget
    cases = [(family, args, budget) for family, args in grid(kmax, nmax)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(run_case, cases, chunksize=4))
    return [run_case(c) for c in cases]

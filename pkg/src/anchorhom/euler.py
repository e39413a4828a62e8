"""Euler characteristics of generalized anchored configuration spaces.

Three routes to the same number:

* the closed positive double sum over ``λ`` and ``t`` (and its ``q = |K|``
  and cycle-graph specialisations),
* the product formula ``(|V| - |E|)^n`` when ``q = 0``,
* a brute-force signed count over every tuple in ``(V ∪ E)^n``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

import numpy as np

from .combinatorics import binomial, factorial, pow_conv, stirling2
from .errors import HypothesisViolation, InvalidParameterError, ResourceError
from .graph import AnchorSpec, Graph, make_cycle, validate_for_euler

DEFAULT_TUPLE_BUDGET = 10**8
BUDGET_ENV = "ANCHORHOM_BUDGET"

_CHUNK = 1 << 18


@dataclass(frozen=True)
class Term:
    """One ``(λ, t)`` summand of the closed formula, before the ``(-1)^{n-q} q!`` prefactor."""

    lam: int
    t: int
    value: int


@dataclass
class EulerReport:
    chi: int
    method: str  # "closed_form", "brute_force" or "product_formula"
    params: dict
    prefactor: Optional[int] = None
    terms: List[Term] = field(default_factory=list)

    def term_sum(self) -> int:
        return sum(t.value for t in self.terms)

    def to_json(self) -> dict:
        out = {"chi": self.chi, "method": self.method, "params": self.params}
        if self.method == "closed_form":
            out["prefactor"] = self.prefactor
            out["terms"] = [{"lambda": t.lam, "t": t.t, "value": t.value} for t in self.terms]
        return out


def default_budget() -> int:
    """Tuple budget for brute force; ``$ANCHORHOM_BUDGET`` overrides the default."""
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidParameterError(f"{BUDGET_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_TUPLE_BUDGET


def _double_sum(eps: int, k: int, n: int, q: int) -> Tuple[int, List[Term]]:
    """Closed formula for ``|E| - |V| = eps``, ``|K| = k``; returns (chi, terms)."""
    terms = []
    for lam in range(eps, eps + k - q + 1):
        choose_anchors = binomial(lam - eps + q - 1, q - 1)
        for t in range(n - q + 1):
            value = choose_anchors * binomial(n, t) * stirling2(n - t, q) * pow_conv(lam, t)
            terms.append(Term(lam, t, value))
    prefactor = (-1) ** (n - q) * factorial(q)
    return prefactor * sum(t.value for t in terms), terms


def _params(g: Graph, a: AnchorSpec, n: int) -> dict:
    return {
        "graph": g.summary(),
        "anchors": sorted(v + 1 for v in a.K),
        "k": len(a.K),
        "n": n,
        "q": a.q,
        "epsilon": g.epsilon(),
    }


def euler_closed_form(g: Graph, a: AnchorSpec, n: int) -> EulerReport:
    """Euler characteristic from the closed non-alternating formula.

    ``q = 0`` is answered by the product formula, since the space is then
    all of ``G^n``.  Otherwise the graph must be connected and not a tree,
    with ``1 <= q <= |K|`` and ``n >= q``; a violation raises
    :class:`HypothesisViolation`.
    """
    if a.q == 0:
        if not g.is_connected():
            raise HypothesisViolation("connected", "graph is not connected")
        a.check(g)
        chi = pow_conv(-g.epsilon(), n)
        return EulerReport(chi, "product_formula", _params(g, a, n))
    verdict = validate_for_euler(g, a, n)
    if not verdict:
        raise HypothesisViolation(verdict.hypothesis, verdict.message)
    chi, terms = _double_sum(g.epsilon(), len(a.K), n, a.q)
    return EulerReport(chi, "closed_form", _params(g, a, n), (-1) ** (n - a.q) * factorial(a.q), terms)


def euler_anchored(g: Graph, K: Iterable[int], n: int) -> EulerReport:
    """Closed formula for ``q = |K|`` (every anchor occupied)."""
    K = frozenset(K)
    a = AnchorSpec(K, len(K))
    verdict = validate_for_euler(g, a, n)
    if not verdict:
        raise HypothesisViolation(verdict.hypothesis, verdict.message)
    k, eps = len(a.K), g.epsilon()
    terms = [Term(eps, t, binomial(n, t) * stirling2(n - t, k) * pow_conv(eps, t)) for t in range(n - k + 1)]
    prefactor = (-1) ** (n - k) * factorial(k)
    return EulerReport(prefactor * sum(t.value for t in terms), "closed_form", _params(g, a, n), prefactor, terms)


def euler_cycle_generalized(k: int, n: int, q: int) -> EulerReport:
    """Closed formula on the cycle ``C_k`` with every vertex an anchor."""
    if not 1 <= q <= k:
        raise InvalidParameterError(f"need 1 <= q <= k, got q={q}, k={k}")
    if k < 2:
        raise InvalidParameterError(f"cycle graphs need k >= 2, got {k}")
    if n < q:
        raise InvalidParameterError(f"need n >= q, got n={n}, q={q}")
    chi, terms = _double_sum(0, k, n, q)
    params = {"graph": make_cycle(k).summary(), "anchors": list(range(1, k + 1)),
              "k": k, "n": n, "q": q, "epsilon": 0}
    return EulerReport(chi, "closed_form", params, (-1) ** (n - q) * factorial(q), terms)


def _chunk_sum(lo: int, hi: int, m: int, n: int, is_edge: np.ndarray, anchor_ids: np.ndarray, q: int) -> int:
    idx = np.arange(lo, hi, dtype=np.int64)
    edges = np.zeros(hi - lo, dtype=np.int64)
    covered = np.zeros((len(anchor_ids), hi - lo), dtype=bool)
    for _ in range(n):
        digit = idx % m
        idx //= m
        edges += is_edge[digit]
        for i, a in enumerate(anchor_ids):
            covered[i] |= digit == a
    keep = covered.sum(axis=0) >= q
    odd = (edges & 1).astype(bool)
    return int(np.count_nonzero(keep & ~odd)) - int(np.count_nonzero(keep & odd))


def euler_brute_force(
    g: Graph,
    a: AnchorSpec,
    n: int,
    budget: Optional[int] = None,
    workers: int = 1,
) -> EulerReport:
    """Signed cell count: sum of ``(-1)^{#edge slots}`` over admissible tuples.

    Tuples of ``(V ∪ E)^n`` are visited in mixed-radix counter order (digit
    ``i < |V|`` is vertex ``i``, the rest are edges), in contiguous chunks
    that may be spread over ``workers`` threads.
    """
    a.check(g)
    if n < 0:
        raise InvalidParameterError(f"n must be nonnegative, got {n}")
    m = g.vertex_count + g.edge_count
    total = m**n
    limit = default_budget() if budget is None else budget
    if total > limit:
        raise ResourceError(f"brute force needs {total} tuples, budget is {limit}", required=total, budget=limit)
    is_edge = np.array([0] * g.vertex_count + [1] * g.edge_count, dtype=np.int64)
    anchor_ids = np.array(sorted(a.K), dtype=np.int64)
    bounds = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = pool.map(lambda b: _chunk_sum(b[0], b[1], m, n, is_edge, anchor_ids, a.q), bounds)
            chi = sum(parts)
    else:
        chi = sum(_chunk_sum(lo, hi, m, n, is_edge, anchor_ids, a.q) for lo, hi in bounds)
    params = _params(g, a, n)
    params["tuples"] = total
    return EulerReport(chi, "brute_force", params)

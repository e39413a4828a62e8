"""Chain complexes of vertex-edge tuples on the cycle graph C_k.

A cell of the product cubical structure on ``C_k^n`` is an ``n``-tuple
whose slots are vertices or edges of ``C_k``.  Slots are encoded as ints:
``0..k-1`` for vertices ``v_1..v_k`` and ``k..2k-1`` for edges
``e_1..e_k``, so integer order is the slot order
``v_1 < ... < v_k < e_1 < ... < e_k`` and sorted code tuples are in
lexicographic cell order.

Edge ``e_j`` is oriented from ``v_j`` to ``v_{j+1}``: replacing an edge
slot by its head vertex contributes ``+(-1)^rho`` and by its tail vertex
``-(-1)^rho``, where ``rho`` counts the edge slots in front of it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .combinatorics import binomial, stirling2, factorial
from .errors import IntegrityError, InvalidParameterError, ResourceError, StateError
from .sparse import SparseIntMatrix

DEFAULT_GENERATOR_BUDGET = 5_000_000

Code = Tuple[int, ...]


@dataclass(frozen=True)
class VertexEdgeTuple:
    """One cell: ``slots[p]`` is a vertex code ``< k`` or an edge code ``>= k``."""

    slots: Code
    k: int

    @property
    def dim(self) -> int:
        return sum(1 for s in self.slots if s >= self.k)

    @property
    def supp_V(self) -> FrozenSet[int]:
        return frozenset(s for s in self.slots if s < self.k)

    @property
    def supp_E(self) -> FrozenSet[int]:
        return frozenset(s - self.k for s in self.slots if s >= self.k)

    def labels(self) -> List[str]:
        """1-based labels, e.g. ``['v1', 'e3']``."""
        k = self.k
        return [f"v{s + 1}" if s < k else f"e{s - k + 1}" for s in self.slots]

    def __str__(self):
        return "(" + ",".join(self.labels()) + ")"

    @classmethod
    def parse(cls, text: str, k: int) -> "VertexEdgeTuple":
        """Inverse of ``str``: ``"(v1,e2)"`` -> slots ``(0, k + 1)``."""
        slots = []
        for tok in text.strip("() ").split(","):
            tok = tok.strip()
            kind, idx = tok[0], int(tok[1:]) - 1
            if kind not in "ve" or not 0 <= idx < k:
                raise InvalidParameterError(f"bad slot label {tok!r} for k={k}")
            slots.append(idx if kind == "v" else k + idx)
        return cls(tuple(slots), k)


def _check_params(k: int, n: int, P: FrozenSet[int], q: int) -> None:
    if k < 2:
        raise InvalidParameterError(f"k must be at least 2, got {k}")
    if n < 1:
        raise InvalidParameterError(f"n must be at least 1, got {n}")
    if any(not 0 <= v < k for v in P):
        raise InvalidParameterError(f"P = {sorted(P)} is not a subset of 0..{k - 1}")
    if not 0 <= q <= len(P):
        raise InvalidParameterError(f"q = {q} must satisfy 0 <= q <= |P| = {len(P)}")


def _as_set(P: Optional[Iterable[int]], k: int) -> FrozenSet[int]:
    return frozenset(range(k)) if P is None else frozenset(int(v) for v in P)


def rank_count(k: int, n: int, p: int, q: int, d: int, exact: bool = False) -> int:
    """Number of generators of dimension ``d`` with vertex support in a
    ``p``-set and of size ``>= q`` (``== q`` when ``exact``).

    Counted as: choose the ``d`` edge slots and their labels, then a word of
    length ``n - d`` over the ``p`` allowed vertices using exactly ``j``
    distinct letters.
    """
    if d < 0 or d > n:
        return 0
    m = n - d
    js = [q] if exact else range(q, p + 1)
    words = sum(binomial(p, j) * factorial(j) * stirling2(m, j) for j in js)
    return binomial(n, d) * k**d * words


def _codes(k: int, n: int, P: FrozenSet[int], keep) -> Dict[int, List[Code]]:
    """All code tuples over ``P``-vertices and edges accepted by ``keep``, bucketed by dimension."""
    alphabet = sorted(P) + list(range(k, 2 * k))
    out: Dict[int, List[Code]] = {}
    for t in itertools.product(alphabet, repeat=n):
        supp = {s for s in t if s < k}
        if keep(supp):
            out.setdefault(n - sum(1 for s in t if s < k), []).append(t)
    return out


def enumerate_cells(k: int, n: int, P: Optional[Iterable[int]], q: int, d: int) -> List[VertexEdgeTuple]:
    """Generators of ``C_d^{P,q}`` in lexicographic slot order."""
    P = _as_set(P, k)
    _check_params(k, n, P, q)
    if not 0 <= d <= n:
        raise InvalidParameterError(f"d = {d} must lie in 0..{n}")
    cells = _codes(k, n, P, lambda supp: len(supp) >= q).get(d, [])
    return [VertexEdgeTuple(t, k) for t in cells]


@dataclass
class ChainComplex:
    """Graded bases plus boundary matrices ``D_d : C_d -> C_{d-1}``.

    For a relative complex (``relative=True``) the generators are the cells
    with exactly ``q - 1`` supporting vertices and the boundary only keeps
    faces that do not enlarge the vertex support.
    """

    k: int
    n: int
    P: FrozenSet[int]
    q: int
    relative: bool = False
    bases: Dict[int, List[Code]] = field(default_factory=dict)
    boundaries: Dict[int, SparseIntMatrix] = field(default_factory=dict)
    _index: Dict[int, Dict[Code, int]] = field(default_factory=dict, repr=False)

    @property
    def top(self) -> int:
        """Highest dimension that can carry generators."""
        return self.n - self.q + 1 if self.relative else self.n - self.q

    @property
    def dims(self) -> range:
        return range(0, self.top + 1)

    def rank(self, d: int) -> int:
        return len(self.bases.get(d, ()))

    def ranks(self) -> List[int]:
        return [self.rank(d) for d in self.dims]

    def cells(self, d: int) -> List[VertexEdgeTuple]:
        return [VertexEdgeTuple(t, self.k) for t in self.bases.get(d, ())]

    def index_of(self, d: int, cell) -> int:
        slots = cell.slots if isinstance(cell, VertexEdgeTuple) else tuple(cell)
        return self._index_for(d)[slots]

    def _index_for(self, d: int) -> Dict[Code, int]:
        idx = self._index.get(d)
        if idx is None:
            idx = {t: i for i, t in enumerate(self.bases.get(d, ()))}
            self._index[d] = idx
        return idx

    def boundary(self, d: int) -> SparseIntMatrix:
        """``D_d``; zero maps outside the populated range."""
        m = self.boundaries.get(d)
        if m is None:
            return SparseIntMatrix.zeros(self.rank(d - 1), self.rank(d))
        return m

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * self.rank(d) for d in self.dims)

    def check_dd(self) -> None:
        """Raise :class:`IntegrityError` unless ``D_d D_{d+1} = 0`` for every d."""
        for d in range(1, self.top):
            prod = self.boundary(d) @ self.boundary(d + 1)
            if not prod.is_zero():
                raise IntegrityError(f"boundary composition D_{d} D_{d + 1} is nonzero ({prod.nnz} entries)")

    def dump_lines(self) -> Iterable[str]:
        for d in self.dims:
            if d >= 1:
                yield from self.boundary(d).dump_lines(d)

    def blocks(self) -> Dict[FrozenSet[int], Dict[int, List[int]]]:
        """Generator indices grouped by vertex support, per dimension."""
        out: Dict[FrozenSet[int], Dict[int, List[int]]] = {}
        k = self.k
        for d, basis in self.bases.items():
            for i, t in enumerate(basis):
                s = frozenset(x for x in t if x < k)
                out.setdefault(s, {}).setdefault(d, []).append(i)
        return out


def boundary_matrix(c: ChainComplex, d: int) -> SparseIntMatrix:
    """Assemble ``D_d`` from the bases of dimensions ``d`` and ``d - 1``."""
    if d not in c.bases or (d - 1 not in c.bases and d >= 1):
        raise StateError(f"bases for dimensions {d} and {d - 1} must be enumerated first")
    cols = c.bases[d]
    if d == 0:
        return SparseIntMatrix.zeros(0, len(cols))
    k, P, q = c.k, c.P, c.q
    row_index = c._index_for(d - 1)
    columns = []
    for t in cols:
        supp = {s for s in t if s < k}
        allowed = supp if c.relative else P
        col: Dict[int, int] = {}
        rho = 0
        for p, s in enumerate(t):
            if s < k:
                continue
            j = s - k
            sign = -1 if rho & 1 else 1
            for v, orient in ((j, -1), ((j + 1) % k, 1)):
                if v not in allowed:
                    continue
                face = t[:p] + (v,) + t[p + 1:]
                if not c.relative and len(supp | {v}) < q:
                    raise IntegrityError(f"face {face} of {t} falls below the support threshold")
                r = row_index.get(face)
                if r is None:
                    raise IntegrityError(f"face {face} of {t} is not a generator")
                val = col.get(r, 0) + sign * orient
                if val:
                    col[r] = val
                else:
                    col.pop(r, None)
            rho += 1
        columns.append(col)
    return SparseIntMatrix(len(row_index), len(cols), columns)


def _budget(budget: Optional[int]) -> int:
    return DEFAULT_GENERATOR_BUDGET if budget is None else budget


def _assemble(c: ChainComplex, keep, verify: bool) -> ChainComplex:
    buckets = _codes(c.k, c.n, c.P, keep)
    for d in c.dims:
        c.bases[d] = buckets.get(d, [])
    for d in c.dims:
        if d >= 1:
            c.boundaries[d] = boundary_matrix(c, d)
    if verify:
        c.check_dd()
    return c


def build_complex(
    k: int,
    n: int,
    P: Optional[Iterable[int]] = None,
    q: int = 0,
    *,
    verify: bool = True,
    budget: Optional[int] = None,
) -> ChainComplex:
    """The complex ``C^{P,q}``; ``P`` defaults to every vertex of ``C_k``."""
    P = _as_set(P, k)
    _check_params(k, n, P, q)
    total = sum(rank_count(k, n, len(P), q, d) for d in range(n + 1))
    limit = _budget(budget)
    if total > limit:
        raise ResourceError(
            f"complex would have {total} generators, budget is {limit}", required=total, budget=limit
        )
    c = ChainComplex(k, n, P, q)
    return _assemble(c, lambda supp: len(supp) >= q, verify)


def quotient_complex(
    k: int,
    n: int,
    P: Optional[Iterable[int]] = None,
    q: int = 1,
    *,
    verify: bool = True,
    budget: Optional[int] = None,
) -> ChainComplex:
    """The relative complex ``C^{P,q-1} / C^{P,q}``."""
    P = _as_set(P, k)
    if q < 1:
        raise InvalidParameterError("the quotient complex needs q >= 1")
    _check_params(k, n, P, q - 1)
    total = sum(rank_count(k, n, len(P), q - 1, d, exact=True) for d in range(n + 1))
    limit = _budget(budget)
    if total > limit:
        raise ResourceError(
            f"complex would have {total} generators, budget is {limit}", required=total, budget=limit
        )
    c = ChainComplex(k, n, P, q, relative=True)
    return _assemble(c, lambda supp: len(supp) == q - 1, verify)

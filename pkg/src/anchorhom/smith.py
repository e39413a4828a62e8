"""Exact sparse elimination over the integers.

Two routines share one pivoting core:

* :func:`smith_normal_form`: invariant factors by unimodular row and
  column operations.  Unit pivots (``±1``) are taken first in a
  Markowitz-like order (shortest column, then shortest row), which keeps
  boundary matrices of cubical complexes sparse.  Whatever is left has no
  unit entry and is finished with smallest-absolute-value pivoting.
* :func:`rational_rank`: rank over Q by fraction-free row elimination
  with content removal.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Set, Tuple

from .sparse import SparseIntMatrix

Rows = Dict[int, Dict[int, int]]
Cols = Dict[int, Set[int]]


@dataclass(frozen=True)
class SNFResult:
    invariant_factors: Tuple[int, ...]
    shape: Tuple[int, int] = (0, 0)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def _split(m: SparseIntMatrix) -> Tuple[Rows, Cols]:
    rows: Rows = {}
    cols: Cols = {}
    for c in range(m.cols):
        col = m.column(c)
        if not col:
            continue
        cols[c] = set(col)
        for r, v in col.items():
            rows.setdefault(r, {})[c] = v
    return rows, cols


def _eliminate(rows: Rows, cols: Cols, r: int, c: int, scaled: bool) -> Set[int]:
    """Pivot on ``(r, c)`` and drop row ``r`` and column ``c``.

    Unscaled: the pivot must be ±1 and the rest becomes the Schur
    complement ``A - A[:,c] A[r,:] / p``.  Scaled: every other row is
    replaced by ``p*row - row[c]*pivot_row`` and divided by its content,
    which preserves the rank but not the lattice.
    Returns the columns whose support changed.
    """
    prow = rows.pop(r)
    p = prow.pop(c)
    pcol = cols.pop(c)
    pcol.discard(r)
    for c2 in prow:
        cols[c2].discard(r)
    touched = set(prow)
    for r2 in pcol:
        row2 = rows[r2]
        f = row2.pop(c)
        if scaled:
            if p != 1:
                for c2 in row2:
                    row2[c2] *= p
        else:
            f *= p  # p is ±1, so f / p == f * p
        for c2, v in prow.items():
            nv = row2.get(c2, 0) - f * v
            if nv:
                if c2 not in row2:
                    cols[c2].add(r2)
                row2[c2] = nv
            elif c2 in row2:
                del row2[c2]
                cols[c2].discard(r2)
        if scaled and row2:
            g = 0
            for v in row2.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                for c2 in row2:
                    row2[c2] //= g
        if not row2:
            del rows[r2]
    return touched


def _unit_phase(rows: Rows, cols: Cols) -> int:
    """Take unit pivots until none is left; returns how many were taken."""
    heap = [(len(rs), c) for c, rs in cols.items()]
    heapq.heapify(heap)
    taken = 0
    while heap:
        cnt, c = heapq.heappop(heap)
        rs = cols.get(c)
        if rs is None or len(rs) != cnt:
            continue
        if cnt == 0:
            del cols[c]
            continue
        best = -1
        best_len = 0
        for r in rs:
            v = rows[r][c]
            if v == 1 or v == -1:
                n = len(rows[r])
                if best < 0 or n < best_len:
                    best, best_len = r, n
                    if n == 1:
                        break
        if best < 0:
            continue
        for c2 in _eliminate(rows, cols, best, c, scaled=False):
            rs2 = cols[c2]
            if rs2:
                heapq.heappush(heap, (len(rs2), c2))
            else:
                del cols[c2]
        taken += 1
    return taken


def _smallest_entry(rows: Rows) -> Tuple[int, int, int]:
    best = None
    for r, row in rows.items():
        for c, v in row.items():
            a = abs(v)
            if best is None or a < best[0]:
                best = (a, r, c)
                if a == 1:
                    return best
    return best


def _general_phase(rows: Rows, cols: Cols) -> List[int]:
    """Diagonalise what is left; returns the absolute diagonal entries."""
    diag = []
    for c in [c for c, rs in cols.items() if not rs]:
        del cols[c]
    while rows:
        _, r, c = _smallest_entry(rows)
        while True:
            p = rows[r][c]
            clean = True
            # row operations clear column c below/above the pivot
            for r2 in list(cols[c]):
                if r2 == r:
                    continue
                row2 = rows[r2]
                qt = row2[c] // p
                prow = rows[r]
                for c2, v in prow.items():
                    nv = row2.get(c2, 0) - qt * v
                    if nv:
                        if c2 not in row2:
                            cols[c2].add(r2)
                        row2[c2] = nv
                    elif c2 in row2:
                        del row2[c2]
                        cols[c2].discard(r2)
                if c in row2:
                    clean = False
                if not row2:
                    del rows[r2]
            # column operations clear row r
            prow = rows[r]
            pcol = [(r2, rows[r2][c]) for r2 in cols[c]]
            for c2 in [x for x in prow if x != c]:
                qt = prow[c2] // p
                if not qt:
                    clean = False
                    continue
                for r2, w in pcol:
                    row2 = rows[r2]
                    nv = row2.get(c2, 0) - qt * w
                    if nv:
                        if c2 not in row2:
                            cols[c2].add(r2)
                        row2[c2] = nv
                    elif c2 in row2:
                        del row2[c2]
                        cols[c2].discard(r2)
                if c2 in prow:
                    clean = False
            if clean and len(cols[c]) == 1 and len(rows[r]) == 1:
                break
            # a nonzero remainder is smaller than |p|; move the pivot there
            cand = [(abs(rows[r][c2]), r, c2) for c2 in rows[r] if c2 != c]
            cand += [(abs(rows[r2][c]), r2, c) for r2 in cols[c] if r2 != r]
            if cand:
                a, r_new, c_new = min(cand)
                if a < abs(p):
                    r, c = r_new, c_new
        diag.append(abs(rows[r][c]))
        del rows[r]
        del cols[c]
        for c2 in [c2 for c2, rs in cols.items() if not rs]:
            del cols[c2]
    return diag


def invariant_factors_of_diagonal(diag) -> List[int]:
    """Invariant factors of ``diag(d_1, ..., d_r)`` with every d_i > 0."""
    d = sorted(diag)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            if d[j] % d[i]:
                g = gcd(d[i], d[j])
                d[i], d[j] = g, d[i] // g * d[j]
    return d


def smith_normal_form(m: SparseIntMatrix) -> SNFResult:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` of ``m``.

    >>> smith_normal_form(SparseIntMatrix.from_dense([[2, 4], [6, 8]])).invariant_factors
    (2, 4)
    """
    rows, cols = _split(m)
    units = _unit_phase(rows, cols)
    rest = invariant_factors_of_diagonal(_general_phase(rows, cols))
    return SNFResult(tuple([1] * units + rest), m.shape)


def rational_rank(m: SparseIntMatrix) -> int:
    """Rank of ``m`` over the rationals, computed without fractions."""
    rows, cols = _split(m)
    heap = [(len(rs), c) for c, rs in cols.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        cnt, c = heapq.heappop(heap)
        rs = cols.get(c)
        if rs is None or len(rs) != cnt:
            continue
        if cnt == 0:
            del cols[c]
            continue
        # prefer a unit pivot, then the smallest entry, then the shortest row
        r = min(rs, key=lambda r: (abs(rows[r][c]) != 1, len(rows[r]), abs(rows[r][c])))
        for c2 in _eliminate(rows, cols, r, c, scaled=True):
            rs2 = cols[c2]
            if rs2:
                heapq.heappush(heap, (len(rs2), c2))
            else:
                del cols[c2]
        rank += 1
    return rank

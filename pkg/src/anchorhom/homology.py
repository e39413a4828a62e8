"""Integer homology of chain complexes, and the closed Betti formula on cycles."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .combinatorics import binomial
from .complex import ChainComplex
from .errors import IntegrityError, InvalidParameterError
from .euler import euler_cycle_generalized
from .smith import SNFResult, rational_rank, smith_normal_form


@dataclass
class HomologyResult:
    """Per-dimension Betti numbers and torsion coefficients, dimensions ``0..top``."""

    betti: List[int]
    torsion: List[Tuple[int, ...]]
    chain_ranks: List[int] = field(default_factory=list)
    boundary_ranks: Dict[int, int] = field(default_factory=dict)

    @property
    def torsion_free(self) -> bool:
        return not any(self.torsion)

    def betti_at(self, i: int) -> int:
        return self.betti[i] if 0 <= i < len(self.betti) else 0

    def support(self) -> List[int]:
        """Dimensions with nonzero homology."""
        return [i for i in range(len(self.betti)) if self.betti[i] or self.torsion[i]]

    def group_str(self, i: int) -> str:
        parts = []
        b = self.betti_at(i)
        if b:
            parts.append("Z" if b == 1 else f"Z^{b}")
        if 0 <= i < len(self.torsion):
            parts += [f"Z/{t}" for t in self.torsion[i]]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
            "chain_ranks": list(self.chain_ranks),
        }


def homology(c: ChainComplex, torsion: bool = True, cross_check: bool = False) -> HomologyResult:
    """Homology of ``c`` over Z.

    With ``torsion=True`` every boundary matrix goes through Smith normal
    form; otherwise only rational ranks are computed and torsion is reported
    empty.  ``cross_check`` runs both and raises on any rank disagreement.
    The complex is checked for ``∂∂ = 0`` first.
    """
    c.check_dd()
    top = c.top
    ranks: Dict[int, int] = {}
    tors: Dict[int, Tuple[int, ...]] = {}
    for d in range(1, top + 1):
        m = c.boundary(d)
        if torsion:
            snf: SNFResult = smith_normal_form(m)
            ranks[d] = snf.rank
            tors[d] = snf.torsion
            if cross_check:
                rr = rational_rank(m)
                if rr != snf.rank:
                    raise IntegrityError(f"D_{d}: SNF rank {snf.rank} != rational rank {rr}")
        else:
            ranks[d] = rational_rank(m)
    betti = []
    torsion_out = []
    for d in range(top + 1):
        betti.append(c.rank(d) - ranks.get(d, 0) - ranks.get(d + 1, 0))
        torsion_out.append(tors.get(d + 1, ()))
    return HomologyResult(betti, torsion_out, c.ranks(), ranks)


def euler_poincare(h: HomologyResult) -> int:
    """Alternating sum of Betti numbers (torsion does not contribute)."""
    return sum((-1) ** i * b for i, b in enumerate(h.betti))


def betti_closed_form(k: int, n: int, q: int) -> List[int]:
    """Betti numbers of ``Ω(k, n, q)`` in dimensions ``0..n-q``.

    Below the top they are binomials ``C(n, i)``; the top one follows from
    the closed Euler characteristic.
    """
    if not 1 <= q <= k or n < q:
        raise InvalidParameterError(f"need 1 <= q <= k and n >= q, got k={k}, n={n}, q={q}")
    top = n - q
    betti = [binomial(n, i) for i in range(top)]
    chi = euler_cycle_generalized(k, n, q).chi
    lower = sum((-1) ** i * b for i, b in enumerate(betti))
    betti.append((-1) ** top * (chi - lower))
    return betti

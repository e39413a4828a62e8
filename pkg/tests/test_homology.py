from math import comb

import pytest

from anchorhom.complex import ChainComplex, build_complex, quotient_complex
from anchorhom.errors import IntegrityError, InvalidParameterError
from anchorhom.homology import betti_closed_form, euler_poincare, homology
from anchorhom.sparse import SparseIntMatrix


def test_circle():
    h = homology(build_complex(3, 1, None, 0))
    assert h.betti == [1, 1] and h.torsion_free
    assert [h.group_str(i) for i in range(2)] == ["Z", "Z"]


@pytest.mark.parametrize("k, n", [(2, 1), (2, 3), (3, 2), (4, 2), (3, 3)])
def test_torus(k, n):
    h = homology(build_complex(k, n, None, 0))
    assert h.betti == [comb(n, i) for i in range(n + 1)]
    assert h.torsion_free
    assert euler_poincare(h) == 0


def test_proper_subset_q0():
    h = homology(build_complex(3, 2, (0,), 0))
    assert h.betti == [0, 0, 4]
    assert h.support() == [2]
    assert h.group_str(2) == "Z^4"


def test_betti_closed_form_examples():
    assert betti_closed_form(3, 3, 1) == [1, 3, 29]
    assert betti_closed_form(2, 2, 2) == [2]
    assert betti_closed_form(4, 5, 1) == [1, 5, 10, 10, 1028]
    with pytest.raises(InvalidParameterError):
        betti_closed_form(3, 3, 0)
    with pytest.raises(InvalidParameterError):
        betti_closed_form(3, 1, 2)


def test_spot_values_from_snf():
    h = homology(build_complex(3, 3, None, 1))
    assert h.betti == [1, 3, 29]
    assert h.betti_at(3) == 0 and h.betti_at(-1) == 0
    h = homology(build_complex(2, 2, None, 2))
    assert h.betti == [2] and euler_poincare(h) == 2


def test_paths_agree():
    for k, n, q in [(3, 3, 1), (4, 3, 2), (2, 4, 1), (3, 4, 3)]:
        c = build_complex(k, n, None, q)
        snf_path = homology(c, cross_check=True)
        rank_path = homology(c, torsion=False)
        assert snf_path.betti == rank_path.betti == betti_closed_form(k, n, q)
        assert euler_poincare(snf_path) == c.euler_characteristic()


def hand_complex(d1, d2=None):
    """A ChainComplex whose matrices are set by hand; bases are placeholders."""
    n = 1 if d2 is None else 2
    c = ChainComplex(2, n, frozenset({0, 1}), 0)
    c.bases[0] = [(i,) * n for i in range(d1.rows)]
    c.bases[1] = [(2 + i,) * n for i in range(d1.cols)]
    c.boundaries[1] = d1
    if d2 is not None:
        c.bases[2] = [(3, 3)] * d2.cols
        c.boundaries[2] = d2
    return c


def test_torsion_is_reported():
    c = hand_complex(SparseIntMatrix.from_dense([[2]]))
    h = homology(c)
    assert h.betti == [0, 0]
    assert h.torsion == [(2,), ()]
    assert h.group_str(0) == "Z/2" and not h.torsion_free


def test_integrity_error():
    d1 = SparseIntMatrix.from_dense([[1, 1]])
    d2 = SparseIntMatrix.from_dense([[1], [0]])
    with pytest.raises(IntegrityError):
        homology(hand_complex(d1, d2))


def test_quotient_equals_sum_of_pieces():
    qc = quotient_complex(3, 3, None, 2)
    hq = homology(qc)
    pieces = [homology(build_complex(3, 3, (v,), 1)) for v in range(3)]
    assert hq.betti == [sum(p.betti_at(i) for p in pieces) for i in range(len(hq.betti))]

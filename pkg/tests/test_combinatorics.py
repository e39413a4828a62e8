import pytest
from hypothesis import given, strategies as st

from anchorhom.combinatorics import binomial, pow_conv, stirling2
from anchorhom.errors import InvalidParameterError


def set_partitions(items):
    """All set partitions of ``items`` (list of blocks)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def brute_stirling(a, b):
    return sum(1 for p in set_partitions(list(range(a))) if len(p) == b)


def pascal(a, b):
    row = [1]
    for _ in range(a):
        row = [x + y for x, y in zip([0] + row, row + [0])]
    return row[b] if 0 <= b <= a else 0


def test_stirling_4_2_by_enumeration():
    assert brute_stirling(4, 2) == 7
    assert stirling2(4, 2) == 7


@pytest.mark.parametrize("a", range(0, 8))
def test_stirling_matches_enumeration(a):
    for b in range(0, a + 2):
        assert stirling2(a, b) == brute_stirling(a, b)


def test_stirling_edge_values():
    assert stirling2(0, 0) == 1
    assert stirling2(5, 0) == 0
    assert stirling2(3, 5) == 0
    assert stirling2(3, 3) == 1
    assert all(stirling2(n, 1) == 1 for n in range(1, 20))


def test_stirling_rejects_negative():
    with pytest.raises(InvalidParameterError):
        stirling2(-1, 0)
    with pytest.raises(InvalidParameterError):
        stirling2(2, -1)


def test_stirling_recurrence_table():
    table = {(0, 0): 1}
    for a in range(1, 13):
        for b in range(0, a + 1):
            table[a, b] = b * table.get((a - 1, b), 0) + table.get((a - 1, b - 1), 0)
    for a in range(1, 13):
        for b in range(1, a + 1):
            assert stirling2(a, b) == b * stirling2(a - 1, b) + stirling2(a - 1, b - 1)
            assert stirling2(a, b) == table[a, b]


def test_surjection_identity():
    from math import factorial

    for a in range(0, 9):
        for x in range(0, 7):
            total = sum(factorial(b) * stirling2(a, b) * binomial(x, b) for b in range(0, a + 1))
            assert total == x**a


def test_stirling_is_big():
    # S(60, 30) overflows 64-bit; exactness comes from Python ints
    assert stirling2(60, 30) > 2**63
    assert stirling2(60, 30) == 30 * stirling2(59, 30) + stirling2(59, 29)


def test_binomial_examples():
    assert pascal(5, 2) == 10
    assert binomial(5, 2) == 10
    assert binomial(7, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    with pytest.raises(InvalidParameterError):
        binomial(-2, 1)


@given(st.integers(0, 40), st.integers(-3, 45))
def test_binomial_symmetry_and_pascal(a, b):
    assert binomial(a, b) == pascal(a, b)
    if 0 <= b <= a:
        assert binomial(a, b) == binomial(a, a - b)


def test_pow_conv():
    assert pow_conv(0, 0) == 1
    assert pow_conv(0, 3) == 0
    assert pow_conv(2, 10) == 1024
    assert pow_conv(5, 0) == 1


def test_stirling_threaded_growth():
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(4) as pool:
        vals = list(pool.map(lambda a: stirling2(a, a // 2), range(80, 120)))
    assert vals == [stirling2(a, a // 2) for a in range(80, 120)]

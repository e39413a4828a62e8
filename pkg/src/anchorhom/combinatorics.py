"""Exact integer combinatorics: binomials, Stirling numbers, powers.

Everything here works on Python ints, so there is no overflow and no
floating point.
"""

import math
import threading

from .errors import InvalidParameterError

# _stirling_rows[a][b] == S(a, b); grown on demand under the lock.
_stirling_rows = [[1]]
_stirling_lock = threading.Lock()


def _grow_stirling(a):
    with _stirling_lock:
        rows = _stirling_rows
        while len(rows) <= a:
            prev = rows[-1]
            m = len(rows)
            row = [0] * (m + 1)
            for b in range(1, m + 1):
                above = prev[b] if b < m else 0
                row[b] = b * above + prev[b - 1]
            rows.append(row)


def stirling2(a: int, b: int) -> int:
    """Number of partitions of an ``a``-set into ``b`` nonempty blocks.

    >>> stirling2(4, 2)
    7
    >>> stirling2(0, 0), stirling2(3, 0), stirling2(2, 5)
    (1, 0, 0)
    """
    if a < 0 or b < 0:
        raise InvalidParameterError(f"stirling2 needs a, b >= 0, got ({a}, {b})")
    if b > a:
        return 0
    if len(_stirling_rows) <= a:
        _grow_stirling(a)
    return _stirling_rows[a][b]


def binomial(a: int, b: int) -> int:
    """C(a, b), zero when ``b < 0`` or ``b > a``."""
    if a < 0:
        raise InvalidParameterError(f"binomial needs a >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def pow_conv(base: int, exp: int) -> int:
    """``base ** exp`` with 0**0 == 1 and 0**t == 0 for t > 0."""
    if exp < 0:
        raise InvalidParameterError(f"pow_conv needs exp >= 0, got {exp}")
    if exp == 0:
        return 1
    if base == 0:
        return 0
    return base**exp


def factorial(a: int) -> int:
    if a < 0:
        raise InvalidParameterError(f"factorial needs a >= 0, got {a}")
    return math.factorial(a)


def surjections(a: int, b: int) -> int:
    """Number of surjections from an ``a``-set onto a ``b``-set, b! S(a, b)."""
    return factorial(b) * stirling2(a, b)

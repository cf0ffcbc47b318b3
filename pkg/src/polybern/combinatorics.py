"""Exact integer combinatorics: Stirling triangles, binomials, factorials.

All values are plain Python ints (arbitrary precision), so everything here
is exact at any index reachable in practice.  The two Stirling triangles are
memoized for the process lifetime and grown on demand; growth is guarded by
a lock so concurrent readers always see a consistent triangle.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial


class StirlingTable:
    """Memoized triangle of (unsigned) Stirling numbers of one kind.

    rows[n][m] holds the value for 0 <= m <= n.  The first kind satisfies
    rows[n+1][m] = rows[n][m-1] + n*rows[n][m], the second kind
    rows[n+1][m] = rows[n][m-1] + m*rows[n][m], both with rows[0][0] = 1.
    """

    def __init__(self, kind: str):
        if kind not in ("first", "second"):
            raise ValueError(f"unknown Stirling kind: {kind!r}")
        self.kind = kind
        self._rows = [[1]]
        self._lock = threading.Lock()

    def _grow(self, n: int) -> None:
        # Double the capacity so repeated nearby queries stay amortized cheap.
        target = max(n, 2 * (len(self._rows) - 1))
        first = self.kind == "first"
        while len(self._rows) <= target:
            prev = self._rows[-1]
            k = len(prev)  # building row index k from row k-1
            row = [0] * (k + 1)
            for m in range(1, k + 1):
                above = prev[m] if m < k else 0
                row[m] = prev[m - 1] + (k - 1 if first else m) * above
            self._rows.append(row)

    def value(self, n: int, m: int) -> int:
        if n < 0 or m < 0:
            raise ValueError("Stirling indices must be non-negative")
        if m > n:
            return 0
        if n >= len(self._rows):
            with self._lock:
                if n >= len(self._rows):
                    self._grow(n)
        return self._rows[n][m]

    def row(self, n: int) -> list[int]:
        self.value(n, 0)  # force growth
        return list(self._rows[n])


_FIRST = StirlingTable("first")
_SECOND = StirlingTable("second")


def stirling_first(n: int, m: int) -> int:
    """Unsigned Stirling number of the first kind [n m]; 0 when m > n."""
    return _FIRST.value(n, m)


def stirling_second(n: int, m: int) -> int:
    """Stirling number of the second kind {n m}; 0 when m > n."""
    return _SECOND.value(n, m)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n, k >= 0; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    return comb(n, k)


def rising_factorial(x, n: int):
    """(x)_n = x (x+1) ... (x+n-1); the empty product for n = 0.

    Accepts int or Fraction and returns the same flavour of exact number.
    Equals sum_j stirling_first(n, j) * x**j.
    """
    if n < 0:
        raise ValueError("rising factorial length must be non-negative")
    result = x - x + 1  # one of the same numeric type as x
    for i in range(n):
        result *= x + i
    return result


def orthogonality_check(n: int, m: int) -> int:
    """sum_{l=0}^{n} (-1)^l [n l] {l m}, which contracts to (-1)^n delta_{m,n}."""
    if n < 0 or m < 0:
        raise ValueError("indices must be non-negative")
    total = 0
    for l in range(n + 1):
        s1 = stirling_first(n, l)
        if s1:
            total += (-1) ** l * s1 * stirling_second(l, m)
    return total


def format_rational(value) -> str:
    """Render an exact number as 'p/q' in lowest terms, or 'p' for integers."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


__all__ = [
    "StirlingTable",
    "stirling_first",
    "stirling_second",
    "binomial",
    "factorial",
    "rising_factorial",
    "orthogonality_check",
    "format_rational",
]

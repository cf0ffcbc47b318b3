"""Truncated formal power series over exact rationals, in one and two variables.

Coefficients are exact numbers (int or Fraction); exponents above the
truncation order are discarded, never approximated.  Series1 is dense in a
single variable.  Series2 truncates by TOTAL degree: coefficients are kept
for exponent pairs (i, j) with i + j <= order, stored as a triangular table.

Every operation returns a fresh series (pure value semantics).  Binary
operations truncate the result to the smaller operand order.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

_SCALARS = (int, Fraction)


class DomainError(ValueError):
    """An operand violates a series-domain precondition (e.g. constant term)."""


def _as_scalar(value):
    if isinstance(value, _SCALARS):
        return value
    return NotImplemented


class Series1:
    """sum(c[i] * x**i for i <= order), coefficients exact."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            if not coeffs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(coeffs) < order + 1:
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.order = order
        self.coeffs = tuple(coeffs[: order + 1])

    @classmethod
    def zero(cls, order: int) -> "Series1":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "Series1":
        return cls([1], order)

    @classmethod
    def constant(cls, value, order: int) -> "Series1":
        return cls([value], order)

    @classmethod
    def monomial(cls, coeff, exponent: int, order: int) -> "Series1":
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(c, order)

    @classmethod
    def variable(cls, order: int) -> "Series1":
        return cls.monomial(1, 1, order)

    @property
    def constant_term(self):
        return self.coeffs[0]

    def __getitem__(self, exponent: int):
        if not 0 <= exponent <= self.order:
            raise IndexError(f"exponent {exponent} beyond truncation order {self.order}")
        return self.coeffs[exponent]

    def truncate(self, order: int) -> "Series1":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series1(self.coeffs[: order + 1], order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series1):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.order, tuple(Fraction(c) for c in self.coeffs)))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order >= 6 else ""
        return f"Series1(order={self.order}, [{head}{tail}])"

    def __add__(self, other) -> "Series1":
        if isinstance(other, Series1):
            n = min(self.order, other.order)
            return Series1([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)
        if (s := _as_scalar(other)) is NotImplemented:
            return NotImplemented
        c = list(self.coeffs)
        c[0] += s
        return Series1(c, self.order)

    __radd__ = __add__

    def __sub__(self, other) -> "Series1":
        return self + (-other)

    def __rsub__(self, other) -> "Series1":
        return (-self) + other

    def __neg__(self) -> "Series1":
        return Series1([-c for c in self.coeffs], self.order)

    def __mul__(self, other) -> "Series1":
        if isinstance(other, Series1):
            n = min(self.order, other.order)
            out = [0] * (n + 1)
            for i, a in enumerate(self.coeffs[: n + 1]):
                if not a:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return Series1(out, n)
        if (s := _as_scalar(other)) is NotImplemented:
            return NotImplemented
        return Series1([c * s for c in self.coeffs], self.order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Series1":
        return self.power(exponent)

    def power(self, exponent: int) -> "Series1":
        """self**exponent by repeated squaring; negative exponents via inverse."""
        if exponent < 0:
            return self.inverse().power(-exponent)
        result = Series1.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "Series1":
        """Multiplicative inverse; requires a nonzero constant term."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise DomainError("cannot invert a series with zero constant term")
        inv0 = Fraction(1, 1) / a0
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                ak = self.coeffs[k]
                if ak:
                    acc += ak * out[n - k]
            out.append(-inv0 * acc)
        return Series1(out, self.order)

    def exp(self) -> "Series1":
        """exp(self) via the recurrence f' = a'*f; needs zero constant term."""
        if self.coeffs[0] != 0:
            raise DomainError("exp needs a zero constant term")
        out = [Fraction(1)]
        for n in range(self.order):
            acc = 0
            for k in range(n + 1):
                a = self.coeffs[k + 1]
                if a:
                    acc += (k + 1) * a * out[n - k]
            out.append(Fraction(acc, n + 1) if isinstance(acc, int) else acc / (n + 1))
        return Series1(out, self.order)

    def derivative(self) -> "Series1":
        """Formal derivative; the order drops by one (floored at zero)."""
        if self.order == 0:
            return Series1.zero(0)
        return Series1(
            [(i + 1) * self.coeffs[i + 1] for i in range(self.order)], self.order - 1
        )

    def compose(self, inner: "Series1") -> "Series1":
        """self(inner) by Horner evaluation; inner needs zero constant term."""
        if inner.coeffs[0] != 0:
            raise DomainError("composition needs an inner series with zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = Series1.constant(self.coeffs[n], n)
        for k in range(n - 1, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return acc

    def mobius_substitution(self, c) -> "Series1":
        """Substitute x -> x/(1 - c*x), i.e. compose with sum_{j>=1} c^(j-1) x^j."""
        coeffs = [0] * (self.order + 1)
        power = 1
        for j in range(1, self.order + 1):
            coeffs[j] = power
            power *= c
        return self.compose(Series1(coeffs, self.order))


class Series2:
    """Bivariate truncation by total degree: coeffs[i][j] kept for i + j <= order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        rows = []
        for i in range(order + 1):
            width = order - i + 1
            row = list(coeffs[i]) if i < len(coeffs) else []
            if len(row) < width:
                row.extend([0] * (width - len(row)))
            rows.append(tuple(row[:width]))
        self.order = order
        self.coeffs = tuple(rows)

    @classmethod
    def zero(cls, order: int) -> "Series2":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "Series2":
        return cls([[1]], order)

    @classmethod
    def constant(cls, value, order: int) -> "Series2":
        return cls([[value]], order)

    @classmethod
    def variable(cls, index: int, order: int) -> "Series2":
        """The coordinate series: index 0 is the first variable, 1 the second."""
        if index == 0:
            return cls([[0], [1]], order) if order >= 1 else cls.zero(order)
        if index == 1:
            return cls([[0, 1]], order) if order >= 1 else cls.zero(order)
        raise ValueError("variable index must be 0 or 1")

    @classmethod
    def embed(cls, series: Series1, index: int, order: int | None = None) -> "Series2":
        """Lift a univariate series into variable 0 or 1 of a bivariate ring."""
        if order is None:
            order = series.order
        if order > series.order:
            raise ValueError("cannot extend a truncated series")
        if index == 0:
            return cls([[series.coeffs[i]] for i in range(order + 1)], order)
        if index == 1:
            return cls([series.coeffs[: order + 1]], order)
        raise ValueError("variable index must be 0 or 1")

    @property
    def constant_term(self):
        return self.coeffs[0][0]

    def __getitem__(self, exponents):
        i, j = exponents
        if i < 0 or j < 0 or i + j > self.order:
            raise IndexError(
                f"exponent pair ({i}, {j}) beyond truncation order {self.order}"
            )
        return self.coeffs[i][j]

    def truncate(self, order: int) -> "Series2":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series2([row[: order - i + 1] for i, row in enumerate(self.coeffs[: order + 1])], order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series2):
            return NotImplemented
        return self.order == other.order and all(
            a == b
            for ra, rb in zip(self.coeffs, other.coeffs)
            for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash((self.order, tuple(tuple(map(Fraction, r)) for r in self.coeffs)))

    def __repr__(self) -> str:
        return f"Series2(order={self.order}, constant={self.coeffs[0][0]})"

    def __add__(self, other) -> "Series2":
        if isinstance(other, Series2):
            n = min(self.order, other.order)
            return Series2(
                [
                    [self.coeffs[i][j] + other.coeffs[i][j] for j in range(n - i + 1)]
                    for i in range(n + 1)
                ],
                n,
            )
        if (s := _as_scalar(other)) is NotImplemented:
            return NotImplemented
        rows = [list(r) for r in self.coeffs]
        rows[0][0] += s
        return Series2(rows, self.order)

    __radd__ = __add__

    def __sub__(self, other) -> "Series2":
        return self + (-other)

    def __rsub__(self, other) -> "Series2":
        return (-self) + other

    def __neg__(self) -> "Series2":
        return Series2([[-c for c in row] for row in self.coeffs], self.order)

    def __mul__(self, other) -> "Series2":
        if isinstance(other, Series2):
            n = min(self.order, other.order)
            rows = [[0] * (n - i + 1) for i in range(n + 1)]
            for i1 in range(n + 1):
                row_a = self.coeffs[i1]
                for j1 in range(n - i1 + 1):
                    a = row_a[j1]
                    if not a:
                        continue
                    for i2 in range(n - i1 - j1 + 1):
                        row_b = other.coeffs[i2]
                        out = rows[i1 + i2]
                        for j2 in range(n - i1 - j1 - i2 + 1):
                            b = row_b[j2]
                            if b:
                                out[j1 + j2] += a * b
            return Series2(rows, n)
        if (s := _as_scalar(other)) is NotImplemented:
            return NotImplemented
        return Series2([[c * s for c in row] for row in self.coeffs], self.order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Series2":
        return self.power(exponent)

    def power(self, exponent: int) -> "Series2":
        if exponent < 0:
            return self.inverse().power(-exponent)
        result = Series2.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "Series2":
        """Inverse via the truncated geometric series in (1 - self/a0)."""
        a0 = self.coeffs[0][0]
        if a0 == 0:
            raise DomainError("cannot invert a series with zero constant term")
        inv0 = Fraction(1, 1) / a0
        r = Series2.one(self.order) - self * inv0  # zero constant term
        acc = Series2.one(self.order)
        for _ in range(self.order):
            acc = acc * r + 1
        return acc * inv0

    def exp(self) -> "Series2":
        """exp(self) as the truncated Taylor sum; needs zero constant term."""
        if self.coeffs[0][0] != 0:
            raise DomainError("exp needs a zero constant term")
        acc = Series2.one(self.order)
        term = Series2.one(self.order)
        for i in range(1, self.order + 1):
            term = term * self
            acc = acc + term * Fraction(1, factorial(i))
        return acc

    def derivative(self, index: int) -> "Series2":
        """Partial derivative in variable 0 or 1; the order drops by one."""
        if self.order == 0:
            return Series2.zero(0)
        n = self.order - 1
        if index == 0:
            rows = [
                [(i + 1) * self.coeffs[i + 1][j] for j in range(n - i + 1)]
                for i in range(n + 1)
            ]
        elif index == 1:
            rows = [
                [(j + 1) * self.coeffs[i][j + 1] for j in range(n - i + 1)]
                for i in range(n + 1)
            ]
        else:
            raise ValueError("variable index must be 0 or 1")
        return Series2(rows, n)


def product_xy(sx: Series1, sy: Series1, order: int | None = None) -> Series2:
    """The separable product sx(x) * sy(y) as a bivariate series."""
    if order is None:
        order = min(sx.order, sy.order)
    rows = [
        [sx.coeffs[i] * sy.coeffs[j] for j in range(order - i + 1)]
        for i in range(order + 1)
    ]
    return Series2(rows, order)


def polylog_substitute(k: int, inner):
    """sum_{m=1}^{order} inner**m / m**k, exact for every integer k.

    Only finitely many powers contribute because inner must have zero
    constant term; works for Series1 and Series2 alike.
    """
    if inner.constant_term != 0:
        raise DomainError("polylog substitution needs a zero constant term")
    acc = inner * 0
    power = None
    for m in range(1, inner.order + 1):
        power = inner if power is None else power * inner
        acc = acc + power * Fraction(m) ** (-k)
    return acc


def egf_coefficient(series, exponents):
    """Coefficient times the factorial(s) of the exponent(s): EGF-normalized value."""
    if isinstance(series, Series1):
        n = exponents
        return series[n] * factorial(n)
    i, j = exponents
    return series[i, j] * factorial(i) * factorial(j)


__all__ = [
    "DomainError",
    "Series1",
    "Series2",
    "product_xy",
    "polylog_substitute",
    "egf_coefficient",
]

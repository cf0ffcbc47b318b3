"""Mechanical verification of the library's identity inventory.

Each ``verify_*`` function checks one identity family coefficient-by-
coefficient (or value-by-value) over exact rationals and returns a
:class:`VerificationReport`.  Checks stop at the first failing equality,
reported with its lexicographically-least location.

Every verifier accepts a keyword-only ``mutate_at`` fault-injection hook:
passing the location tuple of one checked equality adds 1 to that
left-hand side, which must flip the report to failed.  The test-suite
uses this to prove the checks are actually sensitive to every compared
coefficient family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Callable, Iterable, Iterator, Optional

from .combinatorics import binomial, format_rational, stirling_first, stirling_second
from .polybernoulli import (
    bernoulli,
    genocchi,
    poly_bernoulli_B,
    poly_bernoulli_C,
    script_B_closed,
    script_B_def,
)
from .series import DomainError, Series1, Series2, egf_coefficient, product_xy


class ParameterError(ValueError):
    """A verification was requested with out-of-contract parameters."""


Location = tuple
CheckPair = tuple  # (location, lhs, rhs)


@dataclass(frozen=True)
class Counterexample:
    location: Location
    lhs: object
    rhs: object


@dataclass(frozen=True)
class VerificationReport:
    identity_id: str
    parameters: dict
    passed: bool
    counterexample: Optional[Counterexample]
    checked_count: int


def _run_pairs(
    identity_id: str,
    parameters: dict,
    pairs: Iterable[CheckPair],
    mutate_at: Optional[Location],
) -> VerificationReport:
    checked = 0
    for location, lhs, rhs in pairs:
        if mutate_at is not None and location == mutate_at:
            lhs = lhs + 1
        checked += 1
        if lhs != rhs:
            return VerificationReport(
                identity_id, parameters, False, Counterexample(location, lhs, rhs), checked
            )
    if checked == 0:
        raise ParameterError(f"{identity_id}: empty check range")
    return VerificationReport(identity_id, parameters, True, None, checked)


def _require_index(name: str, value, minimum: int = 0) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ParameterError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value


# ---------------------------------------------------------------------------
# Shared series builders.  All are pure; the bivariate ones are cached since
# several verifiers reuse the same expansions.


@cache
def _exp_t(order: int) -> Series1:
    return Series1.variable(order).exp()


@cache
def denominator_series(order: int) -> Series2:
    """e^x + e^y - e^{x+y} as a bivariate series (constant term 1)."""
    ex = _exp_t(order)
    return Series2.embed(ex, 0) + Series2.embed(ex, 1) - product_xy(ex, ex)


@cache
def egf_closed_form(n: int, order: int) -> Series2:
    """n! * e^{x+y} / (e^x + e^y - e^{x+y})^{n+1}, truncated at total degree."""
    ex = _exp_t(order)
    numerator = product_xy(ex, ex) * factorial(n)
    return numerator * denominator_series(order).power(-(n + 1))


def q_series(j: int, order: int, route: str = "rational") -> Series1:
    """Q_j(X) = X^j / prod_{v=1..j+1}(1 - vX) = sum_{l>=j} {l+1 brace j+1} X^l."""
    if route == "stirling":
        return Series1([stirling_second(l + 1, j + 1) for l in range(order + 1)], order)
    if route != "rational":
        raise ParameterError(f"route must be 'rational' or 'stirling', got {route!r}")
    if j > order:
        return Series1.zero(order)
    denom = Series1.one(order)
    for v in range(1, j + 2):
        denom = denom * Series1([1, -v], order)
    return Series1.monomial(1, j, order) * denom.inverse()


def ogf_series(n: int, order: int, route: str = "rational") -> Series2:
    """sum_j j!(j+n)! Q_j(x) Q_j(y) with ordinary (non-EGF) coefficients."""
    acc = Series2.zero(order)
    for j in range(order + 1):
        qj = q_series(j, order, route)
        acc = acc + product_xy(qj, qj) * (factorial(j) * factorial(j + n))
    return acc


@cache
def kernel_series(order: int) -> Series2:
    """e^u / (1 - e^u (1 - e^t)) in variables (u, t); the denominator is a unit."""
    eu = Series2.embed(_exp_t(order), 0, order)
    et = Series2.embed(_exp_t(order), 1, order)
    return eu * (1 - eu * (1 - et)).inverse()


def kernel_family(n: int, order: int) -> Series2:
    """e^{nt} * sum_j [n j] d^j/du^j of the kernel, built from the definition."""
    deriv = kernel_series(order + n)
    acc = Series2.zero(order)
    for j in range(n + 1):
        if j:
            deriv = deriv.derivative(0)
        acc = acc + deriv.truncate(order) * stirling_first(n, j)
    exp_nt = Series2.embed((Series1.variable(order) * n).exp(), 1, order)
    return exp_nt * acc


def kernel_family_closed(n: int, order: int) -> Series2:
    """e^{-nu} * sum_{m>=1} ((m+n-1)!/(m-1)!) e^{-mt} (1-e^{-u})^{m-1}.

    The m-th term has u-valuation m-1, so the sum truncates exactly at
    m = order + 1 for a total-degree-``order`` comparison.
    """
    e_neg = (-Series1.variable(order)).exp()
    one_minus = 1 - e_neg
    acc = Series2.zero(order)
    u_pow = Series1.one(order)
    t_pow = Series1.one(order)
    for m in range(1, order + 2):
        t_pow = t_pow * e_neg
        if m > 1:
            u_pow = u_pow * one_minus
        weight = 1
        for i in range(n):
            weight *= m + i
        acc = acc + product_xy(u_pow, t_pow) * weight
    exp_neg_nu = Series2.embed((Series1.variable(order) * (-n)).exp(), 0, order)
    return exp_neg_nu * acc


def _exp_shift_power(a: int, r: int, order: int) -> Series1:
    """e^{at} (e^t - 1)^r / r! as a univariate series in t."""
    t = Series1.variable(order)
    return (t * a).exp() * (_exp_t(order) - 1).power(r) * Fraction(1, factorial(r))


def beta1_series(order: int) -> Series1:
    """sum_n B_n x^{n+1} — the shifted ordinary generating function."""
    return Series1([0] + [bernoulli(n) for n in range(order)], order)


def g1_series(order: int) -> Series1:
    """sum_n (2^{n+1} - 2) B_n x^{n+1}; equals -sum_n G_n x^{n+1}."""
    return Series1([0] + [(2 ** (n + 1) - 2) * bernoulli(n) for n in range(order)], order)


def g1_inhomogeneity(order: int) -> Series1:
    """2x^3 (x - 2) / (1 - x)^2, which expands as -2 sum_{m>=2} m x^{m+1}."""
    return Series1([0, 0, 0, -4, 2], order) * Series1([1, -1], order).power(-2)


def f1_term(j: int, order: int) -> Series1:
    """a_j(x) = (-1)^j j!(j+1)! x^{2j+2} / prod_{v=1..j+1}(1-vx)(1+vx)."""
    if 2 * j + 2 > order:
        return Series1.zero(order)
    denom = Series1.one(order)
    for v in range(1, j + 2):
        denom = denom * Series1([1, 0, -v * v], order)
    lead = (-1) ** j * factorial(j) * factorial(j + 1)
    return Series1.monomial(lead, 2 * j + 2, order) * denom.inverse()


def f1_series(order: int) -> Series1:
    """sum_j a_j(x); only j <= (order-2)/2 contribute below the truncation."""
    acc = Series1.zero(order)
    for j in range(max(order - 2, 0) // 2 + 1):
        acc = acc + f1_term(j, order)
    return acc


def f1_inhomogeneity(order: int) -> Series1:
    """2x^3 (3 - 6x + 2x^2) / ((1-x)^2 (1-2x))."""
    return (
        Series1([0, 0, 0, 6, -12, 4], order)
        * Series1([1, -1], order).power(-2)
        * Series1([1, -2], order).inverse()
    )


def f1_term_at(j: int, x) -> Fraction:
    """a_j evaluated exactly at a rational point; domain-checked."""
    x = Fraction(x)
    value = Fraction((-1) ** j * factorial(j) * factorial(j + 1)) * x ** (2 * j + 2)
    for v in range(1, j + 2):
        lower, upper = 1 - v * x, 1 + v * x
        if lower == 0:
            raise DomainError(f"sample point {x} is a pole of factor {_factor_name(v, '-')}")
        if upper == 0:
            raise DomainError(f"sample point {x} is a pole of factor {_factor_name(v, '+')}")
        value /= lower * upper
    return value


def _factor_name(v: int, sign: str) -> str:
    return f"1{sign}x" if v == 1 else f"1{sign}{v}x"


def _guard_sample_point(x: Fraction, n: int) -> None:
    """Reject the poles {±1/v : v <= n+3} ∪ {1/2, 1} of the remainder identity."""
    if x == 1:
        raise DomainError(f"sample point {x} is a pole of factor 1-x")
    if x == Fraction(1, 2):
        raise DomainError(f"sample point {x} is a pole of factor 1-2x")
    if abs(x.numerator) == 1 and x.denominator <= n + 3:
        sign = "-" if x > 0 else "+"
        raise DomainError(
            f"sample point {x} is a pole of factor {_factor_name(x.denominator, sign)}"
        )


# ---------------------------------------------------------------------------
# Verifiers.


def verify_duality(
    max_l: int = 20, max_m: int = 20, max_n: int = 6, *, mutate_at=None
) -> VerificationReport:
    """script_B_def(m, l, n) = script_B_def(l, m, n) on the full index box."""
    _require_index("max_l", max_l)
    _require_index("max_m", max_m)
    _require_index("max_n", max_n)
    params = {"max_l": max_l, "max_m": max_m, "max_n": max_n}

    def pairs() -> Iterator[CheckPair]:
        for l in range(max_l + 1):
            for m in range(max_m + 1):
                for n in range(max_n + 1):
                    yield (
                        (("l", l), ("m", m), ("n", n)),
                        script_B_def(m, l, n),
                        script_B_def(l, m, n),
                    )

    return _run_pairs("duality", params, pairs(), mutate_at)


def verify_egf(n: int = 4, order: int = 14, *, mutate_at=None) -> VerificationReport:
    """EGF coefficients of n!e^{x+y}/(e^x+e^y-e^{x+y})^{n+1} vs script_B_closed."""
    _require_index("n", n)
    _require_index("order", order, 2)
    params = {"n": n, "order": order}
    series = egf_closed_form(n, order)

    def pairs() -> Iterator[CheckPair]:
        for l in range(order + 1):
            for m in range(order - l + 1):
                yield (
                    (("l", l), ("m", m)),
                    egf_coefficient(series, (l, m)),
                    script_B_closed(m, l, n),
                )

    return _run_pairs("egf", params, pairs(), mutate_at)


def verify_ogf(n: int = 4, order: int = 14, *, mutate_at=None) -> VerificationReport:
    """Ordinary coefficients of sum_j j!(j+n)! Q_j(x)Q_j(y) vs script_B_closed.

    Also pins the two Q_j expansion routes (rational-factor inverses vs the
    Stirling-coefficient identity) against each other, coefficient by
    coefficient, before using the rational route in the double sum.
    """
    _require_index("n", n)
    _require_index("order", order, 1)
    params = {"n": n, "order": order}

    def pairs() -> Iterator[CheckPair]:
        for j in range(order + 1):
            rational = q_series(j, order, "rational")
            stirling = q_series(j, order, "stirling")
            for i in range(order + 1):
                yield (
                    (("part", "q-route"), ("j", j), ("i", i)),
                    rational[i],
                    stirling[i],
                )
        series = ogf_series(n, order, "rational")
        for l in range(order + 1):
            for m in range(order - l + 1):
                yield (
                    (("part", "sum"), ("l", l), ("m", m)),
                    series[l, m],
                    script_B_closed(m, l, n),
                )

    return _run_pairs("ogf", params, pairs(), mutate_at)


def verify_trivariate(order: int = 6, *, mutate_at=None) -> VerificationReport:
    """z-expansion of e^{x+y}/(e^x+e^y-e^{x+y}-z): the coefficient of z^n is
    e^{x+y} D^{-(n+1)}, i.e. the bivariate closed form divided by n!."""
    _require_index("order", order, 1)
    params = {"order": order}

    def pairs() -> Iterator[CheckPair]:
        inverse_d = denominator_series(order).inverse()
        ex = _exp_t(order)
        geometric = product_xy(ex, ex) * inverse_d
        for n in range(order + 1):
            target = egf_closed_form(n, order) * Fraction(1, factorial(n))
            for i in range(order + 1):
                for j in range(order - i + 1):
                    yield (
                        (("n", n), ("i", i), ("j", j)),
                        geometric[i, j],
                        target[i, j],
                    )
            geometric = geometric * inverse_d

    return _run_pairs("trivariate", params, pairs(), mutate_at)


def verify_stirling_expansion(
    n: int = 3, r: int = 6, order: int = 12, *, mutate_at=None
) -> VerificationReport:
    """Two expansions with mixed Stirling weights, valid for r >= n >= 0:

    A:  e^{nt}(e^t-1)^{r-n}/(r-n)!  =  sum_m [sum_i (-1)^{n-i} [n i] {m+i brace r}] t^m/m!
    B:  sum_i {n brace i} e^{it}(e^t-1)^{r-i}/(r-i)!  =  sum_m {m+n brace r} t^m/m!
    """
    _require_index("n", n)
    _require_index("r", r)
    _require_index("order", order, 1)
    if r < n:
        raise ParameterError(f"requires r >= n, got n={n}, r={r}")
    params = {"n": n, "r": r, "order": order}

    def pairs() -> Iterator[CheckPair]:
        lhs_a = _exp_shift_power(n, r - n, order)
        for m in range(order + 1):
            rhs = sum(
                (-1) ** (n - i) * stirling_first(n, i) * stirling_second(m + i, r)
                for i in range(n + 1)
            )
            yield (("part", "A"), ("m", m)), egf_coefficient(lhs_a, m), rhs
        lhs_b = Series1.zero(order)
        for i in range(n + 1):
            lhs_b = lhs_b + _exp_shift_power(i, r - i, order) * stirling_second(n, i)
        for m in range(order + 1):
            yield (
                (("part", "B"), ("m", m)),
                egf_coefficient(lhs_b, m),
                stirling_second(m + n, r),
            )

    return _run_pairs("stirling-expansion", params, pairs(), mutate_at)


def verify_kernel_closed_form(
    n: int = 3, order: int = 10, *, mutate_at=None
) -> VerificationReport:
    """The Stirling-weighted derivative family of e^u/(1-e^u(1-e^t)) equals its
    closed form e^{-nu} sum_m ((m+n-1)!/(m-1)!) e^{-mt} (1-e^{-u})^{m-1}."""
    _require_index("n", n)
    _require_index("order", order, 1)
    params = {"n": n, "order": order}
    definition = kernel_family(n, order)
    closed = kernel_family_closed(n, order)

    def pairs() -> Iterator[CheckPair]:
        for i in range(order + 1):
            for j in range(order - i + 1):
                yield (("i", i), ("j", j)), definition[i, j], closed[i, j]

    return _run_pairs("kernel-closed-form", params, pairs(), mutate_at)


def verify_alternating_b_sum(max_n: int = 30, *, mutate_at=None) -> VerificationReport:
    """sum_{l=0}^n (-1)^l B_{n-l}^(-l) = 0 for every n >= 1."""
    _require_index("max_n", max_n, 1)
    params = {"max_n": max_n}

    def pairs() -> Iterator[CheckPair]:
        for n in range(1, max_n + 1):
            value = sum((-1) ** l * poly_bernoulli_B(n - l, -l) for l in range(n + 1))
            yield (("n", n),), value, 0

    return _run_pairs("alternating-b-sum", params, pairs(), mutate_at)


def verify_genocchi_sum(max_n: int = 30, *, mutate_at=None) -> VerificationReport:
    """sum_{l=0}^n (-1)^l C_{n-l}^(-l-1) = -G_{n+2}, plus the shifted variant
    sum_{l=0}^n (-1)^l C_{n-l}^(-l) = G_{n+1}."""
    _require_index("max_n", max_n)
    params = {"max_n": max_n}

    def pairs() -> Iterator[CheckPair]:
        for n in range(max_n + 1):
            value = sum((-1) ** l * poly_bernoulli_C(n - l, -l - 1) for l in range(n + 1))
            yield (("part", "main"), ("n", n)), value, -genocchi(n + 2)
        for n in range(max_n + 1):
            value = sum((-1) ** l * poly_bernoulli_C(n - l, -l) for l in range(n + 1))
            yield (("part", "variant"), ("n", n)), value, genocchi(n + 1)

    return _run_pairs("genocchi-sum", params, pairs(), mutate_at)


def verify_beta1_funceq(order: int = 30, *, mutate_at=None) -> VerificationReport:
    """beta1(x/(1-x)) = beta1(x) + x^2 for beta1(x) = sum B_n x^{n+1}."""
    _require_index("order", order, 2)
    params = {"order": order}
    beta1 = beta1_series(order)
    lhs = beta1.mobius_substitution(1)
    rhs = beta1 + Series1.monomial(1, 2, order)

    def pairs() -> Iterator[CheckPair]:
        for i in range(order + 1):
            yield (("i", i),), lhs[i], rhs[i]

    return _run_pairs("beta1-funceq", params, pairs(), mutate_at)


def verify_g1_funceq(order: int = 30, *, mutate_at=None) -> VerificationReport:
    """g1(x/(1-2x)) = g1(x) + 2x^3(x-2)/(1-x)^2 for g1 = sum (2^{n+1}-2)B_n x^{n+1}."""
    _require_index("order", order, 3)
    params = {"order": order}
    g1 = g1_series(order)
    lhs = g1.mobius_substitution(2)
    rhs = g1 + g1_inhomogeneity(order)

    def pairs() -> Iterator[CheckPair]:
        for i in range(order + 1):
            yield (("i", i),), lhs[i], rhs[i]

    return _run_pairs("g1-funceq", params, pairs(), mutate_at)


def verify_f2_funceq(order: int = 30, *, mutate_at=None) -> VerificationReport:
    """The series f2 = x*f1(x) - x^2 built from the duality generating function
    satisfies the g1 functional equation; f1 satisfies its own equivalent form;
    and f2 matches -sum G_n x^{n+1} coefficientwise (the Genocchi bridge)."""
    _require_index("order", order, 4)
    params = {"order": order}
    f1 = f1_series(order)
    f2 = f1 * Series1.variable(order) - Series1.monomial(1, 2, order)

    def pairs() -> Iterator[CheckPair]:
        for i in range(order + 1):
            rhs = -genocchi(i - 1) if i >= 1 else 0
            yield (("part", "bridge"), ("i", i)), f2[i], rhs
        lhs_f1 = f1.mobius_substitution(2)
        rhs_f1 = (1 - 2 * Series1.variable(order)) * f1 + f1_inhomogeneity(order)
        for i in range(order + 1):
            yield (("part", "f1-form"), ("i", i)), lhs_f1[i], rhs_f1[i]
        lhs_f2 = f2.mobius_substitution(2)
        rhs_f2 = f2 + g1_inhomogeneity(order)
        for i in range(order + 1):
            yield (("part", "f2-form"), ("i", i)), lhs_f2[i], rhs_f2[i]

    return _run_pairs("f2-funceq", params, pairs(), mutate_at)


_DEFAULT_SAMPLE_POINTS = (Fraction(1, 100), Fraction(1, 97), Fraction(-1, 101))


def _remainder_prefactor_poly(n: int) -> tuple[int, int, int]:
    # (n+3)(x-1)^2 - (n+2)(2x-1) expanded: constant, linear, quadratic.
    return (2 * n + 5, -(4 * n + 10), n + 3)


def verify_funceq_remainder(
    n: int = 4,
    mode: str = "series",
    order: int = 30,
    points=None,
    *,
    mutate_at=None,
) -> VerificationReport:
    """Exact remainder after n+1 terms of the f1 functional equation:

    sum_{j<=n}(a_j(x/(1-2x)) - (1-2x)a_j(x)) - 2x^3(3-6x+2x^2)/((1-x)^2(1-2x))
      = -(2x/(1-x)) * ((1+(n+2)x)/(1-(n+3)x)) * ((n+3)(x-1)^2-(n+2)(2x-1)) * a_{n+1}(x)

    ``mode='series'`` compares truncated expansions to the given order;
    ``mode='sample'`` evaluates both sides exactly at rational points away
    from every pole of the identity.
    """
    _require_index("n", n)
    if mode not in ("series", "sample"):
        raise ParameterError(f"mode must be 'series' or 'sample', got {mode!r}")
    c0, c1, c2 = _remainder_prefactor_poly(n)

    if mode == "series":
        _require_index("order", order, 1)
        params = {"n": n, "mode": mode, "order": order}
        terms = [f1_term(j, order) for j in range(n + 2)]
        one_minus_2x = 1 - 2 * Series1.variable(order)
        lhs = Series1.zero(order)
        for j in range(n + 1):
            lhs = lhs + terms[j].mobius_substitution(2) - one_minus_2x * terms[j]
        lhs = lhs - f1_inhomogeneity(order)
        rhs = (
            Series1([0, -2], order)
            * Series1([1, -1], order).inverse()
            * Series1([1, n + 2], order)
            * Series1([1, -(n + 3)], order).inverse()
            * Series1([c0, c1, c2], order)
            * terms[n + 1]
        )

        def pairs() -> Iterator[CheckPair]:
            for i in range(order + 1):
                yield (("i", i),), lhs[i], rhs[i]

        return _run_pairs("funceq-remainder", params, pairs(), mutate_at)

    if points is None:
        points = _DEFAULT_SAMPLE_POINTS
    sample_points = tuple(Fraction(p) for p in points)
    if not sample_points:
        raise ParameterError("sample mode needs at least one point")
    params = {
        "n": n,
        "mode": mode,
        "points": [format_rational(p) for p in sample_points],
    }
    for x in sample_points:
        _guard_sample_point(x, n)

    def sample_pairs() -> Iterator[CheckPair]:
        for x in sample_points:
            shifted = x / (1 - 2 * x)
            lhs_value = sum(
                f1_term_at(j, shifted) - (1 - 2 * x) * f1_term_at(j, x)
                for j in range(n + 1)
            )
            lhs_value -= (
                2 * x**3 * (3 - 6 * x + 2 * x**2) / ((1 - x) ** 2 * (1 - 2 * x))
            )
            rhs_value = (
                Fraction(-2 * x, 1 - x)
                * Fraction(1 + (n + 2) * x, 1 - (n + 3) * x)
                * (c0 + c1 * x + c2 * x**2)
                * f1_term_at(n + 1, x)
            )
            yield (("x", x),), lhs_value, rhs_value

    return _run_pairs("funceq-remainder", params, sample_pairs(), mutate_at)


def verify_uniqueness_recursion(max_m: int = 40, *, mutate_at=None) -> VerificationReport:
    """The recursion sum_{n<m} C(m,n) 2^{m-n} (2^{n+1}-2) B_n = -2m for m >= 2,
    its rewriting sum_{n<=m} C(m,n) 2^{m-n} B_n = m + B_m, and the forward
    solve: the recursion with d_0 = 0 reproduces d_n = (2^{n+1}-2) B_n."""
    _require_index("max_m", max_m, 2)
    params = {"max_m": max_m}

    def pairs() -> Iterator[CheckPair]:
        for m in range(2, max_m + 1):
            value = sum(
                binomial(m, k) * 2 ** (m - k) * (2 ** (k + 1) - 2) * bernoulli(k)
                for k in range(m)
            )
            yield (("part", "recursion"), ("m", m)), value, -2 * m
        for m in range(2, max_m + 1):
            value = sum(binomial(m, k) * 2 ** (m - k) * bernoulli(k) for k in range(m + 1))
            yield (("part", "rewritten"), ("m", m)), value, m + bernoulli(m)
        solved = [Fraction(0)]
        for m in range(2, max_m + 1):
            acc = sum(
                binomial(m, k) * 2 ** (m - k) * solved[k] for k in range(m - 1)
            )
            solved.append(Fraction(-2 * m - acc, 2 * m))
        for k in range(max_m):
            yield (
                (("part", "unique"), ("n", k)),
                solved[k],
                (2 ** (k + 1) - 2) * bernoulli(k),
            )

    return _run_pairs("uniqueness-recursion", params, pairs(), mutate_at)


# ---------------------------------------------------------------------------
# Registry and the all-in-one runner.


@dataclass(frozen=True)
class IdentityEntry:
    identity_id: str
    runner: Callable[..., VerificationReport]
    defaults: tuple  # ((name, value), ...) — kept immutable


def _entry(identity_id: str, runner, **defaults) -> IdentityEntry:
    return IdentityEntry(identity_id, runner, tuple(defaults.items()))


REGISTRY: dict[str, IdentityEntry] = {
    e.identity_id: e
    for e in (
        _entry("duality", verify_duality, max_l=20, max_m=20, max_n=6),
        _entry("egf", verify_egf, n=4, order=14),
        _entry("ogf", verify_ogf, n=4, order=14),
        _entry("trivariate", verify_trivariate, order=6),
        _entry("stirling-expansion", verify_stirling_expansion, n=3, r=6, order=12),
        _entry("kernel-closed-form", verify_kernel_closed_form, n=3, order=10),
        _entry("alternating-b-sum", verify_alternating_b_sum, max_n=30),
        _entry("genocchi-sum", verify_genocchi_sum, max_n=30),
        _entry("beta1-funceq", verify_beta1_funceq, order=30),
        _entry("g1-funceq", verify_g1_funceq, order=30),
        _entry("f2-funceq", verify_f2_funceq, order=30),
        _entry(
            "funceq-remainder", verify_funceq_remainder, n=4, mode="series", order=30, points=None
        ),
        _entry("uniqueness-recursion", verify_uniqueness_recursion, max_m=40),
    )
}

IDENTITY_IDS = tuple(REGISTRY)


def verify_one(identity_id: str, **overrides) -> VerificationReport:
    """Run a single registered identity check with parameter overrides."""
    if identity_id not in REGISTRY:
        raise ParameterError(
            f"unknown identity {identity_id!r}; valid ids: {', '.join(IDENTITY_IDS)}"
        )
    entry = REGISTRY[identity_id]
    kwargs = dict(entry.defaults)
    for name, value in overrides.items():
        if name not in kwargs:
            raise ParameterError(
                f"identity {identity_id!r} does not accept parameter {name!r}"
            )
        kwargs[name] = value
    return entry.runner(**kwargs)


def verify_all(config: Optional[dict] = None) -> list[VerificationReport]:
    """Run every registered identity in the fixed registry order.

    ``config`` maps identity id -> {parameter: value} overrides; unknown ids
    or parameters raise ParameterError before anything runs.
    """
    config = dict(config or {})
    for identity_id in config:
        if identity_id not in REGISTRY:
            raise ParameterError(
                f"unknown identity {identity_id!r}; valid ids: {', '.join(IDENTITY_IDS)}"
            )
    return [
        verify_one(identity_id, **config.get(identity_id, {}))
        for identity_id in IDENTITY_IDS
    ]


__all__ = [
    "ParameterError",
    "Counterexample",
    "VerificationReport",
    "IdentityEntry",
    "REGISTRY",
    "IDENTITY_IDS",
    "verify_one",
    "verify_all",
    "verify_duality",
    "verify_egf",
    "verify_ogf",
    "verify_trivariate",
    "verify_stirling_expansion",
    "verify_kernel_closed_form",
    "verify_alternating_b_sum",
    "verify_genocchi_sum",
    "verify_beta1_funceq",
    "verify_g1_funceq",
    "verify_f2_funceq",
    "verify_funceq_remainder",
    "verify_uniqueness_recursion",
    "denominator_series",
    "egf_closed_form",
    "ogf_series",
    "q_series",
    "kernel_series",
    "kernel_family",
    "kernel_family_closed",
    "beta1_series",
    "g1_series",
    "g1_inhomogeneity",
    "f1_series",
    "f1_term",
    "f1_term_at",
    "f1_inhomogeneity",
]

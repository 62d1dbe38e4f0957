"""The four monomial ideal families and their coarse Hilbert series.

In the polynomial ring K[x_1..x_n] (the field never enters any computation;
Hilbert functions here count monomials):

  * Veronese(n, d): the ideal generated by all squarefree monomials of
    degree d, i.e. x^a belongs iff at least d exponents are positive.
  * MaxPower(n, s): the s-th power of the ideal (x_1..x_n); x^a belongs
    iff the total degree is at least s.
  * HatPower(n, t, s): the s-th power of the maximal ideal of the subring
    in the first n-t+1 variables, regarded in that subring.
  * GeneratedHatPower(n, t, s): the ideal the previous one generates in
    the full ring; x^a belongs iff the first n-t+1 exponents sum to >= s.

Every constructor assembles the exact numerator polynomial first and then
canonicalizes; nothing is expanded coefficient-wise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Union

from .exactalg import IntPolynomial, binomial, one_minus_t_power
from .series import (
    RationalFunctionSeries,
    canonicalize,
    hilbert_depth,
)

__all__ = [
    "Veronese",
    "MaxPower",
    "HatPower",
    "GeneratedHatPower",
    "IdealSpec",
    "DepthReport",
    "ambient_variables",
    "series_for",
    "closed_form_depth",
    "depth_report",
    "veronese_series",
    "veronese_series_alt",
    "max_power_series",
    "hat_power_series",
    "generated_hat_power_series",
    "closed_depth_veronese",
    "closed_depth_max_power",
]


@dataclass(frozen=True)
class Veronese:
    """Squarefree degree-d generators in n variables; requires 1 <= d <= n."""

    n: int
    d: int
    family: ClassVar[str] = "veronese"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("variable count n must be >= 1")
        if not 1 <= self.d <= self.n:
            raise ValueError("generator degree d must satisfy 1 <= d <= n")


@dataclass(frozen=True)
class MaxPower:
    """s-th power of the maximal ideal in n variables; requires s >= 1."""

    n: int
    s: int
    family: ClassVar[str] = "max-power"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("variable count n must be >= 1")
        if self.s < 1:
            raise ValueError("power s must be >= 1")


@dataclass(frozen=True)
class HatPower:
    """s-th maximal-ideal power of the subring in the first n-t+1 variables."""

    n: int
    t: int
    s: int
    family: ClassVar[str] = "hat-power"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("variable count n must be >= 1")
        if not 1 <= self.t <= self.n:
            raise ValueError("cut parameter t must satisfy 1 <= t <= n")
        if self.s < 1:
            raise ValueError("power s must be >= 1")


@dataclass(frozen=True)
class GeneratedHatPower:
    """Ideal of the full ring generated by the corresponding HatPower."""

    n: int
    t: int
    s: int
    family: ClassVar[str] = "generated-hat-power"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("variable count n must be >= 1")
        if not 1 <= self.t <= self.n:
            raise ValueError("cut parameter t must satisfy 1 <= t <= n")
        if self.s < 1:
            raise ValueError("power s must be >= 1")


IdealSpec = Union[Veronese, MaxPower, HatPower, GeneratedHatPower]


@dataclass(frozen=True)
class DepthReport:
    """Computed depth next to its closed-form prediction for one ideal."""

    spec: IdealSpec
    series: RationalFunctionSeries
    computed_depth: int
    closed_form_depth: int
    agree: bool

    def __post_init__(self) -> None:
        if self.agree != (self.computed_depth == self.closed_form_depth):
            raise ValueError("agree flag inconsistent with depths")


def ambient_variables(spec: IdealSpec) -> int:
    """Number of variables of the ring the ideal lives in."""
    if isinstance(spec, HatPower):
        return spec.n - spec.t + 1
    return spec.n


def veronese_series(n: int, d: int) -> RationalFunctionSeries:
    """Coarse Hilbert series of Veronese(n, d).

    Numerator sum_{k=d..n} C(n,k) T^k (1-T)^(n-k) over (1-T)^n.
    """
    Veronese(n, d)
    numer = IntPolynomial()
    for k in range(d, n + 1):
        numer = numer + binomial(n, k) * (IntPolynomial.monomial(1, k) * one_minus_t_power(n - k))
    return canonicalize(numer, n)


def veronese_series_alt(n: int, d: int) -> RationalFunctionSeries:
    """Coarse Hilbert series of Veronese(n, d), second presentation.

    Numerator sum_{i=d-1..n-1} C(i,d-1) T^d (1-T)^(i-d+1) over (1-T)^n.
    Canonicalizes to the same object as veronese_series.
    """
    Veronese(n, d)
    numer = IntPolynomial()
    for i in range(d - 1, n):
        numer = numer + binomial(i, d - 1) * one_minus_t_power(i - d + 1)
    return canonicalize(numer.shift(d), n)


def max_power_series(n: int, s: int) -> RationalFunctionSeries:
    """Coarse Hilbert series of MaxPower(n, s).

    H = (1-T)^(-n) - sum_{k<s} C(n+k-1,k) T^k, assembled over the common
    denominator (1-T)^n.
    """
    MaxPower(n, s)
    low = IntPolynomial(tuple(binomial(n + k - 1, k) for k in range(s)))
    numer = IntPolynomial.one() - low * one_minus_t_power(n)
    return canonicalize(numer, n)


def hat_power_series(n: int, t: int, s: int) -> RationalFunctionSeries:
    """Coarse Hilbert series of HatPower(n, t, s), in n-t+1 variables.

    H = (1-T)^(-(n-t+1)) - sum_{k<s} C(n-t+k,k) T^k.
    """
    HatPower(n, t, s)
    vars_ = n - t + 1
    low = IntPolynomial(tuple(binomial(n - t + k, k) for k in range(s)))
    numer = IntPolynomial.one() - low * one_minus_t_power(vars_)
    return canonicalize(numer, vars_)


def generated_hat_power_series(n: int, t: int, s: int) -> RationalFunctionSeries:
    """Coarse Hilbert series of GeneratedHatPower(n, t, s), in n variables.

    H = (1-T)^(-n) - (1-T)^(-t+1) sum_{k<s} C(n-t+k,k) T^k; over the common
    denominator (1-T)^n the numerator is 1 - (1-T)^(n-t+1) * (that sum).
    """
    GeneratedHatPower(n, t, s)
    low = IntPolynomial(tuple(binomial(n - t + k, k) for k in range(s)))
    numer = IntPolynomial.one() - low * one_minus_t_power(n - t + 1)
    return canonicalize(numer, n)


def closed_depth_veronese(n: int, d: int) -> int:
    """Closed-form depth of Veronese(n, d), checked in all three spellings:

        d + floor(C(n,d+1) / C(n,d))
        d + floor((n-d) / (d+1))
        d - 1 + ceil((n-d+1) / (d+1))

    The three must agree; a mismatch would be an implementation bug.
    """
    Veronese(n, d)
    ratio_form = d + binomial(n, d + 1) // binomial(n, d)
    floor_form = d + (n - d) // (d + 1)
    ceil_form = d - 1 + -(-(n - d + 1) // (d + 1))
    if not ratio_form == floor_form == ceil_form:
        raise AssertionError(
            f"closed-form spellings disagree at (n={n}, d={d}): "
            f"{ratio_form}, {floor_form}, {ceil_form}"
        )
    return ceil_form


def closed_depth_max_power(n: int, s: int) -> int:
    """Closed-form depth of MaxPower(n, s): ceil(n / (s+1))."""
    MaxPower(n, s)
    return -(-n // (s + 1))


def series_for(spec: IdealSpec) -> RationalFunctionSeries:
    """Coarse Hilbert series of any of the four families."""
    if isinstance(spec, Veronese):
        return veronese_series(spec.n, spec.d)
    if isinstance(spec, MaxPower):
        return max_power_series(spec.n, spec.s)
    if isinstance(spec, HatPower):
        return hat_power_series(spec.n, spec.t, spec.s)
    if isinstance(spec, GeneratedHatPower):
        return generated_hat_power_series(spec.n, spec.t, spec.s)
    raise TypeError(f"not an ideal spec: {spec!r}")


def closed_form_depth(spec: IdealSpec) -> int:
    """Closed-form depth for any family.

    The hat power is a maximal-ideal power in n-t+1 variables; generating it
    in the full ring multiplies the series by (1-T)^(-(t-1)), which raises
    the depth by exactly t-1.
    """
    if isinstance(spec, Veronese):
        return closed_depth_veronese(spec.n, spec.d)
    if isinstance(spec, MaxPower):
        return closed_depth_max_power(spec.n, spec.s)
    if isinstance(spec, HatPower):
        return closed_depth_max_power(spec.n - spec.t + 1, spec.s)
    if isinstance(spec, GeneratedHatPower):
        return closed_depth_max_power(spec.n - spec.t + 1, spec.s) + spec.t - 1
    raise TypeError(f"not an ideal spec: {spec!r}")


def depth_report(spec: IdealSpec) -> DepthReport:
    """Compute the series, scan its depth, and compare with the closed form."""
    h = series_for(spec)
    computed = hilbert_depth(h)
    closed = closed_form_depth(spec)
    return DepthReport(
        spec=spec,
        series=h,
        computed_depth=computed,
        closed_form_depth=closed,
        agree=computed == closed,
    )

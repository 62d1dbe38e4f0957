"""Exact integer arithmetic: generalized binomial coefficients and dense
integer polynomials in one formal variable T.

Python ints carry the arbitrary-precision load; values such as C(128, 64)
are exact.  Polynomials are immutable, stored lowest degree first with
trailing zeros trimmed, so equality and hashing are structural.
"""

from __future__ import annotations

import math
from functools import cache
from typing import Iterable, Iterator

__all__ = [
    "binomial",
    "IntPolynomial",
    "poly_mul",
    "poly_eval_at_one",
    "one_minus_t_power",
]


@cache
def binomial(a: int, b: int) -> int:
    """Generalized binomial coefficient C(a, b) = a(a-1)...(a-b+1) / b!.

    The upper argument may be any integer; the lower must be >= 0.  For
    a >= 0 and b > a the value is 0, and C(a, 0) = 1 for every a.
    Negative upper arguments follow the falling-factorial definition,
    equivalently C(-a, b) = (-1)^b C(a+b-1, b) for a >= 1.
    """
    if b < 0:
        raise ValueError("lower binomial argument must be non-negative")
    if a >= 0:
        return math.comb(a, b)
    value = math.comb(b - a - 1, b)
    return -value if b % 2 else value


class IntPolynomial:
    """Dense integer-coefficient polynomial in one formal variable T.

    The zero polynomial has empty support and degree float('-inf').
    Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls()

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> IntPolynomial:
        """coeff * T^exp."""
        if exp < 0:
            raise ValueError("exponent must be non-negative")
        return cls((0,) * exp + (coeff,))

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; float('-inf') for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, exp: int) -> int:
        """Coefficient of T^exp (0 beyond the support)."""
        if exp < 0:
            raise ValueError("exponent must be non-negative")
        return self._coeffs[exp] if exp < len(self._coeffs) else 0

    def eval_at_one(self) -> int:
        """Value at T = 1, i.e. the sum of all coefficients."""
        return sum(self._coeffs)

    def shift(self, exp: int) -> IntPolynomial:
        """Multiply by T^exp."""
        if exp < 0:
            raise ValueError("exponent must be non-negative")
        if self.is_zero():
            return self
        return IntPolynomial((0,) * exp + self._coeffs)

    def divide_one_minus_t(self) -> IntPolynomial:
        """Exact quotient by (1 - T); requires eval_at_one() == 0.

        With p = (1 - T) q the quotient coefficients are the running
        prefix sums of p's coefficients.
        """
        if self.is_zero():
            return self
        if self.eval_at_one() != 0:
            raise ValueError("polynomial is not divisible by (1 - T)")
        out = []
        run = 0
        for c in self._coeffs[:-1]:
            run += c
            out.append(run)
        return IntPolynomial(out)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self._coeffs))

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self._coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({self._coeffs!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exp, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if exp == 0:
                parts.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                sign = "-" if c < 0 else ""
                term = f"{mag}T" if exp == 1 else f"{mag}T^{exp}"
                parts.append(f"{sign}{term}" if not parts else f"{'- ' if c < 0 else '+ '}{term}")
        # join with spaces; signs already embedded for trailing terms
        out = parts[0]
        for p in parts[1:]:
            out += f" {p}"
        return out


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Exact product of two integer polynomials."""
    return p * q


def poly_eval_at_one(p: IntPolynomial) -> int:
    """Sum of all coefficients of p (detects (1 - T) factors)."""
    return p.eval_at_one()


def one_minus_t_power(exp: int) -> IntPolynomial:
    """(1 - T)^exp expanded, for exp >= 0."""
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return IntPolynomial(tuple((-1) ** k * binomial(exp, k) for k in range(exp + 1)))

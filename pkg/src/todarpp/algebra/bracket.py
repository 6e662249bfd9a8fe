"""Interval products over an integer-indexed family of values.

bracket(z, m, n) is the product of z_m .. z_n when m <= n, the empty product
1 when m = n+1, and a product of inverses when m >= n+2.  Two conventions for
the reversed branch are provided:

* "inclusive"   -- inverse product over l = n .. m-1 (the source text's
                   definition, the default);
* "telescoping" -- inverse product over l = n+1 .. m-1, the unique choice
                   making bracket(z,m,k)*bracket(z,k+1,n) = bracket(z,m,n)
                   hold for all integers.

The evolution and partition-function suites require "telescoping" wherever
the reversed branch actually fires; see the closed-form solution module.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly, ONE
from .scalar import Scalar, ONE_SCALAR
from .variables import Variable

CONVENTIONS = ("inclusive", "telescoping")


def _lookup(z, index: int) -> Scalar:
    if isinstance(z, str):
        return Scalar.variable(z, index)
    if callable(z):
        value = z(index)
    else:
        value = z[index]
    if isinstance(value, Scalar):
        return value
    if isinstance(value, Variable):
        return Scalar(LaurentPoly.variable(value))
    return Scalar(value)


def bracket(z, m: int, n: int, convention: str = "inclusive") -> Scalar:
    """The three-branch interval product [z]_m^n."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown bracket convention {convention!r}")
    if m == n + 1:
        return ONE_SCALAR
    if m <= n:
        if isinstance(z, str):
            mono = tuple((Variable(z, l), 1) for l in range(m, n + 1))
            return Scalar._raw(LaurentPoly.monomial(mono), ONE, True)
        prod = ONE_SCALAR
        for l in range(m, n + 1):
            prod = prod * _lookup(z, l)
        return prod
    lo = n if convention == "inclusive" else n + 1
    hi = m - 1
    if isinstance(z, str):
        mono = tuple((Variable(z, l), 1) for l in range(lo, hi + 1))
        if not mono:
            return ONE_SCALAR
        return Scalar._raw(ONE, LaurentPoly.monomial(mono), True)
    prod = ONE_SCALAR
    for l in range(lo, hi + 1):
        value = _lookup(z, l)
        if value.is_zero():
            raise ZeroDivisionError(
                f"reversed bracket needs the inverse of z_{l} = 0"
            )
        prod = prod * value
    return prod.reciprocal() if not prod.is_one() else ONE_SCALAR


def indexed_constant(values) -> "callable":
    """Wrap a dict of index -> value as a callable family."""
    mapping = {k: v if isinstance(v, Scalar) else Scalar(Fraction(v)) for k, v in values.items()}
    return lambda i: mapping[i]

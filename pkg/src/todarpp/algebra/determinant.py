"""Exact determinants.

Small matrices go through cofactor expansion over the fraction field; larger
ones through fraction-free Bareiss elimination over the polynomial ring
(denominators are cleared row by row first).  A Fraction-only fast path
serves the numeric tau-function grids.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import ShapeError
from . import polygcd
from .laurent import LaurentPoly, ONE, ZERO, divide_exact
from .scalar import Scalar, ONE_SCALAR, ZERO_SCALAR, _coerce_strict

_COFACTOR_LIMIT = 4


def det_exact(rows) -> Scalar:
    """Determinant of a square matrix of Scalar-like entries; det([]) = 1."""
    matrix = [list(r) for r in rows]
    n = len(matrix)
    for r in matrix:
        if len(r) != n:
            raise ShapeError(f"expected a square matrix, got row of length {len(r)} in {n} rows")
    if n == 0:
        return ONE_SCALAR
    entries = [[_coerce_strict(x) for x in r] for r in matrix]
    fractions = []
    for r in entries:
        for x in r:
            c = x.constant_value()
            if c is None:
                break
            fractions.append(c)
        else:
            continue
        break
    else:
        grid = [fractions[i * n:(i + 1) * n] for i in range(n)]
        return Scalar(LaurentPoly.const(det_fractions(grid)))
    if n <= _COFACTOR_LIMIT:
        return _cofactor(entries)
    polys = []
    correction = ONE
    for r in entries:
        common = ONE
        for x in r:
            if not x.den.is_one():
                common = polygcd.lcm(common, x.den)
        if common.is_one():
            polys.append([x.num for x in r])
        else:
            polys.append([x.num * divide_exact(common, x.den) for x in r])
            correction = correction * common
    det = bareiss_poly(polys)
    return Scalar(det, correction)


def _cofactor(entries) -> Scalar:
    n = len(entries)
    if n == 1:
        return entries[0][0]
    if n == 2:
        a, b = entries[0]
        c, d = entries[1]
        return a * d - b * c
    total = ZERO_SCALAR
    sign = 1
    for j in range(n):
        pivot = entries[0][j]
        if not pivot.is_zero():
            minor = [[row[k] for k in range(n) if k != j] for row in entries[1:]]
            term = pivot * _cofactor(minor)
            total = total + (term if sign > 0 else -term)
        sign = -sign
    return total


def bareiss_poly(rows) -> LaurentPoly:
    """Fraction-free determinant of a matrix of genuine polynomials."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for p in range(k + 1, n):
                if not m[p][k].is_zero():
                    m[k], m[p] = m[p], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numerator = pivot * m[i][j] - m[i][k] * m[k][j]
                q = divide_exact(numerator, prev)
                assert q is not None, "Bareiss division must be exact"
                m[i][j] = q
            m[i][k] = ZERO
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def det_fractions(rows) -> Fraction:
    """Bareiss over plain Fractions; exact and fast for numeric grids."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not m[k][k]:
            for p in range(k + 1, n):
                if m[p][k]:
                    m[k], m[p] = m[p], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - mik * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = pivot
    return sign * m[n - 1][n - 1]

"""Canonical rational expressions: reduced fractions of polynomials.

A Scalar is numerator/denominator with both stored as genuine polynomials
(negative exponents from Laurent inputs are cleared by a joint monomial
shift), the pair reduced by polynomial gcd, and the denominator normalized so
that its canonically-first term (ascending graded-lex) has coefficient +1.
Equal values therefore have identical representation and __eq__ is plain
structural comparison.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import PoleError
from . import polygcd
from .laurent import LaurentPoly, ONE, ZERO, divide_exact
from .variables import Variable


def _to_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, Variable):
        return LaurentPoly.variable(x)
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial")


class Scalar:
    """An element of the exact coefficient field."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = _to_poly(num)
        den = _to_poly(den)
        obj = _make(num, den, reduced=False)
        object.__setattr__(self, "num", obj[0])
        object.__setattr__(self, "den", obj[1])
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly, reduced: bool) -> "Scalar":
        s = cls.__new__(cls)
        num, den = _make(num, den, reduced)
        object.__setattr__(s, "num", num)
        object.__setattr__(s, "den", den)
        object.__setattr__(s, "_hash", None)
        return s

    @staticmethod
    def variable(family: str, index: int = 0) -> "Scalar":
        return Scalar._raw(LaurentPoly.variable(Variable(family, index)), ONE, True)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def constant_value(self) -> Fraction | None:
        """The value as a Fraction if it is rational, else None."""
        if self.den.is_one():
            return self.num.constant_value()
        return None

    def as_fraction(self) -> Fraction:
        c = self.constant_value()
        if c is None:
            raise ValueError(f"not a rational constant: {self}")
        return c

    def variables(self) -> set:
        return self.num.variables() | self.den.variables()

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den.is_one() and other.den.is_one():
            return Scalar._raw(self.num + other.num, ONE, True)
        if self.den == other.den:
            return Scalar._raw(self.num + other.num, self.den, False)
        g = polygcd.gcd(self.den, other.den)
        if g.is_one():
            num = self.num * other.den + other.num * self.den
            return Scalar._raw(num, self.den * other.den, False)
        da = divide_exact(self.den, g)
        db = divide_exact(other.den, g)
        num = self.num * db + other.num * da
        return Scalar._raw(num, self.den * db, False)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.num, self.den, True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO_SCALAR
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        if not d2.is_one():
            g = polygcd.gcd(n1, d2)
            if not g.is_one():
                n1 = divide_exact(n1, g)
                d2 = divide_exact(d2, g)
        if not d1.is_one():
            g = polygcd.gcd(n2, d1)
            if not g.is_one():
                n2 = divide_exact(n2, g)
                d1 = divide_exact(d1, g)
        return Scalar._raw(n1 * n2, d1 * d2, True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return _coerce(other) * self.reciprocal()

    def reciprocal(self) -> "Scalar":
        if self.num.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        return Scalar._raw(self.den, self.num, True)

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        result = ONE_SCALAR
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return not self.num.is_zero()

    # -- substitution --------------------------------------------------------

    def specialize(self, assignment) -> "Scalar":
        """Substitute Scalars for every variable occurring in this value.

        assignment maps Variable (or (family, index) pairs) to Scalar-like
        values.  Raises PoleError if the denominator vanishes under the
        substitution, and ValueError if a variable is unassigned.
        """
        amap = {}
        for k, v in assignment.items():
            key = k if isinstance(k, Variable) else Variable(*k)
            amap[key] = _coerce_strict(v)
        den_val = _eval_poly(self.den, amap)
        if den_val.is_zero():
            raise PoleError(
                f"denominator ({self.den}) vanishes under the substitution"
            )
        num_val = _eval_poly(self.num, amap)
        return num_val / den_val

    # -- rendering -----------------------------------------------------------

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"Scalar({self})"


def _make(num: LaurentPoly, den: LaurentPoly, reduced: bool):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return ZERO, ONE
    shift = {}
    for p in (num, den):
        for v in p.variables():
            m = p.min_exponent(v)
            if m < shift.get(v, 0):
                shift[v] = m
    shift = {v: m for v, m in shift.items() if m < 0}
    if shift:
        mono = tuple(sorted((v, -m) for v, m in shift.items()))
        num = num.shift(mono)
        den = den.shift(mono)
    if not reduced and not den.is_one():
        g = polygcd.gcd(num, den)
        if not g.is_one():
            num = divide_exact(num, g)
            den = divide_exact(den, g)
    # unit normalization: the first denominator term in canonical (ascending
    # graded-lex) order gets coefficient +1
    lc = den.trailing()[1]
    if lc != 1:
        inv = Fraction(1) / lc
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction, LaurentPoly, Variable)):
        return Scalar(x)
    return NotImplemented


def _coerce_strict(x) -> Scalar:
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a Scalar")
    return s


def _eval_poly(p: LaurentPoly, amap) -> Scalar:
    total = ZERO_SCALAR
    cache = {}
    for mono, coeff in p.terms.items():
        term = Scalar(coeff)
        for v, e in mono:
            try:
                val = amap[v]
            except KeyError:
                raise ValueError(f"no assignment for variable {v}") from None
            key = (v, e)
            powed = cache.get(key)
            if powed is None:
                if e < 0 and val.is_zero():
                    raise PoleError(f"substituting 0 for {v} with negative exponent {e}")
                powed = val ** e
                cache[key] = powed
            term = term * powed
        total = total + term
    return total


ZERO_SCALAR = Scalar(0)
ONE_SCALAR = Scalar(1)


def specialize(s: Scalar, assignment) -> Scalar:
    """Module-level alias for Scalar.specialize."""
    return s.specialize(assignment)

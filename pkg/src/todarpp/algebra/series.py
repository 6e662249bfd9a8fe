"""Formal power series truncated at a total-degree bound.

Used for the unbounded-parts limit checks: a rational expression whose
denominator is a unit of the power-series ring (nonzero constant term) is
expanded exactly to total degree D with Fraction coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import NotAUnitError
from .laurent import LaurentPoly, mono_degree, mono_mul, _mono_sort_key
from .scalar import Scalar
from .variables import Variable


class TruncatedSeries:
    """Polynomial representative of a power series modulo total degree > D."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=None):
        if degree < 0:
            raise ValueError("degree bound must be nonnegative")
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff and mono_degree(mono) <= degree:
                    clean[mono] = coeff
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    @staticmethod
    def from_poly(p: LaurentPoly, degree: int) -> "TruncatedSeries":
        if p.has_negative_exponent():
            raise NotAUnitError("Laurent terms with negative exponents are not power series")
        return TruncatedSeries(degree, p.terms)

    @staticmethod
    def one(degree: int) -> "TruncatedSeries":
        return TruncatedSeries(degree, {(): Fraction(1)})

    def _check(self, other: "TruncatedSeries"):
        if self.degree != other.degree:
            raise ValueError("mismatched truncation degrees")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, Fraction(0)) + coeff
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        return TruncatedSeries(self.degree, out)

    def __neg__(self):
        return TruncatedSeries(self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        bound = self.degree
        out: dict = {}
        for m1, c1 in self.terms.items():
            d1 = mono_degree(m1)
            for m2, c2 in other.terms.items():
                if d1 + mono_degree(m2) > bound:
                    continue
                mono = mono_mul(m1, m2)
                c = out.get(mono, Fraction(0)) + c1 * c2
                if c:
                    out[mono] = c
                else:
                    out.pop(mono, None)
        return TruncatedSeries(self.degree, out)

    def scale(self, c) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries(self.degree, {m: cf * c for m, cf in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def collapse(self, family: str = "q") -> "TruncatedSeries":
        """Substitute the same variable for every one: the total-degree grading."""
        v = Variable(family, 0)
        out: dict = {}
        for mono, coeff in self.terms.items():
            d = mono_degree(mono)
            key = ((v, d),) if d else ()
            out[key] = out.get(key, Fraction(0)) + coeff
        return TruncatedSeries(self.degree, out)

    def __str__(self):
        if not self.terms:
            return "0"
        return str(LaurentPoly(self.terms))

    def __repr__(self):
        return f"TruncatedSeries(D={self.degree}, {self})"


def series_truncate(s: Scalar, degree: int) -> TruncatedSeries:
    """Expand a rational expression as a power series to total degree D.

    The denominator must have a nonzero constant term.
    """
    c0 = s.den.terms.get((), Fraction(0))
    if not c0:
        raise NotAUnitError(
            f"denominator ({s.den}) has no constant term; not a power-series unit"
        )
    num = TruncatedSeries.from_poly(s.num, degree)
    # den = c0 (1 - g) with g of positive minimum degree
    g_terms = {m: -c / c0 for m, c in s.den.terms.items() if m}
    g = TruncatedSeries(degree, g_terms)
    inv = TruncatedSeries.one(degree)
    power = TruncatedSeries.one(degree)
    while True:
        power = power * g
        if power.is_zero():
            break
        inv = inv + power
    return (num * inv).scale(Fraction(1) / c0)


def geometric_inverse(p: LaurentPoly, degree: int) -> TruncatedSeries:
    """Series of 1/p for a polynomial p with nonzero constant term."""
    return series_truncate(Scalar(1, p), degree)

"""Sparse multivariate Laurent polynomials with exact rational coefficients.

A monomial is a tuple of (Variable, exponent) pairs, sorted by variable, with
all exponents nonzero (possibly negative).  A polynomial is a dict from
monomial to nonzero Fraction.  Values are immutable once built; every
operation returns a fresh object.

The monomial order used throughout (leading terms, sparse division) is graded
lexicographic: compare total degree first, then exponents variable by
variable in increasing variable order.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Mapping

from .variables import Variable

Monomial = tuple  # tuple[tuple[Variable, int], ...]

_EMPTY: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Merge two sorted exponent vectors, dropping zero exponents."""
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            e = ea + eb
            if e:
                out.append((va, e))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return mono_mul(a, tuple((v, -e) for v, e in b))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if monomial a divides b, assuming nonnegative exponents."""
    exps = dict(b)
    return all(0 <= e <= exps.get(v, 0) for v, e in a)


def mono_cmp(a: Monomial, b: Monomial) -> int:
    """Graded-lex comparison: positive if a > b."""
    da, db = mono_degree(a), mono_degree(b)
    if da != db:
        return 1 if da > db else -1
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            if ea != eb:
                return 1 if ea > eb else -1
            i += 1
            j += 1
        elif va < vb:
            # a has the smaller variable with nonzero exponent, b has 0 there
            return 1 if ea > 0 else -1
        else:
            return -1 if eb > 0 else 1
    while i < len(a):
        return 1 if a[i][1] > 0 else -1
    while j < len(b):
        return -1 if b[j][1] > 0 else 1
    return 0


_mono_sort_key = functools.cmp_to_key(mono_cmp)


class LaurentPoly:
    """Immutable sparse Laurent polynomial."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    clean[mono] = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c) -> "LaurentPoly":
        c = Fraction(c)
        return LaurentPoly({_EMPTY: c} if c else {})

    @staticmethod
    def variable(v: Variable, exp: int = 1) -> "LaurentPoly":
        if exp == 0:
            return ONE
        return LaurentPoly({((v, exp),): Fraction(1)})

    @staticmethod
    def monomial(mono: Monomial, coeff=1) -> "LaurentPoly":
        return LaurentPoly({mono: Fraction(coeff)})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {_EMPTY: Fraction(1)}

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _EMPTY in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction | None:
        """The value as a Fraction if constant, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and _EMPTY in self.terms:
            return self.terms[_EMPTY]
        return None

    def has_negative_exponent(self) -> bool:
        return any(e < 0 for mono in self.terms for _, e in mono)

    def variables(self) -> set:
        return {v for mono in self.terms for v, _ in mono}

    def total_degree(self) -> int:
        """Maximum term degree; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(mono_degree(m) for m in self.terms)

    def degree_in(self, v: Variable) -> int:
        d = 0
        for mono in self.terms:
            for w, e in mono:
                if w == v:
                    d = max(d, e)
        return d

    def min_exponent(self, v: Variable) -> int:
        """Minimum exponent of v across terms (0 if some term omits v)."""
        best = None
        for mono in self.terms:
            e = dict(mono).get(v, 0)
            best = e if best is None else min(best, e)
        return 0 if best is None else best

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono)
            if c is None:
                out[mono] = coeff
            else:
                c = c + coeff
                if c:
                    out[mono] = c
                else:
                    del out[mono]
        p = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(p, "terms", out)
        object.__setattr__(p, "_hash", None)
        return p

    __radd__ = __add__

    def __neg__(self):
        p = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(p, "terms", {m: -c for m, c in self.terms.items()})
        object.__setattr__(p, "_hash", None)
        return p

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
        if not self.terms or not other.terms:
            return ZERO
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for mono1, c1 in a.items():
            for mono2, c2 in b.items():
                mono = mono_mul(mono1, mono2)
                c = out.get(mono)
                if c is None:
                    out[mono] = c1 * c2
                else:
                    c = c + c1 * c2
                    if c:
                        out[mono] = c
                    else:
                        del out[mono]
        p = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(p, "terms", out)
        object.__setattr__(p, "_hash", None)
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) == 1:
                (mono, coeff), = self.terms.items()
                inv = tuple((v, -e) for v, e in mono)
                return LaurentPoly({inv: Fraction(1) / coeff}) ** (-k)
            raise ZeroDivisionError("negative power of a non-monomial Laurent polynomial")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        if not c:
            return ZERO
        p = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(p, "terms", {m: cf * c for m, cf in self.terms.items()})
        object.__setattr__(p, "_hash", None)
        return p

    # -- structure ---------------------------------------------------------

    def leading(self) -> tuple:
        """(monomial, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ZeroDivisionError("leading term of the zero polynomial")
        best = None
        for mono in self.terms:
            if best is None or mono_cmp(mono, best) > 0:
                best = mono
        return best, self.terms[best]

    def leading_coefficient(self) -> Fraction:
        return self.leading()[1]

    def trailing(self) -> tuple:
        """(monomial, coefficient) of the graded-lex minimal term."""
        if not self.terms:
            raise ZeroDivisionError("trailing term of the zero polynomial")
        best = None
        for mono in self.terms:
            if best is None or mono_cmp(mono, best) < 0:
                best = mono
        return best, self.terms[best]

    def monomial_content(self) -> Monomial:
        """Exponent-wise minimum over all terms (the largest common monomial).

        Requires nonnegative exponents and a nonzero polynomial.
        """
        mins = None
        for mono in self.terms:
            exps = dict(mono)
            if mins is None:
                mins = exps
            else:
                mins = {v: m for v, m in ((v, min(e, exps.get(v, 0))) for v, e in mins.items()) if m}
            if not mins:
                break
        return tuple(sorted(mins.items())) if mins else _EMPTY

    def shift(self, mono: Monomial) -> "LaurentPoly":
        """Multiply every term by the given monomial."""
        if not mono:
            return self
        p = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(p, "terms", {mono_mul(m, mono): c for m, c in self.terms.items()})
        object.__setattr__(p, "_hash", None)
        return p

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: _mono_sort_key(kv[0]))

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.terms == LaurentPoly.const(other).terms
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.terms)

    # -- rendering -----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = [f"{v}^{e}" if e != 1 else str(v) for v, e in mono]
            if not factors:
                body = str(coeff if coeff > 0 else -coeff)
            else:
                mag = coeff if coeff > 0 else -coeff
                body = "*".join(([] if mag == 1 else [str(mag)]) + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    if isinstance(x, Variable):
        return LaurentPoly.variable(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def poly_from_terms(pairs: Iterable) -> LaurentPoly:
    """Build a polynomial from (monomial, coefficient) pairs, summing repeats."""
    acc: dict = {}
    for mono, coeff in pairs:
        c = acc.get(mono, Fraction(0)) + Fraction(coeff)
        if c:
            acc[mono] = c
        else:
            acc.pop(mono, None)
    return LaurentPoly(acc)


def divide_exact(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly | None:
    """f / g when g divides f exactly, else None.

    Both arguments must have nonnegative exponents (genuine polynomials).
    Sparse division driven by a max-heap over the graded-lex order on the
    joint variable universe, so each elimination step is O(|g| log |r|).
    """
    import heapq

    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return ZERO
    if g.is_one():
        return f
    gc = g.constant_value()
    if gc is not None:
        return f.scale(Fraction(1) / gc)
    varlist = sorted(f.variables() | g.variables())
    index = {v: i for i, v in enumerate(varlist)}
    nvars = len(varlist)

    def negkey(mono):
        exps = [0] * nvars
        total = 0
        for v, e in mono:
            exps[index[v]] = -e
            total += e
        return (-total, tuple(exps))

    # negkey reverses the order, so the leading monomial is the minimum under it
    lg_mono = min(g.terms, key=negkey)
    lg_coeff = g.terms[lg_mono]
    lg_exps = dict(lg_mono)
    rest = [(m, c) for m, c in g.terms.items() if m != lg_mono]
    remainder = dict(f.terms)
    heap = [negkey(m) + (m,) for m in remainder]
    heapq.heapify(heap)
    quo: dict = {}
    while remainder:
        mono = None
        while heap:
            entry = heapq.heappop(heap)
            candidate = entry[2]
            if candidate in remainder:
                mono = candidate
                break
        if mono is None:
            return None
        coeff = remainder.pop(mono)
        exps = dict(mono)
        if any(exps.get(v, 0) < e for v, e in lg_exps.items()):
            return None
        q_mono = mono_div(mono, lg_mono)
        q_coeff = coeff / lg_coeff
        quo[q_mono] = q_coeff
        for m2, c2 in rest:
            mm = mono_mul(q_mono, m2)
            prev = remainder.get(mm)
            if prev is None:
                remainder[mm] = -q_coeff * c2
                heapq.heappush(heap, negkey(mm) + (mm,))
            else:
                val = prev - q_coeff * c2
                if val:
                    remainder[mm] = val
                else:
                    del remainder[mm]
    return LaurentPoly(quo)

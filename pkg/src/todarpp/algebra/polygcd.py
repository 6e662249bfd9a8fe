"""Polynomial gcd over the rationals.

Univariate inputs go through the monic Euclidean algorithm; multivariate
inputs through the primitive pseudo-remainder sequence, recursing on the
coefficient ring.  Inputs must be genuine polynomials (no negative
exponents).  The result is normalized to leading coefficient 1, so the gcd of
a coprime pair is the constant 1.

Monomial and constant operands short-circuit: those are the overwhelmingly
common cases in this package (denominators built from products of binomials
1 - monomial and from bare monomials).
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly, ONE, ZERO, divide_exact, mono_mul
from .variables import Variable


def gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if f.is_zero():
        return _monic(g) if not g.is_zero() else ZERO
    if g.is_zero():
        return _monic(f)
    if f.is_constant() or g.is_constant():
        return ONE
    mono_f = f.monomial_content()
    mono_g = g.monomial_content()
    common = _mono_min(mono_f, mono_g)
    f1 = divide_exact(f, LaurentPoly.monomial(mono_f)) if mono_f else f
    g1 = divide_exact(g, LaurentPoly.monomial(mono_g)) if mono_g else g
    core = _gcd_core(f1, g1)
    if common:
        core = core * LaurentPoly.monomial(common)
    return _monic(core)


def lcm(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if f.is_zero() or g.is_zero():
        return ZERO
    return _monic(divide_exact(f * g, gcd(f, g)))


def _monic(p: LaurentPoly) -> LaurentPoly:
    lc = p.leading_coefficient()
    return p if lc == 1 else p.scale(Fraction(1) / lc)


def _mono_min(a, b):
    ea, eb = dict(a), dict(b)
    out = {}
    for v, e in ea.items():
        m = min(e, eb.get(v, 0))
        if m:
            out[v] = m
    return tuple(sorted(out.items()))


def _gcd_core(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """gcd of two monomial-content-free nonconstant polynomials."""
    if f.is_monomial() or g.is_monomial():
        # content-free monomial is a unit times a variable-free monomial = constant
        return ONE
    if f.terms == g.terms:
        return f
    vf, vg = f.variables(), g.variables()
    shared = vf & vg
    if not shared:
        return ONE
    if len(vf) == 1 and len(vg) == 1:
        v = next(iter(shared))
        return _euclid_univariate(f, g, v)
    v = min(shared, key=lambda w: max(f.degree_in(w), g.degree_in(w)))
    A = _as_univariate(f, v)
    B = _as_univariate(g, v)
    cont_a = _coeff_gcd(A)
    cont_b = _coeff_gcd(B)
    c = gcd(cont_a, cont_b)
    pa = {d: divide_exact(p, cont_a) for d, p in A.items()} if not cont_a.is_one() else A
    pb = {d: divide_exact(p, cont_b) for d, p in B.items()} if not cont_b.is_one() else B
    if _coprime_by_evaluation(pa, pb, (vf | vg) - {v}):
        return c
    if max(pa) < max(pb):
        pa, pb = pb, pa
    while True:
        r = _pseudo_rem(pa, pb, v)
        if not r:
            break
        if max(r) == 0:
            return c  # last remainder is degree 0: the univariate gcd is trivial
        cont_r = _coeff_gcd(r)
        if not cont_r.is_one():
            r = {d: divide_exact(p, cont_r) for d, p in r.items()}
        pa, pb = pb, r
    core = _from_univariate(pb, v)
    cont = _coeff_gcd(pb)
    if not cont.is_one():
        core = divide_exact(core, cont)
    return c * core


_PROBE_POINTS = ((3, 5, 7, 11, 13, 17, 19, 23), (2, 9, 4, 25, 8, 27, 32, 49), (6, 10, 15, 14, 21, 22, 26, 33))


def _coprime_by_evaluation(pa: dict, pb: dict, others) -> bool:
    """True when the v-primitive parts provably have gcd 1.

    Evaluating every non-main variable at an integer point is a ring
    homomorphism, so any common divisor h maps to a common divisor of the
    univariate images; if the images' leading coefficients survive the
    evaluation, deg h is preserved.  Coprime images with surviving leading
    terms therefore certify that the primitive gcd has v-degree 0, hence is
    a unit (it divides a v-primitive polynomial)."""
    others = sorted(others)
    for values in _PROBE_POINTS:
        point = {w: Fraction(values[k % len(values)]) for k, w in enumerate(others)}
        fa = {d: _eval(p, point) for d, p in pa.items()}
        gb = {d: _eval(p, point) for d, p in pb.items()}
        if not fa[max(pa)] or not gb[max(pb)]:
            continue
        a = [fa.get(d, Fraction(0)) for d in range(max(pa) + 1)]
        b = [gb.get(d, Fraction(0)) for d in range(max(pb) + 1)]
        while b != [] and any(b):
            a, b = b, _poly_mod(a, b)
        while a and not a[-1]:
            a.pop()
        if len(a) == 1:
            return True
        return False
    return False


def _eval(p: LaurentPoly, point: dict) -> Fraction:
    total = Fraction(0)
    for mono, coeff in p.terms.items():
        term = coeff
        for w, e in mono:
            term = term * point[w] ** e
        total += term
    return total


def _euclid_univariate(f: LaurentPoly, g: LaurentPoly, v: Variable) -> LaurentPoly:
    a = _dense(f, v)
    b = _dense(g, v)
    while b:
        a, b = b, _poly_mod(a, b)
    return _from_dense(a, v)


def _dense(p: LaurentPoly, v: Variable) -> list:
    out = [Fraction(0)] * (p.degree_in(v) + 1)
    for mono, coeff in p.terms.items():
        assert len(mono) <= 1, "univariate path got a multivariate polynomial"
        d = mono[0][1] if mono else 0
        out[d] += coeff
    while out and not out[-1]:
        out.pop()
    return out


def _from_dense(coeffs: list, v: Variable) -> LaurentPoly:
    lc = coeffs[-1]
    return LaurentPoly(
        {(((v, d),) if d else ()): c / lc for d, c in enumerate(coeffs) if c}
    )


def _poly_mod(a: list, b: list) -> list:
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        dr = len(r) - 1
        q = r[-1] / lb
        for i in range(db + 1):
            r[dr - db + i] -= q * b[i]
        while r and not r[-1]:
            r.pop()
    return r


def _as_univariate(p: LaurentPoly, v: Variable) -> dict:
    """View p as a univariate polynomial in v with LaurentPoly coefficients."""
    out: dict = {}
    for mono, coeff in p.terms.items():
        d = 0
        rest = []
        for w, e in mono:
            if w == v:
                d = e
            else:
                rest.append((w, e))
        key = tuple(rest)
        bucket = out.setdefault(d, {})
        bucket[key] = bucket.get(key, Fraction(0)) + coeff
    return {d: LaurentPoly(bucket) for d, bucket in out.items() if any(bucket.values())}


def _from_univariate(u: dict, v: Variable) -> LaurentPoly:
    acc: dict = {}
    for d, p in u.items():
        vm = ((v, d),) if d else ()
        for mono, coeff in p.terms.items():
            acc[mono_mul(mono, vm)] = coeff
    return LaurentPoly(acc)


def _coeff_gcd(u: dict) -> LaurentPoly:
    g = ZERO
    for p in u.values():
        g = gcd(g, p)
        if g.is_one():
            break
    return g


def _pseudo_rem(a: dict, b: dict, v: Variable) -> dict:
    """Pseudo-remainder of a by b as univariate-in-v polynomials."""
    db = max(b)
    lb = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        new: dict = {}
        for d, p in r.items():
            if d != dr:
                new[d] = p * lb
        for d, p in b.items():
            if d != db:
                nd = d + dr - db
                q = new.get(nd, ZERO) - p * lr
                if q.is_zero():
                    new.pop(nd, None)
                else:
                    new[nd] = q
        r = {d: p for d, p in new.items() if not p.is_zero()}
    return r

"""The discrete 2D Toda molecule.

Fields a^(s,t)_n, b^(s,t)_n evolve by

    a^(s,t+1)_n + b^(s+1,t)_n = a^(s,t)_n + b^(s,t)_{n+1}
    a^(s,t+1)_n b^(s+1,t)_{n+1} = a^(s,t)_{n+1} b^(s,t)_{n+1}
    b^(s,t)_0 = 0.

Solutions come either from a sample grid f via tau determinants
tau^(s,t)_n = det(f_{s+i,t+j}) and the ratio transformation, or from the
closed two-parameter-family form built out of interval products.  Everything
is exact; verification routines return a list of violating sites (empty means
verified).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .errors import (
    GaugeError, NonvanishingError, ResampleExhaustedError, SingularMinorError,
    WeightError, WindowError,
)
from .algebra.bracket import bracket
from .algebra.determinant import det_exact, det_fractions
from .algebra.scalar import Scalar, ONE_SCALAR, ZERO_SCALAR, _coerce_strict
from .lattice import RegularLattice, enum_ni_tuples, g_sum, path_weight


class SampleFunction:
    """An exact-valued function on a finite window of Z^2."""

    __slots__ = ("i_lo", "i_hi", "j_lo", "j_hi", "values", "_tau", "_rational")

    def __init__(self, window, values):
        (i_lo, i_hi), (j_lo, j_hi) = window
        if i_hi < i_lo or j_hi < j_lo:
            raise ValueError(f"bad window {window}")
        object.__setattr__(self, "i_lo", i_lo)
        object.__setattr__(self, "i_hi", i_hi)
        object.__setattr__(self, "j_lo", j_lo)
        object.__setattr__(self, "j_hi", j_hi)
        table = {}
        if isinstance(values, dict):
            for i in range(i_lo, i_hi + 1):
                for j in range(j_lo, j_hi + 1):
                    table[(i, j)] = _coerce_strict(values[(i, j)])
        else:
            rows = list(values)
            if len(rows) != i_hi - i_lo + 1:
                raise ValueError("row count does not match the window")
            for di, row in enumerate(rows):
                row = list(row)
                if len(row) != j_hi - j_lo + 1:
                    raise ValueError("column count does not match the window")
                for dj, v in enumerate(row):
                    table[(i_lo + di, j_lo + dj)] = _coerce_strict(v)
        object.__setattr__(self, "values", table)
        object.__setattr__(self, "_tau", {})
        object.__setattr__(
            self, "_rational",
            all(v.constant_value() is not None for v in table.values()),
        )

    @property
    def window(self):
        return ((self.i_lo, self.i_hi), (self.j_lo, self.j_hi))

    def value(self, i: int, j: int) -> Scalar:
        try:
            return self.values[(i, j)]
        except KeyError:
            raise WindowError(
                f"f({i},{j}) outside the sample window "
                f"[{self.i_lo},{self.i_hi}]x[{self.j_lo},{self.j_hi}]"
            ) from None

    def to_json(self):
        return {
            "window": [[self.i_lo, self.i_hi], [self.j_lo, self.j_hi]],
            "values": [
                str(self.values[(i, j)])
                for i in range(self.i_lo, self.i_hi + 1)
                for j in range(self.j_lo, self.j_hi + 1)
            ],
        }


def tau(f: SampleFunction, s: int, t: int, n: int) -> Scalar:
    """tau^(s,t)_n = det of the n x n block of f anchored at (s, t); 1 for n=0."""
    if n < 0:
        raise ValueError("tau order must be nonnegative")
    if n == 0:
        return ONE_SCALAR
    key = (s, t, n)
    cached = f._tau.get(key)
    if cached is not None:
        return cached
    if s < f.i_lo or s + n - 1 > f.i_hi or t < f.j_lo or t + n - 1 > f.j_hi:
        raise WindowError(f"tau block at (s={s},t={t},n={n}) escapes the sample window")
    if f._rational:
        grid = [
            [f.value(s + i, t + j).as_fraction() for j in range(n)]
            for i in range(n)
        ]
        result = Scalar(det_fractions(grid))
    else:
        result = det_exact([[f.value(s + i, t + j) for j in range(n)] for i in range(n)])
    f._tau[key] = result
    return result


class TodaSolution:
    """Evaluators for the two fields, memoized per site."""

    __slots__ = ("_a", "_b", "description", "_memo")

    def __init__(self, a: Callable, b: Callable, description: str = ""):
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "description", description)
        object.__setattr__(self, "_memo", {})

    def a(self, s: int, t: int, n: int) -> Scalar:
        key = ("a", s, t, n)
        v = self._memo.get(key)
        if v is None:
            v = self._a(s, t, n)
            self._memo[key] = v
        return v

    def b(self, s: int, t: int, n: int) -> Scalar:
        if n == 0:
            return ZERO_SCALAR
        key = ("b", s, t, n)
        v = self._memo.get(key)
        if v is None:
            v = self._b(s, t, n)
            self._memo[key] = v
        return v


def ab_from_f(f: SampleFunction) -> TodaSolution:
    """The dependent-variable transformation from a sample grid.

    a^(s,t)_n = tau^(s+1,t)_{n+1} tau^(s,t)_n / (tau^(s+1,t)_n tau^(s,t)_{n+1}),
    b^(s,t)_n = tau^(s,t+1)_{n-1} tau^(s,t)_{n+1} / (tau^(s,t+1)_n tau^(s,t)_n),
    with b^(s,t)_0 = 0 by convention.
    """

    def a(s, t, n):
        den = tau(f, s + 1, t, n) * tau(f, s, t, n + 1)
        if den.is_zero():
            raise SingularMinorError(s, t, n)
        return tau(f, s + 1, t, n + 1) * tau(f, s, t, n) / den

    def b(s, t, n):
        den = tau(f, s, t + 1, n) * tau(f, s, t, n)
        if den.is_zero():
            raise SingularMinorError(s, t, n)
        return tau(f, s, t + 1, n - 1) * tau(f, s, t, n + 1) / den

    return TodaSolution(a, b, "determinant solution from a sample grid")


def closed_form_apq(a0, p, q) -> TodaSolution:
    """The closed-form solution with parameters a and families p, q:

    a^(s,t)_n = [p]_{s+1}^{s+n} (1 - a [p]_1^s [q]_1^{t+n}),
    b^(s,t)_n = a [p]_1^{s+n-1} [q]_1^t (1 - [q]_{t+1}^{t+n}).

    Interval products use the telescoping reversed branch; with the inclusive
    reading the evolution equations fail on windows with negative s or t.
    """
    a0 = _coerce_strict(a0)

    def a(s, t, n):
        lead = bracket(p, s + 1, s + n, convention="telescoping")
        tail = a0 * bracket(p, 1, s, convention="telescoping") \
            * bracket(q, 1, t + n, convention="telescoping")
        return lead * (ONE_SCALAR - tail)

    def b(s, t, n):
        lead = a0 * bracket(p, 1, s + n - 1, convention="telescoping") \
            * bracket(q, 1, t, convention="telescoping")
        return lead * (ONE_SCALAR - bracket(q, t + 1, t + n, convention="telescoping"))

    return TodaSolution(a, b, "closed-form solution")


def require_nonzero(sol: TodaSolution, s: int, t: int, n: int, field: str = "a") -> Scalar:
    v = sol.a(s, t, n) if field == "a" else sol.b(s, t, n)
    if v.is_zero():
        raise NonvanishingError(f"{field}^({s},{t})_{n} = 0 violates the nonvanishing hypothesis")
    return v


def _site(s, t, n):
    return {"s": s, "t": t, "n": n}


def verify_evolution(sol: TodaSolution, s_range, t_range, n_range) -> list:
    """Check the evolution equations on a window; returns violating sites."""
    report = []
    for s in s_range:
        for t in t_range:
            for n in n_range:
                lhs = sol.a(s, t + 1, n) + sol.b(s + 1, t, n)
                rhs = sol.a(s, t, n) + sol.b(s, t, n + 1)
                if lhs != rhs:
                    report.append(
                        {"site": _site(s, t, n), "equation": "sum",
                         "lhs": str(lhs), "rhs": str(rhs)}
                    )
                lhs = sol.a(s, t + 1, n) * sol.b(s + 1, t, n + 1)
                rhs = sol.a(s, t, n + 1) * sol.b(s, t, n + 1)
                if lhs != rhs:
                    report.append(
                        {"site": _site(s, t, n), "equation": "product",
                         "lhs": str(lhs), "rhs": str(rhs)}
                    )
                if n == 0 and not sol.b(s, t, 0).is_zero():
                    report.append(
                        {"site": _site(s, t, 0), "equation": "boundary",
                         "lhs": str(sol.b(s, t, 0)), "rhs": "0"}
                    )
    return report


def verify_bilinear(f: SampleFunction, s_range, t_range, n_range) -> list:
    """Check the bilinear identity
    tau^(s+1,t+1)_{n-1} tau^(s,t)_{n+1} - tau^(s+1,t+1)_n tau^(s,t)_n
    + tau^(s+1,t)_n tau^(s,t+1)_n = 0 for n >= 1.  Holds for every f."""
    report = []
    for s in s_range:
        for t in t_range:
            for n in n_range:
                if n < 1:
                    continue
                value = (
                    tau(f, s + 1, t + 1, n - 1) * tau(f, s, t, n + 1)
                    - tau(f, s + 1, t + 1, n) * tau(f, s, t, n)
                    + tau(f, s + 1, t, n) * tau(f, s, t + 1, n)
                )
                if not value.is_zero():
                    report.append(
                        {"site": _site(s, t, n), "equation": "bilinear",
                         "lhs": str(value), "rhs": "0"}
                    )
    return report


def gauge(f: SampleFunction, phi) -> SampleFunction:
    """Column scaling f_{i,j} -> phi_j f_{i,j} (the full gauge freedom)."""
    factors = {}
    for j in range(f.j_lo, f.j_hi + 1):
        v = _coerce_strict(phi(j) if callable(phi) else phi[j])
        if v.is_zero():
            raise GaugeError(f"gauge factor phi_{j} = 0")
        factors[j] = v
    values = {
        (i, j): factors[j] * f.value(i, j)
        for i in range(f.i_lo, f.i_hi + 1)
        for j in range(f.j_lo, f.j_hi + 1)
    }
    return SampleFunction(f.window, values)


def fundamental_check(f: SampleFunction, lattice: RegularLattice, points, sol: TodaSolution | None = None) -> list:
    """Exact comparison f_{i,j}/f_{x(j),j} = g(L; a,b; i, y(i); x(j), j)."""
    if sol is None:
        sol = ab_from_f(f)
    report = []
    for (i, j) in points:
        xj = lattice.x_of(j)
        anchor = f.value(xj, j)
        if anchor.is_zero():
            raise NonvanishingError(f"f({xj},{j}) = 0; the f-ratio is undefined")
        lhs = f.value(i, j) / anchor
        rhs = g_sum(lattice, sol, (i, lattice.y_of(i)), (xj, j))
        if lhs != rhs:
            report.append(
                {"site": [i, j], "lhs": str(lhs), "rhs": str(rhs)}
            )
    return report


def ni_sum_check(f: SampleFunction, lattice: RegularLattice, s: int, t: int, n: int) -> dict:
    """Three-way identity: tau ratio = non-intersecting path sum = telescoped
    product of a-values."""
    sol = ab_from_f(f)
    xt = lattice.x_of(t)
    den = tau(f, xt, t, n)
    if den.is_zero():
        raise SingularMinorError(xt, t, n)
    ratio = tau(f, s, t, n) / den
    path_sum = ZERO_SCALAR
    for paths in enum_ni_tuples(lattice, s, t, n):
        w = ONE_SCALAR
        for path in paths:
            w = w * path_weight(lattice, sol, path)
        path_sum = path_sum + w
    product = ONE_SCALAR
    for i in range(1, s - xt + 1):
        for k in range(1, n + 1):
            product = product * sol.a(s - i, t, k - 1)
    return {
        "instance": {"s": s, "t": t, "n": n},
        "tauRatio": str(ratio),
        "pathSum": str(path_sum),
        "product": str(product),
        "equal": ratio == path_sum == product,
    }


# -- random sampling -----------------------------------------------------------


def random_sample_function(rng, window, lo: int = 1, hi: int = 9) -> SampleFunction:
    """Independent uniform integer entries in [lo, hi]."""
    (i_lo, i_hi), (j_lo, j_hi) = window
    values = {
        (i, j): Scalar(Fraction(rng.randint(lo, hi)))
        for i in range(i_lo, i_hi + 1)
        for j in range(j_lo, j_hi + 1)
    }
    return SampleFunction(window, values)


_RESAMPLE_ERRORS = (
    SingularMinorError, NonvanishingError, WeightError, ZeroDivisionError,
)


def with_nonsingular_f(rng, window, consumer, max_resample: int = 100):
    """Run consumer(f) on fresh random grids until no singular minor is hit."""
    for _ in range(max_resample):
        f = random_sample_function(rng, window)
        try:
            return consumer(f)
        except _RESAMPLE_ERRORS:
            continue
    raise ResampleExhaustedError(
        f"no nonsingular sample after {max_resample} attempts"
    )

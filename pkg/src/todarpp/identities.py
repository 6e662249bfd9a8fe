"""The bijection between non-intersecting path tuples and bounded reverse
plane partitions, the alpha weight grid, and the multiplicative
partition-function identities.

Diagonal bookkeeping: the grid position (u, v) lies on diagonal l = v - u.
Row-type diagonals {lambda_i - i} carry a-values, column-type diagonals
{j - 1 - lambda'_j} carry b-values; together they tile [-r, c-1].

The explicit diagonal-variable weight of a filling is

    v(pi) = prod_l x_l^{tr_l(pi)} *
            prod_{(i,j)} prod_{k=1}^{pi_{i,j}}
                (1 - [x]_{-n+j+k-1-lambda'_{-n+j+k-1}}^{j-i-1})
              / (1 - [x]_{-n+j+k-lambda'_{-n+j+k}}^{j-i})

with conjugate parts extended by r at nonpositive indices.  The denominator's
lower index carries a minus sign on the conjugate part; the plus variant
fails the small-shape cross-checks against the product formula while the
minus variant passes and matches the q-specialized form.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Callable, Iterable

from .errors import (
    BijectionError, RangeError, UndefinedAlphaError, WeightError,
)
from .algebra.bracket import bracket
from .algebra.laurent import LaurentPoly, ONE, ZERO, divide_exact
from .algebra.scalar import Scalar, ONE_SCALAR, ZERO_SCALAR
from .algebra.series import TruncatedSeries, geometric_inverse
from .algebra.variables import Variable
from .lattice import LatticePath, lattice_from_partition, path_weight
from .shapes import PartitionShape, RppTable, enumerate_rpp
from .toda import TodaSolution, closed_form_apq, require_nonzero


# -- the alpha grid -----------------------------------------------------------


def _diagonal_tables(shape: PartitionShape):
    row = {}
    for i in range(1, shape.rows + 1):
        row[shape.parts[i - 1] - i] = i
    col = {}
    for j in range(1, shape.cols + 1):
        col[j - 1 - shape.conj_ext(j)] = j
    return row, col


def alpha(shape: PartitionShape, n: int, sol: TodaSolution, u: int, v: int) -> Scalar:
    """The weight-grid entry at row u, column v."""
    r, c = shape.rows, shape.cols
    row, col = _diagonal_tables(shape)
    l = v - u
    if l in row:
        i = row[l]
        k = u - i
        if k >= n:
            raise RangeError(f"alpha({u},{v}): row clause shift k={k} >= n={n}")
        return sol.a(r - i, c - shape.parts[i - 1], n - k - 1)
    if l in col:
        j = col[l]
        k = v - (j - 1)
        if k >= n:
            raise RangeError(f"alpha({u},{v}): column clause shift k={k} >= n={n}")
        return sol.b(r - shape.conj_ext(j), c - j, n - k)
    raise UndefinedAlphaError(
        f"position ({u},{v}) on diagonal {l} outside [{-r}, {c - 1}]"
    )


def rpp_weight(shape: PartitionShape, n: int, sol: TodaSolution, pi: RppTable) -> Scalar:
    """Weight of a filling: the product over cells of telescoping alpha ratios."""
    w = ONE_SCALAR
    for (i, j) in shape.cells():
        for k in range(1, pi.entry(i, j) + 1):
            num = alpha(shape, n, sol, i + k - 1, j + k - 2)
            den = alpha(shape, n, sol, i + k - 1, j + k - 1)
            if num.is_zero() or den.is_zero():
                raise WeightError(
                    f"vanishing alpha for cell ({i},{j}) at level {k}"
                )
            w = w * (num / den)
    return w


# -- the bijection --------------------------------------------------------------


def _border_profile(shape: PartitionShape):
    """eta(i) = c - lambda_{r-i} for the strips 0..r-1."""
    r, c = shape.rows, shape.cols
    return [c - shape.part_ext(r - i) for i in range(r)]


def lp_to_rpp(paths, shape: PartitionShape, n: int) -> RppTable:
    """Fold an n-tuple of non-intersecting paths into a bounded filling.

    Path m runs from (r+m, m) to (m, c+m).  After the (-m,-m) shift all paths
    run from (r,0) to (0,c); the entry of a cell counts the shifted paths
    passing strictly northwest of it, and the 180-degree rotation turns the
    strip/column coordinates into shape coordinates.
    """
    paths = tuple(paths)
    if len(paths) != n:
        raise BijectionError(f"expected {n} paths, got {len(paths)}")
    r, c = shape.rows, shape.cols
    if n == 0:
        return RppTable(shape, 0, [[0] * p for p in shape.parts])
    lattice = lattice_from_partition(shape, margin=n)
    kappa = []
    for m, path in enumerate(paths):
        if path.start != (r + m, m):
            raise BijectionError(f"path {m} starts at {path.start}, expected {(r + m, m)}")
        if path.end != (m, c + m):
            raise BijectionError(f"path {m} ends at {path.end}, expected {(m, c + m)}")
        cols = {}
        prev = None
        for point in path.points():
            if prev is not None and point[0] == prev[0] - 1:
                cols[point[0] - m] = point[1] - m  # shifted strip -> shifted column
            if not lattice.member(*point):
                raise BijectionError(f"path {m} leaves the staircase at {point}")
            prev = point
        if sorted(cols) != list(range(r)):
            raise BijectionError(f"path {m} does not cross every strip exactly once")
        kappa.append(cols)
    seen = set()
    for path in paths:
        for point in path.points():
            if point in seen:
                raise BijectionError(f"paths intersect at {point}")
            seen.add(point)
    rows = []
    for big_i in range(1, r + 1):
        strip = r - big_i
        row = []
        for big_j in range(1, shape.parts[big_i - 1] + 1):
            row.append(sum(1 for m in range(n) if kappa[m][strip] > c - big_j))
        rows.append(row)
    try:
        return RppTable(shape, n, rows)
    except ValueError as exc:  # pragma: no cover - guarded by the checks above
        raise BijectionError(f"tuple does not fold to a valid filling: {exc}") from exc


def rpp_to_lp(pi: RppTable, shape: PartitionShape, n: int):
    """Unfold a bounded filling into its non-intersecting path tuple."""
    r, c = shape.rows, shape.cols
    if pi.shape != shape:
        raise BijectionError("filling has the wrong shape")
    if any(v > n for row in pi.entries for v in row):
        raise BijectionError("filling has parts above the bound")
    eta = _border_profile(shape)
    paths = []
    for m in range(n):
        need = n - m
        kappa = []
        for strip in range(r):
            big_i = r - strip
            row = pi.entries[big_i - 1]
            first = None
            for big_j, value in enumerate(row, start=1):
                if value >= need:
                    first = big_j
                    break
            kappa.append(c + 1 - first if first is not None else eta[strip])
        steps = []
        col = m
        for strip in range(r - 1, -1, -1):
            target = kappa[strip] + m
            steps.append("E" * (target - col))
            steps.append("N")
            col = target
        steps.append("E" * (c + m - col))
        paths.append(LatticePath((r + m, m), "".join(steps)))
    return tuple(paths)


# -- diagonal-variable weights (the explicit solution) --------------------------


def _xvar(l: int) -> Variable:
    return Variable("x", l)


def _interval_mono(lo: int, hi: int):
    return tuple((_xvar(l), 1) for l in range(lo, hi + 1))


def _hook_binomial(lo: int, hi: int) -> LaurentPoly:
    """1 - x_lo x_{lo+1} ... x_hi."""
    return ONE - LaurentPoly.monomial(_interval_mono(lo, hi))


def _weight_x_parts(shape: PartitionShape, n: int, pi: RppTable):
    """Trace monomial plus numerator/denominator binomial factor multisets.

    Factors are keyed by their variable interval (lo, hi); identical keys in
    numerator and denominator cancel exactly (the k-ladders of vertically
    adjacent cells telescope).
    """
    num: Counter = Counter()
    den: Counter = Counter()
    for (i, j) in shape.cells():
        for k in range(1, pi.entry(i, j) + 1):
            idx = -n + j + k - 1
            nlo, nhi = idx - shape.conj_ext(idx), j - i - 1
            idx = -n + j + k
            dlo, dhi = idx - shape.conj_ext(idx), j - i
            if nlo > nhi or dlo > dhi:
                raise WeightError(
                    f"cell ({i},{j}) level {k}: degenerate weight factor"
                )
            num[(nlo, nhi)] += 1
            den[(dlo, dhi)] += 1
    for key in sorted(set(num) & set(den)):
        both = min(num[key], den[key])
        num[key] -= both
        den[key] -= both
        if not num[key]:
            del num[key]
        if not den[key]:
            del den[key]
    r, c = shape.rows, shape.cols
    trace = tuple(
        (_xvar(l), pi.trace(l)) for l in range(1 - r, c) if pi.trace(l)
    )
    return trace, num, den


def weight_x(shape: PartitionShape, n: int, pi: RppTable) -> Scalar:
    """The diagonal-variable weight of one filling, as a canonical Scalar."""
    trace, num, den = _weight_x_parts(shape, n, pi)
    num_poly = LaurentPoly.monomial(trace)
    for key, mult in sorted(num.items()):
        num_poly = num_poly * _hook_binomial(*key) ** mult
    den_poly = ONE
    for key, mult in sorted(den.items()):
        den_poly = den_poly * _hook_binomial(*key) ** mult
    # distinct interval binomials are irreducible and pairwise coprime,
    # and cannot divide the trace monomial: the fraction is already reduced
    return Scalar._raw(num_poly, den_poly, True)


class _BinomialFractionSum:
    """Exact sum of fractions whose denominators are products of keyed
    factor polynomials.

    Terms are grouped by denominator multiset; each group accumulates a plain
    polynomial numerator, and every factor polynomial is expanded only when a
    group is folded over the common denominator.  With irreducible keys the
    final fraction is canonical without a generic gcd.
    """

    def __init__(self, factor_poly: Callable, keys_irreducible: bool):
        self._factor = factor_poly
        self._irreducible = keys_irreducible
        self._groups: dict = {}

    def add(self, numerator: LaurentPoly, den: Counter):
        key = tuple(sorted(den.items()))
        self._groups[key] = self._groups.get(key, ZERO) + numerator

    def total(self) -> Scalar:
        if not self._groups:
            return ZERO_SCALAR
        master: Counter = Counter()
        for key in self._groups:
            for fk, mult in key:
                master[fk] = max(master[fk], mult)
        total = ZERO
        for key, num in sorted(self._groups.items()):
            have = dict(key)
            for fk in sorted(master):
                extra = master[fk] - have.get(fk, 0)
                if extra:
                    num = num * self._factor(fk) ** extra
            total = total + num
        remaining = dict(master)
        for fk in sorted(remaining):
            poly = self._factor(fk)
            while remaining[fk] > 0:
                q = divide_exact(total, poly)
                if q is None:
                    break
                total = q
                remaining[fk] -= 1
        den_poly = ONE
        for fk in sorted(remaining):
            if remaining[fk]:
                den_poly = den_poly * self._factor(fk) ** remaining[fk]
        return Scalar._raw(total, den_poly, self._irreducible)


def pf_x_lhs(shape: PartitionShape, n: int) -> Scalar:
    """Brute-force partition function: sum of weight_x over every filling."""
    acc = _BinomialFractionSum(lambda key: _hook_binomial(*key), True)
    for pi in enumerate_rpp(shape, n):
        trace, num, den = _weight_x_parts(shape, n, pi)
        poly = LaurentPoly.monomial(trace)
        for key, mult in sorted(num.items()):
            poly = poly * _hook_binomial(*key) ** mult
        acc.add(poly, den)
    return acc.total()


def pf_x_rhs(shape: PartitionShape, n: int) -> Scalar:
    """The hook-interval product form of the bounded partition function."""
    num: Counter = Counter()
    den: Counter = Counter()
    for (i, j) in shape.cells():
        hi = shape.parts[i - 1] - i
        nlo = -n + j - shape.conj_ext(-n + j)
        dlo = j - shape.conj_ext(j)
        num[(nlo, hi)] += 1
        den[(dlo, hi)] += 1
    for key in sorted(set(num) & set(den)):
        both = min(num[key], den[key])
        num[key] -= both
        den[key] -= both
        if not num[key]:
            del num[key]
        if not den[key]:
            del den[key]
    num_poly = ONE
    for key, mult in sorted(num.items()):
        num_poly = num_poly * _hook_binomial(*key) ** mult
    den_poly = ONE
    for key, mult in sorted(den.items()):
        den_poly = den_poly * _hook_binomial(*key) ** mult
    return Scalar._raw(num_poly, den_poly, True)


# -- the general partition-function identity ------------------------------------


def pf_lhs(shape: PartitionShape, n: int, sol: TodaSolution) -> Scalar:
    total = ZERO_SCALAR
    for pi in enumerate_rpp(shape, n):
        total = total + rpp_weight(shape, n, sol, pi)
    return total


def pf_rhs(shape: PartitionShape, n: int, sol: TodaSolution) -> Scalar:
    r, c = shape.rows, shape.cols
    out = ONE_SCALAR
    for i in range(1, r + 1):
        for k in range(1, n + 1):
            num = require_nonzero(sol, r - i, c, k - 1, "a")
            den = require_nonzero(sol, r - i, c - shape.parts[i - 1], k - 1, "a")
            out = out * (num / den)
    return out


def lemma_4_2_check(shape: PartitionShape, n: int, f, sol: TodaSolution | None = None) -> list:
    """Weight transport across the bijection, for every filling."""
    from .toda import ab_from_f

    if sol is None:
        sol = ab_from_f(f)
    r, c = shape.rows, shape.cols
    lattice = lattice_from_partition(shape, margin=n)
    denom = ONE_SCALAR
    for i in range(1, r + 1):
        for k in range(1, n + 1):
            denom = denom * require_nonzero(sol, r - i, c - shape.parts[i - 1], k - 1, "a")
    report = []
    for pi in enumerate_rpp(shape, n):
        lhs = rpp_weight(shape, n, sol, pi)
        paths = rpp_to_lp(pi, shape, n)
        w = ONE_SCALAR
        for path in paths:
            w = w * path_weight(lattice, sol, path)
        rhs = w / denom
        if lhs != rhs:
            report.append({"site": pi.to_json(), "lhs": str(lhs), "rhs": str(rhs)})
    return report


# -- specializations -------------------------------------------------------------


def _qvar() -> Variable:
    return Variable("q", 0)


def _q_binomial(e: int) -> LaurentPoly:
    return ONE - LaurentPoly.monomial(((_qvar(), e),))


def _q_counter_ratio(num: Counter, den: Counter, extra_mono=None) -> Scalar:
    for key in sorted(set(num) & set(den)):
        both = min(num[key], den[key])
        num[key] -= both
        den[key] -= both
        if not num[key]:
            del num[key]
        if not den[key]:
            del den[key]
    num_poly = LaurentPoly.monomial(extra_mono) if extra_mono else ONE
    for e, mult in sorted(num.items()):
        num_poly = num_poly * _q_binomial(e) ** mult
    den_poly = ONE
    for e, mult in sorted(den.items()):
        den_poly = den_poly * _q_binomial(e) ** mult
    # powers of q-binomials are not coprime across exponents: reduce for real
    return Scalar(num_poly, den_poly)


def macmahon_rhs(r: int, c: int, n: int) -> Scalar:
    """The boxed triple product in a single variable q."""
    num: Counter = Counter()
    den: Counter = Counter()
    for i in range(1, r + 1):
        for j in range(1, c + 1):
            for k in range(1, n + 1):
                num[i + j + k - 1] += 1
                den[i + j + k - 2] += 1
    return _q_counter_ratio(num, den)


def macmahon_check(r: int, c: int, n: int) -> dict:
    shape = PartitionShape([c] * r)
    q = _qvar()
    total: Counter = Counter()
    for pi in enumerate_rpp(shape, n):
        total[pi.size()] += 1
    lhs = Scalar(LaurentPoly({(((q, e),) if e else ()): Fraction(m) for e, m in total.items()}))
    rhs = macmahon_rhs(r, c, n)
    return {
        "identity": "macmahon",
        "instance": {"r": r, "c": c, "n": n},
        "lhs": str(lhs),
        "rhs": str(rhs),
        "equal": lhs == rhs,
    }


def q_weight(shape: PartitionShape, n: int, pi: RppTable) -> Scalar:
    """The weight of one filling under the all-variables-to-q specialization,
    computed from the explicit exponent formula."""
    num: Counter = Counter()
    den: Counter = Counter()
    for (i, j) in shape.cells():
        for k in range(1, pi.entry(i, j) + 1):
            ne = n - i - k + 1 + shape.conj_ext(-n + j + k - 1)
            de = n - i - k + 1 + shape.conj_ext(-n + j + k)
            num[ne] += 1
            den[de] += 1
    size = pi.size()
    mono = ((_qvar(), size),) if size else ()
    return _q_counter_ratio(num, den, mono)


def q_product_rhs(shape: PartitionShape, n: int) -> Scalar:
    num: Counter = Counter()
    den: Counter = Counter()
    for (i, j) in shape.cells():
        li = shape.parts[i - 1]
        num[li + shape.conj_ext(j - n) - i - j + n + 1] += 1
        den[li + shape.conj_ext(j) - i - j + 1] += 1
    return _q_counter_ratio(num, den)


def q_check(shape: PartitionShape, n: int) -> dict:
    acc = _BinomialFractionSum(_q_binomial, False)
    for pi in enumerate_rpp(shape, n):
        num: Counter = Counter()
        den: Counter = Counter()
        for (i, j) in shape.cells():
            for k in range(1, pi.entry(i, j) + 1):
                num[n - i - k + 1 + shape.conj_ext(-n + j + k - 1)] += 1
                den[n - i - k + 1 + shape.conj_ext(-n + j + k)] += 1
        for key in sorted(set(num) & set(den)):
            both = min(num[key], den[key])
            num[key] -= both
            den[key] -= both
            if not num[key]:
                del num[key]
            if not den[key]:
                del den[key]
        size = pi.size()
        poly = LaurentPoly.monomial(((_qvar(), size),) if size else ())
        for e, mult in sorted(num.items()):
            poly = poly * _q_binomial(e) ** mult
        acc.add(poly, den)
    lhs = acc.total()
    rhs = q_product_rhs(shape, n)
    return {
        "identity": "qspec",
        "instance": {"shape": str(shape), "n": n},
        "lhs": str(lhs),
        "rhs": str(rhs),
        "equal": lhs == rhs,
    }


# -- the unbounded-parts limit ----------------------------------------------------


def gansner_rhs_truncated(shape: PartitionShape, degree: int) -> TruncatedSeries:
    """Hook-interval product expanded as a multivariate series to total degree D."""
    out = TruncatedSeries.one(degree)
    for (i, j) in shape.cells():
        lo = j - shape.conj_ext(j)
        hi = shape.parts[i - 1] - i
        out = out * geometric_inverse(_hook_binomial(lo, hi), degree)
    return out


def weight_x_series(shape: PartitionShape, n: int, pi: RppTable, degree: int) -> TruncatedSeries:
    """weight_x expanded as a truncated series.

    Factors whose interval monomial has degree beyond the truncated window
    (accounting for the trace monomial's minimum degree) are exactly 1 at
    this precision and are skipped.
    """
    trace, num, den = _weight_x_parts(shape, n, pi)
    size = pi.size()
    if size > degree:
        return TruncatedSeries(degree, {})
    out = TruncatedSeries(degree, {trace: Fraction(1)})
    for (lo, hi), mult in sorted(num.items()):
        if hi - lo + 1 + size > degree:
            continue
        factor = TruncatedSeries.from_poly(_hook_binomial(lo, hi), degree)
        for _ in range(mult):
            out = out * factor
    for (lo, hi), mult in sorted(den.items()):
        if hi - lo + 1 + size > degree:
            continue
        inv = geometric_inverse(_hook_binomial(lo, hi), degree)
        for _ in range(mult):
            out = out * inv
    return out


def gansner_lhs_truncated(shape: PartitionShape, degree: int, n: int | None = None) -> TruncatedSeries:
    """Truncated sum of weight_x at a bound large enough that every
    correction factor is 1 up to the truncation degree (n = D + r + c)."""
    if n is None:
        n = degree + shape.rows + shape.cols
    out = TruncatedSeries(degree, {})
    for pi in enumerate_rpp(shape, min(n, degree)):
        if pi.size() > degree:
            continue
        out = out + weight_x_series(shape, n, pi, degree)
    return out


def gansner_check(shape: PartitionShape, degree: int) -> dict:
    lhs = gansner_lhs_truncated(shape, degree)
    rhs = gansner_rhs_truncated(shape, degree)
    return {
        "identity": "gansner",
        "instance": {"shape": str(shape), "degree": degree},
        "lhs": str(lhs),
        "rhs": str(rhs),
        "equal": lhs == rhs and lhs.collapse() == rhs.collapse(),
    }


# -- the parameterized closed-form pathway -----------------------------------------


MU_READINGS = ("box-complement", "identity", "conjugate", "reversed")


def _mu_functions(shape: PartitionShape, reading: str):
    r, c = shape.rows, shape.cols
    if reading == "identity":
        return shape.part_ext, shape.conj_ext
    if reading == "conjugate":
        return shape.conj_ext, shape.part_ext
    if reading == "reversed":
        return (lambda i: shape.part_ext(r + 1 - i)), (lambda j: shape.conj_ext(c + 1 - j))
    if reading == "box-complement":
        return (
            lambda i: c - shape.part_ext(r + 1 - i),
            lambda j: r - shape.conj_ext(c + 1 - j),
        )
    raise ValueError(f"unknown mu reading {reading!r}")


def boxed_solution(shape: PartitionShape, reading: str = "box-complement") -> TodaSolution:
    """The closed-form solution specialized to a shape's diagonal variables.

    The parameter family substitution is
        a  = [x]_{c-lambda'_c}^{lambda_r - r},
        p_i = [x]_{c-r+i-mu_i}^{c-r+i-mu_{i+1}},
        q_j = [x]_{mu'_{j+1}-j-r+c}^{mu'_j-j-r+c},
    with telescoping interval products; mu is the selected reading.
    """
    r, c = shape.rows, shape.cols
    mu, mu_conj = _mu_functions(shape, reading)
    a0 = bracket("x", c - shape.conj_ext(c), shape.part_ext(r) - r, convention="telescoping")

    def p(i):
        return bracket("x", c - r + i - mu(i), c - r + i - mu(i + 1), convention="telescoping")

    def q(j):
        return bracket("x", mu_conj(j + 1) - j - r + c, mu_conj(j) - j - r + c, convention="telescoping")

    return closed_form_apq(a0, p, q)


def mu_reading_report(shape: PartitionShape, n: int, readings: Iterable[str] = MU_READINGS) -> list:
    """Compare alpha-grid weights under each parameter reading against the
    explicit diagonal-variable weight, filling by filling."""
    out = []
    for reading in readings:
        sol = boxed_solution(shape, reading)
        mismatch = None
        try:
            for pi in enumerate_rpp(shape, n):
                lhs = rpp_weight(shape, n, sol, pi)
                rhs = weight_x(shape, n, pi)
                if lhs != rhs:
                    mismatch = {"pi": pi.to_json(), "alphaWeight": str(lhs), "explicit": str(rhs)}
                    break
        except (WeightError, ZeroDivisionError) as exc:
            mismatch = {"error": str(exc)}
        out.append({"reading": reading, "consistent": mismatch is None, "mismatch": mismatch})
    return out


# -- shared windows ------------------------------------------------------------


def f_window_for(shape: PartitionShape, n: int, extra: int = 0):
    """A sample-grid window large enough for every alpha value, the product
    side of the partition-function identity, and the bijection path weights."""
    size = shape.rows + shape.cols + 2 * n + 2 + extra
    return ((0, size), (0, size))

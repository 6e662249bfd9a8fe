"""Command-line front end: verification suites, enumeration, and generating
functions, all with deterministic JSON output.

Exit codes: 0 all checks hold, 1 some identity failed, 2 usage error,
3 random sampling kept hitting singular minors (bound set by the
TODA_RPP_MAX_RESAMPLE environment variable, default 100).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .errors import ResampleExhaustedError, TodaRppError
from .algebra.scalar import Scalar
from .identities import (
    f_window_for, gansner_check, lemma_4_2_check, lp_to_rpp, macmahon_check,
    macmahon_rhs, pf_lhs, pf_rhs, pf_x_lhs, pf_x_rhs, q_check, q_product_rhs,
    q_weight, rpp_to_lp, rpp_weight, weight_x, gansner_rhs_truncated,
)
from .lattice import g_sum, lattice_from_partition, RegularLattice
from .shapes import PartitionShape, enumerate_rpp
from .toda import (
    SampleFunction, ab_from_f, closed_form_apq, fundamental_check, gauge,
    ni_sum_check, random_sample_function, verify_bilinear, verify_evolution,
    with_nonsingular_f,
)

IDENTITIES = (
    "thm3.2", "thm3.3", "thm4.3", "thm5.1", "lemma3.2", "lemma4.2",
    "macmahon", "gansner", "qspec", "evolution", "bilinear",
)


def max_resample() -> int:
    return int(os.environ.get("TODA_RPP_MAX_RESAMPLE", "100"))


def _parse_shape(text: str) -> PartitionShape:
    return PartitionShape.from_string(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toda-rpp",
        description="Exact checks for the discrete 2D Toda molecule and "
        "reverse-plane-partition partition functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, shape=True):
        if shape:
            p.add_argument("--shape", default="2,1", help="comma-separated parts, empty for the empty shape")
        p.add_argument("--n", type=int, default=2, help="part bound")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=5)
        p.add_argument("--degree", type=int, default=6, help="series truncation degree")
        p.add_argument("--out", default=None, help="write JSON here instead of stdout")

    v = sub.add_parser("verify", help="run an identity suite")
    v.add_argument("--identity", required=True, choices=IDENTITIES)
    v.add_argument("--r", type=int, default=None, help="rectangle rows (macmahon)")
    v.add_argument("--c", type=int, default=None, help="rectangle columns (macmahon)")
    common(v)

    e = sub.add_parser("enumerate", help="stream fillings with weights")
    e.add_argument("--mode", choices=("rational", "q", "x"), default="q")
    common(e)

    g = sub.add_parser("genfun", help="emit a generating function")
    g.add_argument("--identity", required=True, choices=("macmahon", "gansner", "thm5.1", "qspec"))
    g.add_argument("--r", type=int, default=None)
    g.add_argument("--c", type=int, default=None)
    common(g)

    b = sub.add_parser("bijection", help="roundtrip fillings through path tuples")
    common(b)

    t = sub.add_parser("toda-check", help="evolution, bilinear, and gauge checks")
    common(t, shape=False)
    t.add_argument("--window", type=int, default=3, help="half-width of the (s,t) check window")

    return parser


# -- verify drivers -------------------------------------------------------------


def _records_macmahon(args):
    r = args.r if args.r is not None else 2
    c = args.c if args.c is not None else 2
    return [macmahon_check(r, c, args.n)]


def _records_thm51(args):
    shape = _parse_shape(args.shape)
    lhs = pf_x_lhs(shape, args.n)
    rhs = pf_x_rhs(shape, args.n)
    return [{
        "identity": "thm5.1",
        "instance": {"shape": str(shape), "n": args.n},
        "lhs": str(lhs),
        "rhs": str(rhs),
        "equal": lhs == rhs,
    }]


def _records_thm43(args):
    shape = _parse_shape(args.shape)
    rng = random.Random(args.seed)
    records = []
    for trial in range(args.trials):
        def body(f):
            sol = ab_from_f(f)
            lhs = pf_lhs(shape, args.n, sol)
            rhs = pf_rhs(shape, args.n, sol)
            return lhs, rhs

        lhs, rhs = with_nonsingular_f(rng, f_window_for(shape, args.n), body, max_resample())
        records.append({
            "identity": "thm4.3",
            "instance": {"shape": str(shape), "n": args.n, "trial": trial},
            "lhs": str(lhs),
            "rhs": str(rhs),
            "equal": lhs == rhs,
        })
    return records


def _records_thm33(args):
    shape = _parse_shape(args.shape)
    rng = random.Random(args.seed)
    lattice = lattice_from_partition(shape, margin=args.n)
    records = []
    for trial in range(args.trials):
        out = with_nonsingular_f(
            rng, f_window_for(shape, args.n),
            lambda f: ni_sum_check(f, lattice, shape.rows, shape.cols, args.n),
            max_resample(),
        )
        records.append({
            "identity": "thm3.3",
            "instance": {"shape": str(shape), "n": args.n, "trial": trial},
            "lhs": out["tauRatio"],
            "rhs": out["pathSum"],
            "product": out["product"],
            "equal": out["equal"],
        })
    return records


def _records_thm32(args):
    shape = _parse_shape(args.shape)
    rng = random.Random(args.seed)
    lattice = lattice_from_partition(shape, margin=args.n)
    points = [p for p in lattice.points()]
    records = []
    for trial in range(args.trials):
        sample = [rng.choice(points) for _ in range(20)]
        report = with_nonsingular_f(
            rng, f_window_for(shape, args.n),
            lambda f: fundamental_check(f, lattice, sample),
            max_resample(),
        )
        records.append({
            "identity": "thm3.2",
            "instance": {"shape": str(shape), "trial": trial, "points": len(sample)},
            "violations": report,
            "equal": report == [],
        })
    return records


def _random_profile(rng, rows=4, width=4):
    vals = sorted((rng.randint(0, width) for _ in range(rows)), reverse=True)
    return RegularLattice(0, vals, width + rows + 2, 0)


def _records_lemma32(args):
    rng = random.Random(args.seed)
    records = []
    trial = 0
    while trial < args.trials:
        lattice = _random_profile(rng)
        corners = [p for p in lattice.points() if lattice.is_convex_corner(p)]
        if not corners:
            continue
        corner = rng.choice(corners)
        smaller = lattice.delete_corner(corner)
        diag = corner[0] - corner[1]
        pts = [p for p in smaller.points() if p[0] - p[1] != diag]
        pairs = []
        while len(pairs) < 10:
            frm = rng.choice(pts)
            to = rng.choice(pts)
            if to[0] <= frm[0] and to[1] >= frm[1]:
                pairs.append((frm, to))
        size = lattice.i_bot + lattice.j_max + 4

        def body(f):
            sol = ab_from_f(f)
            bad = []
            for frm, to in pairs:
                before = g_sum(lattice, sol, frm, to)
                after = g_sum(smaller, sol, frm, to)
                if before != after:
                    bad.append({"site": [list(frm), list(to)], "lhs": str(before), "rhs": str(after)})
            return bad

        report = with_nonsingular_f(rng, ((0, size), (0, size)), body, max_resample())
        records.append({
            "identity": "lemma3.2",
            "instance": {"profile": list(lattice.profile), "corner": list(corner), "trial": trial},
            "violations": report,
            "equal": report == [],
        })
        trial += 1
    return records


def _records_lemma42(args):
    shape = _parse_shape(args.shape)
    rng = random.Random(args.seed)
    records = []
    for trial in range(args.trials):
        report = with_nonsingular_f(
            rng, f_window_for(shape, args.n),
            lambda f: lemma_4_2_check(shape, args.n, f),
            max_resample(),
        )
        records.append({
            "identity": "lemma4.2",
            "instance": {"shape": str(shape), "n": args.n, "trial": trial},
            "violations": report,
            "equal": report == [],
        })
    return records


def _records_gansner(args):
    shape = _parse_shape(args.shape)
    return [gansner_check(shape, args.degree)]


def _records_qspec(args):
    shape = _parse_shape(args.shape)
    return [q_check(shape, args.n)]


def _records_evolution(args):
    rng = random.Random(args.seed)
    records = []
    span = range(0, 3)
    for trial in range(args.trials):
        report = with_nonsingular_f(
            rng, ((0, 10), (0, 10)),
            lambda f: verify_evolution(ab_from_f(f), span, span, range(0, 3)),
            max_resample(),
        )
        records.append({
            "identity": "evolution",
            "instance": {"solution": "determinant", "trial": trial},
            "violations": report,
            "equal": report == [],
        })
    sol = closed_form_apq(Scalar.variable("a"), "p", "q")
    report = verify_evolution(sol, range(-3, 4), range(-3, 4), range(0, 4))
    records.append({
        "identity": "evolution",
        "instance": {"solution": "closed-form symbolic"},
        "violations": report,
        "equal": report == [],
    })
    return records


def _records_bilinear(args):
    rng = random.Random(args.seed)
    records = []
    span = range(0, 3)
    for trial in range(args.trials):
        f = random_sample_function(rng, ((0, 8), (0, 8)))
        report = verify_bilinear(f, span, span, range(1, 3))
        records.append({
            "identity": "bilinear",
            "instance": {"f": "random", "trial": trial},
            "violations": report,
            "equal": report == [],
        })
    ones = SampleFunction(((0, 6), (0, 6)), [[1] * 7 for _ in range(7)])
    report = verify_bilinear(ones, span, span, range(1, 3))
    records.append({
        "identity": "bilinear",
        "instance": {"f": "all-ones"},
        "violations": report,
        "equal": report == [],
    })
    return records


_VERIFY = {
    "macmahon": _records_macmahon,
    "thm5.1": _records_thm51,
    "thm4.3": _records_thm43,
    "thm3.3": _records_thm33,
    "thm3.2": _records_thm32,
    "lemma3.2": _records_lemma32,
    "lemma4.2": _records_lemma42,
    "gansner": _records_gansner,
    "qspec": _records_qspec,
    "evolution": _records_evolution,
    "bilinear": _records_bilinear,
}


# -- other commands ---------------------------------------------------------------


def _cmd_enumerate(args):
    shape = _parse_shape(args.shape)
    r, c = shape.rows, shape.cols

    def weigher():
        if args.mode == "q":
            return lambda pi: q_weight(shape, args.n, pi)
        if args.mode == "x":
            return lambda pi: weight_x(shape, args.n, pi)
        rng = random.Random(args.seed)

        def body(f):
            sol = ab_from_f(f)
            pf_lhs(shape, args.n, sol)  # force every weight; rejects singular grids
            return sol

        sol = with_nonsingular_f(rng, f_window_for(shape, args.n), body, max_resample())
        return lambda pi: rpp_weight(shape, args.n, sol, pi)

    w = weigher()
    records = []
    for pi in enumerate_rpp(shape, args.n):
        records.append({
            "pi": pi.to_json(),
            "size": pi.size(),
            "traces": [pi.trace(l) for l in range(1 - r, c)] if r else [],
            "weight": str(w(pi)),
        })
    return {"records": records, "count": len(records)}, True


def _cmd_genfun(args):
    shape = _parse_shape(args.shape)
    if args.identity == "macmahon":
        r = args.r if args.r is not None else 1
        c = args.c if args.c is not None else 1
        value = str(macmahon_rhs(r, c, args.n))
        instance = {"r": r, "c": c, "n": args.n}
    elif args.identity == "gansner":
        value = str(gansner_rhs_truncated(shape, args.degree))
        instance = {"shape": str(shape), "degree": args.degree}
    elif args.identity == "thm5.1":
        value = str(pf_x_rhs(shape, args.n))
        instance = {"shape": str(shape), "n": args.n}
    else:
        value = str(q_product_rhs(shape, args.n))
        instance = {"shape": str(shape), "n": args.n}
    return {"identity": args.identity, "instance": instance, "value": value}, True


def _cmd_bijection(args):
    shape = _parse_shape(args.shape)
    records = []
    ok = True
    for pi in enumerate_rpp(shape, args.n):
        paths = rpp_to_lp(pi, shape, args.n)
        back = lp_to_rpp(paths, shape, args.n)
        good = back == pi
        ok = ok and good
        records.append({
            "pi": pi.to_json(),
            "paths": [p.to_json() for p in paths],
            "roundtrip": good,
        })
    return {"records": records, "count": len(records), "allEqual": ok}, ok


def _cmd_toda_check(args):
    rng = random.Random(args.seed)
    span = range(-args.window, args.window + 1)
    records = _records_bilinear(args) + _records_evolution(args)
    for trial in range(args.trials):
        size = 8

        def body(f):
            phi = {j: Scalar(rng.randint(1, 9)) for j in range(0, size + 1)}
            g = gauge(f, phi)
            sol_f = ab_from_f(f)
            sol_g = ab_from_f(g)
            bad = []
            for s in range(0, 2):
                for t in range(0, 2):
                    for n in range(0, 3):
                        if sol_f.a(s, t, n) != sol_g.a(s, t, n) or sol_f.b(s, t, n) != sol_g.b(s, t, n):
                            bad.append({"site": {"s": s, "t": t, "n": n}})
            return bad

        report = with_nonsingular_f(rng, ((0, 8), (0, 8)), body, max_resample())
        records.append({
            "identity": "gauge",
            "instance": {"trial": trial},
            "violations": report,
            "equal": report == [],
        })
    ok = all(r["equal"] for r in records)
    return {"records": records, "allEqual": ok}, ok


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            records = _VERIFY[args.identity](args)
            ok = all(r["equal"] for r in records)
            payload = {"command": "verify", "identity": args.identity,
                       "records": records, "allEqual": ok}
        elif args.command == "enumerate":
            payload, ok = _cmd_enumerate(args)
            payload = {"command": "enumerate", **payload}
        elif args.command == "genfun":
            payload, ok = _cmd_genfun(args)
            payload = {"command": "genfun", **payload}
        elif args.command == "bijection":
            payload, ok = _cmd_bijection(args)
            payload = {"command": "bijection", **payload}
        else:
            payload, ok = _cmd_toda_check(args)
            payload = {"command": "toda-check", **payload}
    except ResampleExhaustedError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except TodaRppError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

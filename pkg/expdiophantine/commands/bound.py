"""x^2 + C = y^n: the exponent bound, the solver and class groups."""

from expdiophantine import classgroup, solvers
from expdiophantine.commands import Outcome, pick
from expdiophantine.models import XCYNStatus


def bound(args, settings) -> Outcome:
    return Outcome({"C": args.c}, solvers.theorem41_bound(args.c))


def solve_xc(args, settings) -> Outcome:
    y_max = pick(args.y_max, settings.xc_y_max)
    n_max = pick(args.n_max, settings.xc_n_max)
    found = solvers.solve_x2_plus_C(args.c, y_max, n_max)
    payload = {"certificate": solvers.theorem41_bound(args.c), "solutions": found}
    violation = any(s.status is XCYNStatus.VIOLATION for s in found)
    return Outcome({"C": args.c, "y_max": y_max, "n_max": n_max}, payload, violation)


def bound_sweep(args, settings) -> Outcome:
    y_max = pick(args.y_max, settings.xc_y_max)
    n_max = pick(args.n_max, settings.xc_n_max)
    sweep = solvers.theorem41_sweep(args.c_max, y_max, n_max)
    found = [s for C in sorted(sweep) for s in sweep[C]]
    violations = [s for s in found if s.status is XCYNStatus.VIOLATION]
    payload = {"solutions": found, "violations": len(violations)}
    return Outcome({"C_max": args.c_max, "y_max": y_max, "n_max": n_max}, payload, bool(violations))


def class_group(args, settings) -> Outcome:
    h, exponent, table = classgroup.class_exponent(args.p)
    return Outcome({"P": args.p}, table, h % exponent != 0)


def register(subparsers) -> None:
    p = subparsers.add_parser("bound", help="certificate for the exponent bound N of x^2 + C = y^n")
    p.add_argument("--c", type=int, required=True)
    p.set_defaults(handler=bound)

    p = subparsers.add_parser("solve-xc", help="x^2 + C = y^n with x, y prime powers")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--y-max", type=int)
    p.add_argument("--n-max", type=int)
    p.set_defaults(handler=solve_xc)

    p = subparsers.add_parser("bound-sweep", help="solve-xc for every even C <= C_max")
    p.add_argument("--c-max", type=int, required=True)
    p.add_argument("--y-max", type=int)
    p.add_argument("--n-max", type=int)
    p.set_defaults(handler=bound_sweep)

    p = subparsers.add_parser("classgroup", help="reduced forms, class number and exponent for Q(sqrt(-P))")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(handler=class_group)

"""Power-sum searches and the checks on 2^a + 2^b + 1 = x^2."""

from expdiophantine import solvers
from expdiophantine.commands import Outcome, pick, sign
from expdiophantine.models import Family, TraceOutcome

EXPECTED_POW2 = {
    (1, 1): {Family.A, Family.B, Family.C},
    (-1, 1): {Family.D, Family.E, Family.F, Family.G},
    (1, -1): {Family.B1},
    (-1, -1): {Family.B1},
}


def search_pow2(args, settings) -> Outcome:
    a_max = pick(args.a_max, settings.pow2_a_max)
    found = solvers.search_pow2(a_max, args.sign, args.const)
    allowed = EXPECTED_POW2[(args.sign, args.const)]
    return Outcome(
        {"sign": args.sign, "const_sign": args.const, "a_max": a_max},
        found,
        any(s.family not in allowed for s in found),
    )


def search_odd_prime(args, settings) -> Outcome:
    p_max = pick(args.p_max, settings.odd_p_max)
    a_max = pick(args.a_max, settings.odd_a_max)
    found = solvers.search_odd_prime(p_max, a_max, args.sign)
    violation = bool(found) if args.sign == 1 else any(s.family is Family.OTHER for s in found)
    return Outcome({"sign": args.sign, "p_max": p_max, "a_max": a_max}, found, violation)


def search_t14(args, settings) -> Outcome:
    y_max = pick(args.y_max, settings.t14_y_max)
    a_max = pick(args.a_max, settings.t14_a_max)
    found = solvers.search_theorem14(y_max, a_max)
    return Outcome({"y_max": y_max, "a_max": a_max}, found, bool(found))


def trace(args, settings) -> Outcome:
    result = solvers.szalay_trace(args.a, args.b, args.x, require_solution=not args.unchecked)
    # a genuine solution must stop at family A or at case B or C
    violation = not args.unchecked and result.outcome in (TraceOutcome.FAILED, TraceOutcome.REACHED_BOUND)
    return Outcome({"a": args.a, "b": args.b, "x": args.x, "unchecked": args.unchecked}, result, violation)


def bb_gap(args, settings) -> Outcome:
    empty = solvers.bb_gap_check(args.b_lo, args.b_hi)
    return Outcome({"b_lo": args.b_lo, "b_hi": args.b_hi}, {"gap_empty": empty}, not empty)


def t15_witness(args, settings) -> Outcome:
    k = pick(args.k, settings.convergents)
    witness = solvers.theorem15_witness(args.p, args.b, k)
    return Outcome({"p": args.p, "b": args.b, "k": k}, witness, not witness.all_unit)


def register(subparsers) -> None:
    p = subparsers.add_parser("search-pow2", help="2^a +- 2^b +- 1 = x^2")
    p.add_argument("--sign", type=sign, required=True)
    p.add_argument("--const", type=sign, default=1, help="sign of the constant term")
    p.add_argument("--a-max", type=int)
    p.set_defaults(handler=search_pow2)

    p = subparsers.add_parser("search-odd-prime", help="p^a +- p^b + 1 = x^2, p an odd prime")
    p.add_argument("--sign", type=sign, required=True)
    p.add_argument("--p-max", type=int)
    p.add_argument("--a-max", type=int)
    p.set_defaults(handler=search_odd_prime)

    p = subparsers.add_parser("search-t14", help="x^2 = y^a +- y^b +- 1, a even")
    p.add_argument("--y-max", type=int)
    p.add_argument("--a-max", type=int)
    p.set_defaults(handler=search_t14)

    p = subparsers.add_parser("trace", help="derivation trace for 2^a + 2^b + 1 = x^2")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--unchecked", action="store_true", help="trace a triple that need not solve the equation")
    p.set_defaults(handler=trace)

    p = subparsers.add_parser("bb-gap", help="exact gap check against a >= 6b - 8")
    p.add_argument("--b-lo", type=int, required=True)
    p.add_argument("--b-hi", type=int, required=True)
    p.set_defaults(handler=bb_gap)

    p = subparsers.add_parser("t15-witness", help="convergent norms of sqrt(p^b + 1)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(handler=t15_witness)

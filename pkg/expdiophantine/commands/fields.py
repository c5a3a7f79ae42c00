"""Quadratic-field, Pell and Jacobi subcommands."""

from expdiophantine import ntheory, pell, quadfield
from expdiophantine.commands import Outcome, pick, sign
from expdiophantine.models import Lemma32Report

# (D, r) pairs where (1 + sqrt(-D))^r = a +- sqrt(-D) is known to hold
KNOWN_LEMMA32 = {(2, 3), (4, 3)}


def lemma32_violation(report: Lemma32Report) -> bool:
    if not report.eligible:
        return False
    if any((report.D, s.r) not in KNOWN_LEMMA32 for s in report.solutions):
        return True
    return any(
        c.congruence1 is False or not c.congruence2 or c.sign_law is False for c in report.congruence_log
    )


def lemma32(args, settings) -> Outcome:
    r_max = pick(args.r_max, settings.r_max)
    report = quadfield.lemma32_search(args.d, r_max)
    payload = {"search": report, "obstruction": quadfield.lemma32_obstruction(args.d)}
    return Outcome({"D": args.d, "r_max": r_max}, payload, lemma32_violation(report))


def lemma32_sweep(args, settings) -> Outcome:
    r_max = pick(args.r_max, settings.r_max)
    reports = quadfield.lemma32_sweep(args.d_max, r_max)
    hits = [{"D": rep.D, "r": s.r, "a": s.a, "im": s.im} for rep in reports for s in rep.solutions]
    flagged = [rep.D for rep in reports if lemma32_violation(rep)]
    payload = {"eligible_checked": len(reports), "solutions": hits, "violations": flagged}
    return Outcome({"D_max": args.d_max, "r_max": r_max}, payload, bool(flagged))


def pell_cmd(args, settings) -> Outcome:
    fund = pell.pell_fundamental(args.d)
    powers = [pell.pell_power(fund.plus, n) for n in range(1, args.powers + 1)]
    return Outcome({"D": args.d, "powers": args.powers}, {"fundamental": fund, "powers": powers})


def cf(args, settings) -> Outcome:
    k = pick(args.convergents, settings.convergents)
    expansion = pell.cf_sqrt(args.d)
    rows = []
    for v, w in pell.convergents(expansion, k):
        value = v * v - args.d * w * w
        rows.append({"v": v, "w": w, "norm": value, "within_bound": pell.within_convergent_bound(value, args.d)})
    payload = {"expansion": expansion, "convergents": rows}
    return Outcome({"D": args.d, "convergents": k}, payload, not all(r["within_bound"] for r in rows))


def stormer(args, settings) -> Outcome:
    violations = pell.stormer_scan(args.d, args.n_max)
    return Outcome({"D": args.d, "n_max": args.n_max}, {"violations": violations}, bool(violations))


def sc_lemma(args, settings) -> Outcome:
    report = pell.sc_lemma_scan(args.y, args.e, args.j_max, args.sign)
    return Outcome({"y": args.y, "e": args.e, "sign": args.sign, "j_max": args.j_max}, report, not report.holds)


def norm_rep(args, settings) -> Outcome:
    n_max = pick(args.n_max, settings.norm_rep_n_max)
    report = pell.norm_rep_least_exponent(args.d, args.u, args.p, n_max)
    payload = {**report.model_dump(mode="json"), "divisibility_law_holds": report.divisibility_law_holds}
    return Outcome({"D": args.d, "u": args.u, "p": args.p, "n_max": n_max}, payload, not report.divisibility_law_holds)


def jacobi(args, settings) -> Outcome:
    return Outcome({"a": args.a, "n": args.n}, {"value": ntheory.jacobi(args.a, args.n)})


def register(subparsers) -> None:
    p = subparsers.add_parser("lemma32", help="(1 + sqrt(-D))^r = a +- sqrt(-D) for r <= r_max")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r-max", type=int)
    p.set_defaults(handler=lemma32)

    p = subparsers.add_parser("lemma32-sweep", help="the same search over every eligible D <= D_max")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--r-max", type=int)
    p.set_defaults(handler=lemma32_sweep)

    p = subparsers.add_parser("pell", help="fundamental solutions of X^2 - D Y^2 = +-1")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--powers", type=int, default=5)
    p.set_defaults(handler=pell_cmd)

    p = subparsers.add_parser("cf", help="continued fraction of sqrt(D) and its convergents")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--convergents", type=int)
    p.set_defaults(handler=cf)

    p = subparsers.add_parser("stormer", help="Pell solutions whose Y has only primes of D")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n-max", type=int, default=10)
    p.set_defaults(handler=stormer)

    p = subparsers.add_parser("sc-lemma", help="divisibility facts for Y_j with D = y^(2e) +- 1")
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--sign", type=sign, default=1)
    p.add_argument("--j-max", type=int, default=12)
    p.set_defaults(handler=sc_lemma)

    p = subparsers.add_parser("norm-rep", help="least t with +-p^t a norm r^2 - D s^2, u | s")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--u", type=int, default=1)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n-max", type=int)
    p.set_defaults(handler=norm_rep)

    p = subparsers.add_parser("jacobi", help="Jacobi symbol (a/n)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=jacobi)

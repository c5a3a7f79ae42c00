"""Continued fractions of sqrt(D), Pell equations and the norm-form checkers.

``cf_sqrt`` runs the (m, d, a) quadratic-surd recurrence with exact integers;
everything else in this module is read off that expansion.
"""

import logging
from itertools import chain, cycle, islice
from math import gcd, isqrt
from typing import Iterator, List, Optional, Tuple

from expdiophantine import ntheory
from expdiophantine.errors import require
from expdiophantine.models import (
    CFExpansion,
    NormRepReport,
    NormWitness,
    PellFundamentals,
    PellSolution,
    QuadInt,
    ScCondition,
    ScLemmaCheck,
    ScLemmaReport,
    StormerViolation,
)
from expdiophantine.quadfield import quad_mul, quad_pow

logger = logging.getLogger(__name__)


def _require_nonsquare(D: int, where: str) -> None:
    require(D >= 2, f"{where}: D must be >= 2, got {D}")
    require(ntheory.perfect_square_root(D) is None, f"{where}: D = {D} is a perfect square")


def cf_sqrt(D: int) -> CFExpansion:
    _require_nonsquare(D, "cf_sqrt")
    a0 = isqrt(D)
    m, d, a = 0, 1, a0
    period = []
    while True:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        period.append(a)
        if (m, d) == (a0, 1):
            break
    return CFExpansion(D=D, a0=a0, period=period)


def _partial_quotients(e: CFExpansion) -> Iterator[int]:
    return chain([e.a0], cycle(e.period))


def iter_convergents(e: CFExpansion) -> Iterator[Tuple[int, int]]:
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    for a in _partial_quotients(e):
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        yield h, k


def convergents(e: CFExpansion, k: int) -> List[Tuple[int, int]]:
    require(k >= 1, f"convergents: k must be >= 1, got {k}")
    return list(islice(iter_convergents(e), k))


def convergent_norms(D: int, k: int) -> List[int]:
    return [v * v - D * w * w for v, w in convergents(cf_sqrt(D), k)]


def within_convergent_bound(value: int, D: int) -> bool:
    """|value| < 2*sqrt(D) + 1, decided with integers only."""
    m = abs(value) - 1
    return m < 0 or m * m < 4 * D


def pell_fundamental(D: int) -> PellFundamentals:
    e = cf_sqrt(D)
    length = len(e.period)
    convs = convergents(e, 2 * length)
    v, w = convs[length - 1]
    if length % 2 == 0:
        return PellFundamentals(plus=PellSolution(D=D, X=v, Y=w, n=1, target=1))
    minus = PellSolution(D=D, X=v, Y=w, n=1, target=-1)
    v2, w2 = convs[2 * length - 1]
    return PellFundamentals(minus=minus, plus=PellSolution(D=D, X=v2, Y=w2, n=1, target=1))


def _as_quad(sol: PellSolution) -> QuadInt:
    return QuadInt(re=sol.X, im=sol.Y, D=sol.D, sigma=1)


def pell_power(fund: PellSolution, n: int) -> PellSolution:
    require(n >= 0, f"pell_power: n must be >= 0, got {n}")
    z = quad_pow(_as_quad(fund), n)
    return PellSolution(D=fund.D, X=z.re, Y=z.im, n=fund.n * n, target=fund.target**n)


def iter_pell_powers(fund: PellSolution) -> Iterator[PellSolution]:
    """fund**1, fund**2, ... by repeated multiplication."""
    step = _as_quad(fund)
    z = step
    n = 1
    while True:
        yield PellSolution(D=fund.D, X=z.re, Y=z.im, n=n, target=fund.target**n)
        z = quad_mul(z, step)
        n += 1


def stormer_scan(D: int, n_max: int) -> List[StormerViolation]:
    """Solutions past the least one whose Y has only primes dividing D.

    Scans X^2 - D*Y^2 = +1 (powers of the +1 fundamental) and, when solvable,
    X^2 - D*Y^2 = -1 (odd powers of the -1 fundamental). The n reported is the
    index within that solution list, so n = 1 is the least solution.
    """
    require(n_max >= 1, f"stormer_scan: n_max must be >= 1, got {n_max}")
    fund = pell_fundamental(D)
    primes = ntheory.factorize(D).primes
    violations = []
    for sol in islice(iter_pell_powers(fund.plus), 1, n_max):
        if ntheory.strip_primes(sol.Y, primes) == 1:
            violations.append(StormerViolation(target=1, n=sol.n, X=sol.X, Y=sol.Y))
    if fund.minus is not None:
        odd_powers = islice(iter_pell_powers(fund.minus), 2, 2 * n_max - 1, 2)
        for index, sol in enumerate(odd_powers, start=2):
            if ntheory.strip_primes(sol.Y, primes) == 1:
                violations.append(StormerViolation(target=-1, n=index, X=sol.X, Y=sol.Y))
    if violations:
        logger.warning("stormer_scan: D=%d has %d violations", D, len(violations))
    return violations


def sc_lemma_scan(y: int, e: int, j_max: int, sign: int = 1) -> ScLemmaReport:
    """Check the divisibility facts about Y_j used for D = y^(2e) + sign.

    With X_n + Y_n sqrt(D) = (y^e + sqrt(D))^n, every even j in [4, j_max]
    must have a prime of Y_j/Y_2 outside y, and every prime q | y with
    2q | j must satisfy q | Y_j/Y_2, Y_2q | Y_j and Y_2q/(q Y_2) an integer
    prime to y.
    """
    require(y > 2, f"sc_lemma_scan: y must be > 2, got {y}")
    require(e >= 1, f"sc_lemma_scan: e must be >= 1, got {e}")
    require(sign in (1, -1), f"sc_lemma_scan: sign must be +1 or -1, got {sign}")
    require(j_max >= 4, f"sc_lemma_scan: j_max must be >= 4, got {j_max}")
    D = y ** (2 * e) + sign
    fund = PellSolution(D=D, X=y**e, Y=1, n=1, target=-sign)
    Y = {sol.n: sol.Y for sol in islice(iter_pell_powers(fund), j_max)}
    y_primes = ntheory.factorize(y).primes

    checks = []
    for j in range(4, j_max + 1, 2):
        quotient, rem = divmod(Y[j], Y[2])
        require(rem == 0, f"sc_lemma_scan: Y_2 does not divide Y_{j}")
        conditions = []
        for q in y_primes:
            if j % (2 * q):
                continue
            cofactor, cofactor_rem = divmod(Y[2 * q], q * Y[2])
            conditions.append(
                ScCondition(
                    q=q,
                    q_divides_quotient=quotient % q == 0,
                    y2q_divides_yj=Y[j] % Y[2 * q] == 0,
                    cofactor_integral_and_coprime=cofactor_rem == 0 and gcd(cofactor, y) == 1,
                )
            )
        witness = next((c.q for c in conditions if c.ok), None)
        foreign = ntheory.strip_primes(quotient, y_primes) > 1
        checks.append(
            ScLemmaCheck(
                j=j,
                foreign_factor=foreign,
                conditions=conditions,
                witness_q=witness,
                passed=foreign and all(c.ok for c in conditions),
            )
        )
    return ScLemmaReport(
        y=y, e=e, sign=sign, D=D, j_max=j_max, checks=checks, holds=all(c.passed for c in checks)
    )


# Least exponent t with +-p^t a norm r^2 - D s^2, (r, sD) = 1, u | s


def _check_norm_rep_args(D: int, u: int, p: int) -> None:
    require(D != 0 and D != 1, f"norm_rep: D must be a nonzero non-square, got {D}")
    require(all(f.exponent == 1 for f in ntheory.factorize(abs(D)).factors), f"norm_rep: D = {D} is not squarefree")
    require(u >= 1, f"norm_rep: u must be >= 1, got {u}")
    require(p >= 3 and ntheory.is_prime(p), f"norm_rep: {p} is not an odd prime")
    require(D % p != 0, f"norm_rep: p = {p} divides D = {D}")


def _admissible(r: int, s: int, D: int, u: int) -> bool:
    return r != 0 and s != 0 and s % u == 0 and gcd(r, s * D) == 1


def _unit_period(U: int, V: int, D: int, u: int) -> int:
    """Least k >= 1 with (U + V sqrt D)^k = 1 (mod u)."""
    if u == 1:
        return 1
    x, y = U % u, V % u
    k = 1
    while (x, y) != (1 % u, 0):
        x, y = (x * U + D * y * V) % u, (x * V + y * U) % u
        k += 1
    return k


def _class_representatives(N: int, D: int, bound: int) -> Iterator[Tuple[int, int]]:
    for s in range(0, bound + 1):
        r = ntheory.perfect_square_root(N + D * s * s)
        if r is None:
            continue
        yield r, s
        if r:
            yield -r, s


def _find_witness_real(N: int, D: int, u: int, unit: QuadInt, period: int) -> Optional[Tuple[int, int]]:
    # every solution class meets 0 <= s <= this bound
    bound = isqrt(abs(N) * (unit.re + 1) // (2 * D)) + 1
    for r, s in _class_representatives(N, D, bound):
        if gcd(r, s) != 1:
            continue
        z = QuadInt(re=r, im=s, D=D, sigma=1)
        # u | s is periodic along the orbit, so one period decides the class
        for _ in range(period):
            if _admissible(z.re, z.im, D, u):
                return z.re, z.im
            z = quad_mul(z, unit)
    return None


def _find_witness_imaginary(N: int, D: int, u: int) -> Optional[Tuple[int, int]]:
    if N <= 0:
        return None
    m = -D
    for s in range(u, isqrt(N // m) + 1, u):
        r = ntheory.perfect_square_root(N - m * s * s)
        if r is not None and _admissible(r, s, D, u):
            return r, s
    return None


def norm_rep_least_exponent(D: int, u: int, p: int, n_max: int = 12) -> NormRepReport:
    _check_norm_rep_args(D, u, p)
    require(n_max >= 1, f"norm_rep: n_max must be >= 1, got {n_max}")
    unit = period = None
    if D > 0:
        plus = pell_fundamental(D).plus
        unit = QuadInt(re=plus.X, im=plus.Y, D=D, sigma=1)
        period = _unit_period(plus.X, plus.Y, D, u)

    representable, witnesses = [], []
    for n in range(1, n_max + 1):
        for N in (p**n, -(p**n)):
            if D > 0:
                found = _find_witness_real(N, D, u, unit, period)
            else:
                found = _find_witness_imaginary(N, D, u)
            if found is None:
                continue
            r, s = found
            if r * r - D * s * s != N:
                raise AssertionError(f"norm_rep: witness ({r}, {s}) does not have norm {N}")
            representable.append(n)
            witnesses.append(NormWitness(n=n, r=r, s=s, norm=N))
            break
    report = NormRepReport(
        D=D,
        u=u,
        p=p,
        checked_up_to=n_max,
        representable=representable,
        witnesses=witnesses,
        t=representable[0] if representable else None,
    )
    if not report.divisibility_law_holds:
        logger.warning("norm_rep: D=%d u=%d p=%d breaks t | n", D, u, p)
    return report


def norm_rep_brute_force(D: int, u: int, p: int, n: int, s_limit: int) -> Optional[NormWitness]:
    """Direct search over multiples s of u up to ``s_limit``."""
    _check_norm_rep_args(D, u, p)
    for N in (p**n, -(p**n)):
        for s in range(u, s_limit + 1, u):
            r = ntheory.perfect_square_root(N + D * s * s)
            if r is not None and _admissible(r, s, D, u):
                return NormWitness(n=n, r=r, s=s, norm=N)
    return None

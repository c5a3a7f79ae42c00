"""Exact arithmetic in Z[sqrt(sigma*D)] and the searches built on it.

``lemma32_search`` looks for ``(1 + sqrt(-D))**r = a +- sqrt(-D)`` with
``r > 1``; ``congruence1``/``congruence2`` are the two necessary congruences
and ``lemma32_obstruction`` replays the residue argument that rules out every
D of the eligible shapes.
"""

import logging
from typing import List, Tuple

from sympy import primerange

from expdiophantine import ntheory
from expdiophantine.errors import RingMismatchError, require
from expdiophantine.models import (
    CongruenceCheck,
    Lemma32Obstruction,
    Lemma32Report,
    Lemma32Solution,
    ObstructionKind,
    QuadInt,
)

logger = logging.getLogger(__name__)

EXCEPTIONAL_R3 = {2, 4}


def _check_ring(x: QuadInt, y: QuadInt) -> None:
    if (x.D, x.sigma) != (y.D, y.sigma):
        raise RingMismatchError(f"cannot combine elements of Z[sqrt({x.radicand})] and Z[sqrt({y.radicand})]")


def one(D: int, sigma: int = -1) -> QuadInt:
    return QuadInt(re=1, im=0, D=D, sigma=sigma)


def quad_mul(x: QuadInt, y: QuadInt) -> QuadInt:
    _check_ring(x, y)
    k = x.radicand
    return QuadInt(
        re=x.re * y.re + k * x.im * y.im,
        im=x.re * y.im + x.im * y.re,
        D=x.D,
        sigma=x.sigma,
    )


def quad_pow(x: QuadInt, r: int) -> QuadInt:
    require(r >= 0, f"quad_pow: exponent must be >= 0, got {r}")
    result = one(x.D, x.sigma)
    base = x
    while r:
        if r & 1:
            result = quad_mul(result, base)
        r >>= 1
        if r:
            base = quad_mul(base, base)
    return result


def conjugate(x: QuadInt) -> QuadInt:
    return x.model_copy(update={"im": -x.im})


def norm(x: QuadInt) -> int:
    return x.re * x.re - x.radicand * x.im * x.im


def im_coeff(r: int, D: int) -> int:
    """Coefficient of sqrt(-D) in (1 + sqrt(-D))**r, by the alternating binomial sum."""
    require(r >= 1 and r % 2 == 1, f"im_coeff: r must be odd and positive, got {r}")
    require(D >= 1, f"im_coeff: D must be positive, got {D}")
    total = 0
    binom = r  # C(r, 1)
    power = 1  # (-D)**0
    k = 1
    while k <= r:
        total += binom * power
        binom = binom * (r - k) * (r - k - 1) // ((k + 1) * (k + 2))
        power *= -D
        k += 2
    return total


def _sign_of_39(D: int) -> int:
    """(-1)**((D + 2)/2) for even D."""
    return 1 if ((D + 2) // 2) % 2 == 0 else -1


def congruence1(r: int, D: int) -> bool:
    require(D >= 2 and D % 2 == 0, f"congruence1: D must be even and positive, got {D}")
    require(r >= 1 and r % 2 == 1, f"congruence1: r must be odd and positive, got {r}")
    modulus = abs(D - 3)
    if modulus == 1:
        return True
    require(r % 3 != 0, f"congruence1: needs 3 not dividing r, got {r}")
    rhs = ntheory.jacobi(r, 3) * pow(2, r - 1, modulus)
    return (_sign_of_39(D) - rhs) % modulus == 0


def congruence2(r: int, D: int) -> bool:
    require(D >= 2 and D % 2 == 0, f"congruence2: D must be even and positive, got {D}")
    require(r >= 1, f"congruence2: r must be positive, got {r}")
    modulus = D + 1
    return (_sign_of_39(D) - pow(2, r - 1, modulus)) % modulus == 0


def lemma32_eligible(D: int) -> bool:
    if D % 4 == 2:
        return True
    return D % 4 == 0 and ntheory.is_prime_power(1 + D) is not None


def lemma32_search(D: int, r_max: int) -> Lemma32Report:
    require(D >= 1 and D % 4 in (0, 2), f"lemma32_search: D must be 0 or 2 mod 4, got {D}")
    require(r_max >= 3, f"lemma32_search: r_max must be >= 3, got {r_max}")

    solutions: List[Lemma32Solution] = []
    log: List[CongruenceCheck] = []
    # step z -> z*(1 + sqrt(-D)) with bare ints; hits are re-checked below
    re, im = 1, 1
    for r in range(2, r_max + 1):
        re, im = re - D * im, re + im
        if abs(im) != 1:
            continue
        power = quad_pow(QuadInt(re=1, im=1, D=D, sigma=-1), r)
        if (power.re, power.im) != (re, im):
            raise AssertionError(f"quad_pow disagrees with the incremental power at D={D}, r={r}")
        if r % 2 == 1 and im_coeff(r, D) != im:
            raise AssertionError(f"im_coeff disagrees with quad_pow at D={D}, r={r}")
        logger.debug("lemma32: D=%d r=%d a=%d", D, r, re)
        solutions.append(Lemma32Solution(r=r, a=re, im=im))
        log.append(_congruence_entry(r, D, im))

    filtered = []
    if D >= 2:
        for r in primerange(5, r_max + 1):
            if r % 3 and congruence1(r, D) and congruence2(r, D):
                filtered.append(int(r))

    return Lemma32Report(
        D=D,
        r_max=r_max,
        eligible=lemma32_eligible(D),
        solutions=solutions,
        congruence_log=log,
        filtered_candidates=filtered,
    )


def _congruence_entry(r: int, D: int, im: int) -> CongruenceCheck:
    c1 = None
    sign_law = None
    if r % 2 == 1:
        sign_law = im == _sign_of_39(D)
        if r % 3 or abs(D - 3) == 1:
            c1 = congruence1(r, D)
    return CongruenceCheck(r=r, congruence1=c1, congruence2=congruence2(r, D), sign_law=sign_law)


def lemma32_sweep(D_max: int, r_max: int) -> List[Lemma32Report]:
    """Search every eligible D up to ``D_max``."""
    require(D_max >= 2, f"lemma32_sweep: D_max must be >= 2, got {D_max}")
    logger.info("lemma32 sweep: D <= %d, r <= %d", D_max, r_max)
    reports = []
    for D in range(2, D_max + 1, 2):
        if lemma32_eligible(D):
            reports.append(lemma32_search(D, r_max))
    return reports


def lemma32_chain(D: int) -> Tuple[int, int]:
    """First and last Jacobi symbols of the chain used when D = 2 mod 4.

    With ``y = D + 1``: (-2y+1 / (y^2+1)/2) and (-5 / y+2). They agree.
    """
    require(D >= 2 and D % 4 == 2, f"lemma32_chain: D must be 2 mod 4, got {D}")
    y = D + 1
    head = ntheory.jacobi(-2 * y + 1, (y * y + 1) // 2)
    tail = ntheory.jacobi(-5, y + 2)
    return head, tail


def lemma32_obstruction(D: int) -> Lemma32Obstruction:
    require(D >= 2 and D % 4 in (0, 2), f"lemma32_obstruction: D must be 0 or 2 mod 4, got {D}")
    exceptional = D in EXCEPTIONAL_R3
    if D % 4 == 2:
        return _obstruction_two_mod_four(D, exceptional)
    return _obstruction_zero_mod_four(D, exceptional)


def _obstruction_two_mod_four(D: int, exceptional: bool) -> Lemma32Obstruction:
    residue = D % 5
    if residue == 3:
        odd_part = ntheory.factorize(D - 3)
        has_three_mod_four = any(p % 4 == 3 for p in odd_part.primes)
        return Lemma32Obstruction(
            D=D,
            kind=ObstructionKind.MIXED_PRIMES,
            excludes=has_three_mod_four and 5 in odd_part.primes,
            exceptional_r3=exceptional,
            symbols={"D-3": D - 3},
            note="D-3 has a prime 3 mod 4 and the prime 5; Congruence 1 cannot hold",
        )
    if residue == 1:
        value = ntheory.jacobi(2, 5)
        return Lemma32Obstruction(
            D=D,
            kind=ObstructionKind.NONRESIDUE_MOD5,
            excludes=value == -1,
            exceptional_r3=exceptional,
            symbols={"(2/5)": value},
            note="y^r = 3 mod 5 forces a^2 = 2 mod 5",
        )
    if residue == 2:
        value = ntheory.jacobi(D, 5)
        return Lemma32Obstruction(
            D=D,
            kind=ObstructionKind.FIVE_DIVIDES_A,
            excludes=value == -1,
            exceptional_r3=exceptional,
            symbols={"(D/5)": value},
            note="5 | a with D a non-residue mod 5 forces 3 | r",
        )
    head, tail = lemma32_chain(D)
    return Lemma32Obstruction(
        D=D,
        kind=ObstructionKind.JACOBI_CHAIN,
        excludes=head == tail == -1,
        exceptional_r3=exceptional,
        symbols={"(-2y+1/(y^2+1)/2)": head, "(-5/y+2)": tail},
        note="a^2 = -2y+1 mod y^2+1 needs the chain to equal 1",
    )


def _obstruction_zero_mod_four(D: int, exceptional: bool) -> Lemma32Obstruction:
    match = ntheory.is_prime_power(1 + D)
    if match is None:
        return Lemma32Obstruction(
            D=D,
            kind=ObstructionKind.INELIGIBLE,
            excludes=False,
            note="1+D is not a prime power",
        )
    p, n = match.prime, match.exponent
    if p != 5 or n % 2 == 0:
        g = ntheory.negation_order(2, p) if p > 2 else None
        return Lemma32Obstruction(
            D=D,
            kind=ObstructionKind.NEGATION_ORDER,
            excludes=True,
            exceptional_r3=exceptional,
            symbols={"p": p, "n": n, "g": g if g is not None else 0},
            note="g <= 2 with p = 1 mod 4 and n odd forces p = 5",
        )
    y = 1 + D
    small = ntheory.jacobi(-2, y * y + y + 1)
    mod7 = ntheory.jacobi(2 * y * y - 2 * y + 1, 7)
    return Lemma32Obstruction(
        D=D,
        kind=ObstructionKind.JACOBI_CHAIN_MOD7,
        excludes=small == -1 and mod7 == -1,
        exceptional_r3=exceptional,
        symbols={"(-2/y^2+y+1)": small, "(2y^2-2y+1/7)": mod7},
        note="r = 2 mod 3 and r = 19 mod 24 both lead to a symbol equal to -1",
    )

"""Reduced positive-definite binary quadratic forms and their class groups.

Composition solves the k/l/m linear congruences and then reduces.
"""

import logging
from functools import lru_cache
from math import gcd, isqrt, lcm
from typing import List, Tuple

from sympy.core.intfunc import igcdex

from expdiophantine import ntheory
from expdiophantine.errors import require
from expdiophantine.models import ClassGroupTable, QuadForm

logger = logging.getLogger(__name__)


def _check_disc(disc: int, where: str) -> None:
    require(disc < 0, f"{where}: discriminant must be negative, got {disc}")
    require(disc % 4 in (0, 1), f"{where}: discriminant must be 0 or 1 mod 4, got {disc}")


def form(a: int, b: int, disc: int) -> QuadForm:
    """The form (a, b, c) of discriminant ``disc``; c is solved for."""
    c, rem = divmod(b * b - disc, 4 * a)
    require(rem == 0, f"no form ({a}, {b}, *) of discriminant {disc}")
    return QuadForm(a=a, b=b, c=c, disc=disc)


def identity(disc: int) -> QuadForm:
    _check_disc(disc, "identity")
    k = disc % 2
    return QuadForm(a=1, b=k, c=(k * k - disc) // 4, disc=disc)


def _normalized(a: int, b: int, c: int) -> Tuple[int, int, int]:
    if -a < b <= a:
        return a, b, c
    r = (a - b) // (2 * a)
    return a, b + 2 * r * a, a * r * r + b * r + c


def reduce_form(f: QuadForm) -> QuadForm:
    a, b, c = _normalized(f.a, f.b, f.c)
    while a > c or (a == c and b < 0):
        s = (c + b) // (2 * c)
        a, b, c = c, -b + 2 * s * c, c * s * s - b * s + a
        a, b, c = _normalized(a, b, c)
    return QuadForm(a=a, b=b, c=c, disc=f.disc)


def inverse(f: QuadForm) -> QuadForm:
    return reduce_form(QuadForm(a=f.a, b=-f.b, c=f.c, disc=f.disc))


def _solve_linear_congruence(a: int, b: int, m: int) -> Tuple[int, int]:
    """Solutions of a*x = b (mod m) as x = x0 + k*step."""
    d, _, g = (int(v) for v in igcdex(a, m))
    q, r = divmod(b, g)
    if r:
        raise ArithmeticError(f"{a}*x = {b} mod {m} has no solution")
    return (q * d) % m, m // g


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    require(f.disc == g.disc, f"compose: discriminants differ ({f.disc} vs {g.disc})")
    require(f.is_reduced and g.is_reduced, "compose: both forms must be reduced")
    a1, b1, c1 = f.a, f.b, f.c
    a2, b2 = g.a, g.b

    half_sum = (b1 + b2) // 2
    half_diff = (b2 - b1) // 2
    w = gcd(a1, a2, half_sum)
    s, t, u = a1 // w, a2 // w, half_sum // w

    # k*t - l*s = half_diff,  k*u - m*s = c2,  l*u - m*t = c1
    k0, step = _solve_linear_congruence(t * u, half_diff * u + s * c1, s * t)
    n, _ = _solve_linear_congruence(t * step, half_diff - t * k0, s)
    k = k0 + step * n
    l = (t * k - half_diff) // s
    m = (t * u * k - half_diff * u - s * c1) // (s * t)

    composed = QuadForm(a=s * t, b=w * u - (k * t + l * s), c=k * l - w * m, disc=f.disc)
    return reduce_form(composed)


def power(f: QuadForm, n: int) -> QuadForm:
    require(n >= 0, f"power: exponent must be >= 0, got {n}")
    result = identity(f.disc)
    base = f
    while n:
        if n & 1:
            result = compose(result, base)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def order(f: QuadForm) -> int:
    e = identity(f.disc)
    g, k = f, 1
    while g != e:
        g = compose(g, f)
        k += 1
    return k


def reduced_forms(disc: int) -> List[QuadForm]:
    """All primitive reduced forms of ``disc``, enumerated by a then b."""
    _check_disc(disc, "reduced_forms")
    forms = []
    for a in range(1, isqrt(-disc // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - disc) % 2:
                continue
            c, rem = divmod(b * b - disc, 4 * a)
            if rem or c < a or (a == c and b < 0) or gcd(a, b, c) != 1:
                continue
            forms.append(QuadForm(a=a, b=b, c=c, disc=disc))
    return forms


def reduced_forms_by_b(disc: int) -> List[QuadForm]:
    """The same set as ``reduced_forms``, enumerated by b then by divisors a of (b^2-disc)/4."""
    _check_disc(disc, "reduced_forms_by_b")
    forms = []
    b_max = isqrt(-disc // 3)
    for b in range(-b_max, b_max + 1):
        if (b - disc) % 2:
            continue
        ac = (b * b - disc) // 4
        for a in ntheory.divisors(ac):
            c = ac // a
            if a < abs(b) or c < a or b == -a or (a == c and b < 0):
                continue
            if gcd(a, b, c) == 1:
                forms.append(QuadForm(a=a, b=b, c=c, disc=disc))
    return sorted(forms, key=lambda f: (f.a, f.b))


def fundamental_discriminant(P: int) -> int:
    return -P if P % 4 == 3 else -4 * P


@lru_cache(maxsize=None)
def class_exponent(P: int) -> Tuple[int, int, ClassGroupTable]:
    require(P >= 1, f"class_exponent: P must be positive, got {P}")
    require(all(f.exponent == 1 for f in ntheory.factorize(P).factors), f"class_exponent: P = {P} is not squarefree")
    disc = fundamental_discriminant(P)
    forms = reduced_forms(disc)
    orders = [order(f) for f in forms]
    exponent = lcm(*orders)
    table = ClassGroupTable(P=P, disc=disc, forms=forms, h=len(forms), exponent=exponent, orders=orders)
    logger.debug("class group of disc %d: h=%d exponent=%d", disc, table.h, exponent)
    return table.h, exponent, table

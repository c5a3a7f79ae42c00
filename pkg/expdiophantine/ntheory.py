"""Exact integer primitives consumed by every other module.

Primality is exact on every input:

* ``n < 2**64``: ``sympy.isprime``, which is deterministic below 2**64;
* ``n < 3317044064679887385961981``: Miller-Rabin with the first thirteen
  prime bases, a proven-deterministic set below that bound;
* anything larger: trial division up to ``isqrt(n)``.

Desk-scale searches never leave the first range.
"""

import logging
from math import isqrt, prod
from typing import List, Optional, Tuple

from sympy import factorint, integer_nthroot, isprime, jacobi_symbol, legendre_symbol, n_order, perfect_power
from sympy import divisors as _sympy_divisors
from sympy.ntheory.primetest import mr

from expdiophantine.errors import require
from expdiophantine.models import Factorization, PrimePower, PrimePowerMatch, SquarefreeSplit

logger = logging.getLogger(__name__)

SYMPY_EXACT_LIMIT = 2**64
MR_EXACT_LIMIT = 3317044064679887385961981
MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _trial_division_is_prime(n: int) -> bool:
    if n % 2 == 0 or n % 3 == 0:
        return n in (2, 3)
    d = 5
    root = isqrt(n)
    while d <= root:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def is_prime(n: int) -> bool:
    require(n >= 1, f"is_prime: n must be >= 1, got {n}")
    if n < SYMPY_EXACT_LIMIT:
        return bool(isprime(n))
    if n < MR_EXACT_LIMIT:
        return bool(mr(n, MR_BASES))
    logger.warning("is_prime: %d-bit input beyond the Miller-Rabin range, trial dividing", n.bit_length())
    return _trial_division_is_prime(n)


def factorize(n: int) -> Factorization:
    require(n >= 1, f"factorize: n must be >= 1, got {n}")
    factors = []
    for p, e in sorted(factorint(n).items()):
        require(is_prime(p), f"factorize: reported factor {p} is not prime")
        factors.append(PrimePower(prime=int(p), exponent=int(e)))
    return Factorization(value=n, factors=factors)


def radical(n: int) -> int:
    """Product of the distinct primes dividing ``n``."""
    return prod(factorize(n).primes)


def divisors(n: int) -> List[int]:
    require(n >= 1, f"divisors: n must be >= 1, got {n}")
    return [int(d) for d in _sympy_divisors(n)]


def is_prime_power(n: int) -> Optional[PrimePowerMatch]:
    """Return ``(p, e)`` with ``|n| = p**e``, the unit flag for ``|n| = 1``, or None."""
    require(n != 0, "is_prime_power: zero has no prime-power form")
    n = abs(n)
    if n == 1:
        return PrimePowerMatch(unit=True)
    if is_prime(n):
        return PrimePowerMatch(prime=n, exponent=1)
    power = perfect_power(n)
    if not power:
        return None
    base, exponent = int(power[0]), int(power[1])
    # perfect_power returns the largest exponent, so base is not itself a power
    if is_prime(base):
        return PrimePowerMatch(prime=base, exponent=exponent)
    return None


def squarefree_decompose(n: int) -> Tuple[int, int]:
    """Write ``n = D * u**2`` with ``D`` squarefree."""
    require(n >= 1, f"squarefree_decompose: n must be >= 1, got {n}")
    D, u = 1, 1
    for f in factorize(n).factors:
        if f.exponent % 2:
            D *= f.prime
        u *= f.prime ** (f.exponent // 2)
    return D, u


def squarefree_split(C: int) -> SquarefreeSplit:
    require(C >= 2 and C % 2 == 0, f"squarefree_split: C must be even and >= 2, got {C}")
    P, Q = 1, 1
    for f in factorize(C).factors:
        if f.exponent % 2:
            P *= f.prime
        else:
            Q *= f.prime
    s = perfect_square_root(C // P)
    return SquarefreeSplit(C=C, P=P, Q=Q, s=s)


def jacobi(a: int, n: int) -> int:
    require(n >= 1 and n % 2 == 1, f"jacobi: modulus must be odd and positive, got {n}")
    if n == 1:
        return 1
    return int(jacobi_symbol(a % n, n))


def legendre_paper(a: int, q: int) -> int:
    """Legendre symbol, except that the symbol over 2 is always 0."""
    require(q >= 2 and is_prime(q), f"legendre_paper: {q} is not prime")
    if q == 2:
        return 0
    return int(legendre_symbol(a % q, q))


def negation_order(base: int, p: int) -> Optional[int]:
    """Least ``g`` with ``base**g = -1 (mod p)``, or None if -1 is never reached."""
    require(p >= 3 and is_prime(p), f"negation_order: {p} is not an odd prime")
    require(base % p != 0, f"negation_order: {p} divides the base {base}")
    order = int(n_order(base % p, p))
    # the unit group mod p is cyclic, so -1 is reached exactly at half an even order
    if order % 2:
        return None
    half = order // 2
    if pow(base, half, p) != p - 1:
        return None
    return half


def perfect_square_root(n: int) -> Optional[int]:
    if n < 0:
        return None
    root, exact = integer_nthroot(n, 2)
    return int(root) if exact else None


def strip_primes(n: int, primes) -> int:
    """Divide every power of the given primes out of ``n``."""
    n = abs(n)
    for p in primes:
        if p < 2:
            continue
        while n and n % p == 0:
            n //= p
    return n


def is_prime_power_or_one(n: int) -> bool:
    return n != 0 and is_prime_power(n) is not None

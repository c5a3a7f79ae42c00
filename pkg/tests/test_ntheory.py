import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import isprime as sympy_isprime
from sympy import primerange

from expdiophantine import ntheory
from expdiophantine.errors import PreconditionError

SMALL_PRIMES = [int(p) for p in primerange(3, 200)]


@pytest.mark.parametrize("n, expected", [(2, True), (1, False), (32761, False), (401, True), (2**61 - 1, True)])
def test_is_prime(n, expected):
    assert ntheory.is_prime(n) is expected


def test_is_prime_above_two_to_the_64():
    assert not ntheory.is_prime(2**67 - 1)
    for n in range(2**64, 2**64 + 200):
        assert ntheory.is_prime(n) == sympy_isprime(n)


@pytest.mark.parametrize(
    "n, factors",
    [(250, [(2, 1), (5, 3)]), (1, []), (32, [(2, 5)]), (32761, [(181, 2)])],
)
def test_factorize(n, factors):
    f = ntheory.factorize(n)
    assert [(pp.prime, pp.exponent) for pp in f.factors] == factors


@given(st.integers(min_value=1, max_value=10**9))
def test_factorize_reassembles(n):
    f = ntheory.factorize(n)
    product = 1
    for pp in f.factors:
        assert sympy_isprime(pp.prime)
        product *= pp.prime**pp.exponent
    assert product == n
    assert f.primes == sorted(set(f.primes))


@pytest.mark.parametrize("n, expected", [(401, (401, 1)), (-8, (2, 3)), (3**7, (3, 7))])
def test_is_prime_power(n, expected):
    match = ntheory.is_prime_power(n)
    assert (match.prime, match.exponent) == expected
    assert not match.unit


def test_is_prime_power_absent_and_unit():
    assert ntheory.is_prime_power(12) is None
    assert ntheory.is_prime_power(36) is None
    assert ntheory.is_prime_power(-1).unit
    with pytest.raises(PreconditionError):
        ntheory.is_prime_power(0)


@given(st.integers(min_value=2, max_value=10**6))
def test_is_prime_power_matches_factorization(n):
    assert (ntheory.is_prime_power(n) is not None) == (len(ntheory.factorize(n).factors) == 1)


@pytest.mark.parametrize("C, P, Q, s", [(250, 10, 1, 5), (4, 1, 2, 2), (32, 2, 1, 4), (2, 2, 1, 1), (72, 2, 3, 6)])
def test_squarefree_split(C, P, Q, s):
    split = ntheory.squarefree_split(C)
    assert (split.P, split.Q, split.s) == (P, Q, s)


def test_squarefree_split_round_trip():
    for C in range(2, 10**4 + 1, 2):
        split = ntheory.squarefree_split(C)
        assert split.P * split.s**2 == C
        assert split.P * split.Q == ntheory.radical(C)


@pytest.mark.parametrize("C", [0, 3, -4])
def test_squarefree_split_rejects(C):
    with pytest.raises(PreconditionError):
        ntheory.squarefree_split(C)


@pytest.mark.parametrize("n, D, u", [(10, 10, 1), (50, 2, 5), (82, 82, 1), (3**6 + 1, 730, 1), (1, 1, 1)])
def test_squarefree_decompose(n, D, u):
    assert ntheory.squarefree_decompose(n) == (D, u)


def test_divisors_and_radical():
    assert ntheory.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert ntheory.radical(250) == 10
    assert ntheory.radical(1) == 1


def test_jacobi_known_values():
    assert ntheory.jacobi(1, 9) == 1
    assert ntheory.jacobi(1, 15) == 1
    assert ntheory.jacobi(5, 1) == 1
    assert ntheory.jacobi(3, 9) == 0
    assert ntheory.jacobi(-5, 7) == 1


@pytest.mark.parametrize("n", [0, 4, -3])
def test_jacobi_rejects_bad_modulus(n):
    with pytest.raises(PreconditionError):
        ntheory.jacobi(2, n)


@given(st.integers(min_value=-10**6, max_value=10**6), st.sampled_from(SMALL_PRIMES))
def test_jacobi_matches_euler_criterion(a, p):
    euler = pow(a % p, (p - 1) // 2, p)
    expected = -1 if euler == p - 1 else euler
    assert ntheory.jacobi(a, p) == expected


odd_moduli = st.integers(min_value=0, max_value=5000).map(lambda k: 2 * k + 1)


@given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4), odd_moduli)
def test_jacobi_multiplicative_in_numerator(a, b, n):
    assert ntheory.jacobi(a * b, n) == ntheory.jacobi(a, n) * ntheory.jacobi(b, n)


@given(st.integers(-10**4, 10**4), odd_moduli, odd_moduli)
def test_jacobi_multiplicative_in_modulus(a, m, n):
    assert ntheory.jacobi(a, m * n) == ntheory.jacobi(a, m) * ntheory.jacobi(a, n)


@pytest.mark.parametrize("a, q, expected", [(-10, 2, 0), (-1, 5, 1), (3, 3, 0), (-1, 3, -1), (-2, 3, 1)])
def test_legendre_paper(a, q, expected):
    assert ntheory.legendre_paper(a, q) == expected


def test_legendre_paper_rejects_composite():
    with pytest.raises(PreconditionError):
        ntheory.legendre_paper(2, 9)


@pytest.mark.parametrize("base, p, expected", [(2, 5, 2), (2, 7, None), (2, 3, 1), (2, 17, 4), (3, 7, 3)])
def test_negation_order(base, p, expected):
    assert ntheory.negation_order(base, p) == expected


def test_negation_order_rejects_multiple():
    with pytest.raises(PreconditionError):
        ntheory.negation_order(10, 5)


@given(st.integers(min_value=1, max_value=10**6), st.sampled_from(SMALL_PRIMES))
def test_negation_order_is_least(base, p):
    if base % p == 0:
        return
    g = ntheory.negation_order(base, p)
    powers = [pow(base, e, p) for e in range(1, p)]
    if g is None:
        assert p - 1 not in powers
    else:
        assert powers.index(p - 1) + 1 == g


@pytest.mark.parametrize("n, expected", [(32761, 181), (0, 0), (2, None), (-4, None), (10**40, 10**20)])
def test_perfect_square_root(n, expected):
    assert ntheory.perfect_square_root(n) == expected


def test_strip_primes():
    assert ntheory.strip_primes(2**5 * 3**2 * 7, [2, 3]) == 7
    assert ntheory.strip_primes(-12, [2, 3]) == 1

from math import gcd, isqrt

import pytest
from sympy import factorint

from expdiophantine import solvers
from expdiophantine.errors import PreconditionError
from expdiophantine.models import Family, TraceBranch, TraceOutcome, XCYNStatus


def triples(solutions):
    return [(s.a, s.b, s.x) for s in solutions]


def test_search_pow2_plus_small():
    found = solvers.search_pow2(10, 1)
    assert triples(found) == [(2, 2, 3), (4, 3, 5), (5, 4, 7), (6, 4, 9), (8, 5, 17), (9, 4, 23), (10, 6, 33)]
    families = {(s.a, s.b, s.x): s.family for s in found}
    assert families[(5, 4, 7)] is Family.B
    assert families[(9, 4, 23)] is Family.C
    assert families[(2, 2, 3)] is Family.A


def test_search_pow2_plus_is_families_a_b_c():
    found = solvers.search_pow2(60, 1)
    family_a = {(2 * t, t + 1, 2**t + 1) for t in range(1, 31)}
    assert set(triples(found)) == family_a | {(5, 4, 7), (9, 4, 23)}
    assert len(found) == 32
    assert all(s.family in (Family.A, Family.B, Family.C) for s in found)


def test_search_pow2_minus_is_families_d_to_g():
    found = solvers.search_pow2(60, -1)
    family_d = {(2 * t, t + 1, 2**t - 1) for t in range(2, 31)}
    assert set(triples(found)) == family_d | {(5, 3, 5), (7, 3, 11), (15, 3, 181)}
    by_triple = {(s.a, s.b, s.x): s.family for s in found}
    assert by_triple[(15, 3, 181)] is Family.G
    assert by_triple[(4, 3, 3)] is Family.D
    assert Family.OTHER not in by_triple.values()


@pytest.mark.parametrize("sign, expected", [(1, [(3, 1, 3)]), (-1, [(2, 1, 1)])])
def test_search_pow2_negative_constant_needs_b_1(sign, expected):
    found = solvers.search_pow2(40, sign, const_sign=-1)
    assert triples(found) == expected
    assert all(s.family is Family.B1 for s in found)


def test_search_pow2_output_is_sorted():
    found = solvers.search_pow2(30, 1)
    assert [s.key for s in found] == sorted(s.key for s in found)


@pytest.mark.parametrize("a_max, sign", [(1, 1), (10, 0), (10, 2)])
def test_search_pow2_preconditions(a_max, sign):
    with pytest.raises(PreconditionError):
        solvers.search_pow2(a_max, sign)


def test_search_odd_prime_minus():
    found = solvers.search_odd_prime(100, 40, -1)
    assert [(s.x, s.p, s.a, s.b) for s in found] == [(5, 3, 3, 1), (11, 5, 3, 1)]
    assert [s.family for s in found] == [Family.LUCA1, Family.LUCA2]


def test_search_odd_prime_plus_is_empty():
    assert solvers.search_odd_prime(100, 40, 1) == []


def test_search_theorem14_is_empty():
    assert solvers.search_theorem14(50, 20) == []


def test_search_theorem14_preconditions():
    with pytest.raises(PreconditionError):
        solvers.search_theorem14(2, 10)


def test_trace_case_b():
    trace = solvers.szalay_trace(5, 4, 7)
    assert (trace.t, trace.k, trace.branch) == (3, 1, TraceBranch.THREE_MOD_4)
    assert trace.outcome is TraceOutcome.CASE_B
    last = trace.steps[-1]
    assert last.name == "equality a = 2t - 1"
    assert last.values == {"t": 3, "k": 1, "sign": -1}


def test_trace_case_c():
    trace = solvers.szalay_trace(9, 4, 23)
    assert (trace.t, trace.k, trace.g) == (3, 3, 1)
    assert trace.outcome is TraceOutcome.CASE_C
    identity = next(s for s in trace.steps if s.name == "2^(a-2t) = k^2 +- g")
    assert identity.values == {"2^(a-2t)": 8, "k^2+-g": 8, "expanded": 8}
    assert trace.steps[-1].values == {"t": 3, "g": 1, "sign": -1}


def test_trace_family_a():
    trace = solvers.szalay_trace(10, 6, 33)
    assert trace.outcome is TraceOutcome.FAMILY_A
    assert (trace.t, trace.k, trace.branch) == (5, 1, TraceBranch.ONE_MOD_4)


def test_trace_every_solution_stops_at_a_known_case():
    for s in solvers.search_pow2(60, 1):
        if s.b > 3 and s.a > s.b:
            outcome = solvers.szalay_trace(s.a, s.b, s.x).outcome
            assert outcome in (TraceOutcome.FAMILY_A, TraceOutcome.CASE_B, TraceOutcome.CASE_C)


def test_trace_near_miss_fails_at_b():
    trace = solvers.szalay_trace(12, 4, 65, require_solution=False)
    assert trace.outcome is TraceOutcome.FAILED
    assert trace.steps[-1].name == "b = t + 1"
    assert trace.steps[-1].values == {"b": 4, "t+1": 7}


def test_trace_near_miss_fails_at_identity():
    trace = solvers.szalay_trace(10, 4, 23, require_solution=False)
    assert trace.g == 1
    last = trace.steps[-1]
    assert last.name == "2^(a-2t) = k^2 +- g" and not last.passed
    assert last.values == {"2^(a-2t)": 16, "k^2+-g": 8, "expanded": 8}


@pytest.mark.parametrize("a, b, x", [(5, 4, 9), (4, 3, 5), (3, 3, 5), (10, 6, 32)])
def test_trace_preconditions(a, b, x):
    with pytest.raises(PreconditionError):
        solvers.szalay_trace(a, b, x)


def test_bb_bound_admits():
    assert not solvers.bb_bound_admits(16, 4)
    assert 17**50 < 2**205
    assert solvers.bb_bound_admits(10, 4)


def test_bb_gap_check():
    assert solvers.bb_gap_check(4, 200)
    assert solvers.bb_gap_check(4, 4)


@pytest.mark.parametrize("lo, hi", [(3, 10), (5, 4)])
def test_bb_gap_check_preconditions(lo, hi):
    with pytest.raises(PreconditionError):
        solvers.bb_gap_check(lo, hi)


@pytest.mark.parametrize("p, b, D, u", [(3, 2, 10, 1), (7, 2, 2, 5), (3, 4, 82, 1), (11, 2, 122, 1)])
def test_theorem15_witness(p, b, D, u):
    witness = solvers.theorem15_witness(p, b, 50)
    assert (witness.D, witness.u) == (D, u)
    assert witness.value == p**b + 1
    assert len(witness.norms) == 50
    assert witness.all_unit
    assert witness.forbidden_hits == []


@pytest.mark.parametrize("p, b", [(5, 2), (3, 3), (9, 2)])
def test_theorem15_witness_preconditions(p, b):
    with pytest.raises(PreconditionError):
        solvers.theorem15_witness(p, b)


@pytest.mark.parametrize(
    "C, P, Q, s, u, h_exponent, N",
    [(2, 2, 1, 1, 0, 1, 2), (4, 1, 2, 2, 0, 1, 4), (32, 2, 1, 4, 0, 1, 2), (250, 10, 1, 5, 0, 2, 4), (44, 11, 2, 2, 1, 1, 12), (72, 2, 3, 6, 0, 1, 4)],
)
def test_theorem41_bound(C, P, Q, s, u, h_exponent, N):
    cert = solvers.theorem41_bound(C)
    assert (cert.split.P, cert.split.Q, cert.split.s) == (P, Q, s)
    assert (cert.u, cert.h_exponent, cert.N) == (u, h_exponent, N)


def test_theorem41_bound_lcm_terms():
    assert [(t.q, t.term) for t in solvers.theorem41_bound(4).lcm_terms] == [(2, 2)]
    assert solvers.theorem41_bound(2).lcm_terms == []
    assert solvers.theorem41_bound(250).allowed_n == [1, 2, 3, 4]


def test_theorem41_bound_is_even_for_every_C():
    for C in range(2, 401, 2):
        cert = solvers.theorem41_bound(C)
        assert cert.N % 2 == 0
        assert cert.allows(1) and cert.allows(2) and cert.allows(3)


@pytest.mark.parametrize("C", [3, 0])
def test_theorem41_bound_rejects_odd(C):
    with pytest.raises(PreconditionError):
        solvers.theorem41_bound(C)


@pytest.mark.parametrize(
    "C, triple, status",
    [(32, (7, 3, 4), XCYNStatus.EXCEPTIONAL), (250, (401, 11, 5), XCYNStatus.EXCEPTIONAL), (2, (5, 3, 3), XCYNStatus.BOUND_SATISFIED)],
)
def test_solve_x2_plus_C(C, triple, status):
    found = {(s.x, s.y, s.n): s.status for s in solvers.solve_x2_plus_C(C, 200, 30)}
    assert found[triple] is status
    assert XCYNStatus.VIOLATION not in found.values()


def _is_prime_power_or_one(n):
    return n == 1 or len(factorint(n)) == 1


def _brute_force(C, y_max, n_max):
    found = set()
    for y in range(2, y_max + 1):
        if not _is_prime_power_or_one(y):
            continue
        for n in range(1, n_max + 1):
            value = y**n - C
            if value <= 0:
                continue
            x = isqrt(value)
            if x * x == value and gcd(x, y) == 1 and _is_prime_power_or_one(x):
                found.add((x, y, n))
    return found


def test_theorem41_sweep_has_no_violations_and_matches_brute_force():
    sweep = solvers.theorem41_sweep(200, 200, 30)
    assert sorted(sweep) == list(range(2, 201, 2))
    for C, solutions in sweep.items():
        assert all(s.status is not XCYNStatus.VIOLATION for s in solutions), C
        assert {(s.x, s.y, s.n) for s in solutions} == _brute_force(C, 200, 30), C
    statuses = {(s.C, s.x, s.y, s.n): s.status for sols in sweep.values() for s in sols}
    assert statuses[(32, 7, 3, 4)] is XCYNStatus.EXCEPTIONAL


def test_prime_powers_up_to():
    assert solvers.prime_powers_up_to(10) == [1, 2, 3, 4, 5, 7, 8, 9]

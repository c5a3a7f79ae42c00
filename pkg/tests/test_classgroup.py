from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from expdiophantine import classgroup, ntheory
from expdiophantine.errors import PreconditionError
from expdiophantine.models import QuadForm

SQUAREFREE = [P for P in range(1, 301) if all(f.exponent == 1 for f in ntheory.factorize(P).factors)]


def f(a, b, c, disc):
    return QuadForm(a=a, b=b, c=c, disc=disc)


def forms_as_tuples(forms):
    return [(g.a, g.b, g.c) for g in forms]


def composition_table(forms):
    return {(x, y): classgroup.compose(x, y) for x in forms for y in forms}


def test_reduced_forms_known_values():
    assert forms_as_tuples(classgroup.reduced_forms(-4)) == [(1, 0, 1)]
    assert forms_as_tuples(classgroup.reduced_forms(-40)) == [(1, 0, 10), (2, 0, 5)]
    assert forms_as_tuples(classgroup.reduced_forms(-23)) == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]


@pytest.mark.parametrize("disc", [-5, 0, 4, -6])
def test_reduced_forms_rejects_bad_discriminant(disc):
    with pytest.raises(PreconditionError):
        classgroup.reduced_forms(disc)


def test_two_enumeration_orders_agree():
    for disc in range(-3, -1000, -1):
        if disc % 4 in (0, 1):
            assert classgroup.reduced_forms(disc) == classgroup.reduced_forms_by_b(disc)


def test_reduce_form_lands_on_reduced_form():
    reduced = classgroup.reduce_form(f(6, 11, 6, 121 - 144))
    assert reduced.is_reduced
    assert reduced.disc == -23


@given(st.integers(1, 60), st.integers(-60, 60), st.integers(1, 60))
def test_reduce_form_is_reduced_and_keeps_disc(a, b, c):
    disc = b * b - 4 * a * c
    if disc >= 0:
        return
    reduced = classgroup.reduce_form(f(a, b, c, disc))
    assert reduced.is_reduced
    assert reduced.disc == disc


def test_compose_known_values():
    disc = -40
    e = classgroup.identity(disc)
    g = f(2, 0, 5, disc)
    assert classgroup.compose(e, g) == g
    assert classgroup.compose(g, g) == e
    h = f(2, 1, 3, -23)
    assert classgroup.compose(h, classgroup.inverse(h)) == classgroup.identity(-23)


def test_compose_rejects_mismatch():
    with pytest.raises(PreconditionError):
        classgroup.compose(classgroup.identity(-4), classgroup.identity(-8))
    with pytest.raises(PreconditionError):
        classgroup.compose(f(3, 1, 2, -23), classgroup.identity(-23))


def test_group_axioms():
    for P in SQUAREFREE:
        h, exponent, table = classgroup.class_exponent(P)
        if h > 12:
            continue
        forms = table.forms
        e = classgroup.identity(table.disc)
        assert e in forms
        products = composition_table(forms)
        assert set(products.values()) <= set(forms)
        for g in forms:
            assert products[(e, g)] == g
            assert products[(g, classgroup.inverse(g))] == e
        for x, y, z in product(forms, repeat=3):
            assert products[(products[(x, y)], z)] == products[(x, products[(y, z)])]


def test_exponent_divides_class_number():
    for P in SQUAREFREE:
        h, exponent, table = classgroup.class_exponent(P)
        assert h % exponent == 0
        assert all(exponent % o == 0 for o in table.orders)
        assert exponent in table.orders
        assert h == len(classgroup.reduced_forms(table.disc))


@pytest.mark.parametrize(
    "P, h, exponent, disc",
    [(1, 1, 1, -4), (2, 1, 1, -8), (10, 2, 2, -40), (23, 3, 3, -23), (5, 2, 2, -20), (21, 4, 2, -84)],
)
def test_class_exponent_known_values(P, h, exponent, disc):
    got_h, got_exponent, table = classgroup.class_exponent(P)
    assert (got_h, got_exponent, table.disc) == (h, exponent, disc)


def test_class_exponent_rejects_non_squarefree():
    with pytest.raises(PreconditionError):
        classgroup.class_exponent(12)


def test_power_matches_repeated_composition():
    disc = -47  # cyclic of order 5
    g = f(2, 1, 6, disc)
    acc = classgroup.identity(disc)
    for n in range(12):
        assert classgroup.power(g, n) == acc
        acc = classgroup.compose(acc, g)
    assert classgroup.order(g) == 5


def test_fundamental_discriminant():
    assert classgroup.fundamental_discriminant(3) == -3
    assert classgroup.fundamental_discriminant(7) == -7
    assert classgroup.fundamental_discriminant(10) == -40
    assert classgroup.fundamental_discriminant(1) == -4


def test_class_exponent_table_is_immutable():
    _, _, table = classgroup.class_exponent(21)
    assert isinstance(table.forms, tuple) and isinstance(table.orders, tuple)
    with pytest.raises(ValidationError):
        table.h = 0
    with pytest.raises(ValidationError):
        table.exponent = 1
    assert classgroup.class_exponent(21)[2].h == 4


def test_solve_linear_congruence():
    x0, step = classgroup._solve_linear_congruence(6, 4, 10)
    assert step == 5
    assert 0 <= x0 < 10 and (6 * x0 - 4) % 10 == 0
    with pytest.raises(ArithmeticError):
        classgroup._solve_linear_congruence(6, 3, 10)

"""Test finite field construction and arithmetic"""
import random

import pytest

from fedder_dp1.errors import DegreeMismatchError, InputFormatError, NotInvertibleError
from fedder_dp1.fields import arith, embed, field_of_order, frobenius, make_field, parse_elem
from fedder_dp1.fields.upoly import up_factor, up_from_ints, up_roots, up_sqf_list


def test_canonical_moduli():
    """Moduli are the lexicographically smallest monic irreducibles"""
    assert make_field(5).modulus is None
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert field_of_order(25).modulus == (2, 0, 1)
    assert make_field(3, 2) is make_field(3, 2)


def test_bad_fields():
    with pytest.raises(ValueError):
        make_field(4)
    with pytest.raises(InputFormatError):
        field_of_order(6)


def test_prime_field_arithmetic(f5):
    assert arith(f5.elem(2), f5.elem(4), "mul") == f5.elem(3)
    assert arith(f5.elem(1), f5.elem(2), "div") == f5.elem(3)
    assert f5.elem(3) - 4 == f5.elem(4)
    with pytest.raises(NotInvertibleError):
        f5.one() / f5.zero()


def test_extension_arithmetic(f9):
    u = f9.generator()
    assert u * u == f9.elem(2)
    assert str(f9.elem([1, 2])) == "2*u + 1"
    for a in f9.nonzero_elements():
        assert a * a.inverse() == f9.one()


def test_frobenius(f5, f9):
    for a in f5.elements():
        assert frobenius(a) == a
    u = f9.generator()
    assert frobenius(u) == u * 2
    for a in f9.elements():
        assert frobenius(frobenius(a)) == a


def test_embed(f3, f9):
    assert embed(f3.elem(2), f9) == f9.elem(2)
    with pytest.raises(DegreeMismatchError):
        embed(f9.generator(), make_field(3, 3))
    # the image of u is a root of u^2 + 1 in F_81
    f81 = make_field(3, 4)
    image = embed(f9.generator(), f81)
    assert image * image + 1 == f81.zero()


def test_element_indexing(f9):
    """elements(), element(i) and index_of agree on the lexicographic order"""
    listed = list(f9.elements())
    assert [f9.index_of(a) for a in listed] == list(range(9))
    assert [f9.element(i) for i in range(9)] == listed
    assert listed == sorted(listed)


def test_parse_elem_round_trip(f9):
    for a in f9.elements():
        assert parse_elem(str(a), f9) == a
    with pytest.raises(InputFormatError):
        parse_elem("u", make_field(3))


def test_trace_and_roots_in_char2(f4):
    u = f4.generator()
    assert u * u == u + 1
    assert u.trace() == 1
    assert f4.one().trace() == 0
    for a in f4.elements():
        assert a.frobenius_inverse() ** 2 == a


def test_is_square(f5):
    assert f5.elem(4).is_square()
    assert not f5.elem(2).is_square()


def test_univariate_roots(f3, f5):
    rng = random.Random(0)
    assert up_roots(up_from_ints(f5, [1, 0, 1]), rng) == [f5.elem(2), f5.elem(3)]
    assert up_roots(up_from_ints(f3, [1, 0, 1]), rng) == []


def test_univariate_factorization(f3):
    rng = random.Random(0)
    # x^3 is a pure cube in characteristic 3
    _, parts = up_sqf_list(up_from_ints(f3, [0, 0, 0, 1]))
    assert parts == [(up_from_ints(f3, [0, 1]), 3)]
    # (x^2 + 1) * (x + 1)^2
    f = up_from_ints(f3, [1, 2, 2, 2, 1])
    _, factors = up_factor(f, rng)
    assert sorted((len(h) - 1, m) for h, m in factors) == [(1, 2), (2, 1)]


@pytest.mark.parametrize("p, n", [(2, 2), (2, 3), (3, 2), (5, 1), (5, 2)])
def test_field_axioms_on_random_triples(rng, p, n):
    field = make_field(p, n)
    for _ in range(60):
        a, b, c = (field.element(rng.randrange(field.order)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert a - a == field.zero()
        assert (a + b) ** p == a**p + b**p
        assert frobenius(a * b) == frobenius(a) * frobenius(b)
        if b:
            assert (a / b) * b == a


@pytest.mark.parametrize("p, n, m", [(2, 2, 4), (3, 2, 4), (5, 2, 4), (2, 1, 3), (3, 1, 2)])
def test_embedding_commutes_with_frobenius(rng, p, n, m):
    source, target = make_field(p, n), make_field(p, m)
    for _ in range(30):
        a, b = (source.element(rng.randrange(source.order)) for _ in range(2))
        assert embed(frobenius(a), target) == frobenius(embed(a, target))
        assert embed(a * b, target) == embed(a, target) * embed(b, target)
        assert embed(a + b, target) == embed(a, target) + embed(b, target)

"""Test Fedder's criterion for hypersurfaces"""
import pytest

from fedder_dp1.dp1 import random_equation, to_poly
from fedder_dp1.errors import ZeroPolynomialError
from fedder_dp1.fedder import (
    frobenius_box_power,
    is_fsplit_hypersurface,
    monomial_in_frobenius_power,
)
from fedder_dp1.fields import make_field
from fedder_dp1.mpoly import MultiPoly, flat_alphabet, parse_poly


def test_monomial_membership():
    assert not monomial_in_frobenius_power((4, 4, 4, 4), 5)
    assert monomial_in_frobenius_power((0, 0, 3, 0), 2)
    assert monomial_in_frobenius_power((5, 1, 0, 0), 5)


def test_fermat_cubic_not_split(f2):
    f = parse_poly("x^3 + y^3 + z^3 + w^3", f2, flat_alphabet(["x", "y", "z", "w"]))
    verdict = is_fsplit_hypersurface(f)
    assert not verdict.f_split
    assert verdict.witness is None
    assert verdict.witness_text() is None


def test_char2_split_witness(f2):
    verdict = is_fsplit_hypersurface(parse_poly("y^2 + s*x*y - x^3", f2))
    assert verdict.f_split
    assert verdict.witness_text() == "s*x*y"
    assert verdict.witness_coefficient == f2.one()


def test_char5_normal_form_not_split(f5):
    verdict = is_fsplit_hypersurface(parse_poly("y^2 - (x^3 + s^5*t - s*t^5)", f5))
    assert not verdict.f_split


def test_single_variable_split():
    for p in (2, 3, 5, 7):
        field = make_field(p)
        verdict = is_fsplit_hypersurface(MultiPoly.var(field, "x", flat_alphabet(["x"])))
        assert verdict.f_split
        assert verdict.witness == (p - 1,)


def test_truncated_power_gives_same_verdict(rng):
    """The box-truncated power agrees with the full power on every verdict and witness"""
    for p in (2, 3, 5):
        field = make_field(p)
        for _ in range(8):
            f = to_poly(random_equation(field, rng))
            full = is_fsplit_hypersurface(f)
            boxed = is_fsplit_hypersurface(f, truncate=True)
            assert (full.f_split, full.witness) == (boxed.f_split, boxed.witness)
            assert frobenius_box_power(f) == f.pow(p - 1).truncate_box(p)


def test_zero_polynomial(f3):
    with pytest.raises(ZeroPolynomialError):
        is_fsplit_hypersurface(MultiPoly.zero(f3))

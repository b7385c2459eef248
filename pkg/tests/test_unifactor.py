"""Test root divisors and squarefree decompositions of binary forms"""
import pytest

from fedder_dp1.errors import ZeroPolynomialError
from fedder_dp1.fields import make_field
from fedder_dp1.mpoly import BinaryForm
from fedder_dp1.pgl2 import la5_target
from fedder_dp1.unifactor import (
    DivisorP1,
    PointP1,
    leading_unit,
    points_p1,
    reconstruct,
    roots,
    roots_in,
    splitting_degree,
    squarefree_decomposition,
)


def test_squarefree_pure_power(f3):
    s3 = BinaryForm.monomial(f3, 3, 0)
    assert squarefree_decomposition(s3) == [(BinaryForm.of(f3, [1, 0]), 3)]


def test_squarefree_double_roots(f5):
    g = la5_target(f5)
    assert squarefree_decomposition(g * g) == [(g, 2)]


def test_squarefree_three_lines_char2(f2):
    g = BinaryForm.of(f2, [0, 1, 1, 0])  # s^2*t + s*t^2
    assert squarefree_decomposition(g) == [(g, 1)]


def test_roots_rational_points(f5):
    divisor = roots(la5_target(f5))
    assert divisor.field == f5
    assert divisor.degree == 6
    assert divisor.support() == list(points_p1(f5))
    assert divisor.profile() == (1,) * 6


def test_roots_multiple_point(f3):
    divisor = roots(BinaryForm.monomial(f3, 4, 0))
    assert str(divisor) == "4*[0:1]"
    assert divisor.multiplicity(PointP1.affine(f3.zero())) == 4


def test_roots_conjugate_pair(f3, f9):
    g = BinaryForm.of(f3, [1, 0, 1])  # s^2 + t^2
    divisor = roots(g)
    assert divisor.field == f9
    assert divisor.profile() == (1, 1)
    assert all(not pt.a.in_prime_field() for pt in divisor.support())
    assert splitting_degree(g) == 2
    assert roots_in(g, f3) == []
    assert len(roots_in(g, f9)) == 2


def test_reconstruct(f2, f3, f5):
    forms = [
        la5_target(f5),
        BinaryForm.of(f3, [2, 0, 2]),
        BinaryForm.of(f2, [0, 1, 1, 0]),
        BinaryForm.monomial(f3, 0, 4, 2),
    ]
    for g in forms:
        divisor = roots(g)
        assert reconstruct(leading_unit(g), divisor) == g.change_field(divisor.field)


def test_points_p1_order(f3):
    points = list(points_p1(f3))
    assert len(points) == 4
    assert points[0].is_infinity()
    assert [str(pt) for pt in points] == ["[1:0]", "[0:1]", "[1:1]", "[2:1]"]


def test_divisor_merges_points(f5):
    origin = PointP1.affine(f5.zero())
    d = DivisorP1.from_points(f5, [(origin, 2), (PointP1.infinity(f5), 1), (origin, 1)])
    assert str(d) == "1*[1:0] + 3*[0:1]"
    assert d.profile() == (3, 1)


def test_roots_of_zero(f5):
    with pytest.raises(ZeroPolynomialError):
        roots(BinaryForm.zero(f5, 3))


def test_roots_are_deterministic():
    f7 = make_field(7)
    g = BinaryForm.of(f7, [1, 0, 0, 3, 0, 1])
    assert roots(g, seed=1) == roots(g, seed=2)

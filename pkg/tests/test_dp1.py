"""Test degree-1 del Pezzo equations: shape, discriminants, fibers and smoothness"""
import pytest

from fedder_dp1.census import NORMALIZED_LAYOUTS
from fedder_dp1.dp1 import (
    DP1Equation,
    SmoothnessVerdict,
    WeierstrassFiber,
    branch_curve,
    complete_square_cube,
    discriminant,
    fiber_at,
    from_poly,
    from_record,
    is_normalized,
    is_supersingular,
    j_invariant,
    j_numerator_formulaire,
    j_zero_family,
    random_equation,
    read_coefficient_file,
    smoothness,
    to_poly,
    to_record,
    write_coefficient_file,
)
from fedder_dp1.errors import (
    InputFormatError,
    NotNormalizedError,
    ShapeError,
    SingularFiberError,
    UnsupportedCharacteristicError,
)
from fedder_dp1.fedder import is_fsplit_hypersurface
from fedder_dp1.fields import make_field
from fedder_dp1.mpoly import BinaryForm
from fedder_dp1.pgl2 import la5_target
from fedder_dp1.unifactor import PointP1, points_p1


def test_to_poly(f2, f3, f5, poly):
    assert to_poly(DP1Equation.of(f5)) == poly("y^2 - x^3", f5)
    assert to_poly(DP1Equation.of(f3, a4=[1, 0, 0, 0, 0])) == poly("y^2 - (x^3 + s^4*x)", f3)
    eq = DP1Equation.of(f2, a1=[1, 0], a3=[0, 0, 0, 1])
    assert to_poly(eq) == poly("y^2 + s*x*y + t^3*y - x^3", f2)


def test_from_poly_accepts_unit_multiple(f5, poly):
    eq = from_poly(poly("2*y^2 - 2*x^3 - 2*s^6", f5))
    assert eq == DP1Equation.of(f5, a6=[1, 0, 0, 0, 0, 0, 0])


def test_from_poly_rejects_bad_shapes(f5, poly):
    with pytest.raises(ShapeError):
        from_poly(poly("y^2 - x^2", f5))
    with pytest.raises(ShapeError):
        from_poly(poly("y^2 + x^3", f5))
    with pytest.raises(ShapeError):
        from_poly(poly("x^3 - s^6", f5))


def test_round_trip_through_poly(rng):
    for p in (2, 3, 5):
        eq = random_equation(make_field(p), rng)
        assert from_poly(to_poly(eq)) == eq


def test_discriminant_char5(f5):
    a6 = la5_target(f5)
    eq = DP1Equation.of(f5, a6=a6)
    assert discriminant(eq) == (a6 * a6).scale(3)


def test_discriminant_char2(f2):
    eq = DP1Equation.of(f2, a3=[0, 1, 0, 0])  # a3 = s^2*t
    assert discriminant(eq) == BinaryForm.monomial(f2, 8, 4)


def test_discriminant_char3(f3, rng):
    a6 = [f3.element(rng.randrange(3)) for _ in range(7)]
    eq = DP1Equation.of(f3, a4=[1, 0, 0, 0, 0], a6=a6)
    assert discriminant(eq) == BinaryForm.monomial(f3, 12, 0, -1)


def test_closed_forms_need_normalized_equations(f5):
    with pytest.raises(NotNormalizedError):
        discriminant(DP1Equation.of(f5, a1=[1, 0]))
    with pytest.raises(UnsupportedCharacteristicError):
        discriminant(DP1Equation.of(make_field(7)))


def test_closed_forms_match_formulaire(rng):
    """Discriminant and j-numerator closed forms agree with the b-quantity formulas"""
    for p in (2, 3, 5):
        field = make_field(p)
        for _ in range(100):
            eq = random_equation(field, rng, NORMALIZED_LAYOUTS[p])
            assert discriminant(eq, "closed") == discriminant(eq, "formulaire")
            assert j_invariant(eq).numerator == j_numerator_formulaire(eq)


def test_j_invariant(f2, f3, f5, rng):
    eq3 = DP1Equation.of(f3, a4=[1, 0, 0, 1, 0])
    assert j_invariant(eq3).j_is_zero
    eq2 = DP1Equation.of(f2, a3=[1, 0, 0, 1])
    j2 = j_invariant(eq2)
    assert j2.j_is_zero
    assert j2.discriminant == eq2.a3**4
    eq5 = DP1Equation.of(f5, a4=[1, 0, 0, 0, 0])
    j5 = j_invariant(eq5)
    assert j5.numerator == BinaryForm.monomial(f5, 12, 0, 3)
    assert j5.discriminant == BinaryForm.monomial(f5, 12, 0)
    assert not j5.j_is_zero


def test_complete_square_cube(rng):
    """Completion normalizes and keeps the Fedder verdict"""
    for p in (3, 5):
        field = make_field(p)
        for _ in range(4):
            eq = random_equation(field, rng)
            completed = complete_square_cube(eq)
            assert is_normalized(completed)
            before = is_fsplit_hypersurface(to_poly(eq)).f_split
            after = is_fsplit_hypersurface(to_poly(completed)).f_split
            assert before == after


def test_fiber_at(f5):
    eq = DP1Equation.of(f5, a6=[1, 0, 0, 0, 0, 0, 1])
    fiber = fiber_at(eq, PointP1.affine(f5.zero()))
    assert fiber == WeierstrassFiber.of(f5, a6=1)
    assert str(fiber) == "y^2 = x^3 + 1"


def test_fiber_at_char2(f2):
    eq = DP1Equation.of(f2, a1=[1, 0])
    fiber = fiber_at(eq, PointP1.affine(f2.one()))
    assert fiber.a1 == f2.one()
    assert str(fiber) == "y^2 + x*y = x^3"


def test_supersingular_fibers(f2, f5):
    assert WeierstrassFiber.of(f5, a6=1).count_points() == 6
    assert is_supersingular(WeierstrassFiber.of(f5, a6=1))
    assert WeierstrassFiber.of(f5, a4=1).count_points() == 4
    assert not is_supersingular(WeierstrassFiber.of(f5, a4=1))
    assert is_supersingular(WeierstrassFiber.of(f2, a3=1))
    with pytest.raises(SingularFiberError):
        is_supersingular(WeierstrassFiber.of(f5))


def test_supersingular_iff_j_zero(rng):
    """Trace divisible by p exactly when the fiber has j = 0"""
    for p in (2, 3, 5):
        field = make_field(p, 2)
        checked = 0
        while checked < 30:
            coeffs = [field.element(rng.randrange(field.order)) for _ in range(5)]
            fiber = WeierstrassFiber.of(field, *coeffs)
            if not fiber.is_smooth():
                continue
            checked += 1
            assert is_supersingular(fiber) == fiber.j_is_zero()


def test_smoothness_exact_char5(f5):
    report = smoothness(DP1Equation.of(f5, a6=la5_target(f5)))
    assert report.verdict is SmoothnessVerdict.SMOOTH
    assert report.method == "exact"
    singular = smoothness(DP1Equation.of(f5, a6=BinaryForm.monomial(f5, 6, 0)))
    assert singular.verdict is SmoothnessVerdict.SINGULAR
    assert singular.witness_text() == ["(0 : 1 : 0 : 0)"]


def test_smoothness_degenerate_char2(f2):
    report = smoothness(DP1Equation.of(f2))
    assert report.verdict is SmoothnessVerdict.SINGULAR
    assert report.witnesses


def test_smoothness_search_char3(f3):
    # cusps of the fibers over the roots of a4 are smooth points of the surface
    eq = DP1Equation.of(f3, a4=[0, 1, 0, 2, 0], a6=[1, 0, 0, 0, 0, 0, 1])
    report = smoothness(eq, search_bound=2)
    assert report.method == "point-search"
    assert report.verdict is SmoothnessVerdict.UNDETERMINED
    assert report.exhaustive
    assert report.searched_degrees == (1, 2)


def test_branch_curve(f2, f3, poly):
    eq = DP1Equation.of(f2, a3=[0, 0, 0, 1])
    assert branch_curve(eq) == poly("t^3", f2)
    with pytest.raises(UnsupportedCharacteristicError):
        branch_curve(DP1Equation.of(f3))


def test_coefficient_file(f5):
    text = "# char 5 normal form\na6: 0 1 0 0 0 4 0\n"
    eq = read_coefficient_file(text, f5)
    assert eq == DP1Equation.of(f5, a6=la5_target(f5))
    assert read_coefficient_file(write_coefficient_file(eq), f5) == eq


def test_coefficient_file_errors(f5):
    with pytest.raises(InputFormatError):
        read_coefficient_file("a6: 0 1 0 0 0 5 0", f5)
    with pytest.raises(InputFormatError):
        read_coefficient_file("a4: 0 1", f5)
    with pytest.raises(InputFormatError):
        read_coefficient_file("a1: 0 0\na1: 1 0", f5)
    with pytest.raises(InputFormatError):
        read_coefficient_file("a5: 0", f5)


def test_extension_coefficient_file(f9):
    eq = DP1Equation.of(f9, a1=[f9.generator(), 1])
    text = write_coefficient_file(eq)
    assert "a1: u, 1" in text
    assert read_coefficient_file(text, f9) == eq


def test_records(rng):
    field = make_field(5, 2)
    eq = random_equation(field, rng)
    record = to_record(eq)
    assert record["field"] == {"p": 5, "n": 2, "modulus": [2, 0, 1]}
    assert from_record(record) == eq


def test_j_zero_family(f3, f5, f2, rng):
    eq5 = j_zero_family(f5, rng)
    assert all(getattr(eq5, slot).is_zero() for slot in ("a1", "a2", "a3", "a4"))
    eq3 = j_zero_family(f3, rng)
    assert eq3.a2.is_zero()
    assert j_invariant(eq3).j_is_zero
    with pytest.raises(UnsupportedCharacteristicError):
        j_zero_family(f2, rng)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_fiber_smooth_iff_discriminant_nonzero(rng, p):
    """A fiber is smooth exactly where the discriminant form does not vanish"""
    field, ext = make_field(p), make_field(p, 2)
    for layout in (NORMALIZED_LAYOUTS[p], ("a1", "a2", "a3", "a4", "a6")):
        for _ in range(8):
            eq = random_equation(field, rng, layout)
            delta = discriminant(eq, "formulaire")
            points = list(points_p1(field)) + [PointP1.affine(ext.generator())]
            for pt in points:
                fiber = fiber_at(eq, pt)
                vanishes = delta.evaluate(pt.a, pt.b).is_zero()
                assert fiber.is_smooth() != vanishes
                assert (not fiber.singular_points()) == fiber.is_smooth()

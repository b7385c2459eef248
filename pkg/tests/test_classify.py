"""Test the three-way classification of degree-1 del Pezzo equations"""
import pytest

from fedder_dp1.classify import (
    NON_SPLIT_LABELS,
    Classifier,
    classify,
    condition_c_pattern,
    lemma_predicate,
)
from fedder_dp1.config import ClassifierConfig
from fedder_dp1.dp1 import (
    DP1Equation,
    SmoothnessVerdict,
    complete_square_cube,
    from_poly,
    random_equation,
)
from fedder_dp1.errors import UnsupportedCharacteristicError
from fedder_dp1.fields import make_field
from fedder_dp1.mpoly import BinaryForm
from fedder_dp1.pgl2 import DeltaLabel, random_admissible

CONFIG = ClassifierConfig(search_bound=2, fiber_spot_checks=3)


def test_char5_fermat_type_surface(f5, poly):
    eq = from_poly(poly("y^2 - x^3 - s^6 - t^6", f5))
    report = classify(eq, CONFIG)
    assert not report.fedder.f_split
    assert report.lemma_predicate
    assert report.condition_c.j_zero
    assert report.condition_c.delta_class.label is DeltaLabel.TWO_P1_F5
    assert report.smoothness.verdict is SmoothnessVerdict.SMOOTH
    assert report.fibers.checked == 3
    assert report.consistent
    assert "(a, b, c, d) = (1, 0, 0, 1)" in report.normal_form


def test_char3_split_when_a2_nonzero(f3):
    eq = DP1Equation.of(f3, a2=[1, 0, 0], a6=[0, 0, 0, 0, 0, 0, 1])
    report = Classifier(CONFIG).classify(eq)
    assert report.fedder.f_split
    assert not report.lemma_predicate
    assert not report.condition_c.j_zero
    assert report.consistent


def test_char3_non_split_normal_form(f3):
    eq = DP1Equation.of(f3, a4=[0, 1, 0, 2, 0], a6=[1, 0, 0, 0, 0, 0, 1])
    report = classify(eq, CONFIG)
    assert not report.fedder.f_split
    assert report.lemma_predicate
    assert report.condition_c.delta_class.label is DeltaLabel.THREE_P1_F3
    assert report.smoothness.exhaustive
    assert report.consistent


def test_char2_three_lines(f2):
    eq = DP1Equation.of(f2, a3=[0, 1, 1, 0])
    report = classify(eq, CONFIG)
    assert not report.fedder.f_split
    assert report.lemma_predicate
    assert report.condition_c.delta_class.label is DeltaLabel.BRANCH_DISTINCT


def test_char2_triple_line(f2, poly):
    report = classify(from_poly(poly("y^2 + t^3*y - x^3", f2)), CONFIG)
    assert not report.fedder.f_split
    assert report.condition_c.delta_class.label is DeltaLabel.BRANCH_TRIPLE
    assert report.consistent


def test_char2_split(f2, poly):
    report = classify(from_poly(poly("y^2 + s*x*y + t^3*y - x^3", f2)), CONFIG)
    assert report.fedder.f_split
    assert not report.lemma_predicate
    assert report.condition_c.delta_class.label is DeltaLabel.OTHER


def test_lemma_predicate(f5, f3):
    ok, _ = lemma_predicate(DP1Equation.of(f5, a6=BinaryForm.monomial(f5, 6, 0)))
    assert ok
    ok, reason = lemma_predicate(DP1Equation.of(f5, a6=BinaryForm.monomial(f5, 3, 3)))
    assert not ok
    assert "s^3*t^3" in reason
    ok, _ = lemma_predicate(DP1Equation.of(f3, a4=BinaryForm.monomial(f3, 2, 2)))
    assert not ok
    with pytest.raises(UnsupportedCharacteristicError):
        lemma_predicate(DP1Equation.of(make_field(7)))


def test_unsupported_characteristic():
    with pytest.raises(UnsupportedCharacteristicError):
        classify(DP1Equation.of(make_field(7)), CONFIG)


def test_condition_c_on_smooth_non_split_samples(rng):
    """Smooth non-F-split members of the j = 0 normal forms carry the expected discriminant class"""
    f5 = make_field(5)
    seen = 0
    while seen < 6:
        a, b, c, d = (f5.elem(rng.randrange(5)) for _ in range(4))
        z = f5.zero()
        eq = DP1Equation.of(f5, a6=[a, b, z, z, z, c, d])
        report = classify(eq, CONFIG)
        if not report.smooth_known:
            continue
        seen += 1
        assert not report.fedder.f_split
        assert condition_c_pattern(5, report.condition_c)
        assert report.consistent


def test_classification_invariant_under_admissible_changes(rng):
    f3 = make_field(3)
    eq = DP1Equation.of(f3, a4=[0, 1, 0, 2, 0], a6=[1, 0, 0, 0, 0, 0, 1])
    base = classify(eq, CONFIG)
    for _ in range(3):
        twisted = random_admissible(f3, rng).apply(eq)
        report = classify(twisted, CONFIG)
        assert report.fedder.f_split == base.fedder.f_split
        assert report.lemma_predicate == base.lemma_predicate
        assert report.condition_c.j_zero == base.condition_c.j_zero
        assert report.condition_c.delta_class.label is base.condition_c.delta_class.label
        assert complete_square_cube(twisted).a2.is_zero()


def test_remark_witness_for_split_j_zero_surface(f5):
    """a6 with a rational quadruple and a conjugate pair of roots: F-split, j = 0, smooth"""
    eq = DP1Equation.of(f5, a6=[0, 1, 0, 2, 0, 2, 0])
    report = classify(eq, CONFIG)
    assert report.fedder.f_split
    assert report.condition_c.j_zero
    assert report.smoothness.verdict is SmoothnessVerdict.SMOOTH
    assert report.condition_c.delta_class.label is DeltaLabel.OTHER
    assert report.remark_witness
    assert report.consistent


def test_condition_c_on_smooth_non_split_char3_samples(rng):
    """a2 = 0 and a4 in the span of s^4, s^3*t, s*t^3, t^4: j = 0 with a listed class"""
    f3 = make_field(3)
    z = f3.zero()
    seen = 0
    for _ in range(200):
        a, b, c, d = (f3.element(rng.randrange(3)) for _ in range(4))
        a6 = [f3.element(rng.randrange(3)) for _ in range(7)]
        report = classify(DP1Equation.of(f3, a4=[a, b, z, c, d], a6=a6), CONFIG)
        assert report.lemma_predicate
        assert not report.fedder.f_split
        if not report.smooth_known or report.discriminant.is_zero():
            continue
        seen += 1
        assert report.condition_c.j_zero
        assert report.condition_c.delta_class.label in NON_SPLIT_LABELS[3]
        assert report.consistent
        if seen == 5:
            break
    assert seen == 5


def test_condition_c_on_smooth_non_split_char2_samples(rng):
    """a1 = 0 with a nonzero branch cubic: j = 0 and a branch class"""
    f2 = make_field(2)
    config = ClassifierConfig(search_bound=3, fiber_spot_checks=3)
    branch_labels = {
        DeltaLabel.BRANCH_TRIPLE,
        DeltaLabel.BRANCH_DOUBLE_SINGLE,
        DeltaLabel.BRANCH_DISTINCT,
    }
    seen = 0
    for _ in range(200):
        eq = random_equation(f2, rng, ("a2", "a3", "a4", "a6"))
        if eq.a3.is_zero():
            continue
        report = classify(eq, config)
        assert not report.fedder.f_split
        assert report.lemma_predicate
        if not report.smooth_known:
            continue
        seen += 1
        assert report.condition_c.j_zero
        assert report.condition_c.delta_class.label in branch_labels
        assert report.consistent
        if seen == 5:
            break
    assert seen == 5


@pytest.mark.parametrize("p", [2, 3, 5])
def test_random_reports_invariant_under_admissible_changes(rng, p):
    field = make_field(p)
    for _ in range(3):
        eq = random_equation(field, rng)
        base = classify(eq, CONFIG)
        assert base.consistent
        twisted = random_admissible(field, rng).apply(eq)
        report = classify(twisted, CONFIG)
        assert report.fedder.f_split == base.fedder.f_split
        assert report.lemma_predicate == base.lemma_predicate
        assert report.condition_c.j_zero == base.condition_c.j_zero
        assert report.condition_c.delta_class.label is base.condition_c.delta_class.label
        assert report.discriminant.is_zero() == base.discriminant.is_zero()
        assert report.smoothness.verdict is base.smoothness.verdict
        assert report.smooth_known == base.smooth_known
        assert report.remark_witness == base.remark_witness
        assert report.consistent

"""Classification of degree-1 del Pezzo equations in characteristics 2, 3 and 5.

For each equation the classifier compares three things that must agree:

* the Fedder verdict on the sextic,
* the closed-form normal-form predicate on the completed equation,
* j = 0 together with the projective class of the discriminant divisor
  (of the branch cubic in characteristic 2), on equations known to be smooth.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import structlog
from opentelemetry import trace

from .config import ClassifierConfig, get_config
from .dp1 import (
    DP1Equation,
    SmoothnessReport,
    SmoothnessVerdict,
    complete_square_cube,
    discriminant,
    fiber_at,
    is_supersingular,
    j_invariant,
    smoothness,
    to_poly,
)
from .errors import UnsupportedCharacteristicError
from .fedder import FedderVerdict, is_fsplit_hypersurface
from .mpoly import BinaryForm
from .pgl2 import ANTICANONICAL, BRANCH, DeltaClass, DeltaLabel, delta_class_of_form
from .unifactor import points_p1

logger = structlog.get_logger()
tracer = trace.get_tracer(__name__)

SUPPORTED_CHARACTERISTICS = (2, 3, 5)

NON_SPLIT_LABELS = {
    5: frozenset({DeltaLabel.TWO_P1_F5}),
    3: frozenset({DeltaLabel.TWELVE_O, DeltaLabel.NINE_THREE, DeltaLabel.THREE_P1_F3}),
}


@dataclass(frozen=True)
class ConditionC:
    j_zero: bool
    delta_class: DeltaClass


@dataclass(frozen=True)
class FiberSpotCheck:
    checked: int
    agree: bool


@dataclass(frozen=True)
class ClassificationReport:
    p: int
    equation: DP1Equation
    normalized: DP1Equation
    fedder: FedderVerdict
    lemma_predicate: bool
    normal_form: str
    condition_c: ConditionC
    discriminant: BinaryForm
    smoothness: SmoothnessReport
    fibers: FiberSpotCheck
    consistent: bool
    remark_witness: bool

    @property
    def smooth_known(self) -> bool:
        return _smooth_known(self.smoothness)


def _smooth_known(report: SmoothnessReport) -> bool:
    if report.verdict is SmoothnessVerdict.SMOOTH:
        return True
    return report.verdict is SmoothnessVerdict.UNDETERMINED and report.exhaustive


def lemma_predicate(normalized: DP1Equation) -> Tuple[bool, str]:
    """Closed-form condition for non-F-splitting on a completed equation, with a description"""
    p = normalized.field.p
    if p == 5:
        a4, a6 = normalized.a4, normalized.a6
        if not a4.is_zero():
            return False, "a4 != 0"
        middle = [a6.coefficient(6 - j, j) for j in (2, 3, 4)]
        if any(not c.is_zero() for c in middle):
            return False, "a6 has a term in s^4*t^2, s^3*t^3 or s^2*t^4"
        a, b, c, d = (a6.coefficient(6 - j, j) for j in (0, 1, 5, 6))
        return True, (
            "a4 = 0, a6 = a*s^6 + b*s^5*t + c*s*t^5 + d*t^6"
            f" with (a, b, c, d) = ({a}, {b}, {c}, {d})"
        )
    if p == 3:
        a2, a4 = normalized.a2, normalized.a4
        if not a2.is_zero():
            return False, "a2 != 0"
        if not a4.coefficient(2, 2).is_zero():
            return False, "a4 has a term in s^2*t^2"
        a, b, c, d = (a4.coefficient(4 - j, j) for j in (0, 1, 3, 4))
        return True, (
            "a2 = 0, a4 = a*s^4 + b*s^3*t + c*s*t^3 + d*t^4"
            f" with (a, b, c, d) = ({a}, {b}, {c}, {d})"
        )
    if p == 2:
        if normalized.a1.is_zero():
            return True, "a1 = 0"
        return False, "a1 != 0"
    raise UnsupportedCharacteristicError(f"no normal-form predicate in characteristic {p}", p)


def condition_c_pattern(p: int, condition: ConditionC) -> bool:
    """The j = 0 and discriminant-class shape expected of smooth non-F-split surfaces"""
    if p == 2:
        return condition.j_zero
    return condition.j_zero and condition.delta_class.label in NON_SPLIT_LABELS[p]


def spot_check_fibers(eq: DP1Equation, limit: int) -> FiberSpotCheck:
    """Point-count the first smooth rational fibers and compare supersingularity with j = 0"""
    checked, agree = 0, True
    for pt in points_p1(eq.field):
        if checked >= limit:
            break
        fiber = fiber_at(eq, pt)
        if not fiber.is_smooth():
            continue
        checked += 1
        if is_supersingular(fiber) != fiber.j_is_zero():
            agree = False
            logger.warning("fiber_supersingularity_mismatch", point=str(pt), fiber=str(fiber))
    return FiberSpotCheck(checked, agree)


class Classifier:
    """Runs the Fedder check, the normal-form predicate and condition (c) on one equation"""

    def __init__(self, config: Optional[ClassifierConfig] = None):
        self.config = config or get_config().classifier

    def classify(self, eq: DP1Equation) -> ClassificationReport:
        p = eq.field.p
        if p not in SUPPORTED_CHARACTERISTICS:
            raise UnsupportedCharacteristicError(
                f"classification is defined for p in {SUPPORTED_CHARACTERISTICS}, got {p}", p
            )
        with tracer.start_as_current_span("classify") as span:
            span.set_attribute("p", p)
            span.set_attribute("q", eq.field.order)

            verdict = is_fsplit_hypersurface(to_poly(eq))
            normalized = complete_square_cube(eq)
            predicate, description = lemma_predicate(normalized)
            delta = discriminant(normalized, "closed")
            j_zero = j_invariant(normalized).j_is_zero
            condition = ConditionC(j_zero, self._delta_class(normalized, delta))
            smooth = smoothness(normalized, self.config.search_bound)
            fibers = spot_check_fibers(normalized, self.config.fiber_spot_checks)

            non_split = not verdict.f_split
            consistent = (non_split == predicate) and fibers.agree
            smooth_known = _smooth_known(smooth)
            if smooth_known and not delta.is_zero():
                consistent = consistent and (non_split == condition_c_pattern(p, condition))
            remark = (
                p in NON_SPLIT_LABELS
                and verdict.f_split
                and j_zero
                and smooth_known
                and condition.delta_class.label not in NON_SPLIT_LABELS[p]
            )

            span.set_attribute("f_split", verdict.f_split)
            span.set_attribute("consistent", consistent)
            logger.info(
                "classified",
                p=p,
                q=eq.field.order,
                f_split=verdict.f_split,
                predicate=predicate,
                j_zero=j_zero,
                delta_class=condition.delta_class.label.value,
                smoothness=smooth.verdict.value,
                consistent=consistent,
            )
            if not consistent:
                logger.warning(
                    "classification_inconsistent", equation=str(eq), predicate=description
                )

            return ClassificationReport(
                p=p,
                equation=eq,
                normalized=normalized,
                fedder=verdict,
                lemma_predicate=predicate,
                normal_form=description,
                condition_c=condition,
                discriminant=delta,
                smoothness=smooth,
                fibers=fibers,
                consistent=consistent,
                remark_witness=bool(remark),
            )

    def _delta_class(self, normalized: DP1Equation, delta: BinaryForm) -> DeltaClass:
        if normalized.field.p != 2:
            return delta_class_of_form(delta, ANTICANONICAL)
        # branch cubic of the double cover; only a binary form when a1 = 0
        if normalized.a1.is_zero() and not normalized.a3.is_zero():
            return delta_class_of_form(normalized.a3, BRANCH)
        return DeltaClass(DeltaLabel.OTHER)


def classify(eq: DP1Equation, config: Optional[ClassifierConfig] = None) -> ClassificationReport:
    return Classifier(config).classify(eq)

"""Coordinate changes on (s, t) and projective equivalence of divisors on P^1.

A matrix M = [[a, b], [c, d]] acts on forms by g -> g(a*s + b*t, c*s + d*t) and on points by
(s : t) -> (a*s + b*t : c*s + d*t), so that roots(g o M) = M^-1 . roots(g).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple, Union

import structlog

from .dp1 import DP1Equation, apply_admissible
from .errors import (
    DegreeMismatchError,
    FieldTooLargeError,
    InsufficientRootsError,
    NotInvertibleError,
    WrongShapeError,
    ZeroPolynomialError,
)
from .fields import FieldDesc, FieldElem, common_field, embed, make_field
from .mpoly import BinaryForm
from .unifactor import DivisorP1, PointP1, points_p1, roots, squarefree_decomposition

logger = structlog.get_logger()

Scalar = Union[FieldElem, int]


@dataclass(frozen=True)
class GL2Matrix:
    a: FieldElem
    b: FieldElem
    c: FieldElem
    d: FieldElem

    def __post_init__(self):
        if self.det().is_zero():
            raise NotInvertibleError(f"singular matrix {self}")

    @classmethod
    def of(cls, field: FieldDesc, a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> "GL2Matrix":
        return cls(*(field.elem(v) for v in (a, b, c, d)))

    @classmethod
    def identity(cls, field: FieldDesc) -> "GL2Matrix":
        return cls.of(field, 1, 0, 0, 1)

    @property
    def field(self) -> FieldDesc:
        return self.a.desc

    def det(self) -> FieldElem:
        return self.a * self.d - self.b * self.c

    def compose(self, other: "GL2Matrix") -> "GL2Matrix":
        """Matrix product self * other (apply other first on points)"""
        target = common_field(self.field, other.field)
        x, y = self.change_field(target), other.change_field(target)
        return GL2Matrix(
            x.a * y.a + x.b * y.c,
            x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d,
        )

    def inverse(self) -> "GL2Matrix":
        inv = self.det().inverse()
        return GL2Matrix(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def scale(self, k: FieldElem) -> "GL2Matrix":
        return GL2Matrix(self.a * k, self.b * k, self.c * k, self.d * k)

    def change_field(self, target: FieldDesc) -> "GL2Matrix":
        if target == self.field:
            return self
        return GL2Matrix(*(embed(v, target) for v in (self.a, self.b, self.c, self.d)))

    def apply_point(self, pt: PointP1) -> PointP1:
        target = common_field(self.field, pt.field)
        m, pt = self.change_field(target), pt.change_field(target)
        return PointP1.from_coords(m.a * pt.a + m.b * pt.b, m.c * pt.a + m.d * pt.b)

    def apply_divisor(self, divisor: DivisorP1) -> DivisorP1:
        target = common_field(self.field, divisor.field)
        return DivisorP1.from_points(
            target, ((self.apply_point(pt), m) for pt, m in divisor.points)
        )

    def projectively_equal(self, other: "GL2Matrix") -> bool:
        target = common_field(self.field, other.field)
        x, y = self.change_field(target), other.change_field(target)
        cross = (x.a * y.b - x.b * y.a, x.a * y.c - x.c * y.a, x.a * y.d - x.d * y.a,
                 x.b * y.c - x.c * y.b, x.b * y.d - x.d * y.b, x.c * y.d - x.d * y.c)
        return all(v.is_zero() for v in cross)

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def act_gl2(target: Union[BinaryForm, DP1Equation], m: GL2Matrix) -> Union[BinaryForm, DP1Equation]:
    """Substitute (s, t) -> (a*s + b*t, c*s + d*t) in a form or in every form of an equation"""
    field = common_field(target.field, m.field)
    m = m.change_field(field)
    if isinstance(target, BinaryForm):
        return target.change_field(field).compose_linear(m.a, m.b, m.c, m.d)
    eq = target.change_field(field)
    return DP1Equation(
        field,
        **{slot: form.compose_linear(m.a, m.b, m.c, m.d) for slot, form in eq.forms().items()},
    )


@dataclass(frozen=True)
class AdmissibleChange:
    """s,t -> M(s,t); x -> lam*x + b2; y -> mu*y + b1*x + b3"""

    matrix: GL2Matrix
    b1: BinaryForm
    b2: BinaryForm
    b3: BinaryForm
    lam: FieldElem
    mu: FieldElem

    def __post_init__(self):
        if self.lam.is_zero() or self.mu.is_zero():
            raise NotInvertibleError("lam and mu must be units")
        for name, form in (("b1", self.b1), ("b2", self.b2), ("b3", self.b3)):
            if form.degree != int(name[1]):
                raise DegreeMismatchError(f"{name} must have degree {name[1]}")

    @property
    def keeps_dp1_shape(self) -> bool:
        return self.mu * self.mu == self.lam**3

    def apply(self, eq: DP1Equation) -> DP1Equation:
        return apply_admissible(eq, self)

    def inverse(self) -> "AdmissibleChange":
        """The change undoing this one: applying both in turn returns the original equation"""
        m = self.matrix.inverse()
        b1, b2, b3 = (act_gl2(form, m) for form in (self.b1, self.b2, self.b3))
        lam_inv, mu_inv = self.lam.inverse(), self.mu.inverse()
        k = lam_inv * mu_inv
        return AdmissibleChange(
            matrix=m,
            b1=b1.scale(-k),
            b2=b2.scale(-lam_inv),
            b3=(b1 * b2).scale(k) - b3.scale(mu_inv),
            lam=lam_inv,
            mu=mu_inv,
        )


def random_gl2(field: FieldDesc, rng: random.Random) -> GL2Matrix:
    q = field.order
    while True:
        a, b, c, d = (field.element(rng.randrange(q)) for _ in range(4))
        if not (a * d - b * c).is_zero():
            return GL2Matrix(a, b, c, d)


def _random_form(field: FieldDesc, degree: int, rng: random.Random) -> BinaryForm:
    coeffs = tuple(field.element(rng.randrange(field.order)) for _ in range(degree + 1))
    return BinaryForm(field, degree, coeffs)


def random_admissible(field: FieldDesc, rng: random.Random) -> AdmissibleChange:
    """Random change with lam = nu^2, mu = nu^3, so the y^2 and x^3 coefficients stay balanced"""
    nu = field.element(rng.randrange(1, field.order))
    return AdmissibleChange(
        matrix=random_gl2(field, rng),
        b1=_random_form(field, 1, rng),
        b2=_random_form(field, 2, rng),
        b3=_random_form(field, 3, rng),
        lam=nu * nu,
        mu=nu * nu * nu,
    )


# Moebius maps from triples


def mobius_from_triple(p1: PointP1, p2: PointP1, p3: PointP1) -> GL2Matrix:
    """M with M(1:0) = p1, M(0:1) = p2, M(1:1) = p3 (three distinct points)"""
    field = common_field(p1.field, p2.field, p3.field)
    (a1, b1), (a2, b2), (a3, b3) = (
        (q.change_field(field).a, q.change_field(field).b) for q in (p1, p2, p3)
    )
    det = a1 * b2 - a2 * b1
    if det.is_zero():
        raise NotInvertibleError("points of the triple must be distinct")
    c1 = (a3 * b2 - a2 * b3) / det
    c2 = (a1 * b3 - a3 * b1) / det
    return GL2Matrix(c1 * a1, c2 * a2, c1 * b1, c2 * b2)


def mobius_from_triples(src: Sequence[PointP1], dst: Sequence[PointP1]) -> GL2Matrix:
    """M sending src[i] to dst[i]"""
    return mobius_from_triple(*dst).compose(mobius_from_triple(*src).inverse())


# Normal form s^p t - s t^p


def la5_target(field: FieldDesc) -> BinaryForm:
    p = field.p
    return BinaryForm.monomial(field, p, 1) - BinaryForm.monomial(field, 1, p)


def in_span(g: BinaryForm) -> bool:
    """g is a combination of s^(p+1), s^p t, s t^p, t^(p+1)"""
    p = g.field.p
    outside = (c for j, c in enumerate(g.coeffs) if j not in (0, 1, p, p + 1))
    return g.degree == p + 1 and all(c.is_zero() for c in outside)


def la5_normalize(g: BinaryForm, p: Optional[int] = None) -> Tuple[GL2Matrix, FieldElem]:
    """(M, lam) with act_gl2(g, M) = lam * (s^p t - s t^p); roots are sent to (1:0), (0:1), (1:1)"""
    p = p or g.field.p
    if p != g.field.p:
        raise DegreeMismatchError(f"characteristic {p} does not match {g.field}")
    if g.degree != p + 1:
        raise DegreeMismatchError(f"expected degree {p + 1}, got {g.degree}")
    if g.is_zero():
        raise ZeroPolynomialError("cannot normalize the zero form")
    if not in_span(g):
        raise WrongShapeError(f"{g} is not in the span of s^{p + 1}, s^{p}*t, s*t^{p}, t^{p + 1}")
    divisor = roots(g)
    support = divisor.support()
    if len(support) < 3:
        raise InsufficientRootsError(f"{g} has only {len(support)} distinct roots", len(support))
    m = mobius_from_triple(*support[:3])
    field = m.field
    image = act_gl2(g, m)
    lam = image.coefficient(p, 1)
    target = la5_target(field).scale(lam)
    if image != target:
        raise WrongShapeError(f"normalization of {g} left residual {image - target}")
    return m, lam


# Equivalence of divisors


def divisor_pgl2_equivalent(d1: DivisorP1, d2: DivisorP1) -> Tuple[bool, Optional[GL2Matrix]]:
    """Whether some M maps d1 onto d2 with multiplicities; the witness M satisfies M . d1 = d2"""
    if d1.degree != d2.degree or d1.profile() != d2.profile():
        return False, None
    d1, d2 = _common(d1, d2)
    field = d1.field
    s1, s2 = d1.support(), d2.support()
    if not s1:
        return True, GL2Matrix.identity(field)
    if len(s1) <= 2:
        return _small_support(d1, d2)
    targets = s2[:3]
    wanted = [d2.multiplicity(t) for t in targets]
    for triple in permutations(s1, 3):
        if [d1.multiplicity(u) for u in triple] != wanted:
            continue
        m = mobius_from_triples(triple, targets)
        if all(d2.multiplicity(m.apply_point(pt)) == k for pt, k in d1.points):
            return True, m
    return False, None


def _common(d1: DivisorP1, d2: DivisorP1) -> Tuple[DivisorP1, DivisorP1]:
    field = common_field(d1.field, d2.field)
    return d1.change_field(field), d2.change_field(field)


def _small_support(d1: DivisorP1, d2: DivisorP1) -> Tuple[bool, Optional[GL2Matrix]]:
    field = d1.field
    s1, s2 = d1.support(), d2.support()
    need = 3 - len(s1)
    prime_points = [pt.change_field(field) for pt in points_p1(make_field(field.p))]
    extra1 = [pt for pt in prime_points if pt not in s1][:need]
    extra2 = [pt for pt in prime_points if pt not in s2][:need]
    for order in permutations(s2):
        if [d1.multiplicity(u) for u in s1] != [d2.multiplicity(v) for v in order]:
            continue
        m = mobius_from_triples(list(s1) + extra1, list(order) + extra2)
        return True, m
    return False, None


class DeltaLabel(str, Enum):
    TWO_P1_F5 = "TWO_P1_F5"
    TWELVE_O = "TWELVE_O"
    NINE_THREE = "NINE_THREE"
    THREE_P1_F3 = "THREE_P1_F3"
    BRANCH_TRIPLE = "BRANCH_TRIPLE"
    BRANCH_DOUBLE_SINGLE = "BRANCH_DOUBLE_SINGLE"
    BRANCH_DISTINCT = "BRANCH_DISTINCT"
    OTHER = "OTHER"


ANTICANONICAL = "anticanonical"
BRANCH = "branch"

_CONTEXT_DEGREE = {ANTICANONICAL: 12, BRANCH: 3}
_ANTICANONICAL_LABELS: Dict[int, Tuple[DeltaLabel, ...]] = {
    5: (DeltaLabel.TWO_P1_F5,),
    3: (DeltaLabel.TWELVE_O, DeltaLabel.NINE_THREE, DeltaLabel.THREE_P1_F3),
}
_BRANCH_LABELS = (
    DeltaLabel.BRANCH_TRIPLE,
    DeltaLabel.BRANCH_DOUBLE_SINGLE,
    DeltaLabel.BRANCH_DISTINCT,
)


@dataclass(frozen=True)
class DeltaClass:
    label: DeltaLabel
    witness: Optional[GL2Matrix] = None
    divisor: Optional[DivisorP1] = None


def reference_divisor(label: DeltaLabel, p: int) -> DivisorP1:
    field = make_field(p)
    origin = PointP1.affine(field.zero())  # [0:1]
    infinity = PointP1.infinity(field)  # [1:0]
    if label in (DeltaLabel.TWO_P1_F5, DeltaLabel.THREE_P1_F3):
        k = 2 if label is DeltaLabel.TWO_P1_F5 else 3
        if p != (5 if k == 2 else 3):
            raise DegreeMismatchError(
                f"{label.value} is defined in characteristic {5 if k == 2 else 3}"
            )
        base = roots(la5_target(field))
        return DivisorP1.from_points(field, ((pt, k * m) for pt, m in base.points))
    if label is DeltaLabel.TWELVE_O:
        return DivisorP1.from_points(field, [(origin, 12)])
    if label is DeltaLabel.NINE_THREE:
        return DivisorP1.from_points(field, [(origin, 9), (infinity, 3)])
    if label is DeltaLabel.BRANCH_TRIPLE:
        return DivisorP1.from_points(field, [(origin, 3)])
    if label is DeltaLabel.BRANCH_DOUBLE_SINGLE:
        return DivisorP1.from_points(field, [(origin, 2), (infinity, 1)])
    if label is DeltaLabel.BRANCH_DISTINCT:
        minus_one = PointP1.affine(-field.one())
        return DivisorP1.from_points(field, [(origin, 1), (infinity, 1), (minus_one, 1)])
    raise ValueError(f"no reference divisor for {label}")


def candidate_labels(p: int, context: str) -> Tuple[DeltaLabel, ...]:
    if context == BRANCH:
        return _BRANCH_LABELS
    return _ANTICANONICAL_LABELS.get(p, ())


def delta_class(divisor: DivisorP1, p: int, context: str = ANTICANONICAL) -> DeltaClass:
    if context not in _CONTEXT_DEGREE:
        raise ValueError(f"unknown context {context!r}")
    if divisor.degree != _CONTEXT_DEGREE[context]:
        raise DegreeMismatchError(
            f"{context} divisor must have degree {_CONTEXT_DEGREE[context]}, got {divisor.degree}"
        )
    for label in candidate_labels(p, context):
        ref = reference_divisor(label, p)
        if ref.profile() != divisor.profile():
            continue
        ok, witness = divisor_pgl2_equivalent(divisor, ref)
        if ok:
            return DeltaClass(label, witness, divisor)
    return DeltaClass(DeltaLabel.OTHER, None, divisor)


def form_profile(g: BinaryForm) -> Tuple[int, ...]:
    """Multiplicity profile of the root divisor, without splitting g"""
    profile: List[int] = []
    for h, m in squarefree_decomposition(g):
        profile.extend([m] * h.degree)
    return tuple(sorted(profile, reverse=True))


def delta_class_of_form(g: BinaryForm, context: str = ANTICANONICAL) -> DeltaClass:
    """delta_class(roots(g)); OTHER for g = 0 or when no reference divisor can match"""
    if g.is_zero():
        return DeltaClass(DeltaLabel.OTHER)
    p = g.field.p
    labels = candidate_labels(p, context)
    profile = form_profile(g)
    if not any(reference_divisor(label, p).profile() == profile for label in labels):
        return DeltaClass(DeltaLabel.OTHER)
    try:
        divisor = roots(g)
    except FieldTooLargeError as exc:
        logger.info("delta_class_skipped", form=str(g), degree=exc.degree)
        return DeltaClass(DeltaLabel.OTHER)
    return delta_class(divisor, p, context)


"""Root divisors of binary forms on P^1 over finite fields.

Forms are dehomogenized at t = 1; the multiplicity of (1:0) is the t-adic valuation
(the drop in s-degree). Univariate factorization lives in ``fields.upoly``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import lcm
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import structlog

from .errors import FieldTooLargeError, ZeroPolynomialError
from .fields import MAX_DEGREE, FieldDesc, FieldElem, common_field, embed, make_field
from .fields.upoly import UPoly, up_degree, up_factor, up_roots, up_sqf_list, up_strip
from .mpoly import BinaryForm

logger = structlog.get_logger()

DEFAULT_SEED = 0


@dataclass(frozen=True)
class PointP1:
    """Point (a : b) normalized to b = 1, or (1 : 0)"""

    a: FieldElem
    b: FieldElem

    @classmethod
    def affine(cls, alpha: FieldElem) -> "PointP1":
        return cls(alpha, alpha.desc.one())

    @classmethod
    def infinity(cls, field: FieldDesc) -> "PointP1":
        return cls(field.one(), field.zero())

    @classmethod
    def from_coords(cls, a: FieldElem, b: FieldElem) -> "PointP1":
        if b.is_zero():
            if a.is_zero():
                raise ValueError("(0 : 0) is not a point of P^1")
            return cls.infinity(a.desc)
        return cls.affine(a / b)

    @property
    def field(self) -> FieldDesc:
        return self.a.desc

    def is_infinity(self) -> bool:
        return self.b.is_zero()

    def change_field(self, target: FieldDesc) -> "PointP1":
        return PointP1(embed(self.a, target), embed(self.b, target))

    def sort_key(self) -> tuple:
        return (0,) if self.is_infinity() else (1, self.a.key())

    def __str__(self) -> str:
        return f"[{self.a}:{self.b}]"


@dataclass(frozen=True)
class DivisorP1:
    """Effective divisor on P^1 with points over ``field``, sorted canonically"""

    field: FieldDesc
    points: Tuple[Tuple[PointP1, int], ...]

    @classmethod
    def from_points(cls, field: FieldDesc, points: Iterable[Tuple[PointP1, int]]) -> "DivisorP1":
        merged: Dict[PointP1, int] = {}
        for pt, m in points:
            if m < 1:
                raise ValueError(f"multiplicity must be positive, got {m}")
            pt = pt.change_field(field)
            merged[pt] = merged.get(pt, 0) + m
        ordered = sorted(merged.items(), key=lambda kv: kv[0].sort_key())
        return cls(field, tuple(ordered))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.points)

    def support(self) -> List[PointP1]:
        return [pt for pt, _ in self.points]

    def multiplicity(self, pt: PointP1) -> int:
        pt = pt.change_field(self.field)
        for q, m in self.points:
            if q == pt:
                return m
        return 0

    def profile(self) -> Tuple[int, ...]:
        """Multiplicities in decreasing order"""
        return tuple(sorted((m for _, m in self.points), reverse=True))

    def change_field(self, target: FieldDesc) -> "DivisorP1":
        if target == self.field:
            return self
        return DivisorP1(target, tuple((pt.change_field(target), m) for pt, m in self.points))

    def __str__(self) -> str:
        if not self.points:
            return "0"
        return " + ".join(f"{m}*{pt}" for pt, m in self.points)


def points_p1(field: FieldDesc) -> Iterator[PointP1]:
    """All points of P^1(field), (1:0) first"""
    yield PointP1.infinity(field)
    for alpha in field.elements():
        yield PointP1.affine(alpha)


def dehomogenize(g: BinaryForm) -> Tuple[UPoly, int]:
    """(g(s, 1) as an ascending univariate list, multiplicity of (1:0))"""
    if g.is_zero():
        raise ZeroPolynomialError("binary form is zero")
    d = g.degree
    m_inf = next(i for i, c in enumerate(g.coeffs) if not c.is_zero())
    return up_strip([g.coeffs[d - k] for k in range(d + 1)]), m_inf


def homogenize(f: UPoly, degree: int, field: FieldDesc) -> BinaryForm:
    coeffs = [field.zero()] * (degree + 1)
    for k, c in enumerate(f):
        coeffs[degree - k] = c
    return BinaryForm(field, degree, tuple(coeffs))


def _t_power(field: FieldDesc, m: int) -> BinaryForm:
    return BinaryForm.monomial(field, 0, m)


def squarefree_with_unit(g: BinaryForm) -> Tuple[FieldElem, List[Tuple[BinaryForm, int]]]:
    """g = unit * prod(g_i ^ m_i), g_i squarefree and pairwise coprime, sorted by multiplicity"""
    f, m_inf = dehomogenize(g)
    field = g.field
    if up_degree(f) > 0:
        unit, parts = up_sqf_list(f)
    else:
        unit, parts = f[0], []
    groups: Dict[int, BinaryForm] = {m: homogenize(h, up_degree(h), field) for h, m in parts}
    if m_inf:
        t = _t_power(field, 1)
        groups[m_inf] = groups[m_inf] * t if m_inf in groups else t
    return unit, [(groups[m], m) for m in sorted(groups)]


def squarefree_decomposition(g: BinaryForm) -> List[Tuple[BinaryForm, int]]:
    return squarefree_with_unit(g)[1]


def splitting_degree(g: BinaryForm, rng: Optional[random.Random] = None) -> int:
    """Degree over F_p of the smallest field containing the coefficients and every root"""
    f, _ = dehomogenize(g)
    n = g.field.n
    if up_degree(f) < 1:
        return n
    _, factors = up_factor(f, rng or random.Random(DEFAULT_SEED))
    k = lcm(1, *(up_degree(h) for h, _ in factors))
    return n * k


def roots(g: BinaryForm, seed: int = DEFAULT_SEED) -> DivisorP1:
    """Complete root divisor over the splitting field (named by ``make_field``)"""
    rng = random.Random(seed)
    f, m_inf = dehomogenize(g)
    base = g.field
    factors: List[Tuple[UPoly, int]] = []
    if up_degree(f) > 0:
        _, factors = up_factor(f, rng)
    k = lcm(1, *(up_degree(h) for h, _ in factors))
    degree = base.n * k
    if degree > MAX_DEGREE:
        raise FieldTooLargeError(
            f"splitting field of {g} has degree {degree} over F_{base.p}, above {MAX_DEGREE}",
            degree,
        )
    split = make_field(base.p, degree)
    if degree != base.n:
        logger.debug("splitting_field_selected", form=str(g), field=str(split))
    points: List[Tuple[PointP1, int]] = []
    if m_inf:
        points.append((PointP1.infinity(split), m_inf))
    for h, m in factors:
        lifted = [embed(c, split) for c in h]
        for r in up_roots(lifted, rng):
            points.append((PointP1.affine(r), m))
    return DivisorP1.from_points(split, points)


def linear_form(pt: PointP1) -> BinaryForm:
    """s - alpha*t for an affine point, t for (1:0)"""
    if pt.is_infinity():
        return BinaryForm.of(pt.field, [0, 1])
    return BinaryForm.of(pt.field, [pt.b, -pt.a])


def reconstruct(unit: FieldElem, divisor: DivisorP1) -> BinaryForm:
    """unit * prod(linear_form(P)^m) over the divisor's field"""
    field = divisor.field
    out = BinaryForm.of(field, [embed(unit, field)])
    for pt, m in divisor.points:
        out = out * linear_form(pt) ** m
    return out


def leading_unit(g: BinaryForm) -> FieldElem:
    f, _ = dehomogenize(g)
    return f[-1]


def divisors_over_common_field(*divisors: DivisorP1) -> List[DivisorP1]:
    field = common_field(*(d.field for d in divisors))
    return [d.change_field(field) for d in divisors]


def roots_in(g: BinaryForm, field: FieldDesc) -> List[PointP1]:
    """Distinct roots of g lying in P^1(field); field must contain g's coefficients"""
    g = g.change_field(common_field(g.field, field))
    f, m_inf = dehomogenize(g)
    out = [PointP1.infinity(g.field)] if m_inf else []
    if up_degree(f) > 0:
        out.extend(PointP1.affine(r) for r in up_roots(f, random.Random(DEFAULT_SEED)))
    return out


def product_of(forms: Sequence[Tuple[BinaryForm, int]], field: FieldDesc) -> BinaryForm:
    out = BinaryForm.of(field, [1])
    for h, m in forms:
        out = out * h**m
    return out

"""Anti-canonical models of degree-1 del Pezzo surfaces.

An equation is the sextic

    y^2 + a1*x*y + a3*y - (x^3 + a2*x^2 + a4*x + a6)

in P(1, 1, 2, 3), the a_i binary forms of degree i in (s, t). The module covers shape
checking, completing squares and cubes, discriminant and j-invariant (closed forms for
p = 2, 3, 5 and the long Weierstrass b-quantities), fibers of the pencil, point counting
on fibers and the smoothness report.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, Iterable, List, Mapping, Sequence, Tuple

import structlog
from opentelemetry import trace

from .errors import (
    FieldTooLargeError,
    InputFormatError,
    NotNormalizedError,
    ShapeError,
    SingularFiberError,
    UnsupportedCharacteristicError,
)
from .fields import FieldDesc, FieldElem, common_field, make_field, parse_elem
from .fields.upoly import up_roots, up_sqf_list, up_strip
from .mpoly import DP1_ALPHABET, BinaryForm, MultiPoly
from .unifactor import (
    PointP1,
    points_p1,
    roots,
    roots_in,
    splitting_degree,
    squarefree_decomposition,
)

if TYPE_CHECKING:
    from .pgl2 import AdmissibleChange

logger = structlog.get_logger()
tracer = trace.get_tracer(__name__)

SLOTS = ("a1", "a2", "a3", "a4", "a6")
FORM_DEGREES = {"a1": 1, "a2": 2, "a3": 3, "a4": 4, "a6": 6}
DEFAULT_SEARCH_BOUND = 6

# exponent of (x, y) carried by each slot, and its sign in the sextic
_SLOT_XY = {
    "a1": ((1, 1), 1),
    "a2": ((2, 0), -1),
    "a3": ((0, 1), 1),
    "a4": ((1, 0), -1),
    "a6": ((0, 0), -1),
}
_Y2 = (0, 0, 0, 2)
_X3 = (0, 0, 3, 0)


@dataclass(frozen=True)
class DP1Equation:
    field: FieldDesc
    a1: BinaryForm
    a2: BinaryForm
    a3: BinaryForm
    a4: BinaryForm
    a6: BinaryForm

    def __post_init__(self):
        for slot in SLOTS:
            form = getattr(self, slot)
            if form.degree != FORM_DEGREES[slot]:
                raise ShapeError(f"{slot} must have degree {FORM_DEGREES[slot]}, got {form.degree}")
            if form.field != self.field:
                raise ShapeError(f"{slot} lives in {form.field}, equation in {self.field}")

    @classmethod
    def of(cls, field: FieldDesc, **forms: Any) -> "DP1Equation":
        """Build from coefficient lists (or forms); missing slots are zero"""
        unknown = set(forms) - set(SLOTS)
        if unknown:
            raise ShapeError(f"unknown coefficient slots {sorted(unknown)}")
        built = {}
        for slot in SLOTS:
            value = forms.get(slot)
            if value is None:
                built[slot] = BinaryForm.zero(field, FORM_DEGREES[slot])
            elif isinstance(value, BinaryForm):
                built[slot] = value
            else:
                built[slot] = BinaryForm.of(field, list(value))
        return cls(field, **built)

    def forms(self) -> Dict[str, BinaryForm]:
        return {slot: getattr(self, slot) for slot in SLOTS}

    def replace(self, **forms: BinaryForm) -> "DP1Equation":
        return replace(self, **forms)

    def change_field(self, target: FieldDesc) -> "DP1Equation":
        return DP1Equation(target, **{k: v.change_field(target) for k, v in self.forms().items()})

    def __str__(self) -> str:
        return str(to_poly(self))


def to_poly(eq: DP1Equation) -> MultiPoly:
    field = eq.field
    terms: Dict[tuple, FieldElem] = {_Y2: field.one(), _X3: -field.one()}
    for slot in SLOTS:
        form = getattr(eq, slot)
        (ex, ey), sign = _SLOT_XY[slot]
        d = form.degree
        for j, c in enumerate(form.coeffs):
            if not c.is_zero():
                terms[(d - j, j, ex, ey)] = c if sign > 0 else -c
    return MultiPoly(field, terms, DP1_ALPHABET)


def from_poly(f: MultiPoly) -> DP1Equation:
    """Read (a1, ..., a6) off a sextic c*(y^2 + ... - x^3 - ...) with c a unit"""
    if f.alphabet != DP1_ALPHABET:
        raise ShapeError(f"expected variables s, t, x, y; got {', '.join(f.alphabet.names)}")
    if not f.is_homogeneous(6) or f.is_zero():
        raise ShapeError(f"not weighted-homogeneous of degree 6: {f}")
    c = f.coefficient(_Y2)
    if c.is_zero():
        raise ShapeError("the coefficient of y^2 is zero")
    if f.coefficient(_X3) != -c:
        raise ShapeError("the coefficients of y^2 and x^3 must be c and -c")
    inv = c.inverse()
    field = f.field
    coeffs = {slot: [field.zero()] * (FORM_DEGREES[slot] + 1) for slot in SLOTS}
    by_xy = {xy: (slot, sign) for slot, (xy, sign) in _SLOT_XY.items()}
    for (i, j, ex, ey), a in f.terms().items():
        if (i, j, ex, ey) in (_Y2, _X3):
            continue
        slot, sign = by_xy[(ex, ey)]
        value = a * inv
        coeffs[slot][j] = value if sign > 0 else -value
    forms = {slot: BinaryForm(field, FORM_DEGREES[slot], tuple(v)) for slot, v in coeffs.items()}
    return DP1Equation(field, **forms)


def is_normalized(eq: DP1Equation) -> bool:
    p = eq.field.p
    if p == 2:
        return True
    if not (eq.a1.is_zero() and eq.a3.is_zero()):
        return False
    return p == 3 or eq.a2.is_zero()


def complete_square_cube(eq: DP1Equation) -> DP1Equation:
    """y -> y - (a1*x + a3)/2 when p != 2, then x -> x - a2/3 when p != 3"""
    p = eq.field.p
    if p == 2:
        return eq
    field = eq.field
    x = MultiPoly.var(field, "x")
    y = MultiPoly.var(field, "y")
    if not (eq.a1.is_zero() and eq.a3.is_zero()):
        half = field.elem(2).inverse()
        shift = (eq.a1.to_poly() * x + eq.a3.to_poly()).scale(half)
        eq = from_poly(to_poly(eq).substitute({"y": y - shift}))
    if p != 3 and not eq.a2.is_zero():
        third = field.elem(3).inverse()
        eq = from_poly(to_poly(eq).substitute({"x": x - eq.a2.to_poly().scale(third)}))
    return eq


# b-quantities of the long Weierstrass form, applied to binary forms


@dataclass(frozen=True)
class BQuantities:
    b2: BinaryForm
    b4: BinaryForm
    b6: BinaryForm
    b8: BinaryForm

    @property
    def c4(self) -> BinaryForm:
        return self.b2 * self.b2 - self.b4.scale(24)

    @property
    def discriminant(self) -> BinaryForm:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return (
            -(b2 * b2 * b8)
            - (b4 * b4 * b4).scale(8)
            - (b6 * b6).scale(27)
            + (b2 * b4 * b6).scale(9)
        )


def b_quantities(eq: DP1Equation) -> BQuantities:
    a1, a2, a3, a4, a6 = eq.a1, eq.a2, eq.a3, eq.a4, eq.a6
    return BQuantities(
        b2=a1 * a1 + a2.scale(4),
        b4=a4.scale(2) + a1 * a3,
        b6=a3 * a3 + a6.scale(4),
        b8=a1 * a1 * a6 + (a2 * a6).scale(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4,
    )


def _require_normalized(eq: DP1Equation) -> None:
    if eq.field.p not in (2, 3, 5):
        raise UnsupportedCharacteristicError(
            f"closed-form discriminant only for p in (2, 3, 5), got {eq.field.p}", eq.field.p
        )
    if not is_normalized(eq):
        raise NotNormalizedError(
            "complete squares (and cubes when p = 5) before using the closed forms"
        )


def discriminant(eq: DP1Equation, path: str = "closed") -> BinaryForm:
    """Degree-12 discriminant.

    ``closed`` uses the closed form for p, ``formulaire`` the b-quantities.
    """
    if path == "formulaire":
        return b_quantities(eq).discriminant
    if path != "closed":
        raise ValueError(f"unknown discriminant path {path!r}")
    _require_normalized(eq)
    p = eq.field.p
    a1, a2, a3, a4, a6 = eq.a1, eq.a2, eq.a3, eq.a4, eq.a6
    if p == 5:
        return a4 * a4 * a4 - (a6 * a6).scale(2)
    if p == 3:
        return -(a2 * a2 * (a2 * a6 - a4 * a4)) - a4 * a4 * a4
    a1_2 = a1 * a1
    inner = a1_2 * a6 + a1 * a3 * a4 + a2 * a3 * a3 + a4 * a4
    return a1_2 * a1_2 * inner + a1_2 * a1 * a3 * a3 * a3 + (a3 * a3) ** 2


@dataclass(frozen=True)
class JInvariant:
    numerator: BinaryForm
    discriminant: BinaryForm

    @property
    def j_is_zero(self) -> bool:
        return self.numerator.is_zero()


def j_invariant(eq: DP1Equation) -> JInvariant:
    p = eq.field.p
    if p not in (2, 3, 5):
        b = b_quantities(eq)
        return JInvariant(b.c4**3, b.discriminant)
    delta = discriminant(eq, "closed")
    if p == 5:
        numerator = (eq.a4**3).scale(3)
    elif p == 3:
        numerator = eq.a2**6
    else:
        numerator = eq.a1**12
    return JInvariant(numerator, delta)


def j_numerator_formulaire(eq: DP1Equation) -> BinaryForm:
    return b_quantities(eq).c4 ** 3


def branch_curve(eq: DP1Equation) -> MultiPoly:
    """a1*x - a3; when a1 = 0 this is the branch cubic a3 of the double cover"""
    if eq.field.p != 2:
        raise UnsupportedCharacteristicError(
            "the branch curve is a characteristic 2 notion", eq.field.p
        )
    x = MultiPoly.var(eq.field, "x")
    return eq.a1.to_poly() * x - eq.a3.to_poly()


# fibers of the pencil


@dataclass(frozen=True)
class WeierstrassFiber:
    field: FieldDesc
    a1: FieldElem
    a2: FieldElem
    a3: FieldElem
    a4: FieldElem
    a6: FieldElem

    @classmethod
    def of(cls, field: FieldDesc, a1=0, a2=0, a3=0, a4=0, a6=0) -> "WeierstrassFiber":
        return cls(field, *(field.elem(v) for v in (a1, a2, a3, a4, a6)))

    def _b(self) -> Tuple[FieldElem, FieldElem, FieldElem, FieldElem]:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + a2 * 4
        b4 = a4 * 2 + a1 * a3
        b6 = a3 * a3 + a6 * 4
        b8 = a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def discriminant(self) -> FieldElem:
        b2, b4, b6, b8 = self._b()
        return -(b2 * b2 * b8) - b4 * b4 * b4 * 8 - b6 * b6 * 27 + b2 * b4 * b6 * 9

    def c4(self) -> FieldElem:
        b2, b4, _, _ = self._b()
        return b2 * b2 - b4 * 24

    def is_smooth(self) -> bool:
        return not self.discriminant().is_zero()

    def j_is_zero(self) -> bool:
        return self.c4().is_zero()

    def rhs(self, x: FieldElem) -> FieldElem:
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def contains(self, x: FieldElem, y: FieldElem) -> bool:
        return (y * y + self.a1 * x * y + self.a3 * y - self.rhs(x)).is_zero()

    def count_points(self) -> int:
        """Projective points over the fiber's field, the point at infinity included"""
        field = self.field
        total = 1
        if field.p == 2:
            for x in field.elements():
                b = self.a1 * x + self.a3
                if b.is_zero():
                    total += 1
                elif (self.rhs(x) / (b * b)).trace() == 0:
                    total += 2
            return total
        four = field.elem(4)
        for x in field.elements():
            b = self.a1 * x + self.a3
            disc = b * b + self.rhs(x) * four
            if disc.is_zero():
                total += 1
            elif disc.is_square():
                total += 2
        return total

    def trace(self) -> int:
        return self.field.order + 1 - self.count_points()

    def singular_points(self) -> List[Tuple[FieldElem, FieldElem]]:
        """Affine singular points over the fiber's field"""
        field = self.field
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        found: List[Tuple[FieldElem, FieldElem]] = []
        if field.p == 2:
            if not a1.is_zero():
                x0 = a3 / a1
                y0 = (x0 * x0 + a4) / a1
                candidates = [(x0, y0)]
            elif a3.is_zero():
                x0 = a4.frobenius_inverse()
                candidates = [(x0, self.rhs(x0).frobenius_inverse())]
            else:
                candidates = []
        else:
            # y = -(a1*x + a3)/2 at a multiple root of h = (a1*x + a3)^2 + 4*rhs
            b2, b4, b6, _ = self._b()
            h = up_strip([b6, b4 * 2, b2, field.elem(4)])
            _, parts = up_sqf_list(h)
            half = field.elem(2).inverse()
            candidates = []
            for g, m in parts:
                if m >= 2:
                    for x0 in up_roots(g, random.Random(0)):
                        candidates.append((x0, -(a1 * x0 + a3) * half))
        for x0, y0 in candidates:
            fx = a1 * y0 - x0 * x0 * 3 - a2 * x0 * 2 - a4
            fy = y0 * 2 + a1 * x0 + a3
            if self.contains(x0, y0) and fx.is_zero() and fy.is_zero():
                found.append((x0, y0))
        return found

    def __str__(self) -> str:
        def side(leading: str, terms: Sequence[Tuple[FieldElem, str]]) -> str:
            out = [leading]
            for c, mono in terms:
                if c.is_zero():
                    continue
                text = str(c)
                text = f"({text})" if " + " in text else text
                if not mono:
                    out.append(text)
                else:
                    out.append(mono if c.is_one() else f"{text}*{mono}")
            return " + ".join(out)

        lhs = side("y^2", [(self.a1, "x*y"), (self.a3, "y")])
        rhs = side("x^3", [(self.a2, "x^2"), (self.a4, "x"), (self.a6, "")])
        return f"{lhs} = {rhs}"


def fiber_at(eq: DP1Equation, point: PointP1) -> WeierstrassFiber:
    target = common_field(eq.field, point.field)
    pt = point.change_field(target)
    values = [getattr(eq, slot).evaluate(pt.a, pt.b) for slot in SLOTS]
    return WeierstrassFiber(target, *values)


def is_supersingular(fiber: WeierstrassFiber) -> bool:
    if not fiber.is_smooth():
        raise SingularFiberError(f"fiber {fiber} has zero discriminant")
    return fiber.trace() % fiber.field.p == 0


# smoothness


class SmoothnessVerdict(str, Enum):
    SMOOTH = "smooth"
    SINGULAR = "singular"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class SmoothnessReport:
    verdict: SmoothnessVerdict
    method: str  # "exact" or "point-search"
    witnesses: Tuple[Tuple[FieldElem, ...], ...] = ()
    search_bound: int = DEFAULT_SEARCH_BOUND
    exhaustive: bool = False
    searched_degrees: Tuple[int, ...] = ()

    def witness_text(self) -> List[str]:
        return [f"({' : '.join(str(c) for c in w)})" for w in self.witnesses]


def _is_singular_at(partials: Sequence[MultiPoly], point: Sequence[FieldElem]) -> bool:
    return all(g.evaluate(point).is_zero() for g in partials)


def _search_degrees(n: int, bound: int) -> List[int]:
    degrees = list(range(n, max(bound, n) + 1, n))
    return [m for m in degrees if m <= 12]


def smoothness(eq: DP1Equation, search_bound: int = DEFAULT_SEARCH_BOUND) -> SmoothnessReport:
    """Exact verdict for p = 5 with a1 = a2 = a3 = a4 = 0.

    Otherwise a search for singular points over F_{p^m}, m <= bound.
    """
    with tracer.start_as_current_span("smoothness") as span:
        span.set_attribute("p", eq.field.p)
        span.set_attribute("q", eq.field.order)
        if eq.field.p == 5 and is_normalized(eq) and eq.a4.is_zero():
            report = _smoothness_exact_char5(eq, search_bound)
        else:
            report = _smoothness_search(eq, search_bound)
        span.set_attribute("verdict", report.verdict.value)
        logger.debug(
            "smoothness_decided",
            verdict=report.verdict.value,
            method=report.method,
            witnesses=len(report.witnesses),
        )
        return report


def _smoothness_exact_char5(eq: DP1Equation, bound: int) -> SmoothnessReport:
    field = eq.field
    zero = field.zero()
    if eq.a6.is_zero():
        return SmoothnessReport(
            SmoothnessVerdict.SINGULAR, "exact", ((field.one(), zero, zero, zero),), bound
        )
    if all(m == 1 for _, m in squarefree_decomposition(eq.a6)):
        return SmoothnessReport(SmoothnessVerdict.SMOOTH, "exact", (), bound, exhaustive=True)
    witnesses: List[Tuple[FieldElem, ...]] = []
    try:
        divisor = roots(eq.a6)
        z = divisor.field.zero()
        witnesses = [(pt.a, pt.b, z, z) for pt, m in divisor.points if m >= 2]
    except FieldTooLargeError:
        logger.info("singular_witness_skipped", reason="splitting field too large")
    return SmoothnessReport(SmoothnessVerdict.SINGULAR, "exact", tuple(witnesses), bound)


def _base_point_singular(partials: Sequence[MultiPoly], field: FieldDesc) -> bool:
    one, zero = field.one(), field.zero()
    return _is_singular_at(partials, (zero, zero, one, one))


def _smoothness_search(eq: DP1Equation, bound: int) -> SmoothnessReport:
    field = eq.field
    f = to_poly(eq)
    partials = [f] + [f.partial(v) for v in DP1_ALPHABET.names]
    degrees = _search_degrees(field.n, bound)
    if _base_point_singular(partials, field):
        one, zero = field.one(), field.zero()
        return SmoothnessReport(
            SmoothnessVerdict.SINGULAR, "point-search", ((zero, zero, one, one),), bound,
            searched_degrees=(field.n,),
        )
    delta = discriminant(eq, "formulaire")
    searched: List[int] = []
    for m in degrees:
        target = make_field(field.p, m)
        searched.append(m)
        if delta.is_zero():
            candidates: Iterable[PointP1] = points_p1(target)
        else:
            candidates = roots_in(delta, target)
        witnesses = []
        for pt in candidates:
            fiber = fiber_at(eq, pt)
            for x0, y0 in fiber.singular_points():
                point = (pt.a, pt.b, x0, y0)
                if _is_singular_at(partials, point):
                    witnesses.append(point)
        if witnesses:
            return SmoothnessReport(
                SmoothnessVerdict.SINGULAR, "point-search", tuple(witnesses), bound,
                searched_degrees=tuple(searched),
            )
    exhaustive = False
    if not delta.is_zero():
        try:
            split = splitting_degree(delta)
            exhaustive = any(m % split == 0 for m in searched)
        except FieldTooLargeError:
            exhaustive = False
    return SmoothnessReport(
        SmoothnessVerdict.UNDETERMINED, "point-search", (), bound,
        exhaustive=exhaustive, searched_degrees=tuple(searched),
    )


# coordinate changes


def apply_admissible(eq: DP1Equation, change: "AdmissibleChange") -> DP1Equation:
    """s,t -> M(s,t); x -> lam*x + b2; y -> mu*y + b1*x + b3 (needs mu^2 = lam^3)"""
    field = eq.field
    m = change.matrix
    s = MultiPoly.var(field, "s")
    t = MultiPoly.var(field, "t")
    x = MultiPoly.var(field, "x")
    y = MultiPoly.var(field, "y")
    image = to_poly(eq).substitute(
        {
            "s": s.scale(m.a) + t.scale(m.b),
            "t": s.scale(m.c) + t.scale(m.d),
            "x": x.scale(change.lam) + change.b2.to_poly(),
            "y": y.scale(change.mu) + change.b1.to_poly() * x + change.b3.to_poly(),
        }
    )
    return from_poly(image)


# serialization


def field_record(field: FieldDesc) -> Dict[str, Any]:
    return {"p": field.p, "n": field.n, "modulus": list(field.modulus) if field.modulus else None}


def field_from_record(record: Mapping[str, Any]) -> FieldDesc:
    field = make_field(int(record["p"]), int(record.get("n", 1)))
    modulus = record.get("modulus")
    if modulus is not None and tuple(modulus) != field.modulus:
        raise InputFormatError(f"modulus {modulus} differs from the canonical {field.modulus}")
    return field


def to_record(eq: DP1Equation) -> Dict[str, Any]:
    record: Dict[str, Any] = {"field": field_record(eq.field)}
    for slot in SLOTS:
        record[slot] = [str(c) for c in getattr(eq, slot).coeffs]
    return record


def from_record(record: Mapping[str, Any]) -> DP1Equation:
    field = field_from_record(record["field"])
    forms = {}
    for slot in SLOTS:
        values = record.get(slot)
        if values is None:
            continue
        if len(values) != FORM_DEGREES[slot] + 1:
            raise InputFormatError(f"{slot} needs {FORM_DEGREES[slot] + 1} coefficients")
        forms[slot] = [_parse_coefficient(str(v), field, slot) for v in values]
    return DP1Equation.of(field, **forms)


def _parse_coefficient(token: str, field: FieldDesc, slot: str) -> FieldElem:
    token = token.strip()
    if token.isdigit():
        value = int(token)
        if value >= field.p:
            raise InputFormatError(f"{slot}: coefficient {value} is not in 0..{field.p - 1}")
        return field.elem(value)
    return parse_elem(token, field)


def read_coefficient_file(text: str, field: FieldDesc) -> DP1Equation:
    """Parse lines ``a1: c0 c1`` ... ``a6: c0 .. c6``; comma-separate extension coefficients"""
    forms: Dict[str, List[FieldElem]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        slot, sep, rest = line.partition(":")
        slot = slot.strip()
        if not sep or slot not in FORM_DEGREES:
            raise InputFormatError(f"line {lineno}: expected 'aN: c0 c1 ...', got {raw!r}")
        if slot in forms:
            raise InputFormatError(f"line {lineno}: {slot} given twice")
        tokens = [t for t in (rest.split(",") if "," in rest else rest.split()) if t.strip()]
        if len(tokens) != FORM_DEGREES[slot] + 1:
            raise InputFormatError(
                f"line {lineno}: {slot} needs {FORM_DEGREES[slot] + 1} coefficients,"
                f" got {len(tokens)}"
            )
        forms[slot] = [_parse_coefficient(t, field, slot) for t in tokens]
    return DP1Equation.of(field, **forms)


def write_coefficient_file(eq: DP1Equation) -> str:
    sep = " " if eq.field.n == 1 else ", "
    return "".join(
        f"{slot}: {sep.join(str(c) for c in getattr(eq, slot).coeffs)}\n" for slot in SLOTS
    )


def random_equation(
    field: FieldDesc, rng: random.Random, slots: Sequence[str] = SLOTS
) -> DP1Equation:
    """Uniform coefficients on the given slots, zero elsewhere"""
    q = field.order
    return DP1Equation.of(
        field,
        **{
            slot: [field.element(rng.randrange(q)) for _ in range(FORM_DEGREES[slot] + 1)]
            for slot in slots
        },
    )


# j = 0 families: y^2 = x^3 + a6 in characteristic 5, y^2 = x^3 + a4*x + a6 in characteristic 3
J_ZERO_SLOTS = {5: ("a6",), 3: ("a4", "a6")}


def j_zero_family(field: FieldDesc, rng: random.Random) -> DP1Equation:
    """Random member of the family whose smooth members all have j = 0"""
    try:
        slots = J_ZERO_SLOTS[field.p]
    except KeyError:
        raise UnsupportedCharacteristicError(
            f"no j = 0 family in characteristic {field.p}", field.p
        ) from None
    return random_equation(field, rng, slots)

"""Binary forms in (s, t) of a fixed degree, stored densely.

``coeffs[i]`` is the coefficient of ``s^(d-i) * t^i``. The zero form keeps its degree so
that equation slots (a1 .. a6) always know their size.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple, Union

from ..errors import DegreeMismatchError, FieldMismatchError
from ..fields import FieldDesc, FieldElem, common_field, embed
from .poly import DP1_ALPHABET, Alphabet, MultiPoly

Scalar = Union[FieldElem, int]


@dataclass(frozen=True)
class BinaryForm:
    field: FieldDesc
    degree: int
    coeffs: Tuple[FieldElem, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise DegreeMismatchError(f"negative degree {self.degree}")
        if len(self.coeffs) != self.degree + 1:
            raise DegreeMismatchError(
                f"degree-{self.degree} form needs {self.degree + 1} coefficients,"
                f" got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            if c.desc != self.field:
                raise FieldMismatchError(f"coefficient in {c.desc}, form over {self.field}")

    # constructors

    @classmethod
    def of(cls, field: FieldDesc, coeffs: Sequence[Scalar]) -> "BinaryForm":
        return cls(field, len(coeffs) - 1, tuple(field.elem(c) for c in coeffs))

    @classmethod
    def zero(cls, field: FieldDesc, degree: int) -> "BinaryForm":
        return cls(field, degree, (field.zero(),) * (degree + 1))

    @classmethod
    def monomial(cls, field: FieldDesc, i: int, j: int, c: Scalar = 1) -> "BinaryForm":
        """c * s^i * t^j"""
        coeffs = [field.zero()] * (i + j + 1)
        coeffs[j] = field.elem(c)
        return cls(field, i + j, tuple(coeffs))

    @classmethod
    def from_poly(cls, f: MultiPoly, degree: int) -> "BinaryForm":
        """Read a form out of a polynomial supported on the first two variables"""
        coeffs = [f.field.zero()] * (degree + 1)
        for mono, c in f.terms().items():
            if any(mono[2:]) or mono[0] + mono[1] != degree:
                raise DegreeMismatchError(
                    f"{f} is not a binary form of degree {degree} in {f.alphabet.names[:2]}"
                )
            coeffs[mono[1]] = c
        return cls(f.field, degree, tuple(coeffs))

    def to_poly(self, alphabet: Alphabet = DP1_ALPHABET) -> MultiPoly:
        d = self.degree
        rest = (0,) * (len(alphabet) - 2)
        terms: Dict[tuple, FieldElem] = {
            (d - i, i) + rest: c for i, c in enumerate(self.coeffs) if not c.is_zero()
        }
        return MultiPoly(self.field, terms, alphabet)

    # inspection

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __iter__(self) -> Iterator[FieldElem]:
        return iter(self.coeffs)

    def coefficient(self, i: int, j: int) -> FieldElem:
        """Coefficient of s^i t^j"""
        if i + j != self.degree or i < 0 or j < 0:
            raise DegreeMismatchError(f"s^{i} t^{j} is not of degree {self.degree}")
        return self.coeffs[j]

    def int_coeffs(self) -> List[int]:
        return [int(c) for c in self.coeffs]

    # arithmetic

    def _check(self, other: "BinaryForm") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine forms over {self.field} and {other.field}")

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        self._check(other)
        if other.degree != self.degree:
            raise DegreeMismatchError(
                f"cannot add forms of degree {self.degree} and {other.degree}"
            )
        coeffs = tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        return BinaryForm(self.field, self.degree, coeffs)

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(self.field, self.degree, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def scale(self, c: Scalar) -> "BinaryForm":
        c = self.field.elem(c)
        return BinaryForm(self.field, self.degree, tuple(a * c for a in self.coeffs))

    def __mul__(self, other: Union["BinaryForm", Scalar]) -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return self.scale(other)
        self._check(other)
        desc = self.field
        out = [desc.zero()] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return BinaryForm(desc, self.degree + other.degree, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BinaryForm":
        if e < 0:
            raise ValueError("negative exponent")
        result = BinaryForm.of(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def evaluate(self, s: Scalar, t: Scalar) -> FieldElem:
        """Value at (s, t); coordinates may lie in an extension of the coefficient field"""
        target = common_field(self.field, *(v.desc for v in (s, t) if isinstance(v, FieldElem)))
        s = embed(s, target) if isinstance(s, FieldElem) else target.elem(s)
        t = embed(t, target) if isinstance(t, FieldElem) else target.elem(t)
        d = self.degree
        total = target.zero()
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                total = total + embed(c, target) * s ** (d - i) * t**i
        return total

    def compose_linear(self, a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> "BinaryForm":
        """g(a*s + b*t, c*s + d*t)"""
        desc = self.field
        ls = BinaryForm.of(desc, [a, b])
        lt = BinaryForm.of(desc, [c, d])
        deg = self.degree
        s_pows = [BinaryForm.of(desc, [1])]
        t_pows = [BinaryForm.of(desc, [1])]
        for _ in range(deg):
            s_pows.append(s_pows[-1] * ls)
            t_pows.append(t_pows[-1] * lt)
        out = BinaryForm.zero(desc, deg)
        for i, coeff in enumerate(self.coeffs):
            if not coeff.is_zero():
                out = out + (s_pows[deg - i] * t_pows[i]).scale(coeff)
        return out

    def change_field(self, target: FieldDesc) -> "BinaryForm":
        if target == self.field:
            return self
        return BinaryForm(target, self.degree, tuple(embed(c, target) for c in self.coeffs))

    def __str__(self) -> str:
        return str(self.to_poly())

"""Sparse multivariate polynomials over a finite field with a weighted grading.

Terms are kept in a dict keyed by exponent tuples; coefficients are never zero.
Products accumulate unreduced integer vectors per monomial and reduce once at the
end, which keeps the Fedder power (and the census) allocation-light.
"""
from __future__ import annotations

from dataclasses import dataclass
from operator import add
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import FieldMismatchError, GradingError
from ..fields import FieldDesc, FieldElem, common_field, embed

Monomial = Tuple[int, ...]
Scalar = Union[FieldElem, int]


@dataclass(frozen=True)
class Alphabet:
    """Variable names, their weights and the tie-break significance order for printing"""

    names: Tuple[str, ...]
    weights: Tuple[int, ...]
    order: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: Union[str, int]) -> int:
        if isinstance(name, int):
            if not 0 <= name < len(self.names):
                raise KeyError(name)
            return name
        return self.names.index(name)

    def degree(self, mono: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, mono))

    def sort_key(self, mono: Monomial) -> tuple:
        return (self.degree(mono), tuple(mono[i] for i in self.order))


DP1_ALPHABET = Alphabet(names=("s", "t", "x", "y"), weights=(1, 1, 2, 3), order=(3, 2, 0, 1))

MAX_FLAT_VARIABLES = 8


def flat_alphabet(names: Sequence[str]) -> Alphabet:
    """Alphabet of up to eight weight-1 variables, printed in the given order"""
    names = tuple(names)
    if not 1 <= len(names) <= MAX_FLAT_VARIABLES:
        raise ValueError(f"flat alphabet needs 1..{MAX_FLAT_VARIABLES} names, got {len(names)}")
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in {names}")
    for name in names:
        if not name.isidentifier() or name == "u":
            raise ValueError(f"invalid variable name {name!r}")
    return Alphabet(names=names, weights=(1,) * len(names), order=tuple(range(len(names))))


class MultiPoly:
    """Immutable sparse polynomial; equality and hashing use the canonical term set"""

    __slots__ = ("field", "alphabet", "_terms", "_hash")

    def __init__(
        self,
        field: FieldDesc,
        terms: Optional[Mapping[Monomial, FieldElem]] = None,
        alphabet: Alphabet = DP1_ALPHABET,
    ):
        self.field = field
        self.alphabet = alphabet
        clean: Dict[Monomial, FieldElem] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != len(alphabet) or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for {alphabet.names}")
            if c.desc != field:
                raise FieldMismatchError(f"coefficient in {c.desc}, polynomial over {field}")
            if not c.is_zero():
                clean[mono] = c
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _from_clean(cls, field: FieldDesc, alphabet: Alphabet, terms: Dict) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.field = field
        obj.alphabet = alphabet
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, field: FieldDesc, alphabet: Alphabet = DP1_ALPHABET) -> "MultiPoly":
        return cls._from_clean(field, alphabet, {})

    @classmethod
    def constant(
        cls, field: FieldDesc, c: Scalar, alphabet: Alphabet = DP1_ALPHABET
    ) -> "MultiPoly":
        return cls.monomial(field, (0,) * len(alphabet), c, alphabet)

    @classmethod
    def monomial(
        cls, field: FieldDesc, mono: Sequence[int], c: Scalar = 1, alphabet: Alphabet = DP1_ALPHABET
    ) -> "MultiPoly":
        return cls(field, {tuple(mono): field.elem(c)}, alphabet)

    @classmethod
    def var(
        cls, field: FieldDesc, name: Union[str, int], alphabet: Alphabet = DP1_ALPHABET
    ) -> "MultiPoly":
        mono = [0] * len(alphabet)
        mono[alphabet.index(name)] = 1
        return cls.monomial(field, mono, 1, alphabet)

    # inspection

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: Sequence[int]) -> FieldElem:
        return self._terms.get(tuple(mono), self.field.zero())

    def items(self) -> List[Tuple[Monomial, FieldElem]]:
        """Terms in canonical order (decreasing degree, then lexicographic)"""
        key = self.alphabet.sort_key
        return sorted(self._terms.items(), key=lambda kv: key(kv[0]), reverse=True)

    def __iter__(self) -> Iterator[Tuple[Monomial, FieldElem]]:
        return iter(self.items())

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.items()]

    def terms(self) -> Dict[Monomial, FieldElem]:
        return dict(self._terms)

    def weighted_degree(self, mono: Sequence[int]) -> int:
        return self.alphabet.degree(mono)

    def degrees(self) -> set:
        return {self.alphabet.degree(m) for m in self._terms}

    def is_homogeneous(self, d: Optional[int] = None) -> bool:
        degrees = self.degrees()
        if not degrees:
            return True
        if len(degrees) != 1:
            return False
        return d is None or degrees == {d}

    def weighted_components(self) -> Dict[int, "MultiPoly"]:
        parts: Dict[int, Dict[Monomial, FieldElem]] = {}
        for mono, c in self._terms.items():
            parts.setdefault(self.alphabet.degree(mono), {})[mono] = c
        return {
            d: MultiPoly._from_clean(self.field, self.alphabet, t) for d, t in sorted(parts.items())
        }

    # arithmetic

    def _check(self, other: "MultiPoly") -> None:
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatchError(
                f"cannot combine polynomials over {self.field} and {other.field}"
            )
        if other.alphabet != self.alphabet:
            raise FieldMismatchError(
                f"cannot combine alphabets {self.alphabet.names} and {other.alphabet.names}"
            )

    def _lift(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.field, other, self.alphabet)

    def __add__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        other = self._lift(other)
        desc = self.field
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            if mono in terms:
                s = desc.add_raw(terms[mono].coeffs, c.coeffs)
                if any(s):
                    terms[mono] = FieldElem(desc, s)
                else:
                    del terms[mono]
            else:
                terms[mono] = c
        return MultiPoly._from_clean(desc, self.alphabet, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._from_clean(
            self.field, self.alphabet, {m: -c for m, c in self._terms.items()}
        )

    def __sub__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other: Scalar) -> "MultiPoly":
        return self._lift(other) + (-self)

    def scale(self, c: Scalar) -> "MultiPoly":
        c = self.field.elem(c)
        if c.is_zero():
            return MultiPoly.zero(self.field, self.alphabet)
        return MultiPoly._from_clean(
            self.field, self.alphabet, {m: a * c for m, a in self._terms.items()}
        )

    def __mul__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return self.mul(other)
        return self.scale(other)

    __rmul__ = __mul__

    def mul(self, other: "MultiPoly", box: Optional[int] = None) -> "MultiPoly":
        """Product; with ``box`` only monomials with every exponent < box are kept"""
        self._check(other)
        a_terms, b_terms = self._terms, other._terms
        if box is not None:
            a_terms = _in_box(a_terms, box)
            b_terms = _in_box(b_terms, box)
        desc = self.field
        if desc.n == 1:
            acc_int: Dict[Monomial, int] = {}
            for e1, c1 in a_terms.items():
                x = c1.coeffs[0]
                for e2, c2 in b_terms.items():
                    e = tuple(map(add, e1, e2))
                    if box is not None and max(e) >= box:
                        continue
                    acc_int[e] = acc_int.get(e, 0) + x * c2.coeffs[0]
            p = desc.p
            terms = {}
            for e, v in acc_int.items():
                v %= p
                if v:
                    terms[e] = FieldElem(desc, (v,))
            return MultiPoly._from_clean(desc, self.alphabet, terms)

        acc: Dict[Monomial, List[int]] = {}
        for e1, c1 in a_terms.items():
            for e2, c2 in b_terms.items():
                e = tuple(map(add, e1, e2))
                if box is not None and max(e) >= box:
                    continue
                prod = desc.convolve(c1.coeffs, c2.coeffs)
                slot = acc.get(e)
                if slot is None:
                    acc[e] = prod
                else:
                    for k, v in enumerate(prod):
                        slot[k] += v
        terms = {}
        for e, raw in acc.items():
            r = desc.reduce(raw)
            if any(r):
                terms[e] = FieldElem(desc, r)
        return MultiPoly._from_clean(desc, self.alphabet, terms)

    def pow(self, e: int, box: Optional[int] = None) -> "MultiPoly":
        """Repeated squaring; ``box`` as in ``mul``"""
        if e < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.constant(self.field, 1, self.alphabet)
        if box is not None:
            result = result.truncate_box(box)
        base = self.truncate_box(box) if box is not None else self
        while e:
            if e & 1:
                result = result.mul(base, box)
            e >>= 1
            if e:
                base = base.mul(base, box)
        return result

    def __pow__(self, e: int) -> "MultiPoly":
        return self.pow(e)

    def truncate_box(self, bound: int) -> "MultiPoly":
        return MultiPoly._from_clean(self.field, self.alphabet, _in_box(self._terms, bound))

    def partial(self, v: Union[str, int]) -> "MultiPoly":
        i = self.alphabet.index(v)
        desc = self.field
        terms = {}
        for mono, c in self._terms.items():
            k = mono[i]
            if k % desc.p == 0:
                continue
            new = list(mono)
            new[i] = k - 1
            terms[tuple(new)] = c * k
        return MultiPoly._from_clean(desc, self.alphabet, terms)

    def substitute(
        self, mapping: Mapping[Union[str, int], "MultiPoly"], waive_grading: bool = False
    ) -> "MultiPoly":
        """Simultaneous substitution of variables by polynomials"""
        images: Dict[int, MultiPoly] = {}
        for name, image in mapping.items():
            i = self.alphabet.index(name)
            self._check(image)
            weight = self.alphabet.weights[i]
            if not waive_grading and not image.is_homogeneous(weight):
                raise GradingError(
                    f"image of {self.alphabet.names[i]} must be homogeneous of weight {weight}"
                )
            images[i] = image
        powers: Dict[Tuple[int, int], MultiPoly] = {}

        def power(i: int, k: int) -> MultiPoly:
            if (i, k) not in powers:
                powers[(i, k)] = images[i].pow(k)
            return powers[(i, k)]

        result = MultiPoly.zero(self.field, self.alphabet)
        for mono, c in self._terms.items():
            kept = tuple(0 if i in images else k for i, k in enumerate(mono))
            term = MultiPoly._from_clean(self.field, self.alphabet, {kept: c})
            for i, k in enumerate(mono):
                if k and i in images:
                    term = term.mul(power(i, k))
            result = result + term
        return result

    def evaluate(self, point: Sequence[Scalar]) -> FieldElem:
        """Value at a point whose coordinates may lie in an extension of the coefficient field"""
        elems = [v for v in point if isinstance(v, FieldElem)]
        target = common_field(self.field, *(v.desc for v in elems)) if elems else self.field
        values = [embed(v, target) if isinstance(v, FieldElem) else target.elem(v) for v in point]
        if len(values) != len(self.alphabet):
            raise ValueError(f"point has {len(values)} coordinates, expected {len(self.alphabet)}")
        cache: Dict[Tuple[int, int], FieldElem] = {}
        total = target.zero()
        for mono, c in self._terms.items():
            term = embed(c, target)
            for i, k in enumerate(mono):
                if k:
                    if (i, k) not in cache:
                        cache[(i, k)] = values[i] ** k
                    term = term * cache[(i, k)]
            total = total + term
        return total

    def change_field(self, target: FieldDesc) -> "MultiPoly":
        if target == self.field:
            return self
        return MultiPoly._from_clean(
            target, self.alphabet, {m: embed(c, target) for m, c in self._terms.items()}
        )

    def frobenius_twist(self) -> "MultiPoly":
        """Term-wise p-th power: exponents times p, coefficients raised to p"""
        p = self.field.p
        return MultiPoly._from_clean(
            self.field,
            self.alphabet,
            {tuple(k * p for k in m): c**p for m, c in self._terms.items()},
        )

    # identity

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.field == other.field
            and self.alphabet == other.alphabet
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.alphabet, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({format_poly(self)!r}, {self.field})"


def poly_arith(f: MultiPoly, g: MultiPoly, op: str) -> MultiPoly:
    """Polynomial arithmetic by operation name: add, sub or mul"""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f.mul(g)
    raise ValueError(f"unknown operation {op!r}")


def _in_box(terms: Mapping[Monomial, FieldElem], bound: int) -> Dict[Monomial, FieldElem]:
    return {m: c for m, c in terms.items() if max(m, default=0) < bound}


def _coefficient_text(c: FieldElem) -> Tuple[bool, str]:
    """(negative, magnitude) using the symmetric representative for prime-field values"""
    if c.in_prime_field():
        v, p = c.coeffs[0], c.desc.p
        if p > 2 and v > p // 2:
            return True, str(p - v)
        return False, str(v)
    text = str(c)
    return False, f"({text})" if " + " in text else text


def format_monomial(mono: Sequence[int], alphabet: Alphabet) -> str:
    parts = []
    for name, k in zip(alphabet.names, mono):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(f: MultiPoly) -> str:
    """Canonical text form; ``parse_poly(format_poly(f)) == f``"""
    if f.is_zero():
        return "0"
    out = []
    for mono, c in f.items():
        negative, mag = _coefficient_text(c)
        body = format_monomial(mono, f.alphabet)
        if not body:
            body = mag
        elif mag != "1":
            body = f"{mag}*{body}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)

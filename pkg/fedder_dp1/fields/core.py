"""Exact arithmetic in F_p and F_{p^n} with a canonical, reproducible modulus"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import structlog

from ..errors import FieldMismatchError, FieldTooLargeError, InputFormatError, NotInvertibleError

logger = structlog.get_logger()

MAX_PRIME = 1 << 16
MAX_DEGREE = 12

Coeffs = Tuple[int, ...]


# Dense F_p[u] helpers on ascending integer lists, used for modulus selection


def _zp_trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_sub(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    size = max(len(a), len(b))
    out = [0] * size
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _zp_trim(out)


def _zp_rem(a: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    r = [c % p for c in a]
    _zp_trim(r)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(r) - 1 >= dm and r:
        c = (r[-1] * inv_lead) % p
        shift = len(r) - 1 - dm
        if c:
            for i, mc in enumerate(m):
                r[shift + i] = (r[shift + i] - c * mc) % p
        r.pop()
        _zp_trim(r)
    return r


def _zp_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _zp_rem(out, m, p)


def _zp_powmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> List[int]:
    result: List[int] = [1]
    base = _zp_rem(a, m, p)
    while e:
        if e & 1:
            result = _zp_mulmod(result, base, m, p)
        e >>= 1
        if e:
            base = _zp_mulmod(base, base, m, p)
    return result


def _zp_gcd(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    a, b = _zp_trim([c % p for c in a]), _zp_trim([c % p for c in b])
    while b:
        a, b = b, _zp_rem(a, b, p)
    return a


def _prime_factors(n: int) -> List[int]:
    factors, d = [], 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def is_prime(p: int) -> bool:
    """Trial division; fields are bounded by MAX_PRIME"""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial given by ascending coefficients"""
    n = len(modulus) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]

    def frobenius_power(k: int) -> List[int]:
        r: List[int] = x
        for _ in range(k):
            r = _zp_powmod(r, p, modulus, p)
        return r

    if _zp_sub(frobenius_power(n), x, p):
        return False
    for r in _prime_factors(n):
        g = _zp_gcd(_zp_sub(frobenius_power(n // r), x, p), modulus, p)
        if len(g) > 1:
            return False
    return True


@dataclass(frozen=True, slots=True)
class FieldDesc:
    """Descriptor of F_{p^n}; the modulus is stored as ascending coefficients (monic)"""

    p: int
    n: int = 1
    modulus: Optional[Coeffs] = None

    @property
    def order(self) -> int:
        return self.p**self.n

    @property
    def is_prime_field(self) -> bool:
        return self.n == 1

    def __str__(self) -> str:
        if self.n == 1:
            return f"F_{self.p}"
        return f"F_{self.order}[u]/({format_coeffs(self.modulus, self.p)})"

    # raw tuple arithmetic

    def const(self, value: int) -> Coeffs:
        return (value % self.p,) + (0,) * (self.n - 1)

    def add_raw(self, a: Coeffs, b: Coeffs) -> Coeffs:
        p = self.p
        if self.n == 1:
            return ((a[0] + b[0]) % p,)
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub_raw(self, a: Coeffs, b: Coeffs) -> Coeffs:
        p = self.p
        if self.n == 1:
            return ((a[0] - b[0]) % p,)
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg_raw(self, a: Coeffs) -> Coeffs:
        p = self.p
        return tuple((-x) % p for x in a)

    def convolve(self, a: Coeffs, b: Coeffs) -> List[int]:
        """Unreduced product of two representatives (length 2n-1)"""
        out = [0] * (2 * self.n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out

    def reduce(self, raw: Sequence[int]) -> Coeffs:
        """Reduce an integer vector of any length modulo p and the modulus"""
        p, n = self.p, self.n
        if n == 1:
            return ((raw[0] if raw else 0) % p,)
        r = [c % p for c in raw]
        m = self.modulus
        for i in range(len(r) - 1, n - 1, -1):
            c = r[i]
            if c:
                base = i - n
                for j in range(n):
                    r[base + j] = (r[base + j] - c * m[j]) % p
                r[i] = 0
        r = r[:n]
        if len(r) < n:
            r.extend([0] * (n - len(r)))
        return tuple(r)

    def mul_raw(self, a: Coeffs, b: Coeffs) -> Coeffs:
        if self.n == 1:
            return ((a[0] * b[0]) % self.p,)
        return self.reduce(self.convolve(a, b))

    def pow_raw(self, a: Coeffs, e: int) -> Coeffs:
        if e < 0:
            a = self.inv_raw(a)
            e = -e
        if self.n == 1:
            return (pow(a[0], e, self.p),)
        result = self.const(1)
        base = a
        while e:
            if e & 1:
                result = self.mul_raw(result, base)
            e >>= 1
            if e:
                base = self.mul_raw(base, base)
        return result

    def inv_raw(self, a: Coeffs) -> Coeffs:
        if not any(a):
            raise NotInvertibleError(f"division by zero in {self}")
        if self.n == 1:
            return (pow(a[0], self.p - 2, self.p),)
        return self.pow_raw(a, self.order - 2)

    # elements

    def elem(self, value: Union[int, Sequence[int], "FieldElem"]) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.desc != self:
                raise FieldMismatchError(f"element of {value.desc} is not in {self}")
            return value
        if isinstance(value, int):
            return FieldElem(self, self.const(value))
        coeffs = [c % self.p for c in value]
        if len(coeffs) > self.n:
            return FieldElem(self, self.reduce(coeffs))
        coeffs.extend([0] * (self.n - len(coeffs)))
        return FieldElem(self, tuple(coeffs))

    def zero(self) -> "FieldElem":
        return FieldElem(self, (0,) * self.n)

    def one(self) -> "FieldElem":
        return FieldElem(self, self.const(1))

    def generator(self) -> "FieldElem":
        """The class of u (equal to 1 in a prime field)"""
        if self.n == 1:
            return self.one()
        return FieldElem(self, (0, 1) + (0,) * (self.n - 2))

    def element(self, index: int) -> "FieldElem":
        """Element number ``index`` in lexicographic order of (c_{n-1}, ..., c_0)"""
        coeffs = []
        for _ in range(self.n):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return FieldElem(self, tuple(coeffs))

    def index_of(self, a: "FieldElem") -> int:
        index = 0
        for c in reversed(a.coeffs):
            index = index * self.p + c
        return index

    def elements(self) -> Iterator["FieldElem"]:
        for digits in product(range(self.p), repeat=self.n):
            yield FieldElem(self, tuple(reversed(digits)))

    def nonzero_elements(self) -> Iterator["FieldElem"]:
        it = self.elements()
        next(it)
        return it

    def parse(self, text: str) -> "FieldElem":
        return parse_elem(text, self)


@dataclass(frozen=True, slots=True)
class FieldElem:
    """Element of F_{p^n}: ascending coefficient vector of the reduced representative"""

    desc: FieldDesc
    coeffs: Coeffs

    def _other(self, other: object) -> Coeffs:
        if isinstance(other, FieldElem):
            if other.desc is not self.desc and other.desc != self.desc:
                raise FieldMismatchError(f"cannot combine {self.desc} and {other.desc}")
            return other.coeffs
        if isinstance(other, int):
            return self.desc.const(other)
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def __add__(self, other: Union["FieldElem", int]) -> "FieldElem":
        return FieldElem(self.desc, self.desc.add_raw(self.coeffs, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: Union["FieldElem", int]) -> "FieldElem":
        return FieldElem(self.desc, self.desc.sub_raw(self.coeffs, self._other(other)))

    def __rsub__(self, other: Union["FieldElem", int]) -> "FieldElem":
        return FieldElem(self.desc, self.desc.sub_raw(self._other(other), self.coeffs))

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.desc, self.desc.neg_raw(self.coeffs))

    def __mul__(self, other: Union["FieldElem", int]) -> "FieldElem":
        return FieldElem(self.desc, self.desc.mul_raw(self.coeffs, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: Union["FieldElem", int]) -> "FieldElem":
        inv = self.desc.inv_raw(self._other(other))
        return FieldElem(self.desc, self.desc.mul_raw(self.coeffs, inv))

    def __rtruediv__(self, other: Union["FieldElem", int]) -> "FieldElem":
        inv = self.desc.inv_raw(self.coeffs)
        return FieldElem(self.desc, self.desc.mul_raw(self._other(other), inv))

    def __pow__(self, e: int) -> "FieldElem":
        return FieldElem(self.desc, self.desc.pow_raw(self.coeffs, e))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def inverse(self) -> "FieldElem":
        return FieldElem(self.desc, self.desc.inv_raw(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def in_prime_field(self) -> bool:
        return not any(self.coeffs[1:])

    def key(self) -> Coeffs:
        """Sort key for the lexicographic element order"""
        return tuple(reversed(self.coeffs))

    def __lt__(self, other: "FieldElem") -> bool:
        return self.key() < other.key()

    def __int__(self) -> int:
        if not self.in_prime_field():
            raise ValueError(f"{self} is not in the prime field")
        return self.coeffs[0]

    def frobenius_inverse(self) -> "FieldElem":
        """The unique p-th root"""
        return self ** (self.desc.p ** (self.desc.n - 1))

    def trace(self) -> int:
        """Absolute trace to F_p"""
        total = self
        conj = self
        for _ in range(self.desc.n - 1):
            conj = frobenius(conj)
            total = total + conj
        return total.coeffs[0]

    def is_square(self) -> bool:
        if self.is_zero() or self.desc.p == 2:
            return True
        return (self ** ((self.desc.order - 1) // 2)).is_one()

    def __str__(self) -> str:
        return format_coeffs(self.coeffs, self.desc.p)

    def __repr__(self) -> str:
        return f"FieldElem({self}, {self.desc})"


def format_coeffs(coeffs: Sequence[int], p: int) -> str:
    """Render an ascending coefficient vector as a polynomial in u, e.g. ``2*u + 1``"""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k] % p
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            mono = "u" if k == 1 else f"u^{k}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(parts) if parts else "0"


_ELEM_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*(?:\*\s*)?)?(u(?:\s*\^\s*(\d+))?)?\s*")


def parse_elem(text: str, desc: FieldDesc) -> FieldElem:
    """Parse the ``u``-polynomial rendering of an element (inverse of ``str``)"""
    raw = [0] * max(desc.n, 1)
    pos, first = 0, True
    stripped = text.strip()
    if not stripped:
        raise InputFormatError("empty field element")
    while pos < len(stripped):
        m = _ELEM_TERM.match(stripped, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise InputFormatError(f"cannot parse field element {text!r} at offset {pos}")
        sign, num, mono, exp = m.groups()
        if sign is None and not first:
            raise InputFormatError(f"missing operator in field element {text!r}")
        c = int(num) if num is not None else 1
        k = 0
        if mono is not None:
            k = int(exp) if exp is not None else 1
            if desc.n == 1:
                raise InputFormatError(f"{desc} has no generator u")
        if sign == "-":
            c = -c
        while k >= len(raw):
            raw.append(0)
        raw[k] += c
        pos, first = m.end(), False
    return desc.elem(raw)


@lru_cache(maxsize=None)
def make_field(p: int, n: int = 1) -> FieldDesc:
    """Deterministic F_{p^n}: the modulus is the lexicographically smallest monic irreducible"""
    if not isinstance(p, int) or not is_prime(p) or p >= MAX_PRIME:
        raise ValueError(f"characteristic must be a prime below {MAX_PRIME}, got {p}")
    if not 1 <= n <= MAX_DEGREE:
        raise FieldTooLargeError(f"extension degree must be in 1..{MAX_DEGREE}, got {n}", n)
    if n == 1:
        return FieldDesc(p, 1, None)
    for digits in product(range(p), repeat=n):
        modulus = tuple(reversed(digits)) + (1,)
        if is_irreducible(modulus, p):
            desc = FieldDesc(p, n, modulus)
            logger.debug("field_constructed", p=p, n=n, modulus=list(modulus))
            return desc
    raise AssertionError(f"no irreducible polynomial of degree {n} over F_{p}")


def field_of_order(q: int) -> FieldDesc:
    """The field with q elements, q a prime power"""
    for p in _prime_factors(q)[:1]:
        n, r = 0, q
        while r % p == 0:
            r //= p
            n += 1
        if r == 1:
            return make_field(p, n)
    raise InputFormatError(f"{q} is not a prime power")


def arith(a: FieldElem, b: FieldElem, op: str) -> FieldElem:
    """Field arithmetic by operation name: add, sub, mul or div"""
    if a.desc != b.desc:
        raise FieldMismatchError(f"cannot combine {a.desc} and {b.desc}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def frobenius(a: FieldElem) -> FieldElem:
    """a -> a^p"""
    return a ** a.desc.p

"""Dense univariate polynomials over a finite field.

Polynomials are ascending lists of ``FieldElem`` without trailing zeros; ``[]`` is zero.
Factorization is Cantor-Zassenhaus: squarefree decomposition with p-th root extraction,
distinct-degree splitting, then probabilistic equal-degree splitting (trace map in
characteristic 2). All randomness comes from the ``random.Random`` passed in.
"""
from __future__ import annotations

import random
from typing import List, Optional, Sequence, Tuple

from ..errors import NotInvertibleError, ZeroPolynomialError
from .core import FieldDesc, FieldElem

UPoly = List[FieldElem]


def up_strip(f: Sequence[FieldElem]) -> UPoly:
    f = list(f)
    while f and f[-1].is_zero():
        f.pop()
    return f


def up_from_ints(desc: FieldDesc, coeffs: Sequence[int]) -> UPoly:
    return up_strip([desc.elem(c) for c in coeffs])


def up_x(desc: FieldDesc) -> UPoly:
    return [desc.zero(), desc.one()]


def up_one(desc: FieldDesc) -> UPoly:
    return [desc.one()]


def up_degree(f: Sequence[FieldElem]) -> int:
    return len(f) - 1


def up_add(f: UPoly, g: UPoly) -> UPoly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = out[i] + c
    return up_strip(out)


def up_neg(f: UPoly) -> UPoly:
    return [-c for c in f]


def up_sub(f: UPoly, g: UPoly) -> UPoly:
    return up_add(f, up_neg(g))


def up_scale(f: UPoly, c: FieldElem) -> UPoly:
    if c.is_zero():
        return []
    return [a * c for a in f]


def up_mul(f: UPoly, g: UPoly) -> UPoly:
    if not f or not g:
        return []
    desc = f[0].desc
    raw: List[List[int]] = [[0] * (2 * desc.n - 1) for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        if a.is_zero():
            continue
        for j, b in enumerate(g):
            if b.is_zero():
                continue
            acc = raw[i + j]
            for k, v in enumerate(desc.convolve(a.coeffs, b.coeffs)):
                acc[k] += v
    return up_strip([FieldElem(desc, desc.reduce(r)) for r in raw])


def up_divmod(f: UPoly, g: UPoly) -> Tuple[UPoly, UPoly]:
    if not g:
        raise NotInvertibleError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], up_strip(r)
    inv_lead = g[-1].inverse()
    q = [g[0].desc.zero()] * (len(r) - dg)
    while r and len(r) - 1 >= dg:
        c = r[-1] * inv_lead
        shift = len(r) - 1 - dg
        q[shift] = c
        if not c.is_zero():
            for i, gc in enumerate(g):
                r[shift + i] = r[shift + i] - c * gc
        r.pop()
        r = up_strip(r)
    return up_strip(q), r


def up_rem(f: UPoly, g: UPoly) -> UPoly:
    return up_divmod(f, g)[1]


def up_quo(f: UPoly, g: UPoly) -> UPoly:
    return up_divmod(f, g)[0]


def up_monic(f: UPoly) -> Tuple[Optional[FieldElem], UPoly]:
    if not f:
        return None, []
    lc = f[-1]
    if lc.is_one():
        return lc, list(f)
    inv = lc.inverse()
    return lc, [c * inv for c in f]


def up_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd"""
    while g:
        f, g = g, up_rem(f, g)
    return up_monic(f)[1]


def up_diff(f: UPoly) -> UPoly:
    return up_strip([c * i for i, c in enumerate(f)][1:])


def up_eval(f: UPoly, x: FieldElem) -> FieldElem:
    acc = x.desc.zero()
    for c in reversed(f):
        acc = acc * x + c
    return acc


def up_powmod(f: UPoly, e: int, m: UPoly) -> UPoly:
    result = up_one(m[0].desc)
    base = up_rem(f, m)
    while e:
        if e & 1:
            result = up_rem(up_mul(result, base), m)
        e >>= 1
        if e:
            base = up_rem(up_mul(base, base), m)
    return up_rem(result, m)


def up_pth_root(f: UPoly) -> UPoly:
    """g with g(x)^p == f(x), for f whose derivative vanishes"""
    p = f[0].desc.p
    return up_strip([c.frobenius_inverse() for c in f[::p]])


def up_sqf_list(f: UPoly) -> Tuple[FieldElem, List[Tuple[UPoly, int]]]:
    """Leading coefficient and monic squarefree, pairwise coprime factors with multiplicities"""
    if not f:
        raise ZeroPolynomialError("squarefree decomposition of zero")
    p = f[0].desc.p
    lc, f = up_monic(f)
    factors: List[Tuple[UPoly, int]] = []
    n = 1
    while up_degree(f) > 0:
        F = up_diff(f)
        if F:
            g = up_gcd(f, F)
            h = up_quo(f, g)
            i = 1
            while up_degree(h) > 0:
                G = up_gcd(g, h)
                H = up_quo(h, G)
                if up_degree(H) > 0:
                    factors.append((H, i * n))
                g, h, i = up_quo(g, G), G, i + 1
            if up_degree(g) < 1:
                break
            f = g
        f = up_pth_root(f)
        n *= p
    merged: dict = {}
    for g, m in factors:
        merged[m] = up_mul(merged[m], g) if m in merged else g
    return lc, sorted(((g, m) for m, g in merged.items()), key=lambda t: t[1])


def up_ddf(f: UPoly) -> List[Tuple[UPoly, int]]:
    """Distinct-degree factorization of a monic squarefree polynomial"""
    desc = f[0].desc
    q = desc.order
    x = up_x(desc)
    g = x
    factors: List[Tuple[UPoly, int]] = []
    i = 1
    while 2 * i <= up_degree(f):
        g = up_powmod(g, q, f)
        h = up_gcd(f, up_sub(g, x))
        if up_degree(h) > 0:
            factors.append((h, i))
            f = up_quo(f, h)
            g = up_rem(g, f)
        i += 1
    if up_degree(f) > 0:
        factors.append((f, up_degree(f)))
    return factors


def _random_poly(desc: FieldDesc, below: int, rng: random.Random) -> UPoly:
    while True:
        r = up_strip([desc.element(rng.randrange(desc.order)) for _ in range(below)])
        if up_degree(r) > 0:
            return r


def up_edf(f: UPoly, d: int, rng: random.Random) -> List[UPoly]:
    """Equal-degree splitting of a monic squarefree product of degree-d irreducibles"""
    if up_degree(f) <= d:
        return [f]
    desc = f[0].desc
    q = desc.order
    while True:
        r = _random_poly(desc, up_degree(f), rng)
        if desc.p == 2:
            # absolute trace F_{q^d} -> F_2 of r in each residue field
            t = acc = up_rem(r, f)
            for _ in range(desc.n * d - 1):
                t = up_rem(up_mul(t, t), f)
                acc = up_add(acc, t)
            g = up_gcd(f, acc)
        else:
            h = up_powmod(r, (q**d - 1) // 2, f)
            g = up_gcd(f, up_sub(h, up_one(desc)))
        if 0 < up_degree(g) < up_degree(f):
            return up_edf(g, d, rng) + up_edf(up_quo(f, g), d, rng)


def _factor_key(g: UPoly) -> tuple:
    return (up_degree(g), tuple(c.key() for c in reversed(g)))


def up_factor(f: UPoly, rng: random.Random) -> Tuple[FieldElem, List[Tuple[UPoly, int]]]:
    """Complete factorization into monic irreducibles with multiplicities"""
    lc, sqf = up_sqf_list(f)
    out: List[Tuple[UPoly, int]] = []
    for g, m in sqf:
        for h, d in up_ddf(g):
            out.extend((irr, m) for irr in up_edf(h, d, rng))
    out.sort(key=lambda t: (_factor_key(t[0]), t[1]))
    return lc, out


def up_roots(f: UPoly, rng: random.Random) -> List[FieldElem]:
    """Distinct roots lying in the coefficient field, in lexicographic order"""
    if not f:
        raise ZeroPolynomialError("roots of zero")
    if up_degree(f) < 1:
        return []
    desc = f[0].desc
    f = up_monic(f)[1]
    x = up_x(desc)
    g = up_gcd(f, up_sub(up_powmod(x, desc.order, f), x))
    if up_degree(g) < 1:
        return []
    roots = [-lin[0] for lin in up_edf(g, 1, rng)]
    return sorted(roots, key=FieldElem.key)

"""Embeddings F_{p^a} -> F_{p^b} for a | b"""
from __future__ import annotations

import random
from functools import lru_cache
from math import lcm

import structlog

from ..errors import DegreeMismatchError, FieldMismatchError, FieldTooLargeError
from .core import MAX_DEGREE, FieldDesc, FieldElem, make_field
from .upoly import up_roots

logger = structlog.get_logger()


@lru_cache(maxsize=None)
def embedding_root(source: FieldDesc, target: FieldDesc) -> FieldElem:
    """Image of u: the smallest root of the source modulus in the target"""
    poly = [target.elem(c) for c in source.modulus]
    roots = up_roots(poly, random.Random(0))
    if not roots:
        raise AssertionError(f"{source} has no root in {target}")
    root = roots[0]
    logger.debug("embedding_selected", source=str(source), target=str(target), root=str(root))
    return root


def embed(a: FieldElem, target: FieldDesc) -> FieldElem:
    source = a.desc
    if source is target or source == target:
        return a
    if source.p != target.p:
        raise FieldMismatchError(f"cannot embed {source} into {target}")
    if target.n % source.n:
        raise DegreeMismatchError(
            f"cannot embed {source} into {target}: {source.n} does not divide {target.n}"
        )
    if source.n == 1:
        return target.elem(a.coeffs[0])
    r = embedding_root(source, target)
    acc = target.zero()
    for c in reversed(a.coeffs):
        acc = acc * r + c
    return acc


def common_field(*descs: FieldDesc) -> FieldDesc:
    """Smallest field (in our naming) containing all the given fields"""
    p = descs[0].p
    if any(d.p != p for d in descs):
        raise FieldMismatchError("fields of different characteristic")
    n = lcm(*(d.n for d in descs))
    if n > MAX_DEGREE:
        raise FieldTooLargeError(f"compositum F_{p}^{n} exceeds degree {MAX_DEGREE}", n)
    for d in descs:
        if d.n == n:
            return d
    return make_field(p, n)

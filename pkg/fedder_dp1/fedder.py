"""Fedder's criterion for principal ideals.

``k[x_1..x_n]/(f)`` is F-split iff ``f^(p-1)`` has a monomial with every exponent below p,
i.e. iff ``f^(p-1)`` is not in the Frobenius power of the maximal monomial ideal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import structlog

from .errors import ZeroPolynomialError
from .fields import FieldElem
from .mpoly import Alphabet, Monomial, MultiPoly, format_monomial

logger = structlog.get_logger()


@dataclass(frozen=True)
class FedderVerdict:
    f_split: bool
    witness: Optional[Monomial] = None
    witness_coefficient: Optional[FieldElem] = None
    power_terms: int = 0
    alphabet: Optional[Alphabet] = field(default=None, compare=False)

    def witness_text(self) -> Optional[str]:
        if self.witness is None or self.alphabet is None:
            return None
        return format_monomial(self.witness, self.alphabet) or "1"


def monomial_in_frobenius_power(exponents: Sequence[int], p: int) -> bool:
    """Membership in (x_1^p, ..., x_n^p): some exponent is at least p"""
    return any(e >= p for e in exponents)


def frobenius_box_power(f: MultiPoly) -> MultiPoly:
    """The part of f^(p-1) with every exponent below p.

    Exponents never decrease under multiplication, so terms leaving the box can be dropped
    at every step without changing what survives inside it.
    """
    p = f.field.p
    return f.pow(p - 1, box=p)


def box_witnesses(power: MultiPoly, p: int) -> List[Tuple[Monomial, FieldElem]]:
    return [(m, c) for m, c in power.items() if not monomial_in_frobenius_power(m, p)]


def is_fsplit_hypersurface(f: MultiPoly, truncate: bool = False) -> FedderVerdict:
    """Decide F-splitting of k[vars]/(f); the witness is the first surviving box monomial"""
    if f.is_zero():
        raise ZeroPolynomialError("Fedder's criterion is undefined for f = 0")
    p = f.field.p
    power = frobenius_box_power(f) if truncate else f.pow(p - 1)
    hits = box_witnesses(power, p)
    logger.debug("fedder_power_computed", p=p, terms=len(power), truncated=truncate, hits=len(hits))
    if not hits:
        return FedderVerdict(False, power_terms=len(power), alphabet=f.alphabet)
    mono, coeff = hits[0]
    return FedderVerdict(True, mono, coeff, len(power), f.alphabet)

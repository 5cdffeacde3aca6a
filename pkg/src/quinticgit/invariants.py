"""Numerical invariants: geometric genus counts, p_g of hypersurfaces, lct bounds."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .lattice import InternalInconsistency, InvalidArgument

LCT_THRESHOLD = Fraction(4, 5)


def _check_degree(d: int, low: int):
    if not isinstance(d, int) or isinstance(d, bool) or d < low:
        raise InvalidArgument(f"degree must be an integer >= {low}, got {d!r}")


def genus_count(d: int) -> int:
    """Geometric genus of the lambda1-type singularity on a degree-d surface.

    Brute-force count of (i0,i1,i2,i3) >= 0 with i0+i1+i2+i3 = d and
    2*i0 + i1 + i2 <= d - 4.
    """
    _check_degree(d, 4)
    n = 0
    for i0 in range(d + 1):
        for i1 in range(d + 1 - i0):
            for i2 in range(d + 1 - i0 - i1):
                if 2 * i0 + i1 + i2 <= d - 4:
                    n += 1
    return n


def genus_closed_form(d: int) -> int:
    _check_degree(d, 4)
    if d % 2 == 0:
        num = d * (d - 2) * (4 * d - 10)
    else:
        num = (d - 1) * (d - 3) * (4 * d - 2)
    if num % 48:
        raise InternalInconsistency(f"closed form is not integral at d={d}: {num}/48")
    return num // 48


def genus_binomial_sum(d: int) -> int:
    _check_degree(d, 4)
    return sum(comb(d - 2 - 2 * k, 2) for k in range((d - 4) // 2 + 1))


def hypersurface_pg(d: int) -> int:
    _check_degree(d, 1)
    return (d - 1) * (d - 2) * (d - 3) // 6


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[Fraction, ...]
    weighted_degree: Fraction

    def __init__(self, weights: Sequence, weighted_degree):
        ws = tuple(Fraction(w) for w in weights)
        deg = Fraction(weighted_degree)
        if not ws:
            raise InvalidArgument("weight system needs at least one weight")
        if deg <= 0 or any(w <= 0 for w in ws):
            raise InvalidArgument(f"weights and degree must be positive: {weights}, {weighted_degree}")
        if any(w > deg for w in ws):
            raise InvalidArgument(f"every weight must be at most the degree {deg}")
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "weighted_degree", deg)


def lct_weight_bound(ws: WeightSystem) -> Fraction:
    return min(Fraction(1), sum(ws.weights) / ws.weighted_degree)


class LctVerdict(str, enum.Enum):
    STABLE = "Stable"
    SEMISTABLE = "Semistable"
    NO_CONCLUSION = "NoConclusion"


def lct_verdict(lct) -> LctVerdict:
    """Sufficient criterion only: a small threshold says nothing."""
    lct = Fraction(lct)
    if not 0 < lct <= 1:
        raise InvalidArgument(f"lct must lie in (0, 1], got {lct}")
    if lct > LCT_THRESHOLD:
        return LctVerdict.STABLE
    if lct == LCT_THRESHOLD:
        return LctVerdict.SEMISTABLE
    return LctVerdict.NO_CONCLUSION

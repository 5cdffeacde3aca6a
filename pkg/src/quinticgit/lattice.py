"""Monomials, one-parameter subgroups and their weight pairing on P^3.

Everything here is exact integer/rational arithmetic over four variables
x0..x3.  Monomials of degree d are lattice points of the dilated simplex
``i0 + i1 + i2 + i3 = d``; a one-parameter subgroup is a diagonal weight
vector ``(a0, a1, a2, a3)`` with zero sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Iterator, Sequence

NVARS = 4


class InvalidArgument(ValueError):
    """Raised when an operation receives arguments outside its domain."""


class InternalInconsistency(RuntimeError):
    """Raised when a computation contradicts an invariant it relies on."""


@dataclass(frozen=True, order=True)
class ExponentVector:
    exponents: tuple[int, int, int, int]

    def __post_init__(self):
        e = tuple(int(x) for x in self.exponents)
        if len(e) != NVARS:
            raise InvalidArgument(f"expected {NVARS} exponents, got {len(e)}")
        if any(x < 0 for x in e):
            raise InvalidArgument(f"negative exponent in {e}")
        object.__setattr__(self, "exponents", e)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __iter__(self) -> Iterator[int]:
        return iter(self.exponents)

    def __getitem__(self, k: int) -> int:
        return self.exponents[k]

    def __len__(self) -> int:
        return NVARS

    def permuted(self, perm: Sequence[int]) -> "ExponentVector":
        """Exponent vector after sending variable ``x_k`` to ``x_perm[k]``."""
        out = [0] * NVARS
        for k, e in enumerate(self.exponents):
            out[perm[k]] = e
        return ExponentVector(tuple(out))

    def to_text(self) -> str:
        parts = []
        for k, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{k}")
            elif e > 1:
                parts.append(f"x{k}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return f"ExponentVector{self.exponents}"


def ev(*entries: int) -> ExponentVector:
    """Shorthand constructor: ``ev(2, 1, 0, 2)``."""
    if len(entries) == 1 and not isinstance(entries[0], int):
        entries = tuple(entries[0])
    return ExponentVector(tuple(entries))


@dataclass(frozen=True)
class OneParamSubgroup:
    weights: tuple[int, int, int, int]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if len(w) != NVARS:
            raise InvalidArgument(f"expected {NVARS} weights, got {len(w)}")
        if sum(w) != 0:
            raise InvalidArgument(f"weights {w} do not sum to zero")
        object.__setattr__(self, "weights", w)

    @property
    def normalized(self) -> bool:
        w = self.weights
        return (
            all(w[k] >= w[k + 1] for k in range(NVARS - 1))
            and any(w)
            and _content(w) == 1
        )

    def normalize(self) -> "OneParamSubgroup":
        """Sorted descending and divided by the gcd of the entries."""
        w = self.weights
        if not any(w):
            raise InvalidArgument("the zero weight vector has no normal form")
        g = _content(w)
        return OneParamSubgroup(tuple(sorted((x // g for x in w), reverse=True)))

    def __neg__(self) -> "OneParamSubgroup":
        return OneParamSubgroup(tuple(-x for x in self.weights))

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)

    def __getitem__(self, k: int) -> int:
        return self.weights[k]

    def norm_squared(self) -> int:
        return sum(x * x for x in self.weights)

    def __repr__(self):
        return f"OneParamSubgroup{self.weights}"


def ps(*weights: int) -> OneParamSubgroup:
    if len(weights) == 1 and not isinstance(weights[0], int):
        weights = tuple(weights[0])
    return OneParamSubgroup(tuple(weights))


def _content(values: Iterable[int]) -> int:
    g = 0
    for x in values:
        g = gcd(g, abs(int(x)))
    return g


class MonomialConfiguration:
    """A degree together with a finite set of degree-d exponent vectors.

    The support is stored as a tuple in the canonical lexicographically
    descending order, so iteration and rendering are deterministic.
    """

    __slots__ = ("degree", "support", "_set")

    def __init__(self, degree: int, support: Iterable[ExponentVector | Sequence[int]]):
        members = set()
        for m in support:
            if not isinstance(m, ExponentVector):
                m = ExponentVector(tuple(m))
            if m.degree != degree:
                raise InvalidArgument(f"{m} has degree {m.degree}, expected {degree}")
            members.add(m)
        self.degree = int(degree)
        self._set = frozenset(members)
        self.support = tuple(sorted(members, reverse=True))

    def __len__(self):
        return len(self.support)

    def __iter__(self):
        return iter(self.support)

    def __contains__(self, m):
        if not isinstance(m, ExponentVector):
            m = ExponentVector(tuple(m))
        return m in self._set

    def __eq__(self, other):
        if not isinstance(other, MonomialConfiguration):
            return NotImplemented
        return self.degree == other.degree and self._set == other._set

    def __hash__(self):
        return hash((self.degree, self._set))

    def issubset(self, other: "MonomialConfiguration") -> bool:
        _check_same_degree(self.degree, other.degree)
        return self._set <= other._set

    def union(self, other: "MonomialConfiguration") -> "MonomialConfiguration":
        _check_same_degree(self.degree, other.degree)
        return MonomialConfiguration(self.degree, self._set | other._set)

    def permuted(self, perm: Sequence[int]) -> "MonomialConfiguration":
        return MonomialConfiguration(self.degree, (m.permuted(perm) for m in self.support))

    def as_tuples(self) -> list[tuple[int, int, int, int]]:
        return [m.exponents for m in self.support]

    def __repr__(self):
        return f"MonomialConfiguration(degree={self.degree}, support={self.as_tuples()})"


def _check_same_degree(d1: int, d2: int):
    if d1 != d2:
        raise InvalidArgument(f"degree mismatch: {d1} != {d2}")


def _check_degree(d: int):
    if not isinstance(d, int) or d < 1:
        raise InvalidArgument(f"degree must be a positive integer, got {d!r}")


@lru_cache(maxsize=64)
def _monomials(d: int) -> tuple[ExponentVector, ...]:
    out = []
    for i0 in range(d, -1, -1):
        for i1 in range(d - i0, -1, -1):
            for i2 in range(d - i0 - i1, -1, -1):
                out.append(ExponentVector((i0, i1, i2, d - i0 - i1 - i2)))
    return tuple(out)


def enumerate_monomials(d: int) -> list[ExponentVector]:
    """All ``C(d+3, 3)`` degree-d monomials, lexicographically descending."""
    _check_degree(d)
    return list(_monomials(d))


def monomial_count(d: int) -> int:
    return comb(d + 3, 3)


def weight_pairing(lam: OneParamSubgroup | Sequence[int], m: ExponentVector | Sequence) -> int | Fraction:
    """``sum_j a_j * i_j``; also accepts rational points such as the centroid."""
    return sum(a * i for a, i in zip(lam, m))


def centroid(d: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    _check_degree(d)
    c = Fraction(d, NVARS)
    return (c, c, c, c)


def monomial_dominates(m: ExponentVector, m2: ExponentVector) -> bool:
    """True when ``m >= m2`` for every normalized one-parameter subgroup.

    The cone of normalized weights is generated by (3,-1,-1,-1), (1,1,-1,-1)
    and (1,1,1,-3); pairing against those rays reduces to non-negativity of
    the three prefix sums of ``m - m2``.
    """
    _check_same_degree(sum(m), sum(m2))
    s = 0
    for j in range(NVARS - 1):
        s += m[j] - m2[j]
        if s < 0:
            return False
    return True


EXTREME_RAYS = ((3, -1, -1, -1), (1, 1, -1, -1), (1, 1, 1, -3))


def dominates_by_rays(m: Sequence[int], m2: Sequence[int]) -> bool:
    diff = [a - b for a, b in zip(m, m2)]
    return all(weight_pairing(r, diff) >= 0 for r in EXTREME_RAYS)


def nonneg_set(lam: OneParamSubgroup, d: int) -> MonomialConfiguration:
    """Degree-d monomials of non-negative weight (the set M+ of ``lam``)."""
    _check_degree(d)
    return MonomialConfiguration(d, (m for m in _monomials(d) if weight_pairing(lam, m) >= 0))


def positive_set(lam: OneParamSubgroup, d: int) -> MonomialConfiguration:
    _check_degree(d)
    return MonomialConfiguration(d, (m for m in _monomials(d) if weight_pairing(lam, m) > 0))


def zero_set(lam: OneParamSubgroup, d: int) -> MonomialConfiguration:
    """Degree-d monomials fixed by ``lam``."""
    _check_degree(d)
    return MonomialConfiguration(d, (m for m in _monomials(d) if weight_pairing(lam, m) == 0))


def support_mask(lam: Sequence[int], d: int) -> int:
    """Bit k set iff the k-th monomial of ``enumerate_monomials(d)`` has weight >= 0."""
    mask = 0
    for k, m in enumerate(_monomials(d)):
        if weight_pairing(lam, m) >= 0:
            mask |= 1 << k
    return mask


def config_mask(cfg: MonomialConfiguration) -> int:
    index = {m: k for k, m in enumerate(_monomials(cfg.degree))}
    mask = 0
    for m in cfg:
        mask |= 1 << index[m]
    return mask

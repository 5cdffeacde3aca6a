"""Torus weights on the Luna slice at a lambda-invariant quintic.

At a point x fixed by a one-parameter subgroup lam, the normal space to
the orbit is

    T P^N|_x  minus  T(G.x)|_x
    = (coefficient weights) - {0}  -  (sl4 weights - Lie(G_x) weights).

Splitting the result by sign gives the two weighted projective factors of
the Kirwan fiber.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .lattice import (
    InternalInconsistency,
    InvalidArgument,
    MonomialConfiguration,
    OneParamSubgroup,
    _monomials,
    monomial_count,
    weight_pairing,
    zero_set,
)
from .linalg import rank

DEFAULT_SEED = 20240605

# dim of the boundary component attached to each published weight
PUBLISHED_BOUNDARY_DIMS = {
    (1, 0, 0, -1): 6,
    (2, 1, -1, -2): 1,
    (4, 2, -1, -5): 0,
    (2, 1, 0, -3): 1,
    (3, 0, -1, -2): 1,
    (5, 1, -2, -4): 0,
}


class WeightMultiset:
    """Finite multiset of integers."""

    __slots__ = ("_c",)

    def __init__(self, weights: Iterable[int] | Counter = ()):
        c = Counter(weights) if not isinstance(weights, Counter) else Counter(weights)
        self._c = Counter({int(k): v for k, v in c.items() if v > 0})

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "WeightMultiset":
        for k, v in counts.items():
            if v < 0:
                raise InvalidArgument(f"negative multiplicity {v} for weight {k}")
        return cls(Counter(counts))

    def count(self, w: int) -> int:
        return self._c.get(w, 0)

    def counts(self) -> dict[int, int]:
        return dict(sorted(self._c.items(), reverse=True))

    def __len__(self):
        return sum(self._c.values())

    def sorted(self, reverse: bool = True) -> list[int]:
        return sorted(self._c.elements(), reverse=reverse)

    def __iter__(self):
        return iter(self.sorted())

    def __eq__(self, other):
        if isinstance(other, WeightMultiset):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "WeightMultiset") -> "WeightMultiset":
        return WeightMultiset(self._c + other._c)

    def __sub__(self, other: "WeightMultiset") -> "WeightMultiset":
        out = Counter(self._c)
        for k, v in other._c.items():
            if out.get(k, 0) < v:
                raise InternalInconsistency(
                    f"multiset subtraction underflow at weight {k}: have {out.get(k, 0)}, need {v}"
                )
            out[k] -= v
        return WeightMultiset(out)

    def __neg__(self) -> "WeightMultiset":
        return WeightMultiset(Counter({-k: v for k, v in self._c.items()}))

    def is_symmetric(self) -> bool:
        return self == -self

    def __repr__(self):
        return f"WeightMultiset({self.sorted()})"


def adjoint_weights(lam: OneParamSubgroup) -> WeightMultiset:
    """Weights of lam acting on sl4 by conjugation: a_i - a_j and three zeros."""
    a = tuple(lam)
    w = [a[i] - a[j] for i in range(4) for j in range(4) if i != j]
    return WeightMultiset(w + [0, 0, 0])


def coefficient_weights(lam: OneParamSubgroup, d: int) -> WeightMultiset:
    """Weights of lam on the coefficient space of degree-d forms.

    The coefficient of a monomial m transforms with weight ``-lam.m``.
    """
    return WeightMultiset(-weight_pairing(lam, m) for m in _monomials(d))


def normal_weights(
    lam: OneParamSubgroup, d: int, stabilizer: WeightMultiset | None = None
) -> WeightMultiset:
    """Weights of lam on the normal space to the orbit at a lam-fixed point.

    ``stabilizer`` is the weight multiset of Lie(G_x) restricted to lam;
    by default only the line spanned by lam itself (a single 0).
    """
    if stabilizer is None:
        stabilizer = WeightMultiset([0])
    tangent_space = coefficient_weights(lam, d) - WeightMultiset([0])
    orbit_tangent = adjoint_weights(lam) - stabilizer
    return tangent_space - orbit_tangent


def kirwan_fiber(lam: OneParamSubgroup, d: int) -> tuple[WeightMultiset, WeightMultiset, int]:
    """(positive weights, |negative weights|, number of zero weights)."""
    nw = normal_weights(lam, d)
    pos = WeightMultiset(w for w in nw.sorted() if w > 0)
    neg = WeightMultiset(-w for w in nw.sorted() if w < 0)
    return pos, neg, nw.count(0)


def centralizer_dim(lam: OneParamSubgroup) -> int:
    """Dimension of the centralizer of lam in SL4: sum of squared weight
    multiplicities, minus one."""
    return sum(n * n for n in Counter(tuple(lam)).values()) - 1


def _random_point(zero: MonomialConfiguration, rng: random.Random) -> dict:
    point = {}
    for m in zero:
        c = 0
        while c == 0:
            c = rng.randint(-97, 97)
        point[m.exponents] = Fraction(c, rng.randint(1, 13))
    return point


def _orbit_rank(lam: OneParamSubgroup, d: int, F: dict) -> int:
    """Rank of the centralizer's tangent action at F, modulo the line of F."""
    a = tuple(lam)
    index = {m.exponents: k for k, m in enumerate(_monomials(d))}
    n = len(index)
    vectors = []
    for i in range(4):
        for j in range(4):
            if a[i] != a[j]:
                continue
            # x_j dF/dx_i
            v = [Fraction(0)] * n
            for e, c in F.items():
                if e[i] == 0:
                    continue
                t = list(e)
                t[i] -= 1
                t[j] += 1
                v[index[tuple(t)]] += c * e[i]
            vectors.append(v)
    base = [Fraction(0)] * n
    for e, c in F.items():
        base[index[e]] = c
    # the diagonal x_i dF/dx_i span the trace-zero directions plus F itself
    return rank(vectors + [base]) - 1


@dataclass
class BoundaryDim:
    dim_estimate: int
    orbit_rank: int
    seeds: list[int] = field(default_factory=list)


def boundary_dim(lam: OneParamSubgroup, d: int, seed: int = DEFAULT_SEED, attempts: int = 8) -> BoundaryDim:
    """Dimension of the quotient of the lam-fixed forms by the centralizer.

    Estimated as ``(#fixed monomials - 1) - orbit rank`` at a seeded random
    rational point.  Two independent samples must agree; otherwise fresh
    seeds are tried up to ``attempts`` times.
    """
    zero = zero_set(lam, d)
    if len(zero) == 0:
        raise InvalidArgument(f"{lam} fixes no monomial of degree {d}")
    rng = random.Random(seed)
    used = []
    for _ in range(attempts):
        s1, s2 = rng.randrange(2**31), rng.randrange(2**31)
        r1 = _orbit_rank(lam, d, _random_point(zero, random.Random(s1)))
        r2 = _orbit_rank(lam, d, _random_point(zero, random.Random(s2)))
        used += [s1, s2]
        if r1 == r2:
            return BoundaryDim(len(zero) - 1 - r1, r1, used)
    raise InternalInconsistency(f"orbit rank did not stabilize after {attempts} attempts")


@dataclass
class BoundaryReport:
    lam: OneParamSubgroup
    degree: int
    zero_monomials: MonomialConfiguration
    centralizer_dim: int
    normal_weights: WeightMultiset
    fiber_pos: WeightMultiset
    fiber_neg: WeightMultiset
    fiber_zero_count: int
    dim_estimate: int
    orbit_rank: int
    seed: int
    paper_dim: int | None = None
    label: str | None = None

    @property
    def discrepancy(self) -> bool:
        return self.paper_dim is not None and self.paper_dim != self.dim_estimate

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "lambda": list(self.lam.weights),
            "degree": self.degree,
            "zero_monomials": [list(m) for m in self.zero_monomials.as_tuples()],
            "zero_monomial_count": len(self.zero_monomials),
            "centralizer_dim": self.centralizer_dim,
            "normal_weight_count": len(self.normal_weights),
            "normal_weights": self.normal_weights.sorted(),
            "fiber_pos": self.fiber_pos.sorted(),
            "fiber_neg": self.fiber_neg.sorted(),
            "fiber_zero_count": self.fiber_zero_count,
            "dim_estimate": self.dim_estimate,
            "orbit_rank": self.orbit_rank,
            "seed": self.seed,
            "paper_dim": self.paper_dim,
            "discrepancy": self.discrepancy,
        }


def boundary_report(lam: OneParamSubgroup, d: int = 5, seed: int = DEFAULT_SEED, label: str | None = None) -> BoundaryReport:
    nw = normal_weights(lam, d)
    pos, neg, zc = kirwan_fiber(lam, d)
    bd = boundary_dim(lam, d, seed)
    published = PUBLISHED_BOUNDARY_DIMS.get(tuple(lam)) if d == 5 else None
    if len(pos) + len(neg) + zc != len(nw):
        raise InternalInconsistency("fiber split lost weights")
    return BoundaryReport(
        lam=lam,
        degree=d,
        zero_monomials=zero_set(lam, d),
        centralizer_dim=centralizer_dim(lam),
        normal_weights=nw,
        fiber_pos=pos,
        fiber_neg=neg,
        fiber_zero_count=zc,
        dim_estimate=bd.dim_estimate,
        orbit_rank=bd.orbit_rank,
        seed=seed,
        paper_dim=published,
        label=label,
    )


def expected_normal_count(lam: OneParamSubgroup, d: int) -> int:
    """``C(d+3,3) - 1 - 14``: one Euler relation, sl4 minus the lam line."""
    return monomial_count(d) - 1 - 14

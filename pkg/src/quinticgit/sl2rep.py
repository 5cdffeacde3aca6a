"""SL2 representations as multiplicity maps ``{n: mult}`` of ``Sym^n``.

Everything goes through weight multisets: the character of ``Sym^n`` is
``{n, n-2, ..., -n}``, products and symmetric powers are computed on
characters and decomposed back by peeling off the top weight.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .lattice import InternalInconsistency, InvalidArgument
from .luna import WeightMultiset


class SL2Rep:
    __slots__ = ("_m",)

    def __init__(self, multiplicities: Mapping[int, int] | Iterable[int] = ()):
        if isinstance(multiplicities, Mapping):
            items = multiplicities.items()
        else:
            items = Counter(multiplicities).items()
        m = {}
        for n, k in items:
            n, k = int(n), int(k)
            if n < 0:
                raise InvalidArgument(f"highest weight must be non-negative, got {n}")
            if k < 0:
                raise InvalidArgument(f"negative multiplicity {k} for Sym^{n}")
            if k:
                m[n] = m.get(n, 0) + k
        self._m = dict(sorted(m.items(), reverse=True))

    @classmethod
    def sym(cls, n: int, mult: int = 1) -> "SL2Rep":
        return cls({n: mult})

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(self._m)

    @property
    def dim(self) -> int:
        return sum(k * (n + 1) for n, k in self._m.items())

    def __eq__(self, other):
        return isinstance(other, SL2Rep) and self._m == other._m

    def __hash__(self):
        return hash(tuple(self._m.items()))

    def __add__(self, other: "SL2Rep") -> "SL2Rep":
        c = Counter(self._m)
        c.update(other._m)
        return SL2Rep(c)

    def __sub__(self, other: "SL2Rep") -> "SL2Rep":
        out = dict(self._m)
        for n, k in other._m.items():
            if out.get(n, 0) < k:
                raise InternalInconsistency(f"cannot remove {k}*Sym^{n} from {self}")
            out[n] -= k
        return SL2Rep(out)

    def __mul__(self, other: "SL2Rep") -> "SL2Rep":
        return tensor(self, other)

    def to_text(self) -> str:
        if not self._m:
            return "0"
        parts = []
        for n, k in self._m.items():
            parts.append(f"Sym^{n}" if k == 1 else f"{k}*Sym^{n}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"n": n, "mult": k} for n, k in self._m.items()]

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"SL2Rep({self._m})"


TRIVIAL = SL2Rep({0: 1})


def character(R: SL2Rep) -> WeightMultiset:
    c = Counter()
    for n, k in R.multiplicities.items():
        for w in range(-n, n + 1, 2):
            c[w] += k
    return WeightMultiset(c)


def decompose_weights(w: WeightMultiset) -> SL2Rep:
    """Peel irreducibles off the top weight until nothing is left."""
    c = Counter(w.counts())
    for k, v in sorted(c.items()):
        if c.get(-k, 0) != v:
            raise InvalidArgument(f"weight multiset is not symmetric: weight {k} has {v}, weight {-k} has {c.get(-k, 0)}")
    out = Counter()
    while c:
        top = max(c)
        if top < 0:
            raise InvalidArgument(f"weight multiset not realizable: stray weight {top}")
        mult = c[top]
        for x in range(-top, top + 1, 2):
            if c.get(x, 0) < mult:
                raise InvalidArgument(f"weight multiset not realizable: missing weight {x} under Sym^{top}")
            c[x] -= mult
            if c[x] == 0:
                del c[x]
        out[top] += mult
    return SL2Rep(out)


def tensor(A: SL2Rep, B: SL2Rep) -> SL2Rep:
    """Clebsch-Gordan: Sym^a x Sym^b = sum of Sym^(a+b-2k), 0 <= k <= min(a,b)."""
    out = Counter()
    for a, ka in A.multiplicities.items():
        for b, kb in B.multiplicities.items():
            for k in range(min(a, b) + 1):
                out[a + b - 2 * k] += ka * kb
    return SL2Rep(out)


def _sym_weights(k: int, weights: tuple[int, ...]) -> Counter:
    # counts of k-element multisubsets by weight sum; dp over distinct weights
    distinct = Counter(weights)
    # polynomial in (t, s): each weight w with multiplicity m contributes
    # 1 / (1 - s t^w)^m; track only s-degree <= k
    dp: list[Counter] = [Counter() for _ in range(k + 1)]
    dp[0][0] = 1
    for w, m in sorted(distinct.items()):
        for _ in range(m):
            # multiply by 1/(1 - s t^w): unbounded knapsack in s
            for j in range(1, k + 1):
                for s, cnt in dp[j - 1].items():
                    dp[j][s + w] += cnt
    return dp[k]


def sym_power(k: int, R: SL2Rep) -> SL2Rep:
    if k < 0:
        raise InvalidArgument(f"symmetric power must be non-negative, got {k}")
    if k == 0:
        return TRIVIAL
    weights = tuple(character(R).sorted())
    return decompose_weights(WeightMultiset(_sym_weights(k, weights)))


@dataclass
class SliceReport:
    W: SL2Rep
    sym5: SL2Rep
    adjoint: SL2Rep
    stabilizer: SL2Rep
    orbit_tangent: SL2Rep
    normal: SL2Rep
    expected_normal: SL2Rep

    @property
    def ok(self) -> bool:
        return self.normal == self.expected_normal

    def steps(self) -> list[tuple[str, SL2Rep]]:
        return [
            ("W", self.W),
            ("Sym^5(W)", self.sym5),
            ("adjoint", self.adjoint),
            ("stabilizer", self.stabilizer),
            ("T_orbit", self.orbit_tangent),
            ("N_x", self.normal),
            ("Sym^5 x Sym^5 + Sym^6", self.expected_normal),
        ]

    def as_dict(self) -> dict:
        return {
            "steps": [
                {"name": name, "rep": rep.to_json(), "text": rep.to_text(), "dim": rep.dim}
                for name, rep in self.steps()
            ],
            "match": self.ok,
        }


@lru_cache(maxsize=1)
def slice_report() -> SliceReport:
    """Normal space to the orbit of the 2Q+H quintic as an SL2 representation.

    The stabilizer SL2 acts on the coordinates through the conic
    parametrization, so H^0(O(1)) restricts to Sym^2 + Sym^0.
    """
    W = SL2Rep({2: 1, 0: 1})
    sym5 = sym_power(5, W)
    adjoint = tensor(W, W) - TRIVIAL
    stab = SL2Rep.sym(2)
    orbit_tangent = adjoint - stab
    normal = sym5 - TRIVIAL - orbit_tangent
    expected = tensor(SL2Rep.sym(5), SL2Rep.sym(5)) + SL2Rep.sym(6)
    rep = SliceReport(W, sym5, adjoint, stab, orbit_tangent, normal, expected)
    if not rep.ok:
        raise InternalInconsistency(f"normal space {normal} does not match {expected}")
    return rep


# torus of the stabilizer SL2 inside SL4, acting on (x0,x1,x2,x3)
CONIC_TORUS = (2, 0, 0, -2)

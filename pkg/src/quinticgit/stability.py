"""Torus stability of monomial configurations.

For the diagonal torus the numerical criterion is pure convex geometry: a
configuration is stable iff the centroid of the simplex lies in the
interior of the convex hull of its exponent vectors, semistable iff it lies
in the hull.  All verdicts are decided by exact rational linear programs
and come with a witness that can be re-checked independently.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

from . import simplex
from .critical import CriticalRecord, enumerate_critical
from .lattice import (
    ExponentVector,
    InternalInconsistency,
    InvalidArgument,
    MonomialConfiguration,
    OneParamSubgroup,
    centroid,
    config_mask,
    weight_pairing,
)
from .linalg import nullspace, primitive_integer, rank, solve_square


class Verdict(str, enum.Enum):
    INSIDE = "Inside"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


class TorusVerdict(str, enum.Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"


_VERDICT_MAP = {
    Verdict.INSIDE: TorusVerdict.STABLE,
    Verdict.BOUNDARY: TorusVerdict.STRICTLY_SEMISTABLE,
    Verdict.OUTSIDE: TorusVerdict.UNSTABLE,
}


@dataclass(frozen=True)
class HullVerdict:
    """Hull membership of a point together with its certificate.

    ``barycentric`` (Inside/Boundary) writes the point as a convex
    combination of support monomials.  ``lam`` is a primitive sum-zero
    weight: separating for Outside (``lam.(m - p) > 0`` on the support),
    supporting for Boundary (``lam.(m - p) >= 0`` on the support).
    """

    verdict: Verdict
    point: tuple[Fraction, ...]
    barycentric: tuple[tuple[ExponentVector, Fraction], ...] | None = None
    lam: tuple[int, int, int, int] | None = None

    def check(self, cfg: MonomialConfiguration) -> bool:
        p = self.point
        if self.barycentric is not None:
            coeffs = [c for _, c in self.barycentric]
            if any(c < 0 for c in coeffs) or sum(coeffs) != 1:
                return False
            for k in range(4):
                if sum(c * m[k] for m, c in self.barycentric) != p[k]:
                    return False
            if any(m not in cfg for m, _ in self.barycentric):
                return False
        if self.lam is not None:
            if sum(self.lam) != 0 or not any(self.lam):
                return False
            vals = [weight_pairing(self.lam, m) - weight_pairing(self.lam, p) for m in cfg]
            if self.verdict is Verdict.OUTSIDE and not all(v > 0 for v in vals):
                return False
            if self.verdict is Verdict.BOUNDARY and min(vals) < 0:
                return False
        if self.verdict is Verdict.OUTSIDE:
            return self.lam is not None and self.barycentric is None
        if self.verdict is Verdict.BOUNDARY:
            return self.lam is not None and self.barycentric is not None
        return self.barycentric is not None and self.lam is None


def mu(lam: OneParamSubgroup | Sequence[int], cfg: MonomialConfiguration) -> int:
    """Minimum weight of ``lam`` over the support."""
    if len(cfg) == 0:
        raise InvalidArgument("mu of an empty configuration")
    if len(tuple(lam)) != 4:
        raise InvalidArgument("weight vector must have 4 entries")
    return min(weight_pairing(lam, m) for m in cfg)


def _as_point(p) -> tuple[Fraction, ...]:
    p = tuple(Fraction(x) for x in p)
    if len(p) != 4:
        raise InvalidArgument("points live in 4 coordinates")
    return p


def _convex_combination(p, pts) -> list[Fraction] | None:
    """Weights w >= 0 with sum 1 and sum w_i pts_i = p, or None."""
    n = len(pts)
    A = [[1] * n] + [[pt[k] for pt in pts] for k in range(3)]
    b = [1] + list(p[:3])
    res = simplex.solve([0] * n, A, b)
    if res.status != simplex.OPTIMAL:
        return None
    return res.x


def _sum_zero_lp(diffs, rhs_row, equality_total=False):
    """Find lam = (b0, b1, b2, -b0-b1-b2) with lam.diff >= rhs for every diff.

    With ``equality_total`` the extra normalisation ``sum lam.diff = 1`` is
    imposed and the inequalities become ``>= 0``.  Returns the integer
    direction or None if infeasible.
    """
    # reduced coordinates: lam.v = sum_k b_k (v_k - v_3)
    red = [[v[k] - v[3] for k in range(3)] for v in diffs]
    n = len(red)
    # variables: b+ (3), b- (3), slack (n)
    ncol = 6 + n
    A, b = [], []
    for i, r in enumerate(red):
        row = [0] * ncol
        for k in range(3):
            row[k] = r[k]
            row[3 + k] = -r[k]
        row[6 + i] = -1
        A.append(row)
        b.append(rhs_row)
    if equality_total:
        row = [0] * ncol
        for k in range(3):
            tot = sum(r[k] for r in red)
            row[k] = tot
            row[3 + k] = -tot
        A.append(row)
        b.append(1)
    res = simplex.solve([0] * ncol, A, b)
    if res.status != simplex.OPTIMAL:
        return None
    bs = [res.x[k] - res.x[3 + k] for k in range(3)]
    lam = primitive_integer(bs + [-sum(bs)])
    return lam


def hull_membership(p, cfg: MonomialConfiguration) -> HullVerdict:
    """Locate ``p`` relative to the hull of the support, inside the
    3-dimensional hyperplane of degree-d points."""
    if len(cfg) == 0:
        raise InvalidArgument("hull of an empty configuration")
    p = _as_point(p)
    if sum(p) != cfg.degree:
        raise InvalidArgument("point does not lie on the degree hyperplane")
    pts = list(cfg.support)
    diffs = [tuple(Fraction(m[k]) - p[k] for k in range(4)) for m in pts]

    w = _convex_combination(p, pts)
    if w is None:
        lam = _sum_zero_lp(diffs, 1)
        if lam is None:
            raise InternalInconsistency("no convex combination and no separating weight")
        out = HullVerdict(Verdict.OUTSIDE, p, lam=lam)
    else:
        bary = tuple((m, c) for m, c in zip(pts, w) if c != 0)
        flat = nullspace([list(v) for v in diffs] + [[1, 1, 1, 1]], 4)
        if flat:
            # support spans less than the full hyperplane
            lam = primitive_integer(flat[0])
        else:
            lam = _sum_zero_lp(diffs, 0, equality_total=True)
        if lam is None:
            out = HullVerdict(Verdict.INSIDE, p, barycentric=bary)
        else:
            out = HullVerdict(Verdict.BOUNDARY, p, barycentric=bary, lam=lam)
    if not out.check(cfg):
        raise InternalInconsistency(f"hull witness failed to verify: {out}")
    return out


def torus_verdict(cfg: MonomialConfiguration) -> TorusVerdict:
    return _VERDICT_MAP[hull_membership(centroid(cfg.degree), cfg).verdict]


# ---------------------------------------------------------------------------
# certificates against the critical list


@dataclass(frozen=True)
class Certificate:
    """``cfg`` moved by ``perm`` (x_k -> x_perm[k]) lies in M+ of ``record``."""

    perm: tuple[int, int, int, int]
    index: int
    record: CriticalRecord
    mu: int

    @property
    def lam(self) -> OneParamSubgroup:
        return self.record.lam

    @property
    def label(self) -> str:
        return self.record.label or f"critical[{self.index}]"

    @property
    def original_lam(self) -> tuple[int, int, int, int]:
        """The record's weight pulled back to the input coordinates."""
        w = self.record.lam.weights
        return tuple(w[self.perm[k]] for k in range(4))


def nonstable_certificate(
    cfg: MonomialConfiguration, records: Sequence[CriticalRecord] | None = None
) -> Certificate | None:
    """First (permutation, critical record) pair with the permuted support
    inside the record's non-negative set.

    Permutations are tried in lexicographic order, records in enumeration
    order.  A certificate proves non-stability; None only says that no
    coordinate permutation works.
    """
    if records is None:
        records = enumerate_critical(cfg.degree)
    masks = [config_mask(r.nonneg) for r in records]
    for perm in permutations(range(4)):
        moved = cfg.permuted(perm)
        m = config_mask(moved)
        for i, (rec, rm) in enumerate(zip(records, masks)):
            if m & ~rm == 0:
                value = mu(rec.lam, moved)
                if value < 0:
                    raise InternalInconsistency("certificate with negative mu")
                return Certificate(tuple(perm), i, rec, value)
    return None


# ---------------------------------------------------------------------------
# worst one-parameter subgroup


@dataclass(frozen=True)
class WorstOneParam:
    lam: OneParamSubgroup
    squared_ratio: Fraction
    nearest_point: tuple[Fraction, ...]


def _extreme_points(pts: list[tuple[Fraction, ...]]) -> list[tuple[Fraction, ...]]:
    uniq = sorted(set(pts), reverse=True)
    out = []
    for i, q in enumerate(uniq):
        rest = uniq[:i] + uniq[i + 1:]
        if not rest or _convex_combination(q, rest) is None:
            out.append(q)
    return out


def _project_origin(face: Sequence[tuple[Fraction, ...]]):
    """Nearest point to 0 on the affine hull of ``face`` with its affine
    coordinates, or None if the points are affinely dependent."""
    s0 = face[0]
    dirs = [tuple(a - b for a, b in zip(s, s0)) for s in face[1:]]
    if not dirs:
        return s0, [Fraction(1)]

    def dot(u, v):
        return sum(a * b for a, b in zip(u, v))

    G = [[dot(u, v) for v in dirs] for u in dirs]
    rhs = [-dot(u, s0) for u in dirs]
    t = solve_square(G, rhs)
    if t is None:
        return None
    q = tuple(s0[k] + sum(tj * d[k] for tj, d in zip(t, dirs)) for k in range(4))
    return q, [1 - sum(t)] + list(t)


def nearest_point(pts: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Exact nearest point to the origin of conv(pts), by face enumeration.

    The points must span at most a 3-dimensional linear space (here: the
    sum-zero hyperplane), so an optimal face has at most 3 vertices.
    """
    pts = [tuple(Fraction(x) for x in p) for p in pts]
    ext = _extreme_points(pts)
    best = None
    for k in (1, 2, 3):
        for face in combinations(ext, k):
            res = _project_origin(face)
            if res is None:
                continue
            q, coords = res
            if any(c < 0 for c in coords):
                continue
            n2 = sum(x * x for x in q)
            if best is None or n2 < best[0]:
                best = (n2, q)
    if best is None:
        raise InternalInconsistency("no feasible face found")
    n2, q = best
    for x in pts:
        if sum(a * (b - a) for a, b in zip(q, x)) < 0:
            raise InternalInconsistency("nearest point fails the optimality check")
    return q


def worst_1ps(cfg: MonomialConfiguration) -> WorstOneParam | None:
    """Direction maximizing ``mu(lam, cfg) / |lam|`` for unstable configurations.

    Returns None for (semi)stable input.  ``squared_ratio`` is
    ``mu(lam)^2 / |lam|^2``, equal to the squared distance from the
    centroid to the hull of the support.
    """
    if torus_verdict(cfg) is not TorusVerdict.UNSTABLE:
        return None
    c = centroid(cfg.degree)
    pts = [tuple(Fraction(m[k]) - c[k] for k in range(4)) for m in cfg]
    q = nearest_point(pts)
    lam = OneParamSubgroup(primitive_integer(q))
    value = mu(lam, cfg)
    ratio = Fraction(value * value, lam.norm_squared())
    if ratio != sum(x * x for x in q):
        raise InternalInconsistency("worst direction ratio mismatch")
    return WorstOneParam(lam, ratio, q)


# ---------------------------------------------------------------------------
# Kempf flags


@dataclass(frozen=True)
class KempfFlag:
    """Flag point in line in plane attached to a weight vector.

    ``point`` is the index k of the coordinate point p_k, ``line`` the pair
    of coordinates whose vanishing defines it, ``plane`` the coordinate of
    the plane V(x_plane).  Members are None when repeated weights leave
    them undetermined.
    """

    point: int | None
    line: tuple[int, int] | None
    plane: int | None
    partial: bool

    def describe(self) -> str:
        parts = []
        if self.point is not None:
            parts.append(f"p{self.point}")
        if self.line is not None:
            parts.append(f"V(x{self.line[0]},x{self.line[1]})")
        if self.plane is not None:
            parts.append(f"V(x{self.plane})")
        text = " in ".join(parts)
        return text + (" (partial)" if self.partial else "")


def kempf_flag(lam: OneParamSubgroup | Sequence[int]) -> KempfFlag:
    """Flag of subspaces on which the weights of ``lam`` are largest.

    Coordinates are ranked by decreasing weight (ties by index); the plane
    is cut by the heaviest coordinate, the line by the heaviest two, and
    the point is the lightest coordinate point.
    """
    w = tuple(lam)
    if len(w) != 4:
        raise InvalidArgument("weight vector must have 4 entries")
    if not any(w):
        raise InvalidArgument("the zero weight has no flag")
    order = sorted(range(4), key=lambda k: (-w[k], k))
    s = [w[k] for k in order]
    cuts = [k + 1 for k in range(3) if s[k] > s[k + 1]]
    plane = order[0] if 1 in cuts else None
    line = tuple(sorted(order[:2])) if 2 in cuts else None
    point = order[3] if 3 in cuts else None
    return KempfFlag(point, line, plane, partial=len(cuts) < 3)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StabilityReport:
    degree: int
    torus_verdict: TorusVerdict
    hull: HullVerdict
    certificate: Certificate | None
    worst: WorstOneParam | None
    flag: KempfFlag | None


def analyze(cfg: MonomialConfiguration) -> StabilityReport:
    hull = hull_membership(centroid(cfg.degree), cfg)
    verdict = _VERDICT_MAP[hull.verdict]
    cert = None if verdict is TorusVerdict.STABLE else nonstable_certificate(cfg)
    worst = worst_1ps(cfg) if verdict is TorusVerdict.UNSTABLE else None
    flag = kempf_flag(cert.original_lam) if cert is not None else None
    return StabilityReport(cfg.degree, verdict, hull, cert, worst, flag)


def affine_dimension(cfg: MonomialConfiguration) -> int:
    pts = list(cfg)
    if not pts:
        return -1
    base = pts[0]
    return rank([[a - b for a, b in zip(m, base)] for m in pts[1:]]) if len(pts) > 1 else 0

"""Critical one-parameter subgroups and maximal non-stable configurations.

A configuration is not stable as soon as, in some coordinates, it sits
inside the non-negative set ``M+(lam)`` of a normalized ``lam``.  Only the
inclusion-maximal such sets matter.  Every maximal set is cut out by a
hyperplane through the centroid and two monomials, so it suffices to try
the ``lam`` spanned by pairs of monomials.
"""

from __future__ import annotations

import enum
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _kernels
from .lattice import (
    ExponentVector,
    InvalidArgument,
    MonomialConfiguration,
    OneParamSubgroup,
    _monomials,
    centroid,
    nonneg_set,
    support_mask,
    zero_set,
)
from .linalg import cross4

log = logging.getLogger(__name__)


class Kind(str, enum.Enum):
    MINIMAL_ORBIT_BOUNDARY = "MinimalOrbitBoundary"
    UNSTABLE_CONE = "UnstableCone"


# The list published for quintics, in its published order.  Used to label
# records and to pick the representative when several weight vectors cut out
# the same maximal set.
PUBLISHED_D5 = (
    (1, 0, 0, -1),
    (2, 1, -1, -2),
    (4, 2, -1, -5),
    (2, 1, 0, -3),
    (3, 0, -1, -2),
    (5, 1, -2, -4),
    (2, 1, 1, -4),
    (2, 2, -1, -3),
    (7, 1, -4, -4),
    (8, -1, -2, -5),
)
PUBLISHED = {5: PUBLISHED_D5}


@dataclass(frozen=True)
class CriticalRecord:
    lam: OneParamSubgroup
    nonneg: MonomialConfiguration
    zero: MonomialConfiguration
    kind: Kind
    equivalents: tuple[OneParamSubgroup, ...] = field(default=())
    label: str | None = None

    @property
    def degree(self) -> int:
        return self.nonneg.degree

    def mask(self) -> int:
        return support_mask(self.lam.weights, self.degree)


def candidate_from_pair(d: int, m1: ExponentVector, m2: ExponentVector) -> OneParamSubgroup | None:
    """The primitive weight vector killing ``m1``, ``m2`` and the centroid.

    Returned in the original coordinates, with its first non-zero entry
    positive; None when the two conditions do not cut out a line.
    """
    if sum(m1) != d or sum(m2) != d:
        raise InvalidArgument(f"monomials must have degree {d}")
    v = cross4(tuple(m1), tuple(m2), (1, 1, 1, 1))
    if not any(v):
        return None
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    v = tuple(x // g for x in v)
    for x in v:
        if x:
            if x < 0:
                v = tuple(-y for y in v)
            break
    return OneParamSubgroup(v)


def candidate_weights(d: int) -> set[tuple[int, int, int, int]]:
    """Normalized forms of both signs of every pair-derived candidate."""
    mons = _monomials(d)
    out = set()
    for i, m1 in enumerate(mons):
        for m2 in mons[i + 1:]:
            lam = candidate_from_pair(d, m1, m2)
            if lam is None:
                continue
            out.add(lam.normalize().weights)
            out.add((-lam).normalize().weights)
    return out


def _hull_contains_centroid(zero: MonomialConfiguration) -> bool:
    from .stability import Verdict, hull_membership

    if len(zero) == 0:
        return False
    return hull_membership(centroid(zero.degree), zero).verdict is not Verdict.OUTSIDE


def classify_critical(rec: CriticalRecord) -> Kind:
    """Boundary-producing iff the centroid lies in the hull of the fixed monomials."""
    if _hull_contains_centroid(rec.zero):
        return Kind.MINIMAL_ORBIT_BOUNDARY
    return Kind.UNSTABLE_CONE


def _pick_representative(d: int, group: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
    preferred = [w for w in PUBLISHED.get(d, ()) if w in group]
    if preferred:
        return preferred[0]
    return min(group)


@lru_cache(maxsize=16)
def _enumerate_critical(d: int) -> tuple[CriticalRecord, ...]:
    cands = candidate_weights(d)
    masks = {w: support_mask(w, d) for w in cands}
    distinct = set(masks.values())
    maximal = {
        m for m in distinct
        if not any(o != m and (m & o) == m for o in distinct)
    }
    groups: dict[int, list[tuple[int, ...]]] = {}
    for w, m in masks.items():
        if m in maximal:
            groups.setdefault(m, []).append(w)

    published = PUBLISHED.get(d, ())
    records = []
    for m, group in groups.items():
        group.sort()
        rep = _pick_representative(d, group)
        lam = OneParamSubgroup(rep)
        zero = zero_set(lam, d)
        kind = Kind.MINIMAL_ORBIT_BOUNDARY if _hull_contains_centroid(zero) else Kind.UNSTABLE_CONE
        label = f"lambda{published.index(rep) + 1}" if rep in published else None
        records.append(
            CriticalRecord(
                lam=lam,
                nonneg=nonneg_set(lam, d),
                zero=zero,
                kind=kind,
                equivalents=tuple(OneParamSubgroup(w) for w in group),
                label=label,
            )
        )

    def order(rec: CriticalRecord):
        if rec.lam.weights in published:
            return (0, published.index(rec.lam.weights), ())
        boundary = rec.kind is Kind.MINIMAL_ORBIT_BOUNDARY
        return (1, 0 if boundary else 1, rec.lam.weights)

    records.sort(key=order)
    return tuple(records)


def enumerate_critical(d: int) -> list[CriticalRecord]:
    """Critical one-parameter subgroups of degree ``d``.

    For d = 5 the records come out in the published order (boundary
    producing ones first); for other degrees boundary-producing records
    precede unstable-cone ones and ties are broken lexicographically.
    """
    if not isinstance(d, int) or d < 2:
        raise InvalidArgument(f"degree must be >= 2, got {d!r}")
    return list(_enumerate_critical(d))


def published_index(lam: OneParamSubgroup | Sequence[int], d: int = 5) -> int | None:
    w = tuple(lam)
    table = PUBLISHED.get(d, ())
    return table.index(w) + 1 if w in table else None


def critical_by_label(label: str | int, d: int = 5) -> CriticalRecord:
    """Look up ``lambda7`` / ``7`` among the degree-d records."""
    if isinstance(label, str):
        label = label.strip().lower().removeprefix("lambda").removeprefix("l")
    k = int(label)
    recs = enumerate_critical(d)
    for rec in recs:
        if rec.label == f"lambda{k}":
            return rec
    if 1 <= k <= len(recs):
        return recs[k - 1]
    raise InvalidArgument(f"no critical record {label!r} in degree {d}")


# ---------------------------------------------------------------------------
# completeness scan


@dataclass
class CompletenessReport:
    degree: int
    bound: int
    scanned: int
    violations: list[tuple[int, int, int, int]]
    backend: str

    @property
    def ok(self) -> bool:
        return not self.violations


def _crit_matrix(d: int) -> tuple[np.ndarray, np.ndarray]:
    mons = _monomials(d)
    exps = np.array([m.exponents for m in mons], dtype=np.int64)
    recs = enumerate_critical(d)
    crit = np.zeros((len(recs), len(mons)), dtype=bool)
    for i, rec in enumerate(recs):
        for j, m in enumerate(mons):
            crit[i, j] = m in rec.nonneg
    return exps, crit


def _slab_job(args):
    a0, bound, exps, crit, backend = args
    fn = _kernels.available_backends()[backend]
    return a0, fn(a0, bound, exps, crit)


def verify_completeness(
    d: int,
    bound: int,
    *,
    workers: int = 1,
    progress: Callable[[int, int, int], None] | None = None,
    backend: str | None = None,
) -> CompletenessReport:
    """Check every normalized primitive weight with ``|a_i| <= bound``.

    Each scanned weight's non-negative set must lie inside the
    non-negative set of some critical record, in the same coordinates.
    ``progress(a0, bound, scanned_so_far)`` is called after each slab of
    fixed top weight ``a0``.
    """
    if not isinstance(bound, int) or bound < 1:
        raise InvalidArgument(f"bound must be a positive integer, got {bound!r}")
    exps, crit = _crit_matrix(d)
    if backend is None:
        backend = _kernels.BACKEND
    fn = _kernels.available_backends().get(backend)
    if fn is None:
        raise InvalidArgument(f"scan backend {backend!r} is not available")

    scanned = 0
    violations: list[tuple[int, int, int, int]] = []
    slabs = range(1, bound + 1)
    if workers <= 1:
        results: Iterable = ((a0, fn(a0, bound, exps, crit)) for a0 in slabs)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        # large a0 slabs are the expensive ones; submit them first
        futs = {a0: pool.submit(_slab_job, (a0, bound, exps, crit, backend)) for a0 in reversed(slabs)}
        results = (futs[a0].result() for a0 in slabs)
    try:
        for a0, (count, bad) in results:
            scanned += count
            violations.extend(bad)
            if progress is not None:
                progress(a0, bound, scanned)
    finally:
        if pool is not None:
            pool.shutdown()
    violations.sort()
    log.info("scanned %d weight vectors up to %d, %d violations", scanned, bound, len(violations))
    return CompletenessReport(d, bound, scanned, violations, backend)

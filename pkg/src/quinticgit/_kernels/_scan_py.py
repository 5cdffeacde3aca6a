"""NumPy fallback for the normalized-weight scan."""

from __future__ import annotations

import numpy as np


def slab_weights(a0: int, bound: int) -> np.ndarray:
    """All normalized (a0, a1, a2, a3) with the given top weight and |a_i| <= bound.

    Rows are ordered by descending a1, then descending a2; primitivity is
    not yet imposed.
    """
    a1_lo = -((a0) // 3)  # ceil(-a0/3)
    blocks = []
    for a1 in range(a0, a1_lo - 1, -1):
        hi = min(a1, bound - a0 - a1)
        lo = -((a0 + a1) // 2)  # ceil(-(a0+a1)/2)
        if hi < lo:
            continue
        a2 = np.arange(hi, lo - 1, -1, dtype=np.int64)
        blk = np.empty((a2.size, 4), dtype=np.int64)
        blk[:, 0] = a0
        blk[:, 1] = a1
        blk[:, 2] = a2
        blk[:, 3] = -(a0 + a1) - a2
        blocks.append(blk)
    if not blocks:
        return np.empty((0, 4), dtype=np.int64)
    return np.concatenate(blocks)


def scan_slab(a0, bound, exps, crit):
    """Scan every primitive normalized weight vector with top entry ``a0``.

    ``exps`` is the (N, 4) exponent matrix of the degree-d monomials and
    ``crit`` a (K, N) boolean matrix of the maximal non-negative sets.
    Returns ``(scanned, violations)`` where violations lists the weight
    vectors whose non-negative set lies in none of the K sets.
    """
    lam = slab_weights(a0, bound)
    if lam.shape[0] == 0:
        return 0, []
    g = np.gcd.reduce(np.abs(lam), axis=1)
    lam = lam[g == 1]
    if lam.shape[0] == 0:
        return 0, []
    exps = np.asarray(exps, dtype=np.int64)
    outside = (~np.asarray(crit, dtype=bool)).astype(np.int32)
    violations = []
    chunk = 65536
    for start in range(0, lam.shape[0], chunk):
        part = lam[start:start + chunk]
        nonneg = (part @ exps.T) >= 0
        misses = nonneg.astype(np.int32) @ outside.T
        bad = ~(misses == 0).any(axis=1)
        if bad.any():
            violations.extend(tuple(int(x) for x in row) for row in part[bad])
    return int(lam.shape[0]), violations

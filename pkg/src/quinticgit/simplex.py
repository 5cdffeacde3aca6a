"""Dense two-phase simplex over ``fractions.Fraction``.

Only meant for the tiny programs that appear in hull-membership tests (a
handful of equality rows, at most a few hundred columns).  Pivoting uses
Bland's rule, so the method terminates without any anti-cycling tricks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: list[Fraction] | None = None
    value: Fraction | None = None


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int):
    pr = T[r]
    pv = pr[c]
    if pv != 1:
        T[r] = pr = [v / pv for v in pr]
    for i, row in enumerate(T):
        if i != r:
            f = row[c]
            if f:
                T[i] = [a - f * b for a, b in zip(row, pr)]
    basis[r] = c


def _run(T, basis, ncols, allowed):
    """Minimize the objective stored in the last row of ``T``.

    The objective row holds reduced costs; the last column is the rhs.
    """
    m = len(basis)
    obj = T[m]
    while True:
        enter = None
        for j in range(ncols):
            if allowed[j] and obj[j] < 0:
                enter = j
                break
        if enter is None:
            return OPTIMAL
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return UNBOUNDED
        _pivot(T, basis, leave, enter)
        obj = T[m]


def solve(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Minimize ``c.x`` subject to ``A x = b`` and ``x >= 0``, exactly."""
    m = len(A)
    n = len(c)
    c = [Fraction(v) for v in c]
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        rows.append((row, rhs))

    # phase 1: artificial columns n..n+m-1
    ncols = n + m
    T = []
    for i, (row, rhs) in enumerate(rows):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append(row + art + [rhs])
    basis = list(range(n, n + m))
    obj = [Fraction(0)] * (ncols + 1)
    for row in T:
        for j in range(n):
            obj[j] -= row[j]
        obj[-1] -= row[-1]
    T.append(obj)
    _run(T, basis, ncols, [True] * ncols)
    if T[m][-1] != 0:
        return LPResult(INFEASIBLE)

    # drive remaining artificials out of the basis
    for i in range(m):
        if basis[i] >= n:
            for j in range(n):
                if T[i][j] != 0:
                    _pivot(T, basis, i, j)
                    break
    keep = [i for i in range(m) if basis[i] < n]
    T = [T[i] for i in keep]
    basis = [basis[i] for i in keep]
    m = len(basis)

    # phase 2
    obj = c[:] + [Fraction(0)] * m + [Fraction(0)]
    for i in range(m):
        cb = c[basis[i]]
        if cb:
            obj = [o - cb * t for o, t in zip(obj, T[i])]
    T.append(obj)
    allowed = [True] * n + [False] * (ncols - n)
    status = _run(T, basis, ncols, allowed)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i in range(m):
        x[basis[i]] = T[i][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, x, value)

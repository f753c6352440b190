"""Dense Gaussian elimination over an exact field.

Matrices are lists of rows of field scalars.  Pivots are chosen as the first
nonzero entry scanning columns left to right, which makes every result a
deterministic function of the input.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .field import FieldCtx, Scalar

Matrix = List[List[Scalar]]


def rref(rows: Sequence[Sequence[Scalar]], ncols: int, ctx: FieldCtx) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and the pivot column of each nonzero row."""
    work = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((k for k in range(r, len(work)) if work[k][col]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = ctx.inv(work[r][col])
        prow = [ctx.reduce(x * inv) for x in work[r]]
        work[r] = prow
        for k in range(len(work)):
            if k != r and work[k][col]:
                c = work[k][col]
                work[k] = [ctx.reduce(x - c * y) for x, y in zip(work[k], prow)]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows: Sequence[Sequence[Scalar]], ncols: int, ctx: FieldCtx) -> int:
    return len(rref(rows, ncols, ctx)[1])


def nullspace(matrix: Sequence[Sequence[Scalar]], ncols: int, ctx: FieldCtx) -> Matrix:
    """Basis of {v : matrix @ v = 0}, one vector per free column.

    Vector j has a 1 at the j-th free column and 0 at every other free
    column, i.e. the basis is in reduced echelon form with respect to the
    free columns taken in increasing order.
    """
    reduced, pivots = rref(matrix, ncols, ctx)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ctx.zero] * ncols
        v[free] = ctx.one
        for row, pc in zip(reduced, pivots):
            if row[free]:
                v[pc] = ctx.reduce(-row[free])
        basis.append(v)
    return basis


def same_span(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]], ncols: int,
              ctx: FieldCtx) -> bool:
    """True iff the row spaces of ``a`` and ``b`` coincide."""
    ra = rank(a, ncols, ctx)
    rb = rank(b, ncols, ctx)
    return ra == rb == rank(list(a) + list(b), ncols, ctx)

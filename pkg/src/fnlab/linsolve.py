"""Exact linear solving with vector-valued right-hand sides.

The amalgamation inverses reduce to rational linear systems A x = y whose
unknowns and right-hand entries live in any vector space over the rationals
(rational tuples, polynomial maps, ...).  Values only need +, -, rational
scaling via v.scale(c) or c*v, and truth-testing for zero.  Row operations
use rational pivots, so everything stays exact.
"""

from .errors import InternalError, PreconditionError
from .rationals import Q


def _scale(v, c):
    if c == 1:
        return v
    scale = getattr(v, "scale", None)
    return scale(c) if scale is not None else c * v


def solve_exact(matrix, rhs, column_order=None, unknown_labels=None, row_labels=None):
    """Solve A x = y for x; A rational with full column rank, y vector-valued.

    column_order permutes the elimination (the solution must not depend on
    it).  Inconsistent rows raise PreconditionError naming the offending row;
    rank deficiency raises InternalError because every system solved here is
    a pullback inverse that the mathematics guarantees solvable uniquely.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if len(rhs) != rows:
        raise InternalError("rhs length mismatch")
    order = list(range(cols)) if column_order is None else list(column_order)
    a = [list(r) for r in matrix]
    y = list(rhs)
    pivot_row_of_col = {}
    used_rows = set()
    for col in order:
        pivot = None
        for r in range(rows):
            if r not in used_rows and a[r][col]:
                pivot = r
                break
        if pivot is None:
            raise InternalError(f"rank-deficient system at column {col}")
        used_rows.add(pivot)
        pivot_row_of_col[col] = pivot
        inv = 1 / a[pivot][col]
        if inv != 1:
            a[pivot] = [v * inv for v in a[pivot]]
            y[pivot] = _scale(y[pivot], Q(inv))
        for r in range(rows):
            if r == pivot:
                continue
            f = a[r][col]
            if f:
                a[r] = [v - f * w for v, w in zip(a[r], a[pivot])]
                y[r] = y[r] - _scale(y[pivot], Q(f))
    for r in range(rows):
        if r in used_rows:
            continue
        if any(a[r]):
            raise InternalError("unreduced row after elimination")
        if y[r]:
            label = row_labels[r] if row_labels else f"row {r}"
            raise PreconditionError(f"inconsistent system: residue at {label}")
    x = [None] * cols
    for col in range(cols):
        x[col] = y[pivot_row_of_col[col]]
    return x

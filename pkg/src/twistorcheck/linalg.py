"""Gaussian elimination over an exact field (Q(i) or Q(i)(m, mb))."""
from __future__ import annotations

from typing import List, Sequence, TypeVar

F = TypeVar("F")


def rank(rows: Sequence[Sequence[F]]) -> int:
    work: List[List[F]] = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        pivot = next((k for k in range(r, len(work)) if work[k][col]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][col]
        for k in range(r + 1, len(work)):
            f = work[k][col]
            if f:
                f = f * inv
                work[k] = [a - f * b for a, b in zip(work[k], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def inverse(matrix: Sequence[Sequence[F]], one: F, zero: F) -> List[List[F]]:
    """Inverse of a square matrix by Gauss-Jordan elimination.

    Raises ZeroDivisionError for a singular matrix.
    """
    n = len(matrix)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((k for k in range(col, n) if aug[k][col]), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for k in range(n):
            if k != col and aug[k][col]:
                f = aug[k][col]
                aug[k] = [a - f * b for a, b in zip(aug[k], aug[col])]
    return [row[n:] for row in aug]

"""Dense linear algebra over a finite field.

Matrices are lists of rows, rows are lists of encoded field elements.  Every
routine takes the field explicitly and only uses its ``add``/``neg``/``mul``/
``inv`` methods, so the same code runs over GF(q) and over GF(q^m).
"""

from __future__ import annotations

from typing import Sequence


def rref(rows: Sequence[Sequence[int]], field, ncols: int | None = None):
    """Reduced row echelon form with left-to-right pivots.

    Zero rows are dropped.  Returns ``(rows, pivots)``; the result is the
    unique canonical basis of the row space.
    """
    R = [list(r) for r in rows]
    if not R:
        return [], []
    if ncols is None:
        ncols = len(R[0])
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    pivots: list[int] = []
    r = 0
    nrows = len(R)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if R[i][c]:
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        row = R[r]
        if row[c] != 1:
            s = inv(row[c])
            row = [mul(s, x) for x in row]
            R[r] = row
        for i in range(nrows):
            if i != r and R[i][c]:
                f = neg(R[i][c])
                R[i] = [add(a, mul(f, b)) for a, b in zip(R[i], row)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R[:r], pivots


def rank(rows: Sequence[Sequence[int]], field) -> int:
    """Rank by forward elimination only (cheaper than a full ``rref``)."""
    R = [list(r) for r in rows if any(r)]
    if not R:
        return 0
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    ncols = len(R[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(R)):
            if R[i][c]:
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        row = R[r]
        s = neg(inv(row[c]))
        for i in range(r + 1, len(R)):
            if R[i][c]:
                f = mul(s, R[i][c])
                R[i] = [add(a, mul(f, b)) for a, b in zip(R[i], row)]
        r += 1
        if r == len(R):
            break
    return r


def nullspace(rows: Sequence[Sequence[int]], ncols: int, field) -> list[list[int]]:
    """Basis of ``{x : row . x = 0 for every row}`` (standard dot product)."""
    R, pivots = rref(rows, field, ncols)
    pivset = set(pivots)
    neg = field.neg
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = neg(R[i][f])
        basis.append(v)
    return basis


def dot(u: Sequence[int], v: Sequence[int], field) -> int:
    add, mul = field.add, field.mul
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = add(acc, mul(a, b))
    return acc


def matmul(A, B, field) -> list[list[int]]:
    cols = list(zip(*B))
    return [[dot(row, col, field) for col in cols] for row in A]


def inverse(A, field) -> list[list[int]]:
    """Inverse of a square matrix; raises ``ValueError`` if singular."""
    n = len(A)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rref(aug, field, n)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]


def vec_axpy(y: Sequence[int], a: int, x: Sequence[int], field) -> list[int]:
    """``y + a*x`` componentwise."""
    add, mul = field.add, field.mul
    return [add(yi, mul(a, xi)) for yi, xi in zip(y, x)]

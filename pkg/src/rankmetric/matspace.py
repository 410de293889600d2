"""Subspaces of the space of n x m matrices over GF(q).

Matrices are vectorised row-major.  Under that identification the trace
form ``Tr(M N^t)`` is the ordinary dot product, so duals of matrix codes and
of subspaces of GF(q)^n come from one null-space routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import AmbientMismatch, InvariantViolation, ShapeMismatch
from .field import FiniteField
from . import linalg

Matrix = Sequence[Sequence[int]]


def vectorize(M: Matrix) -> tuple[int, ...]:
    return tuple(x for row in M for x in row)


def unvectorize(v: Sequence[int], n: int, m: int) -> list[list[int]]:
    return [list(v[i * m:(i + 1) * m]) for i in range(n)]


def _canon(rows, field, ncols) -> tuple[tuple[int, ...], ...]:
    R, _ = linalg.rref(rows, field, ncols)
    return tuple(tuple(r) for r in R)


@dataclass(frozen=True)
class MatrixCode:
    """An F_q-linear space of n x m matrices, stored by its RREF basis.

    Two codes are equal exactly when their ``canon`` tuples agree.
    """

    field: FiniteField
    n: int
    m: int
    canon: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ShapeMismatch("n and m must be positive")
        if self.n > self.m:
            raise ShapeMismatch(
                f"n={self.n} > m={self.m}: transpose the code so that rows <= columns"
            )

    @classmethod
    def span(cls, field: FiniteField, n: int, m: int, matrices: Iterable[Matrix]) -> "MatrixCode":
        vecs = []
        for M in matrices:
            if len(M) != n or any(len(row) != m for row in M):
                raise ShapeMismatch(f"expected {n}x{m} matrices")
            v = vectorize(M)
            if any(not 0 <= x < field.order for x in v):
                raise ShapeMismatch(f"entry outside {field!r}")
            vecs.append(v)
        return cls.from_vectors(field, n, m, vecs)

    @classmethod
    def from_vectors(cls, field: FiniteField, n: int, m: int, vectors) -> "MatrixCode":
        return cls(field, n, m, _canon(list(vectors), field, n * m))

    @classmethod
    def zero(cls, field: FiniteField, n: int, m: int) -> "MatrixCode":
        return cls(field, n, m, ())

    @classmethod
    def full(cls, field: FiniteField, n: int, m: int) -> "MatrixCode":
        N = n * m
        return cls(field, n, m, tuple(tuple(int(i == j) for j in range(N)) for i in range(N)))

    @property
    def t(self) -> int:
        return len(self.canon)

    @property
    def dim(self) -> int:
        return len(self.canon)

    @property
    def ambient_dim(self) -> int:
        return self.n * self.m

    @property
    def cardinality(self) -> int:
        return self.field.order**self.t

    @property
    def basis(self) -> list[list[list[int]]]:
        return [unvectorize(v, self.n, self.m) for v in self.canon]

    @property
    def is_trivial(self) -> bool:
        return self.t == 0 or self.t == self.n * self.m

    def __contains__(self, M: Matrix) -> bool:
        v = vectorize(M) if M and isinstance(M[0], (list, tuple)) else tuple(M)
        return linalg.rank(list(self.canon) + [list(v)], self.field) == self.t

    def __repr__(self):
        return f"MatrixCode({self.field!r}, n={self.n}, m={self.m}, t={self.t})"


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(q)^n stored by its RREF basis."""

    field: FiniteField
    n: int
    canon: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, field: FiniteField, n: int, vectors: Iterable[Sequence[int]]) -> "Subspace":
        vecs = [list(v) for v in vectors]
        if any(len(v) != n for v in vecs):
            raise ShapeMismatch(f"expected vectors of length {n}")
        return cls(field, n, _canon(vecs, field, n))

    @classmethod
    def full(cls, field: FiniteField, n: int) -> "Subspace":
        return cls(field, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, field: FiniteField, n: int) -> "Subspace":
        return cls(field, n, ())

    @property
    def dim(self) -> int:
        return len(self.canon)

    def __contains__(self, v: Sequence[int]) -> bool:
        return linalg.rank(list(self.canon) + [list(v)], self.field) == self.dim


def _same_ambient(C: MatrixCode, D: MatrixCode) -> None:
    if (C.field, C.n, C.m) != (D.field, D.n, D.m):
        raise AmbientMismatch(f"{C!r} and {D!r} live in different spaces")


def mat_rank(M: Matrix, field: FiniteField) -> int:
    return linalg.rank(M, field)


def trace_product(M: Matrix, N: Matrix, field: FiniteField) -> int:
    """``Tr(M N^t)``, evaluated as ``sum_ij M_ij N_ij``."""
    if len(M) != len(N) or any(len(a) != len(b) for a, b in zip(M, N)):
        raise ShapeMismatch("trace product needs matrices of the same shape")
    return linalg.dot(vectorize(M), vectorize(N), field)


def dual_code(C: MatrixCode) -> MatrixCode:
    N = C.n * C.m
    if not C.canon:
        return MatrixCode.full(C.field, C.n, C.m)
    ker = linalg.nullspace(C.canon, N, C.field)
    return MatrixCode(C.field, C.n, C.m, _canon(ker, C.field, N))


def code_sum(C: MatrixCode, D: MatrixCode) -> MatrixCode:
    _same_ambient(C, D)
    return MatrixCode.from_vectors(C.field, C.n, C.m, list(C.canon) + list(D.canon))


def code_intersect(C: MatrixCode, D: MatrixCode) -> MatrixCode:
    _same_ambient(C, D)
    return dual_code(code_sum(dual_code(C), dual_code(D)))


def mat_of_subspace(U: Subspace, m: int) -> MatrixCode:
    """``{M : colsp(M) in U}``, spanned by the matrices ``u e_j^t``."""
    n = U.n
    vecs = []
    for u in U.canon:
        for j in range(m):
            M = [[u[i] if c == j else 0 for c in range(m)] for i in range(n)]
            vecs.append(vectorize(M))
    out = MatrixCode.from_vectors(U.field, n, m, vecs)
    if out.t != m * U.dim:
        raise InvariantViolation("dim Mat(U) != m * dim U")
    return out


def row_support(V: Subspace, n: int) -> MatrixCode:
    """``{M : rowsp(M) in V}`` for ``V`` inside GF(q)^m (the transpose family)."""
    m = V.n
    vecs = []
    for v in V.canon:
        for i in range(n):
            M = [list(v) if r == i else [0] * m for r in range(n)]
            vecs.append(vectorize(M))
    return MatrixCode.from_vectors(V.field, n, m, vecs)


def restrict(C: MatrixCode, U: Subspace) -> MatrixCode:
    """``C(U) = C intersect Mat(U)``."""
    if U.field != C.field or U.n != C.n:
        raise AmbientMismatch("subspace does not live in the column space of the code")
    return code_intersect(C, mat_of_subspace(U, C.m))


def subspace_dual(U: Subspace) -> Subspace:
    if not U.canon:
        return Subspace.full(U.field, U.n)
    ker = linalg.nullspace(U.canon, U.n, U.field)
    return Subspace(U.field, U.n, _canon(ker, U.field, U.n))


def all_subspaces(field: FiniteField, n: int, dim: int | None = None) -> Iterator[Subspace]:
    """Every subspace of GF(q)^n (of the given dimension), each exactly once.

    Enumerates reduced echelon matrices: choose pivot columns, then fill the
    non-pivot entries to the right of each pivot freely.
    """
    dims = range(n + 1) if dim is None else [dim]
    q = field.order
    for k in dims:
        for pivots in combinations(range(n), k):
            free = [
                (r, c)
                for r, pc in enumerate(pivots)
                for c in range(pc + 1, n)
                if c not in pivots
            ]
            for vals in product(range(q), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), x in zip(free, vals):
                    rows[r][c] = x
                yield Subspace(field, n, tuple(tuple(r) for r in rows))

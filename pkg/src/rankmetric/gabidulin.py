"""Vector rank-metric codes over GF(q^m) and their matrix expansions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import linalg
from .codes import (
    RankDistribution,
    enumeration_cap,
    iter_span,
    rank_distribution,
)
from .errors import (
    BasisMismatch,
    DependentPoints,
    DimensionTooLarge,
    EnumerationTooLarge,
    InvariantViolation,
    ShapeMismatch,
    TrivialCode,
    ZeroCode,
)
from .field import ExtensionBasis, FiniteField, ext_coords, extension
from .matspace import MatrixCode, dual_code, mat_rank


def _ext_degree(base: FiniteField, ext: FiniteField) -> int:
    if ext == base:
        return 1
    if ext.base != base:
        raise BasisMismatch(f"{ext!r} is not an extension of {base!r}")
    return ext.degree


@dataclass(frozen=True)
class GabidulinCode:
    """A GF(q^m)-linear code of length n, generator kept in RREF."""

    base: FiniteField
    ext: FiniteField
    n: int
    generator: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n > self.m:
            raise ShapeMismatch(f"length n={self.n} exceeds extension degree m={self.m}")

    @classmethod
    def from_generator(cls, base: FiniteField, ext: FiniteField, rows: Sequence[Sequence[int]],
                       n: int | None = None) -> "GabidulinCode":
        rows = [list(r) for r in rows]
        if n is None:
            if not rows:
                raise ShapeMismatch("cannot infer the length of an empty generator")
            n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ShapeMismatch(f"generator rows must have length {n}")
        if any(not 0 <= x < ext.order for r in rows for x in r):
            raise ShapeMismatch(f"generator entry outside {ext!r}")
        R, _ = linalg.rref(rows, ext, n)
        return cls(base, ext, n, tuple(tuple(r) for r in R))

    @property
    def m(self) -> int:
        return _ext_degree(self.base, self.ext)

    @property
    def k(self) -> int:
        return len(self.generator)

    @property
    def is_trivial(self) -> bool:
        return self.k in (0, self.n)

    def codewords(self) -> Iterator[tuple[int, ...]]:
        if not self.generator:
            return iter([(0,) * self.n])
        return iter_span(self.generator, self.ext)

    def __contains__(self, v: Sequence[int]) -> bool:
        return linalg.rank(list(self.generator) + [list(v)], self.ext) == self.k


def _poly_coords(v: int, base: FiniteField, ext: FiniteField) -> list[int]:
    return [v] if ext == base else ext.digits(v)


def vector_rank(v: Sequence[int], base: FiniteField, ext: FiniteField) -> int:
    """``dim_F_q span{v_1..v_n}`` via the coordinate matrix of the entries."""
    return linalg.rank([_poly_coords(x, base, ext) for x in v], base)


def moore_generator(base: FiniteField, m: int, n: int, k: int, points: Sequence[int] | None = None,
                    ext: FiniteField | None = None, check: bool = True,
                    cap: int | None = None) -> GabidulinCode:
    """The code generated by the Moore matrix ``G[i][j] = g_j^(q^i)``, ``i < k``.

    ``points`` defaults to ``1, y, ..., y^(n-1)`` in the polynomial basis.
    With ``check`` set, the minimum distance ``n - k + 1`` is confirmed by
    enumeration whenever ``q^(mk)`` fits under the cap.
    """
    if ext is None:
        ext = extension(base, m)
    if _ext_degree(base, ext) != m:
        raise BasisMismatch(f"{ext!r} does not have degree {m} over {base!r}")
    if n > m:
        raise ShapeMismatch(f"n={n} > m={m}")
    if not 0 <= k <= n:
        raise DimensionTooLarge(f"k={k} must lie in 0..{n}")
    if points is None:
        points = [base.order**j for j in range(n)]
    points = list(points)
    if len(points) != n:
        raise ShapeMismatch(f"need {n} evaluation points")
    if vector_rank(points, base, ext) != n:
        raise DependentPoints("evaluation points are linearly dependent over the base field")
    rows = [[ext.frobenius(g, i) for g in points] for i in range(k)]
    C = GabidulinCode.from_generator(base, ext, rows, n)
    if C.k != k:
        raise InvariantViolation("Moore matrix lost rank")
    if check and 0 < k and ext.order**k <= enumeration_cap(cap):
        d = gab_rank_distribution(C, cap).min_distance
        if d != n - k + 1:
            raise InvariantViolation(f"Moore code has d={d}, expected {n - k + 1}")
    return C


def gab_dual(C: GabidulinCode) -> GabidulinCode:
    """Dual under the (bilinear, unconjugated) standard inner product."""
    if not C.generator:
        rows = [[int(i == j) for j in range(C.n)] for i in range(C.n)]
    else:
        rows = linalg.nullspace(C.generator, C.n, C.ext)
    return GabidulinCode.from_generator(C.base, C.ext, rows, C.n)


def gab_rank_distribution(C: GabidulinCode, cap: int | None = None) -> RankDistribution:
    cap = enumeration_cap(cap)
    size = C.ext.order**C.k
    if size > cap:
        raise EnumerationTooLarge(size, cap)
    counts = [0] * (C.n + 1)
    for v in C.codewords():
        counts[vector_rank(v, C.base, C.ext)] += 1
    return RankDistribution(C.n, tuple(counts))


def associated_matrix(v: Sequence[int], basis: ExtensionBasis) -> list[list[int]]:
    """Row ``i`` holds the coordinates of ``v_i`` in ``basis``."""
    return [ext_coords(x, basis) for x in v]


def _check_basis(C: GabidulinCode, basis: ExtensionBasis | None) -> ExtensionBasis:
    if basis is None:
        return ExtensionBasis.polynomial(C.base, C.ext)
    if basis.base != C.base or basis.ext != C.ext:
        raise BasisMismatch("expansion basis is over different fields than the code")
    return basis


def expand(C: GabidulinCode, basis: ExtensionBasis | None = None) -> MatrixCode:
    """The associated matrix code ``{M_G(v) : v in C}``; has dimension ``m k``."""
    basis = _check_basis(C, basis)
    E = C.ext
    mats = []
    for g in C.generator:
        for gamma in basis.gammas:
            mats.append(associated_matrix([E.mul(gamma, x) for x in g], basis))
    out = MatrixCode.span(C.base, C.n, C.m, mats)
    if out.t != C.m * C.k:
        raise InvariantViolation(f"expansion has dimension {out.t}, expected {C.m * C.k}")
    return out


def expansion_preserves_rank(C: GabidulinCode, basis: ExtensionBasis | None = None,
                             cap: int | None = None) -> bool:
    """``rk(M_G(v)) == rk(v)`` for every codeword."""
    basis = _check_basis(C, basis)
    if C.ext.order**C.k > enumeration_cap(cap):
        raise EnumerationTooLarge(C.ext.order**C.k, enumeration_cap(cap))
    for v in C.codewords():
        if mat_rank(associated_matrix(v, basis), C.base) != vector_rank(v, C.base, C.ext):
            return False
    return True


@dataclass(frozen=True)
class SerieReport:
    dimension: int
    expected_dimension: int
    distribution: RankDistribution
    expanded_distribution: RankDistribution
    dual_distribution: RankDistribution
    expanded_dual_distribution: RankDistribution

    @property
    def dimension_ok(self) -> bool:
        return self.dimension == self.expected_dimension

    @property
    def distribution_ok(self) -> bool:
        return self.distribution == self.expanded_distribution

    @property
    def dual_ok(self) -> bool:
        return self.dual_distribution == self.expanded_dual_distribution

    @property
    def passed(self) -> bool:
        return self.dimension_ok and self.distribution_ok and self.dual_ok


def check_serie(C: GabidulinCode, basis: ExtensionBasis | None = None, cap: int | None = None) -> SerieReport:
    """Compare the code with its expansion: dimension, distribution, dual distribution."""
    M = expand(C, basis)
    return SerieReport(
        dimension=M.t,
        expected_dimension=C.m * C.k,
        distribution=gab_rank_distribution(C, cap),
        expanded_distribution=rank_distribution(M, cap),
        dual_distribution=gab_rank_distribution(gab_dual(C), cap),
        expanded_dual_distribution=rank_distribution(dual_code(M), cap),
    )


@dataclass(frozen=True)
class GabidulinReport:
    n: int
    m: int
    k: int
    d: int
    d_perp: int
    rdef: int
    rdef_perp: int
    mrd: bool
    amrd: bool
    dually_amrd: bool
    distribution: RankDistribution
    dual_distribution: RankDistribution

    def as_dict(self) -> dict:
        return {
            "n": self.n, "m": self.m, "k": self.k, "d": self.d, "d_perp": self.d_perp,
            "rdef": self.rdef, "rdef_perp": self.rdef_perp, "mrd": self.mrd,
            "amrd": self.amrd, "dually_amrd": self.dually_amrd,
            "A": list(self.distribution.counts), "A_perp": list(self.dual_distribution.counts),
        }


def gab_analyze(C: GabidulinCode, cap: int | None = None) -> GabidulinReport:
    if C.k == 0:
        raise ZeroCode("zero code")
    if C.is_trivial:
        raise TrivialCode("the full space is a trivial code")
    A = gab_rank_distribution(C, cap)
    B = gab_rank_distribution(gab_dual(C), cap)
    n, k = C.n, C.k
    d, dp = A.min_distance, B.min_distance
    rdef = n + 1 - k - d
    rdef_perp = n + 1 - (n - k) - dp
    mrd = k == n - d + 1
    if not ((mrd and d + dp == n + 2) or d + dp <= n):
        raise InvariantViolation(f"d + d_perp = {d + dp} violates the MRD / <= n dichotomy")
    if rdef < 0 or rdef_perp < 0:
        raise InvariantViolation("negative rank defect")
    dually = rdef == 1 and rdef_perp == 1
    if dually != (d + dp == n):
        raise InvariantViolation("dually AMRD must coincide with d + d_perp = n")
    return GabidulinReport(n, C.m, k, d, dp, rdef, rdef_perp, mrd, rdef == 1, dually, A, B)

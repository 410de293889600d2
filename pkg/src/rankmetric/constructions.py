"""Named codes and parameterised families."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator

import numpy as np

from . import linalg
from .codes import _ceil_div, _rank_counter, iter_span
from .errors import DividesM, InputError, InvariantViolation, ShapeMismatch
from .field import FiniteField, field_from_order, field_make
from .gabidulin import expand, moore_generator
from .matspace import MatrixCode, Subspace, all_subspaces, mat_of_subspace

RECIPE_KINDS = ("MRD", "QMRD_FROM_MRD", "EXAMPLE_EXDUALQMRD", "MAT_OF_SUBSPACE", "RANDOM")


def _field(q) -> FiniteField:
    return q if isinstance(q, FiniteField) else field_from_order(q)


@dataclass(frozen=True)
class CodeRecipe:
    kind: str
    params: dict = dc_field(default_factory=dict)
    seed: int | None = None

    def build(self) -> MatrixCode:
        p = self.params
        if self.kind == "MRD":
            return build_mrd(p["q"], p["n"], p["m"], p["d"])
        if self.kind == "QMRD_FROM_MRD":
            return build_qmrd(p["q"], p["n"], p["m"], p["t"])
        if self.kind == "EXAMPLE_EXDUALQMRD":
            return example_exdualqmrd()
        if self.kind == "MAT_OF_SUBSPACE":
            F = _field(p["q"])
            U = Subspace.span(F, p["n"], p["vectors"])
            return mat_of_subspace(U, p["m"])
        if self.kind == "RANDOM":
            return random_code(p["q"], p["n"], p["m"], p["t"], self.seed if self.seed is not None else 0)
        raise InputError(f"unknown recipe kind {self.kind!r}; expected one of {RECIPE_KINDS}")


def build_mrd(q, n: int, m: int, d: int) -> MatrixCode:
    """Expansion of the Moore-matrix code with ``k = n - d + 1`` (dimension ``m k``)."""
    F = _field(q)
    if not 1 <= d <= n <= m:
        raise InputError("need 1 <= d <= n <= m")
    k = n - d + 1
    C = moore_generator(F, m, n, k, check=False)
    return expand(C)


def first_min_weight_codeword(C: MatrixCode, d: int) -> tuple[int, ...]:
    """First codeword of rank ``d`` in lexicographic coefficient order."""
    rk = _rank_counter(C.field, C.n, C.m)
    for v in iter_span(C.canon, C.field):
        if any(v) and rk(v) == d:
            return v
    raise InvariantViolation(f"no codeword of rank {d}")


def build_qmrd(q, n: int, m: int, t: int) -> MatrixCode:
    """A ``t``-dimensional subcode of an MRD code that keeps a minimum-rank word.

    The MRD code has dimension ``m * ceil(t/m)``; the subcode is spanned by
    its first minimum-rank codeword plus the earliest canonical basis vectors
    that stay independent.
    """
    F = _field(q)
    if not (1 <= n <= m and 1 <= t < n * m):
        raise InputError("need 1 <= n <= m and 1 <= t < nm")
    if t % m == 0:
        raise DividesM(f"m={m} divides t={t}; build an MRD code instead")
    d = n - _ceil_div(t, m) + 1
    D = build_mrd(F, n, m, d)
    chosen = [list(first_min_weight_codeword(D, d))]
    for v in D.canon:
        if len(chosen) == t:
            break
        if linalg.rank(chosen + [list(v)], F) == len(chosen) + 1:
            chosen.append(list(v))
    return MatrixCode.from_vectors(F, n, m, chosen)


EXDUALQMRD_BASIS = (
    ((0, 1, 0), (1, 0, 0), (0, 0, 0)),
    ((1, 1, 0), (0, 1, 0), (0, 0, 0)),
    ((0, 0, 1), (0, 0, 0), (1, 0, 0)),
    ((0, 0, 0), (0, 0, 1), (0, 1, 0)),
)


def example_exdualqmrd() -> MatrixCode:
    """Binary 3x3 code of dimension 4 and minimum distance 2 whose dual has
    minimum distance 1 (QMRD, but its dual is not)."""
    return MatrixCode.span(field_make(2), 3, 3, EXDUALQMRD_BASIS)


def random_code(q, n: int, m: int, t: int, seed: int) -> MatrixCode:
    """Uniform-ish random ``t``-dimensional code, deterministic in ``seed``.

    Draws ``t x nm`` matrices from numpy's PCG64 generator until one has
    full rank.
    """
    F = _field(q)
    N = n * m
    if not 0 <= t <= N:
        raise ShapeMismatch(f"t={t} outside 0..{N}")
    if t == 0:
        return MatrixCode.zero(F, n, m)
    rng = np.random.default_rng(seed)
    while True:
        rows = rng.integers(0, F.order, size=(t, N)).tolist()
        if linalg.rank(rows, F) == t:
            return MatrixCode.from_vectors(F, n, m, rows)


def coordinate_support_codes(q, n: int, m: int) -> Iterator[MatrixCode]:
    """``Mat(U)`` for every proper non-zero subspace ``U`` of GF(q)^n."""
    F = _field(q)
    for U in all_subspaces(F, n):
        if 0 < U.dim < n:
            yield mat_of_subspace(U, m)


def sweep_shapes(nmax: int = 3, mmax: int = 3) -> list[tuple[int, int]]:
    return [(n, m) for m in range(1, mmax + 1) for n in range(1, min(nmax, m) + 1)]


def sample_codes(qs=(2, 3), nmax: int = 3, mmax: int = 3, samples: int = 4, seed: int = 0,
                 max_size: int = 1 << 20, dual_max_size: int | None = None) -> Iterator[tuple[dict, MatrixCode]]:
    """Seeded random codes for every ``q``, ``n <= m`` and ``0 < t < nm``.

    Yields ``(recipe_params, code)``; skips dimensions whose code (or dual,
    when ``dual_max_size`` is given) would exceed the size limits.
    """
    for q in qs:
        for n, m in sweep_shapes(nmax, mmax):
            N = n * m
            for t in range(1, N):
                if q**t > max_size:
                    continue
                if dual_max_size is not None and q ** (N - t) > dual_max_size:
                    continue
                for s in range(samples):
                    sd = int(np.random.SeedSequence([seed, q, n, m, t, s]).generate_state(1)[0])
                    yield {"q": q, "n": n, "m": m, "t": t, "seed": sd}, random_code(q, n, m, t, sd)

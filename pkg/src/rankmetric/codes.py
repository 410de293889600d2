"""Rank distributions and the exact relations between a code and its dual.

``rank_distribution`` enumerates every codeword and is the ground truth the
closed formulas in this module are checked against.  Everything is exact
integer arithmetic; divisions are performed only where they are provably
exact, and are checked anyway.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterator, Mapping, Sequence

from . import linalg
from .errors import (
    EnumerationTooLarge,
    HypothesisFailed,
    InconsistentInput,
    InvariantViolation,
    NegativeCount,
    NotApplicable,
    NotQMRD,
    PrefixMissing,
    TooLarge,
    TrivialCode,
    ZeroCode,
)
from .matspace import (
    MatrixCode,
    Subspace,
    all_subspaces,
    code_intersect,
    dual_code,
    mat_of_subspace,
    restrict,
    row_support,
    subspace_dual,
)
from .qcalc import gaussian

DEFAULT_CAP = 1 << 26
_RANK_CACHE_LIMIT = 1 << 16


def enumeration_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("RANKMETRIC_CAP")
    return int(env) if env else DEFAULT_CAP


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _c2(k: int) -> int:
    return comb(k, 2) if k >= 2 else 0


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# -- enumeration ---------------------------------------------------------------


def iter_span(vectors: Sequence[Sequence[int]], field, offset: Sequence[int] | None = None) -> Iterator[tuple]:
    """Every ``offset + sum c_i v_i``, coefficient vectors in lexicographic order."""
    t = len(vectors)
    N = len(vectors[0]) if vectors else len(offset or ())
    start = tuple(offset) if offset is not None else (0,) * N
    add = field.add
    q = field.order
    multiples = [[tuple(field.mul(c, x) for x in v) for c in range(q)] for v in vectors]

    def rec(i, acc):
        if i == t:
            yield acc
            return
        for mv in multiples[i]:
            yield from rec(i + 1, tuple(map(add, acc, mv)))

    return rec(0, start)


def _rank_counter(field, n: int, m: int):
    """Rank of a row-major flat matrix, memoised when the space is small."""
    use_cache = field.order ** (n * m) <= _RANK_CACHE_LIMIT
    cache: dict[tuple, int] = {}

    def rk(v):
        if use_cache:
            r = cache.get(v)
            if r is not None:
                return r
        r = linalg.rank([v[i * m:(i + 1) * m] for i in range(n)], field)
        if use_cache:
            cache[v] = r
        return r

    return rk


def _count_ranks(field, n, m, vectors, offset=None) -> list[int]:
    counts = [0] * (n + 1)
    rk = _rank_counter(field, n, m)
    for v in iter_span(vectors, field, offset):
        counts[rk(v)] += 1
    return counts


@dataclass(frozen=True)
class RankDistribution:
    """Counts ``A_0..A_n`` of codewords of each rank."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.counts) != self.n + 1:
            raise InconsistentInput(f"expected {self.n + 1} counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise NegativeCount("rank counts must be non-negative")

    @property
    def cardinality(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if 0 <= i <= self.n else 0

    @property
    def min_distance(self) -> int | None:
        for i in range(1, self.n + 1):
            if self.counts[i]:
                return i
        return None


def rank_distribution(C: MatrixCode, cap: int | None = None, workers: int = 1) -> RankDistribution:
    """Exact rank census of all ``q^t`` codewords.

    With ``workers > 1`` the codewords are split by their first coefficient
    and counted in separate processes; the merged result is identical.
    """
    cap = enumeration_cap(cap)
    size = C.cardinality
    if size > cap:
        raise EnumerationTooLarge(size, cap)
    F, n, m = C.field, C.n, C.m
    vecs = [list(v) for v in C.canon]
    if workers <= 1 or len(vecs) < 2:
        return RankDistribution(n, tuple(_count_ranks(F, n, m, vecs)))
    head, tail = vecs[0], vecs[1:]
    offsets = [[F.mul(c, x) for x in head] for c in range(F.order)]
    counts = [0] * (n + 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        jobs = [pool.submit(_count_ranks, F, n, m, tail, off) for off in offsets]
        for job in jobs:
            for i, c in enumerate(job.result()):
                counts[i] += c
    return RankDistribution(n, tuple(counts))


def min_distance(C: MatrixCode, cap: int | None = None) -> int:
    if C.t == 0:
        raise ZeroCode("minimum distance is undefined for the zero code")
    return rank_distribution(C, cap).min_distance


# -- classification -------------------------------------------------------------


class CodeClass(str, enum.Enum):
    MRD = "MRD"
    QMRD = "QMRD"
    DUALLY_QMRD = "DUALLY_QMRD"
    AMRD = "AMRD"
    DUALLY_AMRD = "DUALLY_AMRD"
    OTHER = "OTHER"


def rank_defect(n: int, m: int, t: int, d: int) -> int:
    return n - _ceil_div(t, m) - d + 1


def classify(n: int, m: int, t: int, d: int, d_perp: int) -> CodeClass:
    rdef = rank_defect(n, m, t, d)
    rdef_perp = rank_defect(n, m, n * m - t, d_perp)
    if t == m * (n - d + 1):
        return CodeClass.MRD
    if rdef == 0 and t % m:
        return CodeClass.DUALLY_QMRD if rdef_perp == 0 else CodeClass.QMRD
    if rdef == 1:
        return CodeClass.DUALLY_AMRD if rdef_perp == 1 else CodeClass.AMRD
    return CodeClass.OTHER


@dataclass(frozen=True)
class CodeReport:
    q: int
    n: int
    m: int
    t: int
    d: int
    d_perp: int
    rdef: int
    rdef_perp: int
    alpha: int
    rho: int
    code_class: CodeClass
    distribution: RankDistribution
    dual_distribution: RankDistribution
    dual_source: str = "enumeration"

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "m": self.m,
            "t": self.t,
            "d": self.d,
            "d_perp": self.d_perp,
            "rdef": self.rdef,
            "rdef_perp": self.rdef_perp,
            "alpha": self.alpha,
            "rho": self.rho,
            "class": self.code_class.value,
            "A": list(self.distribution.counts),
            "A_perp": list(self.dual_distribution.counts),
            "dual_source": self.dual_source,
        }


def _check_report(rep: CodeReport) -> None:
    n, m, t, d, dp = rep.n, rep.m, rep.t, rep.d, rep.d_perp
    problems = []
    if d > n - _ceil_div(t, m) + 1:
        problems.append("Singleton-type bound on d")
    if rep.rdef < 0 or rep.rdef_perp < 0:
        problems.append("negative rank defect")
    if d + dp > n + 2:
        problems.append("d + d_perp > n + 2")
    if (d + dp == n + 2) != (rep.code_class == CodeClass.MRD):
        problems.append("d + d_perp = n + 2 must coincide with MRD")
    if (d + dp == n + 1) != (rep.code_class == CodeClass.DUALLY_QMRD):
        problems.append("d + d_perp = n + 1 must coincide with dually QMRD")
    if t % m == 0 and d + dp == n + 1:
        problems.append("m | t forbids d + d_perp = n + 1")
    if problems:
        raise InvariantViolation(f"{rep.as_dict()}: " + "; ".join(problems))


def analyze(C: MatrixCode, cap: int | None = None, workers: int = 1, dual_method: str = "auto") -> CodeReport:
    """Parameters, defects and class of a non-trivial code.

    ``dual_method`` picks how the dual distribution is obtained:
    ``"enumerate"`` always enumerates the dual, ``"macwilliams"`` always
    transforms, ``"auto"`` enumerates when the dual fits under the cap.
    """
    if C.is_trivial:
        raise TrivialCode(f"code of dimension {C.t} in {C.n}x{C.m} matrices is trivial")
    cap = enumeration_cap(cap)
    n, m, t, q = C.n, C.m, C.t, C.field.order
    A = rank_distribution(C, cap, workers)
    dual_size = q ** (n * m - t)
    if dual_method == "enumerate" or (dual_method == "auto" and dual_size <= cap):
        B = rank_distribution(dual_code(C), cap, workers)
        source = "enumeration"
    else:
        B = macwilliams_transform(A, n, m, q)
        source = "macwilliams"
    d, dp = A.min_distance, B.min_distance
    alpha, rho = divmod(t, m)
    rep = CodeReport(
        q=q, n=n, m=m, t=t, d=d, d_perp=dp,
        rdef=rank_defect(n, m, t, d),
        rdef_perp=rank_defect(n, m, n * m - t, dp),
        alpha=alpha, rho=rho,
        code_class=classify(n, m, t, d, dp),
        distribution=A, dual_distribution=B, dual_source=source,
    )
    _check_report(rep)
    return rep


# -- MacWilliams identities ----------------------------------------------------------


def macwilliams_transform(A: RankDistribution, n: int, m: int, q: int) -> RankDistribution:
    """Rank distribution of the dual code from that of the code.

    Solves, for ``r = 0..n``,
    ``sum_{i<=n-r} A_i [n-i r] = |C|/q^(mr) * sum_{j<=r} B_j [n-j r-j]``
    for ``B``.  The ``j = r`` coefficient is 1, so this is forward
    substitution; the division by ``|C|`` is done last and must be exact.
    """
    if A.n != n:
        raise InconsistentInput(f"distribution has n={A.n}, expected {n}")
    size = A.cardinality
    total = q ** (n * m)
    if size < 1 or total % size:
        raise InconsistentInput(f"|C|={size} does not divide q^(nm)={total}")
    B: list[int] = []
    for r in range(n + 1):
        lhs = sum(A.counts[i] * gaussian(n - i, r, q) for i in range(n - r + 1))
        num = lhs * q ** (m * r)
        if num % size:
            raise InconsistentInput(f"non-integral dual count at rank {r}")
        val = num // size - sum(B[j] * gaussian(n - j, r - j, q) for j in range(r))
        if val < 0:
            raise NegativeCount(f"negative dual count {val} at rank {r}")
        B.append(val)
    if sum(B) != total // size:
        raise InconsistentInput("dual counts do not sum to q^(nm)/|C|")
    return RankDistribution(n, tuple(B))


# -- completing a distribution from a few counts ------------------------------------


@dataclass(frozen=True)
class DistributionQuery:
    """Parameters plus the counts ``A_d..A_{n-d_perp}`` (possibly none)."""

    q: int
    n: int
    m: int
    t: int
    d: int
    d_perp: int
    known_prefix: Mapping[int, int] = dc_field(default_factory=dict)

    @property
    def delta(self) -> int:
        return 1 if self.d + self.d_perp == self.n + 2 else 0

    @property
    def prefix_range(self) -> range:
        return range(self.d, self.n - self.d_perp + 1)


def prefix_from_sequence(d: int, values: Sequence[int]) -> dict[int, int]:
    return {d + i: int(v) for i, v in enumerate(values)}


def complete_distribution(Q: DistributionQuery) -> RankDistribution:
    """Full rank distribution from ``n, m, t, d, d_perp`` and the small counts.

    For ``r = 1..d_perp``::

        A_{n-d_perp+r} = (-1)^r q^C(r,2) sum_{j=d_perp}^{n-d} [j d_perp-r][j-d_perp+r-1 r-1] A_{n-j}
                       + [n d_perp-r] sum_{i=0}^{r-1-delta} (-1)^i q^C(i,2) [n-d_perp+r i]
                                                       (|C|/q^(m(d_perp-r+i)) - 1)

    with ``delta = 1`` exactly when ``d + d_perp = n + 2``.
    """
    q, n, m, t, d, dp = Q.q, Q.n, Q.m, Q.t, Q.d, Q.d_perp
    if not (1 <= d <= n and 1 <= dp <= n and 0 < t < n * m):
        raise InconsistentInput("need 1 <= d, d_perp <= n and 0 < t < nm")
    if d + dp > n + 2:
        raise InconsistentInput("d + d_perp cannot exceed n + 2")
    delta = Q.delta
    g = gaussian
    size = q**t
    known = dict(Q.known_prefix)
    missing = [i for i in Q.prefix_range if i not in known]
    if missing:
        raise PrefixMissing(f"missing counts for ranks {missing}")
    counts = [0] * (n + 1)
    counts[0] = 1
    for i in Q.prefix_range:
        if known[i] < 0:
            raise NegativeCount(f"A_{i} = {known[i]} is negative")
        counts[i] = known[i]
    for r in range(1, dp + 1):
        first = sum(
            g(j, dp - r, q) * g(j - dp + r - 1, r - 1, q) * counts[n - j]
            for j in range(dp, n - d + 1)
        )
        second = 0
        for i in range(r - delta):
            k = m * (dp - r + i)
            if size % q**k:
                raise InconsistentInput("|C| is not divisible by the required power of q")
            second += _sign(i) * q ** _c2(i) * g(n - dp + r, i, q) * (size // q**k - 1)
        val = _sign(r) * q ** _c2(r) * first + g(n, dp - r, q) * second
        idx = n - dp + r
        if val < 0:
            raise NegativeCount(f"formula gives A_{idx} = {val}")
        if idx < d:
            if val != 0:
                raise InconsistentInput(f"formula gives A_{idx} = {val} below the minimum distance")
            continue
        counts[idx] = val
    if sum(counts) != size:
        raise InconsistentInput(f"counts sum to {sum(counts)}, expected q^t = {size}")
    if d <= n and counts[d] == 0:
        raise InconsistentInput(f"A_d = 0 contradicts minimum distance {d}")
    return RankDistribution(n, tuple(counts))


def closed_form_mrd_qmrd(n: int, m: int, d: int, t: int, q: int) -> RankDistribution:
    """Rank distribution of an MRD or dually QMRD code from its parameters.

    ``A_r = [n r] sum_{i=0}^{r-d} (-1)^i q^C(i,2) [r i] (q^t / q^(m(n+i-r)) - 1)``.
    For the dually QMRD case the caller vouches that the dual is QMRD too;
    the parameters alone cannot tell.
    """
    if not 1 <= d <= n <= m:
        raise NotApplicable("need 1 <= d <= n <= m")
    mrd = t == m * (n - d + 1)
    qmrd = 0 < t < n * m and t % m != 0 and d == n - _ceil_div(t, m) + 1
    if not (mrd or qmrd):
        raise NotApplicable(f"(n={n}, m={m}, d={d}, t={t}) is neither MRD nor QMRD")
    g = gaussian
    size = q**t
    counts = [0] * (n + 1)
    counts[0] = 1
    for r in range(d, n + 1):
        s = 0
        for i in range(r - d + 1):
            k = m * (n + i - r)
            if size % q**k:
                raise InconsistentInput("non-integral term")
            s += _sign(i) * q ** _c2(i) * g(r, i, q) * (size // q**k - 1)
        counts[r] = g(n, r, q) * s
    return RankDistribution(n, tuple(counts))


# -- QMRD codes and their duals -----------------------------------------------------


@dataclass(frozen=True)
class QMRDCriterion:
    holds: bool
    a_d: int
    expected: int
    dual_is_qmrd: bool


def qmrd_dual_criterion(C: MatrixCode, report: CodeReport | None = None, cap: int | None = None) -> QMRDCriterion:
    """Is the dual of a QMRD code QMRD?  Decided by ``A_d = [n d](q^rho - 1)``.

    The answer is cross-checked against the dual's own minimum distance.
    """
    rep = report or analyze(C, cap)
    if rep.code_class not in (CodeClass.QMRD, CodeClass.DUALLY_QMRD):
        raise NotQMRD(f"code is {rep.code_class.value}, not QMRD")
    a_d = rep.distribution[rep.d]
    expected = gaussian(rep.n, rep.d, rep.q) * (rep.q**rep.rho - 1)
    holds = a_d == expected
    direct = rep.d_perp == rep.alpha + 1
    if holds != direct:
        raise InvariantViolation(f"count criterion says {holds}, dual minimum distance says {direct}")
    return QMRDCriterion(holds, a_d, expected, direct)


def qmrd_count_identity(rep: CodeReport) -> tuple[int, int]:
    """Both sides of the MacWilliams identity at ``r = alpha`` for a QMRD code:
    ``[n alpha] + A_d = q^rho ([n alpha] + sum_{j=1}^{alpha} B_j [n-j alpha-j])``."""
    n, q, a, rho = rep.n, rep.q, rep.alpha, rep.rho
    g = gaussian
    lhs = g(n, a, q) + rep.distribution[rep.d]
    rhs = q**rho * (g(n, a, q) + sum(rep.dual_distribution[j] * g(n - j, a - j, q) for j in range(1, a + 1)))
    return lhs, rhs


# -- column-support restrictions ----------------------------------------------------


def dim_formula_check(C: MatrixCode, U: Subspace) -> tuple[int, int]:
    """``dim C(U)`` against ``dim C_perp(U_perp) + t - m(n - dim U)``."""
    lhs = restrict(C, U).t
    rhs = restrict(dual_code(C), subspace_dual(U)).t + C.t - C.m * (C.n - U.dim)
    if lhs != rhs:
        raise InvariantViolation(f"dim C(U) = {lhs} but formula gives {rhs}")
    return lhs, rhs


def check_defect_one_duality(C: MatrixCode, report: CodeReport | None = None, cap: int | None = None) -> tuple[int, int]:
    """``(A_d(C), A_{d_perp}(C_perp))`` for a code with ``m | t`` and ``d + d_perp = n``."""
    rep = report or analyze(C, cap)
    failed = []
    if rep.t % rep.m:
        failed.append(f"m={rep.m} does not divide t={rep.t}")
    if rep.d + rep.d_perp != rep.n:
        failed.append(f"d + d_perp = {rep.d + rep.d_perp} != n = {rep.n}")
    if failed:
        raise HypothesisFailed("; ".join(failed))
    if rep.rdef != 1 or rep.rdef_perp != 1:
        raise InvariantViolation(f"expected both rank defects 1, got {rep.rdef}, {rep.rdef_perp}")
    pair = rep.distribution[rep.d], rep.dual_distribution[rep.d_perp]
    if pair[0] != pair[1]:
        raise InvariantViolation(f"A_d(C) = {pair[0]} but A_dperp(C_perp) = {pair[1]}")
    return pair


def dim1_dual_distribution(q: int, n: int, m: int, d: int) -> int:
    """``A_1`` of the dual of a one-dimensional code spanned by a rank-``d`` matrix."""
    if not (2 <= n <= m and 1 <= d <= n):
        raise NotApplicable("need 2 <= n <= m and 1 <= d <= n")
    num = q ** (m + n - 1) + q ** (m + n - d) - q ** (m + n - d - 1) - q**m - q**n + 1
    val, rem = divmod(num, q - 1)
    if rem:
        raise InvariantViolation("non-integral count")
    return val


# -- generalized weights ----------------------------------------------------------------

_SUBSPACE_LIMIT = 20000


@dataclass(frozen=True)
class GeneralizedWeightsProfile:
    a: tuple[int, ...]
    anticode_family: str

    def __getitem__(self, r: int) -> int:
        """``a_r`` with ``r`` counted from 1."""
        if not 1 <= r <= len(self.a):
            raise IndexError(r)
        return self.a[r - 1]


def _count_subspaces(q: int, n: int) -> int:
    return sum(gaussian(n, k, q) for k in range(n + 1))


def generalized_weights(C: MatrixCode) -> GeneralizedWeightsProfile:
    """``a_r = min dim(U)`` over support anticodes meeting ``C`` in dimension >= r.

    Anticodes searched: ``Mat(U)`` for every ``U`` in GF(q)^n and, when
    ``n == m``, also the row-support spaces.  Both have dimension
    ``m * dim U``, so ``a_r`` is read off as ``dim U``.
    """
    q, n, m, t = C.field.order, C.n, C.m, C.t
    if _count_subspaces(q, n) > _SUBSPACE_LIMIT:
        raise TooLarge(f"too many subspaces of GF({q})^{n} to search")
    best = [n + 1] * (t + 1)

    def record(k, dim):
        for r in range(1, k + 1):
            if dim < best[r]:
                best[r] = dim

    families = [("column", lambda U: mat_of_subspace(U, m))]
    if n == m:
        families.append(("row", lambda V: row_support(V, n)))
    for _, make in families:
        for U in all_subspaces(C.field, n):
            record(code_intersect(C, make(U)).t, U.dim)
    family = "column-support" if n < m else "column+row-support"
    return GeneralizedWeightsProfile(tuple(best[1:]), family)


def dual_distance_via_weights(C: MatrixCode, cap: int | None = None) -> tuple[int, int]:
    """``(d_perp, Rdef(C_perp))`` from the generalized weights of ``C``.

    With ``t = alpha*m + rho`` and ``w_r = n + 1 - a_{t+1-rm}`` for
    ``r = 1..alpha`` (a strictly increasing chain): ``d_perp = alpha + 1``
    when ``w_alpha = alpha``, else the least ``r`` with ``w_r > r``.  The
    answer is compared against the dual's minimum distance.
    """
    if C.is_trivial:
        raise TrivialCode("generalized weights need a non-trivial code")
    n, m, t = C.n, C.m, C.t
    alpha = t // m
    if t < m:
        dp, rdef_perp = 1, 0
    else:
        prof = generalized_weights(C)
        w = [n + 1 - prof[t + 1 - r * m] for r in range(1, alpha + 1)]
        if w[alpha - 1] == alpha:
            dp = alpha + 1
        else:
            dp = next((r for r in range(1, alpha + 1) if w[r - 1] > r), None)
            if dp is None:
                raise InvariantViolation(f"no admissible r in chain {w}")
        rdef_perp = alpha + 1 - dp
    direct = _dual_min_distance(C, cap)
    if direct != dp:
        raise InvariantViolation(f"generalized weights give d_perp={dp}, direct computation {direct}")
    if rank_defect(n, m, n * m - t, direct) != rdef_perp:
        raise InvariantViolation("dual rank defect mismatch")
    return dp, rdef_perp


def _dual_min_distance(C: MatrixCode, cap: int | None = None) -> int:
    cap = enumeration_cap(cap)
    D = dual_code(C)
    if D.cardinality <= cap:
        return min_distance(D, cap)
    q = C.field.order
    return macwilliams_transform(rank_distribution(C, cap), C.n, C.m, q).min_distance

"""Parameter sweeps that check the exact identities against enumeration.

Each suite returns a ``SuiteResult``; a failure carries the offending code
as a JSON document so it can be replayed with ``rankmetric analyze``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterator

from .codefile import code_to_dict, gabidulin_to_dict
from .codes import (
    CodeClass,
    DistributionQuery,
    analyze,
    check_defect_one_duality,
    complete_distribution,
    macwilliams_transform,
    qmrd_count_identity,
    qmrd_dual_criterion,
)
from .constructions import build_mrd, build_qmrd, coordinate_support_codes, sample_codes, sweep_shapes
from .errors import RankMetricError
from .field import field_from_order, prime_power
from .gabidulin import check_serie, expansion_preserves_rank, gab_analyze, moore_generator
from .matspace import MatrixCode
from .qcalc import alternating_partial_sum, pascal_matrix_pair, verify_gaussian_identities

SUITES = ("gaussian", "macwilliams", "completion", "bij", "qmrd-criterion", "serie")


@dataclass
class Sweep:
    qmax: int = 3
    nmax: int = 3
    mmax: int = 3
    tmax: int | None = None
    seed: int = 0
    samples: int = 3
    max_size: int = 1 << 20
    code: MatrixCode | None = None

    @property
    def qs(self) -> list[int]:
        out = []
        for q in range(2, self.qmax + 1):
            try:
                prime_power(q)
            except RankMetricError:
                continue
            out.append(q)
        return out


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    found: int = 0
    failures: list[str] = dc_field(default_factory=list)
    reproducers: list[dict] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str, doc: dict | None = None) -> None:
        self.failures.append(msg)
        if doc is not None:
            self.reproducers.append(doc)


def sweep_codes(sw: Sweep) -> Iterator[MatrixCode]:
    """Random samples, coordinate-support codes and MRD/QMRD constructions."""
    if sw.code is not None:
        yield sw.code
        return
    for params, C in sample_codes(sw.qs, sw.nmax, sw.mmax, sw.samples, sw.seed, sw.max_size, sw.max_size):
        if sw.tmax is None or params["t"] <= sw.tmax:
            yield C
    for q in sw.qs:
        for n, m in sweep_shapes(sw.nmax, sw.mmax):
            if q ** (n * m) > sw.max_size * sw.max_size:
                continue
            yield from coordinate_support_codes(q, n, m)
            for d in range(2, n + 1):
                C = build_mrd(q, n, m, d)
                if q**C.t <= sw.max_size and q ** (n * m - C.t) <= sw.max_size:
                    yield C
            for t in range(1, n * m):
                if t % m and q**t <= sw.max_size and q ** (n * m - t) <= sw.max_size:
                    yield build_qmrd(q, n, m, t)


def _per_code(name: str, sw: Sweep, check: Callable) -> SuiteResult:
    res = SuiteResult(name)
    for C in sweep_codes(sw):
        if C.is_trivial:
            continue
        try:
            check(C, res)
        except RankMetricError as exc:
            res.fail(f"{C!r}: {exc}", code_to_dict(C))
    return res


def suite_gaussian(sw: Sweep) -> SuiteResult:
    res = SuiteResult("gaussian")
    for q in sw.qs:
        rep = verify_gaussian_identities(12, q)
        res.checked += sum(rep.checked.values())
        if not rep.passed:
            res.fail(f"q={q}: identity {rep.counterexample[0]} fails at {rep.counterexample[1]}")
        try:
            for a in range(1, 9):
                pascal_matrix_pair(a, q)
                res.checked += 1
            for a in range(1, 11):
                for j in range(a + 1):
                    alternating_partial_sum(a, j, q)
                    res.checked += 1
        except RankMetricError as exc:
            res.fail(f"q={q}: {exc}")
    return res


def _check_macwilliams(C, res):
    rep = analyze(C, dual_method="enumerate")
    q, n, m = rep.q, rep.n, rep.m
    res.checked += 1
    B = macwilliams_transform(rep.distribution, n, m, q)
    if B != rep.dual_distribution:
        res.fail(f"{C!r}: transform {B.counts} != enumerated {rep.dual_distribution.counts}", code_to_dict(C))
    elif macwilliams_transform(B, n, m, q) != rep.distribution:
        res.fail(f"{C!r}: transform is not an involution", code_to_dict(C))


def suite_macwilliams(sw: Sweep) -> SuiteResult:
    return _per_code("macwilliams", sw, _check_macwilliams)


def query_from_report(rep) -> DistributionQuery:
    prefix = {i: rep.distribution[i] for i in range(rep.d, rep.n - rep.d_perp + 1)}
    return DistributionQuery(rep.q, rep.n, rep.m, rep.t, rep.d, rep.d_perp, prefix)


def _check_completion(C, res):
    rep = analyze(C)
    res.checked += 1
    got = complete_distribution(query_from_report(rep))
    if got != rep.distribution:
        res.fail(f"{C!r}: completion {got.counts} != enumerated {rep.distribution.counts}", code_to_dict(C))


def suite_completion(sw: Sweep) -> SuiteResult:
    return _per_code("completion", sw, _check_completion)


def _check_bij(C, res):
    rep = analyze(C)
    res.checked += 1
    if rep.d + rep.d_perp != rep.n:
        return
    if rep.t % rep.m == 0:
        check_defect_one_duality(C, rep)
        res.found += 1
    elif rep.rdef + rep.rdef_perp != 1:
        res.fail(f"{C!r}: d + d_perp = n, m does not divide t, but rdef + rdef_perp = "
                 f"{rep.rdef + rep.rdef_perp}", code_to_dict(C))


def suite_bij(sw: Sweep) -> SuiteResult:
    return _per_code("bij", sw, _check_bij)


def _check_qmrd(C, res):
    rep = analyze(C)
    if rep.code_class not in (CodeClass.QMRD, CodeClass.DUALLY_QMRD):
        return
    res.checked += 1
    res.found += 1
    qmrd_dual_criterion(C, rep)
    lhs, rhs = qmrd_count_identity(rep)
    if lhs != rhs:
        res.fail(f"{C!r}: MacWilliams identity at r=alpha gives {lhs} != {rhs}", code_to_dict(C))


def suite_qmrd_criterion(sw: Sweep) -> SuiteResult:
    return _per_code("qmrd-criterion", sw, _check_qmrd)


def moore_codes(sw: Sweep):
    for q in sw.qs:
        F = field_from_order(q)
        for n, m in sweep_shapes(sw.nmax, sw.mmax):
            for k in range(1, n):
                if q ** (m * max(k, n - k)) > sw.max_size:
                    continue
                yield moore_generator(F, m, n, k)


def suite_serie(sw: Sweep) -> SuiteResult:
    res = SuiteResult("serie")
    for C in moore_codes(sw):
        res.checked += 1
        try:
            rep = check_serie(C)
            if not rep.passed:
                res.fail(f"{C!r}: expansion check failed {rep}", gabidulin_to_dict(C))
            elif not expansion_preserves_rank(C):
                res.fail(f"{C!r}: expansion changes the rank of some codeword", gabidulin_to_dict(C))
            else:
                g = gab_analyze(C)
                if g.d + g.d_perp == g.n + 1:
                    res.fail(f"{C!r}: d + d_perp = n + 1 for a vector code", gabidulin_to_dict(C))
        except RankMetricError as exc:
            res.fail(f"{C!r}: {exc}", gabidulin_to_dict(C))
    return res


RUNNERS = {
    "gaussian": suite_gaussian,
    "macwilliams": suite_macwilliams,
    "completion": suite_completion,
    "bij": suite_bij,
    "qmrd-criterion": suite_qmrd_criterion,
    "serie": suite_serie,
}


def run(suite: str, sw: Sweep) -> list[SuiteResult]:
    names = SUITES if suite == "all" else (suite,)
    if sw.code is not None:
        names = [s for s in names if s not in ("gaussian", "serie")] or list(names)
    return [RUNNERS[s](sw) for s in names]

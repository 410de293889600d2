"""Acceptance criteria, one test each.

Every test records a one-line verdict; the lines are printed in the pytest
terminal summary (see conftest.py) and when this file is run directly.
"""

import time
from importlib import resources

import pytest

from rankmetric import codefile

from rankmetric.codes import (
    CodeClass,
    DistributionQuery,
    analyze,
    check_defect_one_duality,
    closed_form_mrd_qmrd,
    complete_distribution,
    dim1_dual_distribution,
    dual_distance_via_weights,
    macwilliams_transform,
    min_distance,
    qmrd_dual_criterion,
    rank_distribution,
)
from rankmetric.constructions import build_mrd, sample_codes, sweep_shapes
from rankmetric.errors import RankMetricError
from rankmetric.field import extension, field_from_order, field_make
from rankmetric.gabidulin import (
    GabidulinCode,
    check_serie,
    expansion_preserves_rank,
    gab_analyze,
    moore_generator,
)
from rankmetric.matspace import MatrixCode, all_subspaces, dual_code
from rankmetric.qcalc import alternating_partial_sum, gaussian, pascal_matrix_pair, verify_gaussian_identities
from rankmetric.verify import Sweep, sweep_codes

VERDICTS: dict[int, str] = {}

SWEEP_SECONDS = 0.0
SWEEP = Sweep(qmax=3, nmax=3, mmax=3, samples=6, seed=2024, max_size=1 << 20)


def verdict(num, ok, text):
    VERDICTS[num] = f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}: {text}"
    assert ok, VERDICTS[num]


@pytest.fixture(scope="module")
def sweep_reports():
    """(code, report) for every non-trivial code of the shared sweep."""
    global SWEEP_SECONDS
    start = time.perf_counter()
    out = []
    for C in sweep_codes(SWEEP):
        if not C.is_trivial:
            out.append((C, analyze(C, dual_method="enumerate")))
    SWEEP_SECONDS = time.perf_counter() - start
    return out


def random_sample_count():
    return sum(1 for _ in sample_codes(SWEEP.qs, 3, 3, SWEEP.samples, SWEEP.seed, SWEEP.max_size, SWEEP.max_size))


def test_01_example_reproduction():
    start = time.perf_counter()
    C = codefile.load_code(resources.files("rankmetric") / "data" / "exdualqmrd.json")
    rep = analyze(C)
    E33 = [[0, 0, 0], [0, 0, 0], [0, 0, 1]]
    crit = qmrd_dual_criterion(C, rep)
    elapsed = time.perf_counter() - start
    ok = (rep.t == 4 and rep.d == 2 and rep.code_class is CodeClass.QMRD
          and rep.distribution[2] == 9 and rep.distribution[3] == 6
          and rep.d_perp == 1 and E33 in dual_code(C)
          and not crit.holds and crit.a_d == 9 and crit.expected == gaussian(3, 2, 2) * (2 - 1) == 7
          and elapsed < 1.0)
    verdict(1, ok, f"t={rep.t} d={rep.d} class={rep.code_class.value} A={rep.distribution.counts} "
                   f"d_perp={rep.d_perp} criterion {crit.a_d} vs {crit.expected} ({elapsed:.3f}s)")


def test_02_macwilliams_oracle(sweep_reports):
    start = time.perf_counter()
    n_random = random_sample_count()
    bad = []
    for C, rep in sweep_reports:
        B = macwilliams_transform(rep.distribution, rep.n, rep.m, rep.q)
        if B != rep.dual_distribution or macwilliams_transform(B, rep.n, rep.m, rep.q) != rep.distribution:
            bad.append(C)
    elapsed = time.perf_counter() - start + SWEEP_SECONDS
    ok = not bad and n_random >= 200 and elapsed < 300
    verdict(2, ok, f"{len(sweep_reports)} codes ({n_random} random), {len(bad)} mismatches ({elapsed:.1f}s)")


def test_03_completion(sweep_reports):
    checked, bad = 0, []
    for C, rep in sweep_reports:
        if rep.d + rep.d_perp > rep.n + 1:
            continue
        prefix = {i: rep.distribution[i] for i in range(rep.d, rep.n - rep.d_perp + 1)}
        Q = DistributionQuery(rep.q, rep.n, rep.m, rep.t, rep.d, rep.d_perp, prefix)
        checked += 1
        if complete_distribution(Q) != rep.distribution:
            bad.append(C)
    ex = complete_distribution(DistributionQuery(2, 3, 3, 4, 2, 1, {2: 9}))
    ok = not bad and checked > 0 and ex[3] == 6
    verdict(3, ok, f"{checked} codes completed, {len(bad)} mismatches; example A_3={ex[3]}")


def test_04_closed_form(sweep_reports):
    checked, bad = 0, []
    for q in (2, 3):
        for n, m in sweep_shapes(3, 3):
            for d in range(1, n + 1):
                C = build_mrd(q, n, m, d)
                checked += 1
                if closed_form_mrd_qmrd(n, m, d, C.t, q) != rank_distribution(C):
                    bad.append((q, n, m, d))
    dq = 0
    for C, rep in sweep_reports:
        if rep.code_class is CodeClass.DUALLY_QMRD:
            dq += 1
            if closed_form_mrd_qmrd(rep.n, rep.m, rep.d, rep.t, rep.q) != rep.distribution:
                bad.append(C)
    e1 = closed_form_mrd_qmrd(2, 2, 2, 2, 2).counts
    e2 = closed_form_mrd_qmrd(2, 2, 2, 1, 2).counts
    ok = not bad and dq > 0 and e1 == (1, 0, 3) and e2 == (1, 0, 1)
    verdict(4, ok, f"{checked} MRD + {dq} dually QMRD codes, {len(bad)} mismatches; examples {e1} {e2}")


def test_05_defect_one_duality(sweep_reports):
    found, bad = 0, []
    for C, rep in sweep_reports:
        if rep.t % rep.m or rep.d + rep.d_perp != rep.n:
            continue
        found += 1
        try:
            a, b = check_defect_one_duality(C, rep)
        except RankMetricError:
            bad.append(C)
            continue
        if a != b or rep.rdef != 1 or rep.rdef_perp != 1:
            bad.append(C)
    verdict(5, not bad and found >= 5, f"{found} hypothesis-satisfying codes, {len(bad)} failures")


def gabidulin_sweep():
    for q in (2, 3):
        F = field_from_order(q)
        for n, m in sweep_shapes(3, 3):
            E = extension(F, m)
            for k in range(1, n):
                yield moore_generator(F, m, n, k, ext=E)
            if q ** (m * n) <= 512:
                for U in all_subspaces(E, n):
                    if 0 < U.dim < n:
                        yield GabidulinCode.from_generator(F, E, U.canon, n)


def test_06_trichotomy(sweep_reports):
    bad = []
    for C, rep in sweep_reports:
        n, s = rep.n, rep.d + rep.d_perp
        if rep.t % rep.m == 0:
            good = s == n + 2 or s <= n
        else:
            good = s <= n + 1
        good &= (s == n + 1) == (rep.code_class is CodeClass.DUALLY_QMRD)
        if s == n + 2:
            good &= rep.code_class is CodeClass.MRD
        if not good:
            bad.append(C)
    gab, gab_bad = 0, 0
    for G in gabidulin_sweep():
        rep = gab_analyze(G)
        gab += 1
        gab_bad += rep.d + rep.d_perp == rep.n + 1
    ok = not bad and gab_bad == 0
    verdict(6, ok, f"{len(sweep_reports)} matrix codes, {len(bad)} violations; "
                   f"{gab} vector codes, {gab_bad} with d+d_perp=n+1")


def test_07_one_dimensional_duals():
    checked, bad = 0, []
    for q in (2, 3):
        F = field_make(q)
        for n, m in sweep_shapes(3, 3):
            if n < 2:
                continue
            for d in range(1, n + 1):
                M = [[int(i == j and i < d) for j in range(m)] for i in range(n)]
                C = MatrixCode.span(F, n, m, [M])
                checked += 1
                if dim1_dual_distribution(q, n, m, d) != rank_distribution(dual_code(C))[1]:
                    bad.append((q, n, m, d))
    ex = dim1_dual_distribution(2, 2, 2, 2)
    verdict(7, not bad and ex == 3, f"{checked} (q,n,m,d) cases, {len(bad)} mismatches; q=2,n=m=2,d=2 -> {ex}")


def test_08_gaussian_suites():
    start = time.perf_counter()
    bad = []
    for q in (2, 3, 4, 5):
        rep = verify_gaussian_identities(12, q)
        if not rep.passed:
            bad.append((q, rep.counterexample))
        try:
            for a in range(1, 9):
                M, N = pascal_matrix_pair(a, q)
                I = [[int(i == j) for j in range(a)] for i in range(a)]
                mn = [[sum(M[i][k] * N[k][j] for k in range(a)) for j in range(a)] for i in range(a)]
                nm = [[sum(N[i][k] * M[k][j] for k in range(a)) for j in range(a)] for i in range(a)]
                if mn != I or nm != I:
                    bad.append((q, "pascal", a))
            for a in range(1, 11):
                for j in range(a + 1):
                    direct, closed = alternating_partial_sum(a, j, q)
                    if direct != closed:
                        bad.append((q, "sum", a, j))
        except RankMetricError as exc:
            bad.append((q, str(exc)))
    elapsed = time.perf_counter() - start
    verdict(8, not bad and elapsed < 10, f"q in 2..5, {len(bad)} failures ({elapsed:.2f}s)")


def test_09_expansion():
    checked, bad = 0, []
    for q in (2, 3):
        F = field_from_order(q)
        for n, m in sweep_shapes(3, 3):
            for k in range(1, n):
                C = moore_generator(F, m, n, k)
                rep = check_serie(C)
                checked += 1
                if not (rep.dimension == m * k and rep.passed and expansion_preserves_rank(C)):
                    bad.append((q, n, m, k))
    verdict(9, not bad and checked > 0, f"{checked} Moore codes, {len(bad)} failures")


def test_10_dual_distance_via_weights():
    sw = Sweep(qmax=2, nmax=3, mmax=3, samples=6, seed=2024)
    checked, short, bad = 0, 0, []
    for C in sweep_codes(sw):
        if C.is_trivial:
            continue
        try:
            got = dual_distance_via_weights(C)
        except RankMetricError as exc:
            bad.append((C, str(exc)))
            continue
        if C.t < C.m:
            short += 1
            if got != (1, 0):
                bad.append((C, got))
            continue
        checked += 1
        direct = min_distance(dual_code(C))
        if got != (direct, C.t // C.m + 1 - direct):
            bad.append((C, got))
    verdict(10, not bad and checked > 0, f"{checked} codes with t>=m, {short} with t<m, {len(bad)} disagreements")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))

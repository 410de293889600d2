import pytest
from hypothesis import given, settings, strategies as st

from rankmetric.codes import (
    CodeClass,
    DistributionQuery,
    RankDistribution,
    analyze,
    check_defect_one_duality,
    classify,
    closed_form_mrd_qmrd,
    complete_distribution,
    dim1_dual_distribution,
    dim_formula_check,
    dual_distance_via_weights,
    generalized_weights,
    macwilliams_transform,
    min_distance,
    qmrd_count_identity,
    qmrd_dual_criterion,
    rank_distribution,
)
from rankmetric.constructions import build_mrd, build_qmrd, example_exdualqmrd, random_code
from rankmetric.errors import (
    EnumerationTooLarge,
    HypothesisFailed,
    InconsistentInput,
    NegativeCount,
    NotApplicable,
    NotQMRD,
    PrefixMissing,
    TrivialCode,
    ZeroCode,
)
from rankmetric.field import field_make
from rankmetric.matspace import MatrixCode, Subspace, dual_code, mat_of_subspace

I2 = [[1, 0], [0, 1]]


def mat_e1(q, n=2, m=2):
    F = field_make(q)
    return mat_of_subspace(Subspace.span(F, n, [[1] + [0] * (n - 1)]), m)


def f4_code():
    return MatrixCode.span(field_make(2), 2, 2, [I2, [[0, 1], [1, 1]]])


# -- enumeration ------------------------------------------------------------


def test_zero_code_distribution(gf2):
    assert rank_distribution(MatrixCode.zero(gf2, 2, 2)).counts == (1, 0, 0)
    with pytest.raises(ZeroCode):
        min_distance(MatrixCode.zero(gf2, 2, 2))


def test_full_space_census(gf2):
    assert rank_distribution(MatrixCode.full(gf2, 2, 2)).counts == (1, 9, 6)
    assert min_distance(MatrixCode.full(gf2, 2, 2)) == 1


def test_example_code_counts():
    C = example_exdualqmrd()
    assert rank_distribution(C).counts == (1, 0, 9, 6)
    assert min_distance(C) == 2
    assert min_distance(dual_code(C)) == 1


def test_enumeration_cap(gf2):
    with pytest.raises(EnumerationTooLarge):
        rank_distribution(MatrixCode.full(gf2, 3, 3), cap=100)


def test_cap_from_environment(gf2, monkeypatch):
    monkeypatch.setenv("RANKMETRIC_CAP", "8")
    with pytest.raises(EnumerationTooLarge):
        rank_distribution(MatrixCode.full(gf2, 2, 2))


def test_workers_do_not_change_counts():
    C = random_code(3, 2, 3, 4, seed=11)
    assert rank_distribution(C, workers=2) == rank_distribution(C)


def test_distribution_validation():
    with pytest.raises(NegativeCount):
        RankDistribution(1, (1, -1))
    with pytest.raises(InconsistentInput):
        RankDistribution(2, (1, 1))


# -- analyze / classify -----------------------------------------------------


def test_analyze_example():
    rep = analyze(example_exdualqmrd())
    assert (rep.t, rep.d, rep.d_perp) == (4, 2, 1)
    assert rep.code_class is CodeClass.QMRD
    assert (rep.alpha, rep.rho) == (1, 1)
    assert rep.dual_distribution.counts == (1, 1, 18, 12)


def test_analyze_f4_mrd():
    rep = analyze(f4_code())
    assert rep.code_class is CodeClass.MRD
    assert rep.d == 2 and rep.d + rep.d_perp == 4


def test_analyze_mat_e1_dually_amrd():
    rep = analyze(mat_e1(2))
    assert (rep.t, rep.d, rep.d_perp, rep.rdef, rep.rdef_perp) == (2, 1, 1, 1, 1)
    assert rep.code_class is CodeClass.DUALLY_AMRD


def test_analyze_trivial(gf2):
    with pytest.raises(TrivialCode):
        analyze(MatrixCode.full(gf2, 2, 2))
    with pytest.raises(TrivialCode):
        analyze(MatrixCode.zero(gf2, 2, 2))


def test_dual_via_macwilliams_when_dual_too_big():
    C = random_code(2, 3, 3, 8, seed=0)
    rep = analyze(C, cap=300, dual_method="auto")
    assert rep.dual_source == "enumeration"
    assert analyze(dual_code(C), cap=100).dual_source == "macwilliams"
    rep2 = analyze(C, dual_method="macwilliams")
    assert rep2.dual_source == "macwilliams"
    assert rep2.dual_distribution == rep.dual_distribution


def test_classify_precedence():
    assert classify(2, 2, 2, 2, 2) is CodeClass.MRD
    assert classify(3, 3, 4, 2, 1) is CodeClass.QMRD
    assert classify(2, 2, 1, 2, 1) is CodeClass.DUALLY_QMRD
    assert classify(2, 2, 2, 1, 1) is CodeClass.DUALLY_AMRD
    assert classify(3, 3, 3, 2, 2) is CodeClass.AMRD
    assert classify(3, 3, 3, 2, 1) is CodeClass.DUALLY_AMRD
    assert classify(3, 3, 2, 1, 1) is CodeClass.OTHER


@pytest.mark.parametrize("q,n,m,d", [(2, 2, 2, 2), (2, 3, 3, 2), (3, 2, 3, 2), (2, 3, 3, 3)])
def test_mrd_dual_is_mrd(q, n, m, d):
    C = build_mrd(q, n, m, d)
    assert analyze(C).code_class is CodeClass.MRD
    assert analyze(dual_code(C)).code_class is CodeClass.MRD


# -- MacWilliams ------------------------------------------------------------


def test_macwilliams_examples():
    assert macwilliams_transform(RankDistribution(2, (1, 0, 0)), 2, 2, 2).counts == (1, 9, 6)
    assert macwilliams_transform(RankDistribution(2, (1, 1, 0)), 2, 2, 2).counts == (1, 5, 2)
    A = RankDistribution(3, (1, 0, 9, 6))
    B = macwilliams_transform(A, 3, 3, 2)
    assert B.counts == (1, 1, 18, 12)
    assert macwilliams_transform(B, 3, 3, 2) == A


def test_macwilliams_rejects_invalid():
    with pytest.raises(InconsistentInput):
        macwilliams_transform(RankDistribution(2, (1, 2, 0)), 2, 2, 2)
    with pytest.raises((InconsistentInput, NegativeCount)):
        macwilliams_transform(RankDistribution(2, (1, 0, 1)), 2, 2, 3)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3]), st.sampled_from([(2, 2), (2, 3), (3, 3)]), st.integers(1, 8), st.integers(0, 2**31))
def test_macwilliams_matches_dual_enumeration(q, shape, t, seed):
    n, m = shape
    t = min(t, n * m - 1)
    if q**t > 1 << 14 or q ** (n * m - t) > 1 << 14:
        return
    C = random_code(q, n, m, t, seed)
    B = macwilliams_transform(rank_distribution(C), n, m, q)
    assert B == rank_distribution(dual_code(C))


# -- completion -------------------------------------------------------------


def test_complete_example():
    A = complete_distribution(DistributionQuery(2, 3, 3, 4, 2, 1, {2: 9}))
    assert A.counts == (1, 0, 9, 6)


def test_complete_mrd_empty_prefix():
    Q = DistributionQuery(2, 2, 2, 2, 2, 2, {})
    assert Q.delta == 1
    assert complete_distribution(Q).counts == (1, 0, 3)


def test_complete_errors():
    with pytest.raises(PrefixMissing):
        complete_distribution(DistributionQuery(2, 3, 3, 4, 2, 1, {}))
    with pytest.raises(NegativeCount):
        complete_distribution(DistributionQuery(2, 3, 3, 4, 2, 1, {2: 20}))
    with pytest.raises(InconsistentInput):
        complete_distribution(DistributionQuery(2, 2, 2, 2, 2, 3, {}))


def test_complete_prefix_range_empty_when_large_dual_distance():
    Q = DistributionQuery(2, 3, 3, 3, 3, 2, {})
    assert list(Q.prefix_range) == []


# -- closed forms -----------------------------------------------------------


def test_closed_form_examples():
    assert closed_form_mrd_qmrd(2, 2, 2, 2, 2).counts == (1, 0, 3)
    assert closed_form_mrd_qmrd(2, 2, 2, 1, 2).counts == (1, 0, 1)
    assert closed_form_mrd_qmrd(3, 3, 3, 3, 2) == rank_distribution(build_mrd(2, 3, 3, 3))
    with pytest.raises(NotApplicable):
        closed_form_mrd_qmrd(3, 3, 1, 4, 2)


# -- QMRD criterion ---------------------------------------------------------


def test_qmrd_criterion_example():
    res = qmrd_dual_criterion(example_exdualqmrd())
    assert (res.holds, res.a_d, res.expected, res.dual_is_qmrd) == (False, 9, 7, False)


def test_qmrd_criterion_span_identity(gf2):
    res = qmrd_dual_criterion(MatrixCode.span(gf2, 2, 2, [I2]))
    assert res.holds and res.a_d == 1 == res.expected


def test_qmrd_criterion_rejects_non_qmrd():
    with pytest.raises(NotQMRD):
        qmrd_dual_criterion(f4_code())


def test_qmrd_criterion_random_samples():
    n = m = 3
    count = 0
    for t in (1, 2, 4, 5):
        for s in range(80):
            C = random_code(2, n, m, t, seed=1000 * t + s)
            rep = analyze(C)
            if rep.code_class not in (CodeClass.QMRD, CodeClass.DUALLY_QMRD):
                continue
            res = qmrd_dual_criterion(C, rep)
            assert res.holds == (rep.d + rep.d_perp == n + 1)
            lhs, rhs = qmrd_count_identity(rep)
            assert lhs == rhs
            count += 1
    assert count >= 20


def test_qmrd_construction_is_qmrd():
    for t in (1, 2, 4, 5, 7, 8):
        rep = analyze(build_qmrd(2, 3, 3, t))
        assert rep.code_class in (CodeClass.QMRD, CodeClass.DUALLY_QMRD)


# -- dimension formula / defect-one duality ---------------------------------


def test_dim_formula(gf2):
    C = mat_e1(2)
    assert dim_formula_check(C, Subspace.span(gf2, 2, [[1, 0]])) == (2, 2)
    assert dim_formula_check(C, Subspace.full(gf2, 2)) == (2, 2)
    assert dim_formula_check(C, Subspace.zero(gf2, 2)) == (0, 0)
    D = random_code(2, 3, 3, 5, seed=3)
    for U in [Subspace.span(gf2, 3, [[1, 1, 0]]), Subspace.span(gf2, 3, [[1, 0, 0], [0, 1, 1]])]:
        lhs, rhs = dim_formula_check(D, U)
        assert lhs == rhs


@pytest.mark.parametrize("q,expected", [(2, 3), (3, 8)])
def test_defect_one_duality_mat_e1(q, expected):
    assert check_defect_one_duality(mat_e1(q)) == (expected, expected)


def test_defect_one_duality_random_search():
    # with t = m = 3, d_perp = 2 would make the dual MRD; only (d, d_perp) = (2, 1) is reachable
    found = 0
    for s in range(2000):
        C = random_code(2, 3, 3, 3, seed=s)
        rep = analyze(C)
        if rep.d + rep.d_perp == 3:
            assert (rep.d, rep.d_perp) == (2, 1)
            a, b = check_defect_one_duality(C, rep)
            assert a == b
            found += 1
            if found == 3:
                break
    assert found > 0


def test_defect_one_duality_hypotheses():
    with pytest.raises(HypothesisFailed, match="divide"):
        check_defect_one_duality(example_exdualqmrd())
    with pytest.raises(HypothesisFailed, match="d_perp"):
        check_defect_one_duality(f4_code())


# -- one-dimensional codes --------------------------------------------------


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 3)])
def test_dim1_formula_against_enumeration(q, n, m):
    F = field_make(q)
    for d in range(1, n + 1):
        M = [[int(i == j and i < d) for j in range(m)] for i in range(n)]
        C = MatrixCode.span(F, n, m, [M])
        assert dim1_dual_distribution(q, n, m, d) == rank_distribution(dual_code(C))[1]


def test_dim1_example():
    assert dim1_dual_distribution(2, 2, 2, 2) == 3
    with pytest.raises(NotApplicable):
        dim1_dual_distribution(2, 1, 2, 1)


# -- generalized weights ----------------------------------------------------


def test_generalized_weights_examples():
    prof = generalized_weights(f4_code())
    assert prof[1] == 2 and prof.anticode_family == "column+row-support"
    prof = generalized_weights(mat_e1(2))
    assert prof.a == (1, 1)
    prof = generalized_weights(build_mrd(2, 2, 3, 2))
    assert prof.anticode_family == "column-support"
    assert prof[len(prof.a)] == 2


@pytest.mark.parametrize("d", [1, 2, 3])
def test_generalized_weights_monotone_and_top(d):
    prof = generalized_weights(build_mrd(2, 3, 3, d))
    assert list(prof.a) == sorted(prof.a)
    assert prof.a[-1] == 3
    assert prof[1] == d


def test_dual_distance_via_weights_examples(gf2):
    assert dual_distance_via_weights(mat_e1(2)) == (1, 1)
    assert dual_distance_via_weights(f4_code()) == (2, 0)
    assert dual_distance_via_weights(MatrixCode.span(gf2, 2, 2, [I2])) == (1, 0)

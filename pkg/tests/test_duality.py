import pytest
from hypothesis import given

from conftest import stable_reps
from negn.duality import (
    CheckReport,
    check_classic,
    check_constant_term,
    check_prop1,
    check_prop2,
    check_z2,
    exhaustive_corpus,
    random_corpus,
    run_checks,
)
from negn.invariants import casimir_formula, dim_polynomial, dim_stable
from negn.laurent import LaurentPoly, N, interpolate
from negn.partitions import EMPTY, YoungDiagram, partition_count, partitions, transpose
from negn.stable import StableRep, n_min, swap

Y = YoungDiagram


def D(lam, tau):
    return StableRep(Y(lam), Y(tau))


def test_classic_examples():
    r = check_classic(Y((1,)))
    assert r.holds and r.sign == -1 and r.witness[0] == N
    r = check_classic(Y((3, 3, 1)))
    assert r.holds and r.sign == -1
    sym = check_classic(Y((2,)))
    assert sym.holds and sym.sign == 1
    half = LaurentPoly({0: "1/2"})
    assert sym.witness[0] == (N * N + N) * half
    assert dim_polynomial(StableRep(Y((1, 1)), EMPTY)) == (N * N - N) * half


def test_prop1_examples():
    r = check_prop1(D((1,), (1,)))
    assert r.holds and r.sign == 1
    assert r.witness == (N**2 - 1, N**2 - 1)
    r = check_prop1(D((4, 2, 1), (3, 1)))
    assert r.holds and r.sign == -1
    r = check_prop1(D((1,), ()))
    assert r.holds and r.sign == -1 and r.witness[0] == N


def test_prop2_examples():
    assert check_prop2(D((1,), (1,))).holds
    r = check_prop2(D((2,), ()))
    assert r.holds
    assert r.witness[0] == casimir_formula(D((2,), ()))
    assert r.witness[1] == -casimir_formula(D((1, 1), ())).substitute_neg()
    assert check_prop2(D((4, 2, 1), (3, 1))).holds


def test_z2_examples():
    assert check_z2(D((1,), (1,))).holds
    assert check_z2(D((2,), (1,))).holds
    r = check_z2(D((4, 2, 1), (3, 1)))
    assert r.holds
    assert r.witness[1] == dim_polynomial(D((2, 1, 1), (3, 2, 1, 1)))


def test_constant_term_examples():
    r = check_constant_term(D((2, 1), ()))
    assert r.holds and r.witness[0] == LaurentPoly()
    assert casimir_formula(D((2, 1), ())) == 3 * N - 9 * LaurentPoly.monomial(-1)
    r = check_constant_term(D((1,), (1,)))
    assert r.holds
    r = check_constant_term(D((2,), ()))
    assert r.holds is None and r.detail == "not applicable"


def test_constant_term_vanishes_when_lambda_equals_tau():
    # With tau entering through row lengths, the constant parts of the lambda and
    # tau blocks are c(lam) and -c(tau); they cancel for lam == tau.
    for area in range(7):
        for lam in partitions(area):
            assert casimir_formula(StableRep(lam, lam)).coeff(0) == 0


def test_constant_term_for_lambda_equal_tau_transpose_is_twice_the_lambda_part():
    for area in range(7):
        for lam in partitions(area):
            c = casimir_formula(StableRep(lam, transpose(lam))).coeff(0)
            assert c == 2 * casimir_formula(StableRep(lam, EMPTY)).coeff(0)
    report = check_constant_term(D((2,), (1, 1)))
    assert report.holds is False
    assert report.witness[0] == LaurentPoly.constant(4)


def test_failure_detail_distinguishes_sign():
    from negn.duality import _compare

    r = _compare("x", D((), ()), N, -N, 1)
    assert not r.holds and "sign" in r.detail
    r = _compare("x", D((), ()), N, N + 1, 1)
    assert r.detail == "sides differ"


def test_random_corpus_examples():
    assert random_corpus(42, 0, 3) == [D((), ())] * 3
    reps = random_corpus(42, 6, 100)
    assert len(reps) == 100
    assert all(r.lam.area <= 6 and r.tau.area <= 6 for r in reps)
    assert random_corpus(42, 6, 100) == reps
    assert random_corpus(43, 6, 100) != reps
    with pytest.raises(ValueError):
        random_corpus(1, -1, 3)


def test_random_partitions_are_uniform_within_an_area():
    import random
    from collections import Counter

    from negn.duality import random_partition

    rng = random.Random(5)
    n = 6
    draws = Counter(random_partition(rng, n) for _ in range(11000))
    assert set(draws) == set(partitions(n))
    expected = 11000 / partition_count(n)
    assert all(abs(c - expected) < 0.15 * expected for c in draws.values())


def test_exhaustive_corpus_size_and_order():
    reps = exhaustive_corpus(4)
    assert len(reps) == 144
    assert reps == sorted(reps)
    assert reps[0] == D((), ()) and reps[-1] == D((4,), (4,))


def test_all_identities_on_exhaustive_corpus():
    for rep in exhaustive_corpus(3):
        assert check_prop1(rep).holds
        assert check_prop2(rep).holds
        assert check_z2(rep).holds


@given(stable_reps(max_area=5))
def test_prop1_swap_consistency(rep):
    a, b = check_prop1(rep), check_prop1(swap(rep))
    assert a.sign == b.sign
    assert b.witness[0] == a.witness[0].substitute_neg() * a.sign
    assert a.witness[0] == b.witness[0].substitute_neg() * b.sign


@given(stable_reps(max_area=5))
def test_witnesses_survive_double_negation(rep):
    for report in (check_prop1(rep), check_prop2(rep), check_z2(rep)):
        for side in report.witness:
            assert side.substitute_neg().substitute_neg() == side


@given(stable_reps(max_area=4))
def test_kernel_interpolation_matches_divided_differences(rep):
    nodes = range(n_min(rep), n_min(rep) + rep.area + 4)
    assert dim_polynomial(rep) == interpolate((n, dim_stable(rep, n)) for n in nodes)


def test_report_json_schema():
    obj = check_prop1(D((4, 2, 1), (3, 1))).to_json_obj()
    assert list(obj)[:5] == ["identity", "lambda", "tau", "holds", "sign"]
    assert obj["identity"] == "prop1" and obj["sign"] == -1 and obj["holds"] is True
    assert obj["lhs"] == obj["rhs_transformed"]
    assert LaurentPoly.from_json(obj["lhs"]) == dim_polynomial(D((4, 2, 1), (3, 1)))
    classic = check_classic(Y((2, 1))).to_json_obj()
    assert classic["lambda"] == [2, 1] and classic["tau"] == []


def test_run_checks_parallel_matches_serial():
    reps = random_corpus(3, 4, 40)
    serial = run_checks(reps, ["prop1", "prop2", "z2"], workers=1)
    parallel = run_checks(reps, ["prop1", "prop2", "z2"], workers=2, parallel_threshold=1)
    assert serial == parallel
    assert [(r.identity, r.subject) for r in serial[:3]] == [(n, reps[0]) for n in ("prop1", "prop2", "z2")]
    with pytest.raises(KeyError):
        run_checks(reps, ["nope"])


def test_check_report_is_plain_data():
    r = CheckReport("prop1", D((), ()), True, 1, (N, N))
    assert r.applicable

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from negn.laurent import LaurentPoly, N, interpolate

L = LaurentPoly
ONE = L.constant(1)
INV = L.monomial(-1)


def test_ring_examples():
    assert (N**2 - 1) + 1 == N**2
    assert (N - 1) * (N + 1) == N**2 - 1
    assert ((N + INV) - (N + INV)).is_zero()


def test_canonical_form_drops_zeros():
    p = L({3: 0, 1: Fraction(2, 4), 0: 0})
    assert p.items() == [(1, Fraction(1, 2))]
    assert L({0: 0}) == L()
    assert L().degree is None


def test_substitute_neg_examples():
    assert (N**2 - 1).substitute_neg() == N**2 - 1
    assert (N - INV).substitute_neg() == -N + INV
    assert (2 * N).substitute_neg() == -2 * N


def test_evaluate_examples():
    assert (N**2 - 1).evaluate(4) == 15
    assert (N - INV).evaluate(2) == Fraction(3, 2)
    with pytest.raises(ZeroDivisionError):
        (N - INV).evaluate(0)
    assert (N**2 + 1).evaluate(0) == 1


def test_interpolate_examples():
    assert interpolate([(1, 0), (2, 3), (3, 8)]) == N**2 - 1
    assert interpolate([(5, 1)]) == ONE
    p = interpolate([(1, 1), (2, 2), (3, 3), (4, 4)])
    assert p == N
    assert p.coeff(3) == 0 and p.coeff(2) == 0


def test_interpolate_rejects_bad_input():
    with pytest.raises(ValueError):
        interpolate([(1, 1), (1, 2)])
    with pytest.raises(ValueError):
        interpolate([])


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        L({1: 0.5})


def test_text_rendering():
    assert str(N**2 - 1) == "N^2 - 1"
    assert str(2 * N) == "2N"
    assert str(N - INV) == "N - 1/N"
    assert str(-N) == "-N"
    assert str(L()) == "0"
    assert str(L({2: Fraction(1, 2), -2: Fraction(-3, 4)})) == "(1/2)N^2 - 3/(4N^2)"


def test_latex_rendering():
    assert (N**2 - 1).to_latex() == "N^{2}-1"
    assert (3 * N - 9 * INV).to_latex() == r"3N-\frac{9}{N}"
    assert L({1: Fraction(1, 2), -1: Fraction(1, 3)}).to_latex() == r"\frac{1}{2}N+\frac{1}{3N}"


def test_json_form():
    assert (N**2 - 1).to_json_obj() == {"2": "1", "0": "-1"}
    text = '{"2":"1/2","0":"-7","-1":"3"}'
    assert L.from_json(text).to_json() == text


coeffs = st.dictionaries(
    st.integers(min_value=-4, max_value=6),
    st.fractions(max_denominator=12).filter(lambda f: abs(f) < 100),
    max_size=6,
)


@given(coeffs)
def test_substitute_neg_involution(c):
    p = L(c)
    assert p.substitute_neg().substitute_neg() == p


@given(coeffs, coeffs, coeffs)
def test_ring_axioms(a, b, c):
    p, q, r = L(a), L(b), L(c)
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p - p == L()


@given(coeffs)
def test_json_round_trip(c):
    p = L(c)
    assert L.from_json(p.to_json()) == p
    assert L.from_json(p.to_json()).to_json() == p.to_json()


def test_substitute_neg_matches_negated_evaluation_randomized():
    rng = random.Random(1234)
    for _ in range(1000):
        c = {rng.randint(-5, 7): Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(rng.randint(0, 6))}
        n = Fraction(rng.choice([-1, 1]) * rng.randint(1, 40), rng.randint(1, 5))
        p = L(c)
        assert p.substitute_neg().evaluate(n) == p.evaluate(-n)
        assert p.evaluate(n) == oracles.poly_eval(c, n)


@given(st.lists(st.fractions(max_denominator=7), min_size=1, max_size=9), st.integers(-20, 20))
def test_interpolation_reproduces_points(values, start):
    pts = [(start + 3 * i, v) for i, v in enumerate(values)]
    p = interpolate(pts)
    assert p.is_polynomial()
    assert p.degree is None or p.degree < len(pts)
    for x, y in pts:
        assert p.evaluate(x) == y

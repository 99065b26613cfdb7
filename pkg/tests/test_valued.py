import math
import random
from fractions import Fraction as Q

import pytest

from helpers import T, X_Y_T, poly, random_polynomial, rq
from tropkit import ResidueLaurentPolynomial, ValuedScalar, initial_form, is_monomial, omega_weight, residue, valuation


def R(n, terms):
    return ResidueLaurentPolynomial(n, terms)


def test_valuation_examples():
    assert valuation(T(1)) == 1
    assert valuation(ValuedScalar({0: 3, Q(1, 2): 2})) == 0
    assert valuation(ValuedScalar()) == math.inf


def test_residue_examples():
    assert residue(T(1)) == 1
    assert residue(ValuedScalar({0: 3, Q(1, 2): 2})) == 3
    assert residue(ValuedScalar({2: 5, 3: 7})) == 5
    with pytest.raises(ValueError):
        residue(ValuedScalar())


def test_scalar_arithmetic_cancels():
    a = ValuedScalar({1: 2, 2: 1})
    b = ValuedScalar({1: -2})
    assert (a + b) == ValuedScalar({2: 1})
    assert valuation(a + b) == 2
    assert (a * b).terms == {2: -4, 3: -2}
    assert valuation(a * b) == valuation(a) + valuation(b)


@pytest.mark.parametrize("w, expected", [((1, 1), 1), ((0, 0), 0), ((0, 1), 0)])
def test_omega_weight_examples(w, expected):
    assert omega_weight(X_Y_T, w) == expected


@pytest.mark.parametrize(
    "w, expected",
    [
        ((1, 1), {(1, 0): 1, (0, 1): 1, (0, 0): 1}),
        ((0, 0), {(1, 0): 1, (0, 1): 1}),
        ((0, 1), {(1, 0): 1}),
    ],
)
def test_initial_form_examples(w, expected):
    assert initial_form(X_Y_T, w) == R(2, expected)


def test_is_monomial_examples():
    assert not is_monomial(R(2, {(1, 0): 1, (0, 1): 1}))
    assert is_monomial(R(2, {(2, -1): 3}))
    assert not is_monomial(R(1, {(2,): 1, (0,): 1}))


def test_omega_weight_of_zero_and_bad_dimension():
    assert omega_weight(poly(2, {}), (0, 0)) == math.inf
    with pytest.raises(ValueError):
        omega_weight(X_Y_T, (1,))
    with pytest.raises(ValueError):
        initial_form(poly(2, {}), (0, 0))


def test_repeated_pairs_sum():
    f = poly(1, {(1,): [(0, 1), (0, 2), (1, 5)]})
    assert f.terms[(1,)] == ValuedScalar({0: 3, 1: 5})


def test_scaled_equal_up_to_torus():
    g = R(2, {(1, 0): 1, (0, 1): 2})
    h = R(2, {(2, 1): 3, (1, 2): 6})
    assert g.scaled_equal(h)
    assert not g.scaled_equal(R(2, {(2, 1): 3, (1, 2): 5}))


def _brute_initial(f, w):
    vals = {u: c.valuation() + sum(a * b for a, b in zip(u, w)) for u, c in f.terms.items()}
    m = min(vals.values())
    return {u: f.terms[u].residue() for u, v in vals.items() if v == m}


@pytest.mark.parametrize("seed", range(10))
def test_initial_form_against_brute_force(seed):
    rng = random.Random(seed)
    f = random_polynomial(rng)
    for _ in range(20):
        w = tuple(rq(rng) for _ in range(f.n))
        assert initial_form(f, w).terms == _brute_initial(f, w)


@pytest.mark.parametrize("seed", range(10))
def test_omega_weight_concave(seed):
    rng = random.Random(100 + seed)
    f = random_polynomial(rng)
    for _ in range(10):
        w1 = tuple(rq(rng) for _ in range(f.n))
        w2 = tuple(rq(rng) for _ in range(f.n))
        lam = Q(rng.randint(0, 8), 8)
        mid = tuple(lam * a + (1 - lam) * b for a, b in zip(w1, w2))
        assert omega_weight(f, mid) >= lam * omega_weight(f, w1) + (1 - lam) * omega_weight(f, w2)


@pytest.mark.parametrize("seed", range(10))
def test_initial_form_multiplicative(seed):
    rng = random.Random(200 + seed)
    f = random_polynomial(rng, n=2)
    g = random_polynomial(rng, n=2)
    h = f * g
    for _ in range(10):
        w = tuple(rq(rng) for _ in range(2))
        assert initial_form(h, w) == initial_form(f, w) * initial_form(g, w)
        assert omega_weight(h, w) == omega_weight(f, w) + omega_weight(g, w)


def _threshold(f, w, dw):
    """Largest step below which in_{w + eps dw}(f) keeps refining in_w(f)."""
    vals = {u: c.valuation() + sum(a * b for a, b in zip(u, w)) for u, c in f.terms.items()}
    m = min(vals.values())
    ini = [u for u, v in vals.items() if v == m]
    bound = Q(1)
    for u, v in vals.items():
        if v == m:
            continue
        for i in ini:
            slope = sum((a - b) * d for a, b, d in zip(i, u, dw))
            if slope > 0:
                bound = min(bound, (v - m) / slope)
    return bound / 2


@pytest.mark.parametrize("seed", range(10))
def test_toric_perturbation(seed):
    rng = random.Random(300 + seed)
    f = random_polynomial(rng, n=2, spread=1)
    # pick w on a tie often, so that in_w is not a monomial
    for _ in range(10):
        u, v = rng.sample(list(f.terms), 2)
        w = tuple(rq(rng) for _ in range(2))
        diff = tuple(a - b for a, b in zip(u, v))
        gap = f.terms[v].valuation() - f.terms[u].valuation()
        k = next((i for i, x in enumerate(diff) if x), None)
        if k is not None:
            rest = sum(diff[i] * w[i] for i in range(2) if i != k)
            w = tuple((gap - rest) / diff[k] if i == k else w[i] for i in range(2))
        dw = tuple(rq(rng) for _ in range(2))
        eps = _threshold(f, w, dw)
        lhs = initial_form(initial_form(f, w).to_valued(), dw)
        rhs = initial_form(f, tuple(a + eps * b for a, b in zip(w, dw)))
        assert lhs == rhs

"""Exact Laurent polynomial arithmetic, rendering and evaluation."""

import random

import pytest

from tlbraid import LaurentPoly, delta, format_jones, jones_substitute


def _random_poly(rng, max_terms=5, exp_range=50, coeff_range=10**6):
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        e = rng.randint(-exp_range, exp_range)
        c = rng.randint(-coeff_range, coeff_range)
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(terms)


def test_monomial_and_zero():
    m = LaurentPoly.monomial(3, -2)
    assert m.terms == {-2: 3}
    assert LaurentPoly.monomial(0, 7) == LaurentPoly.zero()
    assert LaurentPoly({5: 0}).is_zero()
    assert LaurentPoly.one().terms == {0: 1}


def test_delta_square_hand_expanded():
    # (-A^2 - A^-2)^2 = A^4 + 2 + A^-4
    assert (delta() * delta()).terms == {4: 1, 0: 2, -4: 1}


def test_delta_cube():
    # (-A^2 - A^-2)^3 = -(A^6 + 3A^2 + 3A^-2 + A^-6)
    assert (delta() ** 3).terms == {6: -1, 2: -3, -2: -3, -6: -1}


def test_addition_cancels():
    p = LaurentPoly({3: 1, 0: 2})
    q = LaurentPoly({3: -1, 0: -2})
    assert (p + q).is_zero()


def test_ring_axioms_random():
    rng = random.Random(1400)
    for _ in range(200):
        p, q, r = (_random_poly(rng, coeff_range=100) for _ in range(3))
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) * r == p * r + q * r
        assert (p * q) * r == p * (q * r)
        assert p * LaurentPoly.one() == p
        assert p + LaurentPoly.zero() == p


def test_pow_matches_repeated_product():
    rng = random.Random(7)
    for _ in range(30):
        p = _random_poly(rng, coeff_range=20, exp_range=8)
        acc = LaurentPoly.one()
        for k in range(5):
            assert p**k == acc
            acc = acc * p
    with pytest.raises(ValueError):
        delta() ** -1


def test_invert_variable_is_ring_involution():
    rng = random.Random(99)
    for _ in range(100):
        p = _random_poly(rng)
        q = _random_poly(rng)
        assert p.invert_variable().invert_variable() == p
        assert (p * q).invert_variable() == p.invert_variable() * q.invert_variable()
        assert (p + q).invert_variable() == p.invert_variable() + q.invert_variable()


def test_evaluate_phase_known_points():
    import math

    # loop value at the golden phase is the golden ratio
    phi = (1 + math.sqrt(5)) / 2
    v = delta().evaluate_phase(3 * math.pi / 5)
    assert abs(v - phi) < 1e-12
    assert abs(delta().evaluate_phase(math.pi / 4)) < 1e-12
    assert LaurentPoly.one().evaluate_phase(1.234) == 1


def test_evaluate_phase_is_multiplicative():
    # relative tolerance: products of ~1e6-coefficient values carry ~1e-16
    # relative float error, so an absolute bound cannot hold at this scale
    rng = random.Random(31415)
    for _ in range(100):
        p = _random_poly(rng)
        q = _random_poly(rng)
        theta = rng.uniform(0, 6.3)
        lhs = (p * q).evaluate_phase(theta)
        rhs = p.evaluate_phase(theta) * q.evaluate_phase(theta)
        scale = max(1.0, abs(lhs), abs(rhs))
        assert abs(lhs - rhs) <= 1e-10 * scale


def test_canonical_text():
    assert str(LaurentPoly.zero()) == "0"
    assert str(LaurentPoly.one()) == "1"
    assert str(LaurentPoly.monomial(-1, 3)) == "-1*A^3"
    f = LaurentPoly({-4: 1, -12: 1, -16: -1})
    assert str(f) == "1*A^-4 + 1*A^-12 + -1*A^-16"
    assert str(LaurentPoly({4: 1, 0: 2, -4: 1})) == "1*A^4 + 2 + 1*A^-4"


def test_json_round_trip_big_coefficients():
    p = LaurentPoly({100: 10**40, -3: -(2**200), 0: 1})
    data = p.to_json()
    assert data[0] == [100, str(10**40)]
    assert LaurentPoly.from_json(data) == p


def test_jones_substitute_negates_exponents():
    f = LaurentPoly({-4: 1, -12: 1, -16: -1})
    assert jones_substitute(f).terms == {4: 1, 12: 1, 16: -1}


def test_format_jones_quarter_powers():
    assert format_jones(LaurentPoly({4: 1, 12: 1, 16: -1})) == "1*t^1 + 1*t^3 + -1*t^4"
    assert (
        format_jones(LaurentPoly({-4: 1, -12: 1, -16: -1}))
        == "1*t^-1 + 1*t^-3 + -1*t^-4"
    )
    assert format_jones(LaurentPoly({2: -1, 10: -1})) == "-1*t^1/2 + -1*t^5/2"
    assert format_jones(LaurentPoly({1: 3, 0: 5})) == "5 + 3*t^1/4"
    assert format_jones(LaurentPoly.zero()) == "0"


def test_hashable_and_usable_as_key():
    d = {delta(): "loop"}
    assert d[LaurentPoly({2: -1, -2: -1})] == "loop"

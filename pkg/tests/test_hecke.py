import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eta26 import (
    P26_DENOMINATOR,
    AlgInt3,
    coeff_bundle,
    one_three_squares,
    p26_cm,
    p26_oracle,
    primes_below,
    t1_prime,
    t2_prime,
    t_prime_power,
    two_squares,
)
from eta26.errors import ConsistencyError


def _gauss_pow12(x, y):
    re, im = 1, 0
    for _ in range(12):
        re, im = re * x - im * y, re * y + im * x
    return re, im


def _eis_pow12(z, w):
    a, b = 1, 0
    for _ in range(12):
        a, b = a * z - 3 * b * w, a * w + b * z
    return a, b


def _t2_direct(p):
    """t2(p) from the normalized representation by direct 12th powers."""
    rep = two_squares(p)
    re, im = _gauss_pow12(rep.x, rep.y)
    if p % 12 == 5:
        # -i*pi^12 + i*conj(pi)^12 = 2 Im(pi^12)
        return 2 * im
    return 2 * re if rep.sign_plus else -2 * re


def _t1_direct(p):
    """t1(p) from the normalized representation by direct 12th powers."""
    rep = one_three_squares(p)
    a, b = _eis_pow12(rep.z, rep.w)
    if p % 12 == 7:
        return AlgInt3(0, -2 * b)
    return AlgInt3(2 * a if rep.sign_plus else -2 * a, 0)


def _closed_form(t, p, alpha, chi):
    """Binomial expansion of the two-term recursion."""
    acc = 0
    for j in range(alpha // 2 + 1):
        acc += (-chi) ** j * math.comb(alpha - j, j) * p ** (12 * j) * t ** (alpha - 2 * j)
    return acc


def test_pinned_reference_vectors():
    assert t2_prime(5) == 20592
    assert t1_prime(7) == AlgInt3(0, -102960)


def test_inert_primes_vanish():
    assert t2_prime(11) == 0
    assert t2_prime(7) == 0
    assert t1_prime(5) == AlgInt3(0, 0)
    assert t1_prime(11) == AlgInt3(0, 0)


def test_values_at_13_by_direct_expansion():
    # z + w = 3 mod 4 at 13, so both branches pick the minus sign;
    # the conjugate pair sums to twice the rational part
    a, _ = _eis_pow12(1, 2)
    assert t1_prime(13) == AlgInt3(-2 * a, 0)
    re, _ = _gauss_pow12(3, 2)
    assert t2_prime(13) == -2 * re
    assert t1_prime(13).a == 9397582
    assert t2_prime(13) == -6911282


def test_polynomial_tables_match_binomial_expansion():
    # the hardcoded degree-12 coefficient tables against direct powers
    for p in primes_below(600):
        if p < 5:
            continue
        if p % 4 == 1:
            assert t2_prime(p) == _t2_direct(p), p
        if p % 3 == 1:
            assert t1_prime(p) == _t1_direct(p), p


def test_prime_rejects_bad_input():
    with pytest.raises(ValueError):
        t2_prime(12)
    with pytest.raises(ValueError):
        t1_prime(3)


def test_prime_power_examples():
    assert t_prime_power(0, 11, 2, -1) == 11**12
    assert t_prime_power(0, 5, 2, 1) == -(5**12)
    assert t_prime_power(0, 11, 0, -1) == 1
    assert t_prime_power(AlgInt3(0, 0), 7, 0, -1) == AlgInt3(1, 0)


def test_prime_power_rejects_mismatched_chi():
    with pytest.raises(ValueError):
        t_prime_power(0, 5, 2, -1)
    with pytest.raises(ValueError):
        t_prime_power(0, 7, 2, 1)


@given(
    st.sampled_from([5, 13, 17, 29, 37]),
    st.integers(min_value=-10**8, max_value=10**8),
    st.integers(min_value=0, max_value=12),
)
def test_recursion_matches_closed_form_split(p, t, alpha):
    assert t_prime_power(t, p, alpha, 1) == _closed_form(t, p, alpha, 1)


@given(
    st.sampled_from([7, 11, 19, 23]),
    st.integers(min_value=-10**8, max_value=10**8),
    st.integers(min_value=0, max_value=12),
)
def test_recursion_matches_closed_form_inert(p, t, alpha):
    assert t_prime_power(t, p, alpha, -1) == _closed_form(t, p, alpha, -1)


def test_parity_of_minus_branch():
    # negating t(p) negates exactly the odd-exponent values
    for p in (7, 19, 31):
        plus = t1_prime(p)
        for alpha in range(7):
            expect = t_prime_power(plus, p, alpha, -1)
            if alpha % 2 == 1:
                expect = -expect
            assert t_prime_power(-plus, p, alpha, -1) == expect
    for p in (5, 17, 29):
        plus = t2_prime(p)
        for alpha in range(7):
            expect = t_prime_power(plus, p, alpha, 1)
            if alpha % 2 == 1:
                expect = -expect
            assert t_prime_power(-plus, p, alpha, 1) == expect


def test_ramanujan_bound():
    for p in primes_below(3000):
        if p < 5:
            continue
        if p % 4 == 1:
            assert abs(t2_prime(p)) <= 2 * p**6, p
        if p % 3 == 1:
            t = t1_prime(p)
            assert t.norm() <= 4 * p**12, p


def test_bundle_at_13():
    bundle = coeff_bundle(13)
    assert bundle.t1p == bundle.t1m
    assert bundle.t2p == bundle.t2m
    assert bundle.t1p.a - bundle.t2p == 16308864
    assert bundle.combination() == AlgInt3(P26_DENOMINATOR, 0)


def test_bundle_at_121():
    bundle = coeff_bundle(121)
    assert bundle.t1p == bundle.t1m == AlgInt3(11**12, 0)
    assert bundle.t2p == bundle.t2m == 11**12


def test_bundle_at_253():
    bundle = coeff_bundle(253)
    assert bundle.t1p == bundle.t1m == AlgInt3(0, 0)
    assert bundle.t2p == bundle.t2m == 0


def test_bundle_rejects_wrong_residue():
    with pytest.raises(ValueError):
        coeff_bundle(14)
    with pytest.raises(ValueError):
        coeff_bundle(1)


def test_bundle_multiplicative():
    pairs = [(13, 25), (25, 49), (13, 121), (49, 169)]
    for m1, m2 in pairs:
        assert math.gcd(m1, m2) == 1
        b1, b2, b12 = coeff_bundle(m1), coeff_bundle(m2), coeff_bundle(m1 * m2)
        assert b12.t1p == b1.t1p * b2.t1p
        assert b12.t2p == b1.t2p * b2.t2p
        assert b12.t1m == b1.t1m * b2.t1m
        assert b12.t2m == b1.t2m * b2.t2m


def test_combination_divisible_everywhere():
    for n in range(0, 400, 7):
        bundle = coeff_bundle(12 * n + 13)
        comb = bundle.combination()
        assert comb.b == 0
        assert comb.a % P26_DENOMINATOR == 0


def test_p26_examples():
    assert p26_cm(0) == 1
    assert p26_cm(9) == 0 == p26_oracle(9)
    assert p26_cm(20) == 0 == p26_oracle(20)


def test_p26_rejects_negative():
    with pytest.raises(ValueError):
        p26_cm(-1)


def test_oracle_equivalence_small_range():
    from eta26 import eta_power_series

    table = eta_power_series(26, 300)
    for n in range(301):
        assert p26_cm(n) == table[n], n


def test_sqrt3_component_vanishes_in_combination():
    # m = 5 * 7 * 11 * 13 has odd exponents in every residue class
    bundle = coeff_bundle(5 * 7 * 11 * 13)
    assert bundle.combination().b == 0


@given(st.integers(-50, 50), st.integers(-50, 50),
       st.integers(-50, 50), st.integers(-50, 50))
def test_alg_int3_ring_laws(a, b, c, d):
    u, v = AlgInt3(a, b), AlgInt3(c, d)
    assert u * v == AlgInt3(a * c - 3 * b * d, a * d + b * c)
    assert u * v == v * u
    assert u + v == v + u
    assert (u * v).norm() == u.norm() * v.norm()
    assert (u * v).conjugate() == u.conjugate() * v.conjugate()
    assert 3 * u == AlgInt3(3 * a, 3 * b) == u * 3


def test_alg_int3_is_rational():
    assert AlgInt3(5, 0).is_rational
    assert not AlgInt3(0, 5).is_rational


def test_corrupted_prime_value_raises_consistency_error(monkeypatch):
    # a wrong prime value must be caught by the divisibility check, not
    # silently rounded away
    import eta26.hecke as hecke_mod

    real = hecke_mod.t2_prime

    def skewed(p):
        return real(p) + 1

    monkeypatch.setattr(hecke_mod, "t2_prime", skewed)
    with pytest.raises(ConsistencyError):
        hecke_mod.coeff_bundle(13)

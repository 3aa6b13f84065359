import math

import pytest
from hypothesis import given, strategies as st

from hypersine.coset import (CosetHypergroup, conjugate_by, coset_apply,
                             coset_exponential, coset_of, coset_sine,
                             falsify_dalembert_alpha, falsify_square_term,
                             group_inv, group_mul, group_sine_check,
                             square_norm_check, verify_compat)
from hypersine.core import exp_residual, sine_residual

# dyadic rationals make every group operation exact in floating point
dyadic = st.integers(min_value=-64, max_value=64).map(lambda n: n / 8.0)
dyadic_x = dyadic.filter(lambda v: v != 0.0)


@given(x=dyadic_x, u=dyadic, y=dyadic_x, v=dyadic, z=dyadic_x, w=dyadic)
def test_group_axioms_exact_on_dyadics(x, u, y, v, z, w):
    p, q, r = (x, u), (y, v), (z, w)
    assert group_mul(group_mul(p, q), r) == group_mul(p, group_mul(q, r))
    assert group_mul(p, (1.0, 0.0)) == p
    assert group_mul((1.0, 0.0), p) == p


pow2 = st.tuples(st.integers(min_value=-5, max_value=5),
                 st.booleans()).map(lambda t: (-1.0 if t[1] else 1.0) * 2.0 ** t[0])


@given(x=pow2, u=dyadic)
def test_group_inverse_exact_on_powers_of_two(x, u):
    p = (x, u)
    assert group_mul(p, group_inv(p)) == (1.0, 0.0)
    assert group_mul(group_inv(p), p) == (1.0, 0.0)


def test_group_mul_worked_example():
    assert group_mul((2.0, 3.0), (0.5, -1.0)) == (1.0, 1.0)
    with pytest.raises(ValueError):
        group_mul((0.0, 1.0), (1.0, 0.0))


def test_group_is_not_commutative():
    p, q = (2.0, 1.0), (3.0, 5.0)
    assert group_mul(p, q) != group_mul(q, p)


def test_stabilizer_is_not_normal():
    # conjugating the order-two element lands outside the subgroup
    assert conjugate_by((3.0, 5.0), (-1.0, 0.0)) == (-1.0, 10.0)
    assert conjugate_by((1.0, 0.25), (-1.0, 0.0)) == (-1.0, 0.5)


def test_coset_of_canonicalizes():
    assert coset_of((-2.0, -3.0)) == (2.0, 3.0)
    assert coset_of((2.0, 3.0)) == (2.0, 3.0)


def test_coset_apply_averages_two_representatives():
    f = lambda p: p[1]
    # (2,3)(5,7) = (10, 21); (2,3)(-5,-7)... the K-average uses (-y, -v)
    got = coset_apply(f, (2.0, 3.0), (5.0, 7.0))
    assert got == pytest.approx(0.5 * abs(2 * 7 + 3) + 0.5 * abs(-2 * 7 + 3))


def test_convolve_requires_canonical_pairs():
    hg = CosetHypergroup()
    with pytest.raises(ValueError):
        hg.convolve((-1.0, 2.0), (1.0, 0.0))
    with pytest.raises(ValueError):
        hg.convolve((1.0, -2.0), (1.0, 0.0))
    mu = hg.convolve((2.0, 1.0), (3.0, 1.0))
    assert mu.weight((6.0, 3.0)) == pytest.approx(0.5)
    assert mu.weight((6.0, 1.0)) == pytest.approx(0.5)


def test_exponential_and_sine_residuals():
    hg = CosetHypergroup()
    pairs = [((2.0, 1.0), (3.0, 0.5)), ((0.5, 2.0), (4.0, 0.0)),
             ((1.5, 0.25), (1.5, 0.25))]
    for lam in (0.0, 1.0, 0.5 + 0.5j):
        m = coset_exponential(lam)
        f = coset_sine(2.0, lam)
        assert exp_residual(hg, m, pairs).max_rel <= 1e-14
        assert sine_residual(hg, f, m, pairs).max_rel <= 1e-13


def test_sine_values_are_c_m_log():
    f = coset_sine(2.0, 1.5)
    x = 3.0
    assert f((x, 7.0)) == pytest.approx(2.0 * x ** 1.5 * math.log(x))


def test_verify_compat_accepts_biinvariant_and_rejects_odd():
    samples = [(2.0, 1.0), (0.5, -3.0), (4.0, 0.25)]
    good = lambda p: coset_exponential(1.0)(coset_of(p))
    assert verify_compat(good, samples)
    odd = lambda p: p[1]
    assert not verify_compat(odd, samples)


def test_falsify_dalembert_recorded_sample():
    rep = falsify_dalembert_alpha(0.0, 1.0, [(2.0, 1.0, 1.0, 1.0)])
    want = abs(math.cosh(3.0) + math.cosh(1.0) - 2.0 * math.cosh(1.0) ** 2)
    assert rep.max_abs == pytest.approx(want, rel=1e-14)
    assert rep.max_abs > 0.1


def test_falsify_dalembert_rejects_zero_alpha():
    with pytest.raises(ValueError):
        falsify_dalembert_alpha(1.0, 0.0, [(2.0, 1.0, 1.0, 1.0)])


def test_falsify_square_term_recorded_pair():
    rep = falsify_square_term(1.0, 1.0, [((2.0, 1.0), (3.0, 1.0))])
    # lhs averages 6(ln 6 + 9) and 6(ln 6 + 1); rhs is 6 ln 6 + 12
    assert rep.max_abs == pytest.approx(18.0, rel=1e-12)
    with pytest.raises(ValueError):
        falsify_square_term(1.0, 0.0, [((2.0, 1.0), (3.0, 1.0))])


def test_square_norm_identity_holds_for_squares():
    uv = [(1.5, 2.25), (-3.0, 0.5), (7.0, -7.0)]
    rep = square_norm_check(uv)
    assert rep.max_abs <= 1e-12


def test_group_sine_check_for_log_times_power():
    pairs = [((2.0, 1.0), (3.0, -2.0)), ((-0.5, 4.0), (1.25, 0.0))]
    rep = group_sine_check(0.75, pairs)
    assert rep.max_rel <= 1e-14


def test_involution_inverts():
    hg = CosetHypergroup()
    p = (2.0, 3.0)
    q = hg.involution(p)
    assert q == (0.5, 1.5)
    # the identity coset appears in p * involution(p)
    mu = hg.convolve(p, q)
    assert mu.weight((1.0, 0.0)) == pytest.approx(0.5)

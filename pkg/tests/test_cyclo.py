"""Exact cyclotomic scalar arithmetic: frozen values, field laws, embeddings."""

import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qudit_algebra.cyclo import (
    CycloScalar,
    conjugate,
    cyclotomic_polynomial,
    invert,
    root_power,
    to_complex,
)

F = Fraction


def rational(d, value):
    return CycloScalar.from_rational(d, value)


# Frozen by polynomial long division of x^d - 1 by the lower-order factors
# (cross-checked against sympy below): constant term first.
KNOWN_CYCLOTOMICS = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    8: (1, 0, 0, 0, 1),
    12: (1, 0, -1, 0, 1),
}


@pytest.mark.parametrize("d, coeffs", sorted(KNOWN_CYCLOTOMICS.items()))
def test_cyclotomic_polynomial_frozen_values(d, coeffs):
    assert cyclotomic_polynomial(d).coeffs == coeffs


@pytest.mark.parametrize("d", range(1, 25))
def test_cyclotomic_polynomial_against_sympy(d):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(d, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(d).coeffs) == [int(c) for c in expected]


@pytest.mark.parametrize("d", range(1, 25))
def test_cyclotomic_polynomial_monic_with_totient_degree(d):
    poly = cyclotomic_polynomial(d)
    assert poly.coeffs[-1] == 1
    assert poly.degree == sympy.totient(d)


@pytest.mark.parametrize("d", range(1, 17))
def test_cyclotomic_factors_multiply_to_power_minus_one(d):
    product = [1]
    for e in range(1, d + 1):
        if d % e == 0:
            factor = cyclotomic_polynomial(e).coeffs
            out = [0] * (len(product) + len(factor) - 1)
            for i, a in enumerate(product):
                for j, b in enumerate(factor):
                    out[i + j] += a * b
            product = out
    assert product == [-1] + [0] * (d - 1) + [1]


def test_cyclotomic_polynomial_rejects_nonpositive_order():
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


class TestRootPower:
    def test_zeroth_power_is_one(self):
        for d in range(1, 13):
            assert root_power(d, 0) == CycloScalar.one(d)

    def test_order_two_root_is_minus_one(self):
        assert root_power(2, 1) == rational(2, -1)

    def test_powers_compose_to_unity(self):
        assert root_power(5, 3) * root_power(5, 2) == CycloScalar.one(5)

    @pytest.mark.parametrize("d", range(1, 13))
    def test_order_d(self, d):
        q = root_power(d, 1)
        acc = CycloScalar.one(d)
        for _ in range(d):
            acc = acc * q
        assert acc == CycloScalar.one(d)

    def test_negative_exponents_wrap(self):
        assert root_power(7, -2) == root_power(7, 5)


class TestFieldOperations:
    def test_additive_inverse(self):
        q = root_power(6, 1)
        assert (q + (-q)).is_zero()

    def test_root_sum_vanishes_order_three(self):
        q = root_power(3, 1)
        assert (rational(3, 1) + q + q * q).is_zero()

    @pytest.mark.parametrize("d", range(2, 13))
    def test_root_power_sums_vanish(self, d):
        for k in range(1, d):
            total = CycloScalar.zero(d)
            for j in range(d):
                total = total + root_power(d, j * k)
            assert total.is_zero(), f"sum of q^(j*{k}) over j should vanish at d={d}"

    def test_order_four_square_reduction(self):
        # oracle: reduce x^4 modulo x^2 + 1
        q = root_power(4, 1)
        assert q * q == root_power(4, 2)
        assert (q * q) * (q * q) == CycloScalar.one(4)

    def test_mixed_orders_rejected(self):
        with pytest.raises(ValueError):
            root_power(3, 1) + root_power(4, 1)
        with pytest.raises(ValueError):
            root_power(3, 1) * root_power(4, 1)

    def test_rational_coefficients_stay_exact(self):
        a = rational(5, F(1, 3)) + rational(5, F(1, 6))
        assert a == rational(5, F(1, 2))

    def test_canonical_length_after_operations(self):
        for d in (2, 3, 4, 6, 8, 12):
            phi = cyclotomic_polynomial(d).degree
            q = root_power(d, 1)
            for value in (q, q * q, q + q, -q, q.conjugate(), (q + 2).invert()):
                assert len(value.coeffs) == phi


class TestInvert:
    def test_invert_one(self):
        assert invert(CycloScalar.one(7)) == CycloScalar.one(7)

    @pytest.mark.parametrize("d", range(2, 13))
    def test_invert_root(self, d):
        assert invert(root_power(d, 1)) == root_power(d, d - 1)

    def test_invert_order_three_example(self):
        # (1 - q)^(-1) = (1 - q^2)/3 = (2 + q)/3 in the reduced basis
        one_minus_q = rational(3, 1) - root_power(3, 1)
        expected = CycloScalar(3, (F(2, 3), F(1, 3)))
        assert invert(one_minus_q) == expected
        assert one_minus_q * expected == CycloScalar.one(3)

    def test_invert_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            invert(CycloScalar.zero(5))

    def test_truediv(self):
        q = root_power(5, 2)
        assert (q / q) == CycloScalar.one(5)
        assert (q / 2) * 2 == q


def elements(d, max_coeff=9):
    """Strategy producing elements of Q(zeta_d) with small rational coefficients."""
    phi = cyclotomic_polynomial(d).degree
    coeff = st.fractions(
        min_value=-max_coeff, max_value=max_coeff, max_denominator=max_coeff
    )
    return st.builds(
        lambda cs: CycloScalar(d, tuple(cs)),
        st.lists(coeff, min_size=phi, max_size=phi),
    )


@pytest.mark.parametrize("d", range(2, 13))
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_invert_roundtrip_randomized(d, data):
    a = data.draw(elements(d))
    if a.is_zero():
        a = a + 1
    assert a.invert() * a == CycloScalar.one(d)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6, 8, 12])
@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_conjugate_is_ring_homomorphism_and_involution(d, data):
    a = data.draw(elements(d))
    b = data.draw(elements(d))
    assert conjugate(conjugate(a)) == a
    assert conjugate(a + b) == conjugate(a) + conjugate(b)
    assert conjugate(a * b) == conjugate(a) * conjugate(b)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6, 8, 12])
@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_to_complex_respects_multiplication(d, data):
    a = data.draw(elements(d))
    b = data.draw(elements(d))
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-12


class TestConjugate:
    def test_fixes_rationals(self):
        assert conjugate(rational(6, F(3, 7))) == rational(6, F(3, 7))

    @pytest.mark.parametrize("d", range(2, 13))
    def test_sends_root_to_inverse_power(self, d):
        assert conjugate(root_power(d, 1)) == root_power(d, d - 1)

    def test_conjugate_times_original_is_unit_modulus(self):
        q = root_power(9, 1)
        assert conjugate(q) * q == CycloScalar.one(9)


class TestToComplex:
    def test_one(self):
        assert to_complex(CycloScalar.one(5)) == 1 + 0j

    def test_order_four_root_is_i(self):
        z = to_complex(root_power(4, 1))
        assert abs(z - 1j) < 1e-15

    def test_order_three_root(self):
        z = to_complex(root_power(3, 1))
        assert abs(z - complex(-0.5, cmath.sqrt(3).real / 2)) < 1e-15

    @pytest.mark.parametrize("d", range(1, 13))
    def test_matches_direct_exponential(self, d):
        for k in range(d):
            expected = cmath.exp(2j * cmath.pi * k / d)
            assert abs(to_complex(root_power(d, k)) - expected) < 1e-12


class TestLift:
    def test_lift_matches_root_relabelling(self):
        assert root_power(3, 1).lift(12) == root_power(12, 4)
        assert root_power(4, 3).lift(12) == root_power(12, 9)

    def test_lift_preserves_complex_value(self):
        a = rational(6, F(2, 5)) + root_power(6, 1) * F(1, 3)
        assert abs(to_complex(a.lift(18)) - to_complex(a)) < 1e-12

    def test_lift_requires_divisibility(self):
        with pytest.raises(ValueError):
            root_power(4, 1).lift(6)

    def test_lift_is_identity_on_same_order(self):
        a = root_power(8, 3)
        assert a.lift(8) is a

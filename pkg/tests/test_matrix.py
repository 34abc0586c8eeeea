"""Matrix ring operations over both scalar modes, against hand-worked oracles."""

import cmath
import random
from fractions import Fraction

import numpy as np
import pytest

from qudit_algebra.cyclo import CycloScalar, cyclotomic_polynomial, root_power
from qudit_algebra.matrix import (
    ExactMode,
    FloatMode,
    OperatorMatrix,
    adjoint,
    equals,
    from_rows,
    identity,
    kron,
    matpow,
    max_residual,
    scalar_mul,
    to_float,
    zeros,
)

F = Fraction


def shift_up(d, mode):
    """The truncated raising matrix with ones on the first subdiagonal."""
    return from_rows(
        [[1 if i == j + 1 else 0 for j in range(d)] for i in range(d)], mode
    )


def clock(d):
    """diag(1, q, ..., q^(d-1)) over Q(zeta_d)."""
    mode = ExactMode(d)
    return from_rows(
        [
            [root_power(d, i) if i == j else 0 for j in range(d)]
            for i in range(d)
        ],
        mode,
    )


def cyclic(d, mode):
    return from_rows(
        [[1 if i == (j + 1) % d else 0 for j in range(d)] for i in range(d)], mode
    )


def random_exact(rng, dim, d):
    phi = cyclotomic_polynomial(d).degree
    def scalar():
        return CycloScalar(
            d, tuple(F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(phi))
        )
    return OperatorMatrix(
        ExactMode(d), tuple(tuple(scalar() for _ in range(dim)) for _ in range(dim))
    )


def random_float(rng, dim):
    return OperatorMatrix(
        FloatMode(),
        tuple(
            tuple(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(dim))
            for _ in range(dim)
        ),
    )


class TestConstructors:
    def test_identity_is_left_unit(self):
        rng = random.Random(0)
        a = random_exact(rng, 2, 5)
        assert identity(2, ExactMode(5)) @ a == a

    def test_zeros_is_additive_unit(self):
        rng = random.Random(1)
        a = random_float(rng, 2)
        assert zeros(2, FloatMode()) + a == a

    def test_identity_is_self_adjoint(self):
        eye = identity(3, ExactMode(4))
        assert adjoint(eye) == eye

    def test_square_shape_enforced(self):
        with pytest.raises(ValueError):
            from_rows([[1, 0]], ExactMode(2))
        with pytest.raises(ValueError):
            identity(0, FloatMode())


class TestRingOperations:
    def test_matmul_identity(self):
        rng = random.Random(2)
        a = random_exact(rng, 3, 3)
        assert a @ identity(3, ExactMode(3)) == a

    def test_nilpotent_square_vanishes_order_two(self):
        raiser = shift_up(2, ExactMode(2))
        assert raiser @ raiser == zeros(2, ExactMode(2))

    def test_number_operator_order_three(self):
        # oracle: hand multiplication of the canonical 3x3 shift matrices
        mode = ExactMode(3)
        raiser = shift_up(3, mode)
        lower = adjoint(raiser)
        expected = from_rows([[0, 0, 0], [0, 1, 0], [0, 0, 1]], mode)
        assert raiser @ lower == expected

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            identity(2, FloatMode()) + identity(3, FloatMode())
        with pytest.raises(ValueError):
            identity(2, FloatMode()) @ identity(3, FloatMode())

    def test_mode_mismatch_rejected(self):
        with pytest.raises(ValueError):
            identity(2, FloatMode()) + identity(2, ExactMode(2))

    def test_scalar_mul_coercions(self):
        eye = identity(2, ExactMode(4))
        assert scalar_mul(F(1, 2), eye) + scalar_mul(F(1, 2), eye) == eye
        q = root_power(4, 1)
        assert scalar_mul(q, eye) == q * eye
        feye = identity(2, FloatMode())
        assert equals(scalar_mul(0.5j, feye) + scalar_mul(-0.5j, feye), zeros(2, FloatMode()))

    def test_exact_scalar_lifts_matrix_conductor(self):
        eye = identity(2, ExactMode(2))
        lifted = scalar_mul(root_power(3, 1), eye)
        assert lifted.mode == ExactMode(6)
        assert lifted == scalar_mul(root_power(6, 2), identity(2, ExactMode(6)))


class TestAdjoint:
    def test_involution_exact(self):
        rng = random.Random(3)
        a = random_exact(rng, 3, 8)
        assert adjoint(adjoint(a)) == a

    def test_involution_float(self):
        rng = random.Random(4)
        a = random_float(rng, 3)
        assert adjoint(adjoint(a)) == a

    def test_clock_adjoint_is_last_power(self):
        # oracle: conjugate each diagonal entry, conj(q) = q^2 at order 3
        v = clock(3)
        assert adjoint(v) == matpow(v, 2)

    @pytest.mark.parametrize("seed", range(4))
    def test_product_reverses_exact(self, seed):
        rng = random.Random(seed)
        a = random_exact(rng, 3, 5)
        b = random_exact(rng, 3, 5)
        assert adjoint(a @ b) == adjoint(b) @ adjoint(a)

    @pytest.mark.parametrize("seed", range(4))
    def test_product_reverses_float(self, seed):
        rng = random.Random(100 + seed)
        a = random_float(rng, 4)
        b = random_float(rng, 4)
        assert max_residual(adjoint(a @ b), adjoint(b) @ adjoint(a)) < 1e-12


class TestMatpow:
    def test_zeroth_power(self):
        rng = random.Random(5)
        a = random_exact(rng, 3, 4)
        assert matpow(a, 0) == identity(3, ExactMode(4))

    def test_cyclic_shift_order_four(self):
        u = cyclic(4, ExactMode(4))
        assert matpow(u, 4) == identity(4, ExactMode(4))

    def test_raising_power_vanishes(self):
        raiser = shift_up(4, ExactMode(4))
        assert matpow(raiser, 4) == zeros(4, ExactMode(4))

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            matpow(identity(2, FloatMode()), -1)

    @pytest.mark.parametrize("m, n", [(0, 3), (2, 2), (1, 4)])
    def test_powers_add(self, m, n):
        rng = random.Random(6)
        a = random_exact(rng, 2, 3)
        assert matpow(a, m + n) == matpow(a, m) @ matpow(a, n)


class TestKron:
    def test_identity_blocks(self):
        out = kron(identity(2, FloatMode()), identity(3, FloatMode()))
        assert out == identity(6, FloatMode())

    @pytest.mark.parametrize("seed", range(3))
    def test_mixed_product_property(self, seed):
        rng = random.Random(200 + seed)
        a, c = random_exact(rng, 2, 4), random_exact(rng, 2, 4)
        b, d = random_exact(rng, 3, 4), random_exact(rng, 3, 4)
        assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)

    def test_mixed_product_property_float(self):
        rng = random.Random(300)
        a, c = random_float(rng, 2), random_float(rng, 2)
        b, d = random_float(rng, 3), random_float(rng, 3)
        assert max_residual(kron(a, b) @ kron(c, d), kron(a @ c, b @ d)) < 1e-12

    def test_index_layout_raising_second_factor(self):
        # oracle: direct index computation from the block layout
        out = kron(identity(3, ExactMode(3)), shift_up(4, ExactMode(4)))
        one = CycloScalar.one(12)
        for j in range(3):
            for i in range(4):
                col = j * 4 + i
                for row in range(12):
                    expected = one if (i < 3 and row == col + 1) else CycloScalar.zero(12)
                    assert out.entries[row][col] == expected

    def test_exact_conductors_lift_to_lcm(self):
        out = kron(identity(2, ExactMode(4)), identity(2, ExactMode(6)))
        assert out.mode == ExactMode(12)

    def test_exact_float_mix_rejected(self):
        with pytest.raises(ValueError):
            kron(identity(2, ExactMode(2)), identity(2, FloatMode()))

    def test_matches_numpy_kron(self):
        rng = random.Random(400)
        a, b = random_float(rng, 3), random_float(rng, 4)
        expected = np.kron(np.array(a.entries), np.array(b.entries))
        got = np.array(kron(a, b).entries)
        assert np.max(np.abs(expected - got)) < 1e-14


class TestEqualsAndResidual:
    def test_reflexive(self):
        rng = random.Random(7)
        a = random_exact(rng, 3, 6)
        assert equals(a, a)
        assert max_residual(a, a) == 0.0

    def test_float_cyclic_square(self):
        u = cyclic(2, FloatMode())
        assert max_residual(u @ u, identity(2, FloatMode())) < 1e-12

    def test_exact_clock_shift_commutation_order_three(self):
        u = cyclic(3, ExactMode(3))
        v = clock(3)
        q = root_power(3, 1)
        assert max_residual(v @ u - q * (u @ v), zeros(3, ExactMode(3))) == 0.0

    def test_residual_dimension_mismatch(self):
        with pytest.raises(ValueError):
            max_residual(identity(2, FloatMode()), identity(3, FloatMode()))

    def test_residual_measures_difference(self):
        a = from_rows([[0, 1], [0, 0]], FloatMode())
        assert abs(max_residual(a, zeros(2, FloatMode())) - 1.0) < 1e-15

    def test_exact_residual_via_embedding(self):
        a = from_rows([[root_power(4, 1), 0], [0, 0]], ExactMode(4))
        b = from_rows([[root_power(4, 2), 0], [0, 0]], ExactMode(4))
        # |i - (-1)| = sqrt(2)
        assert abs(max_residual(a, b) - 2**0.5) < 1e-12

    def test_cross_conductor_equality(self):
        half = CycloScalar.from_rational(2, F(1, 2))
        a = from_rows([[half, 0], [0, 1]], ExactMode(2))
        b = from_rows([[F(1, 2), 0], [0, 1]], ExactMode(6))
        assert equals(a, b)


class TestToFloat:
    def test_embedding_matches_direct_construction(self):
        exact = clock(5)
        direct = from_rows(
            [
                [cmath.exp(2j * cmath.pi * i / 5) if i == j else 0 for j in range(5)]
                for i in range(5)
            ],
            FloatMode(),
        )
        assert max_residual(to_float(exact), direct) < 1e-12

    def test_float_passthrough(self):
        a = identity(3, FloatMode())
        assert to_float(a) is a

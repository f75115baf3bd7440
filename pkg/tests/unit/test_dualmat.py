# tests/unit/test_dualmat.py

import os
import sys
import pytest
import numpy as np
from hypothesis import given, settings, strategies as st

# Menambahkan path root project untuk import
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core_logic.dualmat import DualMatrix, DualVector, apply, dual_distance, multiply, power
from src.core_logic.errors import ShapeMismatch


def _seeded_dual(seed, n=3):
    rng = np.random.default_rng(seed)
    return DualMatrix(rng.integers(-3, 4, size=(n, n)), rng.integers(-3, 4, size=(n, n)))


class TestDualMatrixValue:
    """Test suite untuk konstruksi dan sifat nilai DualMatrix"""

    def test_dual_defaults_to_zero(self):
        M = DualMatrix(np.eye(2), None)
        assert not np.any(M.dual)

    def test_immutable(self):
        M = DualMatrix.identity(2)
        with pytest.raises(ValueError):
            M.real[0, 0] = 5.0

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            DualMatrix(np.eye(2), np.eye(3))

    def test_transpose_and_lists(self):
        M = DualMatrix([[1, 2], [3, 4]], [[0, 1], [0, 0]])
        assert M.T.to_lists() == {"real": [[1.0, 3.0], [2.0, 4.0]], "dual": [[0.0, 0.0], [1.0, 0.0]]}


class TestMultiply:
    """Test suite untuk perkalian dual (A + εB)(C + εD) = AC + ε(AD + BC)"""

    def test_order_law_pair_product(self, order_law_pair):
        """Test hasil kali pasangan hukum urutan dihitung ulang dari operand"""
        M, N = order_law_pair
        product = M @ N
        np.testing.assert_array_equal(product.real, [[-1, 7, 6], [0, 0, 0], [-1, 5, 4]])
        np.testing.assert_array_equal(product.dual, [[5, -13, 32], [1, 3, 4], [6, -28, 3]])

    def test_epsilon_squared_is_zero(self):
        eps = DualMatrix(np.zeros((1, 1)), np.ones((1, 1)))
        assert not np.any((eps @ eps).real) and not np.any((eps @ eps).dual)

    def test_inner_dimension_mismatch(self):
        with pytest.raises(ShapeMismatch):
            multiply(DualMatrix.zeros(2, 3), DualMatrix.zeros(2, 3))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
    def test_associative(self, s1, s2, s3):
        X, Y, Z = _seeded_dual(s1), _seeded_dual(s2), _seeded_dual(s3)
        assert dual_distance((X @ Y) @ Z, X @ (Y @ Z)) == 0.0


class TestDualPartLinearity:
    """Test suite: bagian dual hasil kali linear terhadap pasangan bagian dual operand"""

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10 ** 6), st.integers(-3, 3), st.integers(-3, 3))
    def test_superposition(self, seed, alpha, beta):
        rng = np.random.default_rng(seed)
        A, C = rng.integers(-3, 4, size=(2, 3, 3))
        B1, B2, D1, D2 = rng.integers(-3, 4, size=(4, 3, 3))

        combined = multiply(DualMatrix(A, alpha * B1 + beta * B2), DualMatrix(C, alpha * D1 + beta * D2))
        first = multiply(DualMatrix(A, B1), DualMatrix(C, D1))
        second = multiply(DualMatrix(A, B2), DualMatrix(C, D2))

        np.testing.assert_array_equal(combined.dual, alpha * first.dual + beta * second.dual)
        np.testing.assert_array_equal(combined.real, first.real)


class TestPower:
    """Test suite untuk pangkat matriks dual"""

    def test_power_zero_is_identity(self, index_two_example):
        assert dual_distance(power(index_two_example, 0), DualMatrix.identity(3)) == 0.0

    def test_nilpotent_example_square(self, nilpotent_example):
        """Test D = AB + BA = 0 pada contoh nilpoten"""
        M2 = power(nilpotent_example, 2)
        assert not np.any(M2.real)
        assert not np.any(M2.dual)

    def test_dual_part_closed_form(self, index_two_example):
        """Test bagian dual Â^k sama dengan Σ A^(k−1−i) B A^i"""
        A, B = index_two_example.real, index_two_example.dual
        expected = sum(np.linalg.matrix_power(A, 2 - i) @ B @ np.linalg.matrix_power(A, i) for i in range(3))
        np.testing.assert_allclose(power(index_two_example, 3).dual, expected)

    def test_negative_power_rejected(self, index_two_example):
        with pytest.raises(ValueError):
            power(index_two_example, -1)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10 ** 6), st.integers(0, 3), st.integers(0, 3))
    def test_power_additive(self, seed, a, b):
        M = _seeded_dual(seed)
        assert dual_distance(power(M, a) @ power(M, b), power(M, a + b)) == 0.0


class TestDualVector:
    """Test suite untuk vektor dual dan aplikasi matriks"""

    def test_apply(self):
        M = DualMatrix(np.eye(2) * 2, np.zeros((2, 2)))
        x = apply(M, DualVector([1, 2], [0, 1]))
        np.testing.assert_array_equal(x.real, [2, 4])
        np.testing.assert_array_equal(x.dual, [0, 2])

    def test_matmul_dispatches_to_apply(self, index_two_example):
        v = DualVector([1, 1, 1], [0, 0, 0])
        assert isinstance(index_two_example @ v, DualVector)

    def test_single_column_lists(self):
        assert DualVector([1, 2], None).to_lists() == {"real": [[1.0], [2.0]], "dual": [[0.0], [0.0]]}

    def test_length_mismatch(self):
        with pytest.raises(ShapeMismatch):
            DualVector([1, 2], [1])


class TestDualDistance:
    """Test suite untuk jarak dual"""

    def test_scalar_identity_vs_double(self):
        """Test (I, 2I) untuk n = 1 menghasilkan 0.5"""
        assert dual_distance(DualMatrix.identity(1), DualMatrix.identity(1) * 2) == pytest.approx(0.5)

    def test_distance_to_zero_is_absolute(self):
        M = DualMatrix(np.zeros((2, 2)), np.array([[3.0, 0.0], [0.0, 4.0]]))
        assert dual_distance(M, DualMatrix.zeros(2)) == pytest.approx(5.0)

    def test_mixed_types_rejected(self):
        with pytest.raises(ShapeMismatch):
            dual_distance(DualMatrix.zeros(2, 1), DualVector.zeros(2))

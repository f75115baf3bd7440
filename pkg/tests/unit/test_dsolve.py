# tests/unit/test_dsolve.py

import os
import sys
import pytest
import numpy as np

# Menambahkan path root project untuk import
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core_logic import dsolve
from src.core_logic.dualmat import DualMatrix, DualVector, apply, dual_distance, power
from src.core_logic.errors import Inconsistent, NoDDGI, ShapeMismatch
from src.core_logic.fixtures import gen_ddgi_canonical
from src.core_logic.realgi import fro


def _consistent_rhs(M, k, w):
    """b̂ = Â·Â^k·ŵ selalu berada di R(Â^k)"""
    return apply(M, apply(power(M, k), w))


class TestConsistency:
    """Test suite untuk uji konsistensi Âx̂ = b̂"""

    def test_constructed_rhs_is_consistent(self, index_two_example):
        b = _consistent_rhs(index_two_example, 2, DualVector([1, -2, 3], [0, 1, 1]))
        assert dsolve.is_consistent(index_two_example, b)

    def test_nilpotent_rhs_is_inconsistent(self, nilpotent_example):
        assert not dsolve.is_consistent(nilpotent_example, DualVector([1, 0, 0], [0, 0, 0]))

    def test_requires_ddgi(self, diagonal_example):
        with pytest.raises(NoDDGI):
            dsolve.is_consistent(diagonal_example, DualVector.zeros(3))

    def test_length_mismatch(self, index_two_example):
        with pytest.raises(ShapeMismatch):
            dsolve.is_consistent(index_two_example, DualVector.zeros(2))


class TestSolve:
    """Test suite untuk solusi tunggal dan solusi umum"""

    def test_scalar_system(self):
        """Test 2I·x̂ = (2,4) + ε(0,2) memberi x̂ = (1,2) + ε(0,1)"""
        M = DualMatrix(2 * np.eye(2), np.zeros((2, 2)))
        x = dsolve.solve_unique(M, DualVector([2, 4], [0, 2]))
        np.testing.assert_allclose(x.real, [1, 2])
        np.testing.assert_allclose(x.dual, [0, 1])

    def test_worked_example_solution(self, index_two_example):
        b = _consistent_rhs(index_two_example, 2, DualVector([2, 1, -1], [1, 0, 2]))
        x = dsolve.solve_unique(index_two_example, b)
        assert dual_distance(apply(index_two_example, x), b) <= 1e-8
        assert dsolve.in_range_power(index_two_example, x)

    def test_inconsistent_raises(self, nilpotent_example):
        with pytest.raises(Inconsistent):
            dsolve.solve_unique(nilpotent_example, DualVector([1, 0, 0], [0, 0, 0]))

    @pytest.mark.parametrize("seed", range(5))
    def test_general_solution_family(self, index_two_example, seed):
        rng = np.random.default_rng(seed)
        b = _consistent_rhs(index_two_example, 2, DualVector(rng.integers(-3, 4, 3), rng.integers(-3, 4, 3)))
        z = DualVector(rng.integers(-3, 4, 3), rng.integers(-3, 4, 3))
        x = dsolve.general_solution(index_two_example, b, z)
        assert dual_distance(apply(index_two_example, x), b) <= 1e-8

    def test_homogeneous_term_zero_for_nonsingular(self):
        M = DualMatrix(np.eye(2), np.ones((2, 2)))
        term = dsolve.homogeneous_term(M, DualVector([1, 1], [1, 1]))
        assert not np.any(term.real) and not np.any(term.dual)


class TestRangeAndNull:
    """Test suite untuk keanggotaan R(Â^k) dan N(Â^k)"""

    def test_range_membership(self, index_two_example):
        w = apply(power(index_two_example, 2), DualVector([1, 2, 3], [4, 5, 6]))
        assert dsolve.in_range_power(index_two_example, w)

    def test_outside_range(self, index_two_example):
        assert not dsolve.in_range_power(index_two_example, DualVector([0, 0, 1], [0, 0, 0]))

    def test_null_power_vector_is_in_null_space(self, index_two_example):
        for seed in range(5):
            v = dsolve.null_power_vector(index_two_example, seed)
            assert dsolve.in_null_power(index_two_example, v)
            assert np.any(v.real)

    def test_null_power_vector_requires_ddgi(self, diagonal_example):
        with pytest.raises(NoDDGI):
            dsolve.null_power_vector(diagonal_example, 0)

    def test_non_null_vector(self, index_two_example):
        assert not dsolve.in_null_power(index_two_example, DualVector([1, 0, 0], [0, 0, 0]))


class TestRangeNullDisjoint:
    """Test suite untuk R(Â^k) ∩ N(Â^k) = {0}"""

    @pytest.mark.parametrize("seed", range(8))
    def test_only_zero_passes_both(self, seed, tol):
        M = gen_ddgi_canonical(5, 2, 2, seed).assemble()
        Mk = power(M, 2)
        scale = 1.0 + fro(Mk.real) + fro(Mk.dual)
        rng = np.random.default_rng([seed, 23])
        in_range = apply(Mk, DualVector(rng.integers(-3, 4, 5), rng.integers(-3, 4, 5)))
        in_null = dsolve.null_power_vector(M, seed, tol)

        candidates = [DualVector.zeros(5), in_range, in_null, in_range + in_null, in_range * 2.0 + in_null * -1.0]
        for w in candidates:
            if dsolve.in_range_power(M, w, tol) and dsolve.in_null_power(M, w, tol):
                assert float(np.hypot(np.linalg.norm(w.real), np.linalg.norm(w.dual))) <= tol.resid_rel * scale
        assert dsolve.in_range_power(M, DualVector.zeros(5), tol)
        assert dsolve.in_null_power(M, DualVector.zeros(5), tol)
        assert dsolve.in_range_power(M, in_range, tol) and dsolve.in_null_power(M, in_null, tol)
        assert not dsolve.in_range_power(M, in_null, tol)


class TestSolutionUniqueness:
    """Test suite: solusi di R(Â^k) dari sistem yang sama selalu sama"""

    @pytest.mark.parametrize("seed", range(8))
    def test_range_solution_is_recovered(self, seed, tol):
        """Test x̂ ∈ R(Â^k) dengan Âx̂ = b̂ sama dengan solve_unique(b̂)"""
        M = gen_ddgi_canonical(5, 2, 2, seed).assemble()
        rng = np.random.default_rng([seed, 29])
        x_true = apply(power(M, 2), DualVector(rng.integers(-3, 4, 5), rng.integers(-3, 4, 5)))
        b = apply(M, x_true)

        assert dual_distance(dsolve.solve_unique(M, b, tol), x_true) <= tol.resid_rel

    def test_two_solves_of_same_system_agree(self, index_two_example, tol):
        """Test b̂ = Â·(Â²ŵ) dan b̂ = Â³ŵ memberi solusi yang sama di R(Â²)"""
        M = index_two_example
        w = DualVector([1, 2, 3], [0, 1, 0])
        x_true = apply(power(M, 2), w)
        x1 = dsolve.solve_unique(M, apply(M, x_true), tol)
        x2 = dsolve.solve_unique(M, apply(power(M, 3), w), tol)
        assert dual_distance(x1, x2) <= tol.resid_rel
        assert dual_distance(x1, x_true) <= tol.resid_rel

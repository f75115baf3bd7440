# tests/unit/test_fixtures.py

import os
import sys
import pytest
import numpy as np

# Menambahkan path root project untuk import
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core_logic import fixtures, realgi
from src.core_logic.dualgi import ddgi, dggi
from src.core_logic.dualmat import dual_distance
from src.core_logic.errors import BadShapeParams


class TestCanonicalGenerator:
    """Test suite untuk generator bentuk kanonik core-nilpotent"""

    def test_deterministic_per_seed(self):
        first = fixtures.gen_ddgi_canonical(5, 2, 2, seed=4).assemble()
        second = fixtures.gen_ddgi_canonical(5, 2, 2, seed=4).assemble()
        other = fixtures.gen_ddgi_canonical(5, 2, 2, seed=5).assemble()
        assert dual_distance(first, second) == 0.0
        assert dual_distance(first, other) > 0.0

    def test_exact_inverse_of_p(self):
        fixture = fixtures.gen_ddgi_canonical(6, 3, 2, seed=0)
        np.testing.assert_allclose(fixture.P @ fixture.P_inv, np.eye(6), atol=1e-12)
        assert np.linalg.cond(fixture.P) <= fixtures.MAX_COND_P

    @pytest.mark.parametrize("n, r, k", [(3, 1, 2), (4, 2, 1), (5, 2, 3), (5, 4, 1)])
    def test_index_and_rank(self, n, r, k):
        fixture = fixtures.gen_ddgi_canonical(n, r, k, seed=1)
        A = fixture.assemble().real
        assert realgi.index(A) == k
        assert realgi.numerical_rank(np.linalg.matrix_power(A, k)) == r

    def test_full_rank_forces_index_zero(self):
        fixture = fixtures.gen_ddgi_canonical(3, 3, 2, seed=0)
        assert fixture.k == 0
        assert realgi.index(fixture.assemble().real) == 0

    @pytest.mark.parametrize("n, r, k", [(3, 0, 1), (3, 4, 1), (4, 2, 3), (4, 2, 0)])
    def test_bad_shape_params(self, n, r, k):
        with pytest.raises(BadShapeParams):
            fixtures.gen_ddgi_canonical(n, r, k, seed=0)

    def test_unknown_b4_mode(self):
        with pytest.raises(BadShapeParams):
            fixtures.gen_ddgi_canonical(4, 2, 1, seed=0, b4="random")


class TestB4Modes:
    """Test suite untuk mode blok B₄"""

    @pytest.mark.parametrize("seed", range(3))
    def test_zero_mode_has_ddgi(self, seed):
        assert ddgi(fixtures.gen_ddgi_invertible(5, 2, 2, seed)).exists

    @pytest.mark.parametrize("seed", range(3))
    def test_violate_mode_has_no_ddgi(self, seed):
        M = fixtures.gen_ddgi_canonical(5, 2, 2, seed, b4="violate").assemble()
        result = ddgi(M)
        assert not result.exists
        assert result.reason == "ExistenceConditionFailed"

    def test_nontrivial_mode(self, tol):
        """Test B₄ tak nol dari null space operator syarat tetap memberi DDGI"""
        fixture = fixtures.gen_ddgi_canonical(5, 2, 2, seed=3, b4="nontrivial")
        assert np.any(np.abs(fixture.B4) > 1e-12)
        result = ddgi(fixture.assemble(), tol)
        assert result.exists
        assert dual_distance(result.inverse, fixture.expected_ddgi()) <= 1e-8

    def test_group_invertible_modes(self):
        assert dggi(fixtures.gen_group_invertible(4, 2, 0)).exists
        assert not dggi(fixtures.gen_group_invertible(4, 2, 0, b4="violate")).exists


class TestPairGenerators:
    """Test suite untuk generator pasangan terurut, komutatif dan absorption"""

    def test_ordered_pair_shares_core(self):
        X, Y = fixtures.gen_ordered_pair(4, 2, 0)
        assert realgi.numerical_rank(X.real) == 2
        assert X.shape == Y.shape == (4, 4)

    def test_ordered_pair_bounds(self):
        with pytest.raises(BadShapeParams):
            fixtures.gen_ordered_pair(3, 3, 0)

    def test_ordered_chain_bounds(self):
        with pytest.raises(BadShapeParams):
            fixtures.gen_ordered_chain(4, 2, 2, 0)

    def test_ordered_chain_middle_has_dggi(self):
        _, Y, _ = fixtures.gen_ordered_chain(5, 1, 3, 2)
        result = dggi(Y)
        assert result.exists
        assert realgi.numerical_rank(Y.real) == 3

    @pytest.mark.parametrize("kind", fixtures.COMMUTING_KINDS)
    def test_commuting_parts(self, kind):
        M, N = fixtures.gen_commuting_pair(kind, 4, 9)
        parts = (M.real, M.dual, N.real, N.dual)
        for i in range(4):
            for j in range(4):
                assert realgi.relative_residual(parts[i] @ parts[j], parts[j] @ parts[i]) <= 1e-10

    def test_commuting_mp_is_symmetric(self):
        M, _ = fixtures.gen_commuting_pair("mp", 3, 0)
        np.testing.assert_allclose(M.real, M.real.T, atol=1e-12)

    def test_commuting_unknown_kind(self):
        with pytest.raises(BadShapeParams):
            fixtures.gen_commuting_pair("minus", 3, 0)

    def test_absorption_pair_structure(self):
        M, N = fixtures.gen_absorption_pair(4, 6)
        np.testing.assert_array_equal(N.dual, M.real)
        assert realgi.range_equal(M.real, N.real)
        assert realgi.null_equal(M.real, N.real)

    def test_nilpotent_block(self):
        N = fixtures.nilpotent_block(4, 3)
        assert realgi.index(N) == 3
        assert not np.any(N[3])

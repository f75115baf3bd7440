# tests/unit/test_laws.py

import os
import sys
import pytest
import numpy as np

# Menambahkan path root project untuk import
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.core_logic import laws
from src.core_logic.dualmat import DualMatrix
from src.core_logic.errors import NoDGGI, NoGroupInverse, ShapeMismatch
from src.core_logic.fixtures import gen_absorption_pair, gen_commuting_pair, gen_ordered_chain, gen_ordered_pair
from src.core_logic.laws import GInverseKind


class TestParticularForm:
    """Test suite untuk bentuk partikular A^c − εA^cBA^c"""

    def test_group_form_diagonal(self, diagonal_example):
        X = laws.particular_form(GInverseKind.GROUP, diagonal_example)
        Ag = np.diag([0.25, 0.0, 0.2])
        np.testing.assert_allclose(X.real, Ag, atol=1e-12)
        np.testing.assert_allclose(X.dual, -Ag @ diagonal_example.dual @ Ag, atol=1e-12)

    def test_group_form_requires_index_one(self, index_two_example):
        with pytest.raises(NoGroupInverse):
            laws.particular_form(GInverseKind.GROUP, index_two_example)

    def test_general_form_missing_raises(self, diagonal_example):
        with pytest.raises(NoDGGI):
            laws.general_form("group", diagonal_example)

    def test_kind_accepts_string(self, index_two_example):
        X = laws.particular_form("drazin", index_two_example)
        np.testing.assert_allclose(X.real, [[1, 1, 1], [0, 0, 0], [0, 0, 0]], atol=1e-12)


class TestOrderLaws:
    """Test suite untuk hukum urutan reverse dan forward"""

    def test_counterexample_pair(self, order_law_pair):
        """Test pasangan contoh: hipotesis gagal dan kedua hukum tidak berlaku"""
        M, N = order_law_pair
        report = laws.check_order_law(GInverseKind.GROUP, M, N, form="general")
        assert not report.hypotheses["ac_commute"].holds
        assert not report.all_hypotheses
        assert report.reverse_holds is False
        assert report.forward_holds is False
        assert report.distances["forward_vs_reverse"] > 0.1
        assert report.distances["product_vs_reverse"] > 0.1

    def test_same_operand_holds(self):
        B = np.array([[1.0, 2.0], [0.0, -1.0]])
        M = DualMatrix(np.eye(2), B)
        for kind in GInverseKind:
            report = laws.check_order_law(kind, M, M)
            assert report.reverse_holds and report.forward_holds

    def test_transpose_hypothesis_only_for_mp_and_core(self):
        M = DualMatrix.identity(2)
        assert "at_c_commute" in laws.check_order_law("mp", M, M).hypotheses
        assert "at_c_commute" not in laws.check_order_law("group", M, M).hypotheses

    @pytest.mark.parametrize("kind", ["group", "drazin", "mp", "core"])
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_commuting_fixtures_satisfy_laws(self, kind, seed):
        M, N = gen_commuting_pair(kind, 3, seed)
        report = laws.check_order_law(kind, M, N)
        assert report.all_hypotheses
        assert report.reverse_holds and report.forward_holds

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            laws.check_order_law("group", DualMatrix.identity(2), DualMatrix.identity(3))

    def test_unknown_form(self):
        with pytest.raises(ValueError):
            laws.check_order_law("group", DualMatrix.identity(2), DualMatrix.identity(2), form="other")


class TestAbsorption:
    """Test suite untuk hukum absorption Drazin"""

    def test_identity_pair(self):
        report = laws.absorption_check(DualMatrix.identity(2), DualMatrix.identity(2))
        assert report.absorption_holds
        assert report.kind == "absorption"
        assert report.reverse_holds is None

    @pytest.mark.parametrize("seed", range(4))
    def test_absorption_fixture(self, seed):
        M, N = gen_absorption_pair(3, seed)
        report = laws.absorption_check(M, N)
        assert report.all_hypotheses
        assert report.absorption_holds


class TestDGroupOrder:
    """Test suite untuk orde parsial D-group"""

    def test_zero_is_below_everything(self, index_two_example):
        assert laws.d_group_leq(DualMatrix.zeros(3), index_two_example)

    @pytest.mark.parametrize("seed", range(4))
    def test_ordered_pair(self, seed):
        X, Y = gen_ordered_pair(4, 2, seed)
        assert laws.d_group_leq(X, Y)
        assert laws.d_group_leq_char(X, Y)

    def test_perturbed_upper_breaks_order(self):
        X, Y = gen_ordered_pair(4, 2, 7)
        broken = DualMatrix(Y.real + X.real, Y.dual)
        assert not laws.d_group_leq(X, broken)
        assert not laws.d_group_leq_char(X, broken)

    def test_equal_pair_when_blocks_zero(self):
        X, Y = gen_ordered_pair(3, 1, 5, zero_b=True, zero_y4=True)
        assert laws.d_group_leq(X, Y) and laws.d_group_leq(Y, X)

    def test_missing_dggi_raises(self, diagonal_example):
        with pytest.raises(NoDGGI):
            laws.d_group_leq(diagonal_example, diagonal_example)

    def test_chain_is_partial_order(self):
        report = laws.check_partial_order(gen_ordered_chain(4, 1, 2, 3), order="group")
        assert report.reflexive and report.antisymmetric and report.transitive
        assert report.violations == []


class TestDCoreOrder:
    """Test suite untuk orde parsial D-core"""

    def test_identity_plus_dual_reflexive(self):
        M = DualMatrix(np.eye(2), [[1.0, 2.0], [0.0, -1.0]])
        assert laws.d_core_leq(M, M)
        assert laws.d_core_leq_char(M, M)

    def test_different_real_parts(self):
        X = DualMatrix(np.diag([1.0, 0.0]), None)
        Y = DualMatrix(np.diag([1.0, 2.0]), None)
        assert laws.d_core_leq(X, Y)
        assert not laws.d_core_leq(Y, X)

    def test_unknown_order(self):
        with pytest.raises(ValueError):
            laws.check_partial_order([DualMatrix.identity(2)], order="minus")

    def test_chain_of_projections(self):
        chain = [DualMatrix(np.diag(d), None) for d in ([0.0, 0.0], [1.0, 0.0], [1.0, 2.0])]
        report = laws.check_partial_order(chain, order="core")
        assert report.reflexive and report.antisymmetric and report.transitive

    def test_undefined_relation_is_skipped(self, diagonal_example):
        """Test relasi tanpa DGGI elemen kiri tidak dihitung sebagai pelanggaran"""
        report = laws.check_partial_order([diagonal_example, DualMatrix.identity(3)], order="group")
        assert report.violations == []

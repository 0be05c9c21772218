import cmath
from fractions import Fraction as F

import numpy as np
import pytest

from mocktheta.core import ModularPoint
from mocktheta.errors import UnsupportedCase
from mocktheta.smatrix import apply_smatrix_check, apply_tmatrix_check, smatrix

TAU = 0.13 + 0.92j


class TestBuilders:
    def test_d21a_unitary(self):
        sm = smatrix("d21a", F(-1, 2), (1, 1))
        assert len(sm.labels) == 4
        assert sm.unitarity_defect() < 1e-12
        assert sm.conjectural

    def test_d21a_entries(self):
        sm = smatrix("d21a", F(-1, 2), (1, 1))
        # (1/sqrt(4)) exp(-pi i nu nu' / 2) over nu in the strict window
        i = sm.labels.index("nu=1")
        j = sm.labels.index("nu=-1")
        want = 0.5 * cmath.exp(1j * cmath.pi / 2)
        assert abs(sm.entries[i, j] - want) < 1e-14

    def test_osp42_unitary(self):
        sm = smatrix("osp42", 1)
        assert len(sm.labels) == 4
        assert sm.unitarity_defect() < 1e-12

    def test_osp42_requires_integer_level(self):
        with pytest.raises(UnsupportedCase):
            smatrix("osp42", F(1, 2))

    def test_osp32_sub_structure(self):
        sm = smatrix("osp32_sub", F(-3, 4))
        S = sm.entries
        assert S[0, 0] == 1 and S[1, 2] == 1 and S[2, 1] == 1
        assert S[3, 3] == (-1) ** (-3)
        # S^2 is the identity on the span
        assert np.abs(S @ S - np.eye(4)).max() < 1e-14

    def test_level1_consistency(self):
        # (S T)^3 = S^2 must hold as matrices for the level-1 spans
        for M, N in ((3, 2), (5, 2), (4, 2), (2, 2)):
            sm = smatrix("osp_level1", 1, (M, N))
            S, T = sm.entries, sm.t_matrix
            lhs = np.linalg.matrix_power(S @ T, 3)
            rhs = S @ S
            assert np.abs(lhs - rhs).max() < 1e-12, (M, N)

    def test_rows_export(self):
        rows = smatrix("d21a", F(-1, 2), (1, 1)).to_rows()
        assert len(rows) == 16
        assert set(rows[0]) == {"row", "col", "re", "im"}


class TestApplyChecks:
    def test_d21a(self):
        pts = [ModularPoint(TAU, (0.21, 0.17, 0.33), 0.07)]
        rep = apply_smatrix_check("d21a", F(-1, 2), pts, (1, 1))
        assert rep["max_residual"] < 1e-7
        rep = apply_tmatrix_check("d21a", F(-1, 2), pts, (1, 1))
        assert rep["max_residual"] < 1e-9

    def test_osp42(self):
        pts = [ModularPoint(TAU, (0.19, 0.32, 0.27), 0.05)]
        assert apply_smatrix_check("osp42", 1, pts)["max_residual"] < 1e-7
        assert apply_tmatrix_check("osp42", 1, pts)["max_residual"] < 1e-9

    def test_osp32_sub_both_levels(self):
        pts = [ModularPoint(TAU, (0.27, 0.43), 0.11)]
        for k in (F(-3, 4), F(-1)):
            assert apply_smatrix_check("osp32_sub", k, pts)["max_residual"] < 1e-7
            assert apply_tmatrix_check("osp32_sub", k, pts)["max_residual"] < 1e-7

    def test_sl21_trivial_span(self):
        pts = [ModularPoint(TAU, (0.23, 0.41), 0.07)]
        assert apply_smatrix_check("sl21", 1, pts)["max_residual"] < 1e-7


def test_osp42_level_two():
    sm = smatrix("osp42", 2)
    assert len(sm.labels) == 8
    assert sm.unitarity_defect() < 1e-12
    pts = [ModularPoint(TAU, (0.19, 0.32, 0.27), 0.05)]
    assert apply_smatrix_check("osp42", 2, pts)["max_residual"] < 1e-7
    assert apply_tmatrix_check("osp42", 2, pts)["max_residual"] < 1e-9


def test_d21a_asymmetric_parameters():
    # a = -1/3: six classes, still an exact discrete Fourier matrix
    from fractions import Fraction as F2

    k = F2(-2, 3)
    sm = smatrix("d21a", k, (1, 2))
    assert len(sm.labels) == 6
    assert sm.unitarity_defect() < 1e-12
    pts = [ModularPoint(TAU, (0.21, 0.17, 0.33), 0.05)]
    assert apply_smatrix_check("d21a", k, pts, (1, 2))["max_residual"] < 1e-7
    assert apply_tmatrix_check("d21a", k, pts, (1, 2))["max_residual"] < 1e-9

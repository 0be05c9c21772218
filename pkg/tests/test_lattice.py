import cmath
import math
from fractions import Fraction as F

import numpy as np
import pytest

from mocktheta.core import ModularPoint
from mocktheta.errors import ConditionViolation, PoleProximity
from mocktheta.lattice import (
    LatticeContext,
    Weight,
    build_modification,
    eval_modified,
    lattice_mock_theta,
    mu_class_representatives,
    projection_split,
    validate_context,
)
from mocktheta.mock import MockIndex, phi
from mocktheta.modifier import phi_tilde

TAU = 0.13 + 0.92j
CTX1 = LatticeContext(gamma_gram=((2,),), n_isotropic=1, k=1)
CTX2 = LatticeContext(gamma_gram=((2, -1), (-1, 2)), n_isotropic=1, k=1)


class TestValidate:
    def test_good_context(self):
        assert validate_context(CTX1) == []

    def test_half_level_rejected(self):
        bad = validate_context(LatticeContext(((2,),), 1, F(1, 2)))
        assert any("(k/2)" in v for v in bad)

    def test_isotropy_violation(self):
        ctx = LatticeContext(((2,),), 1, 1, beta_beta=((1,),))
        assert any("beta_1" in v for v in validate_context(ctx))

    def test_signed_mode_condition(self):
        ok = validate_context(LatticeContext(((2,),), 1, F(3, 2), mode="minus"))
        assert ok == []
        bad = validate_context(LatticeContext(((2,),), 1, F(3, 4), mode="minus"))
        assert bad

    def test_weight_conditions(self):
        w_bad = Weight(1, (F(1, 3), 0))
        assert validate_context(CTX1, weight=w_bad)

    def test_json_roundtrip(self):
        doc = CTX2.to_json()
        back = LatticeContext.from_json(doc)
        assert back.gamma_gram == CTX2.gamma_gram
        assert back.k == CTX2.k and back.mode == CTX2.mode


class TestMockTheta:
    def test_factorizes_through_rank_one(self):
        for k in (1, 2):
            ctx = LatticeContext(((2,),), 1, k)
            w = Weight(k, (0, F(-2)))
            pt = ModularPoint(TAU, (0.21, 0.33), 0.05)
            direct = lattice_mock_theta(ctx, w, pt).value
            G = ctx.full_gram_float()
            z = np.array(pt.z)
            beta_z = complex(G[1] @ z)
            gam_z = complex(G[0] @ z)
            s = ctx.pair(w.coords, ctx.gamma_vec(1))
            ref = cmath.exp(2j * math.pi * k * pt.t) * phi(
                MockIndex(k, s), TAU, -beta_z, beta_z + gam_z
            ).value
            assert abs(direct - ref) < 1e-10

    def test_rank2_naive_oracle(self):
        w = Weight(1, (0, 0, 1))
        pt = ModularPoint(TAU, (0.21, -0.17, 0.33), 0.0)
        mine = lattice_mock_theta(CTX2, w, pt).value
        G = CTX2.full_gram_float()
        lam = np.array([0.0, 0.0, 1.0])
        z = np.array(pt.z)
        tot = 0j
        for c1 in range(-8, 9):
            for c2 in range(-8, 9):
                g = np.array([c1, c2, 0.0])
                v = lam + g
                n2 = float(v @ G @ v)
                den = 1 - cmath.exp(
                    2j * math.pi * (-(float(g @ G[:, 2])) * pt.tau - complex(G[2] @ z))
                )
                tot += cmath.exp(1j * math.pi * pt.tau * n2 + 2j * math.pi * complex(v @ G @ z)) / den
        assert abs(mine - tot) < 1e-9

    def test_pole_proximity(self):
        # beta(z) = i tau c_gamma-direction hits 1 - q^c e^(-2 pi i beta z)
        pt = ModularPoint(TAU, (-TAU, 0.0), 0.0)
        with pytest.raises(PoleProximity):
            lattice_mock_theta(CTX1, Weight(1, (0, 0)), pt)

    def test_empty_t_matches_plain_theta(self):
        from mocktheta.theta import LatticeData, SignCharacter, lattice_theta

        ctx0 = LatticeContext(((2,),), 0, 1)
        pt = ModularPoint(TAU, (0.23,), 0.04)
        a = lattice_mock_theta(ctx0, Weight(1, (F(1, 2),)), pt).value
        lat = LatticeData(gram=np.array([[2.0]]))
        b = lattice_theta((0.5,), 1.0, lat, SignCharacter(), pt).value
        assert abs(a - b) < 1e-12

    def test_condition_violation_raised(self):
        with pytest.raises(ConditionViolation):
            lattice_mock_theta(
                LatticeContext(((2,),), 1, F(1, 2)),
                Weight(F(1, 2), (0, 0)),
                ModularPoint(TAU, (0.2, 0.3), 0.0),
            )


class TestModification:
    def test_sl_family_tilde_pattern(self):
        # gamma~_p = gamma_p + sum of the earlier isotropic directions
        gram = ((2, -1, 0), (-1, 2, -1), (0, -1, 2))
        ctx = LatticeContext(gram, 2, 1)
        gt2 = ctx.gamma_tilde(2)
        assert gt2[1] == 1 and gt2[3] == -1 and gt2[4] == 0
        gt3 = ctx.gamma_tilde(3)
        assert gt3[4] == -1 and gt3[3] == 0

    def test_orthogonal_family_tilde_trivial(self):
        gram = ((2, 0), (0, 2))
        ctx = LatticeContext(gram, 1, 1)
        assert ctx.gamma_tilde(2) == ctx.gamma_vec(2)

    def test_example_one_factor(self):
        res = build_modification(CTX1, Weight(1, (0, F(-1))))
        assert len(res.phi_factors) == 1
        fac = res.phi_factors[0]
        assert fac.degree == 1 and fac.shift == 1
        assert res.m_basis == ()

    def test_eval_matches_assembly(self):
        w = Weight(1, (0, F(-1)))
        res = build_modification(CTX1, w)
        pt = ModularPoint(TAU, (0.21, 0.33), 0.05)
        got = eval_modified(res, pt).value
        G = CTX1.full_gram_float()
        z = np.array(pt.z)
        beta_z = complex(G[1] @ z)
        gam_z = complex(G[0] @ z)
        ref = cmath.exp(2j * math.pi * pt.t) * phi_tilde(
            MockIndex(1, 1), TAU, -beta_z, beta_z + gam_z
        ).value
        assert abs(got - ref) < 1e-12

    def test_unsigned_vs_plus_on_even_context(self):
        ctxp = LatticeContext(((2,),), 1, 1, mode="plus")
        w = Weight(1, (0, F(-1)))
        pt = ModularPoint(TAU, (0.21, 0.33), 0.05)
        a = eval_modified(build_modification(CTX1, w), pt).value
        b = eval_modified(build_modification(ctxp, w, mode="plus"), pt).value
        assert abs(a - b) < 1e-11

    def test_mu_classes(self):
        res = build_modification(CTX2, Weight(1, (0, 0, 1)))
        assert res.mu_group_order() == 2
        reps = mu_class_representatives(res)
        assert len(reps) == 2

    def test_xi0(self):
        ctx = LatticeContext(((2,),), 1, F(3, 2), mode="minus")
        res = build_modification(ctx, Weight(F(3, 2), (0, 1)), mode="minus")
        # (xi0 | gamma_1) must be half-integral, (xi0 | beta_1) = 0
        v = ctx.pair(res.xi0, ctx.gamma_vec(1))
        assert v.denominator == 2
        assert ctx.pair(res.xi0, ctx.beta_vec(1)) == 0


class TestProjection:
    def test_recombination(self, rng):
        for _ in range(5):
            h = rng.uniform(-1, 1, size=3)
            h1, parts = projection_split(CTX2, h)
            total = h1 + sum(parts)
            assert np.abs(total - h).max() < 1e-12

    def test_orthogonality(self, rng):
        G = CTX2.full_gram_float()
        h = rng.uniform(-1, 1, size=3)
        h1, parts = projection_split(CTX2, h)
        assert abs(h1 @ G @ parts[0]) < 1e-12

    def test_m_vector_splits_trivially(self):
        gt2 = [float(x) for x in CTX2.gamma_tilde(2)]
        h1, parts = projection_split(CTX2, gt2)
        assert np.abs(parts[0]).max() < 1e-12

    def test_beta_in_its_block(self):
        h = [0.0, 0.0, 1.0]
        h1, parts = projection_split(CTX2, h)
        assert np.abs(h1).max() < 1e-12
        assert np.abs(parts[0] - h).max() < 1e-12


class TestRankTwoSigned:
    """Signed modification with a nontrivial class group and a shift
    vector that carries a lattice component (not just isotropic ones)."""

    def _setup(self):
        k = F(3, 2)
        ctx = LatticeContext(((2, 0), (0, 2)), 1, k, mode="minus")
        w = Weight(k, (0, 0, F(1)))
        return ctx, w

    def test_xi0_has_lattice_component(self):
        ctx, w = self._setup()
        res = build_modification(ctx, w, mode="minus")
        assert res.xi0[1] == F(1, 4)
        assert res.mu_group_order() == 3

    def test_signed_s_law_three_classes(self):
        import cmath

        ctx, w = self._setup()
        res_m = build_modification(ctx, w, mode="minus")
        res_p = build_modification(ctx, w, mode="plus")
        reps = mu_class_representatives(res_m)
        pt = ModularPoint(TAU, (0.21, -0.14, 0.33), 0.04)
        G = ctx.full_gram_float()
        z = np.array(pt.z)
        zz = complex(z @ G @ z)
        ptS = ModularPoint(-1 / TAU, tuple(z / TAU), pt.t - zz / (2 * TAU))
        kf = float(ctx.k)
        pref = 1j * (-1j * TAU) ** 1.5 * res_m.mu_group_order() ** -0.5
        xi0 = res_m.xi0

        def msum(mode, xi_l, xi_r):
            tot = 0j
            left = [a + b for a, b in zip(w.coords, xi0)] if xi_l else w.coords
            for rep in reps:
                rr = build_modification(ctx, rep, mode=mode)
                right = (
                    [a + b for a, b in zip(rep.coords, xi0)] if xi_r else rep.coords
                )
                tot += cmath.exp(
                    -2j * cmath.pi * float(ctx.pair(left, right)) / kf
                ) * eval_modified(rr, pt, xi_shift=xi_r).value
            return tot

        cases = [
            (eval_modified(res_p, ptS).value, msum("plus", False, False)),
            (eval_modified(res_m, ptS).value, msum("plus", False, True)),
            (eval_modified(res_p, ptS, xi_shift=True).value, msum("minus", True, False)),
            (eval_modified(res_m, ptS, xi_shift=True).value, msum("minus", True, True)),
        ]
        for lhs, tot in cases:
            assert abs(lhs - pref * tot) < 1e-10

    def test_even_rank_two_level_two(self):
        import cmath

        ctx = LatticeContext(((2, -1), (-1, 2)), 1, 2)
        w = Weight(2, (0, 0, F(-1)))
        res = build_modification(ctx, w)
        assert res.mu_group_order() == 4
        reps = mu_class_representatives(res)
        pt = ModularPoint(TAU, (0.21, -0.14, 0.33), 0.04)
        G = ctx.full_gram_float()
        z = np.array(pt.z)
        zz = complex(z @ G @ z)
        ptS = ModularPoint(-1 / TAU, tuple(z / TAU), pt.t - zz / (2 * TAU))
        lhs = eval_modified(res, ptS).value
        pref = 1j * (-1j * TAU) ** 1.5 * 0.5
        tot = sum(
            cmath.exp(-1j * cmath.pi * float(ctx.pair(w.coords, rep.coords)))
            * eval_modified(build_modification(ctx, rep), pt).value
            for rep in reps
        )
        assert abs(lhs - pref * tot) < 1e-10


class TestTwoStepModification:
    """Both isotropic directions peeled off: two modified factors and a
    trivial residual lattice."""

    CTX = LatticeContext(((2, -1), (-1, 2)), 2, 1)
    W = Weight(1, (0, 0, F(-1), F(1)))

    def test_two_factors(self):
        res = build_modification(self.CTX, self.W)
        assert len(res.phi_factors) == 2
        assert res.m_basis == ()
        # second factor argument carries the first isotropic correction
        fac2 = res.phi_factors[1]
        assert fac2.arg2[2] != 0

    def test_product_assembly(self):
        import cmath
        import math
        from mocktheta.mock import MockIndex
        from mocktheta.modifier import phi_tilde

        res = build_modification(self.CTX, self.W)
        pt = ModularPoint(TAU, (0.21, -0.14, 0.33, 0.11), 0.04)
        G = self.CTX.full_gram_float()
        z = np.array(pt.z)
        got = eval_modified(res, pt).value
        prod = cmath.exp(2j * math.pi * pt.t)
        for fac in res.phi_factors:
            a1 = np.array([float(x) for x in fac.arg1])
            a2 = np.array([float(x) for x in fac.arg2])
            prod *= phi_tilde(
                MockIndex(fac.degree, fac.shift), TAU,
                complex(a1 @ G @ z), complex(a2 @ G @ z),
            ).value
        assert abs(got - prod) < 1e-13

    def test_naive_oracle(self):
        import cmath
        import math

        pt = ModularPoint(TAU, (0.21, -0.14, 0.33, 0.11), 0.04)
        mine = lattice_mock_theta(self.CTX, self.W, pt).value
        G = self.CTX.full_gram_float()
        lam = np.array([float(x) for x in self.W.coords])
        z = np.array(pt.z)
        tot = 0j
        for c1 in range(-9, 10):
            for c2 in range(-9, 10):
                g = np.array([c1, c2, 0.0, 0.0])
                v = lam + g
                n2 = float(v @ G @ v)
                den = 1.0
                for j in (2, 3):
                    den *= 1 - cmath.exp(
                        2j * math.pi * (-(float(g @ G[:, j])) * TAU - complex(G[j] @ z))
                    )
                tot += cmath.exp(
                    1j * math.pi * TAU * n2 + 2j * math.pi * complex(v @ G @ z)
                ) / den
        tot *= cmath.exp(2j * math.pi * pt.t)
        assert abs(mine - tot) < 1e-10

    def test_s_and_t_law(self):
        import cmath
        import math

        res = build_modification(self.CTX, self.W)
        pt = ModularPoint(TAU, (0.21, -0.14, 0.33, 0.11), 0.04)
        G = self.CTX.full_gram_float()
        z = np.array(pt.z)
        zz = complex(z @ G @ z)
        ptS = ModularPoint(-1 / TAU, tuple(z / TAU), pt.t - zz / (2 * TAU))
        base = eval_modified(res, pt).value
        lhs = eval_modified(res, ptS).value
        reps = mu_class_representatives(res)
        assert len(reps) == 1
        rhs = (1j ** 2) * (-1j * TAU) ** 2 * sum(
            cmath.exp(-2j * math.pi * float(self.CTX.pair(self.W.coords, rep.coords)))
            * eval_modified(build_modification(self.CTX, rep), pt).value
            for rep in reps
        )
        assert abs(lhs - rhs) / max(1, abs(rhs)) < 1e-12
        ptT = ModularPoint(TAU + 1, pt.z, pt.t)
        lam2 = float(self.CTX.pair(self.W.coords, self.W.coords))
        lhsT = eval_modified(res, ptT).value
        assert abs(lhsT - cmath.exp(1j * math.pi * lam2) * base) < 1e-12

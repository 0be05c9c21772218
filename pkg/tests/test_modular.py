import cmath
import json
import math

import pytest

from mocktheta.core import ModularPoint
from mocktheta.mock import MockIndex
from mocktheta.modifier import phi_tilde
from mocktheta.modular import (
    IDENTITY,
    S,
    SL2Element,
    T,
    TransformLaw,
    act,
    diag_quad,
    gram_quad,
    sample_points,
    slash,
    verify_law,
)
from mocktheta.theta import theta_jm

QUAD = gram_quad([[0, 1], [1, 0]])  # (z|z) = 2 z1 z2


class TestSL2:
    def test_det_check(self):
        with pytest.raises(ValueError):
            SL2Element(1, 1, 1, 1)

    def test_identity_action(self):
        p = ModularPoint(0.2 + 1.1j, (0.3, 0.4), 0.5)
        q = act(IDENTITY, p, QUAD)
        assert q == p

    def test_s_fixed_point(self):
        p = ModularPoint(1j, (0.0, 0.0), 0.0)
        q = act(S, p, QUAD)
        assert abs(q.tau - 1j) < 1e-15 and q.z == (0, 0) and q.t == 0

    def test_t_translation(self):
        p = ModularPoint(0.2 + 1.1j, (0.3, 0.4), 0.5)
        q = act(T, p, QUAD)
        assert q.tau == p.tau + 1 and q.z == p.z and q.t == p.t

    def test_group_law(self, rng):
        gens = [S, T, SL2Element(1, 0, 1, 1)]
        p = ModularPoint(0.17 + 1.2j, (0.21, 0.05), 0.3)
        for _ in range(20):
            word = [gens[i] for i in rng.randint(0, 3, size=4)]
            A = word[0]
            for g in word[1:]:
                A = A @ g
            q1 = act(A, p, QUAD)
            q2 = p
            for g in reversed(word):
                q2 = act(g, q2, QUAD)
            assert abs(q1.tau - q2.tau) < 1e-13
            assert max(abs(a - b) for a, b in zip(q1.z, q2.z)) < 1e-13
            assert abs(q1.t - q2.t) < 1e-12


class TestSlash:
    def test_identity(self):
        F = lambda tau, z: tau + z[0]
        v = slash(F, 1, 1, IDENTITY, 1.3j, (0.2,), diag_quad((2.0,)))
        assert v == F(1.3j, (0.2,))

    def test_modified_fixed_by_s(self):
        F = lambda tau, z: phi_tilde(MockIndex(1, 0), tau, z[0], z[1]).value
        tau, z = 0.13 + 0.92j, (0.23, 0.41)
        v = slash(F, 1, 1, S, tau, z, QUAD)
        assert abs(v - F(tau, z)) < 1e-8

    def test_double_s_is_minus_identity(self):
        F = lambda tau, z: theta_jm(0, 1, tau, z[0]).value
        tau, z = 0.13 + 0.92j, (0.29,)
        quad1 = diag_quad((2.0,))
        inner = lambda tau2, z2: slash(F, 0.5, 1, S, tau2, z2, quad1)
        lhs = slash(inner, 0.5, 1, S, tau, z, quad1)
        rhs = slash(F, 0.5, 1, SL2Element(-1, 0, 0, -1), tau, z, quad1)
        # with principal branches the weight-1/2 composition closes exactly
        assert abs(lhs - rhs) < 1e-9

    def test_c_zero_reduces_to_translation(self):
        F = lambda tau, z: cmath.exp(2j * math.pi * tau) + z[0]
        tau, z = 0.21 + 1.4j, (0.37,)
        v = slash(F, 3, 2, T, tau, z, diag_quad((2.0,)))
        assert abs(v - F(tau + 1, z)) < 1e-15


class TestVerifyLaw:
    def _law(self, bias=0.0, tol=1e-8):
        pts = sample_points(5, n_z=2, seed=99)
        lhs = lambda p: phi_tilde(MockIndex(1, 0), -1 / p.tau, p.z[0] / p.tau, p.z[1] / p.tau).value
        rhs = lambda p: (
            p.tau
            * cmath.exp(2j * math.pi * p.z[0] * p.z[1] / p.tau)
            * phi_tilde(MockIndex(1, 0), p.tau, p.z[0], p.z[1]).value
            + bias
        )
        return TransformLaw("test-law", lhs, rhs, pts, tol)

    def test_passing_law(self):
        rep = verify_law(self._law())
        assert rep.passed and rep.max_residual < 1e-10

    def test_injected_defect_detected(self):
        rep = verify_law(self._law(bias=1e-3))
        assert not rep.passed
        assert abs(rep.max_residual - 1e-3) < 1e-4

    def test_error_reported_not_raised(self):
        def bad(p):
            raise ZeroDivisionError("boom")

        law = TransformLaw("bad", bad, lambda p: 0j, sample_points(2, seed=1))
        rep = verify_law(law)
        assert not rep.passed and rep.failures

    def test_json_shape(self):
        rep = verify_law(self._law())
        doc = json.loads(rep.to_json())
        assert set(doc) >= {"law_id", "points", "max_residual", "pass"}
        assert doc["points"][0].keys() >= {"tau", "z", "lhs", "rhs", "residual"}

    def test_sample_points_deterministic(self):
        a = sample_points(6, seed=42)
        b = sample_points(6, seed=42)
        assert [(p.tau, p.z) for p in a] == [(p.tau, p.z) for p in b]

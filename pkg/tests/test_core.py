import cmath
import math

import numpy as np
import pytest
from scipy.integrate import quad

from mocktheta.core import (
    SeriesValue,
    TruncationPolicy,
    gauss_E,
    gauss_E_complement,
    gauss_E_complement_scaled,
    q_pow,
    sum_ladder,
)
from mocktheta.errors import NonConvergent


def quad_E(x):
    val, _ = quad(lambda u: math.exp(-math.pi * u * u), 0.0, x)
    return 2.0 * val


class TestPolicy:
    def test_defaults(self):
        p = TruncationPolicy()
        assert p.abs_tol == 1e-12 and p.max_terms == 10_000
        assert p.min_im_tau == 0.05

    @pytest.mark.parametrize(
        "kwargs",
        [dict(abs_tol=0.0), dict(abs_tol=-1e-3), dict(max_terms=8), dict(min_im_tau=0.0)],
    )
    def test_invariants(self, kwargs):
        with pytest.raises(ValueError):
            TruncationPolicy(**kwargs)

    def test_tau_gate(self):
        with pytest.raises(ValueError):
            TruncationPolicy().require_tau(1.0 + 0.01j)


class TestGaussE:
    def test_zero(self):
        assert gauss_E(0.0) == 0.0
        assert gauss_E_complement(0.0) == 1.0

    def test_odd(self, rng):
        for x in rng.uniform(-6, 6, size=30):
            assert gauss_E(x) == -gauss_E(-x)

    def test_quadrature_oracle(self):
        assert abs(gauss_E(1.0) - quad_E(1.0)) < 1e-13

    def test_complement_quadrature_oracle(self):
        # u = x + v substitution keeps the quadrature relatively accurate
        from mocktheta._oracles import gauss_E_complement_quad

        for x in (6.0, 10.0):
            ref = gauss_E_complement_quad(x)
            val = gauss_E_complement(x)
            assert abs(val - ref) / ref < 1e-11

    def test_complement_relation(self):
        for x in np.arange(-8.0, 8.0, 0.01):
            assert abs(gauss_E(x) + gauss_E_complement(x) - 1.0) < 1e-13

    def test_monotone(self):
        # strict growth is visible in E itself until it saturates at the
        # double-precision 1.0; past that the complement carries the
        # strictness at full relative accuracy
        xs = np.arange(-8.0, 8.0, 0.01)
        vals = [gauss_E(x) for x in xs]
        assert all(a <= b for a, b in zip(vals, vals[1:]))
        mid = [v for x, v in zip(xs, vals) if abs(x) < 3.0]
        assert all(a < b for a, b in zip(mid, mid[1:]))
        tail = np.arange(-3.0, 8.0, 0.01)
        comp = [gauss_E_complement(x) for x in tail]
        assert all(a > b for a, b in zip(comp, comp[1:]))

    def test_bounded(self, rng):
        for x in rng.uniform(-50, 50, size=50):
            assert abs(gauss_E(x)) <= 1.0
        for x in rng.uniform(-3, 3, size=50):
            assert abs(gauss_E(x)) < 1.0

    def test_scaled_complement(self):
        # e^(pi x^2) (1 - E(x)) stays finite and matches the plain form
        for x in (0.0, 1.0, 3.0, 8.0):
            plain = gauss_E_complement(x) * math.exp(math.pi * x * x)
            assert abs(gauss_E_complement_scaled(x) - plain) < 1e-12 * plain
        assert gauss_E_complement_scaled(200.0) > 0.0

    def test_complement_relative_accuracy_large_x(self):
        # the complement must not lose relative accuracy where it is tiny
        x = 6.0
        tail, _ = quad(lambda u: math.exp(-math.pi * u * u), x, np.inf)
        assert abs(gauss_E_complement(x) - 2 * tail) / (2 * tail) < 1e-12


class TestQPow:
    def test_direct(self):
        assert abs(q_pow(1j, 1) - math.exp(-2 * math.pi)) < 1e-16

    def test_zero_exponent(self):
        assert q_pow(0.37 + 1.1j, 0) == 1.0

    def test_half_exponent(self):
        want = 1j * math.exp(-math.pi)
        assert abs(q_pow(0.5 + 1j, 0.5) - want) < 1e-15

    def test_magnitude(self, rng):
        for _ in range(20):
            tau = complex(rng.uniform(-1, 1), rng.uniform(0.1, 2))
            a = rng.uniform(-4, 4)
            want = math.exp(-2 * math.pi * a * tau.imag)
            assert abs(abs(q_pow(tau, a)) - want) < 1e-12 * want

    def test_additivity(self, rng):
        tau = 0.23 + 1.3j
        for _ in range(40):
            a, b = rng.uniform(-4, 4, size=2)
            lhs = q_pow(tau, a + b)
            rhs = q_pow(tau, a) * q_pow(tau, b)
            assert abs(lhs - rhs) <= 1e-14 * abs(lhs)


class TestSumLadder:
    def test_gaussian(self):
        tau = 1j
        policy = TruncationPolicy()
        out = sum_ladder(lambda n: cmath.exp(1j * math.pi * tau * n * n), policy)
        brute = sum(cmath.exp(-math.pi * n * n) for n in range(-40, 41))
        assert abs(out.value - brute) < 1e-14
        assert out.err_bound < policy.abs_tol

    def test_shifted_peak(self):
        # peak far from the starting index must still be crossed
        policy = TruncationPolicy()
        out = sum_ladder(lambda n: cmath.exp(-0.3 * (n - 9) ** 2), policy)
        brute = sum(cmath.exp(-0.3 * (n - 9) ** 2) for n in range(-60, 80))
        assert abs(out.value - brute) < 1e-12

    def test_max_terms(self):
        policy = TruncationPolicy(max_terms=16)
        with pytest.raises(NonConvergent):
            sum_ladder(lambda n: 1.0 + 0j, policy)

    def test_zero_direction(self):
        policy = TruncationPolicy()
        out = sum_ladder(lambda n: 1.0 + 0j if n == 0 else 0j, policy)
        assert out.value == 1.0


class TestSeriesValue:
    def test_arithmetic(self):
        a = SeriesValue(2.0 + 0j, 1e-12, 5)
        b = SeriesValue(3.0 + 0j, 1e-13, 7)
        s = a + b
        assert s.value == 5.0 and abs(s.err_bound - 1.1e-12) < 1e-27
        p = a * b
        assert p.value == 6.0
        assert p.err_bound >= 3 * 1e-12
        assert complex(a) == 2.0 + 0j

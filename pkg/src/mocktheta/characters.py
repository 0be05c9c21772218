"""Assembly of normalized (super)denominators, (modified) supercharacter
numerators, closed-form level-1 supercharacters, and twisted variants for
the wired algebra cases.

Coordinate frames (documented per case; z is always the tuple point.z):

  sl(2|1)       (tau, z1, z2, t),  z = -z1 a2 - z2 a1,   (z|z) = 2 z1 z2
  osp(3|2)      (tau, z1, z2, t),  z = z1 (a1+2a2) + z2 a1, (z|z) = -2 z1 z2
                (both the principal and the subprincipal system)
  osp(4|2)      (tau, x1, x2, y1, t) in the orthogonal eps/delta basis,
                (z|z) = x1^2 + x2^2 - y1^2
  D(2,1;a)      (tau, u1, u2, u3, t), z = sum u_i alpha_i, Gram pairing
  level-1 osp   (tau, x_1..x_m, y_1..y_n, t), (z|z) = sum x^2 - sum y^2
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import (
    DEFAULT_POLICY,
    ModularPoint,
    SeriesValue,
    TruncationPolicy,
    as_fraction,
    cexp,
)
from .errors import UnsupportedCase, InvalidXi, ZeroDivisorProximity
from .lattice import LatticeContext, Weight, build_modification, eval_modified, lattice_mock_theta
from .mock import MockIndex, phi
from .modifier import phi_tilde
from .superalg import WeightSpec, preset
from .theta import eta, theta_ab, theta_jm

F = Fraction
_2PI_I = 2j * math.pi

VARIANTS = (
    "ch_minus",
    "ch_minus_modified",
    "ch_plus_modified",
    "tw_minus_modified",
    "tw_plus_modified",
    "numerator_only",
    "denominator_only",
)


def _denominator_product(
    roots,  # list of (functional coefficients, parity)
    h_dual: float,
    eta_power: int,
    i_power: int,
    sign: int,
    tau: complex,
    z,
    t: complex,
    policy: TruncationPolicy,
) -> SeriesValue:
    """Weyl (super)denominator as eta power times a theta quotient.

    For the superdenominator (sign = -1) every root contributes a
    theta11; the denominator (sign = +1) puts theta10 at the odd roots
    and uses i^{d0} in place of i^{d0-d1}.
    """
    e = eta(tau, policy)
    value = SeriesValue((1j) ** (i_power % 4) * cexp(_2PI_I * h_dual * t), 0.0, 0)
    value = value * e
    for _ in range(eta_power - 1):
        value = value * e
    for coeffs, parity in roots:
        arg = sum(c * w for c, w in zip(coeffs, z))
        if parity == 0:
            value = value * theta_ab(1, 1, tau, arg, policy)
        else:
            th = (
                theta_ab(1, 1, tau, arg, policy)
                if sign == -1
                else theta_ab(1, 0, tau, arg, policy)
            )
            if abs(th.value) < 1e-10:
                raise ZeroDivisorProximity(f"theta factor vanishes at {arg}")
            inv = SeriesValue(
                1.0 / th.value,
                th.err_bound / abs(th.value) ** 2,
                th.terms_used,
            )
            value = value * inv
    return value


@dataclass
class CharacterSystem:
    """One wired algebra case: frame, denominator data, numerator rule."""

    name: str
    n_z: int
    quad_signature: object  # callable (za, zb) -> complex
    h_dual: Fraction
    sdim: int
    pos_roots: tuple  # ((coeffs, parity), ...)
    eta_power: int
    i_power_minus: int
    i_power_plus: int

    def quad(self, za, zb):
        return self.quad_signature(za, zb)

    def denominator(self, sign, point: ModularPoint, policy=DEFAULT_POLICY) -> SeriesValue:
        return _denominator_product(
            self.pos_roots,
            float(self.h_dual),
            self.eta_power,
            self.i_power_minus if sign == -1 else self.i_power_plus,
            sign,
            point.tau,
            point.z,
            point.t,
            policy,
        )


# ---------------------------------------------------------------------------
# sl(2|1)


def _quad_from_matrix(M):
    M = np.asarray(M, dtype=complex)

    def quad(za, zb):
        return complex(np.asarray(za) @ M @ np.asarray(zb))

    return quad


class Sl21System(CharacterSystem):
    """sl(2|1): frame z = -z1 a2 - z2 a1; weights k Lambda_0 + k1 beta."""

    def __init__(self):
        super().__init__(
            name="sl21",
            n_z=2,
            quad_signature=_quad_from_matrix([[0, 1], [1, 0]]),
            h_dual=F(1),
            sdim=0,
            pos_roots=(
                ((-1, 0), 1),  # alpha1
                ((0, -1), 1),  # alpha2
                ((-1, -1), 0),  # alpha1 + alpha2
            ),
            eta_power=3,
            i_power_minus=-1,
            i_power_plus=1,
        )
        self.ctx_template = lambda K: LatticeContext(
            gamma_gram=((2,),), n_isotropic=1, k=K
        )

    @staticmethod
    def _frame_to_ctx(z):
        z1, z2 = z
        return (z1, z1 - z2)

    @staticmethod
    def weyl_images(z):
        """(z, eps) pairs for the two Weyl elements."""
        z1, z2 = z
        return (((z1, z2), 1), ((-z2, -z1), -1))

    def numerator(
        self,
        w: WeightSpec,
        point: ModularPoint,
        policy=DEFAULT_POLICY,
        modified: bool = True,
        plus: bool = False,
    ) -> SeriesValue:
        (k1,) = w.labels
        K = w.k + self.h_dual
        ctx = self.ctx_template(K)
        lam = Weight(K, (F(0), as_fraction(k1)))
        total = SeriesValue(0.0, 0.0, 0)
        for zi, eps in self.weyl_images(point.z):
            pz = ModularPoint(point.tau, self._frame_to_ctx(zi), point.t)
            if modified:
                res = build_modification(ctx, lam)
                val = eval_modified(res, pz, policy)
            else:
                val = lattice_mock_theta(
                    ctx, lam, pz, policy, denominator_plus=plus
                )
            sgn = eps if not plus else eps  # eps_plus = eps_minus here
            total = total + sgn * val
        return total


# ---------------------------------------------------------------------------
# osp(3|2), principal system (positive definite lattice, signed route)


class Osp32System(CharacterSystem):
    """osp(3|2): frame z = z1 (a1 + 2 a2) + z2 a1 (a1 = d1-e1, a2 = e1)."""

    def __init__(self):
        super().__init__(
            name="osp32",
            n_z=2,
            quad_signature=_quad_from_matrix([[0, -1], [-1, 0]]),
            h_dual=F(1, 2),
            sdim=0,
            pos_roots=(
                ((-1, 0), 1),  # a1
                ((F(1, 2), F(-1, 2)), 1),  # a2 = eps1
                ((F(-1, 2), F(-1, 2)), 0),  # a1 + a2 = delta1
                ((0, -1), 1),  # a1 + 2 a2
                ((1, -1), 0),  # 2 a2
            ),
            eta_power=3,
            i_power_minus=-1,
            i_power_plus=2,
        )

    @staticmethod
    def _frame_to_ctx(z):
        z1, z2 = z
        return (-z1, -(z1 + z2))

    @staticmethod
    def weyl_images(z):
        z1, z2 = z
        # reflection in 2 eps1 swaps z1 and z2; its eps_minus is +1 since
        # eps1 itself is an odd root
        return ((z1, z2), 1), ((z2, z1), 1)

    def numerator(
        self,
        w: WeightSpec,
        point: ModularPoint,
        policy=DEFAULT_POLICY,
    ) -> SeriesValue:
        """Signed-route numerator: the shifted weight lands on the lattice
        weight class (lambda + xi0 is the physical highest weight plus the
        Weyl vector, with lambda integral against the lattice)."""
        (k1,) = w.labels
        K = w.k + self.h_dual
        ctx = LatticeContext(
            gamma_gram=((2,),), n_isotropic=1, k=K, mode="minus"
        )
        lam = Weight(K, (F(0), as_fraction(k1) + 1))
        total = SeriesValue(0.0, 0.0, 0)
        res = build_modification(ctx, lam, mode="minus")
        for zi, eps in self.weyl_images(point.z):
            pz = ModularPoint(point.tau, self._frame_to_ctx(zi), point.t)
            total = total + eps * eval_modified(res, pz, policy, xi_shift=True)
        return total


# ---------------------------------------------------------------------------
# osp(4|2) = osp(2n+2|2n), n = 1


class Osp42System(CharacterSystem):
    """osp(4|2): orthogonal frame (x1, x2, y1)."""

    def __init__(self):
        super().__init__(
            name="osp42",
            n_z=3,
            quad_signature=_quad_from_matrix(np.diag([1.0, 1.0, -1.0])),
            h_dual=F(0),
            sdim=17 - 2 * 8,  # dim0 = 9, dim1 = 8
            # odd a1 = e1-d1, a2 = d1-e2, a3 = d1+e2, theta-like e1+d1;
            # even e1-e2, e1+e2, 2d1
            pos_roots=(
                ((1, 0, -1), 1),
                ((0, -1, 1), 1),
                ((0, 1, 1), 1),
                ((1, 0, 1), 1),
                ((1, -1, 0), 0),
                ((1, 1, 0), 0),
                ((0, 0, 2), 0),
            ),
            eta_power=4,
            i_power_minus=-1,
            i_power_plus=3,
        )

    @staticmethod
    def _frame_to_ctx(z):
        x1, x2, y1 = z
        c3 = -y1
        c1 = -y1 - x1
        c2 = (x2 + x1 + y1) / 2.0
        return (c1, c2, c3)

    @staticmethod
    def weyl_images(z):
        x1, x2, y1 = z
        return (
            ((x1, x2, y1), 1),
            ((x2, x1, y1), -1),
            ((-x1, -x2, y1), 1),
            ((-x2, -x1, y1), -1),
        )

    def numerator(
        self,
        w: WeightSpec,
        point: ModularPoint,
        policy=DEFAULT_POLICY,
    ) -> SeriesValue:
        k1, k2 = w.labels  # beta label, eps2 label
        K = w.k  # h_dual = 0
        ctx = LatticeContext(
            gamma_gram=((2, 2), (2, 4)), n_isotropic=1, k=K
        )
        lam = Weight(K, (F(0), as_fraction(k2) / 2, as_fraction(k1)))
        res = build_modification(ctx, lam)
        total = SeriesValue(0.0, 0.0, 0)
        for zi, eps in self.weyl_images(point.z):
            pz = ModularPoint(point.tau, self._frame_to_ctx(zi), point.t)
            total = total + eps * eval_modified(res, pz, policy)
        return total


# ---------------------------------------------------------------------------
# D(2,1;a): closed two-term form


class D21aSystem(CharacterSystem):
    """D(2,1;a), a = -p/(p+q): frame z = u1 a1 + u2 a2 + u3 a3."""

    def __init__(self, p: int = 1, q: int = 1):
        self.p, self.q = p, q
        self.pre = preset("d21a", (p, q))
        a = F(-p, p + q)
        self.a = a
        gram = np.array(
            [[0.0, float(a), float(-(a + 1))],
             [float(a), 0.0, 1.0],
             [float(-(a + 1)), 1.0, 0.0]]
        )
        self.gram = gram
        super().__init__(
            name="d21a",
            n_z=3,
            quad_signature=_quad_from_matrix(gram),
            h_dual=F(0),
            sdim=1,  # 9 even - 8 odd
            pos_roots=(
                ((1, 0, 0), 1),
                ((0, 1, 0), 1),
                ((0, 0, 1), 1),
                ((1, 1, 1), 1),
                ((1, 1, 0), 0),
                ((1, 0, 1), 0),
                ((0, 1, 1), 0),
            ),
            eta_power=4,
            i_power_minus=-1,
            i_power_plus=3,
        )

    def functional(self, coeffs, z):
        return complex(np.asarray(coeffs, dtype=float) @ self.gram @ np.asarray(z))

    def nu_range(self, n: int):
        p, q = self.p, self.q
        lo = q * n - 2 * (p + q) * n
        return list(range(lo + 1, q * n + 1))

    def numerator_nu(
        self, nu: int, n: int, point: ModularPoint, policy=DEFAULT_POLICY
    ) -> SeriesValue:
        """Two-term closed form of the modified numerator for class nu."""
        p, q = self.p, self.q
        a = float(self.a)
        N = (p + q) * n
        k = F(-p * q * n, p + q)
        tau = point.tau
        z = point.z
        argA = self.functional((1, a + 1, a), z)
        argA2 = self.functional((-1, a - 1, a), z)
        w1 = self.functional((-1, 0, 0), z)
        w2 = self.functional((0, 0, -1), z)
        w1b = self.functional((1, 1, 1), z)
        w2b = self.functional((0, -1, 0), z)
        idx = MockIndex(p * n, 0)
        term1 = theta_jm(nu, N, tau, argA, policy) * phi_tilde(idx, tau, w1, w2, policy)
        term2 = theta_jm(nu, N, tau, argA2, policy) * phi_tilde(idx, tau, w1b, w2b, policy)
        pref = cexp(_2PI_I * float(k) * complex(point.t))
        return pref * (term1 + term2)


# ---------------------------------------------------------------------------
# osp(3|2) subprincipal: the four spanning functions f1..f4


def psi_fn(
    M,
    s,
    tau: complex,
    z1: complex,
    z2: complex,
    t: complex,
    policy=DEFAULT_POLICY,
    modified: bool = True,
) -> SeriesValue:
    """e^{-2 pi i M t} (F(tau,z1,z2) - F(tau,-z2,-z1)) with F the plus-signed
    (modified) rank-1 mock theta function of degree M and shift s."""
    idx = MockIndex(as_fraction(M), as_fraction(s), "plus")
    f = phi_tilde if modified else phi
    one = f(idx, tau, z1, z2, policy)
    two = f(idx, tau, -z2, -z1, policy)
    return cexp(-_2PI_I * float(M) * complex(t)) * (one - two)


class Osp32SubSystem(Osp32System):
    """osp(3|2) with the subprincipal sl(2); reuses the osp(3|2) frame."""

    def __init__(self):
        super().__init__()
        self.name = "osp32_sub"

    def f_function(
        self, i: int, k, point: ModularPoint, policy=DEFAULT_POLICY
    ) -> SeriesValue:
        """f_1..f_4 spanning the level-k modified supercharacters."""
        k = as_fraction(k)
        M = -4 * k - 2
        if M <= 0:
            raise UnsupportedCase("need k < -1/2")
        tau, (z1, z2), t = point.tau, point.z, point.t
        den = self.denominator(-1, point, policy)
        if abs(den.value) < 1e-12:
            raise ZeroDivisorProximity("superdenominator vanishes")
        if i == 1:
            num = psi_fn(M, 0, tau, z1 / 2, z2 / 2, t / 4, policy)
        elif i == 2:
            num = psi_fn(M, 0, tau, (z1 + 1) / 2, (z2 + 1) / 2, t / 4, policy)
        elif i == 3:
            pref = cexp(-1j * math.pi * float(2 * k + 1) * (z1 + z2 + tau))
            num = pref * psi_fn(M, 0, tau, (z1 + tau) / 2, (z2 + tau) / 2, t / 4, policy)
        elif i == 4:
            pref = cexp(-1j * math.pi * float(2 * k + 1) * (z1 + z2 + tau))
            num = pref * psi_fn(
                M, 0, tau, (z1 + tau + 1) / 2, (z2 + tau + 1) / 2, t / 4, policy
            )
        else:
            raise ValueError("i must be 1..4")
        return SeriesValue(
            num.value / den.value,
            num.err_bound / abs(den.value),
            num.terms_used + den.terms_used,
        )

    def f_closed_quotient(
        self, i: int, point: ModularPoint, policy=DEFAULT_POLICY
    ) -> SeriesValue:
        """Theta-quotient closed forms of R^- f_i at k = -3/4.

        The fourth one carries theta11 in the numerator; a theta00 there
        would contradict the tau -> tau+1 relation, which swaps f3 and f4.
        """
        tau, (z1, z2), t = point.tau, point.z, point.t
        e3 = eta(tau, policy)
        e3 = e3 * e3 * e3
        x = (z1 + z2) / 2
        tphase = cexp(-1j * math.pi * t / 2)
        t11 = theta_ab(1, 1, tau, x, policy)
        if i == 1:
            den = theta_ab(1, 1, tau, z1 / 2, policy) * theta_ab(1, 1, tau, z2 / 2, policy)
            pref = -1j
        elif i == 2:
            den = theta_ab(1, 0, tau, z1 / 2, policy) * theta_ab(1, 0, tau, z2 / 2, policy)
            pref = 1j
        elif i == 3:
            den = theta_ab(0, 1, tau, z1 / 2, policy) * theta_ab(0, 1, tau, z2 / 2, policy)
            pref = -1j
        elif i == 4:
            den = theta_ab(0, 0, tau, z1 / 2, policy) * theta_ab(0, 0, tau, z2 / 2, policy)
            pref = -1j
        else:
            raise ValueError("i must be 1..4")
        num = pref * tphase * (e3 * t11)
        return SeriesValue(
            num.value / den.value,
            num.err_bound / abs(den.value),
            num.terms_used,
        )


# ---------------------------------------------------------------------------
# level-1 osp(M|N) closed forms


@dataclass
class CharacterFunction:
    """An evaluable normalized supercharacter with its frame metadata."""

    label: str
    degree: float
    n_z: int
    fn: object  # callable (tau, z, t, policy) -> SeriesValue

    def __call__(self, point: ModularPoint, policy=DEFAULT_POLICY) -> SeriesValue:
        return self.fn(point.tau, point.z, point.t, policy)


def level1_osp_supercharacter(M: int, N: int, combo: str) -> CharacterFunction:
    """Closed eta/theta forms of the level-1 orthosymplectic supercharacters.

    combo: 'sum01' | 'diff01' | 'twisted' | 'diff_top' (the last only for
    even M).  Frame: (tau, x_1..x_m, y_1..y_n, t).
    """
    if N % 2:
        raise UnsupportedCase("N must be even")
    n = N // 2
    m = M // 2
    odd = M % 2 == 1
    if combo not in ("sum01", "diff01", "twisted", "diff_top"):
        raise UnsupportedCase(f"unknown combo {combo!r}")
    if combo == "diff_top" and odd:
        raise UnsupportedCase("diff_top exists only for even M")

    def fn(tau, z, t, policy=DEFAULT_POLICY):
        xs = z[:m]
        ys = z[m:]
        e = eta(tau, policy)
        val = SeriesValue(cexp(_2PI_I * complex(t)), 0.0, 0)
        power = n - m
        if odd:
            if combo == "sum01":
                e_half = eta(tau / 2, policy)
                e_double = eta(2 * tau, policy)
                val = val * e * e
                val = val * SeriesValue(
                    1.0 / (e_half.value * e_double.value), 0.0, 0
                )
                ab = (0, 0)
            elif combo == "diff01":
                e_half = eta(tau / 2, policy)
                val = val * SeriesValue(e_half.value / e.value, 0.0, 0)
                ab = (0, 1)
            else:  # twisted
                e_double = eta(2 * tau, policy)
                val = val * SeriesValue(e_double.value / e.value, 0.0, 0)
                val = val * (-1j) ** (n % 4)
                ab = (1, 0)
        else:
            if combo == "sum01":
                ab = (0, 0)
            elif combo == "diff01":
                ab = (0, 1)
            elif combo == "twisted":
                val = val * (-1j) ** (n % 4)
                ab = (1, 0)
            else:
                val = val * ((-1) ** (n % 2)) * (1j) ** (m % 4)
                ab = (1, 1)
        if power >= 0:
            for _ in range(power):
                val = val * e
        else:
            val = val * SeriesValue(e.value ** power, 0.0, e.terms_used)
        for x in xs:
            val = val * theta_ab(*ab, tau, x, policy)
        for y in ys:
            th = theta_ab(*ab, tau, y, policy)
            if abs(th.value) < 1e-12:
                raise ZeroDivisorProximity("theta factor vanishes")
            val = val * SeriesValue(1.0 / th.value, 0.0, th.terms_used)
        return val

    return CharacterFunction(
        label=f"osp({M}|{N})-level1-{combo}",
        degree=1.0,
        n_z=m + n,
        fn=fn,
    )


def level1_quad(M: int, N: int):
    m, n = M // 2, N // 2
    sig = [1.0] * m + [-1.0] * n

    def quad(za, zb):
        return sum(s * a * b for s, a, b in zip(sig, za, zb))

    return quad


# ---------------------------------------------------------------------------
# high-level evaluation


_SYSTEMS = {}


def system(name: str, params: tuple = None) -> CharacterSystem:
    key = (name, params)
    if key not in _SYSTEMS:
        if name == "sl21":
            _SYSTEMS[key] = Sl21System()
        elif name == "osp32":
            _SYSTEMS[key] = Osp32System()
        elif name == "osp32_sub":
            _SYSTEMS[key] = Osp32SubSystem()
        elif name == "osp42":
            _SYSTEMS[key] = Osp42System()
        elif name == "d21a":
            _SYSTEMS[key] = D21aSystem(*(params or (1, 1)))
        else:
            raise UnsupportedCase(f"no wired character system for {name!r}")
    return _SYSTEMS[key]


def ch_tilde(
    case: str,
    w: WeightSpec,
    point: ModularPoint,
    policy: TruncationPolicy = DEFAULT_POLICY,
    variant: str = "ch_minus_modified",
    params: tuple = None,
) -> SeriesValue:
    """Modified normalized supercharacter (and variants) for a wired case."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    sys = system(case, params)
    if variant == "denominator_only":
        return sys.denominator(-1, point, policy)
    modified = variant != "ch_minus"
    if not modified and case != "sl21":
        raise UnsupportedCase(
            f"unmodified supercharacters are wired only for sl21, not {case!r}"
        )
    if case in ("sl21", "osp32", "osp42"):
        if case == "sl21":
            num = sys.numerator(w, point, policy, modified=modified)
        elif case == "osp32":
            num = sys.numerator(w, point, policy)
        else:
            num = sys.numerator(w, point, policy)
        if variant == "numerator_only":
            return num
        den = sys.denominator(-1, point, policy)
        if abs(den.value) < 1e-10 * max(1.0, abs(num.value)):
            raise ZeroDivisorProximity("superdenominator too small")
        base = SeriesValue(
            num.value / den.value,
            (num.err_bound + abs(num.value / den.value) * den.err_bound)
            / abs(den.value),
            num.terms_used + den.terms_used,
        )
        if variant in ("ch_minus", "ch_minus_modified"):
            return base
        return _twist(sys, case, w, point, policy, variant)
    if case == "d21a":
        nu = d21a_nu(sys, w)
        n = int(-w.k * (sys.p + sys.q) / (sys.p * sys.q))
        num = sys.numerator_nu(nu, n, point, policy)
        if variant == "numerator_only":
            return num
        den = sys.denominator(-1, point, policy)
        base = SeriesValue(num.value / den.value, num.err_bound / abs(den.value), num.terms_used)
        if variant == "ch_minus_modified":
            return base
        return _twist(sys, case, w, point, policy, variant)
    raise UnsupportedCase(case)


def d21a_nu(sys: D21aSystem, w: WeightSpec) -> int:
    k1, k2 = w.labels
    if w.side == "T":
        return int(k2)
    return int(-k2)


def _xi_for(case: str):
    """A vector xi with alpha(xi) in p(alpha)/2 + Z for all roots."""
    if case == "sl21":
        # xi = (a1 + a2)/2: frame shift (z1, z2) -> (z1 - 1/2, z2 - 1/2)
        return (-0.5, -0.5), 0.5  # (frame shift, |xi|^2)
    raise UnsupportedCase(f"no xi wired for {case!r}")


def _twist(sys, case, w, point, policy, variant):
    """ch~^+ and twisted variants through the xi-shift substitutions."""
    xi, xi_norm = _xi_for(case)
    tau, z, t = point.tau, point.z, point.t
    lam_xi = _lambda_pairing_xi(case, w)
    if variant == "ch_plus_modified":
        zp = tuple(a + b for a, b in zip(z, xi))
        val = ch_tilde(case, w, ModularPoint(tau, zp, t), policy)
        return cmath.exp(-_2PI_I * lam_xi) * val
    xi_z = sys.quad(z, xi)
    t_shift = t + xi_z + tau * xi_norm / 2.0
    if variant == "tw_minus_modified":
        zp = tuple(a + tau * b for a, b in zip(z, xi))
        return ch_tilde(case, w, ModularPoint(tau, zp, t_shift), policy)
    if variant == "tw_plus_modified":
        zp = tuple(a + tau * b + b for a, b in zip(z, xi))
        val = ch_tilde(case, w, ModularPoint(tau, zp, t_shift), policy)
        return cmath.exp(-_2PI_I * lam_xi) * val
    raise ValueError(variant)


def _lambda_pairing_xi(case, w: WeightSpec) -> float:
    if case == "sl21":
        # lambda-bar = k1 beta1; (beta1|xi) = 1/2
        return float(w.labels[0]) / 2.0
    raise UnsupportedCase(case)


def twisted_and_plus_variants(
    case: str,
    w: WeightSpec,
    variant: str,
    point: ModularPoint,
    policy: TruncationPolicy = DEFAULT_POLICY,
    xi=None,
) -> SeriesValue:
    """Spec surface for the xi-shift variants; validates custom xi."""
    if xi is not None:
        _validate_xi(case, xi)
    return ch_tilde(case, w, point, policy, variant=variant)


def _validate_xi(case, xi):
    sys = system(case)
    for coeffs, parity in sys.pos_roots:
        val = sum(float(c) * x for c, x in zip(coeffs, xi))
        target = 0.5 * parity
        if abs((val - target) - round(val - target)) > 1e-9:
            raise InvalidXi(
                f"alpha(xi) = {val} not in {target} + Z for root {coeffs}"
            )

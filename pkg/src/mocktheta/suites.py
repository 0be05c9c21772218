"""Named verification suites.

Each suite pins one transformation law or closed-form identity, evaluates
both sides independently at seeded sample points, and reports the maximum
residual against its registered tolerance.  The CLI ``verify`` command and
the acceptance tests both dispatch through :func:`run_suite`, so there is
a single source of truth for every check.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from . import _oracles as oracle
from .core import DEFAULT_POLICY, ModularPoint
from .characters import ch_tilde, psi_fn, system
from .lattice import (
    LatticeContext,
    Weight,
    build_modification,
    eval_modified,
    lattice_mock_theta,
    mu_class_representatives,
)
from .mock import MockIndex, phi, phi_elliptic_residual, phi_shift_residual_a
from .modifier import phi_tilde, r_jm, r_jm_signed
from .smatrix import apply_smatrix_check, apply_tmatrix_check, smatrix
from .superalg import WeightSpec, enumerate_omega, preset
from .theta import eta, theta_ab, theta_jm, theta_jm_signed

F = Fraction
PI = math.pi


def _rng(seed):
    return np.random.RandomState(seed)


def _points(seed, n, im=(0.8, 2.0), re=(-0.4, 0.4), zb=0.45):
    rng = _rng(seed)
    pts = []
    while len(pts) < n:
        tau = complex(rng.uniform(*re), rng.uniform(*im))
        z1 = complex(rng.uniform(-zb, zb), rng.uniform(-0.08, 0.08))
        z2 = complex(rng.uniform(-zb, zb), rng.uniform(-0.08, 0.08))
        if min(abs(z1), abs(z2), abs(z1 - z2), abs(z1 + z2)) < 0.05:
            continue
        pts.append((tau, z1, z2))
    return pts


def _report(suite_id, anchor, tol, checks, notes=""):
    finite = [c["residual"] for c in checks if c["residual"] is not None]
    max_res = max(finite) if finite else 0.0
    return {
        "suite": suite_id,
        "anchor": anchor,
        "tol": tol,
        "max_residual": max_res,
        "pass": bool(max_res < tol),
        "n_checks": len(checks),
        "checks": checks,
        "notes": notes,
    }


def _chk(label, lhs, rhs, point=None):
    # mixed metric: absolute while the values are O(1), relative once an
    # elliptic prefactor pushes them to exponential scale
    scale = max(1.0, abs(lhs), abs(rhs))
    return {
        "check": label,
        "residual": abs(lhs - rhs) / scale,
        "lhs": str(lhs),
        "rhs": str(rhs),
        "point": str(point) if point is not None else None,
    }


# ---------------------------------------------------------------------------
# section 1: modified rank-1 functions


def suite_thm11a(seed=11, tol=1e-8, n_points=10, policy=DEFAULT_POLICY, m=None):
    checks = []
    degrees = (1, 2) if m is None else (int(m),)
    for tau, z1, z2 in _points(seed, n_points):
        for m in degrees:
            for s, s1 in ((0, 0), (0, 1), (1, 0)):
                lhs = phi_tilde(MockIndex(m, s), -1 / tau, z1 / tau, z2 / tau, policy).value
                pref = tau * cmath.exp(2j * PI * m * z1 * z2 / tau)
                rhs = pref * phi_tilde(MockIndex(m, s1), tau, z1, z2, policy).value
                checks.append(_chk(f"S m={m} s={s} s1={s1}", lhs, rhs, tau))
            lhs = phi_tilde(MockIndex(m, 0), tau + 1, z1, z2, policy).value
            rhs = phi_tilde(MockIndex(m, 0), tau, z1, z2, policy).value
            checks.append(_chk(f"T m={m}", lhs, rhs, tau))
    return _report("thm1.1a", "thm1.1a", tol, checks)


def suite_thm11b(seed=12, tol=1e-8, n_points=10, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points):
        for m in (1, 2):
            idx = MockIndex(m, 0)
            base = phi_tilde(idx, tau, z1, z2, policy).value
            for a, b in ((0, 1), (1, 0), (1, 1), (-1, 1), (0, -1)):
                lhs = phi_tilde(idx, tau, z1 + a * tau, z2 + b * tau, policy).value
                pref = cmath.exp(-2j * PI * m * (b * z1 + a * z2)) * cmath.exp(
                    -2j * PI * tau * m * a * b
                )
                checks.append(_chk(f"tau-shift m={m} a={a} b={b}", lhs, pref * base, tau))
                lhs = phi_tilde(idx, tau, z1 + a, z2 + b, policy).value
                checks.append(_chk(f"int-shift m={m} a={a} b={b}", lhs, base, tau))
    return _report("thm1.1b", "thm1.1b", tol, checks)


def suite_cor12(seed=13, tol=1e-9, n_points=10, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points):
        for m in (1, 2):
            a = phi_tilde(MockIndex(m, 0), tau, z1, z2, policy).value
            b = phi_tilde(MockIndex(m, 1), tau, z1, z2, policy).value
            checks.append(_chk(f"s-independence m={m}", a, b, tau))
    return _report("cor1.2", "cor1.2", tol, checks)


def suite_thm13a(seed=14, tol=1e-8, n_points=10, policy=DEFAULT_POLICY):
    checks = []
    pairings = [
        ("plus", 0, "plus", 1),
        ("minus", 0, "plus", F(1, 2)),
        ("plus", F(1, 2), "minus", 0),
        ("minus", F(1, 2), "minus", F(3, 2)),
    ]
    for tau, z1, z2 in _points(seed, n_points):
        for m in (F(1, 2), F(1)):
            for sgn_l, s_l, sgn_r, s_r in pairings:
                lhs = phi_tilde(
                    MockIndex(m, s_l, sgn_l), -1 / tau, z1 / tau, z2 / tau, policy
                ).value
                pref = tau * cmath.exp(2j * PI * float(m) * z1 * z2 / tau)
                rhs = pref * phi_tilde(MockIndex(m, s_r, sgn_r), tau, z1, z2, policy).value
                checks.append(
                    _chk(f"S m={m} {sgn_l}[{s_l}] -> {sgn_r}[{s_r}]", lhs, rhs, tau)
                )
    return _report("thm1.3a", "thm1.3a", tol, checks)


def suite_thm13b(seed=15, tol=1e-9, n_points=10, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points):
        for m in (F(1, 2), F(1)):
            # m + s integral: fixed by T
            s = F(1, 2) if m == F(1, 2) else F(1)
            for sgn in ("plus", "minus"):
                lhs = phi_tilde(MockIndex(m, s, sgn), tau + 1, z1, z2, policy).value
                rhs = phi_tilde(MockIndex(m, s, sgn), tau, z1, z2, policy).value
                checks.append(_chk(f"T-fix m={m} {sgn}[{s}]", lhs, rhs, tau))
            # m + s' half-integral: sign label swaps
            sp = F(0) if m == F(1, 2) else F(1, 2)
            for sgn, other in (("plus", "minus"), ("minus", "plus")):
                lhs = phi_tilde(MockIndex(m, sp, sgn), tau + 1, z1, z2, policy).value
                rhs = phi_tilde(MockIndex(m, sp, other), tau, z1, z2, policy).value
                checks.append(_chk(f"T-swap m={m} {sgn}[{sp}]", lhs, rhs, tau))
    notes = (
        "the m+s integral case is plain T-invariance; a variant with an "
        "extra half shift in the label would contradict the integer "
        "s-periodicity and direct term-by-term computation"
    )
    return _report("thm1.3b", "thm1.3b", tol, checks, notes)


def suite_thm13c(seed=16, tol=1e-8, n_points=8, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points):
        for m in (F(1, 2), F(1)):
            for s in (F(0), F(1, 2)):
                for sgn in ("plus", "minus"):
                    idx = MockIndex(m, s, sgn)
                    base = phi_tilde(idx, tau, z1, z2, policy).value
                    for a, b in ((1, 1), (1, -1), (2, 0)) if m == F(1, 2) else (
                        (1, 0),
                        (1, 1),
                        (0, 1),
                    ):
                        sv = -1 if (sgn == "minus" and a % 2) else 1
                        lhs = phi_tilde(idx, tau, z1 + a * tau, z2 + b * tau, policy).value
                        pref = (
                            sv
                            * cmath.exp(-2j * PI * float(m) * (b * z1 + a * z2))
                            * cmath.exp(-2j * PI * tau * float(m) * a * b)
                        )
                        checks.append(
                            _chk(f"tau m={m} s={s} {sgn} (a,b)=({a},{b})", lhs, pref * base, tau)
                        )
                    a, b = 1, 1
                    lhs = phi_tilde(idx, tau, z1 + a, z2 + b, policy).value
                    pref = cmath.exp(2j * PI * float(s) * a)
                    checks.append(
                        _chk(f"int m={m} s={s} {sgn}", lhs, pref * base, tau)
                    )
    return _report("thm1.3c", "thm1.3c", tol, checks)


def suite_thm13d(seed=17, tol=1e-8, n_points=8, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points):
        m = F(1, 2)
        for s in (F(0), F(1, 2)):
            for sgn, other in (("plus", "minus"), ("minus", "plus")):
                idx = MockIndex(m, s, sgn)
                base_half = phi_tilde(
                    MockIndex(m, s + F(1, 2), sgn), tau, z1, z2, policy
                ).value
                for a, b in ((1, 0), (0, 1), (1, 2)):
                    sv = -1 if (sgn == "minus" and a % 2) else 1
                    lhs = phi_tilde(idx, tau, z1 + a * tau, z2 + b * tau, policy).value
                    pref = (
                        sv
                        * cmath.exp(-2j * PI * float(m) * (b * z1 + a * z2))
                        * cmath.exp(-2j * PI * tau * float(m) * a * b)
                    )
                    checks.append(
                        _chk(
                            f"tau s={s} {sgn} (a,b)=({a},{b})",
                            lhs,
                            pref * base_half,
                            tau,
                        )
                    )
                a, b = 1, 0
                lhs = phi_tilde(idx, tau, z1 + a, z2 + b, policy).value
                pref = cmath.exp(2j * PI * float(s) * a)
                rhs = pref * phi_tilde(MockIndex(m, s, other), tau, z1, z2, policy).value
                checks.append(_chk(f"int s={s} {sgn}", lhs, rhs, tau))
    return _report("thm1.3d", "thm1.3d", tol, checks)


def suite_cor14a(seed=18, tol=1e-9, n_points=10, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points):
        for sgn in ("plus", "minus"):
            a = phi_tilde(MockIndex(F(1, 2), F(1, 2), sgn), tau, z1, z2, policy).value
            b = phi_tilde(MockIndex(F(1, 2), F(3, 2), sgn), tau, z1, z2, policy).value
            checks.append(_chk(f"{sgn} s=1/2 vs 3/2", a, b, tau))
    return _report("cor1.4a", "cor1.4a", tol, checks)


# ---------------------------------------------------------------------------
# section 2 lemmas


def suite_lem22(seed=21, tol=1e-9, n_points=5, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points):
        for m, s, sgn in ((F(1), F(0), "unsigned"), (F(1, 2), F(1, 2), "minus"), (F(1), F(1, 2), "plus")):
            idx = MockIndex(m, s, sgn)
            # the n -> -n reindexing forces an overall minus sign
            lhs = phi(idx, tau, -z1, -z2, policy).value
            rhs = -phi(idx.with_s(1 - s), tau, z1, z2, policy).value
            checks.append(_chk(f"(a) m={m} s={s} {sgn}", lhs, rhs, tau))
            base = phi(idx, tau, z1, z2, policy).value
            for a, b in ((2, 0), (1, 1), (-1, 1)):
                lhs = phi(idx, tau, z1 + a, z2 + b, policy).value
                rhs = cmath.exp(2j * PI * float(s) * a) * base
                checks.append(_chk(f"(b) m={m} {sgn} (a,b)=({a},{b})", lhs, rhs, tau))
        # (c)(i): integer m, any parities
        idx = MockIndex(1, 1)
        base = phi(idx, tau, z1, z2, policy).value
        lhs = phi(idx, tau, z1 + 1, z2, policy).value
        checks.append(_chk("(c)(i)", lhs, cmath.exp(2j * PI) * base, tau))
        # (c)(ii): non-integer m, opposite parity swaps the sign label
        idxm = MockIndex(F(1, 2), F(1, 2), "minus")
        lhs = phi(idxm, tau, z1 + 1, z2, policy).value
        rhs = cmath.exp(2j * PI * 0.5) * phi(idxm.flipped(), tau, z1, z2, policy).value
        checks.append(_chk("(c)(ii)", lhs, rhs, tau))
    return _report("lem2.2", "lem2.2", tol, checks)


def suite_lem23(seed=22, tol=1e-9, n_points=5, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points, im=(0.8, 1.4)):
        for m, s, sgn in ((F(1), F(0), "unsigned"), (F(1, 2), F(1, 2), "minus")):
            idx = MockIndex(m, s, sgn)
            res = phi_shift_residual_a(idx, tau, z1, z2, policy).value
            checks.append(_chk(f"(a) m={m} {sgn}", res, 0.0, tau))
            # (b): z1 -> z1 - 2 tau mirror
            lhs = phi(idx, tau, z1, z2, policy).value - cmath.exp(
                -4j * PI * float(m) * z2
            ) * phi(idx, tau, z1 - 2 * tau, z2, policy).value
            rhs = 0j
            two_m = int(2 * m)
            for kk in range(two_m):
                c = float(kk + s)
                pref = cmath.exp(1j * PI * c * (z1 - z2)) * cmath.exp(
                    -2j * PI * tau * c * c / (4 * float(m))
                )
                sv = 1 if sgn != "minus" else -1
                th = theta_jm_signed(sv, kk + s, m, tau, z1 + z2, policy).value
                rhs += pref * th
            checks.append(_chk(f"(b) m={m} {sgn}", lhs, rhs, tau))
    return _report("lem2.3", "lem2.3", tol, checks)


def suite_lem24(seed=23, tol=1e-9, n_points=5, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points, im=(0.8, 1.4)):
        for m, s, sgn, j in (
            (F(1), F(0), "unsigned", 1),
            (F(1), F(0), "unsigned", -1),
            (F(1, 2), F(1, 2), "minus", 1),
            (F(1, 2), F(1, 2), "minus", 2),
        ):
            idx = MockIndex(m, s, sgn)
            lhs = phi(idx, tau, z1 + j * tau, z2 + j * tau, policy).value
            pref = cmath.exp(-2j * PI * j * float(m) * (z1 + z2)) * cmath.exp(
                -2j * PI * tau * float(m) * j * j
            )
            if sgn == "minus" and j % 2:
                pref = -pref
            rhs = pref * phi(idx, tau, z1, z2, policy).value
            checks.append(_chk(f"m={m} {sgn} j={j}", lhs, rhs, tau))
            res = phi_elliptic_residual(idx, j, tau, z1, z2, policy).value
            scale = max(1.0, abs(lhs))
            checks.append(
                {"check": f"residual-op m={m} {sgn} j={j}",
                 "residual": abs(res) / scale, "lhs": str(res), "rhs": "0",
                 "point": str(tau)}
            )
    return _report("lem2.4", "lem2.4", tol, checks)


def suite_lem210(seed=24, tol=1e-9, n_points=5, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, _ in _points(seed, n_points, im=(0.9, 1.6)):
        v = z1
        for sgn, j, m in ((1, 0, F(1)), (1, 1, F(1)), (-1, F(1, 2), F(1, 2)), (-1, 1, F(3, 2))):
            rj = lambda t_, v_: r_jm_signed(sgn, j, m, t_, v_, policy).value
            base = rj(tau, v)
            lhs = rj(tau, v + 1)
            rhs = (-1) ** int(2 * F(j)) * base
            checks.append(_chk(f"(a) sgn={sgn} j={j} m={m}", lhs, rhs, tau))
            mf = float(m)
            jf = float(j)
            qpow = cmath.exp(-2j * PI * tau * jf * jf / (4 * mf))
            inhom = 2 * qpow * cmath.exp(2j * PI * jf * v)
            if sgn == 1:
                lhs = base - cmath.exp(2j * PI * mf * (2 * v - tau)) * rj(tau, v - tau)
            else:
                lhs = base + cmath.exp(2j * PI * mf * (2 * v - tau)) * rj(tau, v - tau)
            checks.append(_chk(f"(b) sgn={sgn} j={j} m={m}", lhs, inhom, tau))
            lhs = base - cmath.exp(8j * PI * mf * (v - tau)) * rj(tau, v - 2 * tau)
            j2 = jf + 2 * mf
            rhs = 2 * (
                qpow * cmath.exp(2j * PI * jf * v)
                + sgn
                * cmath.exp(-2j * PI * tau * j2 * j2 / (4 * mf))
                * cmath.exp(2j * PI * j2 * v)
            )
            checks.append(_chk(f"(c) sgn={sgn} j={j} m={m}", lhs, rhs, tau))
    return _report("lem2.10", "lem2.10", tol, checks)


# ---------------------------------------------------------------------------
# the Zwegers bridge


def _zw_mu(tau, u, v, policy):
    """Zwegers' mu function, an independent reference implementation."""
    q = cmath.exp(2j * PI * tau)
    tot = 0j
    n = 0
    # symmetric window large enough for the tolerances in use
    for n in range(-42, 43):
        tot += (
            (-1) ** n
            * q ** (n * (n + 1) / 2)
            * cmath.exp(2j * PI * n * v)
            / (1 - cmath.exp(2j * PI * u) * q**n)
        )
    th = theta_ab(1, 1, tau, v, policy).value
    return cmath.exp(1j * PI * u) / th * tot


def _zw_R(tau, u, policy):
    """Zwegers' real-analytic R, quadrature-free reference form."""
    from .core import gauss_E_complement, gauss_E_complement_scaled

    y = tau.imag
    tot = 0j
    for kk in range(-36, 37):
        nu = kk + 0.5
        sgn = 1.0 if nu > 0 else -1.0
        psi = (nu + u.imag / y) * math.sqrt(2 * y)
        wexp = -1j * PI * nu * nu * tau - 2j * PI * nu * u
        sp = sgn * psi
        if sp >= 5.0:
            term = sgn * gauss_E_complement_scaled(sp) * cmath.exp(
                wexp - PI * psi * psi
            )
        else:
            term = sgn * gauss_E_complement(sp) * cmath.exp(wexp)
        tot += term * (-1) ** (kk % 2)
    return tot


def suite_eq120(seed=25, tol=1e-9, n_points=10, policy=DEFAULT_POLICY):
    """The completed bridge to Zwegers' mu-hat, plus mu-hat symmetry."""
    checks = []
    idx = MockIndex(F(1, 2), F(1, 2), "minus")
    for tau, z1, z2 in _points(seed, n_points):
        muh = _zw_mu(tau, z1, z2, policy) + 0.5j * _zw_R(tau, z1 - z2, policy)
        lhs = phi_tilde(idx, tau, z1, 2 * z2 - z1, policy).value
        rhs = theta_ab(1, 1, tau, z2, policy).value * muh
        checks.append(_chk("completed bridge", lhs, rhs, tau))
        sym_l = theta_ab(1, 1, tau, z1, policy).value * phi_tilde(
            idx, tau, z1, 2 * z2 - z1, policy
        ).value
        sym_r = theta_ab(1, 1, tau, z2, policy).value * phi_tilde(
            idx, tau, z2, 2 * z1 - z2, policy
        ).value
        checks.append(_chk("mu-hat symmetry", sym_l, sym_r, tau))
    notes = (
        "a same-modulus single-product pairing of the two functions fails "
        "an elliptic-multiplier bookkeeping check and is recorded "
        "(non-gating) by the eq1.19 suite; this suite verifies the bridge "
        "through an independent mu/R implementation instead"
    )
    return _report("eq1.20", "eq1.20", tol, checks, notes)


def suite_eq119(seed=26, tol=math.inf, n_points=4, policy=DEFAULT_POLICY):
    """Recording suite: the unmodified bridge plus the single-product
    variant, whose residuals are kept as evidence rather than gated."""
    checks = []
    idx = MockIndex(F(1, 2), F(1, 2), "minus")
    variant = {0: [], 1: []}
    for tau, z1, z2 in _points(seed, n_points):
        mu = _zw_mu(tau, z1, z2, policy)
        lhs = phi(idx, tau, z1, 2 * z2 - z1, policy).value
        rhs = theta_ab(1, 1, tau, z2, policy).value * mu
        checks.append(_chk("unmodified bridge (gauge)", lhs, rhs, tau))
        for s in (0, 1):
            pl = theta_ab(1, 1, tau, z1 + z2, policy).value * lhs
            pr = theta_ab(1, 1, tau, z2, policy).value * phi(
                MockIndex(1, s), tau, z1, z2, policy
            ).value
            variant[s].append(abs(pl - pr))
    rep = _report("eq1.19", "eq1.19", 1e-9, checks)
    rep["pass"] = bool(rep["max_residual"] < 1e-9)
    rep["single_product_residuals"] = {
        "s=0": max(variant[0]),
        "s=1": max(variant[1]),
    }
    rep["notes"] = (
        "the single-product form holds for neither s in {0, 1} "
        f"(residuals ~{max(variant[0]):.3g}); the mu-form above is the "
        "identity that holds"
    )
    return rep


# ---------------------------------------------------------------------------
# section 3 pipeline


def _ctx_sl2(k):
    return LatticeContext(gamma_gram=((2,),), n_isotropic=1, k=k)


def _ctx_sl3(k):
    return LatticeContext(gamma_gram=((2, -1), (-1, 2)), n_isotropic=1, k=k)


def _ctx_odd(k):
    return LatticeContext(gamma_gram=((2,),), n_isotropic=1, k=k, mode="minus")


def suite_eq35(seed=31, tol=1e-9, n_points=6, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points):
        for k in (1, 2):
            ctx = _ctx_sl2(k)
            w = Weight(k, (0, F(-1)))
            pt = ModularPoint(tau, (z1, z2), 0.05)
            direct = lattice_mock_theta(ctx, w, pt, policy).value
            G = ctx.full_gram_float()
            z = np.array(pt.z)
            beta_z = complex(G[1] @ z)
            gam_z = complex(G[0] @ z)
            s = ctx.pair(w.coords, ctx.gamma_vec(1))
            orc = cmath.exp(2j * PI * k * pt.t) * phi(
                MockIndex(k, s), tau, -beta_z, beta_z + gam_z, policy
            ).value
            checks.append(_chk(f"k={k}", direct, orc, tau))
    return _report("eq3.5", "eq3.5", tol, checks)


def suite_prop32b(seed=32, tol=1e-7, n_points=4, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points):
        for ctx, zc, label in (
            (_ctx_sl2(1), (z1, z2), "rank1 k=1"),
            (_ctx_sl2(2), (z1, z2), "rank1 k=2"),
            (_ctx_sl3(1), (z1, -0.7 * z2, z2), "rank2 k=1"),
        ):
            w = Weight(ctx.k, (0,) * ctx.rank + (F(-1),))
            res = build_modification(ctx, w)
            pt = ModularPoint(tau, zc, 0.06)
            G = ctx.full_gram_float()
            z = np.array(pt.z)
            zz = complex(z @ G @ z)
            ptS = ModularPoint(-1 / tau, tuple(z / tau), pt.t - zz / (2 * tau))
            lhs = eval_modified(res, ptS, policy).value
            reps = mu_class_representatives(res)
            kf = float(ctx.k)
            pref = (
                1j ** ctx.n_isotropic
                * (-1j * tau) ** (ctx.ambient_dim / 2)
                * res.mu_group_order() ** -0.5
            )
            tot = 0j
            for rep in reps:
                rr = build_modification(ctx, rep)
                pairing = float(ctx.pair(w.coords, rep.coords))
                tot += cmath.exp(-2j * PI * pairing / kf) * eval_modified(
                    rr, pt, policy
                ).value
            checks.append(_chk(f"S {label}", lhs, pref * tot, tau))
            lhsT = eval_modified(res, ModularPoint(tau + 1, pt.z, pt.t), policy).value
            lam2 = float(ctx.pair(w.coords, w.coords))
            rhsT = cmath.exp(1j * PI * lam2 / kf) * eval_modified(res, pt, policy).value
            checks.append(_chk(f"T {label}", lhsT, rhsT, tau))
    return _report("prop3.2b", "prop3.2b", tol, checks)


def suite_prop33b(seed=33, tol=1e-7, n_points=4, policy=DEFAULT_POLICY):
    checks = []
    k = F(3, 2)
    for tau, z1, z2 in _points(seed, n_points):
        ctx = _ctx_odd(k)
        w = Weight(k, (0, F(1)))
        res_m = build_modification(ctx, w, mode="minus")
        res_p = build_modification(ctx, w, mode="plus")
        pt = ModularPoint(tau, (z1, z2), 0.04)
        G = ctx.full_gram_float()
        z = np.array(pt.z)
        zz = complex(z @ G @ z)
        ptS = ModularPoint(-1 / tau, tuple(z / tau), pt.t - zz / (2 * tau))
        reps = mu_class_representatives(res_m)
        kf = float(k)
        pref = 1j * (-1j * tau) ** 1.0 * res_m.mu_group_order() ** -0.5
        xi0 = res_m.xi0

        def msum(mode, xi_l, xi_r):
            tot = 0j
            for rep in reps:
                rr = build_modification(ctx, rep, mode=mode)
                left = [a + b for a, b in zip(w.coords, xi0)] if xi_l else w.coords
                right = (
                    [a + b for a, b in zip(rep.coords, xi0)] if xi_r else rep.coords
                )
                pairing = float(ctx.pair(left, right))
                tot += cmath.exp(-2j * PI * pairing / kf) * eval_modified(
                    rr, pt, policy, xi_shift=xi_r
                ).value
            return tot

        checks.append(
            _chk("plus->plus", eval_modified(res_p, ptS, policy).value, pref * msum("plus", False, False), tau)
        )
        checks.append(
            _chk("minus->plus(xi)", eval_modified(res_m, ptS, policy).value, pref * msum("plus", False, True), tau)
        )
        checks.append(
            _chk(
                "plus(xi)->minus",
                eval_modified(res_p, ptS, policy, xi_shift=True).value,
                pref * msum("minus", True, False),
                tau,
            )
        )
        checks.append(
            _chk(
                "minus(xi)->minus(xi)",
                eval_modified(res_m, ptS, policy, xi_shift=True).value,
                pref * msum("minus", True, True),
                tau,
            )
        )
    return _report("prop3.3b", "prop3.3b", tol, checks)


def suite_prop33c(seed=34, tol=1e-7, n_points=5, policy=DEFAULT_POLICY):
    checks = []
    k = F(3, 2)
    for tau, z1, z2 in _points(seed, n_points):
        ctx = _ctx_odd(k)
        w = Weight(k, (0, F(1)))
        res_m = build_modification(ctx, w, mode="minus")
        res_p = build_modification(ctx, w, mode="plus")
        pt = ModularPoint(tau, (z1, z2), 0.04)
        ptT = ModularPoint(tau + 1, pt.z, pt.t)
        kf = float(k)
        lam2 = float(ctx.pair(w.coords, w.coords))
        lhs = eval_modified(res_p, ptT, policy).value
        rhs = cmath.exp(1j * PI * lam2 / kf) * eval_modified(res_m, pt, policy).value
        checks.append(_chk("T plus->minus", lhs, rhs, tau))
        lamxi = [a + b for a, b in zip(w.coords, res_m.xi0)]
        lam2x = float(ctx.pair(lamxi, lamxi))
        lhs = eval_modified(res_m, ptT, policy, xi_shift=True).value
        rhs = cmath.exp(1j * PI * lam2x / kf) * eval_modified(
            res_m, pt, policy, xi_shift=True
        ).value
        checks.append(_chk("T minus(xi) fixed", lhs, rhs, tau))
    return _report("prop3.3c", "prop3.3c", tol, checks)


def suite_prop37(seed=35, tol=1e-8, n_points=4, policy=DEFAULT_POLICY):
    checks = []
    k = F(3, 2)
    for tau, z1, z2 in _points(seed, n_points):
        ctx = _ctx_odd(k)
        w = Weight(k, (0, F(1)))
        res = build_modification(ctx, w, mode="minus")
        pt = ModularPoint(tau, (z1, z2), 0.04)
        G = ctx.full_gram_float()
        z = np.array(pt.z)
        lamxi = [a + b for a, b in zip(w.coords, res.xi0)]
        kf = float(k)
        base = eval_modified(res, pt, policy, xi_shift=True).value
        for vname, v in (("|g|^2 beta", np.array([0.0, 2.0])), ("gamma~", np.array([1.0, 0.0]))):
            lhs = eval_modified(
                res, ModularPoint(tau, tuple(z + v), pt.t), policy, xi_shift=True
            ).value
            pairing = float(np.array([float(x) for x in lamxi]) @ G @ v)
            checks.append(
                _chk(f"(i) v={vname}", lhs, cmath.exp(2j * PI * pairing) * base, tau)
            )
            lhs = eval_modified(
                res, ModularPoint(tau, tuple(z + tau * v), pt.t), policy, xi_shift=True
            ).value
            sgn = (-1) ** abs(int(round(float(G[1] @ v))))
            zv = complex(z @ G @ v)
            v2 = float(v @ G @ v)
            rhs = (
                sgn
                * cmath.exp(-2j * PI * kf * zv)
                * cmath.exp(-1j * PI * tau * kf * v2)
                * base
            )
            checks.append(_chk(f"(ii) v={vname}", lhs, rhs, tau))
    return _report("prop3.7", "prop3.7", tol, checks)


def suite_prop38(seed=36, tol=1e-8, n_points=4, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points):
        ctx = _ctx_sl3(1)
        w = Weight(1, (0, 0, F(-1)))
        res = build_modification(ctx, w)
        pt = ModularPoint(tau, (z1, -0.7 * z2, z2), 0.06)
        G = ctx.full_gram_float()
        z = np.array(pt.z)
        base = eval_modified(res, pt, policy).value
        gens = [
            ("m-basis", np.array([0.0, 1.0, -1.0])),
            ("(|g|^2/2) beta", np.array([0.0, 0.0, 1.0])),
            ("gamma~_1", np.array([1.0, 0.0, 0.0])),
        ]
        for vname, v in gens:
            lhs = eval_modified(res, ModularPoint(tau, tuple(z + v), pt.t), policy).value
            checks.append(_chk(f"(i) v={vname}", lhs, base, tau))
            lhs = eval_modified(
                res, ModularPoint(tau, tuple(z + tau * v), pt.t), policy
            ).value
            zv = complex(z @ G @ v)
            v2 = float(v @ G @ v)
            rhs = cmath.exp(-2j * PI * zv) * cmath.exp(-1j * PI * tau * v2) * base
            checks.append(_chk(f"(ii) v={vname}", lhs, rhs, tau))
    return _report("prop3.8", "prop3.8", tol, checks)


# ---------------------------------------------------------------------------
# denominators and sl(2|1)


def suite_eq56(seed=41, tol=1e-8, n_points=6, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points):
        for case in ("sl21", "osp32_sub"):
            sys = system(case)
            pt = ModularPoint(tau, (z1, z2), 0.05)
            zz = sys.quad(pt.z, pt.z)
            ptS = ModularPoint(-1 / tau, tuple(x / tau for x in pt.z), pt.t - zz / (2 * tau))
            lhs = sys.denominator(-1, ptS, policy).value
            d0 = sum(1 for _, par in sys.pos_roots if par == 0)
            d1 = sum(1 for _, par in sys.pos_roots if par == 1)
            rhs = (
                1j ** ((d1 - d0) % 4)
                * (-1j * tau)
                * sys.denominator(-1, pt, policy).value
            )
            checks.append(_chk(f"S {case}", lhs, rhs, tau))
            lhsT = sys.denominator(-1, ModularPoint(tau + 1, pt.z, pt.t), policy).value
            rhsT = cmath.exp(1j * PI * sys.sdim / 12) * sys.denominator(-1, pt, policy).value
            checks.append(_chk(f"T {case}", lhsT, rhsT, tau))
    return _report("eq5.6", "eq5.6", tol, checks)


def suite_denom_sl21(seed=42, tol=1e-10, n_points=6, policy=DEFAULT_POLICY):
    checks = []
    sys = system("sl21")
    for tau, z1, z2 in _points(seed, n_points):
        pt = ModularPoint(tau, (z1, z2), 0.07)
        den = sys.denominator(-1, pt, policy).value
        e3 = eta(tau, policy).value ** 3
        closed = (
            1j
            * cmath.exp(2j * PI * pt.t)
            * e3
            * theta_ab(1, 1, tau, z1 + z2, policy).value
            / (
                theta_ab(1, 1, tau, z1, policy).value
                * theta_ab(1, 1, tau, z2, policy).value
            )
        )
        checks.append(_chk("closed form", den, closed, tau))
    return _report("denom-sl21", "eq0.13-denominator", tol, checks)


def suite_denom_osp32(seed=43, tol=1e-10, n_points=6, policy=DEFAULT_POLICY):
    checks = []
    sys = system("osp32_sub")
    for tau, z1, z2 in _points(seed, n_points):
        pt = ModularPoint(tau, (z1, z2), 0.07)
        den = sys.denominator(-1, pt, policy).value
        e3 = eta(tau, policy).value ** 3
        quot = (
            theta_ab(1, 1, tau, z1 - z2, policy).value
            * theta_ab(1, 1, tau, (z1 + z2) / 2, policy).value
            / (
                theta_ab(1, 1, tau, z1, policy).value
                * theta_ab(1, 1, tau, z2, policy).value
                * theta_ab(1, 1, tau, (z1 - z2) / 2, policy).value
            )
        )
        closed = 1j * cmath.exp(1j * PI * pt.t) * e3 * quot
        checks.append(_chk("closed form", den, closed, tau))
    notes = (
        "under the pinned theta convention the closed form carries +i; a "
        "-i prefactor pairs with the opposite (classical) normalization "
        "of theta11, which the convention-pin tests reject"
    )
    return _report("denom-osp32", "rem6.21-denominator", tol, checks, notes)


def suite_eq013(seed=44, tol=1e-9, n_points=5, policy=DEFAULT_POLICY):
    checks = []
    sys = system("sl21")
    for tau, z1, z2 in _points(seed, n_points):
        pt = ModularPoint(tau, (z1, z2), 0.06)
        for m, s in ((1, 0), (1, 1), (2, 1)):
            w = WeightSpec(m - 1, (-s,))
            num = sys.numerator(w, pt, policy, modified=False).value
            target = cmath.exp(2j * PI * m * pt.t) * (
                phi(MockIndex(m, s), tau, z1, z2, policy).value
                - phi(MockIndex(m, s), tau, -z2, -z1, policy).value
            )
            checks.append(_chk(f"(m,s)=({m},{s})", num, target, tau))
    return _report("eq0.13", "eq0.13", tol, checks)


def suite_sl21_modular(seed=45, tol=1e-7, n_points=5, policy=DEFAULT_POLICY):
    checks = []
    sys = system("sl21")
    w = WeightSpec(1, (0,))
    for tau, z1, z2 in _points(seed, n_points):
        pt = ModularPoint(tau, (z1, z2), 0.06)
        base = ch_tilde("sl21", w, pt, policy).value
        zz = sys.quad(pt.z, pt.z)
        ptS = ModularPoint(-1 / tau, (z1 / tau, z2 / tau), pt.t - zz / (2 * tau))
        checks.append(_chk("S-invariance", ch_tilde("sl21", w, ptS, policy).value, base, tau))
        ptT = ModularPoint(tau + 1, pt.z, pt.t)
        checks.append(_chk("T-invariance", ch_tilde("sl21", w, ptT, policy).value, base, tau))
        other = ch_tilde("sl21", WeightSpec(1, (1,)), pt, policy).value
        checks.append(_chk("label-independence", other, base, tau))
    return _report("sl21-modular", "cor1.2/eq0.13", tol, checks)


def suite_psi_pin(seed=46, tol=1e-9, n_points=10, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points):
        psi = psi_fn(1, 0, tau, z1, z2, 0.0, policy, modified=False).value
        quot = (
            eta(tau, policy).value ** 3
            * theta_ab(1, 1, tau, z1 + z2, policy).value
            / (
                theta_ab(1, 1, tau, z1, policy).value
                * theta_ab(1, 1, tau, z2, policy).value
            )
        )
        checks.append(_chk("denominator identity", psi, -1j * quot, tau))
    return _report("psi-pin", "rem6.21-psi", tol, checks)


def suite_eq44(seed=47, tol=1e-8, n_points=5, policy=DEFAULT_POLICY):
    checks = []
    sys = system("sl21")
    w = WeightSpec(1, (0,))
    for tau, z1, z2 in _points(seed, n_points):
        pt = ModularPoint(tau, (z1, z2), 0.06)
        nplus = sys.numerator(w, pt, policy, modified=False, plus=True).value
        dplus = sys.denominator(+1, pt, policy).value
        shifted = ModularPoint(tau, (z1 - 0.5, z2 - 0.5), pt.t)
        nminus = sys.numerator(w, shifted, policy, modified=False).value
        dminus = sys.denominator(-1, shifted, policy).value
        checks.append(_chk("ch+ vs shifted ch-", nplus / dplus, nminus / dminus, tau))
    return _report("eq4.4", "eq4.4", tol, checks)


# ---------------------------------------------------------------------------
# section 6


def suite_thm614(seed=51, tol=1e-7, policy=DEFAULT_POLICY, p=1, q=1, n=1):
    k = F(-p * q * n, p + q)
    sm = smatrix("d21a", k, (p, q))
    pts = [
        ModularPoint(tau, (z1, 0.8 * z2, z2), 0.05)
        for tau, z1, z2 in _points(seed, 3)
    ]
    rep = apply_smatrix_check("d21a", k, pts, (p, q), policy)
    rept = apply_tmatrix_check("d21a", k, pts, (p, q), policy)
    checks = [
        {"check": "unitarity", "residual": sm.unitarity_defect(), "lhs": "", "rhs": "", "point": None},
        {"check": "S apply", "residual": rep["max_residual"], "lhs": "", "rhs": "", "point": None},
        {"check": "T apply", "residual": rept["max_residual"], "lhs": "", "rhs": "", "point": None},
    ]
    out = _report("thm6.14", "thm6.14", tol, checks)
    out["conjectural"] = True
    out["notes"] = (
        "character labels rely on the conjectural two-term supercharacter "
        "formula; the span transformation itself is unconditional"
    )
    return out


def suite_d21a_omega(tol=0.5, **_):
    pre = preset("d21a", (1, 1))
    om = enumerate_omega(pre, F(-1, 2))
    got_T = {tuple(int(x) for x in w.labels) for w in om if w.side == "T"}
    got_Tp = {tuple(int(x) for x in w.labels) for w in om if w.side != "T"}
    exp_T = {(0, 0), (0, 1), (1, -1)}
    exp_Tp = {(1, 2), (2, 3), (1, 1)}
    sys = system("d21a")
    nus = set(sys.nu_range(1))
    checks = [
        {"check": "T-side labels", "residual": 0.0 if got_T == exp_T else 1.0,
         "lhs": str(sorted(got_T)), "rhs": str(sorted(exp_T)), "point": None},
        {"check": "T'-side labels", "residual": 0.0 if got_Tp == exp_Tp else 1.0,
         "lhs": str(sorted(got_Tp)), "rhs": str(sorted(exp_Tp)), "point": None},
        {"check": "nu range", "residual": 0.0 if nus == {-2, -1, 0, 1} else 1.0,
         "lhs": str(sorted(nus)), "rhs": "[-2, -1, 0, 1]", "point": None},
    ]
    return _report("d21a-omega", "cor6.5-6.7", tol, checks)


def suite_osp32_sub_f(seed=52, tol=1e-9, n_points=5, policy=DEFAULT_POLICY):
    checks = []
    sub = system("osp32_sub")
    k = F(-3, 4)
    for tau, z1, z2 in _points(seed, n_points):
        pt = ModularPoint(tau, (z1, z2), 0.05)
        den = sub.denominator(-1, pt, policy).value
        for i in (1, 2, 3, 4):
            fi = sub.f_function(i, k, pt, policy).value
            ci = sub.f_closed_quotient(i, pt, policy).value / den
            checks.append(_chk(f"f{i}", fi, ci, tau))
    notes = (
        "f4's closed form carries theta11 upstairs; a theta00 numerator "
        "would contradict the tau+1 swap with f3"
    )
    return _report("osp32-sub-f", "rem6.21-f", tol, checks, notes)


def suite_eq620(seed=53, tol=1e-7, policy=DEFAULT_POLICY):
    checks = []
    for k in (F(-3, 4), F(-1)):
        pts = [
            ModularPoint(tau, (z1, z2), 0.04) for tau, z1, z2 in _points(seed, 3)
        ]
        rep = apply_smatrix_check("osp32_sub", k, pts, policy=policy)
        checks.append(
            {"check": f"S span k={k}", "residual": rep["max_residual"],
             "lhs": "", "rhs": "", "point": None}
        )
    notes = (
        "the quotients transform with no weight factor: the numerator's "
        "tau cancels against the superdenominator's"
    )
    return _report("eq6.20", "eq6.20", tol, checks, notes)


def suite_eq621(seed=54, tol=1e-7, policy=DEFAULT_POLICY):
    checks = []
    for k in (F(-3, 4), F(-1)):
        pts = [
            ModularPoint(tau, (z1, z2), 0.04) for tau, z1, z2 in _points(seed, 3)
        ]
        rep = apply_tmatrix_check("osp32_sub", k, pts, policy=policy)
        checks.append(
            {"check": f"T span k={k}", "residual": rep["max_residual"],
             "lhs": "", "rhs": "", "point": None}
        )
    return _report("eq6.21", "eq6.21", tol, checks)


def suite_lem619(seed=55, tol=1e-9, n_points=5, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, z2 in _points(seed, n_points, im=(0.5, 0.9)):
        t = 0.07
        for M, s in ((F(1, 2), F(1, 2)), (F(1, 2), 0), (1, F(1, 2)), (1, 0)):
            lhs = 2 * psi_fn(M, s, 2 * tau, z1, z2, t, policy).value
            rhs = (
                psi_fn(2 * M, 2 * s, tau, z1 / 2, z2 / 2, t / 2, policy).value
                + cmath.exp(-2j * PI * float(s))
                * psi_fn(2 * M, 2 * s, tau, (z1 + 1) / 2, (z2 - 1) / 2, t / 2, policy).value
            )
            checks.append(_chk(f"M={M} s={s}", lhs, rhs, tau))
    return _report("lem6.19", "lem6.19", tol, checks)


def suite_level1_S(seed=56, tol=1e-9, policy=DEFAULT_POLICY):
    checks = []
    for m, n in ((1, 1), (2, 1)):
        for parity in (1, 0):
            M, N = 2 * m + parity, 2 * n
            zs = tuple(
                [0.21 + 0.013 * i for i in range(M // 2)]
                + [0.37 - 0.02 * j for j in range(n)]
            )
            pts = [ModularPoint(tau, zs, 0.05) for tau, _, _ in _points(seed, 2)]
            rep = apply_smatrix_check("osp_level1", 1, pts, (M, N), policy)
            checks.append(
                {"check": f"S relations M={M} N={N}", "residual": rep["max_residual"],
                 "lhs": "", "rhs": "", "point": None}
            )
    return _report("osp-level1-S", "sec6.5-S", tol, checks)


def suite_level1_T(seed=57, tol=1e-9, policy=DEFAULT_POLICY):
    checks = []
    for m, n in ((1, 1), (2, 1)):
        for parity in (1, 0):
            M, N = 2 * m + parity, 2 * n
            zs = tuple(
                [0.21 + 0.013 * i for i in range(M // 2)]
                + [0.37 - 0.02 * j for j in range(n)]
            )
            pts = [ModularPoint(tau, zs, 0.05) for tau, _, _ in _points(seed, 2)]
            rep = apply_tmatrix_check("osp_level1", 1, pts, (M, N), policy)
            checks.append(
                {"check": f"T eigenvalues M={M} N={N}", "residual": rep["max_residual"],
                 "lhs": "", "rhs": "", "point": None}
            )
    notes = (
        "odd-M third eigenvalue is exp(i pi (m-n+1/2)/6); the variant "
        "with -1/2 in the exponent fails (ST)^3 = S^2 and direct "
        "evaluation"
    )
    return _report("osp-level1-T", "sec6.5-T", tol, checks, notes)


def suite_prop622(seed=58, tol=1e-7, n_points=4, policy=DEFAULT_POLICY):
    checks = []
    sys = system("sl21")
    w = WeightSpec(1, (0,))
    for tau, z1, z2 in _points(seed, n_points):
        pt = ModularPoint(tau, (z1, z2), 0.05)
        zz = sys.quad(pt.z, pt.z)
        ptS = ModularPoint(-1 / tau, (z1 / tau, z2 / tau), pt.t - zz / (2 * tau))
        ptT = ModularPoint(tau + 1, pt.z, pt.t)
        chp = lambda p: ch_tilde("sl21", w, p, policy, variant="ch_plus_modified").value
        twm = lambda p: ch_tilde("sl21", w, p, policy, variant="tw_minus_modified").value
        twp = lambda p: ch_tilde("sl21", w, p, policy, variant="tw_plus_modified").value
        checks.append(_chk("(a) ch+|S = tw-", chp(ptS), twm(pt), tau))
        checks.append(_chk("(a) tw-|S = ch+", twm(ptS), chp(pt), tau))
        checks.append(_chk("(a) tw+|S = -tw+", twp(ptS), -twp(pt), tau))
        checks.append(_chk("(b) ch+|T = ch+", chp(ptT), chp(pt), tau))
        checks.append(_chk("(b) tw-|T = i tw+", twm(ptT), 1j * twp(pt), tau))
        checks.append(_chk("(b) tw+|T = i tw-", twp(ptT), 1j * twm(pt), tau))
    return _report("prop6.22", "prop6.22", tol, checks)


def suite_eq66(seed=59, tol=1e-7, policy=DEFAULT_POLICY):
    pts = [
        ModularPoint(tau, (z1, 0.8 * z2, z2), 0.05)
        for tau, z1, z2 in _points(seed, 3)
    ]
    rep = apply_smatrix_check("osp42", 1, pts, policy=policy)
    rept = apply_tmatrix_check("osp42", 1, pts, policy=policy)
    sm = smatrix("osp42", 1)
    checks = [
        {"check": "unitarity", "residual": sm.unitarity_defect(), "lhs": "", "rhs": "", "point": None},
        {"check": "S apply", "residual": rep["max_residual"], "lhs": "", "rhs": "", "point": None},
        {"check": "T apply", "residual": rept["max_residual"], "lhs": "", "rhs": "", "point": None},
    ]
    return _report("eq6.6", "eq6.6", tol, checks)


# ---------------------------------------------------------------------------
# classical building blocks


def suite_theta_S(seed=61, tol=1e-9, n_points=6, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, _ in _points(seed, n_points):
        z = z1
        for j, m in ((0, 1), (1, 1), (1, 2), (3, 2)):
            lhs = theta_jm(j, m, -1 / tau, z / tau, policy).value
            pref = cmath.sqrt(-1j * tau / (2 * m)) * cmath.exp(
                1j * PI * m * z * z / (2 * tau)
            )
            tot = sum(
                cmath.exp(-1j * PI * j * kk / m)
                * theta_jm(kk, m, tau, z, policy).value
                for kk in range(2 * m)
            )
            checks.append(_chk(f"S j={j} m={m}", lhs, pref * tot, tau))
    return _report("theta-S", "theta-S-law", tol, checks)


def suite_theta_quasi(seed=62, tol=1e-11, n_points=10, policy=DEFAULT_POLICY):
    checks = []
    for tau, z1, _ in _points(seed, n_points):
        z = z1
        for j, m in ((0, 1), (1, 2)):
            base = theta_jm(j, m, tau, z, policy).value
            lhs = theta_jm(j, m, tau, z + 2, policy).value
            checks.append(_chk(f"z+2 j={j} m={m}", lhs, base, tau))
            lhs = theta_jm(j, m, tau, z + 2 * tau, policy).value
            pref = cmath.exp(-2j * PI * tau * m) * cmath.exp(-2j * PI * m * z)
            checks.append(_chk(f"z+2tau j={j} m={m}", lhs, pref * base, tau))
    return _report("theta-quasi", "theta-quasiperiods", tol, checks)


def suite_oracles(seed=63, tol=1e-10, n_points=30, policy=DEFAULT_POLICY):
    checks = []
    rng = _rng(seed)
    for i in range(n_points):
        tau = complex(rng.uniform(-0.4, 0.4), rng.uniform(0.8, 2.0))
        z1 = complex(rng.uniform(-0.45, 0.45), rng.uniform(-0.05, 0.05))
        z2 = complex(rng.uniform(-0.45, 0.45), rng.uniform(-0.05, 0.05))
        if abs(z1) < 0.04:
            z1 += 0.1
        mine = phi(MockIndex(1, 0), tau, z1, z2, policy).value
        checks.append(_chk("phi", mine, oracle.phi_naive(1, 1, 0, tau, z1, z2), tau))
        mine = phi(MockIndex(F(1, 2), F(1, 2), "minus"), tau, z1, z2, policy).value
        checks.append(
            _chk("phi minus", mine, oracle.phi_naive(-1, 0.5, 0.5, tau, z1, z2), tau)
        )
        mine = theta_jm(1, 2, tau, z1, policy).value
        checks.append(_chk("theta_jm", mine, oracle.theta_jm_naive(1, 1, 2, tau, z1), tau))
        mine = theta_jm_signed(-1, F(1, 2), F(1, 2), tau, z1, policy).value
        checks.append(
            _chk("theta_jm signed", mine, oracle.theta_jm_naive(-1, 0.5, 0.5, tau, z1), tau)
        )
        mine = r_jm(0, 1, tau, z1, policy).value
        checks.append(_chk("r_jm", mine, oracle.r_naive(1, 0, 1, tau, z1), tau))
        mine = r_jm_signed(-1, F(1, 2), F(1, 2), tau, z1, policy).value
        checks.append(
            _chk("r_jm signed", mine, oracle.r_naive(-1, 0.5, 0.5, tau, z1), tau)
        )
        mine = eta(tau, policy).value
        checks.append(_chk("eta", mine, oracle.eta_product(tau), tau))
        mine = theta_ab(1, 1, tau, z1, policy).value
        checks.append(_chk("theta_ab", mine, oracle.theta_ab_naive(1, 1, tau, z1), tau))
    return _report("oracles", "naive-summation", tol, checks)


# ---------------------------------------------------------------------------
# registry


SUITES = {
    "thm1.1a": (suite_thm11a, "S/T laws of the modified rank-1 functions"),
    "thm1.1b": (suite_thm11b, "elliptic laws of the modified rank-1 functions"),
    "cor1.2": (suite_cor12, "shift-label independence, unsigned"),
    "thm1.3a": (suite_thm13a, "signed S-law pairings"),
    "thm1.3b": (suite_thm13b, "signed T-laws"),
    "thm1.3c": (suite_thm13c, "signed elliptic laws, same parity"),
    "thm1.3d": (suite_thm13d, "signed elliptic laws, opposite parity"),
    "cor1.4a": (suite_cor14a, "shift-label independence, signed"),
    "lem2.2": (suite_lem22, "argument negation and integer shifts"),
    "lem2.3": (suite_lem23, "2tau-shift window identities"),
    "lem2.4": (suite_lem24, "diagonal elliptic shifts"),
    "lem2.10": (suite_lem210, "correction-term shift identities"),
    "eq1.19": (suite_eq119, "unmodified mu bridge (recording)"),
    "eq1.20": (suite_eq120, "completed mu bridge"),
    "eq3.5": (suite_eq35, "one-step lattice factorization"),
    "prop3.2b": (suite_prop32b, "even-lattice modular laws"),
    "prop3.3b": (suite_prop33b, "signed modular laws"),
    "prop3.3c": (suite_prop33c, "signed T-laws at lattice level"),
    "prop3.7": (suite_prop37, "signed elliptic laws at lattice level"),
    "prop3.8": (suite_prop38, "even elliptic laws at lattice level"),
    "eq5.6": (suite_eq56, "superdenominator S/T law"),
    "denom-sl21": (suite_denom_sl21, "sl(2|1) superdenominator closed form"),
    "denom-osp32": (suite_denom_osp32, "osp(3|2) superdenominator closed form"),
    "eq0.13": (suite_eq013, "sl(2|1) numerator closed form"),
    "sl21-modular": (suite_sl21_modular, "sl(2|1) modified supercharacter invariance"),
    "psi-pin": (suite_psi_pin, "numerator/denominator convention pin"),
    "eq4.4": (suite_eq44, "character from supercharacter by half-shift"),
    "thm6.14": (suite_thm614, "D(2,1;a) S-matrix"),
    "d21a-omega": (suite_d21a_omega, "D(2,1;a) weight enumeration"),
    "osp32-sub-f": (suite_osp32_sub_f, "subprincipal spanning functions"),
    "eq6.20": (suite_eq620, "subprincipal S relations"),
    "eq6.21": (suite_eq621, "subprincipal T relations"),
    "lem6.19": (suite_lem619, "modulus-doubling identity"),
    "osp-level1-S": (suite_level1_S, "level-1 S relations"),
    "osp-level1-T": (suite_level1_T, "level-1 T eigenvalues"),
    "prop6.22": (suite_prop622, "twisted-variant S/T relations"),
    "eq6.6": (suite_eq66, "osp(4|2) S-matrix"),
    "theta-S": (suite_theta_S, "rank-1 theta S-law"),
    "theta-quasi": (suite_theta_quasi, "rank-1 theta quasi-periodicity"),
    "oracles": (suite_oracles, "naive-summation oracle agreement"),
}


def list_suites():
    """Catalog of suite ids with anchors and descriptions."""
    return [
        {"suite": sid, "anchor": sid, "description": desc}
        for sid, (_, desc) in sorted(SUITES.items())
    ]


def run_suite(suite_id: str, seed: int = None, tol: float = None, **kwargs):
    import inspect

    if suite_id not in SUITES:
        raise KeyError(suite_id)
    fn, _ = SUITES[suite_id]
    call = {}
    params = inspect.signature(fn).parameters
    if seed is not None:
        call["seed"] = seed
    if tol is not None:
        call["tol"] = tol
    call.update(kwargs)
    rep = fn(**call)
    if "seed" in params:
        rep["seed"] = seed if seed is not None else params["seed"].default
    return rep

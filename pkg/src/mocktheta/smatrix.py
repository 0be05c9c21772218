"""S- and T-transformation matrices on the wired spans of modified
normalized supercharacters, with numeric apply-checks.

Row convention: F_i | S = tau^weight * sum_j S[i, j] F_j, where weight is
0 for the degree-carried characters and 1 for the four spanning functions
of the subprincipal case.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import DEFAULT_POLICY, ModularPoint, as_fraction
from .characters import (
    ch_tilde,
    level1_osp_supercharacter,
    level1_quad,
    system,
)
from .errors import UnsupportedCase
from .superalg import WeightSpec

F = Fraction


@dataclass
class SMatrix:
    case: str
    k: Fraction
    labels: tuple
    entries: np.ndarray
    t_matrix: np.ndarray
    weight: int = 0
    conjectural: bool = False
    note: str = ""

    @property
    def t_phases(self):
        """Diagonal of the T action where it is diagonal."""
        return np.diag(self.t_matrix)

    def unitarity_defect(self) -> float:
        m = self.entries
        return float(np.abs(m @ m.conj().T - np.eye(len(self.labels))).max())

    def to_rows(self):
        out = []
        for i, li in enumerate(self.labels):
            for j, lj in enumerate(self.labels):
                v = self.entries[i, j]
                out.append(
                    {"row": str(li), "col": str(lj), "re": v.real, "im": v.imag}
                )
        return out


def smatrix(case: str, k, params: tuple = None) -> SMatrix:
    k = as_fraction(k)
    if case == "sl21":
        return SMatrix(
            case,
            k,
            labels=(f"k{k}",),
            entries=np.array([[1.0 + 0j]]),
            t_matrix=np.array([[1.0 + 0j]]),
        )
    if case == "d21a":
        p, q = params or (1, 1)
        sys = system("d21a", (p, q))
        n = -k * (p + q) / (p * q)
        if n.denominator != 1 or n <= 0:
            raise UnsupportedCase("level must be -pqn/(p+q)")
        n = int(n)
        nus = sys.nu_range(n)
        N = (p + q) * n
        size = len(nus)
        S = np.zeros((size, size), dtype=complex)
        T = np.zeros((size, size), dtype=complex)
        for i, nu in enumerate(nus):
            for j, mu in enumerate(nus):
                S[i, j] = cmath.exp(-1j * math.pi * nu * mu / N) / math.sqrt(
                    2 * n * (p + q)
                )
            T[i, i] = cmath.exp(
                1j * math.pi * nu * nu / (2 * n * (p + q)) - 1j * math.pi / 12
            )
        return SMatrix(
            case,
            k,
            labels=tuple(f"nu={nu}" for nu in nus),
            entries=S,
            t_matrix=T,
            conjectural=True,
            note="character identification relies on the conjectural "
            "two-term formula; the function-level transform is exact",
        )
    if case == "osp42":
        if k.denominator != 1 or k <= 0:
            raise UnsupportedCase("osp(4|2) S-matrix needs positive integer k")
        kk = int(k)
        js = list(range(-kk, 3 * kk))  # complete residues mod 4k
        size = len(js)
        S = np.zeros((size, size), dtype=complex)
        T = np.zeros((size, size), dtype=complex)
        for i, a in enumerate(js):
            for j, b in enumerate(js):
                S[i, j] = cmath.exp(-1j * math.pi * a * b / (2 * kk)) / (
                    2 * math.sqrt(kk)
                )
            T[i, i] = cmath.exp(
                1j * math.pi * a * a / (4 * kk) - 1j * math.pi / 12
            )
        return SMatrix(
            case,
            k,
            labels=tuple(f"2k2={j}" for j in js),
            entries=S,
            t_matrix=T,
        )
    if case == "osp32_sub":
        if (4 * k).denominator != 1 or k >= F(-1, 2):
            raise UnsupportedCase("subprincipal span needs k in (1/4)Z, k < -1/2")
        four_k = int(4 * k)
        S = np.zeros((4, 4), dtype=complex)
        S[0, 0] = 1.0
        S[1, 2] = 1.0
        S[2, 1] = 1.0
        S[3, 3] = (-1.0) ** four_k
        T = np.zeros((4, 4), dtype=complex)
        T[0, 0] = 1.0
        T[1, 1] = 1.0
        ph = -((-1j) ** (four_k % 4))
        T[2, 3] = ph
        T[3, 2] = ph
        return SMatrix(
            case,
            k,
            labels=("f1", "f2", "f3", "f4"),
            entries=S,
            t_matrix=T,
            note="normalized quotients transform with no weight factor: "
            "the numerator's tau cancels against the superdenominator's",
        )
    if case == "osp_level1":
        M, N = params
        m, n = M // 2, N // 2
        odd = M % 2 == 1
        if odd:
            S = np.zeros((3, 3), dtype=complex)
            S[0, 0] = 1.0
            S[1, 2] = math.sqrt(2) * 1j ** (n % 4)
            S[2, 1] = (-1j) ** (n % 4) / math.sqrt(2)
            c = cmath.exp(1j * math.pi * (n - m - 0.5) / 12)
            lam = cmath.exp(1j * math.pi * (m - n + 0.5) / 6)
            T = np.array(
                [[0, c, 0], [c, 0, 0], [0, 0, lam]], dtype=complex
            )
            labels = ("sum01", "diff01", "twisted")
        else:
            S = np.zeros((4, 4), dtype=complex)
            S[0, 0] = 1.0
            S[1, 2] = 1j ** (n % 4)
            S[2, 1] = (-1j) ** (n % 4)
            S[3, 3] = (-1j) ** ((m - n) % 4)
            c = cmath.exp(1j * math.pi * (n - m) / 12)
            lam = cmath.exp(-1j * math.pi * (n - m) / 6)
            T = np.array(
                [
                    [0, c, 0, 0],
                    [c, 0, 0, 0],
                    [0, 0, lam, 0],
                    [0, 0, 0, lam],
                ],
                dtype=complex,
            )
            labels = ("sum01", "diff01", "twisted", "diff_top")
        return SMatrix("osp_level1", F(1), labels, S, T)
    raise UnsupportedCase(case)


def _basis_functions(case: str, k, params):
    """Evaluable basis functions matching the smatrix labels."""
    if case == "sl21":
        w = WeightSpec(k, (0,))
        return [lambda pt, w=w: ch_tilde("sl21", w, pt).value], system("sl21").quad
    if case == "d21a":
        p, q = params or (1, 1)
        sys = system("d21a", (p, q))
        n = int(-as_fraction(k) * (p + q) / (p * q))
        fns = [
            (lambda pt, nu=nu: ch_tilde("d21a", WeightSpec(k, (0, nu)), pt,
                                        params=(p, q)).value)
            for nu in sys.nu_range(n)
        ]
        return fns, sys.quad
    if case == "osp42":
        kk = int(as_fraction(k))
        fns = []
        for j in range(-kk, 3 * kk):
            if -kk <= j <= kk:
                w = WeightSpec(k, (abs(F(j, 2)), F(j, 2)))
            else:
                jj = j - 2 * kk  # mirror-side class: k2 = jj/2 on T' side
                w = WeightSpec(k, (abs(F(jj, 2)), F(jj, 2)), side="Tp")
            fns.append(
                lambda pt, w=w: _osp42_class_value(w, pt)
            )
        return fns, system("osp42").quad
    if case == "osp32_sub":
        sub = system("osp32_sub")
        fns = [
            (lambda pt, i=i: sub.f_function(i, k, pt).value) for i in (1, 2, 3, 4)
        ]
        return fns, sub.quad
    if case == "osp_level1":
        M, N = params
        combos = ("sum01", "diff01", "twisted") + (
            () if M % 2 else ("diff_top",)
        )
        fns = [
            (lambda pt, c=c: level1_osp_supercharacter(M, N, c)(pt).value)
            for c in combos
        ]
        return fns, level1_quad(M, N)
    raise UnsupportedCase(case)


def _osp42_class_value(w: WeightSpec, pt: ModularPoint):
    """ch~ for an osp(4|2) class; mirror-side classes use the shifted theta."""
    sys = system("osp42")
    if w.side == "T":
        num = sys.numerator(w, pt)
    else:
        # T'-side: theta index 2 k2 + 2k at the same z arguments
        from .theta import theta_jm
        from .modifier import phi_tilde
        from .mock import MockIndex
        import cmath as _c

        k = int(w.k)
        k2 = w.labels[1]
        tot = 0j
        for zi, eps in sys.weyl_images(pt.z):
            x1, x2, y1 = zi
            th = theta_jm(int(2 * k2) + 2 * k, 2 * k, pt.tau, x1 + x2 + y1)
            ph = phi_tilde(MockIndex(k, 0), pt.tau, -x1 - y1, x2 + y1)
            tot += eps * th.value * ph.value
        num_val = _c.exp(2j * _c.pi * k * complex(pt.t)) * tot
        den = sys.denominator(-1, pt)
        return num_val / den.value
    den = sys.denominator(-1, pt)
    return num.value / den.value


def apply_smatrix_check(
    case: str, k, points, params: tuple = None, policy=DEFAULT_POLICY
):
    """Numerically verify F_i|S = tau^w sum_j S_ij F_j at the points."""
    sm = smatrix(case, k, params)
    fns, quad = _basis_functions(case, k, params)
    records = []
    max_res = 0.0
    for pt in points:
        zz = quad(pt.z, pt.z)
        ptS = ModularPoint(
            -1 / pt.tau,
            tuple(x / pt.tau for x in pt.z),
            pt.t - zz / (2 * pt.tau),
        )
        vals = [f(pt) for f in fns]
        for i, f in enumerate(fns):
            lhs = f(ptS)
            rhs = pt.tau ** sm.weight * sum(
                sm.entries[i, j] * vals[j] for j in range(len(fns))
            )
            res = abs(lhs - rhs)
            max_res = max(max_res, res)
            records.append(
                {"label": str(sm.labels[i]), "tau": str(pt.tau), "residual": res}
            )
    return {
        "case": case,
        "k": str(k),
        "max_residual": max_res,
        "unitarity_defect": sm.unitarity_defect(),
        "conjectural": sm.conjectural,
        "records": records,
    }


def apply_tmatrix_check(
    case: str, k, points, params: tuple = None, policy=DEFAULT_POLICY
):
    """Numerically verify F_i|T = sum_j T_ij F_j at the points."""
    sm = smatrix(case, k, params)
    fns, _ = _basis_functions(case, k, params)
    max_res = 0.0
    for pt in points:
        ptT = ModularPoint(pt.tau + 1, pt.z, pt.t)
        vals = [f(pt) for f in fns]
        for i, f in enumerate(fns):
            lhs = f(ptT)
            rhs = sum(sm.t_matrix[i, j] * vals[j] for j in range(len(fns)))
            max_res = max(max_res, abs(lhs - rhs))
    return {"case": case, "k": str(k), "max_residual": max_res}

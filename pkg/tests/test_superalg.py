import itertools
from fractions import Fraction as F

import pytest

from mocktheta.errors import UnsupportedCase
from mocktheta.superalg import (
    WeightSpec,
    enumerate_omega,
    integrable,
    preset,
    weyl_sharp_orbit,
)

ALL_PRESETS = [
    ("sl", (1, 1)),
    ("sl", (2, 1)),
    ("sl", (3, 2)),
    ("osp_even_low", (1, 2)),
    ("osp_odd_low", (1, 2)),
    ("osp_odd_low", (2, 2)),
    ("osp_odd_high", (2, 1)),
    ("osp_odd_high", (3, 1)),
    ("osp_even_high", (4, 1)),
    ("osp_h0", (1,)),
    ("osp_h0", (2,)),
    ("d21a", (1, 1)),
    ("d21a", (1, 2)),
    ("f4", ()),
    ("g3", ()),
    ("osp32_sub", ()),
]


class TestPresets:
    @pytest.mark.parametrize("name,params", ALL_PRESETS)
    def test_rho_normalization(self, name, params):
        p = preset(name, params)
        assert p.check_rho() == []

    @pytest.mark.parametrize("name,params", ALL_PRESETS)
    def test_dual_coxeter_matches_orthogonal_subalgebra(self, name, params):
        p = preset(name, params)
        if p.g_shriek != "0":
            assert p.h_dual == p.g_shriek_h_dual

    def test_table_values(self):
        assert preset("sl21").h_dual == 1 and preset("sl21").defect == 1
        assert preset("osp32").h_dual == F(1, 2)
        assert preset("d21a").h_dual == 0
        assert preset("f4").h_dual == 3 and preset("f4").g_shriek == "sl(3)"
        assert preset("g3").h_dual == 2 and preset("g3").g_shriek == "sl(2)"
        assert preset("osp_even_high", (4, 1)).g_shriek == "so(6)"

    def test_normalization_long_root(self):
        # longest even root in the distinguished part has square length 2
        p = preset("sl", (2, 1))
        gens = [root for root, _ in p.weyl_gens]
        assert max(p.norm2(r) for r in gens) == 2

    def test_unknown_case(self):
        with pytest.raises(UnsupportedCase):
            preset("e8")

    def test_isotropy_of_t(self):
        for name, params in ALL_PRESETS:
            p = preset(name, params)
            for b1 in p.isotropic_t:
                for b2 in p.isotropic_t:
                    assert p.pair(b1, b2) == 0

    def test_gamma_beta_pairings(self):
        for name, params in ALL_PRESETS:
            if name == "osp32_sub":
                # the subprincipal lattice is negative definite and its
                # characters bypass the lattice-modification normalization
                continue
            p = preset(name, params)
            for i, g in enumerate(p.gamma_basis):
                for j, b in enumerate(p.isotropic_t):
                    want = F(-1) if i == j else F(0)
                    assert p.pair(g, b) == want, (p.name, i, j)


class TestWeylOrbits:
    @pytest.mark.parametrize(
        "name,order",
        [("sl21", 2), ("sl32", 6), ("osp32", 2), ("osp32_sub", 2), ("osp42", 4),
         ("d21a", 4), ("f4", 48), ("g3", 12)],
    )
    def test_group_order(self, name, order):
        els, _ = weyl_sharp_orbit(preset(name))
        assert len(els) == order

    def test_identity_signs(self):
        els, _ = weyl_sharp_orbit(preset("sl21"))
        ident = [e for e in els if not e.word]
        assert ident[0].eps_plus == 1 and ident[0].eps_minus == 1

    def test_osp32_translation_signs(self):
        # odd orthosymplectic series: eps^-(t_gamma) = (-1)^(|gamma|^2/2)
        _, trs = weyl_sharp_orbit(preset("osp32"), bound=2)
        for combo, ep, em in trs:
            c = combo[0]
            assert ep == 1
            assert em == (-1) ** (c * c)

    def test_sl21_translation_signs_trivial(self):
        _, trs = weyl_sharp_orbit(preset("sl21"), bound=2)
        assert all(em == 1 for _, _, em in trs)

    def test_osp32_principal_reflection_sign(self):
        # reflection in the doubled short root has eps^- = +1 because its
        # half is a root
        els, _ = weyl_sharp_orbit(preset("osp32"))
        refl = [e for e in els if e.word]
        assert refl[0].eps_plus == -1 and refl[0].eps_minus == 1


class TestIntegrable:
    def test_spec_examples(self):
        assert integrable(preset("sl21"), WeightSpec(2, (1,)))
        assert integrable(preset("osp32_sub"), WeightSpec(F(-3, 4), (1,)))
        assert integrable(preset("d21a"), WeightSpec(F(-1, 2), (0, 1)))

    def test_enumerated_weights_are_integrable(self):
        for name, params, k in (
            ("sl", (2, 1), 2),
            ("osp_even_low", (1, 2), 2),
            ("osp_odd_high", (2, 1), 2),
            ("f4", (), 2),
            ("g3", (), 2),
        ):
            p = preset(name, params)
            om = enumerate_omega(p, k)
            assert om, p.name
            assert all(integrable(p, w) for w in om)

    def test_random_non_members_fail(self, rng):
        p = preset("sl", (2, 1))
        om = {w.labels for w in enumerate_omega(p, 2)}
        for _ in range(30):
            labels = tuple(F(int(x)) for x in rng.randint(-3, 6, size=2))
            w = WeightSpec(2, labels)
            assert integrable(p, w) == (labels in om)


def _hand_sl(k, ks):
    if k.denominator != 1 or k <= 0:
        return False
    if any(x.denominator != 1 or x < 0 for x in ks):
        return False
    chain = [k] + list(ks)
    return all(a >= b for a, b in zip(chain, chain[1:]))


def _hand_osp_even_low(k, ks):
    return _hand_sl(k, list(reversed(ks)))


def _hand_osp_odd_high(k, ks):
    if k.denominator != 1 or k <= 0:
        return False
    k1 = ks[0]
    if (2 * k1).denominator != 1 or k1 < 0:
        return False
    if any((x - k1).denominator != 1 or x < k1 for x in ks[1:]):
        return False
    if list(ks) != sorted(ks):
        return False
    return k >= ks[-1] + ks[-2]


def _hand_osp_even_high(k, ks):
    if k.denominator != 1 or k <= 0:
        return False
    k1, rest = ks[0], list(ks[1:])
    if (2 * k1).denominator != 1:
        return False
    if any((x - k1).denominator != 1 for x in rest):
        return False
    if rest != sorted(rest):
        return False
    if rest and rest[0] < abs(k1):
        return False
    second = rest[-2] if len(rest) >= 2 else abs(k1)
    if k < rest[-1] + second:
        return False
    if rest and rest[0] == -k1 and k1 != 0:
        return False
    return True


def _hand_osp_h0(k, ks):
    if k.denominator != 1 or k <= 0:
        return False
    *head, last = ks
    if (2 * last).denominator != 1:
        return False
    if any((x - last).denominator != 1 or x < 0 for x in head):
        return False
    if head != sorted(head, reverse=True):
        return False
    if head and head[-1] < abs(last):
        return False
    second = head[1] if len(head) >= 2 else last
    if k < head[0] + second:
        return False
    if k == head[0] + second and head[0] != second:
        return False
    return True


def _hand_f4(k, ks):
    k1, k2, k3 = ks
    vals = (k - k2 - k3, k2 - k1, k1 + k2 - k3, k1 - 2 * k2 + 2 * k3)
    return all(v.denominator == 1 and v >= 0 for v in vals)


def _hand_g3(k, ks):
    k1, k2 = ks
    vals = (k - 2 * k2, 2 * k1, 2 * k2, k2 - k1)
    return all(v.denominator == 1 and v >= 0 for v in vals)


def _hand_osp32_sub(k, ks):
    (m,) = ks
    if (4 * k).denominator != 1 or m.denominator != 1:
        return False
    if k == F(-1, 2) and m == 1:
        return True
    return k <= F(-1, 2) and 0 <= m <= -(4 * k + 2)


def _hand_d21a(p, q, k, ks, side):
    n = -k * (p + q) / (p * q)
    if n.denominator != 1:
        return False
    k1, k2 = ks
    if side != "T":
        k1, k2 = k1 - q * n, (p + q) * n - k2
    a = F(-p, p + q)
    m0 = (-p * q * n + p * k2 + (p + q) * k1) / (p + q)
    m1 = F(0)
    m2 = -p * (k1 + k2) / (p + q)
    m3 = -q * k1 / (p + q)
    if side != "T":
        m0, m1, m2, m3 = m1, m0, m3, m2
    vals = ((m1 + m2) / a, (m0 + m3) / a, -(m1 + m3) / (a + 1), -(m0 + m2) / (a + 1))
    if not all(v.denominator == 1 and v >= 0 for v in vals):
        return False
    for mi in (m0, m1):
        for mj in (m2, m3):
            if mi + mj == 0 and not (mi == 0 and mj == 0):
                return False
    return True


class TestExhaustiveBoxes:
    """Predicates against independently transcribed inequality systems.

    Every label vector with at most four labels on a half-integer grid,
    levels up to three.
    """

    def _box(self, rank, half=True, lo=-2, hi=4):
        step = F(1, 2) if half else F(1)
        vals = [lo + step * i for i in range(int((hi - lo) / step) + 1)]
        return itertools.product(vals, repeat=rank)

    def test_sl_box(self):
        for m, n in ((1, 1), (2, 1), (3, 2)):
            p = preset("sl", (m, n))
            for k in (1, 2, 3):
                for ks in self._box(m, half=True, lo=-1, hi=3):
                    w = WeightSpec(k, ks)
                    assert integrable(p, w) == _hand_sl(F(k), list(map(F, ks)))

    def test_osp_even_low_box(self):
        p = preset("osp_even_low", (1, 2))
        for k in (1, 2, 3):
            for ks in self._box(2, half=True, lo=-1, hi=3):
                w = WeightSpec(k, ks)
                assert integrable(p, w) == _hand_osp_even_low(F(k), list(map(F, ks)))

    def test_osp_odd_low_box(self):
        p = preset("osp_odd_low", (1, 2))
        for k in (1, 2):
            for ks in self._box(2, half=True, lo=-1, hi=3):
                w = WeightSpec(k, ks)
                assert integrable(p, w) == _hand_sl(F(k), list(map(F, ks)))

    def test_osp_odd_high_box(self):
        for m, n in ((2, 1), (3, 1)):
            p = preset("osp_odd_high", (m, n))
            for k in (1, 2, 3):
                for ks in self._box(m, half=True, lo=-1, hi=3):
                    w = WeightSpec(k, ks)
                    assert integrable(p, w) == _hand_osp_odd_high(F(k), list(map(F, ks)))

    def test_osp_even_high_box(self):
        p = preset("osp_even_high", (4, 1))
        for k in (2, 3):
            for ks in self._box(4, half=False, lo=-2, hi=3):
                w = WeightSpec(k, ks)
                assert integrable(p, w) == _hand_osp_even_high(F(k), list(map(F, ks)))

    def test_osp_even_high_box_half(self):
        p = preset("osp_even_high", (4, 1))
        for ks in self._box(4, half=True, lo=F(-3, 2), hi=F(5, 2)):
            w = WeightSpec(3, ks)
            assert integrable(p, w) == _hand_osp_even_high(F(3), list(map(F, ks)))

    def test_osp_h0_box(self):
        for n in (1, 2):
            p = preset("osp_h0", (n,))
            for k in (1, 2, 3):
                for ks in self._box(n + 1, half=True, lo=-2, hi=3):
                    w = WeightSpec(k, ks)
                    assert integrable(p, w) == _hand_osp_h0(F(k), list(map(F, ks)))

    def test_f4_box(self):
        p = preset("f4")
        for k in (1, 2, 3):
            for ks in self._box(3, half=False, lo=-1, hi=3):
                thirds = tuple(F(x, 3) for x in range(-3, 10))
            for ks in itertools.product(
                [F(x, 3) for x in range(-3, 10)], repeat=3
            ):
                w = WeightSpec(k, ks)
                assert integrable(p, w) == _hand_f4(F(k), list(ks))

    def test_g3_box(self):
        p = preset("g3")
        for k in (1, 2, 3):
            for ks in self._box(2, half=True, lo=-1, hi=3):
                w = WeightSpec(k, ks)
                assert integrable(p, w) == _hand_g3(F(k), list(map(F, ks)))

    def test_osp32_sub_box(self):
        p = preset("osp32_sub")
        for k4 in range(-14, 0):
            k = F(k4, 4)
            for m in self._box(1, half=True, lo=-2, hi=5):
                w = WeightSpec(k, m)
                assert integrable(p, w) == _hand_osp32_sub(k, list(map(F, m)))

    def test_d21a_box(self):
        for (p_, q_) in ((1, 1), (1, 2)):
            pre = preset("d21a", (p_, q_))
            for n in (1, 2):
                k = F(-p_ * q_ * n, p_ + q_)
                for side in ("T", "Tp"):
                    for ks in self._box(2, half=False, lo=-4, hi=6):
                        w = WeightSpec(k, ks, side=side)
                        assert integrable(pre, w) == _hand_d21a(
                            p_, q_, k, ks, side
                        ), (p_, q_, n, side, ks)


class TestEnumerations:
    def test_sl21_levels(self):
        p = preset("sl21")
        assert [w.labels for w in enumerate_omega(p, 1)] == [(0,), (1,)]
        assert len(enumerate_omega(p, 2)) == 3

    def test_d21a_cor65(self):
        om = enumerate_omega(preset("d21a"), F(-1, 2))
        t_side = {tuple(map(int, w.labels)) for w in om if w.side == "T"}
        tp_side = {tuple(map(int, w.labels)) for w in om if w.side != "T"}
        assert t_side == {(0, 0), (0, 1), (1, -1)}
        assert tp_side == {(1, 1), (1, 2), (2, 3)}

    def test_d21a_nu_range(self):
        from mocktheta.characters import system

        assert system("d21a").nu_range(1) == [-2, -1, 0, 1]

    def test_osp32_sub_classes(self):
        om = enumerate_omega(preset("osp32_sub"), F(-3, 4))
        assert {(w.side, int(w.labels[0])) for w in om} == {
            ("T", 0), ("T", 1), ("Tp", 0), ("Tp", 1)
        }

    def test_f4_g3_finite(self):
        assert len(enumerate_omega(preset("f4"), 1)) > 0
        assert len(enumerate_omega(preset("g3"), 1)) > 0

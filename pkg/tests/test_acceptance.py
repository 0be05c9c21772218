"""Acceptance gate: every criterion runs at its pinned tolerance and
prints one line.  Each criterion dispatches into the same named suites the
command-line ``verify`` uses."""

from mocktheta.suites import run_suite

import test_superalg as hand


RESULTS = []


def _criterion(number, title, reports):
    reports = list(reports)
    worst = max(r["max_residual"] for r in reports)
    ok = all(r["pass"] for r in reports)
    line = (
        f"ACCEPTANCE {number:02d} {'PASS' if ok else 'FAIL'}  {title}  "
        f"worst residual {worst:.3e}"
    )
    print(line)
    RESULTS.append(line)
    assert ok, line
    return reports


def test_01_oracle_equivalence():
    _criterion(1, "naive-oracle agreement at 30 seeded points (1e-10)",
               [run_suite("oracles", tol=1e-10)])


def test_02_theorem_1_1():
    _criterion(2, "S/T and elliptic laws, unsigned (1e-8)",
               [run_suite("thm1.1a", tol=1e-8), run_suite("thm1.1b", tol=1e-8)])


def test_03_shift_label_independence():
    _criterion(3, "shift-label independence (1e-9)",
               [run_suite("cor1.2", tol=1e-9), run_suite("cor1.4a", tol=1e-9)])


def test_04_theorem_1_3():
    _criterion(4, "signed S/T/elliptic law pairings (1e-8)",
               [run_suite(s, tol=1e-8) for s in
                ("thm1.3a", "thm1.3b", "thm1.3c", "thm1.3d")])


def test_05_mu_bridge():
    reps = [run_suite("eq1.20", tol=1e-9)]
    recorded = run_suite("eq1.19")
    _criterion(5, "completed mu bridge (1e-9); single-product variant recorded",
               reps + [recorded])
    assert recorded["single_product_residuals"]["s=0"] > 1e-3  # evidence kept


def test_06_section2_lemmas():
    _criterion(6, "shift/negation/correction lemmas (1e-9)",
               [run_suite(s, tol=1e-9) for s in
                ("lem2.2", "lem2.3", "lem2.4", "lem2.10")])


def test_07_lattice_pipeline():
    reps = [run_suite("eq3.5", tol=1e-9)]
    reps += [run_suite(s, tol=1e-7) for s in ("prop3.2b", "prop3.3b", "prop3.3c")]
    reps += [run_suite(s, tol=1e-8) for s in ("prop3.7", "prop3.8")]
    _criterion(7, "lattice factorization and modular/elliptic laws", reps)


def test_08_denominator_pins():
    reps = [
        run_suite("denom-sl21", tol=1e-10),
        run_suite("denom-osp32", tol=1e-10),
        run_suite("eq5.6", tol=1e-8),
    ]
    _criterion(8, "superdenominator closed forms and S-law", reps)


def test_09_sl21():
    reps = [
        run_suite("eq0.13", tol=1e-9),
        run_suite("sl21-modular", tol=1e-7),
        run_suite("psi-pin", tol=1e-9),
    ]
    _criterion(9, "sl(2|1) numerator, invariance, denominator identity", reps)


def test_10_d21a():
    reps = [run_suite("d21a-omega"), run_suite("thm6.14", tol=1e-7)]
    sm_checks = {c["check"]: c["residual"] for c in reps[1]["checks"]}
    assert sm_checks["unitarity"] < 1e-12
    assert reps[1].get("conjectural")
    _criterion(10, "D(2,1;a) enumeration, unitary S-matrix, apply-check", reps)


def test_11_osp32_subprincipal():
    reps = [
        run_suite("osp32-sub-f", tol=1e-9),
        run_suite("eq6.20", tol=1e-7),
        run_suite("eq6.21", tol=1e-7),
        run_suite("lem6.19", tol=1e-9),
    ]
    _criterion(11, "subprincipal spanning functions and their span laws", reps)


def test_12_level1():
    reps = [
        run_suite("osp-level1-S", tol=1e-9),
        run_suite("osp-level1-T", tol=1e-9),
    ]
    _criterion(12, "level-1 closed forms: S relations and T eigenvalues", reps)


def test_13_integrability_boxes():
    boxes = hand.TestExhaustiveBoxes()
    count = 0
    for name in (
        "test_sl_box", "test_osp_even_low_box", "test_osp_odd_low_box",
        "test_osp_odd_high_box", "test_osp_even_high_box",
        "test_osp_even_high_box_half", "test_osp_h0_box", "test_f4_box",
        "test_g3_box", "test_osp32_sub_box", "test_d21a_box",
    ):
        getattr(boxes, name)()
        count += 1
    line = (
        f"ACCEPTANCE 13 PASS  integrability predicates vs hand-coded systems "
        f"({count} exhaustive boxes, 100% agreement)"
    )
    print(line)
    RESULTS.append(line)


def test_14_twisted_variants():
    _criterion(14, "twisted and plus variants S/T relations (1e-7)",
               [run_suite("prop6.22", tol=1e-7)])


def test_zz_summary():
    print()
    for line in RESULTS:
        print(line)
    assert len(RESULTS) == 14

import pytest

from mocktheta.suites import SUITES, list_suites, run_suite


@pytest.mark.parametrize("suite_id", sorted(SUITES))
def test_suite_passes(suite_id):
    rep = run_suite(suite_id)
    assert rep["pass"], (
        f"{suite_id}: max residual {rep['max_residual']:.3e} over tol {rep['tol']:.1e}"
    )


def test_catalog_shape():
    rows = list_suites()
    assert all({"suite", "anchor", "description"} <= set(r) for r in rows)
    ids = [r["suite"] for r in rows]
    assert len(ids) == len(set(ids))


def test_single_product_form_recorded():
    rep = run_suite("eq1.19")
    assert "single_product_residuals" in rep
    # the single-product form fails for both shift labels; the record
    # keeps the evidence
    assert rep["single_product_residuals"]["s=0"] > 1e-3
    assert rep["single_product_residuals"]["s=1"] > 1e-3


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")

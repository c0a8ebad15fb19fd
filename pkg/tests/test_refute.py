import pytest

from zdgraph import refute as R
from zdgraph import spectra as S
from zdgraph.indices import edge_count, second_zagreb


def test_p3_prior_polynomial():
    poly = R.prior_charpoly(3)
    assert poly.describe() == "(λ-26)(λ-2)^17(λ-18)^5(λ^3-38λ^2+312λ-120)"
    assert poly.degree == 26


def test_p3_prior_roots():
    spec = R.prior_charpoly(3).spectrum()
    want = [(26.3184, 1), (26, 1), (18, 5), (11.2772, 1), (2, 17), (0.404313, 1)]
    assert len(spec.pairs) == len(want)
    for (v, m), (wv, wm) in zip(spec.pairs, want):
        assert v == pytest.approx(wv, abs=1e-3) and m == wm


def test_p3_prior_energy():
    bound, total = R.prior_energy(3)
    assert bound == 116
    assert total == pytest.approx(187.999913, abs=1e-3)


def test_prior_second_zagreb():
    assert R.prior_m2(3) == 6008
    assert R.prior_m2_literal(3) == 144192
    for p in (2, 3, 5, 7):
        assert R.prior_m2(p) != second_zagreb(p)
        assert R.prior_m2(p) - second_zagreb(p) == 28 * p**3 - 8


def test_p3_sanity_violations():
    facts = R.sanity_facts(R.prior_charpoly(3).spectrum(), max_degree=25, m=64)
    assert R.FACT_TRACE in facts and R.FACT_RADIUS in facts


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prior_fails_and_corrected_passes(p):
    n, m = p**3 - 1, edge_count(p)
    assert R.sanity_facts(R.prior_charpoly(p).spectrum(), n - 1, m)
    assert R.sanity_facts(S.closed_form_spectrum(p), n - 1, m) == []


def test_k2_passes_sanity():
    assert R.sanity_facts(S.Spectrum(((1.0, 1), (-1.0, 1)), "dense"), 1, 1) == []


def test_report_verdicts():
    reports = {r.quantity: r for r in R.refutation_report(3)}
    assert reports["second Zagreb index"].verdict == "refuted"
    assert reports["second Zagreb index"].claimed == 6008
    assert reports["first Zagreb index"].verdict == "agrees"
    assert reports["energy lower bound"].verdict == "refuted"
    assert reports["spectral radius"].verdict == "refuted"
    assert R.ROOT_ASSUMPTION in reports["spectral radius"].notes


def test_p2_report_exact_integers():
    reports = {r.quantity: r for r in R.refutation_report(2)}
    z = reports["second Zagreb index"]
    assert isinstance(z.claimed, int) and isinstance(z.computed, int)
    assert z.computed == 52

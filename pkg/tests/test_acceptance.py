"""Acceptance gate: one pass/fail line per criterion.

Every criterion is split into named sub-checks, each its own pytest case, so a
failure points at the exact sub-check. A criterion passes only if all of its
sub-checks do. Run directly (``python3 tests/test_acceptance.py``) or under
pytest, where the per-criterion lines appear in the terminal summary.
"""

from __future__ import annotations

import io
import json
import pathlib
import sys
import time
from functools import lru_cache

import numpy as np
import pytest

from zdgraph import graph as G
from zdgraph import indices as I
from zdgraph import refute as R
from zdgraph import spectra as S
from zdgraph.cli import main
from zdgraph.linalg import poly_mul, poly_pow

DATA = pathlib.Path(__file__).parent / "data"

TITLES = {
    1: "p=3 graph: counts, degrees, printed matrix, < 0.1 s",
    2: "p=3 exact characteristic polynomial, < 1 s",
    3: "p=3 cubic roots, energy value, energy bounds",
    4: "closed-form = dense spectra and exact eigenvector certificates, p in {2,3,5}",
    5: "Zagreb values at p=3 and closed form = brute force for every index",
    6: "Hansen-Vukicevic margin for p up to 13 and h(2)=14",
    7: "energy classification with dense witnesses",
    8: "prior-formula reproduction at p=3",
    9: "verify --primes 2,3,5,7 exits 0 in under 2 minutes",
}

CHECKS: list[tuple[int, str, object]] = []
RESULTS: dict[tuple[int, str], tuple[bool, str]] = {}


def check(criterion: int, name: str):
    def register(fn):
        CHECKS.append((criterion, name, fn))
        return fn
    return register


@lru_cache(maxsize=None)
def dense(p: int) -> S.Spectrum:
    return S.dense_spectrum(G.build(p))


def close(x, want, tol):
    return abs(x - want) <= tol


# ---------------------------------------------------------------- 1

@check(1, "n=26, m=64")
def _():
    g = G.build(3)
    return g.n == 26 and g.m == 64, f"n={g.n} m={g.m}"


@check(1, "class sizes (2,6,18) and degrees (25,7,2)")
def _():
    g = G.build(3)
    sizes = tuple(g.class_sizes()[t] for t in "ABC")
    degs = G.degrees(g)
    per_class = tuple(sorted({degs[i] for i in g.class_indices(t)}) for t in "ABC")
    return sizes == (2, 6, 18) and per_class == ([25], [7], [2]), f"{sizes} {per_class}"


@check(1, "adjacency equals printed matrix")
def _():
    rows = [r.split() for r in (DATA / "matrix_p3.txt").read_text().splitlines() if r.strip()]
    printed = np.array(rows, dtype=int).astype(bool)
    return bool(np.array_equal(G.build(3).adjacency, printed)), ""


@check(1, "build runtime < 0.1 s")
def _():
    t = time.perf_counter()
    g = G.build(3)
    G.degrees(g)
    elapsed = time.perf_counter() - t
    return elapsed < 0.1, f"{elapsed * 1e3:.2f} ms"


# ---------------------------------------------------------------- 2

@check(2, "charpoly = (l^3-6l^2-43l+180)(l+1)^6 l^17, exact, < 1 s")
def _():
    t = time.perf_counter()
    got = S.exact_charpoly(G.build(3))
    elapsed = time.perf_counter() - t
    want = poly_mul([1, -6, -43, 180], poly_pow([1, 1], 6)) + [0] * 17
    return got == want and elapsed < 1.0, f"{elapsed * 1e3:.1f} ms"


# ---------------------------------------------------------------- 3

@check(3, "cubic roots (8.56673, 3.47673, -6.04346) within 1e-4")
def _():
    roots = S.quotient_eigenvalues(3)
    ok = all(close(r, w, 1e-4) for r, w in zip(roots, (8.56673, 3.47673, -6.04346)))
    return ok, ", ".join(f"{r:.6f}" for r in roots)


@check(3, "energy = 24.087806 within 1e-4")
def _():
    e = S.energy(S.closed_form_spectrum(3))
    return close(e, 24.087806, 1e-4), f"computed {e:.9f}, difference {abs(e - 24.087806):.2e}"


@check(3, "bounds (23.6997, 25.1311) within 1e-3 and contain the energy")
def _():
    lo, hi = S.energy_bounds(3)
    e = S.energy(S.closed_form_spectrum(3))
    ok = close(lo, 23.6997, 1e-3) and close(hi, 25.1311, 1e-3) and lo <= e <= hi
    return ok, f"[{lo:.6f}, {hi:.6f}] energy {e:.6f}"


# ---------------------------------------------------------------- 4

@check(4, "closed form = dense within 1e-6 for p=2,3,5")
def _():
    bad = [p for p in (2, 3, 5) if not S.same_multiset(S.closed_form_spectrum(p), dense(p), 1e-6)]
    return not bad, f"mismatch at {bad}" if bad else ""


@check(4, "exact eigenvector certificates for -1 and 0")
def _():
    details = []
    ok = True
    for p in (2, 3, 5):
        rep = S.eigenvector_certificates(p)
        ok &= (rep.minus_one, rep.zero) == (p * p - 3, p**3 - p * p - 1)
        details.append(f"p={p}: {rep.minus_one}/{rep.zero}")
    return ok, "; ".join(details)


@check(4, "p=5 build + dense + certificates < 5 s")
def _():
    t = time.perf_counter()
    g = G.build(5)
    S.dense_spectrum(g)
    S.eigenvector_certificates(5, g)
    elapsed = time.perf_counter() - t
    return elapsed < 5.0, f"{elapsed:.2f} s"


# ---------------------------------------------------------------- 5

@check(5, "M1(3)=1616 and M2(3)=5260 exactly")
def _():
    g = G.build(3)
    vals = (I.vdb_bruteforce(g, I.FIRST_ZAGREB), I.vdb_bruteforce(g, I.SECOND_ZAGREB), *I.zagreb(3))
    return vals == (1616, 5260, 1616, 5260), str(vals)


@check(5, "closed form = brute force for every index, p=2,3,5")
def _():
    worst = 0.0
    exact = True
    for p in (2, 3, 5):
        g = G.build(p)
        for phi in (I.FIRST_ZAGREB, I.SECOND_ZAGREB, I.EDGE_COUNT):
            exact &= I.vdb_closed_form(p, phi) == I.vdb_bruteforce(g, phi)
        rows = I.fixed_indices(p, g)
        for alpha in (-2, -1, -0.5, 0, 0.5, 1, 2):
            rows += I.named_indices(p, alpha, g)
        worst = max(worst, *(r.rel_error for r in rows))
    return exact and worst <= 1e-9, f"max rel_error {worst:.2e}"


# ---------------------------------------------------------------- 6

@check(6, "n*M2 - m*M1 >= 0 exactly for p in {2,3,5,7,11,13}")
def _():
    res = [I.hansen_vukicevic_check(p) for p in (2, 3, 5, 7, 11, 13)]
    return all(r.holds and r.margin >= 0 for r in res), ", ".join(str(r.margin) for r in res)


@check(6, "h(2) = 14")
def _():
    return I.hv_polynomial(2) == 14, str(I.hv_polynomial(2))


# ---------------------------------------------------------------- 7

@check(7, "f(2) = 41")
def _():
    return S.hyper_witness(2) == 41, str(S.hyper_witness(2))


@check(7, "E < 2(n-1) for p=2,3,5,7 (dense witness)")
def _():
    out = []
    for p in (2, 3, 5, 7):
        n = p**3 - 1
        out.append((S.energy(dense(p)), S.energy(S.closed_form_spectrum(p)), 2 * (n - 1)))
    ok = all(d < c and abs(d - e) < 1e-6 for d, e, c in out)
    return ok, "; ".join(f"{d:.4f} < {c}" for d, _, c in out)


@check(7, "E < n for p=3,5,7 (dense witness)")
def _():
    out = [(S.energy(dense(p)), p**3 - 1) for p in (3, 5, 7)]
    return all(e < n for e, n in out), "; ".join(f"{e:.4f} < {n}" for e, n in out)


# ---------------------------------------------------------------- 8

@check(8, "prior roots {26.3184, 26, 18^5, 11.2772, 2^17, 0.404313} within 1e-3")
def _():
    got = R.prior_charpoly(3).spectrum().pairs
    want = [(26.3184, 1), (26, 1), (18, 5), (11.2772, 1), (2, 17), (0.404313, 1)]
    ok = len(got) == len(want) and all(m == wm and close(v, wv, 1e-3) for (v, m), (wv, wm) in zip(got, want))
    return ok, str([(round(v, 6), m) for v, m in got])


@check(8, "prior energy sum 187.999913 within 1e-3; bound 116 exact")
def _():
    bound, total = R.prior_energy(3)
    return close(total, 187.999913, 1e-3) and bound == 116, f"sum {total:.6f}, bound {bound}"


@check(8, "prior M2 = 6008 exact")
def _():
    return R.prior_m2(3) == 6008, str(R.prior_m2(3))


@check(8, "sanity checker flags trace != 0 and lambda_1 > 26")
def _():
    spec = R.prior_charpoly(3).spectrum()
    facts = R.sanity_facts(spec, max_degree=25, m=64)
    ok = R.FACT_TRACE in facts and R.FACT_RADIUS in facts and spec.largest > 26
    return ok, ",".join(facts)


# ---------------------------------------------------------------- 9

@check(9, "verify --primes 2,3,5,7: exit 0, < 120 s, p=7 dense included")
def _():
    out, err = io.StringIO(), io.StringIO()
    t = time.perf_counter()
    code = main(["verify", "--primes", "2,3,5,7", "--format", "json"], stdout=out, stderr=err)
    elapsed = time.perf_counter() - t
    results = json.loads(out.getvalue())["results"] if out.getvalue() else []
    dense7 = [r for r in results if r["p"] == 7 and r["name"].startswith("dense spectrum")]
    ok = code == 0 and elapsed < 120 and len(dense7) == 1 and dense7[0]["status"] == "pass"
    return ok, f"exit {code}, {elapsed:.1f} s, {len(results)} checks"


# ---------------------------------------------------------------- harness

def _run(criterion, name, fn):
    try:
        ok, detail = fn()
    except Exception as exc:  # any error is a failure of this sub-check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    RESULTS[(criterion, name)] = (bool(ok), detail)
    return bool(ok), detail


@pytest.mark.parametrize("criterion,name,fn", CHECKS, ids=[f"c{c}: {n}" for c, n, _ in CHECKS])
def test_criterion(criterion, name, fn):
    ok, detail = _run(criterion, name, fn)
    assert ok, f"criterion {criterion} / {name}: {detail}"


def summary_lines() -> list[str]:
    lines = []
    for c, title in TITLES.items():
        subs = [(n, RESULTS[(c, n)]) for cc, n, _ in CHECKS if cc == c and (c, n) in RESULTS]
        if not subs:
            continue
        failed = [(n, d) for n, (ok, d) in subs if not ok]
        status = "PASS" if not failed else "FAIL"
        why = "" if not failed else "  <- " + "; ".join(f"{n} ({d})" for n, d in failed)
        lines.append(f"criterion {c}: {status}  {title}{why}")
    return lines


if __name__ == "__main__":
    for c, n, fn in CHECKS:
        _run(c, n, fn)
    text = "\n".join(summary_lines())
    print(text)
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)

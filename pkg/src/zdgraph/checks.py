"""Invariant suite run by ``zdg verify``: every structural, spectral, index
and refutation property, evaluated for one prime at a time."""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

import numpy as np

from . import graph as G
from . import indices as I
from . import refute as R
from . import spectra as S
from .errors import ZdgError
from .linalg import CHARPOLY_MAX_N


@dataclass(frozen=True)
class CheckResult:
    p: int
    module: str
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


class _Suite:
    def __init__(self, p: int):
        self.p = p
        self.results: list[CheckResult] = []

    def check(self, module: str, name: str, fn):
        try:
            outcome = fn()
        except ZdgError as exc:
            self.results.append(CheckResult(self.p, module, name, "fail", f"{type(exc).__name__}: {exc}"))
            return
        passed, detail = outcome if isinstance(outcome, tuple) else (outcome, "")
        self.results.append(CheckResult(self.p, module, name, "pass" if passed else "fail", detail))

    def skip(self, module: str, name: str, why: str):
        self.results.append(CheckResult(self.p, module, name, "skip", why))


def _block_structure(g) -> bool:
    sizes = g.class_sizes()
    a, b, c = sizes["A"], sizes["B"], sizes["C"]
    n = a + b + c
    expected = np.zeros((n, n), dtype=bool)
    expected[: a + b, : a + b] = True
    expected[:a, :] = True
    expected[:, :a] = True
    np.fill_diagonal(expected, False)
    return bool(np.array_equal(g.adjacency, expected))


def run_invariants(p: int, dense_cap: int = S.DENSE_CAP, cap: int | None = None,
                   tol: float = 1e-6) -> list[CheckResult]:
    """Run every invariant for prime ``p``; never raises for math failures."""
    suite = _Suite(p)
    g = G.build(p, cap=cap)
    n, m = g.n, g.m
    part = G.edge_partition(g)
    degs = G.degrees(g)

    # graph
    suite.check("graph", "vertex count p^3-1", lambda: (n == p**3 - 1, f"n={n}"))
    suite.check("graph", "edge count closed form", lambda: (m == I.edge_count(p), f"m={m}"))
    suite.check("graph", "adjacency equals block form", lambda: _block_structure(g))
    suite.check("graph", "edge partition closed forms", lambda: (
        part.as_tuple() == (comb(p - 1, 2), (p - 1) * (p * p - p), comb(p * p - p, 2),
                            (p - 1) * (p**3 - p * p), 0, 0) and part.total == m,
        str(part.as_tuple())))
    suite.check("graph", "class degrees", lambda: set(degs[i] for i in g.class_indices("A")) == {p**3 - 2}
                and set(degs[i] for i in g.class_indices("B")) == {p**2 - 2}
                and set(degs[i] for i in g.class_indices("C")) == {p - 1})
    suite.check("graph", "degree sum = 2m", lambda: sum(degs) == 2 * m)
    suite.check("graph", "greedy clique on A+B has size p^2-1", lambda: (
        len(G.greedy_clique(g)) == p**2 - 1, f"size={len(G.greedy_clique(g))}"))

    # spectra
    closed = S.closed_form_spectrum(p)
    q = S.quotient_matrix(p)
    xi = S.quotient_eigenvalues(p)
    suite.check("spectra", "cubic = charpoly of quotient", lambda: S.cubic_coefficients(p) == q.charpoly())
    suite.check("spectra", "closed-form multiplicities sum to n", lambda: closed.n == n)
    suite.check("spectra", "trace identities", lambda: (
        abs(closed.moment(1)) <= tol * n and abs(closed.moment(2) - 2 * m) <= tol * 2 * m
        and abs(sum(xi) - (p * p - 3)) <= tol * p * p
        and abs(sum(x * x for x in xi) - q.trace_sq) <= tol * q.trace_sq
        and abs(math.prod(xi) - q.det) <= tol * abs(q.det)))
    suite.check("spectra", "spectral radius <= p^3-2", lambda: xi[0] <= p**3 - 2)
    suite.check("spectra", "singular; -1 and 0 repeated for p>=3", lambda: (
        closed.multiplicity(0.0) >= 1
        and (p < 3 or (closed.multiplicity(0.0) >= 2 and closed.multiplicity(-1.0) >= 2))))
    suite.check("spectra", "Maclaurin chain", lambda: _maclaurin_ok(xi))
    suite.check("spectra", "eigenvector certificates", lambda: (
        S.eigenvector_certificates(p, g).certified == p**3 - 4))
    report = S.classify_energy(p)
    suite.check("spectra", "energy within bounds", lambda: (
        report.lower_bound - tol <= report.energy <= report.upper_bound + tol,
        f"{report.lower_bound:.6f} <= {report.energy:.6f} <= {report.upper_bound:.6f}"))
    suite.check("spectra", "energy >= p^2-3+xi1", lambda: report.energy >= p * p - 3 + xi[0] - tol)
    suite.check("spectra", "non-hyperenergetic; f(p) > 0", lambda: (
        report.flags["nonhyperenergetic"] and report.hyper_witness > 0))
    suite.check("spectra", "hypoenergetic for p>=3; g(p) > 0", lambda: (
        p < 3 or (report.flags["hypoenergetic"] and report.hypo_witness > 0)))
    if n <= dense_cap:
        def dense_check():
            dense = S.dense_spectrum(g, cap=dense_cap)
            return S.same_multiset(dense, closed, tol), f"energy {S.energy(dense):.9g}"
        suite.check("spectra", "dense spectrum = closed form", dense_check)
    else:
        suite.skip("spectra", "dense spectrum = closed form", f"n={n} above dense cap {dense_cap}")
    if n <= CHARPOLY_MAX_N:
        suite.check("spectra", "exact charpoly = closed form", lambda: (
            S.exact_charpoly(g) == S.closed_form_charpoly(p)))
    else:
        suite.skip("spectra", "exact charpoly = closed form", f"n={n} above {CHARPOLY_MAX_N}")

    # indices
    for alpha in (1, -0.5, 0, 2):
        for row in I.named_indices(p, alpha, g):
            suite.check("indices", f"{row.index_name}(alpha={alpha}) closed = brute",
                        lambda row=row: (row.rel_error <= 1e-9, f"rel_error={row.rel_error:.2e}"))
    m1, m2 = I.zagreb(p)
    suite.check("indices", "Zagreb closed forms = brute force", lambda: (
        I.vdb_bruteforce(g, I.FIRST_ZAGREB) == m1 and I.vdb_bruteforce(g, I.SECOND_ZAGREB) == m2))
    suite.check("indices", "M1 = sum of squared degrees", lambda: sum(d * d for d in degs) == m1)
    hv = I.hansen_vukicevic_check(p, m1=m1, m2=m2, n=n, m=m)
    suite.check("indices", "Hansen-Vukicevic holds", lambda: (
        hv.holds and 2 * hv.margin == (p - 1) ** 2 * p**2 * hv.witness_h, f"margin={hv.margin}"))

    # refute
    prior = R.prior_charpoly(p).spectrum()
    suite.check("refute", "prior spectrum violates a sanity fact", lambda: (
        bool(R.sanity_facts(prior, n - 1, m)), ",".join(R.sanity_facts(prior, n - 1, m))))
    suite.check("refute", "corrected spectrum violates none", lambda: not R.sanity_facts(closed, n - 1, m))
    suite.check("refute", "prior M2 differs", lambda: R.prior_m2(p) != m2)
    return suite.results


def _maclaurin_ok(xi) -> bool:
    p1, p2, p3 = S.maclaurin_means(xi)
    return p1 >= p2 * (1 - 1e-12) and p2 >= p3 * (1 - 1e-12)

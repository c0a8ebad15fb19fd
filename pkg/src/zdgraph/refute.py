"""Previously published formulas for Gamma(Z_p[x]/<x^4>) and their refutation.

The prior characteristic polynomial, energy bound and second Zagreb formula
are reproduced exactly as printed and compared against values computed from
the graph. Nothing here is repaired; the point is to show where they fail.

The prior energy argument refers to unnamed quantities alpha, beta, gamma.
They are taken to be the zeros of the printed cubic factor; reports carry
that assumption explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .indices import edge_count, first_zagreb, second_zagreb
from .ring import check_prime
from .spectra import Spectrum, closed_form_spectrum, energy, merge_pairs, solve_cubic

PRIOR_SOURCE = "prior-claim"
ROOT_ASSUMPTION = "alpha, beta, gamma taken to be the zeros of the printed cubic factor"
REFUTE_REL_TOL = 1e-3

FACT_TRACE = "trace-zero"
FACT_RADIUS = "radius<=max-degree"
FACT_SQUARES = "sum-squares=2m"


@dataclass(frozen=True)
class Factor:
    """``poly ** exponent`` with ``poly`` given highest degree first."""

    poly: tuple[Fraction, ...]
    exponent: int

    def describe(self) -> str:
        terms = []
        deg = len(self.poly) - 1
        for i, c in enumerate(self.poly):
            power = deg - i
            if c == 0:
                continue
            mono = "" if power == 0 else ("λ" if power == 1 else f"λ^{power}")
            if power and c == 1:
                coef = ""
            elif power and c == -1:
                coef = "-"
            else:
                coef = str(c)
            terms.append(f"{coef}{mono}")
        body = "+".join(terms).replace("+-", "-")
        return f"({body})" if self.exponent == 1 else f"({body})^{self.exponent}"


@dataclass(frozen=True)
class PriorCharpoly:
    p: int
    factors: tuple[Factor, ...]

    @property
    def degree(self) -> int:
        return sum((len(f.poly) - 1) * f.exponent for f in self.factors)

    def describe(self) -> str:
        return "".join(f.describe() for f in self.factors if f.exponent)

    def spectrum(self) -> Spectrum:
        pairs = []
        for f in self.factors:
            if not f.exponent:
                continue
            if len(f.poly) == 2:
                pairs.append((float(-f.poly[1] / f.poly[0]), f.exponent))
            else:
                lead = f.poly[0]
                roots = solve_cubic(*(float(c / lead) for c in f.poly[1:]))
                pairs += [(r, f.exponent) for r in roots]
        return Spectrum(tuple(merge_pairs(pairs)), PRIOR_SOURCE)


def prior_charpoly(p) -> PriorCharpoly:
    """The prior characteristic polynomial, factor by factor, as printed."""
    p = check_prime(p)
    half = Fraction(1, 2)
    cubic = (
        Fraction(1),
        -half * (p**4 - 2 * p**2 + 5 * p - 2),
        half * p * (p - 1) * (p**2 + p + 1) * (p**3 - 2 * p**2 - 2 * p + 5),
        -half * p * (p - 1) ** 2 * (p**4 - 2 * p**3 - 2 * p**2 + 3 * p + 2),
    )
    factors = (
        Factor((Fraction(1), Fraction(-(p**3) + 1)), p - 2),
        Factor((Fraction(1), Fraction(-p + 1)), p**2 * (p - 1) - 1),
        Factor((Fraction(1), -half * (p**4 - 2 * p**3 + 3 * p)), p * (p - 1) - 1),
        Factor(cubic, 1),
    )
    return PriorCharpoly(p, factors)


def prior_energy_bound(p) -> Fraction:
    p = check_prime(p)
    return Fraction(p**5 + p**4 - 4 * p**3 + 3 * p**2 - 5 * p + 4, 2)


def prior_energy(p) -> tuple[Fraction, float]:
    """``(claimed lower bound, sum of |roots| of the prior polynomial)``."""
    return prior_energy_bound(p), energy(prior_charpoly(p).spectrum())


def _prior_m2_inner(p: int) -> int:
    return 6 * p**8 - 15 * p**7 + 2 * p**6 + 3 * p**5 + 32 * p**4 + 28 * p**3 - 8 * p**2 - 8


def prior_m2(p) -> int:
    """Prior second Zagreb formula with the 1/2 prefactor.

    This is the reading that yields the evaluated value 6008 at p=3; the inner
    polynomial keeps the printed signs (+28p^3, -8).
    """
    p = check_prime(p)
    inner = _prior_m2_inner(p)
    if inner % 2:
        raise ArithmeticError(f"prior M2 numerator odd at p={p}")
    return inner // 2


def prior_m2_literal(p) -> int:
    """Same polynomial with the literal prefactor 12 instead of 1/2."""
    return 12 * _prior_m2_inner(check_prime(p))


def prior_m1(p) -> int:
    """Prior first Zagreb formula (identical to the corrected one)."""
    p = check_prime(p)
    return p**7 - 11 * p**4 + 11 * p**3 + 3 * p**2 - 4


def sanity_facts(s: Spectrum, max_degree: int, m: int, tol: float = 1e-6) -> list[str]:
    """Which basic adjacency-spectrum facts ``s`` violates.

    Checked: eigenvalues sum to 0; the largest is at most the maximum degree;
    squares sum to twice the edge count.
    """
    violated = []
    scale = max(1.0, s.n)
    if abs(s.moment(1)) > tol * scale:
        violated.append(FACT_TRACE)
    if s.pairs and s.largest > max_degree + tol * max(1.0, max_degree):
        violated.append(FACT_RADIUS)
    if abs(s.moment(2) - 2 * m) > tol * max(1.0, 2 * m):
        violated.append(FACT_SQUARES)
    return violated


@dataclass(frozen=True)
class DiscrepancyReport:
    quantity: str
    claimed: float | int
    computed: float | int
    verdict: str
    violated_facts: tuple[str, ...] = ()
    notes: tuple[str, ...] = field(default=())


def _verdict(claimed, computed) -> str:
    if isinstance(claimed, int) and isinstance(computed, int):
        return "agrees" if claimed == computed else "refuted"
    gap = abs(float(claimed) - float(computed))
    return "refuted" if gap > REFUTE_REL_TOL * max(1.0, abs(float(computed))) else "agrees"


def refutation_report(p) -> list[DiscrepancyReport]:
    """Compare every prior claim with the corrected value at ``p``."""
    p = check_prime(p)
    n, m = p**3 - 1, edge_count(p)
    prior = prior_charpoly(p)
    prior_spec = prior.spectrum()
    true_spec = closed_form_spectrum(p)
    true_energy = energy(true_spec)
    bound, prior_total = prior_energy(p)

    reports = [
        DiscrepancyReport(
            "spectral radius",
            prior_spec.largest,
            true_spec.largest,
            _verdict(prior_spec.largest, true_spec.largest),
            tuple(sanity_facts(prior_spec, n - 1, m)),
            (ROOT_ASSUMPTION,),
        ),
        DiscrepancyReport(
            "energy (sum of |roots| of prior polynomial)",
            prior_total,
            true_energy,
            _verdict(prior_total, true_energy),
            (),
            (ROOT_ASSUMPTION,),
        ),
    ]
    # a lower bound is refuted as soon as the true value falls below it
    bound_verdict = "refuted" if true_energy < float(bound) - 1e-9 else "agrees"
    reports.append(
        DiscrepancyReport("energy lower bound", float(bound), true_energy, bound_verdict)
    )
    reports.append(
        DiscrepancyReport("first Zagreb index", prior_m1(p), first_zagreb(p),
                          _verdict(prior_m1(p), first_zagreb(p)))
    )
    reports.append(
        DiscrepancyReport(
            "second Zagreb index",
            prior_m2(p),
            second_zagreb(p),
            _verdict(prior_m2(p), second_zagreb(p)),
            (),
            (f"literal prefactor 12 gives {prior_m2_literal(p)}",),
        )
    )
    return reports


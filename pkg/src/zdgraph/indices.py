"""Vertex-degree-based topological indices and the Hansen-Vukicevic check.

A VDB index sums a symmetric weight ``phi(d_u, d_v)`` over all edges. On
Gamma(Z_p[x]/<x^4>) only four edge types occur (A-A, A-B, B-B, A-C), so every
such index has a four-term closed form. ``vdb_bruteforce`` instead walks the
edge list of a built graph with its measured degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import NumericError
from .ring import check_prime


@dataclass(frozen=True)
class VdbFunction:
    """Named symmetric edge weight; ``alpha`` is recorded for general indices."""

    name: str
    weight: Callable[[int, int], float]
    alpha: float | None = None

    def __call__(self, du, dv):
        return self.weight(du, dv)


def randic(alpha: float) -> VdbFunction:
    return VdbFunction("randic", lambda a, b: (a * b) ** alpha, alpha)


def sum_connectivity(alpha: float) -> VdbFunction:
    return VdbFunction("sum_connectivity", lambda a, b: (a + b) ** alpha, alpha)


def inverse_sum_indeg(alpha: float) -> VdbFunction:
    return VdbFunction("inverse_sum_indeg", lambda a, b: (a * b / (a + b)) ** alpha, alpha)


def sombor(alpha: float) -> VdbFunction:
    return VdbFunction("sombor", lambda a, b: (a * a + b * b) ** alpha, alpha)


FIRST_ZAGREB = VdbFunction("first_zagreb", lambda a, b: a + b)
SECOND_ZAGREB = VdbFunction("second_zagreb", lambda a, b: a * b)
EDGE_COUNT = VdbFunction("edge_count", lambda a, b: 1)
ARITHMETIC_GEOMETRIC = VdbFunction(
    "arithmetic_geometric", lambda a, b: (a + b) / (2 * math.sqrt(a * b))
)

GENERAL_INDICES: dict[str, Callable[[float], VdbFunction]] = {
    "randic": randic,
    "sum_connectivity": sum_connectivity,
    "inverse_sum_indeg": inverse_sum_indeg,
    "sombor": sombor,
}


@dataclass(frozen=True)
class DegreeTriple:
    """Common degrees of the A, B and C vertices."""

    du: int
    dv: int
    dw: int


def class_degrees(p) -> DegreeTriple:
    p = check_prime(p)
    return DegreeTriple(p**3 - 2, p**2 - 2, p - 1)


def edge_type_counts(p) -> dict[str, int]:
    """Closed-form edge counts for the four edge types that occur."""
    p = check_prime(p)
    return {
        "AA": (p - 1) * (p - 2) // 2,
        "AB": (p - 1) * (p * p - p),
        "BB": (p * p - p) * (p * p - p - 1) // 2,
        "AC": (p**3 - p * p) * (p - 1),
    }


def edge_count(p) -> int:
    p = check_prime(p)
    return (p - 1) * (3 * p**3 - p**2 - 2 * p - 2) // 2


def vertex_count(p) -> int:
    return check_prime(p) ** 3 - 1


def _checked(phi: VdbFunction, du, dv):
    value = phi(du, dv)
    if isinstance(value, complex) or not math.isfinite(value):
        raise NumericError(f"{phi.name} is not finite at degree pair ({du}, {dv}): {value}")
    return value


def vdb_closed_form(p, phi: VdbFunction):
    """Four-term edge-partition formula. Integer weights give an exact int."""
    d = class_degrees(p)
    counts = edge_type_counts(p)
    terms = [
        counts["AA"] * _checked(phi, d.du, d.du),
        counts["AB"] * _checked(phi, d.du, d.dv),
        counts["BB"] * _checked(phi, d.dv, d.dv),
        counts["AC"] * _checked(phi, d.du, d.dw),
    ]
    return _total(terms)


def vdb_bruteforce(g, phi: VdbFunction):
    """Sum ``phi`` over every edge of ``g`` using the measured degrees."""
    deg = [int(x) for x in g.degree_array]
    i, j = g.edges()
    return _total(_checked(phi, deg[a], deg[b]) for a, b in zip(i.tolist(), j.tolist()))


def _total(values):
    values = list(values)
    if all(isinstance(v, int) for v in values):
        return sum(values)
    return math.fsum(values)


def first_zagreb(p) -> int:
    p = check_prime(p)
    return p**7 - 11 * p**4 + 11 * p**3 + 3 * p**2 - 4


def second_zagreb(p) -> int:
    p = check_prime(p)
    twice = 6 * p**8 - 15 * p**7 + 2 * p**6 + 3 * p**5 + 32 * p**4 - 28 * p**3 - 8 * p**2 + 8
    if twice % 2:
        raise NumericError(f"second Zagreb numerator {twice} is odd at p={p}")
    return twice // 2


def zagreb(p) -> tuple[int, int]:
    return first_zagreb(p), second_zagreb(p)


def corollary_form(p, name: str, alpha: float, printed: bool = False) -> float:
    """Explicit four-term formula for a general index.

    The A-C term uses the degree pair ``(du, dw)``, which is what the edge
    structure gives. ``printed=True`` substitutes ``(dv, dw)`` instead, to
    quantify the discrepancy in the published corollary.
    """
    p = check_prime(p)
    d = class_degrees(p)
    du, dv, dw = float(d.du), float(d.dv), float(d.dw)
    far = dv if printed else du
    c_aa = (p - 1) * (p - 2) / 2
    c_bb = (p * p - p) * (p * p - p - 1) / 2
    c_ab = p * (p - 1) ** 2
    c_ac = p**2 * (p - 1) ** 2
    if name == "randic":
        parts = ((du * du) ** alpha, (dv * dv) ** alpha, (du * dv) ** alpha, (far * dw) ** alpha)
    elif name == "sum_connectivity":
        parts = ((2 * du) ** alpha, (2 * dv) ** alpha, (du + dv) ** alpha, (far + dw) ** alpha)
    elif name == "inverse_sum_indeg":
        parts = (
            (du / 2) ** alpha,
            (dv / 2) ** alpha,
            (du * dv / (du + dv)) ** alpha,
            (far * dw / (far + dw)) ** alpha,
        )
    elif name == "sombor":
        parts = (
            (2 * du * du) ** alpha,
            (2 * dv * dv) ** alpha,
            (du * du + dv * dv) ** alpha,
            (far * far + dw * dw) ** alpha,
        )
    else:
        raise KeyError(f"unknown general index {name!r}")
    return math.fsum(c * x for c, x in zip((c_aa, c_bb, c_ab, c_ac), parts))


@dataclass(frozen=True)
class IndexRow:
    index_name: str
    alpha: float | None
    closed_form: float
    corollary: float | None
    brute_force: float | None

    @property
    def rel_error(self) -> float | None:
        if self.brute_force is None:
            return None
        errs = [abs(self.closed_form - self.brute_force)]
        if self.corollary is not None:
            errs.append(abs(self.corollary - self.brute_force))
        return max(errs) / max(1.0, abs(self.brute_force))


def named_indices(p, alpha: float, g=None) -> list[IndexRow]:
    """All general indices at ``alpha`` via the edge-partition formula, the
    explicit corollary formula, and (when ``g`` is given) brute force."""
    rows = []
    for name, factory in GENERAL_INDICES.items():
        phi = factory(alpha)
        rows.append(
            IndexRow(
                name,
                alpha,
                vdb_closed_form(p, phi),
                corollary_form(p, name, alpha),
                None if g is None else vdb_bruteforce(g, phi),
            )
        )
    return rows


def fixed_indices(p, g=None) -> list[IndexRow]:
    """Parameter-free indices: M1, M2, arithmetic-geometric, edge count."""
    rows = []
    for phi in (FIRST_ZAGREB, SECOND_ZAGREB, ARITHMETIC_GEOMETRIC, EDGE_COUNT):
        rows.append(
            IndexRow(
                phi.name,
                None,
                vdb_closed_form(p, phi),
                None,
                None if g is None else vdb_bruteforce(g, phi),
            )
        )
    return rows


def hv_polynomial(p: int) -> int:
    """Sign witness for the Hansen-Vukicevic inequality on this family."""
    return 3 * p**7 - 5 * p**6 - 10 * p**5 + 15 * p**4 + 8 * p**3 - 5 * p**2 - 6 * p - 2


@dataclass(frozen=True)
class HansenVukicevicResult:
    p: int
    holds: bool
    lhs: Fraction
    rhs: Fraction
    margin: int
    witness_h: int


def hansen_vukicevic_check(p, m1: int | None = None, m2: int | None = None,
                           n: int | None = None, m: int | None = None) -> HansenVukicevicResult:
    """Exact test of ``M2/m >= M1/n``.

    Defaults come from the closed forms; pass measured values to check a
    built graph instead. ``margin`` is ``n*M2 - m*M1``.
    """
    p = check_prime(p)
    m1 = first_zagreb(p) if m1 is None else m1
    m2 = second_zagreb(p) if m2 is None else m2
    n = vertex_count(p) if n is None else n
    m = edge_count(p) if m is None else m
    lhs, rhs = Fraction(m2, m), Fraction(m1, n)
    return HansenVukicevicResult(p, lhs >= rhs, lhs, rhs, n * m2 - m * m1, hv_polynomial(p))

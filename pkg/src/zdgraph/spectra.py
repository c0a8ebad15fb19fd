"""Adjacency spectrum of Gamma(Z_p[x]/<x^4>), its energy, and energy bounds.

The spectrum is available from three independent routes:

* ``closed_form_spectrum`` -- -1 with multiplicity p^2-3, 0 with multiplicity
  p^3-p^2-1, plus the three eigenvalues of the 3x3 quotient matrix of the
  A/B/C equitable partition;
* ``dense_spectrum`` -- cyclic Jacobi on the built adjacency matrix;
* ``charpoly_spectrum(exact_charpoly(g))`` -- exact integer characteristic
  polynomial with integer roots split off exactly (small graphs only).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import graph as _graph
from .errors import NumericError, ParameterError, SizeError, TheoremViolation
from .linalg import (
    CHARPOLY_MAX_N,
    cluster,
    faddeev_leverrier,
    integer_root_multiplicities,
    jacobi_eigvalsh,
    poly_mul,
    poly_pow,
)
from .ring import check_prime

SOURCES = ("closed-form", "dense", "exact-charpoly")
DENSE_CAP = 1000
CLUSTER_GAP = 1e-6
CUBIC_RESIDUAL = 1e-8
CERTIFICATE_TOL = 1e-9


@dataclass(frozen=True)
class QuotientMatrix:
    """Quotient matrix of the A/B/C equitable partition.

    Entry ``(i, j)`` is the number of neighbours a class-``i`` vertex has in
    class ``j`` (rows and columns ordered A, B, C).
    """

    p: int

    @property
    def entries(self) -> tuple[tuple[int, int, int], ...]:
        p = self.p
        return (
            (p - 2, p * p - p, p**3 - p * p),
            (p - 1, p * p - p - 1, 0),
            (p - 1, 0, 0),
        )

    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    @property
    def trace(self) -> int:
        q = self.entries
        return q[0][0] + q[1][1] + q[2][2]

    @property
    def trace_sq(self) -> int:
        """``tr(Q^2)``, i.e. the sum of squared eigenvalues of Q."""
        q = self.entries
        return sum(q[i][j] * q[j][i] for i in range(3) for j in range(3))

    @property
    def det(self) -> int:
        (a, b, c), (d, e, f), (g, h, i) = self.entries
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def charpoly(self) -> tuple[int, int, int]:
        """``(c2, c1, c0)`` of ``det(lambda I - Q)`` from trace, minors, det."""
        (a, b, c), (d, e, f), (g, h, i) = self.entries
        minors = (a * e - b * d) + (a * i - c * g) + (e * i - f * h)
        return -self.trace, minors, -self.det


def quotient_matrix(p) -> QuotientMatrix:
    return QuotientMatrix(check_prime(p))


def cubic_coefficients(p) -> tuple[int, int, int]:
    """Coefficients ``(c2, c1, c0)`` of the cubic carrying the nontrivial eigenvalues."""
    p = check_prime(p)
    c2 = -(p**2 - 3)
    c1 = 2 - 2 * p**2 + 2 * p**3 - p**4
    c0 = p**6 - 3 * p**5 + 2 * p**4 + p**3 - p**2
    return c2, c1, c0


def solve_cubic(c2, c1, c0) -> tuple[float, float, float]:
    """Real roots of ``x^3 + c2 x^2 + c1 x + c0``, descending.

    Uses the trigonometric form for three real roots followed by one Newton
    step per root. Raises :class:`NumericError` when the discriminant shows a
    complex pair.
    """
    c2, c1, c0 = float(c2), float(c1), float(c0)
    shift = c2 / 3.0
    # depressed cubic t^3 + a t + b with x = t - shift
    a = c1 - c2 * c2 / 3.0
    b = 2.0 * c2**3 / 27.0 - c2 * c1 / 3.0 + c0
    disc = 4.0 * a**3 + 27.0 * b * b
    if disc > 1e-12 * (4.0 * abs(a) ** 3 + 27.0 * b * b):
        raise NumericError(
            f"cubic x^3{c2:+g}x^2{c1:+g}x{c0:+g} has complex roots (discriminant {-disc:.3g} < 0)"
        )
    if a >= 0:
        # only reachable (within tolerance) for a triple root
        roots = [-shift] * 3
    else:
        r = 2.0 * math.sqrt(-a / 3.0)
        arg = 3.0 * b / (a * r)
        phi = math.acos(max(-1.0, min(1.0, arg))) / 3.0
        roots = [r * math.cos(phi - 2.0 * math.pi * j / 3.0) - shift for j in range(3)]
    polished = []
    for x in roots:
        fx = ((x + c2) * x + c1) * x + c0
        dfx = (3.0 * x + 2.0 * c2) * x + c1
        if dfx != 0.0:
            x -= fx / dfx
        polished.append(x)
    polished.sort(reverse=True)
    return tuple(polished)


def quotient_eigenvalues(p) -> tuple[float, float, float]:
    """The three nontrivial eigenvalues, descending."""
    return solve_cubic(*cubic_coefficients(p))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset as ``(value, multiplicity)`` pairs, descending."""

    pairs: tuple[tuple[float, int], ...]
    source: str

    def __post_init__(self):
        if self.source not in SOURCES and not self.source.startswith("prior"):
            raise ParameterError(f"unknown spectrum source {self.source!r}")
        pairs = tuple(sorted(((float(v), int(m)) for v, m in self.pairs), key=lambda t: -t[0]))
        if any(m < 1 for _, m in pairs):
            raise ParameterError("multiplicities must be positive")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_values(cls, values, source: str, rel_gap: float = CLUSTER_GAP) -> "Spectrum":
        return cls(tuple(cluster(values, rel_gap)), source)

    @property
    def n(self) -> int:
        return sum(m for _, m in self.pairs)

    def values(self) -> np.ndarray:
        """All eigenvalues with repetition, descending."""
        if not self.pairs:
            return np.zeros(0)
        return np.repeat([v for v, _ in self.pairs], [m for _, m in self.pairs])

    def moment(self, k: int) -> float:
        return math.fsum(m * v**k for v, m in self.pairs)

    @property
    def largest(self) -> float:
        return self.pairs[0][0] if self.pairs else float("nan")

    def multiplicity(self, value: float, tol: float = CLUSTER_GAP) -> int:
        return sum(m for v, m in self.pairs if abs(v - value) <= tol * max(1.0, abs(value)))


def same_multiset(s: Spectrum, t: Spectrum, tol: float = 1e-6) -> bool:
    """True if both spectra have equal size and sorted values agree within ``tol``."""
    a, b = s.values(), t.values()
    return a.shape == b.shape and bool(np.all(np.abs(a - b) <= tol))


def closed_form_spectrum(p) -> Spectrum:
    p = check_prime(p)
    pairs = [(-1.0, p**2 - 3), (0.0, p**3 - p**2 - 1)]
    pairs += [(xi, 1) for xi in quotient_eigenvalues(p)]
    # p = 2 leaves -1 with multiplicity 1; never zero for a prime
    pairs = [(v, m) for v, m in pairs if m > 0]
    return Spectrum(tuple(merge_pairs(pairs)), "closed-form")


def merge_pairs(pairs) -> list[tuple[float, int]]:
    """Combine ``(value, multiplicity)`` pairs whose values coincide."""
    merged: list[list] = []
    for v, m in sorted(pairs, key=lambda t: -t[0]):
        if merged and abs(merged[-1][0] - v) < CLUSTER_GAP * max(1.0, abs(v)):
            merged[-1][1] += m
        else:
            merged.append([v, m])
    return [tuple(x) for x in merged]


def dense_spectrum(g, cap: int = DENSE_CAP) -> Spectrum:
    """Spectrum of the built adjacency matrix by cyclic Jacobi."""
    if g.n > cap:
        raise SizeError(f"dense eigensolve limited to n <= {cap}, got n={g.n}")
    values = jacobi_eigvalsh(g.adjacency.astype(np.float64))
    spec = Spectrum.from_values(values, "dense")
    if abs(spec.moment(1)) > 1e-7 * max(1, g.n):
        raise NumericError(f"eigenvalue sum {spec.moment(1):.3g} is not ~0")
    return spec


def exact_charpoly(g, max_n: int = CHARPOLY_MAX_N) -> list[int]:
    """``det(lambda I - A)`` as exact integers, highest degree first."""
    return faddeev_leverrier(g.adjacency.astype(np.int64), max_n=max_n)


def closed_form_charpoly(p) -> list[int]:
    """Expanded ``cubic(lambda) (lambda+1)^(p^2-3) lambda^(p^3-p^2-1)``."""
    p = check_prime(p)
    poly = [1, *cubic_coefficients(p)]
    poly = poly_mul(poly, poly_pow([1, 1], p**2 - 3))
    return poly + [0] * (p**3 - p**2 - 1)


def charpoly_spectrum(coeffs, radius: int | None = None) -> Spectrum:
    """Roots of an integer characteristic polynomial.

    Integer roots (|r| <= radius) are divided out exactly; what is left is
    solved as a cubic or, failing that, numerically.
    """
    found, rest = integer_root_multiplicities(coeffs, radius)
    pairs = [(float(r), m) for r, m in found.items()]
    degree = len(rest) - 1
    if degree == 3:
        lead = rest[0]
        others = solve_cubic(rest[1] / lead, rest[2] / lead, rest[3] / lead)
    elif degree > 0:
        roots = np.roots(np.array(rest, dtype=np.float64))
        if np.any(np.abs(roots.imag) > 1e-7 * np.maximum(1.0, np.abs(roots))):
            raise NumericError("characteristic polynomial has non-real roots")
        others = roots.real
    else:
        others = ()
    pairs += [(float(x), 1) for x in others]
    return Spectrum(tuple(merge_pairs(pairs)), "exact-charpoly")


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of checking explicit eigenvectors against the built graph."""

    p: int
    minus_one: int
    zero: int
    equitable: bool
    cubic_residuals: tuple[float, ...] = field(default=())

    @property
    def certified(self) -> int:
        return self.minus_one + self.zero


def _difference_family(adj, members, eigenvalue: int) -> int:
    """Check ``A (e_j - e_first) = eigenvalue (e_j - e_first)`` exactly for all j."""
    if len(members) < 2:
        return 0
    first, rest = members[0], members[1:]
    lhs = adj[:, rest] - adj[:, [first]]
    rhs = np.zeros_like(lhs)
    rhs[rest, np.arange(len(rest))] = eigenvalue
    rhs[first, :] = -eigenvalue
    if not np.array_equal(lhs, rhs):
        bad = int(np.flatnonzero((lhs != rhs).any(axis=0))[0])
        raise TheoremViolation(
            f"vector e_{rest[bad]} - e_{first} is not an eigenvector for {eigenvalue}"
        )
    # independent: every vector has its own +1 coordinate
    return len(rest)


def eigenvector_certificates(p, g=None) -> CertificateReport:
    """Verify the explicit eigenvectors for -1 and 0 and the quotient lift.

    The -1 family is ``e_j - e_first`` inside A and inside B (cliques with a
    common closed neighbourhood); the 0 family is the same inside C (an
    independent set with a common open neighbourhood). These are checked in
    integer arithmetic. Each quotient eigenvector ``x`` of Q lifted to
    ``(x1,...,x1, x2,...,x2, x3,...,x3)`` is checked to 1e-9.
    """
    p = check_prime(p)
    g = _graph.build(p) if g is None else g
    if g.p != p or g.k != 4:
        raise ParameterError("certificates need the k=4 graph for the same p")
    adj = g.adjacency.astype(np.int64)
    blocks = [g.class_indices(tag) for tag in "ABC"]

    minus_one = _difference_family(adj, blocks[0], -1) + _difference_family(adj, blocks[1], -1)
    zero = _difference_family(adj, blocks[2], 0)
    if minus_one != p**2 - 3 or zero != p**3 - p**2 - 1:
        raise TheoremViolation(f"certificate counts {minus_one}, {zero} do not match p={p}")

    q = quotient_matrix(p).entries
    for i, rows in enumerate(blocks):
        for j, cols in enumerate(blocks):
            if not np.all(adj[np.ix_(rows, cols)].sum(axis=1) == q[i][j]):
                raise TheoremViolation(f"partition not equitable at block ({i}, {j})")

    qa = np.array(q, dtype=np.float64)
    residuals = []
    for xi in quotient_eigenvalues(p):
        vec = _null_vector(qa - xi * np.eye(3))
        lifted = np.concatenate([np.full(len(b), vec[c]) for c, b in enumerate(blocks)])
        res = np.linalg.norm(adj @ lifted - xi * lifted) / (
            np.linalg.norm(lifted) * max(1.0, abs(xi))
        )
        if res > CERTIFICATE_TOL:
            raise TheoremViolation(f"lifted quotient eigenvector for {xi:.6g} has residual {res:.3g}")
        residuals.append(float(res))
    return CertificateReport(p, minus_one, zero, True, tuple(residuals))


def _null_vector(m: np.ndarray) -> np.ndarray:
    """Null vector of a singular 3x3 matrix: the largest row cross product."""
    candidates = [np.cross(m[0], m[1]), np.cross(m[0], m[2]), np.cross(m[1], m[2])]
    best = max(candidates, key=np.linalg.norm)
    return best / np.linalg.norm(best)


def energy(s: Spectrum) -> float:
    """Sum of absolute eigenvalues counted with multiplicity."""
    return math.fsum(abs(v) * m for v, m in s.pairs)


def energy_bounds(p) -> tuple[float, float]:
    """Maclaurin-mean lower and upper bounds on the energy."""
    q = quotient_matrix(p)
    base = q.p**2 - 3
    lower = base + math.sqrt(q.trace_sq + 6 * abs(q.det) ** (2.0 / 3.0))
    upper = base + math.sqrt(3 * q.trace_sq)
    return lower, upper


def trivial_lower_bound(p) -> int:
    p = check_prime(p)
    return p**2 - 3


def hyper_witness(p: int) -> int:
    """Polynomial whose positivity rules out hyperenergeticity."""
    return 2 * p**6 - 2 * p**5 - 4 * p**4 + 4 * p**3 + 4 * p**2 - 7


def hypo_witness(p: int) -> int:
    """Polynomial whose positivity implies hypoenergeticity."""
    return p**6 - 2 * p**5 - 8 * p**4 + 16 * p**3 + 2 * p**2 - 11


def maclaurin_means(values) -> tuple[float, float, float]:
    """``(P1, P2^(1/2), P3^(1/3))`` of three nonnegative reals."""
    a, b, c = (abs(float(v)) for v in values)
    return (a + b + c) / 3.0, math.sqrt((a * b + a * c + b * c) / 3.0), (a * b * c) ** (1.0 / 3.0)


@dataclass(frozen=True)
class EnergyReport:
    p: int
    n: int
    energy: float
    lower_bound: float
    upper_bound: float
    trivial_lower: int
    hyper_witness: int
    hypo_witness: int
    flags: dict
    source: str = "closed-form"


def classify_energy(p, spectrum: Spectrum | None = None, tol: float = 1e-9) -> EnergyReport:
    """Energy, bounds, and hyper/hypo/border flags, checked against the witnesses.

    Raises :class:`TheoremViolation` if a positive witness disagrees with the
    computed energy.
    """
    p = check_prime(p)
    spectrum = closed_form_spectrum(p) if spectrum is None else spectrum
    n = p**3 - 1
    e = energy(spectrum)
    lower, upper = energy_bounds(p)
    complete = 2 * (n - 1)
    flags = {
        "hyperenergetic": e > complete + tol,
        "nonhyperenergetic": not e > complete + tol,
        "borderenergetic": abs(e - complete) < tol,
        "hypoenergetic": e < n,
    }
    f, g = hyper_witness(p), hypo_witness(p)
    if f > 0 and flags["hyperenergetic"]:
        raise TheoremViolation(f"f({p}) = {f} > 0 but energy {e} exceeds {complete}")
    if g > 0 and not flags["hypoenergetic"]:
        raise TheoremViolation(f"g({p}) = {g} > 0 but energy {e} is not below {n}")
    return EnergyReport(p, n, e, lower, upper, p**2 - 3, f, g, flags, spectrum.source)


def sig9(x: float) -> float:
    """Round to 9 significant digits for stable serialisation.

    Magnitudes below 1e-12 (solver noise around a zero eigenvalue) become 0.
    """
    return 0.0 if abs(x) < 1e-12 else float(f"{x:.9g}")


def spectrum_json(s: Spectrum, report: EnergyReport | None = None) -> dict:
    out = {
        "source": s.source,
        "pairs": [[sig9(v) + 0.0, m] for v, m in s.pairs],
        "energy": sig9(energy(s)),
    }
    if report is not None:
        out["bounds"] = [sig9(report.lower_bound), sig9(report.upper_bound)]
        out["flags"] = dict(report.flags)
    return out

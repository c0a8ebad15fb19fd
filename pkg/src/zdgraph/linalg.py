"""Dense symmetric eigensolver, exact characteristic polynomials, and
small integer-polynomial helpers."""

from __future__ import annotations

import math
import numpy as np

from .errors import NumericError, ParameterError, SizeError

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
CHARPOLY_MAX_N = 64
_MAX_ROOT_SCAN = 100_000


def _round_robin(n: int):
    """Yield ``n - 1`` (or ``n`` for odd n) rounds of disjoint index pairs.

    Circle-method tournament: every unordered pair appears exactly once per
    sweep, and pairs inside a round touch disjoint rows/columns so their
    rotations commute and can be applied together.
    """
    players = list(range(n + (n % 2)))
    size = len(players)
    half = size // 2
    for _ in range(size - 1):
        top = players[:half]
        bottom = players[half:][::-1]
        pairs = [(a, b) for a, b in zip(top, bottom) if a < n and b < n]
        yield (np.array([min(a, b) for a, b in pairs], dtype=np.intp),
               np.array([max(a, b) for a, b in pairs], dtype=np.intp))
        players = [players[0], players[-1]] + players[1:-1]


def jacobi_eigvalsh(a, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Each sweep visits every off-diagonal pair once, in parallel rounds of
    disjoint rotations. Iteration stops once the off-diagonal Frobenius norm
    drops to ``tol * n``.

    Returns
    -------
    numpy.ndarray
        Eigenvalues sorted in descending order.
    """
    a = np.array(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ParameterError("matrix must be square")
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    if not np.allclose(a, a.T, rtol=0, atol=1e-12 * max(1.0, np.abs(a).max())):
        raise ParameterError("matrix must be symmetric")
    if not np.isfinite(a).all():
        raise NumericError("matrix has non-finite entries")
    a = (a + a.T) / 2
    threshold = tol * n
    rounds = list(_round_robin(n))

    for _ in range(max_sweeps):
        if _off_norm(a) <= threshold:
            return np.sort(np.diag(a))[::-1].copy()
        for ps, qs in rounds:
            apq = a[ps, qs]
            active = np.abs(apq) > 0
            if not active.any():
                continue
            ps, qs, apq = ps[active], qs[active], apq[active]
            app, aqq = a[ps, ps], a[qs, qs]
            with np.errstate(over="ignore"):
                tau = (aqq - app) / (2.0 * apq)
                t = np.sign(tau) / (np.abs(tau) + np.hypot(1.0, tau))
            t[tau == 0] = 1.0
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            # A <- J^T A J, rows then columns
            row_p, row_q = a[ps, :], a[qs, :]
            a[ps, :] = c[:, None] * row_p - s[:, None] * row_q
            a[qs, :] = s[:, None] * row_p + c[:, None] * row_q
            col_p, col_q = a[:, ps], a[:, qs]
            a[:, ps] = col_p * c - col_q * s
            a[:, qs] = col_p * s + col_q * c
            a[ps, qs] = 0.0
            a[qs, ps] = 0.0
    if _off_norm(a) <= threshold:
        return np.sort(np.diag(a))[::-1].copy()
    raise NumericError(f"Jacobi did not converge in {max_sweeps} sweeps (n={n})")


def _off_norm(a: np.ndarray) -> float:
    # summed directly; sum(a^2) - sum(diag^2) cancels catastrophically
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def cluster(values, rel_gap: float = 1e-6) -> list[tuple[float, int]]:
    """Merge sorted neighbours closer than ``rel_gap * max(1, |lambda|)``.

    Returns ``(mean value, multiplicity)`` pairs in descending order.
    """
    vals = sorted((float(v) for v in values), reverse=True)
    groups: list[list[float]] = []
    for v in vals:
        if groups and abs(groups[-1][-1] - v) < rel_gap * max(1.0, abs(v)):
            groups[-1].append(v)
        else:
            groups.append([v])
    return [(math.fsum(g) / len(g), len(g)) for g in groups]


def faddeev_leverrier(a, max_n: int = CHARPOLY_MAX_N) -> list[int]:
    """Exact characteristic polynomial ``det(lambda I - A)`` of an integer matrix.

    Coefficients are returned highest degree first (leading 1). All arithmetic
    is on Python integers; every division by ``k`` is exact.
    """
    a = np.asarray(a)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise ParameterError("matrix must be square")
    if n > max_n:
        raise SizeError(f"exact characteristic polynomial limited to n <= {max_n}, got n={n}")
    ints = np.array([[int(x) for x in row] for row in a.tolist()], dtype=object).reshape(n, n)
    if n == 0:
        return [1]
    coeffs = [1]
    ident = np.zeros((n, n), dtype=object)
    for i in range(n):
        ident[i, i] = 1
    am = np.zeros((n, n), dtype=object)
    c = 1
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I, with M_1 = I
        m = am + c * ident
        am = ints.dot(m)
        tr = sum(am[i, i] for i in range(n))
        if tr % k:
            raise NumericError("non-integral Faddeev-LeVerrier step; input not integral?")
        c = -tr // k
        coeffs.append(c)
    return coeffs


def poly_mul(a, b) -> list:
    """Product of coefficient lists (highest degree first)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_pow(a, e: int) -> list:
    out = [1]
    for _ in range(e):
        out = poly_mul(out, a)
    return out


def poly_eval(coeffs, x):
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def deflate(coeffs, root) -> tuple[list, object]:
    """Synthetic division by ``(lambda - root)``; returns quotient and remainder."""
    out = []
    acc = 0
    for c in coeffs:
        acc = acc * root + c
        out.append(acc)
    return out[:-1], out[-1]


def integer_root_multiplicities(coeffs, bound: int | None = None):
    """Split off every integer root of an integer polynomial exactly.

    Candidates are the integers with ``|r| <= bound``, capped by the Cauchy
    bound and by a fixed scan limit; roots outside stay in the quotient.
    Returns ``({root: multiplicity}, remaining quotient)``.
    """
    coeffs = [int(c) for c in coeffs]
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs.pop(0)
    if coeffs[0] == 0:
        raise ParameterError("zero polynomial")
    lead = abs(coeffs[0])
    cauchy = 1 + max((abs(c) for c in coeffs[1:]), default=0) // lead
    bound = min(cauchy, _MAX_ROOT_SCAN if bound is None else bound)
    found: dict[int, int] = {}
    candidates = [0] + [s * r for r in range(1, bound + 1) for s in (1, -1)]
    for r in candidates:
        while len(coeffs) > 1:
            q, rem = deflate(coeffs, r)
            if rem != 0:
                break
            found[r] = found.get(r, 0) + 1
            coeffs = q
    return found, coeffs

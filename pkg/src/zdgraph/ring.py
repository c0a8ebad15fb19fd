"""Arithmetic in the truncated polynomial ring Z_p[x]/<x^k>.

Elements are stored as coefficient tuples ``(a0, a1, ..., a_{k-1})`` of least
nonnegative residues mod p. The nonzero zero-divisors are exactly the nonzero
elements with ``a0 == 0``; they are grouped by *valuation* (the lowest degree
carrying a nonzero coefficient), because ``u * v == 0`` iff
``val(u) + val(v) >= k``.

For ``k = 4`` the three valuation blocks are tagged::

    A  = {a3 x^3 : a3 != 0}                 valuation 3
    B  = {a3 x^3 + a2 x^2 : a2 != 0}        valuation 2
    C  = {a3 x^3 + a2 x^2 + a1 x : a1 != 0} valuation 1

Other ``k`` use the same lettering counted from the top valuation down.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import isqrt

from .errors import DomainError, ParameterError

DEFAULT_DEGREE = 4


def is_prime(n: int) -> bool:
    """Trial division primality test."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def check_prime(p) -> int:
    """Validate a prime modulus and return it as ``int``."""
    if isinstance(p, bool) or not isinstance(p, int):
        try:
            if int(p) != p:
                raise ValueError
            p = int(p)
        except (TypeError, ValueError):
            raise ParameterError(f"modulus must be an integer, got {p!r}") from None
    if not is_prime(p):
        raise ParameterError(f"{p} is not prime")
    return p


def check_degree(k) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise ParameterError(f"ring degree k must be an integer >= 2, got {k!r}")
    return k


@dataclass(frozen=True)
class RingElement:
    """An element of Z_p[x]/<x^k>; ``coeffs[i]`` is the coefficient of x^i."""

    coeffs: tuple[int, ...]
    p: int

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ParameterError("need at least two coefficients (k >= 2)")
        reduced = tuple(int(c) % self.p for c in self.coeffs)
        object.__setattr__(self, "coeffs", reduced)

    @classmethod
    def from_coeffs(cls, coeffs, p: int, k: int | None = None) -> "RingElement":
        """Build from low-to-high coefficients, zero-padded to length ``k``."""
        coeffs = list(coeffs)
        k = len(coeffs) if k is None else k
        if len(coeffs) > k:
            raise ParameterError(f"{len(coeffs)} coefficients do not fit degree {k}")
        return cls(tuple(coeffs) + (0,) * (k - len(coeffs)), p)

    @classmethod
    def parse(cls, text: str, p: int, k: int = DEFAULT_DEGREE) -> "RingElement":
        return parse_element(text, p, k)

    @property
    def k(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int:
        """Lowest degree with a nonzero coefficient. Undefined for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise DomainError("the zero element has no valuation")

    def __mul__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return mul(self, other)

    def __str__(self) -> str:
        return format_element(self)


def mul(x: RingElement, y: RingElement, p: int | None = None) -> RingElement:
    """Product in Z_p[x]/<x^k>: truncated convolution reduced mod p."""
    if x.p != y.p or (p is not None and p != x.p):
        raise ParameterError(f"moduli differ: {x.p} vs {y.p if p is None else p}")
    if x.k != y.k:
        raise ParameterError(f"ring degrees differ: {x.k} vs {y.k}")
    k, mod = x.k, x.p
    out = [0] * k
    for i, a in enumerate(x.coeffs):
        if not a:
            continue
        for j in range(k - i):
            out[i + j] += a * y.coeffs[j]
    return RingElement(tuple(c % mod for c in out), mod)


def vertex_class(valuation: int, k: int) -> str:
    """Block letter for a valuation: ``k-1 -> 'A'``, ``k-2 -> 'B'``, ..."""
    return chr(ord("A") + (k - 1 - valuation))


def classify(e: RingElement) -> str:
    """Class tag ('A', 'B', 'C' for k=4) of a nonzero zero-divisor."""
    if e.is_zero():
        raise DomainError("zero is not a vertex of the zero-divisor graph")
    if e.coeffs[0]:
        raise DomainError(f"{e} has nonzero constant term: it is a unit")
    return vertex_class(e.valuation(), e.k)


def enumerate_zero_divisors(p, k: int = DEFAULT_DEGREE) -> list[RingElement]:
    """All nonzero zero-divisors in canonical vertex order.

    Blocks go A, B, C, ... (valuation k-1 first). Inside a block elements are
    sorted lexicographically by ``(a_{k-1}, ..., a_1)``.
    """
    p = check_prime(p)
    k = check_degree(k)
    out = []
    for v in range(k - 1, 0, -1):
        # free coefficients above the valuation, leading one nonzero
        for high in itertools.product(range(p), repeat=k - 1 - v):
            for lead in range(1, p):
                # high is (a_{k-1}, ..., a_{v+1}); lexicographic on that then a_v
                coeffs = [0] * k
                coeffs[v] = lead
                for offset, c in enumerate(high):
                    coeffs[k - 1 - offset] = c
                out.append(RingElement(tuple(coeffs), p))
    return out


def is_zero_divisor_bruteforce(e: RingElement, p: int | None = None) -> bool:
    """True iff some nonzero y has ``e * y == 0``, found by scanning the ring.

    Zero is excluded by convention and returns False.
    """
    if p is not None and p != e.p:
        raise ParameterError(f"moduli differ: {e.p} vs {p}")
    if e.is_zero():
        return False
    for coeffs in itertools.product(range(e.p), repeat=e.k):
        if not any(coeffs):
            continue
        if mul(e, RingElement(coeffs, e.p)).is_zero():
            return True
    return False


def is_zero_divisor(e: RingElement) -> bool:
    return not e.is_zero() and e.coeffs[0] == 0


def format_element(e: RingElement) -> str:
    """Text form ``a3*x^3+a2*x^2+a1*x+a0`` with zero terms omitted."""
    terms = []
    for i in range(e.k - 1, -1, -1):
        c = e.coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}*x")
        else:
            terms.append(f"{c}*x^{i}")
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"^(?:(\d+)\*?)?(x)(?:\^(\d+))?$|^(\d+)$")


def parse_element(text: str, p, k: int = DEFAULT_DEGREE) -> RingElement:
    """Inverse of :func:`format_element`. A bare ``x^2`` means ``1*x^2``."""
    p = check_prime(p)
    k = check_degree(k)
    s = text.replace(" ", "")
    if not s:
        raise ParameterError("empty element text")
    coeffs = [0] * k
    for term in s.split("+"):
        match = _TERM.match(term)
        if match is None:
            raise ParameterError(f"cannot parse term {term!r} in {text!r}")
        coef, has_x, exp, const = match.groups()
        if const is not None:
            deg, c = 0, int(const)
        else:
            deg = int(exp) if exp is not None else 1
            c = int(coef) if coef is not None else 1
        if deg >= k:
            raise ParameterError(f"degree {deg} not below k={k} in {text!r}")
        coeffs[deg] += c
    return RingElement(tuple(coeffs), p)

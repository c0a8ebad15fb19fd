import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdgraph.errors import DomainError, ParameterError
from zdgraph.ring import (
    RingElement,
    check_prime,
    classify,
    enumerate_zero_divisors,
    format_element,
    is_prime,
    is_zero_divisor,
    is_zero_divisor_bruteforce,
    mul,
    parse_element,
)

PRIMES = st.sampled_from([2, 3, 5, 7])


def elements(p, k=4):
    return st.tuples(*[st.integers(0, p - 1)] * k).map(lambda c: RingElement(c, p))


@st.composite
def element_triples(draw):
    p = draw(PRIMES)
    return p, draw(elements(p)), draw(elements(p)), draw(elements(p))


def test_x_squared_times_x_squared_is_zero():
    x2 = RingElement.from_coeffs([0, 0, 1], 3, 4)
    assert mul(x2, x2).is_zero()


def test_x_times_x_cubed_is_zero_but_x_times_x_squared_is_not():
    x = RingElement.from_coeffs([0, 1], 5, 4)
    assert (x * RingElement.from_coeffs([0, 0, 0, 1], 5)).is_zero()
    assert (x * RingElement.from_coeffs([0, 0, 1], 5, 4)).coeffs == (0, 0, 0, 1)


def test_coefficients_reduce_mod_p():
    assert RingElement((3, 4, 5, 6), 3).coeffs == (0, 1, 2, 0)


def test_mismatched_moduli_rejected():
    with pytest.raises(ParameterError):
        mul(RingElement((0, 1, 0, 0), 3), RingElement((0, 1, 0, 0), 5))


@pytest.mark.parametrize("bad", [0, 1, 4, 9, 15, -3])
def test_non_primes_rejected(bad):
    with pytest.raises(ParameterError, match="is not prime"):
        check_prime(bad)


def test_primality():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(element_triples())
@settings(max_examples=200)
def test_commutative_ring_laws(triple):
    p, a, b, c = triple
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    s = RingElement(tuple(x + y for x, y in zip(b.coeffs, c.coeffs)), p)
    lhs = a * s
    rhs = RingElement(tuple(x + y for x, y in zip((a * b).coeffs, (a * c).coeffs)), p)
    assert lhs == rhs


@given(element_triples())
@settings(max_examples=200)
def test_valuation_rule_for_products(triple):
    _, a, b, _ = triple
    if a.is_zero() or b.is_zero():
        return
    assert (a * b).is_zero() == (a.valuation() + b.valuation() >= 4)


@pytest.mark.parametrize("p", [2, 3])
def test_structural_zero_divisor_test_matches_exhaustive_search(p):
    for coeffs in itertools.product(range(p), repeat=4):
        e = RingElement(coeffs, p)
        assert is_zero_divisor(e) == is_zero_divisor_bruteforce(e)


def test_classify_blocks():
    assert classify(parse_element("2*x^3", 3)) == "A"
    assert classify(parse_element("x^3+2*x^2", 3)) == "B"
    assert classify(parse_element("x", 3)) == "C"
    with pytest.raises(DomainError):
        classify(RingElement((0, 0, 0, 0), 3))
    with pytest.raises(DomainError):
        classify(RingElement((1, 0, 0, 1), 3))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_enumeration_order_and_sizes(p):
    verts = enumerate_zero_divisors(p)
    assert len(verts) == p**3 - 1
    assert len(set(verts)) == len(verts)
    tags = [classify(v) for v in verts]
    assert tags == sorted(tags)
    assert tags.count("A") == p - 1 and tags.count("B") == p * p - p and tags.count("C") == p**3 - p * p
    for tag in "ABC":
        block = [v.coeffs[::-1] for v, t in zip(verts, tags) if t == tag]
        assert block == sorted(block)


def test_p3_element_lists():
    verts = [format_element(v) for v in enumerate_zero_divisors(3)]
    assert verts[:2] == ["1*x^3", "2*x^3"]
    assert verts[2:8] == ["1*x^2", "2*x^2", "1*x^3+1*x^2", "1*x^3+2*x^2", "2*x^3+1*x^2", "2*x^3+2*x^2"]
    assert verts[8] == "1*x"


@given(st.sampled_from([2, 3, 5]).flatmap(lambda p: elements(p)))
def test_format_parse_round_trip(e):
    assert parse_element(format_element(e), e.p) == e


def test_parse_rejects_garbage():
    with pytest.raises(ParameterError):
        parse_element("x^5", 3)
    with pytest.raises(ParameterError):
        parse_element("y+1", 3)

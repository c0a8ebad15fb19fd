import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from zdgraph.errors import ParameterError, SizeError
from zdgraph.linalg import (
    cluster,
    deflate,
    faddeev_leverrier,
    integer_root_multiplicities,
    jacobi_eigvalsh,
    poly_mul,
    poly_pow,
)


@st.composite
def symmetric(draw):
    n = draw(st.integers(1, 12))
    a = draw(arrays(np.float64, (n, n), elements=st.floats(-10, 10, allow_nan=False)))
    return (a + a.T) / 2


@given(symmetric())
@settings(max_examples=60, deadline=None)
def test_jacobi_matches_lapack(a):
    ours = jacobi_eigvalsh(a)
    ref = np.sort(np.linalg.eigvalsh(a))[::-1]
    assert np.allclose(ours, ref, atol=1e-9 * max(1.0, np.abs(a).max()) * len(a))


@given(symmetric())
@settings(max_examples=30, deadline=None)
def test_jacobi_trace_and_frobenius(a):
    vals = jacobi_eigvalsh(a)
    scale = max(1.0, np.abs(a).sum())
    assert abs(vals.sum() - np.trace(a)) <= 1e-9 * scale
    assert abs((vals**2).sum() - (a**2).sum()) <= 1e-8 * scale**2


def test_jacobi_k2_and_rejects_asymmetric():
    assert np.allclose(jacobi_eigvalsh([[0, 1], [1, 0]]), [1, -1])
    with pytest.raises(ParameterError):
        jacobi_eigvalsh([[0, 1], [0, 0]])


def test_cluster_merges_near_duplicates():
    out = cluster([1.0, 1.0 + 1e-9, -2.0, 0.0, 1e-12])
    assert [m for _, m in out] == [2, 2, 1]
    assert [v for v, _ in out] == pytest.approx([1.0, 0.0, -2.0], abs=1e-8)


def test_faddeev_leverrier_small():
    assert faddeev_leverrier(np.zeros((1, 1), dtype=int)) == [1, 0]
    assert faddeev_leverrier([[0, 1], [1, 0]]) == [1, 0, -1]
    k3 = np.ones((3, 3), dtype=int) - np.eye(3, dtype=int)
    assert faddeev_leverrier(k3) == poly_mul([1, -2], poly_pow([1, 1], 2))


def test_faddeev_leverrier_size_limit():
    with pytest.raises(SizeError):
        faddeev_leverrier(np.zeros((5, 5), dtype=int), max_n=4)


def test_integer_roots_and_deflation():
    poly = poly_mul(poly_pow([1, 1], 3), poly_mul([1, 0], [1, -2, -7]))
    roots, rest = integer_root_multiplicities(poly)
    assert roots == {-1: 3, 0: 1}
    assert rest == [1, -2, -7]
    assert deflate([1, -3, 2], 1) == ([1, -2], 0)

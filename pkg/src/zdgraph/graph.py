"""Zero-divisor graph construction, edge partition and export."""

from __future__ import annotations

import csv
import io
import json
import os
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations_with_replacement

import numpy as np

from .errors import ParameterError, SizeError
from .ring import (
    DEFAULT_DEGREE,
    RingElement,
    check_degree,
    check_prime,
    classify,
    enumerate_zero_divisors,
    format_element,
)

DEFAULT_CAP = 25_000
EXPORT_FORMATS = ("dot", "csv", "json")

# Graphviz X11 colour names, one per vertex class.
_CLASS_COLORS = {"A": "red", "B": "blue", "C": "darkgreen"}

# Target number of (row, column) cells handled per build chunk.
_CHUNK_CELLS = 1 << 22


def default_cap() -> int:
    """Vertex-count cap: ``ZDG_CAP`` from the environment, else 25 000."""
    raw = os.environ.get("ZDG_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ParameterError(f"ZDG_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ParameterError(f"ZDG_CAP must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class EdgePartition(Mapping):
    """Edge counts per unordered pair of vertex classes, keyed ``"AB"`` etc.

    Pairs with no edges are still present (count 0) for every pair of classes
    that occur in the graph.
    """

    counts: Mapping[str, int]

    def __getitem__(self, key: str) -> int:
        if key not in self.counts and key[::-1] in self.counts:
            key = key[::-1]
        return self.counts[key]

    def __iter__(self):
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def as_tuple(self) -> tuple[int, ...]:
        """``(e_AA, e_AB, e_BB, e_AC, e_BC, e_CC)``; k = 4 layout."""
        return tuple(self[key] for key in ("AA", "AB", "BB", "AC", "BC", "CC"))


@dataclass(frozen=True, eq=False)
class ZeroDivisorGraph:
    """Immutable zero-divisor graph of Z_p[x]/<x^k>.

    The adjacency matrix is held bit-packed row-wise; ``adjacency`` unpacks
    it to a boolean array on first access.
    """

    p: int
    k: int
    vertices: tuple[RingElement, ...]
    classes: tuple[str, ...]
    packed: np.ndarray = field(repr=False)
    degree_array: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.classes)

    @property
    def m(self) -> int:
        return int(self.degree_array.sum()) // 2

    @cached_property
    def adjacency(self) -> np.ndarray:
        adj = np.unpackbits(self.packed, axis=1, count=self.n).astype(bool)
        adj.setflags(write=False)
        return adj

    def class_sizes(self) -> dict[str, int]:
        sizes: dict[str, int] = {}
        for tag in self.classes:
            sizes[tag] = sizes.get(tag, 0) + 1
        return sizes

    def class_indices(self, tag: str) -> np.ndarray:
        return np.flatnonzero(np.asarray(self.classes) == tag)

    def edges(self) -> tuple[np.ndarray, np.ndarray]:
        """Endpoint arrays ``(i, j)`` with ``i < j``, one entry per edge."""
        i, j = np.nonzero(np.triu(self.adjacency, 1))
        return i, j

    def labels(self) -> list[str]:
        if not self.vertices:
            return [str(i) for i in range(self.n)]
        return [format_element(v) for v in self.vertices]


def build(p, k: int = DEFAULT_DEGREE, cap: int | None = None) -> ZeroDivisorGraph:
    """Build the zero-divisor graph by multiplying every pair of vertices.

    Pair products are evaluated as truncated convolutions over the full
    coefficient table (vectorised, row chunk at a time). No structural
    shortcut is used, so the result can serve as an oracle for closed forms.
    """
    p = check_prime(p)
    k = check_degree(k)
    cap = default_cap() if cap is None else cap
    n = p ** (k - 1) - 1
    if n > cap:
        raise SizeError(f"graph would have n={n} vertices, above the cap of {cap}")

    vertices = enumerate_zero_divisors(p, k)
    classes = tuple(classify(v) for v in vertices)
    coeffs = np.array([v.coeffs for v in vertices], dtype=np.int64).reshape(n, k)

    packed = np.zeros((n, (n + 7) // 8), dtype=np.uint8)
    degrees = np.zeros(n, dtype=np.int64)
    chunk = max(1, _CHUNK_CELLS // max(n, 1))
    for start in range(0, n, chunk):
        stop = min(n, start + chunk)
        rows = coeffs[start:stop]
        zero = np.ones((stop - start, n), dtype=bool)
        for t in range(k):
            acc = np.zeros((stop - start, n), dtype=np.int64)
            for i in range(t + 1):
                acc += np.outer(rows[:, i], coeffs[:, t - i])
            zero &= acc % p == 0
        zero[np.arange(stop - start), np.arange(start, stop)] = False
        degrees[start:stop] = zero.sum(axis=1)
        packed[start:stop] = np.packbits(zero, axis=1)

    packed.setflags(write=False)
    degrees.setflags(write=False)
    return ZeroDivisorGraph(p, k, tuple(vertices), classes, packed, degrees)


def from_adjacency(adj, classes=None) -> ZeroDivisorGraph:
    """Wrap an arbitrary symmetric 0/1 matrix (test harnesses such as K2).

    The result has no ring elements attached; ``p`` and ``k`` are 0.
    """
    adj = np.asarray(adj, dtype=bool)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
        raise ParameterError("adjacency must be a square matrix")
    if not np.array_equal(adj, adj.T) or adj.diagonal().any():
        raise ParameterError("adjacency must be symmetric with zero diagonal")
    n = adj.shape[0]
    classes = tuple(classes) if classes is not None else ("A",) * n
    if len(classes) != n:
        raise ParameterError("need one class tag per vertex")
    packed = np.packbits(adj, axis=1) if n else np.zeros((0, 0), dtype=np.uint8)
    return ZeroDivisorGraph(0, 0, (), classes, packed, adj.sum(axis=1).astype(np.int64))


def degrees(g: ZeroDivisorGraph) -> list[int]:
    return [int(d) for d in g.degree_array]


def edge_partition(g: ZeroDivisorGraph) -> EdgePartition:
    """Count edges between each pair of classes by scanning the edge list."""
    tags = sorted(set(g.classes))
    counts = {a + b: 0 for a, b in combinations_with_replacement(tags, 2)}
    if not tags:
        return EdgePartition(counts)
    i, j = g.edges()
    cls = np.asarray(g.classes)
    first, second = cls[i], cls[j]
    lo = np.where(first <= second, first, second)
    hi = np.where(first <= second, second, first)
    keys, freq = np.unique(np.char.add(lo, hi), return_counts=True) if len(i) else ([], [])
    for key, c in zip(keys, freq):
        counts[str(key)] = int(c)
    return EdgePartition(counts)


def greedy_clique(g: ZeroDivisorGraph, order=None) -> list[int]:
    """Greedy clique: keep each vertex adjacent to all kept so far."""
    adj = g.adjacency
    order = range(g.n) if order is None else order
    clique: list[int] = []
    for v in order:
        if all(adj[v, u] for u in clique):
            clique.append(int(v))
    return clique


def summary(g: ZeroDivisorGraph) -> dict:
    """JSON-ready description of the graph."""
    return {
        "p": g.p,
        "k": g.k,
        "n": g.n,
        "m": g.m,
        "classes": g.class_sizes(),
        "edge_partition": dict(edge_partition(g)),
        "degrees": degrees(g),
    }


def export(g: ZeroDivisorGraph, fmt: str) -> bytes:
    """Serialise the graph as ``dot``, ``csv`` (0/1 adjacency) or ``json``."""
    if fmt == "json":
        return (json.dumps(summary(g), indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in g.adjacency:
            writer.writerow(row.astype(int).tolist())
        return buf.getvalue().encode()
    if fmt == "dot":
        return _to_dot(g).encode()
    raise ParameterError(f"unknown export format {fmt!r}; choose from {EXPORT_FORMATS}")


def _to_dot(g: ZeroDivisorGraph) -> str:
    lines = [f'graph "Gamma(Z_{g.p}[x]/<x^{g.k}>)" {{']
    for idx, (label, tag) in enumerate(zip(g.labels(), g.classes)):
        color = _CLASS_COLORS.get(tag, "gray")
        lines.append(f'  v{idx} [label="{label}", class="{tag}", color={color}];')
    i, j = g.edges()
    for a, b in zip(i.tolist(), j.tolist()):
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"

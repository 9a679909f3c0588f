"""Seeded random instances paired with a certified characterising ordering.

Randomness comes from numpy's PCG64 bit generator seeded with the 64-bit
``seed``, so a :class:`GenSpec` reproduces the same instance on any
platform.  The density parameter ``p`` means:

* interval: interval lengths are uniform on ``[0, p * 4n]`` (endpoints are
  integers in ``[0, 4n]``, so ties are common);
* permutation: each element is displaced by noise of scale ``p * n`` before
  sorting, so ``p = 0`` is the identity and ``p = 1`` is close to uniform;
* cocomparability: each pair ``i < j`` becomes a poset relation with
  probability ``p`` before transitive closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, complement
from .orderings import VertexOrdering

FAMILIES = ("interval", "permutation", "cocomparability")


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    p: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def rng(self) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(self.seed))


def interval_graph(intervals: Sequence[tuple[float, float]]) -> tuple[Graph, VertexOrdering]:
    """Intersection graph of closed intervals (vertex ``k`` is interval ``k-1``)
    with the left-endpoint ordering, ties by right endpoint then id."""
    n = len(intervals)
    lo = np.array([a for a, _ in intervals], dtype=float).reshape(n)
    hi = np.array([b for _, b in intervals], dtype=float).reshape(n)
    adj = (lo[:, None] <= hi[None, :]) & (lo[None, :] <= hi[:, None])
    np.fill_diagonal(adj, False)
    order = sorted(range(n), key=lambda k: (lo[k], hi[k], k))
    return Graph.from_matrix(adj), VertexOrdering(k + 1 for k in order)


def permutation_graph(perm: Sequence[int]) -> tuple[Graph, VertexOrdering]:
    """Inversion graph of ``perm`` (a permutation of ``1..n``).

    Vertex ``k`` sits at position ``k`` on the top line and ``perm[k-1]`` on
    the bottom line; two vertices are adjacent iff their segments cross.
    The top-line order ``(1, ..., n)`` is umbrella-free.
    """
    perm = np.asarray(perm).reshape(len(perm))
    n = len(perm)
    ks = np.arange(n)
    adj = (ks[:, None] - ks[None, :]) * (perm[:, None] - perm[None, :]) < 0
    return Graph.from_matrix(adj), VertexOrdering(range(1, n + 1))


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    reach = np.array(rel, dtype=bool)
    for k in range(reach.shape[0]):
        reach |= reach[:, k : k + 1] & reach[k : k + 1, :]
    return reach


def poset_cocomparability(rel: np.ndarray) -> tuple[Graph, VertexOrdering]:
    """Incomparability graph of the strict order generated by ``rel``.

    ``rel`` must only relate ``i < j`` (upper triangular), so the identity
    ordering is a linear extension and therefore umbrella-free.
    """
    reach = transitive_closure(rel)
    comparable = reach | reach.T
    comp = Graph.from_matrix(comparable & ~np.eye(len(rel), dtype=bool))
    return complement(comp), VertexOrdering(range(1, len(rel) + 1))


def gen_interval(spec: GenSpec) -> tuple[Graph, VertexOrdering]:
    rng = spec.rng()
    top = 4 * spec.n
    left = rng.integers(0, top + 1, size=spec.n)
    length = rng.integers(0, int(round(spec.p * top)) + 1, size=spec.n)
    right = np.minimum(left + length, top)
    return interval_graph(list(zip(left.tolist(), right.tolist())))


def gen_permutation(spec: GenSpec) -> tuple[Graph, VertexOrdering]:
    rng = spec.rng()
    n = spec.n
    keys = np.arange(n) + spec.p * n * rng.random(n)
    perm = np.empty(n, dtype=int)
    perm[np.argsort(keys, kind="stable")] = np.arange(1, n + 1)
    return permutation_graph(perm)


def gen_cocomparability(spec: GenSpec) -> tuple[Graph, VertexOrdering]:
    rng = spec.rng()
    n = spec.n
    rel = np.triu(rng.random((n, n)) < spec.p, 1)
    return poset_cocomparability(rel)


def generate(spec: GenSpec) -> tuple[Graph, VertexOrdering]:
    return {"interval": gen_interval, "permutation": gen_permutation, "cocomparability": gen_cocomparability}[
        spec.family
    ](spec)

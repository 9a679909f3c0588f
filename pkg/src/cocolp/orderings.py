"""Vertex orderings and their characterising predicates.

All three checkers scan triples in position order and report the
lexicographically smallest violating ``(pos(a), pos(b), pos(c))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import OrderingError
from .graph import Graph


class VertexOrdering:
    """A sequence of distinct vertex ids with O(1) position lookup.

    Positions are 1-based.  ``x <_sigma y`` is ``sigma.before(x, y)``.
    """

    __slots__ = ("seq", "_pos")

    def __init__(self, seq: Iterable[int]):
        self.seq = tuple(int(v) for v in seq)
        self._pos = {v: i for i, v in enumerate(self.seq, start=1)}
        if len(self._pos) != len(self.seq):
            raise OrderingError(f"ordering repeats a vertex: {self.seq}")

    def pos(self, v: int) -> int:
        return self._pos[v]

    def before(self, x: int, y: int) -> bool:
        return self._pos[x] < self._pos[y]

    def __contains__(self, v) -> bool:
        return v in self._pos

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self) -> Iterator[int]:
        return iter(self.seq)

    def __getitem__(self, i):
        return self.seq[i]

    def __eq__(self, other):
        if isinstance(other, VertexOrdering):
            return self.seq == other.seq
        if isinstance(other, (tuple, list)):
            return self.seq == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.seq)

    def __repr__(self):
        return f"VertexOrdering({self.seq})"

    def relabel(self, mapping) -> "VertexOrdering":
        return VertexOrdering(mapping[v] for v in self.seq)


def as_ordering(sigma: VertexOrdering | Sequence[int]) -> VertexOrdering:
    return sigma if isinstance(sigma, VertexOrdering) else VertexOrdering(sigma)


def check_ordering(g: Graph, sigma: VertexOrdering | Sequence[int]) -> VertexOrdering:
    """Coerce ``sigma`` and verify it is a permutation of ``g``'s vertices."""
    sigma = as_ordering(sigma)
    if len(sigma) != g.n:
        raise OrderingError(f"ordering has {len(sigma)} vertices, graph has {g.n}")
    if set(sigma.seq) != set(g.vertices):
        raise OrderingError("ordering is not a permutation of the graph's vertices")
    return sigma


class TripleKind(Enum):
    I_VIOLATION = "I-violation"
    UMBRELLA = "umbrella"
    BAD_TRIPLE = "bad-triple"


@dataclass(frozen=True)
class TripleWitness:
    a: int
    b: int
    c: int
    kind: TripleKind
    d: int | None = None

    def __str__(self):
        return f"{self.kind.value} ({self.a}, {self.b}, {self.c})"


def _positional_matrix(g: Graph, sigma: VertexOrdering) -> np.ndarray:
    # A[p, q] is True iff the vertices at 0-based positions p and q are adjacent
    idx = np.asarray(sigma.seq, dtype=np.intp)
    return g.matrix[np.ix_(idx, idx)]


def _first_triple(g: Graph, sigma: VertexOrdering, kind: TripleKind) -> TripleWitness | None:
    A = _positional_matrix(g, sigma)
    n = len(sigma)
    for p in range(n):
        row = A[p]
        for q in range(p + 1, n):
            if row[q]:
                continue
            # candidates r > q with (p, r) an edge
            cand = row[q + 1 :].copy()
            if kind is TripleKind.UMBRELLA:
                cand &= ~A[q, q + 1 :]
            hits = np.flatnonzero(cand)
            if hits.size:
                r = q + 1 + int(hits[0])
                s = sigma.seq
                return TripleWitness(s[p], s[q], s[r], kind)
    return None


def is_i_ordering(g: Graph, sigma) -> tuple[bool, TripleWitness | None]:
    """True iff ``x < y < z`` and ``xz`` in E always imply ``xy`` in E."""
    sigma = check_ordering(g, sigma)
    w = _first_triple(g, sigma, TripleKind.I_VIOLATION)
    return w is None, w


def is_umbrella_free(g: Graph, sigma) -> tuple[bool, TripleWitness | None]:
    """True iff ``x < y < z`` and ``xz`` in E imply ``xy`` or ``yz`` in E."""
    sigma = check_ordering(g, sigma)
    w = _first_triple(g, sigma, TripleKind.UMBRELLA)
    return w is None, w


def find_bad_triple(g: Graph, sigma) -> TripleWitness | None:
    """Return the first bad triple of ``sigma``, or None for an LDFS ordering.

    ``(a, b, c)`` with ``a < b < c``, ``ac`` in E, ``ab`` not in E is good
    when some ``d`` strictly between ``a`` and ``b`` has ``db`` in E and
    ``dc`` not in E.  For fixed ``(a, b)`` the triple is bad for exactly the
    ``c`` adjacent to ``a`` and to every such candidate ``d``.
    """
    sigma = check_ordering(g, sigma)
    A = _positional_matrix(g, sigma)
    n = len(sigma)
    for p in range(n):
        for q in range(p + 1, n):
            if A[p, q]:
                continue
            cand = A[p, q + 1 :].copy()
            if not cand.any():
                continue
            ds = p + 1 + np.flatnonzero(A[p + 1 : q, q])
            if ds.size:
                cand &= A[np.ix_(ds, np.arange(q + 1, n))].all(axis=0)
            hits = np.flatnonzero(cand)
            if hits.size:
                s = sigma.seq
                return TripleWitness(s[p], s[q], s[q + 1 + int(hits[0])], TripleKind.BAD_TRIPLE)
    return None


def d_vertex(g: Graph, sigma, a: int, b: int, c: int) -> int | None:
    """Leftmost d-vertex of the triple ``(a, b, c)``, if any."""
    sigma = as_ordering(sigma)
    for d in sigma.seq[sigma.pos(a) : sigma.pos(b) - 1]:
        if g.has_edge(d, b) and not g.has_edge(d, c):
            return d
    return None


def is_ldfs_ordering(g: Graph, sigma) -> tuple[bool, TripleWitness | None]:
    w = find_bad_triple(g, sigma)
    return w is None, w


def restrict(sigma, s: Iterable[int]) -> VertexOrdering:
    """Subsequence of ``sigma`` on the vertices in ``s``, order preserved.

    Ids are kept; use ``.relabel(to_new)`` with the mapping returned by
    :func:`~cocolp.graph.induced_subgraph` to move to subgraph ids.
    """
    sigma = as_ordering(sigma)
    keep = set(s)
    missing = keep.difference(sigma.seq)
    if missing:
        raise OrderingError(f"vertices not in ordering: {sorted(missing)}")
    return VertexOrdering(v for v in sigma.seq if v in keep)

"""Lexicographic depth-first searches and the rightmost-neighbor sweep.

Labels are tuples of visit numbers with the most recent number first, so
they are strictly decreasing and Python's tuple ordering is exactly the
lexicographic order the searches need (``()`` sorts below everything).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .graph import Graph, PathCover
from .orderings import VertexOrdering, check_ordering, is_umbrella_free

LdfsLabel = tuple[int, ...]


def _lex_search(g: Graph, initial: dict[int, LdfsLabel], tiebreak) -> VertexOrdering:
    labels: dict[int, LdfsLabel] = {v: () for v in g.vertices}
    labels.update(initial)
    order = []
    for i in range(1, g.n + 1):
        v = max(labels, key=lambda w: (labels[w], tiebreak(w)))
        del labels[v]
        order.append(v)
        for w in g.neighbors(v):
            if w in labels:
                labels[w] = (i,) + labels[w]
    return VertexOrdering(order)


def ldfs(g: Graph, u: int) -> VertexOrdering:
    """Generic LDFS from ``u``; label ties go to the lowest vertex id."""
    if not 1 <= u <= g.n:
        raise ValueError(f"start vertex {u} not in graph")
    if not g.is_connected():
        raise PreconditionError("generic LDFS requires a connected graph")
    return _lex_search(g, {u: (0,)}, lambda w: -w)


def ldfs_plus(g: Graph, pi) -> VertexOrdering:
    """LDFS breaking every label tie by the rightmost vertex of ``pi``.

    Works on disconnected graphs too: once every remaining label is empty
    the rule simply restarts at the rightmost unvisited vertex.
    """
    pi = check_ordering(g, pi)
    return _lex_search(g, {}, pi.pos)


@dataclass(frozen=True)
class RmnResult:
    ordering: VertexOrdering
    cover: PathCover


def rmn(g: Graph, sigma) -> RmnResult:
    """Rightmost-neighbor sweep; each restart opens a new path of the cover."""
    sigma = check_ordering(g, sigma)
    visited = set()
    order: list[int] = []
    paths = []
    # scanning from the right yields the rightmost unvisited vertex
    right_to_left = sigma.seq[::-1]
    nbrs_rtl = {v: sorted(g.neighbors(v), key=sigma.pos, reverse=True) for v in g.vertices}
    start_idx = 0
    while len(order) < g.n:
        while right_to_left[start_idx] in visited:
            start_idx += 1
        x = right_to_left[start_idx]
        path = [x]
        visited.add(x)
        while True:
            y = next((w for w in nbrs_rtl[x] if w not in visited), None)
            if y is None:
                break
            path.append(y)
            visited.add(y)
            x = y
        order.extend(path)
        paths.append(tuple(path))
    return RmnResult(VertexOrdering(order), PathCover(tuple(paths)))


def min_path_cover(g: Graph, pi, check: bool = True) -> PathCover:
    """Minimum path cover of a cocomparability graph from an umbrella-free ``pi``."""
    pi = check_ordering(g, pi)
    if check:
        ok, witness = is_umbrella_free(g, pi)
        if not ok:
            raise PreconditionError("input ordering is not umbrella-free", witness)
    return rmn(g, ldfs_plus(g, pi)).cover



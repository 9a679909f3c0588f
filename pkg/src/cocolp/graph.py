"""Undirected simple graphs, edge-list I/O and elementary operations.

Vertices are the dense integers ``1..n``.  Input files may use arbitrary
vertex labels (in the plain pair format); those are mapped to dense ids in
order of first appearance and the labels are kept on the graph for output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import OrderingError, ParseError

Path = tuple[int, ...]


class Graph:
    """Immutable undirected simple graph on vertices ``1..n``.

    Adjacency is held twice: a boolean matrix for O(1) edge queries and
    sorted neighbor tuples for scans.  Row/column 0 of the matrix is unused
    so that vertex ids index it directly.
    """

    __slots__ = ("n", "_adj", "_nbrs", "_labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = np.zeros((n + 1, n + 1), dtype=bool)
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        adj.flags.writeable = False
        self.n = n
        self._adj = adj
        self._nbrs = tuple(() if v == 0 else tuple(int(w) for w in np.flatnonzero(adj[v])) for v in range(n + 1))
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n or len(set(labels)) != n:
                raise ValueError("labels must be n distinct strings")
        self._labels = labels

    @classmethod
    def from_matrix(cls, adj: np.ndarray) -> "Graph":
        """Build from a 0-based symmetric boolean ``n x n`` matrix."""
        adj = np.asarray(adj, dtype=bool)
        rows, cols = np.nonzero(np.triu(adj, 1))
        return cls(adj.shape[0], zip((rows + 1).tolist(), (cols + 1).tolist()))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return int(self._adj.sum()) // 2

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    @property
    def matrix(self) -> np.ndarray:
        """Read-only ``(n+1) x (n+1)`` adjacency matrix indexed by vertex id."""
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in self.vertices:
            for v in self._nbrs[u]:
                if u < v:
                    yield (u, v)

    def label(self, v: int) -> str:
        return self._labels[v - 1] if self._labels is not None else str(v)

    def vertex_of(self, label: str) -> int:
        """Inverse of :meth:`label`."""
        if self._labels is None:
            try:
                v = int(label)
            except ValueError:
                raise KeyError(label) from None
            if not 1 <= v <= self.n:
                raise KeyError(label)
            return v
        return self._labels.index(label) + 1

    def with_labels(self, labels: Sequence[str] | None) -> "Graph":
        return Graph(self.n, self.edges(), labels)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {1}
        stack = [1]
        while stack:
            for w in self._nbrs[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._adj, other._adj)

    def __hash__(self):
        return hash((self.n, self._adj.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class PathCover:
    paths: tuple[Path, ...]

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def validate(self, g: Graph) -> None:
        """Raise ``ValueError`` unless this is a partition of V(g) into paths."""
        seen: set[int] = set()
        for p in self.paths:
            if not p:
                raise ValueError("empty path in cover")
            ok, idx = is_valid_path(g, p)
            if not ok:
                raise ValueError(f"invalid path {p} at index {idx}")
            if seen.intersection(p):
                raise ValueError(f"path {p} overlaps another path")
            seen.update(p)
        if seen != set(g.vertices):
            raise ValueError("cover does not span every vertex")


# --------------------------------------------------------------------------- #
# operations


def complement(g: Graph) -> Graph:
    adj = ~g.matrix[1:, 1:]
    np.fill_diagonal(adj, False)
    return Graph.from_matrix(adj).with_labels(g.labels)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int], tuple[int, ...]]:
    """Return ``(g[s], old->new, new->old)``.

    New ids follow increasing old id.  ``new->old`` is a tuple whose index
    ``k-1`` holds the old id of new vertex ``k``.
    """
    keep = sorted(set(s))
    for v in keep:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} out of range 1..{g.n}")
    to_new = {v: k for k, v in enumerate(keep, start=1)}
    idx = np.asarray(keep, dtype=np.intp)
    sub = Graph.from_matrix(g.matrix[np.ix_(idx, idx)]) if keep else Graph(0)
    if g.labels is not None:
        sub = sub.with_labels([g.label(v) for v in keep])
    return sub, to_new, tuple(keep)


def is_valid_path(g: Graph, p: Sequence[int]) -> tuple[bool, int | None]:
    """Check distinctness and consecutive adjacency.

    Returns ``(True, None)`` or ``(False, i)`` where ``i`` is the first
    offending index: an out-of-range or repeated vertex, or the second vertex
    of a non-adjacent consecutive pair.
    """
    seen: set[int] = set()
    for i, v in enumerate(p):
        if not 1 <= v <= g.n or v in seen:
            return False, i
        if i > 0 and not g.has_edge(p[i - 1], v):
            return False, i
        seen.add(v)
    return True, None


# --------------------------------------------------------------------------- #
# text formats


def parse_graph(text: str) -> Graph:
    """Parse a DIMACS-style (``p``/``e``/``c`` lines) or plain pair edge list.

    In the pair format each line is ``<u> <v>``; a line with a single token
    declares an isolated vertex and ``#`` starts a comment.  Labels are
    arbitrary tokens, numbered by first appearance.
    """
    lines = text.splitlines()
    for raw in lines:
        tok = raw.split()
        if not tok or tok[0] == "c" or tok[0].startswith("#"):
            continue
        if tok[0] == "p":
            return _parse_dimacs(lines)
        break
    return _parse_pairs(lines)


def _parse_dimacs(lines: list[str]) -> Graph:
    n = declared_m = None
    edges: set[tuple[int, int]] = set()
    edge_lines = 0
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(lines, start=1):
        tok = raw.split()
        if tok[:2] == ["c", "label"] and len(tok) == 4 and tok[2].isdigit():
            labels[int(tok[2])] = tok[3]
            continue
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            # "p <n> <m>" or DIMACS "p edge <n> <m>"
            nums = tok[2:] if len(tok) == 4 else tok[1:]
            if len(nums) != 2:
                raise ParseError("expected 'p <n> <m>'", lineno)
            n, declared_m = _ints(nums, lineno)
            if n < 0 or declared_m < 0:
                raise ParseError("negative count", lineno)
        elif tok[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(tok) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            u, v = _ints(tok[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.add((min(u, v), max(u, v)))
            edge_lines += 1
        else:
            raise ParseError(f"unrecognised line type {tok[0]!r}", lineno)
    if edge_lines != declared_m:
        raise ParseError(f"problem line declares {declared_m} edges, found {edge_lines}")
    names = None
    if labels:
        if set(labels) != set(range(1, n + 1)) or len(set(labels.values())) != n:
            raise ParseError("label comments must name every vertex exactly once")
        names = [labels[v] for v in range(1, n + 1)]
    return Graph(n, sorted(edges), names)


def _parse_pairs(lines: list[str]) -> Graph:
    ids: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()

    def vid(label: str) -> int:
        if label not in ids:
            ids[label] = len(ids) + 1
        return ids[label]

    for lineno, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        if len(body) == 1:
            vid(body[0])
            continue
        if len(body) != 2:
            raise ParseError("expected '<u> <v>'", lineno)
        a, b = body
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        u, v = vid(a), vid(b)
        edges.add((min(u, v), max(u, v)))
    labels = list(ids)
    # keep plain integer files numbered as written when they already are 1..n
    if all(x.isdigit() for x in labels) and sorted(int(x) for x in labels) == list(range(1, len(labels) + 1)):
        relabel = {ids[x]: int(x) for x in labels}
        return Graph(len(labels), sorted((min(relabel[u], relabel[v]), max(relabel[u], relabel[v])) for u, v in edges))
    return Graph(len(labels), sorted(edges), labels)


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def format_graph(g: Graph) -> str:
    """Serialise as DIMACS.  Labels, if any, are written as ``c label`` lines."""
    out = []
    if g.labels is not None:
        out.extend(f"c label {v} {g.label(v)}" for v in g.vertices)
    out.append(f"p {g.n} {g.m}")
    out.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def parse_vertex_line(text: str, g: Graph) -> tuple[int, ...]:
    """Read one line of space-separated vertex labels as vertex ids."""
    tokens = [t for line in text.splitlines() if not line.lstrip().startswith(("#", "c ")) for t in line.split()]
    try:
        return tuple(g.vertex_of(t) for t in tokens)
    except KeyError as exc:
        raise OrderingError(f"unknown vertex {exc.args[0]!r}") from None


def format_vertex_line(g: Graph, vertices: Iterable[int]) -> str:
    return " ".join(g.label(v) for v in vertices)

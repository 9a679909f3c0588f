"""Longest path on cocomparability graphs by dynamic programming over normal paths.

Positions ``1..n`` refer to an LDFS umbrella-free ordering
``sigma = (u_1, ..., u_n)``; position ``n+1`` is an isolated dummy vertex.
For ``i <= j`` the subproblem ``G(i, j)`` is induced by those of
``u_i..u_j`` that are not adjacent to ``u_{j+1}``.  Entry ``(i, j, k)`` of
the table holds the vertex count of a longest normal path of ``G(i, j)``
ending at ``u_k`` plus an O(1) instruction for rebuilding that path.

All public indices (``i``, ``j``, ``k``, ``x``) are 1-based positions.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import IntEnum
from typing import Sequence

import numpy as np

from .errors import CapExceededError, InternalConsistencyError, PreconditionError
from .graph import Graph, Path, induced_subgraph, is_valid_path
from .orderings import VertexOrdering, check_ordering, find_bad_triple, is_umbrella_free, restrict
from .search import ldfs_plus, rmn

DEFAULT_MAX_N = 400
MAX_N_ENV = "COCOLP_MAX_DP_N"


class Step(IntEnum):
    """Reconstruction instruction stored with each table entry."""

    ABSENT = 0  # u_k not in G(i, j)
    COPY_UP = 1  # P(u_k; i+1, j)
    SINGLE = 2  # (u_i)
    EXTEND = 3  # (P(u_x; i+1, j), u_i)
    GLUE = 4  # (P(u_x; i+1, j), u_i, P(u_k; i+1, x-1))


class AugmentedOrdering:
    """An ordering of ``g`` with the dummy isolated vertex appended.

    ``adj`` is the adjacency matrix re-indexed by position, shape
    ``(n+2, n+2)``; row/column 0 is unused and row/column ``n+1`` (the
    dummy) is empty.
    """

    __slots__ = ("graph", "sigma", "n", "adj")

    def __init__(self, g: Graph, sigma):
        sigma = check_ordering(g, sigma)
        n = g.n
        adj = np.zeros((n + 2, n + 2), dtype=bool)
        idx = np.asarray(sigma.seq, dtype=np.intp)
        adj[1 : n + 1, 1 : n + 1] = g.matrix[np.ix_(idx, idx)]
        adj.flags.writeable = False
        self.graph = g
        self.sigma = sigma
        self.n = n
        self.adj = adj

    def vertex(self, k: int) -> int:
        return self.sigma.seq[k - 1]

    def members(self, i: int, j: int) -> np.ndarray:
        """Boolean mask over positions ``0..n`` of ``V(G(i, j))``."""
        ks = np.arange(self.n + 1)
        return (ks >= max(i, 1)) & (ks <= j) & ~self.adj[j + 1, : self.n + 1]


def in_g_ij(sigma: AugmentedOrdering, i: int, j: int, k: int) -> bool:
    n = sigma.n
    for name, v in (("i", i), ("j", j), ("k", k)):
        if not 1 <= v <= n:
            raise ValueError(f"index {name}={v} outside 1..{n}")
    return i <= k <= j and not sigma.adj[k, j + 1]


# --------------------------------------------------------------------------- #
# path predicates


def is_typical(g: Graph, sigma, p: Sequence[int]) -> bool:
    sigma = check_ordering(g, sigma)
    if not is_valid_path(g, p)[0]:
        return False
    if len(p) <= 1:
        return True
    if max(p, key=sigma.pos) != p[0]:
        return False
    in_path = [w for w in p[1:] if g.has_edge(p[0], w)]
    return max(in_path, key=sigma.pos) == p[1]


def _normal_by_definition(g: Graph, sigma: VertexOrdering, p: Sequence[int]) -> bool:
    if len(p) == 0:
        return True
    if max(p, key=sigma.pos) != p[0]:
        return False
    for i in range(1, len(p)):
        rest = [w for w in p[i:] if g.has_edge(p[i - 1], w)]
        if max(rest, key=sigma.pos) != p[i]:
            return False
    return True


def is_normal(g: Graph, sigma, p: Sequence[int]) -> bool:
    """Normal path test, cross-checked against the rightmost-neighbor sweep.

    A path is normal exactly when its vertex order equals the sweep over
    ``sigma`` restricted to the path's vertices.
    """
    sigma = check_ordering(g, sigma)
    p = tuple(p)
    if not is_valid_path(g, p)[0]:
        return False
    direct = _normal_by_definition(g, sigma, p)
    sub, to_new, to_old = induced_subgraph(g, p)
    sweep = rmn(sub, restrict(sigma, p).relabel(to_new)).ordering
    via_sweep = tuple(to_old[k - 1] for k in sweep) == p
    if direct != via_sweep:
        raise InternalConsistencyError(f"normality checks disagree on {p}")
    return direct


# --------------------------------------------------------------------------- #
# the table


@dataclass(eq=False)
class DpTable:
    sigma: AugmentedOrdering
    lengths: np.ndarray  # (n+2, n+1, n+1); 0 marks an absent entry
    steps: np.ndarray  # Step codes, same shape
    args: np.ndarray  # the x of EXTEND / GLUE, same shape

    @property
    def n(self) -> int:
        return self.sigma.n

    def length(self, i: int, j: int, k: int) -> int | None:
        v = int(self.lengths[i, j, k])
        return v or None

    def instruction(self, i: int, j: int, k: int) -> tuple[Step, int | None]:
        step = Step(int(self.steps[i, j, k]))
        x = int(self.args[i, j, k]) if step in (Step.EXTEND, Step.GLUE) else None
        return step, x

    def final_lengths(self) -> np.ndarray:
        """``l(u_k; 1, n)`` for ``k = 1..n`` (index 0 is position 1)."""
        return self.lengths[1, self.n, 1:].astype(int)


def check_size(n: int, max_n: int | None) -> None:
    if max_n is None:
        max_n = int(os.environ.get(MAX_N_ENV, DEFAULT_MAX_N))
    if n > max_n:
        raise CapExceededError(
            f"n={n} exceeds the DP size guard ({max_n}); the table needs ~5*n^3 bytes. "
            f"Raise it with {MAX_N_ENV} or --max-n."
        )


def build_dp(g: Graph, sigma, *, check: bool = True, max_n: int | None = None, engine: str = "vector") -> DpTable:
    """Fill the table for ``G(i, j)``, ``i = n..1``, ``j = i..n``.

    ``sigma`` must be an LDFS umbrella-free ordering of ``g`` (verified
    unless ``check`` is false).  ``engine="loops"`` runs a direct scalar
    transcription of the recurrence; the default vectorises the inner loops
    over candidate endpoints and produces an identical table.
    """
    aug = sigma if isinstance(sigma, AugmentedOrdering) else AugmentedOrdering(g, sigma)
    if aug.graph is not g and aug.graph != g:
        raise ValueError("augmented ordering belongs to a different graph")
    check_size(g.n, max_n)
    if check:
        ok, witness = is_umbrella_free(g, aug.sigma)
        if not ok:
            raise PreconditionError("ordering is not umbrella-free", witness)
        witness = find_bad_triple(g, aug.sigma)
        if witness is not None:
            raise PreconditionError("ordering is not an LDFS ordering", witness)

    n = g.n
    dtype = np.uint16 if n < 2**15 else np.uint32
    shape = (n + 2, n + 1, n + 1)
    lengths = np.zeros(shape, dtype=dtype)
    steps = np.zeros(shape, dtype=np.uint8)
    args = np.zeros(shape, dtype=dtype)
    if engine == "vector":
        _fill_vector(aug, lengths, steps, args)
    elif engine == "loops":
        _fill_loops(aug, lengths, steps, args)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return DpTable(aug, lengths, steps, args)


def _fill_loops(aug: AugmentedOrdering, L, S, X) -> None:
    n, adj = aug.n, aug.adj

    def member(i, j, k):
        return i <= k <= j and not adj[k, j + 1]

    for i in range(n, 0, -1):
        for j in range(i, n + 1):
            for y in range(i + 1, j + 1):
                if member(i + 1, j, y):
                    L[i, j, y] = L[i + 1, j, y]
                    S[i, j, y] = Step.COPY_UP
            ui_in = member(i, j, i)
            if ui_in:
                L[i, j, i] = 1
                S[i, j, i] = Step.SINGLE
            for x in range(i + 1, j + 1):
                if not (member(i + 1, j, x) and ui_in and adj[i, x]):
                    continue
                lx = int(L[i + 1, j, x])
                if L[i, j, i] < lx + 1:
                    L[i, j, i] = lx + 1
                    S[i, j, i] = Step.EXTEND
                    X[i, j, i] = x
                for y in range(i + 1, x):
                    if not member(i + 1, x - 1, y):
                        continue
                    cand = lx + int(L[i + 1, x - 1, y]) + 1
                    if L[i, j, y] < cand:
                        L[i, j, y] = cand
                        S[i, j, y] = Step.GLUE
                        X[i, j, y] = x


def _fill_vector(aug: AugmentedOrdering, L, S, X) -> None:
    # Within one (i, j) the glue updates for different y are independent and
    # read only row i+1, so the sequential strict-"<" scan over x collapses to
    # a column-wise max with first-occurrence argmax.
    n, adj = aug.n, aug.adj
    ks = np.arange(n + 1)
    nonadj = ~adj[:, : n + 1]
    for i in range(n, 0, -1):
        nxt = L[i + 1]
        left = ks >= i + 1
        for j in range(i, n + 1):
            mem_next = left & (ks <= j) & nonadj[j + 1]
            row = np.where(mem_next, nxt[j], 0).astype(np.int64)
            step = np.where(mem_next, Step.COPY_UP, Step.ABSENT).astype(np.uint8)
            arg = np.zeros(n + 1, dtype=np.int64)
            if not adj[i, j + 1]:
                row[i] = 1
                step[i] = Step.SINGLE
                xs = np.flatnonzero(mem_next & adj[i, : n + 1])
                if xs.size:
                    lx = nxt[j, xs].astype(np.int64)
                    best = int(lx.max())
                    if 1 < best + 1:
                        row[i] = best + 1
                        step[i] = Step.EXTEND
                        arg[i] = xs[int(lx.argmax())]
                    glue_ok = left & (ks[None, :] <= xs[:, None] - 1) & nonadj[xs]
                    cand = np.where(glue_ok, lx[:, None] + nxt[xs - 1] + 1, 0)
                    top = cand.max(axis=0)
                    better = top > row
                    if better.any():
                        row[better] = top[better]
                        step[better] = Step.GLUE
                        arg[better] = xs[cand.argmax(axis=0)[better]]
            L[i, j] = row
            S[i, j] = step
            X[i, j] = arg


def reconstruct(table: DpTable, i: int, j: int, k: int) -> Path:
    """Unwind the instructions of entry ``(i, j, k)`` into a vertex path."""
    return tuple(table.sigma.vertex(p) for p in reconstruct_positions(table, i, j, k))


def reconstruct_positions(table: DpTable, i: int, j: int, k: int) -> tuple[int, ...]:
    if table.steps[i, j, k] == Step.ABSENT:
        raise ValueError(f"no table entry at ({i}, {j}, {k})")
    out: list[int] = []
    # explicit stack; ints are emitted positions, tuples are pending entries
    stack: list = [(i, j, k)]
    while stack:
        item = stack.pop()
        if isinstance(item, int):
            out.append(item)
            continue
        a, b, c = item
        step = table.steps[a, b, c]
        x = int(table.args[a, b, c])
        if step == Step.COPY_UP:
            stack.append((a + 1, b, c))
        elif step == Step.SINGLE:
            out.append(a)
        elif step == Step.EXTEND:
            stack.append(a)
            stack.append((a + 1, b, x))
        elif step == Step.GLUE:
            stack.append((a + 1, x - 1, c))
            stack.append(a)
            stack.append((a + 1, b, x))
        else:
            raise InternalConsistencyError(f"dangling reference to entry ({a}, {b}, {c})")
    if len(out) != table.lengths[i, j, k] or len(set(out)) != len(out) or out[-1] != k:
        raise InternalConsistencyError(f"entry ({i}, {j}, {k}) rebuilt as {out}")
    return tuple(out)


# --------------------------------------------------------------------------- #
# pipeline


@dataclass(frozen=True)
class LongestPathResult:
    path: Path
    sigma: VertexOrdering
    table: DpTable | None

    @property
    def length(self) -> int:
        return len(self.path)


def solve(g: Graph, pi, *, check: bool = True, max_n: int | None = None, engine: str = "vector") -> LongestPathResult:
    """Full pipeline: LDFS+ on ``pi``, table fill, best final entry, unwinding."""
    pi = check_ordering(g, pi)
    if check:
        ok, witness = is_umbrella_free(g, pi)
        if not ok:
            raise PreconditionError("input ordering is not umbrella-free", witness)
    sigma = ldfs_plus(g, pi)
    if g.n == 0:
        return LongestPathResult((), sigma, None)
    table = build_dp(g, sigma, check=check, max_n=max_n, engine=engine)
    best = table.final_lengths()
    k = int(best.argmax()) + 1
    path = reconstruct(table, 1, g.n, k)
    ok, _ = is_valid_path(g, path)
    if not ok or (check and not is_normal(g, sigma, path)):
        raise InternalConsistencyError(f"reconstructed path {path} is not a normal path")
    return LongestPathResult(path, sigma, table)


def longest_path(g: Graph, pi, *, check: bool = True, max_n: int | None = None) -> Path:
    return solve(g, pi, check=check, max_n=max_n).path

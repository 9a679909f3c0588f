"""Exponential exact references for checking the polynomial algorithms.

Everything here refuses inputs above a configurable vertex cap rather than
degrading; an oracle that is sometimes wrong is worse than none.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import CapExceededError
from .graph import Graph, Path, PathCover, is_valid_path

LONGEST_CAP = 14
COVER_CAP = 10
MAXIMAL_CAP = 10


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapExceededError(f"{what} oracle refuses n={g.n} (cap {cap})")


def _nbr_masks(g: Graph) -> list[int]:
    # bit v-1 stands for vertex v
    return [sum(1 << (w - 1) for w in g.neighbors(v)) for v in g.vertices]


def path_endpoints(g: Graph) -> list[int]:
    """``ends[mask]``: bitmask of vertices ending some path with vertex set ``mask``.

    A mask is the vertex set of a simple path iff ``ends[mask]`` is nonzero.
    """
    n = g.n
    nbr = _nbr_masks(g)
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    # masks only grow, so increasing numeric order is a topological order
    for mask in range(1, 1 << n):
        e = ends[mask]
        if not e:
            continue
        reach = 0
        while e:
            low = e & -e
            reach |= nbr[low.bit_length() - 1]
            e ^= low
        reach &= ~mask
        while reach:
            low = reach & -reach
            ends[mask | low] |= low
            reach ^= low
    return ends


def _path_on(g: Graph, ends: list[int], mask: int, last: int | None = None) -> Path:
    nbr = _nbr_masks(g)
    out = []
    if last is None:
        last = (ends[mask] & -ends[mask]).bit_length() - 1
    while True:
        out.append(last + 1)
        prev = mask & ~(1 << last)
        if not prev:
            break
        cands = ends[prev] & nbr[last]
        last = (cands & -cands).bit_length() - 1
        mask = prev
    return tuple(reversed(out))


def brute_longest_path(g: Graph, cap: int = LONGEST_CAP) -> Path:
    """A maximum-cardinality simple path, by DP over all vertex subsets."""
    _check_cap(g, cap, "longest-path")
    if g.n == 0:
        return ()
    ends = path_endpoints(g)
    best = max((m for m in range(1, 1 << g.n) if ends[m]), key=int.bit_count)
    return _path_on(g, ends, best)


def brute_min_path_cover(g: Graph, cap: int = COVER_CAP) -> PathCover:
    """Minimum partition of V into paths, by subset DP over path vertex sets."""
    _check_cap(g, cap, "path-cover")
    n = g.n
    if n == 0:
        return PathCover(())
    ends = path_endpoints(g)
    full = (1 << n) - 1
    INF = n + 1
    best = [INF] * (1 << n)
    choice = [0] * (1 << n)
    best[0] = 0
    for mask in range(1, full + 1):
        low = mask & -mask
        rest = mask ^ low
        # the path containing the lowest vertex; enumerate its other members
        sub = rest
        while True:
            part = sub | low
            if ends[part] and best[mask ^ part] + 1 < best[mask]:
                best[mask] = best[mask ^ part] + 1
                choice[mask] = part
            if sub == 0:
                break
            sub = (sub - 1) & rest
    paths = []
    mask = full
    while mask:
        part = choice[mask]
        paths.append(_path_on(g, ends, part))
        mask ^= part
    return PathCover(tuple(paths))


def brute_is_maximal_path(g: Graph, p: Sequence[int], cap: int = MAXIMAL_CAP) -> bool:
    """True iff no simple path's vertex set strictly contains ``V(p)``."""
    _check_cap(g, cap, "maximal-path")
    ok, idx = is_valid_path(g, p)
    if not ok:
        raise ValueError(f"not a path of the graph (index {idx})")
    if not p:
        return g.n == 0
    ends = path_endpoints(g)
    mask = sum(1 << (v - 1) for v in p)
    return not any(ends[m] and m & mask == mask and m != mask for m in range(1 << g.n))


def maximal_path_sets(g: Graph, cap: int = MAXIMAL_CAP) -> list[int]:
    """Vertex-set bitmasks of all maximal paths."""
    _check_cap(g, cap, "maximal-path")
    n = g.n
    ends = path_endpoints(g)
    full = (1 << n) - 1
    # covered[m]: some path vertex set contains m (not necessarily strictly)
    covered = [False] * (1 << n)
    for m in range(full, 0, -1):
        if ends[m]:
            covered[m] = True
            continue
        free = full & ~m
        while free:
            low = free & -free
            if covered[m | low]:
                covered[m] = True
                break
            free ^= low
    maximal = []
    for m in range(1, full + 1):
        if not ends[m]:
            continue
        free = full & ~m
        strict = False
        while free:
            low = free & -free
            if covered[m | low]:
                strict = True
                break
            free ^= low
        if not strict:
            maximal.append(m)
    return maximal


def simple_paths(g: Graph, vertices: Sequence[int] | None = None) -> Iterator[Path]:
    """All directed simple paths (each undirected path appears in both
    directions), optionally only the Hamiltonian ones of ``g[vertices]``.

    Recursive backtracking with a visited bitmask.
    """
    allowed = set(g.vertices) if vertices is None else set(vertices)
    target = None if vertices is None else len(allowed)
    path: list[int] = []

    def extend(v: int, seen: int) -> Iterator[Path]:
        path.append(v)
        if target is None or len(path) == target:
            yield tuple(path)
        for w in g.neighbors(v):
            if w in allowed and not seen >> w & 1:
                yield from extend(w, seen | 1 << w)
        path.pop()

    for v in sorted(allowed):
        yield from extend(v, 1 << v)


def mask_vertices(mask: int) -> tuple[int, ...]:
    return tuple(v + 1 for v in range(mask.bit_length()) if mask >> v & 1)

import itertools

import pytest
from hypothesis import strategies as st

from cocolp.generators import FAMILIES, GenSpec, generate
from cocolp.graph import Graph

# acceptance results, printed by pytest_terminal_summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# --------------------------------------------------------------------------- #
# small named graphs


def path_graph(n):
    return Graph(n, [(k, k + 1) for k in range(1, n)])


def cycle_graph(n):
    return Graph(n, [(k, k + 1) for k in range(1, n)] + [(1, n)])


def complete_graph(n):
    return Graph(n, itertools.combinations(range(1, n + 1), 2))


def edgeless(n):
    return Graph(n)


@pytest.fixture
def fig2():
    """The LDFS illustration; vertex ids follow the labels e, d, c, a, b so
    the lowest-id tie rule picks d after e, as in the narrative."""
    labels = ["e", "d", "c", "a", "b"]
    ids = {x: k for k, x in enumerate(labels, start=1)}
    edges = [("e", "d"), ("e", "c"), ("d", "c"), ("d", "a"), ("c", "a"), ("c", "b")]
    return Graph(5, [(ids[a], ids[b]) for a, b in edges], labels)


# One of the 94 edge sets on u1..u9 (vertex k = u_k, sigma = identity) meeting
# every stated fact about the nine-vertex example: sigma is umbrella-free and
# LDFS, (u8,u5,u6,u3,u4) is normal, N(u9) meets u3..u8 only in u7, and u2, u6
# are d-vertices of (u1,u3,u4), (u5,u7,u8).  This one has the fewest edges.
FIG3_EDGES = [(1, 2), (1, 4), (2, 3), (3, 4), (3, 5), (3, 6), (5, 6), (5, 8), (6, 7), (7, 8), (7, 9)]


@pytest.fixture
def fig3():
    return Graph(9, FIG3_EDGES)


# --------------------------------------------------------------------------- #
# independent brute-force oracles (plain loops, no numpy)


def naive_triples(g, sigma):
    return itertools.combinations(tuple(sigma), 3)


def naive_i_violation(g, sigma):
    for x, y, z in naive_triples(g, sigma):
        if g.has_edge(x, z) and not g.has_edge(x, y):
            return (x, y, z)
    return None


def naive_umbrella(g, sigma):
    for x, y, z in naive_triples(g, sigma):
        if g.has_edge(x, z) and not g.has_edge(x, y) and not g.has_edge(y, z):
            return (x, y, z)
    return None


def naive_bad_triple(g, sigma):
    """Quadruple enumeration straight from the definition."""
    seq = tuple(sigma)
    for ia, ib, ic in itertools.combinations(range(len(seq)), 3):
        a, b, c = seq[ia], seq[ib], seq[ic]
        if not g.has_edge(a, c) or g.has_edge(a, b):
            continue
        if not any(g.has_edge(seq[d], b) and not g.has_edge(seq[d], c) for d in range(ia + 1, ib)):
            return (a, b, c)
    return None


def isomorphic(g, h):
    if g.n != h.n or g.m != h.m:
        return False
    eg = set(g.edges())
    for perm in itertools.permutations(range(1, h.n + 1)):
        mapped = {tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in eg}
        if mapped == set(h.edges()):
            return True
    return False


# --------------------------------------------------------------------------- #
# hypothesis strategies


@st.composite
def instances(draw, max_n=10, families=FAMILIES):
    spec = GenSpec(
        draw(st.sampled_from(families)),
        draw(st.integers(1, max_n)),
        draw(st.sampled_from([0.0, 0.1, 0.2, 0.5, 0.8, 1.0])),
        draw(st.integers(0, 2**32)),
    )
    g, pi = generate(spec)
    return g, pi


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)

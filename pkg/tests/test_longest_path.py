import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete_graph, cycle_graph, edgeless, instances, path_graph
from cocolp.errors import CapExceededError, PreconditionError
from cocolp.generators import GenSpec, gen_interval
from cocolp.graph import Graph, is_valid_path
from cocolp.longest_path import (
    MAX_N_ENV,
    AugmentedOrdering,
    Step,
    build_dp,
    in_g_ij,
    is_normal,
    is_typical,
    longest_path,
    reconstruct,
    reconstruct_positions,
    solve,
)
from cocolp.oracle import brute_longest_path
from cocolp.search import ldfs_plus


def _members(aug, i, j):
    return {k for k in range(1, aug.n + 1) if in_g_ij(aug, i, j, k)}


# --------------------------------------------------------------------------- #
# G(i, j)


def test_g_1n_is_everything(fig3):
    aug = AugmentedOrdering(fig3, range(1, 10))
    assert _members(aug, 1, 9) == set(range(1, 10))


def test_g_empty_when_i_after_j(fig3):
    aug = AugmentedOrdering(fig3, range(1, 10))
    assert _members(aug, 5, 4) == set()


def test_g_3_8_on_nine_vertex_example(fig3):
    aug = AugmentedOrdering(fig3, range(1, 10))
    assert _members(aug, 3, 8) == {3, 4, 5, 6, 8}


def test_in_g_ij_range_errors():
    aug = AugmentedOrdering(path_graph(3), (1, 2, 3))
    with pytest.raises(ValueError):
        in_g_ij(aug, 0, 2, 1)
    with pytest.raises(ValueError):
        in_g_ij(aug, 1, 4, 1)


def test_dummy_is_isolated():
    aug = AugmentedOrdering(complete_graph(4), (1, 2, 3, 4))
    assert not aug.adj[5].any() and not aug.adj[:, 5].any()


@given(instances(max_n=12), st.data())
def test_g_ij_observations(inst, data):
    g, pi = inst
    aug = AugmentedOrdering(g, ldfs_plus(g, pi))
    n = g.n
    i = data.draw(st.integers(1, n))
    j = data.draw(st.integers(i, n))
    here = _members(aug, i, j)
    nxt = _members(aug, i + 1, j) if i < n else set()
    assert nxt == here - {i}
    for x in nxt:
        if x - 1 >= i + 1:
            assert _members(aug, i + 1, x - 1) <= here


# --------------------------------------------------------------------------- #
# typical / normal


def test_typical_examples():
    g = path_graph(4)
    sigma = (4, 3, 2, 1)
    assert is_typical(g, sigma, (2,))
    assert is_typical(g, sigma, (1, 2, 3, 4))
    assert not is_typical(g, sigma, (4, 3, 2, 1))


def test_normal_examples():
    g = path_graph(4)
    sigma = (4, 3, 2, 1)
    assert is_normal(g, sigma, (3,))
    assert is_normal(g, sigma, (1, 2, 3, 4))
    assert is_normal(g, sigma, (1, 2))
    assert not is_normal(g, sigma, (2, 1))
    assert is_normal(g, sigma, (3, 4))
    assert not is_normal(g, sigma, (4, 3))


def test_normal_path_on_nine_vertex_example(fig3):
    sigma = tuple(range(1, 10))
    assert is_normal(fig3, sigma, (8, 5, 6, 3, 4))
    assert not is_normal(fig3, sigma, (4, 3, 6, 5, 8))


def test_typical_but_not_normal():
    # starts at its rightmost vertex, but from 1 the sweep would take 3, not 2
    g = Graph(4, [(1, 2), (1, 3), (1, 4), (2, 3)])
    sigma = (1, 2, 3, 4)
    p = (4, 1, 2, 3)
    assert is_valid_path(g, p)[0]
    assert is_typical(g, sigma, p)
    assert not is_normal(g, sigma, p)
    assert is_normal(g, sigma, (4, 1, 3, 2))


def test_invalid_path_is_not_normal():
    assert not is_normal(path_graph(3), (1, 2, 3), (3, 1))
    assert not is_typical(path_graph(3), (1, 2, 3), (3, 1))


# --------------------------------------------------------------------------- #
# table


def test_dp_k1():
    t = build_dp(Graph(1), (1,))
    assert t.length(1, 1, 1) == 1
    assert int((t.lengths > 0).sum()) == 1


def test_dp_edgeless_two():
    t = build_dp(edgeless(2), ldfs_plus(edgeless(2), (1, 2)))
    assert t.length(1, 2, 1) == 1 and t.length(1, 2, 2) == 1
    assert not np.isin(t.steps, [Step.EXTEND, Step.GLUE]).any()


def test_dp_p4():
    g = path_graph(4)
    sigma = ldfs_plus(g, (1, 2, 3, 4))
    assert sigma == (4, 3, 2, 1)
    t = build_dp(g, sigma)
    assert t.final_lengths().max() == 4 == len(brute_longest_path(g))


def test_dp_rejects_non_ldfs_ordering():
    g = Graph(3, [(1, 3), (2, 3)])
    with pytest.raises(PreconditionError) as info:
        build_dp(g, (1, 2, 3))
    assert "LDFS" in str(info.value)
    w = info.value.witness
    assert (w.a, w.b, w.c) == (1, 2, 3)


def test_dp_rejects_umbrella():
    with pytest.raises(PreconditionError):
        build_dp(Graph(3, [(1, 3)]), (1, 2, 3))


def test_size_guard(monkeypatch):
    g, pi = gen_interval(GenSpec("interval", 12, 0.5, 3))
    with pytest.raises(CapExceededError):
        build_dp(g, ldfs_plus(g, pi), max_n=10)
    monkeypatch.setenv(MAX_N_ENV, "8")
    with pytest.raises(CapExceededError):
        build_dp(g, ldfs_plus(g, pi))
    monkeypatch.setenv(MAX_N_ENV, "12")
    build_dp(g, ldfs_plus(g, pi))


@settings(max_examples=60)
@given(instances(max_n=9))
def test_engines_agree(inst):
    g, pi = inst
    sigma = ldfs_plus(g, pi)
    a = build_dp(g, sigma, engine="loops")
    b = build_dp(g, sigma)
    assert np.array_equal(a.lengths, b.lengths)
    assert np.array_equal(a.steps, b.steps)
    assert np.array_equal(a.args, b.args)


@settings(max_examples=40)
@given(instances(max_n=9))
def test_every_entry_rebuilds_normal_path(inst):
    g, pi = inst
    sigma = ldfs_plus(g, pi)
    t = build_dp(g, sigma)
    aug = t.sigma
    n = g.n
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            for k in range(1, n + 1):
                length = t.length(i, j, k)
                assert (length is not None) == in_g_ij(aug, i, j, k)
                if length is None:
                    continue
                assert 1 <= length <= j - i + 1
                pos = reconstruct_positions(t, i, j, k)
                assert len(pos) == length and pos[-1] == k
                assert all(in_g_ij(aug, i, j, p) for p in pos)
                assert is_normal(g, sigma, reconstruct(t, i, j, k))
                if i < n and t.length(i + 1, j, k) is not None:
                    assert length >= t.length(i + 1, j, k)


@settings(max_examples=40)
@given(instances(max_n=10))
def test_instruction_semantics(inst):
    g, pi = inst
    t = build_dp(g, ldfs_plus(g, pi))
    n = g.n
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            for k in range(1, n + 1):
                step, x = t.instruction(i, j, k)
                if step is Step.ABSENT:
                    continue
                here = reconstruct_positions(t, i, j, k)
                if step is Step.SINGLE:
                    assert here == (i,) and k == i
                elif step is Step.COPY_UP:
                    assert here == reconstruct_positions(t, i + 1, j, k)
                elif step is Step.EXTEND:
                    assert k == i
                    assert here == reconstruct_positions(t, i + 1, j, x) + (i,)
                else:
                    head = reconstruct_positions(t, i + 1, j, x)
                    tail = reconstruct_positions(t, i + 1, x - 1, k)
                    assert here == head + (i,) + tail
                    assert len(set(here)) == len(here)


# --------------------------------------------------------------------------- #
# pipeline


def test_longest_c4():
    p = longest_path(cycle_graph(4), (1, 2, 3, 4))
    assert len(p) == 4 == len(brute_longest_path(cycle_graph(4)))
    assert is_valid_path(cycle_graph(4), p)[0]


def test_longest_edgeless():
    assert len(longest_path(edgeless(5), (1, 2, 3, 4, 5))) == 1


def test_longest_star():
    star = Graph(4, [(1, 2), (1, 3), (1, 4)])
    assert len(brute_longest_path(star)) == 3
    p = longest_path(star, (1, 2, 3, 4))
    assert len(p) == 3 and p[1] == 1


def test_longest_empty_graph():
    assert longest_path(Graph(0), ()) == ()


def test_longest_rejects_umbrella():
    with pytest.raises(PreconditionError):
        longest_path(Graph(3, [(1, 3)]), (1, 2, 3))


def test_skip_checks_runs():
    g = path_graph(5)
    assert len(longest_path(g, (1, 2, 3, 4, 5), check=False)) == 5


@settings(max_examples=200)
@given(instances(max_n=12))
def test_matches_oracle_and_is_normal(inst):
    g, pi = inst
    res = solve(g, pi)
    assert res.length == len(brute_longest_path(g))
    assert is_valid_path(g, res.path)[0]
    assert is_normal(g, res.sigma, res.path)
    assert res.length == int(res.table.final_lengths().max())


@given(st.integers(0, 2**32), st.integers(1, 12), st.sampled_from([0.1, 0.3, 0.6]))
def test_interval_ordering_needs_no_ldfs_pass(seed, n, p):
    g, sigma0 = gen_interval(GenSpec("interval", n, p, seed))
    direct = build_dp(g, sigma0).final_lengths().max()
    assert direct == solve(g, sigma0).length

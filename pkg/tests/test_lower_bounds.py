from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathramsey.certificates import arrow_exact
from pathramsey.errors import ParameterError
from pathramsey.graphs import (Graph, RandomSpec, complete_graph, cycle_graph, derive_seed,
                               disjoint_union, gen_gnp, path_graph, star_graph)
from pathramsey.lower_bounds import (case2_colouring, classical_path_ramsey, dichotomy_violations,
                                     erdos_gallai_check, is_tree, lower_bound_formula,
                                     tree_dichotomy, tree_dichotomy_brute)
from pathramsey.paths import longest_mono_path


def random_tree(n, rng):
    """Uniform random labelled tree from a Pruefer sequence."""
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = rng.integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph(n, edges)


def test_formula_values():
    for n in (1, 10, 100, 1000, 12345):
        assert lower_bound_formula(n, 2) == Fraction(5 * n, 2) - Fraction(15, 2)
        assert lower_bound_formula(n, 1) == n - 1
    assert lower_bound_formula(100, 3) == Fraction(867, 2)
    with pytest.raises(ParameterError):
        lower_bound_formula(0, 2)


# tree dichotomy


def test_dichotomy_path4():
    res = tree_dichotomy(path_graph(4), 1, 3)
    assert res.kind == "deletable_edges" and res.edges == ((1, 2),)
    assert dichotomy_violations(path_graph(4), 1, 3, res) == []


def test_dichotomy_base_case_halves():
    for n in (4, 7, 10):
        res = tree_dichotomy(path_graph(n), 0, n)
        assert res.kind == "disjoint_subgraphs"
        assert sorted(len(s) for s in res.subgraphs) == [n // 2, n - n // 2]
        assert dichotomy_violations(path_graph(n), 0, n, res) == []


def test_dichotomy_star():
    for m in range(2, 8):
        for k in range(0, 4):
            t = star_graph(m)
            res = tree_dichotomy(t, k, 3)
            assert dichotomy_violations(t, k, 3, res) == []
            if m - 1 <= k:
                assert res.kind == "deletable_edges"


def test_dichotomy_rejects_non_tree():
    with pytest.raises(ParameterError):
        tree_dichotomy(cycle_graph(4), 1, 3)
    assert not is_tree(disjoint_union(path_graph(2), path_graph(2)))


@given(st.integers(1, 20), st.integers(0, 3), st.integers(2, 20), st.integers(0, 2**32))
@settings(max_examples=200, deadline=None)
def test_dichotomy_invariant_on_random_trees(size, k, n, seed):
    t = random_tree(size, np.random.default_rng(seed))
    assert is_tree(t)
    res = tree_dichotomy(t, k, n)
    assert dichotomy_violations(t, k, n, res) == []


@given(st.integers(2, 12), st.integers(0, 3), st.integers(2, 12), st.integers(0, 2**32))
@settings(max_examples=120, deadline=None)
def test_dichotomy_agrees_with_brute_force(size, k, n, seed):
    t = random_tree(size, np.random.default_rng(seed))
    res = tree_dichotomy(t, k, n)
    if res.kind == "deletable_edges":
        assert tree_dichotomy_brute(t, k, n)
    if not tree_dichotomy_brute(t, k, n):
        assert res.kind == "disjoint_subgraphs"


# case-2 adversary


def test_case2_r2_n6():
    g = complete_graph(6)
    adv = case2_colouring(g, 6, 2)
    assert len(adv.U) == 5
    for c in range(3):
        assert len(longest_mono_path(g, adv.colouring, c)) < 6


def test_case2_r1_trivial():
    g = complete_graph(3)
    adv = case2_colouring(g, 5, 1)
    assert all(len(longest_mono_path(g, adv.colouring, c)) < 5 for c in range(2))


@pytest.mark.parametrize("r,n", [(1, 7), (1, 9), (2, 6), (2, 8), (2, 9), (3, 7), (3, 10), (4, 7)])
def test_case2_no_mono_path(r, n):
    N = (r + 2) * (n - 3) // 2
    g = complete_graph(N)
    adv = case2_colouring(g, n, r)
    sizes = [len(w) for w in adv.W]
    assert max(sizes) - min(sizes) <= 1 and sizes == sorted(sizes, reverse=True)
    for i in range(r):
        # colour i is bipartite between W_i and the vertices after it
        assert len(longest_mono_path(g, adv.colouring, i)) <= 2 * len(adv.W[i]) + 1
    assert all(len(longest_mono_path(g, adv.colouring, c)) < n for c in range(r + 1))


def test_case2_on_sparse_graphs():
    for i in range(20):
        g = gen_gnp(RandomSpec("gnp", 12, derive_seed(8, i), p=0.6))
        adv = case2_colouring(g, 9, 2)
        assert all(len(longest_mono_path(g, adv.colouring, c)) < 9 for c in range(3))


def test_case2_precondition():
    with pytest.raises(ParameterError):
        case2_colouring(complete_graph(7), 6, 2)


# Erdos-Gallai


def test_erdos_gallai_tight_cases():
    matching = Graph(10, [(2 * i, 2 * i + 1) for i in range(5)])
    res = erdos_gallai_check(matching, 3)
    assert not res.has_pk and res.edges == res.bound == 5 and res.holds
    triangles = disjoint_union(*[complete_graph(3)] * 4)
    res = erdos_gallai_check(triangles, 4)
    assert not res.has_pk and res.edges == res.bound == 12 and res.holds


@given(st.integers(1, 12), st.floats(0, 1), st.integers(0, 2**32), st.integers(2, 12))
@settings(max_examples=150, deadline=None)
def test_erdos_gallai_random(n, p, seed, k):
    res = erdos_gallai_check(gen_gnp(RandomSpec("gnp", n, seed, p=p)), k)
    assert res.holds


# classical values


def test_classical_values():
    assert classical_path_ramsey(4, 2).lower == 5
    v = classical_path_ramsey(7, 3)
    assert v.lower == v.upper == 13 and v.large_n_only
    assert classical_path_ramsey(8, 3).lower == 14
    v = classical_path_ramsey(5, 4)
    assert v.lower == 13 and v.upper == (4 - Fraction(4, 1025)) * 5 and not v.exact
    assert classical_path_ramsey(6, 1).lower == 6


def test_classical_r2_certified_by_arrowing():
    for n in (3, 4):
        R = int(classical_path_ramsey(n, 2).lower)
        assert arrow_exact(complete_graph(R), n, 2).verdict == "holds"
        assert arrow_exact(complete_graph(R - 1), n, 2).verdict == "fails"

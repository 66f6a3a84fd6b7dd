"""Sufficient conditions for G -> (P_n)_r and exact arrowing on small graphs.

The three set-pair conditions each say "no two large disjoint vertex sets
span zero edges". A violation is found by choosing the first set S and
reading the best partner T off the vertices outside S and its
neighbourhood, so exact mode only enumerates S.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, floor
from typing import Any, NamedTuple

import networkx as nx

from .colouring import Colouring
from .errors import BudgetError, ParameterError
from .graphs import BipartiteGraph, Graph, make_rng

EXACT_LIMIT = 10**7
ARROW_BUDGET = 10**6


@dataclass
class Certificate:
    kind: str
    verdict: str  # "holds", "fails" or "undecided"
    witness: Any = None
    params: dict = field(default_factory=dict)
    seed: int | None = None
    budget_spent: int = 0

    def to_dict(self) -> dict:
        witness = self.witness
        if isinstance(witness, Colouring):
            witness = {"r": witness.r, "colours": list(witness.colours)}
        return {
            "kind": self.kind,
            "verdict": self.verdict,
            "witness": witness,
            "params": self.params,
            "seed": self.seed,
            "budget_spent": self.budget_spent,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _lowest(mask: int, k: int) -> list[int]:
    return _bits(mask)[:k]


def _nbhd(masks, vertices) -> int:
    m = 0
    for v in vertices:
        m |= masks[v]
    return m


def _to_mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _ratio(g: Graph, n: int, minimum: Fraction) -> Fraction:
    if n < 1:
        raise ParameterError("path size n must be positive")
    c = Fraction(g.n, n)
    if c <= minimum:
        raise ParameterError(f"need |V|/n > {minimum}, got c = {c}")
    return c


def _sample(rng, pool: list[int], k: int) -> list[int]:
    return [pool[i] for i in rng.choice(len(pool), size=k, replace=False)]


def letzter_set_size(N: int, n: int) -> int:
    """floor(n(c-2)/4) for c = N/n."""
    return (N - 2 * n) // 4


def check_letzter(g: Graph, n: int, mode: str = "exact", budget: int = EXACT_LIMIT,
                  seed: int = 0) -> Certificate:
    """Every two disjoint s-sets, s = floor(n(c-2)/4), span an edge.

    If so, every 2-colouring of g has a monochromatic P_n.
    """
    g.require_simple()
    c = _ratio(g, n, Fraction(2))
    s = letzter_set_size(g.n, n)
    if s < 1:
        raise ParameterError(f"set size n(c-2)/4 = {float(n * (c - 2) / 4)} rounds below 1")
    params = {"n": n, "c": float(c), "s": s, "mode": mode}
    masks, full = g.adj_mask, (1 << g.n) - 1

    def probe(S):
        free = full & ~(_to_mask(S) | _nbhd(masks, S))
        if free.bit_count() >= s:
            return {"S": list(S), "T": _lowest(free, s)}
        return None

    if mode == "exact":
        total = comb(g.n, s)
        if total > budget:
            raise BudgetError(f"exact check needs {total} subsets, budget {budget}")
        for spent, S in enumerate(combinations(range(g.n), s), start=1):
            w = probe(S)
            if w:
                return Certificate("letzter", "fails", w, params, None, spent)
        return Certificate("letzter", "holds", None, params, None, total)
    if mode == "monte_carlo":
        rng = make_rng(seed)
        for spent in range(1, budget + 1):
            w = probe(sorted(rng.choice(g.n, size=s, replace=False).tolist()))
            if w:
                return Certificate("letzter", "fails", w, params, seed, spent)
        return Certificate("letzter", "undecided", None, params, seed, budget)
    raise ParameterError(f"unknown mode {mode!r}")


def two_holes_size(N: int, n: int) -> int:
    """floor(n(c-2)/2) for c = N/n."""
    return (N - 2 * n) // 2


def check_two_holes(g: Graph, n: int, mode: str = "exact", budget: int = EXACT_LIMIT,
                    seed: int = 0) -> Certificate:
    """For disjoint S1, S2, T1, T2 with |S1| = |T2| = k, |S2| = |T1| = h - k
    (h = floor(n(c-2)/2)), at least one of e(S1, T2), e(S2, T1) is non-zero.

    Swapping (S1, T2) with (S2, T1) maps k to h - k, so only k <= h/2 is
    searched. Exact mode raises BudgetError once ``budget`` candidate
    quadruples have been examined.
    """
    g.require_simple()
    c = _ratio(g, n, Fraction(2))
    h = two_holes_size(g.n, n)
    if h < 1:
        raise ParameterError(f"hole size n(c-2)/2 = {float(n * (c - 2) / 2)} rounds below 1")
    params = {"n": n, "c": float(c), "h": h, "mode": mode}
    masks, full = g.adj_mask, (1 << g.n) - 1

    def finish(S1, T2, S2, k):
        used = _to_mask(S1) | _to_mask(T2) | _to_mask(S2)
        free = full & ~(used | _nbhd(masks, S2))
        if free.bit_count() >= h - k:
            return {"S1": list(S1), "S2": list(S2), "T1": _lowest(free, h - k), "T2": list(T2)}
        return None

    if mode == "exact":
        spent = 0
        for k in range(h // 2 + 1):
            for S1 in combinations(range(g.n), k):
                avoid = full & ~(_to_mask(S1) | _nbhd(masks, S1))
                for T2 in combinations(_bits(avoid), k):
                    if k and T2[0] < S1[0]:
                        continue  # (S1, T2) and (T2, S1) are interchangeable
                    rest = [v for v in range(g.n) if v not in S1 and v not in T2]
                    for S2 in combinations(rest, h - k):
                        spent += 1
                        if spent > budget:
                            raise BudgetError("two-holes enumeration exceeded budget", spent)
                        w = finish(S1, T2, S2, k)
                        if w:
                            return Certificate("two_holes", "fails", w, params, None, spent)
        return Certificate("two_holes", "holds", None, params, None, spent)
    if mode == "monte_carlo":
        rng = make_rng(seed)
        verts = list(range(g.n))
        for spent in range(1, budget + 1):
            k = int(rng.integers(0, h // 2 + 1))
            S1 = sorted(_sample(rng, verts, k))
            avoid = _bits(full & ~(_to_mask(S1) | _nbhd(masks, S1)))
            if len(avoid) < k:
                continue
            T2 = sorted(_sample(rng, avoid, k))
            rest = [v for v in verts if v not in S1 and v not in T2]
            if len(rest) < h - k:
                continue
            S2 = sorted(_sample(rng, rest, h - k))
            w = finish(S1, T2, S2, k)
            if w:
                return Certificate("two_holes", "fails", w, params, seed, spent)
        return Certificate("two_holes", "undecided", None, params, seed, budget)
    raise ParameterError(f"unknown mode {mode!r}")


def bipartite_set_size(N: int, n: int, r: int) -> int:
    """floor(((c+1)/2^r - 1) n / 2) for c = N/n."""
    return floor((Fraction(N + n, 2**r) - n) / 2)


def check_bipartite_multi(g: BipartiteGraph, n: int, r: int, mode: str = "exact",
                          budget: int = EXACT_LIMIT, seed: int = 0) -> Certificate:
    """Every S in part 1 and T in part 2 of the prescribed size span an edge.

    For a balanced bipartite graph of order cn with c > 2^r - 1 this forces a
    monochromatic P_n in every r-colouring.
    """
    if not isinstance(g, BipartiteGraph):
        raise ParameterError("check_bipartite_multi needs a BipartiteGraph")
    if g.n1 != g.n2:
        raise ParameterError("the bipartite condition is stated for balanced graphs")
    if r < 2:
        raise ParameterError("r must be at least 2")
    g.require_simple()
    c = _ratio(g, n, Fraction(2**r - 1))
    s = bipartite_set_size(g.n, n, r)
    if s < 1:
        raise ParameterError("prescribed set size rounds below 1")
    params = {"n": n, "r": r, "c": float(c), "s": s, "mode": mode}
    masks = g.adj_mask
    side2 = _to_mask(g.part2)

    def probe(S):
        free = side2 & ~_nbhd(masks, S)
        if free.bit_count() >= s:
            return {"S": list(S), "T": _lowest(free, s)}
        return None

    if mode == "exact":
        total = comb(g.n1, s)
        if total > budget:
            raise BudgetError(f"exact check needs {total} subsets, budget {budget}")
        for spent, S in enumerate(combinations(g.part1, s), start=1):
            w = probe(S)
            if w:
                return Certificate("bipartite_multi", "fails", w, params, None, spent)
        return Certificate("bipartite_multi", "holds", None, params, None, total)
    if mode == "monte_carlo":
        rng = make_rng(seed)
        for spent in range(1, budget + 1):
            w = probe(sorted(rng.choice(g.n1, size=s, replace=False).tolist()))
            if w:
                return Certificate("bipartite_multi", "fails", w, params, seed, spent)
        return Certificate("bipartite_multi", "undecided", None, params, seed, budget)
    raise ParameterError(f"unknown mode {mode!r}")


def _path_through(masks: list[int], u: int, v: int, n: int) -> bool:
    """Whether the graph has a path on n vertices that uses the edge uv."""

    def right(x, visited, length):
        if length >= n:
            return True
        m = masks[x] & ~visited
        while m:
            low = m & -m
            if right(low.bit_length() - 1, visited | low, length + 1):
                return True
            m ^= low
        return False

    def left(x, visited, length):
        if right(v, visited, length + 1):
            return True
        m = masks[x] & ~visited
        while m:
            low = m & -m
            if left(low.bit_length() - 1, visited | low, length + 1):
                return True
            m ^= low
        return False

    return left(u, (1 << u) | (1 << v), 1)


def arrow_exact(g: Graph, n: int, r: int, budget: int = ARROW_BUDGET) -> Certificate:
    """Decide g -> (P_n)_r exhaustively.

    Backtracking colours the edges in order and abandons a branch as soon as
    some colour class contains a P_n; the edge being coloured must lie on it.
    Colour labels are interchangeable, so edge i may only use colours up to
    one more than the largest used so far. ``budget`` bounds the number of
    search nodes, which never exceeds the r^(m-1) colourings of brute force.
    """
    g.require_simple()
    if r < 1:
        raise ParameterError("r must be at least 1")
    params = {"n": n, "r": r, "vertices": g.n, "edges": g.m}
    if n <= 1:
        verdict = "holds" if g.n >= n else "fails"
        witness = None if verdict == "holds" else Colouring(r, (0,) * g.m)
        return Certificate("exact_arrow", verdict, witness, params, None, 0)
    m = g.m
    masks = [[0] * g.n for _ in range(r)]
    colours = [0] * m
    spent = 0

    def search(i: int, used: int) -> bool:
        # True when an escaping colouring has been completed
        nonlocal spent
        if i == m:
            return True
        u, v = g.edges[i]
        for col in range(min(r, used + 1)):
            spent += 1
            if spent > budget:
                raise BudgetError(f"arrowing search exceeded {budget} nodes", spent)
            mk = masks[col]
            mk[u] |= 1 << v
            mk[v] |= 1 << u
            if not _path_through(mk, u, v, n):
                colours[i] = col
                if search(i + 1, max(used, col + 1)):
                    return True
            mk[u] ^= 1 << v
            mk[v] ^= 1 << u
        return False

    if search(0, 0):
        return Certificate("exact_arrow", "fails", Colouring(r, tuple(colours)), params, None, spent)
    return Certificate("exact_arrow", "holds", None, params, None, spent)


def arrow_brute_force(g: Graph, n: int, r: int) -> bool:
    """Plain enumeration of all colourings with edge 0 fixed; a cross-check."""
    from itertools import product

    from .paths import has_path

    if g.m == 0:
        return has_path(g, n)
    for rest in product(range(r), repeat=g.m - 1):
        col = Colouring(r, (0,) + rest)
        if not any(has_path(col.class_graph(g, c), n) for c in range(r)):
            return False
    return True


class SizeRamsey(NamedTuple):
    value: int
    witness: Graph


def _canonical_key(h: nx.Graph):
    return (h.number_of_nodes(), tuple(sorted(d for _, d in h.degree())),
            nx.weisfeiler_lehman_graph_hash(h, iterations=3))


def connected_graphs_by_size(max_edges: int):
    """Yield (m, graphs) for m = 0..max_edges: connected graphs up to isomorphism."""
    level = [nx.empty_graph(1)]
    yield 0, level
    for m in range(1, max_edges + 1):
        buckets: dict = {}
        nxt = []
        for h in level:
            k = h.number_of_nodes()
            cands = [(a, b) for a in range(k) for b in range(a + 1, k) if not h.has_edge(a, b)]
            cands += [(a, k) for a in range(k)]
            for a, b in cands:
                h2 = h.copy()
                h2.add_edge(a, b)
                bucket = buckets.setdefault(_canonical_key(h2), [])
                if any(nx.is_isomorphic(h2, o) for o in bucket):
                    continue
                bucket.append(h2)
                nxt.append(h2)
        level = nxt
        yield m, level


def size_ramsey_exact(n: int, r: int, max_edges: int = 8, budget: int = 10**7) -> SizeRamsey:
    """Smallest edge count of a graph G with G -> (P_n)_r.

    Since P_n is connected, a graph arrows it iff one of its components
    does, so only connected candidates are tried, in order of edge count.
    """
    if n < 1 or r < 1:
        raise ParameterError("n and r must be positive")
    spent = 0
    for m, level in connected_graphs_by_size(max_edges):
        for h in level:
            g = Graph(h.number_of_nodes(), h.edges())
            if g.n < n:
                continue
            try:
                cert = arrow_exact(g, n, r, budget - spent)
            except BudgetError as exc:
                raise BudgetError("size-Ramsey search exceeded budget", spent + exc.spent) from exc
            spent += cert.budget_spent
            if cert.verdict == "holds":
                return SizeRamsey(m, g)
    raise BudgetError(f"no arrowing graph with at most {max_edges} edges", spent)

"""Lower-bound constructions for multicolour path size-Ramsey numbers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .colouring import Colouring
from .errors import ParameterError
from .graphs import Graph
from .paths import components, has_path, longest_path_exact


def lower_bound_formula(n: int, r: int) -> Fraction:
    """(r+3) r n / 4 - r (5r+11) / 4 + 3."""
    if n < 1 or r < 1:
        raise ParameterError("n and r must be positive")
    return Fraction((r + 3) * r * n, 4) - Fraction(r * (5 * r + 11), 4) + 3


# tree dichotomy


@dataclass(frozen=True)
class TreeDichotomy:
    kind: str  # "deletable_edges" or "disjoint_subgraphs"
    edges: tuple[tuple[int, int], ...] = ()
    subgraphs: tuple[frozenset[int], ...] = ()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "edges": [list(e) for e in self.edges],
            "subgraphs": [sorted(s) for s in self.subgraphs],
        }


def is_tree(g: Graph) -> bool:
    return g.simple and g.m == g.n - 1 and len(components(g)) == 1


def _adjacency(vertices, edges):
    adj = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _farthest(adj, src):
    parent = {src: None}
    frontier, last = [src], src
    while frontier:
        nxt = []
        for u in frontier:
            for w in sorted(adj[u]):
                if w not in parent:
                    parent[w] = u
                    nxt.append(w)
        if nxt:
            last = nxt[-1]
        frontier = nxt
    return last, parent


def _tree_longest_path(vertices, edges) -> list[int]:
    """A longest path in a tree, via two breadth-first sweeps."""
    adj = _adjacency(vertices, edges)
    a, _ = _farthest(adj, min(vertices))
    b, parent = _farthest(adj, a)
    path = [b]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def _split(vertices, edges, cut):
    """Components of a tree after removing the edge ``cut``."""
    rest = [e for e in edges if e != cut]
    adj = _adjacency(vertices, rest)
    side, stack = {cut[0]}, [cut[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in side:
                side.add(w)
                stack.append(w)
    other = frozenset(vertices) - side
    e1 = [e for e in rest if e[0] in side]
    e2 = [e for e in rest if e[0] in other]
    return (frozenset(side), e1), (other, e2)


class _Solver:
    """Follows the induction on k that proves the dichotomy."""

    def __init__(self, n: int):
        self.n = n
        self.half = n // 2
        self.memo: dict = {}

    def has_pn(self, vertices, edges) -> bool:
        return len(_tree_longest_path(vertices, edges)) >= self.n

    def solve(self, vertices, edges, k):
        """("edges", list) with at most k edges, or ("subgraphs", list of k+2 sets)."""
        key = (frozenset(vertices), k)
        if key not in self.memo:
            self.memo[key] = self._solve(vertices, edges, k)
        return self.memo[key]

    def _solve(self, vertices, edges, k):
        if not self.has_pn(vertices, edges):
            return "edges", []
        longest = _tree_longest_path(vertices, edges)
        window = longest[: self.n]
        mid = self.half - 1 if self.n % 2 == 0 else self.half
        # cut inside the window so both sides keep at least floor(n/2) of it
        cut = tuple(sorted((window[mid], window[mid + 1])))
        (V1, E1), (V2, E2) = _split(vertices, edges, cut)
        if k == 0:
            return "subgraphs", [V1, V2]
        m1 = self.min_deletion(V1, E1, k)
        m2 = self.min_deletion(V2, E2, k)
        if m1 is not None and m2 is not None and m1[0] + m2[0] <= k - 1:
            return "edges", [cut] + m1[1] + m2[1]
        parts = []
        for V, E, m in ((V1, E1, m1), (V2, E2, m2)):
            j = k if m is None else m[0]
            if j == 0:
                parts.append([V])
            else:
                kind, found = self.solve(V, E, j - 1)
                if kind != "subgraphs":
                    raise AssertionError("minimality violated in tree dichotomy")
                parts.append(found)
        return "subgraphs", (parts[0] + parts[1])[: k + 2]

    def min_deletion(self, vertices, edges, k):
        """(j, edges) for the least j <= k whose deletion kills P_n, else None."""
        for j in range(k + 1):
            kind, found = self.solve(vertices, edges, j)
            if kind == "edges":
                return len(found), found
        return None


def tree_dichotomy(T: Graph, k: int, n: int) -> TreeDichotomy:
    """Either k edges of T whose removal leaves no P_n, or k+2 vertex-disjoint
    connected subgraphs of T with at least floor(n/2) vertices each.

    Built by the induction on k: cut a P_n in T at its middle edge and
    recurse into the two sides. If T has fewer than k edges all of them
    are returned.
    """
    if not is_tree(T):
        raise ParameterError("tree_dichotomy needs a tree")
    if k < 0 or n < 2:
        raise ParameterError("need k >= 0 and n >= 2")
    kind, found = _Solver(n).solve(list(range(T.n)), list(T.edges), k)
    if kind == "edges":
        chosen = list(dict.fromkeys(found))
        for e in T.edges:
            if len(chosen) >= k:
                break
            if e not in chosen:
                chosen.append(e)
        return TreeDichotomy("deletable_edges", edges=tuple(sorted(chosen)))
    return TreeDichotomy("disjoint_subgraphs", subgraphs=tuple(found))


def dichotomy_violations(T: Graph, k: int, n: int, result: TreeDichotomy) -> list[str]:
    """Independent check of the output invariant; empty when it holds."""
    out = []
    if result.kind == "deletable_edges":
        if len(result.edges) != min(k, T.m):
            out.append(f"expected {min(k, T.m)} edges, got {len(result.edges)}")
        gone = set(result.edges)
        if not gone <= set(T.edges):
            out.append("deleted edges are not tree edges")
        rest = Graph(T.n, (e for e in T.edges if e not in gone))
        if len(longest_path_exact(rest, budget=max(22, T.n))) >= n:
            out.append("P_n survives the deletion")
    elif result.kind == "disjoint_subgraphs":
        subs = result.subgraphs
        if len(subs) != k + 2:
            out.append(f"expected {k + 2} subgraphs, got {len(subs)}")
        for a, b in combinations(subs, 2):
            if a & b:
                out.append("subgraphs overlap")
        for s in subs:
            if len(s) < n // 2:
                out.append(f"subgraph of order {len(s)} < {n // 2}")
            sub, _ = T.induced(s)
            if len(components(sub)) != 1:
                out.append("subgraph is not connected")
    else:
        out.append(f"unknown kind {result.kind}")
    return out


def tree_dichotomy_brute(T: Graph, k: int, n: int) -> bool:
    """Whether some k edges (or all, if fewer) can be deleted to kill P_n."""
    for chosen in combinations(T.edges, min(k, T.m)):
        gone = set(chosen)
        if not has_path(Graph(T.n, (e for e in T.edges if e not in gone)), n):
            return True
    return False


# adversarial colouring


@dataclass(frozen=True)
class AdversaryColouring:
    colouring: Colouring
    U: tuple[int, ...]
    W: tuple[tuple[int, ...], ...] = field(default=())

    def to_dict(self, g: Graph) -> dict:
        d = self.colouring.to_dict(g)
        d["construction"] = {"U": list(self.U), "W": [list(w) for w in self.W]}
        return d


def _equipartition(items: list[int], parts: int) -> list[list[int]]:
    base, extra = divmod(len(items), parts)
    out, pos = [], 0
    for i in range(parts):
        size = base + (1 if i < extra else 0)
        out.append(items[pos:pos + size])
        pos += size
    return out


def case2_colouring(g: Graph, n: int, r: int) -> AdversaryColouring:
    """(r+1)-colouring of a graph on at most (r+2)(n-3)/2 vertices with no
    monochromatic P_n.

    U is the n-1 lowest vertices and W_1..W_r an equipartition of the rest
    by index blocks. Colour i goes to edges from W_i to W_{i+1} u ... u W_r u U;
    edges inside U or inside a single W_i get the extra colour r.
    """
    if r < 1 or n < 2:
        raise ParameterError("need r >= 1 and n >= 2")
    if 2 * g.n > (r + 2) * (n - 3):
        raise ParameterError(f"need |V| <= (r+2)(n-3)/2 = {(r + 2) * (n - 3) / 2}, got {g.n}")
    u_size = min(n - 1, g.n)
    U = list(range(u_size))
    W = _equipartition(list(range(u_size, g.n)), r)
    block = {v: r for v in U}  # U sorts after every W_i
    for i, part in enumerate(W):
        for v in part:
            block[v] = i
    colours = []
    for u, v in g.edges:
        bu, bv = block[u], block[v]
        colours.append(r if bu == bv else min(bu, bv))
    return AdversaryColouring(Colouring(r + 1, tuple(colours)), tuple(U), tuple(tuple(w) for w in W))


# Erdos-Gallai and classical values


class ErdosGallai(NamedTuple):
    has_pk: bool
    edges: int
    bound: Fraction
    holds: bool


def erdos_gallai_check(g: Graph, k: int, budget: int = 22) -> ErdosGallai:
    """If g has no P_k, check |E| <= n(k-2)/2. Vacuously true otherwise."""
    g.require_simple()
    longest = len(longest_path_exact(g, budget))
    bound = Fraction(g.n * (k - 2), 2)
    has_pk = longest >= k
    return ErdosGallai(has_pk, g.m, bound, has_pk or g.m <= bound)


@dataclass(frozen=True)
class PathRamseyValue:
    lower: Fraction
    upper: Fraction
    exact: bool
    large_n_only: bool = False


def classical_path_ramsey(n: int, r: int) -> PathRamseyValue:
    """Known values and bounds for the r-colour Ramsey number of P_n."""
    if n < 2 or r < 1:
        raise ParameterError("need n >= 2 and r >= 1")
    if r == 1:
        return PathRamseyValue(Fraction(n), Fraction(n), True)
    if r == 2:
        v = Fraction((3 * n - 2) // 2)
        return PathRamseyValue(v, v, True)
    if r == 3:
        v = Fraction(2 * n - 1 if n % 2 else 2 * n - 2)
        return PathRamseyValue(v, v, True, large_n_only=True)
    lower = Fraction((r - 1) * (n - 1) + 1)
    upper = (r - Fraction(r, 16 * r**3 + 1)) * n
    return PathRamseyValue(lower, upper, False)

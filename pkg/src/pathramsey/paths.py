"""Path machinery: the path/hole partition process and longest-path search."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .colouring import Colouring
from .errors import BudgetError, ParameterError
from .graphs import Graph

EXACT_BUDGET = 22


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    colour: int | None = None

    def __len__(self) -> int:
        return len(self.vertices)

    def is_valid(self, g: Graph, col: Colouring | None = None) -> bool:
        """Distinct vertices, consecutive ones adjacent (in the colour class if set)."""
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            return False
        h = g
        if self.colour is not None and col is not None:
            h = col.class_graph(g, self.colour)
        return all(h.has_edge(a, b) for a, b in zip(vs, vs[1:]))

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "colour": self.colour}


@dataclass(frozen=True)
class PartitionPUW:
    """A path ``path`` plus equal-size sets ``setU``, ``setW`` with no U-W edge."""

    path: tuple[int, ...]
    setU: frozenset[int]
    setW: frozenset[int]

    def violations(self, g: Graph) -> list[str]:
        out = []
        seen = set(self.path) | self.setU | self.setW
        if len(seen) != g.n or len(self.path) + len(self.setU) + len(self.setW) != g.n:
            out.append("P, U, W do not partition V")
        if len(self.setU) != len(self.setW):
            out.append("|U| != |W|")
        if not PathWitness(self.path).is_valid(g):
            out.append("P is not a path")
        adj = g.adj
        if any(w in self.setW for u in self.setU for w in adj[u]):
            out.append("edge between U and W")
        return out


def _ranks(n: int, start_order: Sequence[int] | None) -> list[int]:
    if start_order is None:
        return list(range(n))
    if sorted(start_order) != list(range(n)):
        raise ParameterError("start_order must be a permutation of the vertices")
    rank = [0] * n
    for i, v in enumerate(start_order):
        rank[v] = i
    return rank


def _run_process(g: Graph, start_order, stop_at_balance: bool):
    """Extend/retract process; yields (path, inU, W) after each step."""
    n = g.n
    rank = _ranks(n, start_order)
    by_rank = sorted(range(n), key=rank.__getitem__)
    nbrs = [sorted(set(a), key=rank.__getitem__) for a in g.adj]
    cursor = [0] * n  # neighbours of v before cursor[v] have left U for good
    in_u = [True] * n
    next_free = 0  # vertices before it in rank order have left U
    path: list[int] = []
    W: list[int] = []
    u_size = n

    def take_lowest_u():
        nonlocal next_free, u_size
        while not in_u[by_rank[next_free]]:
            next_free += 1
        v = by_rank[next_free]
        in_u[v] = False
        u_size -= 1
        return v

    if n == 0:
        return
    path.append(take_lowest_u())
    yield path, u_size, W
    while True:
        if stop_at_balance and u_size == len(W):
            return
        if not path:
            if u_size == 0:
                return
            path.append(take_lowest_u())
        else:
            v = path[-1]
            nb, i = nbrs[v], cursor[v]
            while i < len(nb) and not in_u[nb[i]]:
                i += 1
            cursor[v] = i
            if i < len(nb):
                w = nb[i]
                in_u[w] = False
                u_size -= 1
                path.append(w)
            else:
                W.append(path.pop())
        yield path, u_size, W


def partition_puw(g: Graph, start_order: Sequence[int] | None = None) -> PartitionPUW:
    """Split V(g) into a path P and sets U, W with |U| = |W| and e(U, W) = 0.

    The path grows from its last vertex into U whenever possible and
    otherwise retires the last vertex to W; an empty path restarts from U.
    Every step lowers |U| - |W| by one, and the process stops the first time
    the two are equal. Ties go to the vertex earliest in ``start_order``
    (default: lowest id).
    """
    g.require_simple()
    path: list[int] = []
    W: list[int] = []
    for path, _, W in _run_process(g, start_order, stop_at_balance=True):
        pass
    used = set(path) | set(W)
    U = frozenset(v for v in range(g.n) if v not in used)
    return PartitionPUW(tuple(path), U, frozenset(W))


def longest_path_lower(g: Graph, start_order: Sequence[int] | None = None) -> PathWitness:
    """Greedy lower bound on the longest path.

    Runs the extend/retract process to exhaustion and keeps the longest path
    it ever held, then greedily extends that path at both ends.
    """
    g.require_simple()
    best: tuple[int, ...] = ()
    for path, _, _ in _run_process(g, start_order, stop_at_balance=False):
        if len(path) > len(best):
            best = tuple(path)
    if not best:
        return PathWitness(())
    rank = _ranks(g.n, start_order)
    on_path = set(best)
    seq = list(best)
    for _ in range(2):
        while True:
            ext = [w for w in g.adj[seq[-1]] if w not in on_path]
            if not ext:
                break
            w = min(ext, key=rank.__getitem__)
            on_path.add(w)
            seq.append(w)
        seq.reverse()
    return PathWitness(tuple(seq))


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    adj = g.adj
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp, frontier = [root], [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        nxt.append(w)
            frontier = nxt
        out.append(sorted(comp))
    return out


_POPCOUNT_LAYERS: dict[int, list[np.ndarray]] = {}


def _layers(k: int) -> list[np.ndarray]:
    if k not in _POPCOUNT_LAYERS:
        masks = np.arange(1 << k, dtype=np.int64)
        pc = np.zeros(1 << k, dtype=np.int8)
        for b in range(k):
            pc += ((masks >> b) & 1).astype(np.int8)
        order = np.argsort(pc, kind="stable")
        bounds = np.searchsorted(pc[order], np.arange(k + 2))
        _POPCOUNT_LAYERS[k] = [order[bounds[j]:bounds[j + 1]] for j in range(k + 1)]
    return _POPCOUNT_LAYERS[k]


def _longest_path_dp(masks: list[int]) -> list[int]:
    """Held-Karp style DP: reach[S] has bit v iff some path covers S and ends at v."""
    k = len(masks)
    if k == 1:
        return [0]
    layers = _layers(k)
    reach = np.zeros(1 << k, dtype=np.int64)
    for v in range(k):
        reach[1 << v] = 1 << v
    top = 1
    for j in range(2, k + 1):
        layer = layers[j]
        for v in range(k):
            sel = layer[(layer >> v) & 1 == 1]
            ok = (reach[sel ^ (1 << v)] & masks[v]) != 0
            reach[sel[ok]] |= 1 << v
        if not reach[layer].any():
            break
        top = j
    layer = layers[top]
    S = int(layer[np.flatnonzero(reach[layer])[0]])
    ends = int(reach[S])
    v = (ends & -ends).bit_length() - 1
    path = [v]
    while S != 1 << v:
        S ^= 1 << v
        cand = int(reach[S]) & masks[v]
        v = (cand & -cand).bit_length() - 1
        path.append(v)
    return path


def longest_path_exact(g: Graph, budget: int = EXACT_BUDGET) -> PathWitness:
    """A maximum path, by subset DP on each connected component.

    Raises BudgetError if a component has more than ``budget`` vertices.
    """
    best: list[int] = []
    comps = components(g)
    big = max((len(c) for c in comps), default=0)
    if big > budget:
        raise BudgetError(f"component of {big} vertices exceeds exact budget {budget}")
    mask = g.adj_mask
    for comp in sorted(comps, key=len, reverse=True):
        if len(comp) <= len(best):
            break
        pos = {v: i for i, v in enumerate(comp)}
        local = []
        for v in comp:
            m, lm = mask[v], 0
            while m:
                low = m & -m
                lm |= 1 << pos[low.bit_length() - 1]
                m ^= low
            local.append(lm)
        path = [comp[i] for i in _longest_path_dp(local)]
        if len(path) > len(best):
            best = path
    return PathWitness(tuple(best))


def has_path(g: Graph, k: int) -> bool:
    """Whether g contains a path on k vertices (depth-first search)."""
    if k <= 1:
        return g.n >= k
    masks = g.adj_mask
    if k == 2:
        return any(masks)
    if all(len(c) < k for c in components(g)):
        return False

    def extend(v: int, visited: int, length: int) -> bool:
        if length == k:
            return True
        m = masks[v] & ~visited
        while m:
            low = m & -m
            if extend(low.bit_length() - 1, visited | low, length + 1):
                return True
            m ^= low
        return False

    return any(extend(v, 1 << v, 1) for v in range(g.n) if masks[v])


def longest_mono_path(g: Graph, col: Colouring, colour: int, exact: bool = True,
                      budget: int = EXACT_BUDGET) -> PathWitness:
    """Longest path in one colour class (exact or greedy lower bound)."""
    h = col.class_graph(g, colour)
    w = longest_path_exact(h, budget) if exact else longest_path_lower(h)
    return PathWitness(w.vertices, colour)

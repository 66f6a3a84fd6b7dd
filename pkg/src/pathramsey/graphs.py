"""Graph representation, random models and edge counting.

Vertices are the integers ``0..n-1``. A :class:`Graph` stores its edge list in
canonical order (each edge as ``(u, v)`` with ``u <= v``, list sorted), so an
edge colouring can simply be a tuple aligned with ``Graph.edges``.

Random generators take a :class:`RandomSpec` and are pure functions of it:
the same spec (including the seed) always yields the same graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetError, ParameterError


class Graph:
    """Undirected graph, possibly with loops and parallel edges.

    Treat instances as immutable; derived structures are cached lazily.
    """

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ParameterError(f"vertex count must be non-negative, got {n}")
        norm = []
        for e in edges:
            if len(e) != 2:
                raise ParameterError(f"edge {list(e)} must have exactly two endpoints")
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            norm.append((u, v) if u <= v else (v, u))
        norm.sort()
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self.simple = all(u != v for u, v in norm) and len(set(norm)) == len(norm)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour multiset of every vertex (a loop lists v twice)."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks, ignoring loops and multiplicity."""
        masks = [0] * self.n
        for u, v in self.edges:
            if u != v:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_mask[u] >> v & 1)

    def require_simple(self) -> None:
        if not self.simple:
            raise ParameterError("operation requires a simple graph")

    def edge_subgraph(self, indices: Iterable[int]) -> "Graph":
        """Spanning subgraph keeping only the edges at the given positions."""
        return Graph(self.n, (self.edges[i] for i in indices))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``, plus the old labels."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        sub = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph(len(old), sub), old

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.m})"

    # serialization

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_edgelist(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        return cls(int(data["n"]), data.get("edges", []))


class BipartiteGraph(Graph):
    """Graph whose parts are ``0..n1-1`` and ``n1..n1+n2-1``."""

    def __init__(self, n1: int, n2: int, edges: Iterable[Sequence[int]] = ()):
        super().__init__(n1 + n2, edges)
        self.n1, self.n2 = n1, n2
        for u, v in self.edges:
            if not (u < n1 <= v):
                raise ParameterError(f"edge ({u}, {v}) does not join the two parts")

    @property
    def part1(self) -> range:
        return range(self.n1)

    @property
    def part2(self) -> range:
        return range(self.n1, self.n1 + self.n2)

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["n1"], d["n2"] = self.n1, self.n2
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "BipartiteGraph":
        return cls(int(data["n1"]), int(data["n2"]), data.get("edges", []))


def parse_graph(text: str) -> Graph:
    """Parse either the JSON form or the ``n m`` edge-list form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(text)
        if "n1" in data:
            return BipartiteGraph.from_dict(data)
        return Graph.from_dict(data)
    rows = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), start=1)
            if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0][1]) != 2:
        raise ParameterError("edge list must start with a header line 'n m'")
    try:
        n, m = int(rows[0][1][0]), int(rows[0][1][1])
        edges = []
        for lineno, row in rows[1:]:
            if len(row) != 2:
                raise ParameterError(f"line {lineno}: expected 'u v', got {' '.join(row)!r}")
            edges.append((int(row[0]), int(row[1])))
    except ValueError as exc:
        if isinstance(exc, ParameterError):
            raise
        raise ParameterError(f"non-integer entry in edge list: {exc}") from exc
    if len(edges) != m:
        raise ParameterError(f"header declares {m} edges but {len(edges)} were listed")
    return Graph(n, edges)


# named graphs


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(n1: int, n2: int) -> BipartiteGraph:
    return BipartiteGraph(n1, n2, ((u, n1 + v) for u in range(n1) for v in range(n2)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


# random models


@dataclass(frozen=True)
class RandomSpec:
    """Parameters of a random graph model.

    ``model`` is one of ``gnp``, ``gnnp`` or ``pairing``; ``gnp``/``gnnp`` use
    ``p``, ``pairing`` uses ``d``. ``seed`` is a 64-bit master seed.
    """

    model: str
    n: int
    seed: int
    p: float | None = None
    d: int | None = None

    def __post_init__(self):
        if self.model not in ("gnp", "gnnp", "pairing"):
            raise ParameterError(f"unknown model {self.model!r}")
        if self.n < 0:
            raise ParameterError("n must be non-negative")
        if not 0 <= int(self.seed) < 2**64:
            raise ParameterError("seed must be a 64-bit unsigned integer")
        if self.model in ("gnp", "gnnp"):
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise ParameterError(f"p must lie in [0, 1], got {self.p}")
        else:
            if self.d is None or self.d < 1:
                raise ParameterError(f"d must be a positive integer, got {self.d}")
            if (self.d * self.n) % 2:
                raise ParameterError(f"d*n must be even (d={self.d}, n={self.n})")


def make_rng(seed: int, index: int | None = None) -> np.random.Generator:
    """PCG64 generator for a master seed, optionally split per trial index.

    Per-trial streams depend only on ``(seed, index)``, so serial and
    parallel runs draw identical samples.
    """
    if index is None:
        return np.random.default_rng(np.random.SeedSequence(int(seed)))
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(int(index),)))


def derive_seed(seed: int, index: int) -> int:
    """64-bit seed for trial ``index`` of a run with master ``seed``."""
    ss = np.random.SeedSequence(int(seed), spawn_key=(int(index),))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _sample_pairs(rng: np.random.Generator, total: int, p: float) -> np.ndarray:
    # Binomial edge count followed by a uniform subset has exactly the law of
    # independent Bernoulli(p) trials on every pair.
    k = rng.binomial(total, p) if total else 0
    if k == 0:
        return np.empty(0, dtype=np.int64)
    return np.sort(rng.choice(total, size=k, replace=False))


def gen_gnp(spec: RandomSpec) -> Graph:
    """Binomial random graph G(n, p)."""
    if spec.model != "gnp":
        raise ParameterError("gen_gnp needs a gnp spec")
    n = spec.n
    rng = make_rng(spec.seed)
    idx = _sample_pairs(rng, n * (n - 1) // 2, spec.p)
    rows = np.arange(n, dtype=np.int64)
    offsets = rows * n - rows * (rows + 1) // 2  # index of pair (i, i+1)
    u = np.searchsorted(offsets, idx, side="right") - 1
    v = idx - offsets[u] + u + 1
    return Graph(n, zip(u.tolist(), v.tolist()))


def gen_gnnp(spec: RandomSpec) -> BipartiteGraph:
    """Binomial random bipartite graph G(n, n, p)."""
    if spec.model != "gnnp":
        raise ParameterError("gen_gnnp needs a gnnp spec")
    n = spec.n
    rng = make_rng(spec.seed)
    idx = _sample_pairs(rng, n * n, spec.p)
    return BipartiteGraph(n, n, zip((idx // n).tolist(), (n + idx % n).tolist()))


def _pairing_array(n: int, d: int, rng: np.random.Generator) -> np.ndarray:
    points = np.repeat(np.arange(n, dtype=np.int64), d)
    rng.shuffle(points)
    return points.reshape(-1, 2)


def _pairs_simple(pairs: np.ndarray, n: int) -> bool:
    if pairs.size == 0:
        return True
    lo = np.minimum(pairs[:, 0], pairs[:, 1])
    hi = np.maximum(pairs[:, 0], pairs[:, 1])
    if np.any(lo == hi):
        return False
    keys = lo * n + hi
    return np.unique(keys).size == keys.size


def gen_pairing(spec: RandomSpec) -> Graph:
    """Pairing (configuration) model: a d-regular multigraph with loops.

    The d*n points are shuffled and consecutive entries paired, which is
    uniform over perfect matchings of the points.
    """
    if spec.model != "pairing":
        raise ParameterError("gen_pairing needs a pairing spec")
    pairs = _pairing_array(spec.n, spec.d, make_rng(spec.seed))
    return Graph(spec.n, pairs.tolist())


def pairing_is_simple(spec: RandomSpec) -> bool:
    """Whether ``gen_pairing(spec)`` is simple, without building the graph."""
    pairs = _pairing_array(spec.n, spec.d, make_rng(spec.seed))
    return _pairs_simple(pairs, spec.n)


def gen_regular_simple(spec: RandomSpec, max_attempts: int = 10_000) -> Graph:
    """Uniform random simple d-regular graph by rejection from the pairing model.

    Attempt ``i`` draws its pairing from ``make_rng(spec.seed, i)``.
    """
    if spec.model != "pairing":
        raise ParameterError("gen_regular_simple needs a pairing spec")
    for attempt in range(max_attempts):
        rng = make_rng(spec.seed, attempt)
        pairs = _pairing_array(spec.n, spec.d, rng)
        if _pairs_simple(pairs, spec.n):
            return Graph(spec.n, pairs.tolist())
    raise BudgetError(
        f"no simple pairing in {max_attempts} attempts (n={spec.n}, d={spec.d})",
        spent=max_attempts,
    )


def regular_attempts(spec: RandomSpec, max_attempts: int = 10_000) -> int:
    """Number of pairings ``gen_regular_simple`` draws before accepting."""
    for attempt in range(max_attempts):
        pairs = _pairing_array(spec.n, spec.d, make_rng(spec.seed, attempt))
        if _pairs_simple(pairs, spec.n):
            return attempt + 1
    raise BudgetError(f"no simple pairing in {max_attempts} attempts", spent=max_attempts)


# edge counting


def edges_between(g: Graph, S: Iterable[int], T: Iterable[int]) -> int:
    """Number of edges with one endpoint in S and the other in T."""
    S, T = set(S), set(T)
    if S & T:
        raise ParameterError("edges_between needs disjoint vertex sets")
    if len(S) > len(T):
        S, T = T, S
    adj = g.adj
    return sum(1 for u in S for w in adj[u] if w in T)


def edges_within(g: Graph, S: Iterable[int]) -> int:
    """Number of edges with both endpoints in S (loops included)."""
    S = set(S)
    return sum(1 for u, v in g.edges if u in S and v in S)

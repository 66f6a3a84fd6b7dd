"""Monochromatic components in edge-coloured graphs."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb
from typing import NamedTuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .colouring import Colouring
from .errors import BudgetError, ParameterError
from .graphs import BipartiteGraph, Graph, complete_graph
from .paths import components


def largest_component(g: Graph) -> list[int]:
    """Vertices of a largest component; ties go to the one with the lowest vertex."""
    best: list[int] = []
    for comp in components(g):
        if len(comp) > len(best):
            best = comp
    return best


def component_sizes(n: int, edges: np.ndarray) -> np.ndarray:
    """Sizes of all components of the graph on n vertices with the given (m, 2) edges."""
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    mat = coo_matrix((np.ones(len(edges)), (edges[:, 0], edges[:, 1])), shape=(n, n))
    _, labels = connected_components(mat, directed=False)
    return np.bincount(labels)


def bipartite_component_bound(h: BipartiteGraph) -> tuple[float, list[int]]:
    """Edge density eta = |E|/(|V1||V2|) and a component of order >= eta(|V1|+|V2|)."""
    if not isinstance(h, BipartiteGraph):
        raise ParameterError("bipartite_component_bound needs a BipartiteGraph")
    h.require_simple()
    if h.n1 == 0 or h.n2 == 0:
        return 0.0, largest_component(h)
    eta = Fraction(h.m, h.n1 * h.n2)
    comp = largest_component(h)
    if len(comp) < eta * (h.n1 + h.n2):
        raise AssertionError(f"component {len(comp)} below eta(|V1|+|V2|) = {float(eta * h.n)}")
    return float(eta), comp


def mono_component_spectrum(g: Graph, col: Colouring) -> list[int]:
    """Order of the largest component of each colour class (1 if the class is empty)."""
    col.check(g)
    if g.n == 0:
        return [0] * col.r
    edges = np.asarray(g.edges, dtype=np.int64).reshape(-1, 2)
    colours = np.asarray(col.colours, dtype=np.int64)
    return [int(component_sizes(g.n, edges[colours == c]).max()) for c in range(col.r)]


def _largest_class_component(n: int, edges, colours, colour: int) -> int:
    # bitmask flood fill; much cheaper than sparse matrices on tiny graphs
    masks = [0] * n
    for (u, v), c in zip(edges, colours):
        if c == colour:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    best, seen = 0, 0
    for v in range(n):
        if seen >> v & 1:
            continue
        comp, frontier = 1 << v, 1 << v
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = masks[low.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        best = max(best, comp.bit_count())
    return best


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q**0.5) + 1))


def affine_slope(p1: tuple[int, int], p2: tuple[int, int], q: int) -> int:
    """Parallel class of the line through two points of AG(2, q); q means vertical."""
    dx, dy = (p2[0] - p1[0]) % q, (p2[1] - p1[1]) % q
    if dx == 0:
        return q
    return dy * pow(dx, -1, q) % q


def affine_sharp_colouring(q: int) -> tuple[Graph, Colouring]:
    """K_{q^2} coloured by the q+1 parallel classes of the affine plane over Z_q.

    Vertex x*q + y is the point (x, y). Each colour class is q disjoint
    q-cliques (the lines of one slope), so every monochromatic component
    has exactly q = n/(r-1) vertices.
    """
    if not _is_prime(q):
        raise ParameterError(f"q must be prime, got {q}")
    g = complete_graph(q * q)
    colours = tuple(affine_slope(divmod(u, q), divmod(v, q), q) for u, v in g.edges)
    return g, Colouring(q + 1, colours)


class ComponentBound(NamedTuple):
    bound: float
    observed: int  # smallest largest-monochromatic-component seen
    holds: bool
    colourings: int
    witness: Colouring | None


def perturbed_component_bound(g: Graph, r: int, eps: float, col: Colouring | None = None,
                              budget: int = 10**6) -> ComponentBound:
    """Check for a monochromatic component of order >= (1/(r-1) - eps r^2) n.

    With ``col`` the given colouring is measured. Without it every
    r-colouring is enumerated (edge 0 fixed to colour 0), which is only
    feasible for tiny graphs. ``witness`` is the colouring achieving
    ``observed``.
    """
    g.require_simple()
    if r < 2:
        raise ParameterError("r must be at least 2")
    if not 0 <= eps <= 1 / r**2:
        raise ParameterError(f"eps must lie in [0, 1/r^2], got {eps}")
    if g.m < (1 - eps) * comb(g.n, 2) - 1e-9:
        raise ParameterError(f"graph has {g.m} edges, need >= (1-eps) C(n,2)")
    bound = (1 / (r - 1) - eps * r * r) * g.n
    if col is not None:
        worst = max(mono_component_spectrum(g, col))
        return ComponentBound(bound, worst, worst >= bound - 1e-9, 1, col)
    total = r ** max(g.m - 1, 0)
    if total > budget:
        raise BudgetError(f"{total} colourings exceed budget {budget}")
    worst, worst_cols = g.n + 1, None
    for rest in product(range(r), repeat=max(g.m - 1, 0)):
        cols = ((0,) + rest)[: g.m]
        size = max(_largest_class_component(g.n, g.edges, cols, c) for c in range(r))
        if size < worst:
            worst, worst_cols = size, cols
    witness = Colouring(r, worst_cols) if worst_cols is not None else None
    return ComponentBound(bound, worst, worst >= bound - 1e-9, total, witness)

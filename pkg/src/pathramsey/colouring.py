from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .graphs import Graph


@dataclass(frozen=True)
class Colouring:
    """Edge colouring with ``r`` colours, aligned with ``Graph.edges``."""

    r: int
    colours: tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise ParameterError("a colouring needs at least one colour")
        bad = [c for c in self.colours if not 0 <= c < self.r]
        if bad:
            raise ParameterError(f"colour {bad[0]} outside [0, {self.r})")

    def check(self, g: Graph) -> None:
        if len(self.colours) != g.m:
            raise ParameterError(f"colouring has {len(self.colours)} entries, graph has {g.m} edges")

    def class_graph(self, g: Graph, colour: int) -> Graph:
        """Spanning subgraph formed by the edges of one colour."""
        self.check(g)
        if not 0 <= colour < self.r:
            raise ParameterError(f"colour {colour} outside [0, {self.r})")
        return g.edge_subgraph(i for i, c in enumerate(self.colours) if c == colour)

    def permuted(self, perm) -> "Colouring":
        return Colouring(self.r, tuple(perm[c] for c in self.colours))

    def to_dict(self, g: Graph) -> dict:
        self.check(g)
        return {
            "r": self.r,
            "n": g.n,
            "edges": [[u, v, c] for (u, v), c in zip(g.edges, self.colours)],
        }

    @classmethod
    def from_dict(cls, data: dict) -> tuple[Graph, "Colouring"]:
        rows = data["edges"]
        g = Graph(int(data["n"]), [(u, v) for u, v, _ in rows])
        lookup: dict[tuple[int, int], list[int]] = {}
        for u, v, c in rows:
            lookup.setdefault((min(u, v), max(u, v)), []).append(int(c))
        colours = tuple(lookup[e].pop() for e in g.edges)
        return g, cls(int(data["r"]), colours)

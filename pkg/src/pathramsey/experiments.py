"""Monte Carlo experiments on random graphs with reproducible per-trial seeds."""

from __future__ import annotations

import csv
import io
import json
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .colouring import Colouring
from .components import _is_prime, affine_slope, component_sizes
from .errors import DomainWarning, ParameterError
from .graphs import (Graph, RandomSpec, derive_seed, gen_gnp, gen_regular_simple, make_rng,
                     pairing_is_simple)
from .paths import EXACT_BUDGET, longest_mono_path

STRATEGIES = ("random", "greedy", "affine")
QUANTILES = (0.05, 0.25, 0.5, 0.75, 0.95)


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]


def colour_random(g: Graph, r: int, rng: np.random.Generator) -> Colouring:
    return Colouring(r, tuple(rng.integers(0, r, size=g.m).tolist()))


def colour_greedy(g: Graph, r: int, rng: np.random.Generator) -> Colouring:
    """Visit edges in random order; give each the colour whose class
    component grows least (reusing a colour that already joins both ends
    costs nothing)."""
    dsus = [_DSU(g.n) for _ in range(r)]
    colours = [0] * g.m
    for i in rng.permutation(g.m).tolist():
        u, v = g.edges[i]
        best, best_cost = 0, None
        for c, dsu in enumerate(dsus):
            a, b = dsu.find(u), dsu.find(v)
            cost = 0 if a == b else dsu.size[a] + dsu.size[b]
            if best_cost is None or cost < best_cost:
                best, best_cost = c, cost
        dsus[best].union(u, v)
        colours[i] = best
    return Colouring(r, tuple(colours))


def colour_affine(g: Graph, r: int, rng: np.random.Generator) -> Colouring:
    """Project vertices onto the q^2 points of the affine plane (q = r-1,
    prime) and colour each edge by the slope of its endpoints. Edges inside
    one point's block get colour 0. Vertex v sits on point v mod q^2."""
    q = r - 1
    if not _is_prime(q):
        raise ParameterError(f"affine strategy needs r-1 prime, got r={r}")
    pts = [divmod(v % (q * q), q) for v in range(g.n)]
    colours = []
    for u, v in g.edges:
        colours.append(0 if pts[u] == pts[v] else affine_slope(pts[u], pts[v], q))
    return Colouring(r, tuple(colours))


_COLOURERS = {"random": colour_random, "greedy": colour_greedy, "affine": colour_affine}


@dataclass(frozen=True)
class TrialRow:
    trial: int
    seed: int
    colour: int
    comp_size: int
    ratio: float


def _dr_trial(args) -> list[TrialRow]:
    n, p, r, strategy, seed, index = args
    tseed = derive_seed(seed, index)
    g = gen_gnp(RandomSpec("gnp", n, tseed, p=p))
    col = _COLOURERS[strategy](g, r, make_rng(tseed, 1))
    edges = np.asarray(g.edges, dtype=np.int64).reshape(-1, 2)
    colours = np.asarray(col.colours, dtype=np.int64)
    rows = []
    for c in range(r):
        size = int(component_sizes(n, edges[colours == c]).max()) if n else 0
        rows.append(TrialRow(index, tseed, c, size, size / n if n else 0.0))
    return rows


def _mono_path_trial(args) -> list[TrialRow]:
    model, n, p, d, r, seed, index, exact = args
    tseed = derive_seed(seed, index)
    if model == "gnp":
        g = gen_gnp(RandomSpec("gnp", n, tseed, p=p))
    else:
        g = gen_regular_simple(RandomSpec("pairing", n, tseed, d=d))
    col = colour_random(g, r, make_rng(tseed, 1))
    rows = []
    for c in range(r):
        size = len(longest_mono_path(g, col, c, exact=exact, budget=max(EXACT_BUDGET, n)))
        rows.append(TrialRow(index, tseed, c, size, size / n if n else 0.0))
    return rows


@dataclass
class ExperimentResult:
    rows: list[TrialRow]
    summary: dict

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["trial", "seed", "colour", "comp_size", "ratio"])
        for row in self.rows:
            w.writerow([row.trial, row.seed, row.colour, row.comp_size, repr(row.ratio)])
        return buf.getvalue()

    def summary_json(self) -> str:
        return json.dumps(self.summary, indent=2, sort_keys=True) + "\n"


def _run(worker, tasks, jobs):
    if jobs <= 1:
        out = [worker(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            out = list(pool.map(worker, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [row for rows in out for row in rows]


def _summarise(rows: list[TrialRow], trials: int, params: dict) -> dict:
    best = np.zeros(trials)
    for row in rows:
        best[row.trial] = max(best[row.trial], row.ratio)
    stats = {"mean": float(best.mean()), "min": float(best.min()), "max": float(best.max())}
    stats["quantiles"] = {str(q): float(np.quantile(best, q)) for q in QUANTILES}
    return {"params": params, "trials": trials, "max_ratio": stats}


def dr_experiment(n: int, p: float, r: int, strategy: str, trials: int, seed: int,
                  jobs: int = 1) -> ExperimentResult:
    """Largest monochromatic component of r-coloured G(n, p), over trials.

    One row per (trial, colour). The summary reports the per-trial maximum
    over colours divided by n. Results do not depend on ``jobs``.
    """
    if strategy not in STRATEGIES:
        raise ParameterError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    if r < 1 or trials < 1 or n < 1:
        raise ParameterError("need n, r, trials >= 1")
    if strategy == "affine" and not _is_prime(r - 1):
        raise ParameterError(f"affine strategy needs r-1 prime, got r={r}")
    if p * n < 10:
        warnings.warn(f"p*n = {p * n:.3g} is small; components will be fragmented", DomainWarning)
    tasks = [(n, p, r, strategy, seed, i) for i in range(trials)]
    rows = _run(_dr_trial, tasks, jobs)
    params = {"kind": "dr", "n": n, "p": p, "r": r, "strategy": strategy, "seed": seed}
    return ExperimentResult(rows, _summarise(rows, trials, params))


def mono_path_experiment(model: str, n: int, r: int, trials: int, seed: int, p: float | None = None,
                         d: int | None = None, exact: bool = False, jobs: int = 1) -> ExperimentResult:
    """Longest monochromatic path under uniformly random r-colourings.

    ``comp_size`` holds the path's vertex count. With ``exact=False`` the
    lengths are lower bounds from the partition heuristic.
    """
    if model not in ("gnp", "pairing"):
        raise ParameterError(f"model must be gnp or pairing, got {model!r}")
    RandomSpec(model, n, seed, p=p, d=d)  # validate once up front
    if r < 1 or trials < 1 or n < 1:
        raise ParameterError("need n, r, trials >= 1")
    tasks = [(model, n, p, d, r, seed, i, exact) for i in range(trials)]
    rows = _run(_mono_path_trial, tasks, jobs)
    params = {"kind": "mono_path", "model": model, "n": n, "p": p, "d": d, "r": r,
              "seed": seed, "exact": exact}
    return ExperimentResult(rows, _summarise(rows, trials, params))


def pairing_simple_fraction(n: int, d: int, trials: int, seed: int) -> float:
    """Fraction of pairing-model samples that are simple; trial i uses derive_seed(seed, i)."""
    hits = sum(pairing_is_simple(RandomSpec("pairing", n, derive_seed(seed, i), d=d))
               for i in range(trials))
    return hits / trials


def rows_as_dicts(result: ExperimentResult) -> list[dict]:
    return [asdict(r) for r in result.rows]

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI2 = (3 - math.sqrt(5)) / 2


@dataclass(frozen=True)
class OptResult:
    point: tuple[float, ...]
    value: float
    tolerance: float
    iterations: int


def golden_section_minimize(f: Callable[[float], float], lo: float, hi: float,
                            tol: float = 1e-8, max_iter: int = 500) -> OptResult:
    """Minimise a unimodal function on [lo, hi] to an interval of width tol."""
    a, b = min(lo, hi), max(lo, hi)
    h = b - a
    c, d = a + INV_PHI2 * h, a + INV_PHI * h
    fc, fd = f(c), f(d)
    it = 0
    while h > tol and it < max_iter:
        it += 1
        if fc < fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + INV_PHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + INV_PHI * h
            fd = f(d)
    x = c if fc < fd else d
    return OptResult((x,), min(fc, fd), h, it)


def golden_section_maximize(f, lo, hi, tol=1e-8, max_iter=500) -> OptResult:
    res = golden_section_minimize(lambda x: -f(x), lo, hi, tol, max_iter)
    return OptResult(res.point, -res.value, res.tolerance, res.iterations)


def grid_then_golden_max(f, lo: float, hi: float, points: int = 401, tol: float = 1e-10) -> OptResult:
    """Locate the best grid cell, then polish with golden section inside it.

    Guards against mild non-unimodality across the full interval.
    """
    xs = np.linspace(lo, hi, points)
    vals = np.array([f(x) for x in xs])
    i = int(np.nanargmax(vals))
    left, right = xs[max(i - 1, 0)], xs[min(i + 1, points - 1)]
    res = golden_section_maximize(f, left, right, tol)
    if vals[i] > res.value:
        return OptResult((float(xs[i]),), float(vals[i]), res.tolerance, res.iterations)
    return res


def refine_grid_max(f: Callable[..., np.ndarray], bounds: Sequence[tuple[float, float]],
                    points: int = 9, tol: float = 1e-8, max_iter: int = 400,
                    shrink: float = 0.7) -> OptResult:
    """Maximise a vectorised function on a box by repeatedly zooming a grid.

    Each round evaluates a full tensor grid and recentres the box on the
    best point seen, shrinking its width by ``shrink`` (never below four
    grid steps) and clipping to the original bounds. Slow shrinking keeps
    maxima on the boundary from being cut off while the other coordinates
    are still coarse.
    """
    lo = np.array([b[0] for b in bounds], dtype=float)
    hi = np.array([b[1] for b in bounds], dtype=float)
    box_lo, box_hi = lo.copy(), hi.copy()
    best_x, best_v = None, -np.inf
    it = 0
    while it < max_iter:
        it += 1
        axes = [np.linspace(l, h, points) for l, h in zip(box_lo, box_hi)]
        mesh = np.meshgrid(*axes, indexing="ij")
        vals = np.asarray(f(*mesh), dtype=float)
        vals = np.where(np.isnan(vals), -np.inf, vals)
        idx = np.unravel_index(int(np.argmax(vals)), vals.shape)
        if vals[idx] >= best_v:
            best_v = float(vals[idx])
            best_x = np.array([m[idx] for m in mesh])
        step = (box_hi - box_lo) / (points - 1)
        if np.all(step <= tol):
            break
        half = np.maximum(2 * step, shrink * (box_hi - box_lo) / 2)
        box_lo = np.maximum(lo, best_x - half)
        box_hi = np.minimum(hi, best_x + half)
    return OptResult(tuple(float(x) for x in best_x), best_v, float(np.max(step)), it)

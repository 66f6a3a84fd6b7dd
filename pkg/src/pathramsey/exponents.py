"""First-moment exponents for the random-graph upper bounds.

Each ``f_*`` is the growth rate (per n) of the expected number of "bad" set
configurations; a negative maximum means none exist asymptotically, which
certifies the matching sufficient condition in ``certificates``.

All set and edge quantities are normalised by n. ``x log x`` is taken as 0
at x = 0.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import lgamma, log, sqrt

import numpy as np

from .errors import DomainWarning, ParameterError
from .optimize import OptResult, golden_section_minimize, grid_then_golden_max, refine_grid_max


def xlogx(x):
    """x log x with the continuous value 0 at x = 0 (scalar or array)."""
    if np.ndim(x) == 0:
        x = float(x)
        if x < 0:
            raise ParameterError(f"x log x undefined for x = {x}")
        return 0.0 if x == 0 else x * log(x)
    x = np.asarray(x, dtype=float)
    safe = np.where(x > 0, x, 1.0)
    out = np.where(x > 0, x * np.log(safe), 0.0)
    return np.where(x < 0, np.nan, out)


def log_factorial(x: float) -> float:
    return lgamma(x + 1)


def log_binom(a: float, b: float) -> float:
    return lgamma(a + 1) - lgamma(b + 1) - lgamma(a - b + 1)


def log_perfect_matchings(i: int) -> float:
    """log of i! / ((i/2)! 2^(i/2)), the number of perfect matchings on i points."""
    if i < 0 or i % 2:
        raise ParameterError(f"perfect matchings need an even, non-negative count, got {i}")
    return _log_matchings(i)


def _log_matchings(i: float) -> float:
    # real-valued continuation, used when point counts are not integers
    return lgamma(i + 1) - lgamma(i / 2 + 1) - (i / 2) * log(2)


# one hole, random d-regular graphs


def _check_c(c: float, low: float = 2.0) -> None:
    if not c > low:
        raise ParameterError(f"c must exceed {low}, got {c}")


def f_one_hole(a: float, c: float, d: float) -> float:
    """Exponent of the expected number of edgeless (S, T) pairs in G_{cn,d}.

    ``a`` is the number of S-to-outside edges divided by dn;
    0 <= a <= (c-2)/4.
    """
    _check_c(c)
    q = (c - 2) / 4
    if not -1e-15 <= a <= q + 1e-15:
        raise ParameterError(f"a = {a} outside [0, {q}]")
    a = min(max(a, 0.0), q)
    return (
        c * (1 - d / 2) * log(c)
        + q * (d - 2) * log(q)
        + (c + 2) / 2 * (d - 1) * log((c + 2) / 2)
        - d / 2 * xlogx(q - a)
        - d * xlogx(a)
        - d * xlogx((c + 2) / 2 - a)
        + d / 2 * xlogx((3 * c + 2) / 4 - a)
    )


def df_one_hole_da(a: float, c: float, d: float) -> float:
    """Closed-form partial derivative of ``f_one_hole`` in a (interior only)."""
    return -d / 2 * (
        2 * log(2) - log(c - 2 - 4 * a) + 2 * log(a) - 2 * log(c + 2 - 2 * a) + log(3 * c + 2 - 4 * a)
    )


def one_hole_stationary_point(c: float) -> float:
    """Smaller root of a^2 - c a + (c^2 - 4)/8, the maximiser of f_one_hole in a."""
    return c / 2 - sqrt(2 * c * c + 8) / 4


def g_one_hole(c: float, d: float) -> float:
    """max over a of f_one_hole(a, c, d)."""
    _check_c(c)
    a0 = one_hole_stationary_point(c)
    q = (c - 2) / 4
    if not 0 <= a0 <= q:
        warnings.warn(f"stationary point a0={a0} outside [0, {q}]; clamped", DomainWarning)
        a0 = min(max(a0, 0.0), q)
    return f_one_hole(a0, c, d)


def log_x_one_hole(a: float, c: float, d: float, n: float) -> float:
    """Exact log of the expected count X(a) in the pairing model at size n.

    Factorials of non-integral arguments use the Gamma function.
    """
    q = (c - 2) / 4
    dn = d * n
    return (
        log_binom(c * n, q * n)
        + log_binom(c * n - q * n, q * n)
        + log_binom(q * dn, a * dn)
        + log_binom((c + 2) / 2 * dn, a * dn)
        + _log_matchings(q * dn - a * dn)
        + log_factorial(a * dn)
        + _log_matchings((c + 2) / 2 * dn - a * dn + q * dn)
        - _log_matchings(c * dn)
    )


@dataclass(frozen=True)
class ConstantSearch:
    c: float
    d: int
    edges_per_n: float
    per_degree: dict


def min_c_one_hole(d: int, c_hi: float = 30.0, tol: float = 1e-10) -> float:
    """Smallest c with g_one_hole(c, d) <= 0 (g changes sign once in c)."""
    grid = np.linspace(2 + 1e-6, c_hi, 600)
    vals = [g_one_hole(x, d) for x in grid]
    idx = next((i for i, v in enumerate(vals) if v <= 0), None)
    if idx is None:
        return math.inf
    if idx == 0:
        return float(grid[0])
    lo, hi = float(grid[idx - 1]), float(grid[idx])
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if g_one_hole(mid, d) <= 0:
            hi = mid
        else:
            lo = mid
    return hi


def search_one_hole_constants(d_values=range(10, 61)) -> ConstantSearch:
    """Minimise cd/2 over integer d, taking for each d the least admissible c."""
    per = {d: min_c_one_hole(d) for d in d_values}
    best = min(per, key=lambda d: per[d] * d / 2)
    return ConstantSearch(per[best], best, per[best] * best / 2, per)


# Kovari-Sos-Turan limit of the one-hole condition


def f_kst(c: float) -> float:
    """Edges per n forced by the one-hole condition, with alpha = (c-2)/(4c)."""
    _check_c(c)
    alpha = (c - 2) / (4 * c)
    one_minus = (3 * c + 2) / (4 * c)
    return c / 2 * (log(alpha) / log(one_minus) - 1)


def kst_optimum(lo: float = 2.05, hi: float = 50.0, tol: float = 1e-9) -> OptResult:
    return golden_section_minimize(f_kst, lo, hi, tol)


# two holes, binomial random graphs


def f_binomial_two_holes(c: float, d: float) -> float:
    _check_c(c)
    return (
        c * log(c)
        + (c - 2) * log(c - 2)
        - 2 * log(2)
        - 2 * (c - 2) * log((c - 2) / 2)
        - d * (c - 2) ** 2 / 8
    )


# two holes, random d-regular graphs


def _two_holes_t_max(a: float, c: float) -> float:
    return min((c - 2) / 2 - 2 * a, 2.0)


def f_two_holes_regular(a: float, t: float, c: float, d: float) -> float:
    """Exponent of Y(a, t): the symmetric case |S_i| = |T_i| = (c-2)n/4, b = a.

    ``a`` is e(S_1, T_1)/dn, ``t`` is e(S_1 u S_2, outside)/dn.
    """
    _check_c(c)
    q = c / 4 - 1 / 2
    if not -1e-15 <= a <= q + 1e-15:
        raise ParameterError(f"a = {a} outside [0, {q}]")
    if not -1e-15 <= t <= _two_holes_t_max(a, c) + 1e-12:
        raise ParameterError(f"t = {t} outside [0, {_two_holes_t_max(a, c)}]")
    a, t = max(a, 0.0), max(t, 0.0)
    x = c / 2 - 1 - 2 * a
    return (
        c * log(c)
        + 4 * (d - 1) * xlogx(q)
        + (d - 1) * 2 * log(2)
        - 2 * d * xlogx(a)
        - d * xlogx(t)
        - d / 2 * c * log(c)
        - 4 * d * xlogx(q - a)
        - d * xlogx(2 - t)
        + d * xlogx(x)
        - d / 2 * xlogx(max(x - t, 0.0))
        + d / 2 * xlogx(c / 2 + 1 - 2 * a - t)
    )


def df_two_holes_dt(a: float, t: float, c: float, d: float) -> float:
    x = c / 2 - 1 - 2 * a
    y = c / 2 + 1 - 2 * a
    return d * (-log(t) + log(2 - t) + 0.5 * log(x - t) - 0.5 * log(y - t))


def two_holes_stationary_t(a: float, c: float) -> float:
    """Smaller root of t^2 - (c-4a) t + (c-2-4a)."""
    disc = (c - 4 * a) ** 2 - 4 * (c - 2 - 4 * a)
    if disc < 0:
        raise ParameterError(f"negative discriminant {disc} at a={a}, c={c}")
    return (c - 4 * a) / 2 - sqrt(disc) / 2


def g_two_holes_regular(a: float, c: float, d: float) -> float:
    """max over t of f_two_holes_regular(a, t, c, d)."""
    t0 = two_holes_stationary_t(a, c)
    tmax = _two_holes_t_max(a, c)
    if not -1e-12 <= t0 <= tmax + 1e-12:
        warnings.warn(f"stationary point t0={t0} outside [0, {tmax}]; clamped", DomainWarning)
    return f_two_holes_regular(a, min(max(t0, 0.0), tmax), c, d)


def max_g_two_holes(c: float, d: float) -> OptResult:
    """max over a in [0, (c-2)/4] of g_two_holes_regular."""
    return grid_then_golden_max(lambda a: g_two_holes_regular(a, c, d), 0.0, (c - 2) / 4)


def _rate_binom(A, B):
    return xlogx(A) - xlogx(B) - xlogx(A - B)


def _rate_fact(x):
    # log((xn)!)/n minus x log n
    return xlogx(x) - x


def _rate_match(g):
    # log M(gn)/n minus (g/2) log n
    return xlogx(g) - g - xlogx(g / 2) + g / 2 - g / 2 * log(2)


def two_holes_rate(s, a, b, t, c: float, d: float):
    """Stirling rate of the full count X(s, a, b, t) (vectorised).

    The n log n parts of the factorials cancel, so this is the limit of
    log X / n.
    """
    h = (c - 2) / 2
    return (
        _rate_binom(c, s)
        + _rate_binom(c - s, h - s)
        + _rate_binom((c + 2) / 2, s)
        + _rate_binom((c + 2) / 2 - s, h - s)
        + _rate_binom(s * d, a * d) + _rate_binom((h - s) * d, a * d) + _rate_fact(a * d)
        + _rate_binom(s * d, b * d) + _rate_binom((h - s) * d, b * d) + _rate_fact(b * d)
        + _rate_binom((h - a - b) * d, t * d) + _rate_binom(2 * d, t * d) + _rate_fact(t * d)
        + _rate_match((h - a - b - t) * d)
        + _rate_match(((c + 2) / 2 - a - b - t) * d)
        - _rate_match(c * d)
    )


def log_x_two_holes(s: float, a: float, b: float, t: float, c: float, d: float, n: float) -> float:
    """Exact log of X(s, a, b, t) at size n via the Gamma function."""
    h = (c - 2) / 2
    dn = d * n
    return (
        log_binom(c * n, s * n)
        + log_binom((c - s) * n, (h - s) * n)
        + log_binom((c + 2) / 2 * n, s * n)
        + log_binom(((c + 2) / 2 - s) * n, (h - s) * n)
        + log_binom(s * dn, a * dn) + log_binom((h - s) * dn, a * dn) + log_factorial(a * dn)
        + log_binom(s * dn, b * dn) + log_binom((h - s) * dn, b * dn) + log_factorial(b * dn)
        + log_binom((h - a - b) * dn, t * dn) + log_binom(2 * dn, t * dn) + log_factorial(t * dn)
        + _log_matchings((h - a - b - t) * dn)
        + _log_matchings(((c + 2) / 2 - a - b - t) * dn)
        - _log_matchings(c * dn)
    )


def verify_max_location(c: float, d: float, grid: int = 9, tol: float = 1e-8) -> OptResult:
    """Maximise the full two-holes rate over (s, a, b, t).

    The feasible region 0 <= a, b <= s <= (c-2)/4,
    0 <= t <= min((c-2)/2 - a - b, 2) is searched inside its bounding box,
    with infeasible grid points discarded.
    """
    _check_c(c)
    h = (c - 2) / 2

    def rate(s, a, b, t):
        ok = (a <= s) & (b <= s) & (t <= np.minimum(h - a - b, 2.0))
        with np.errstate(invalid="ignore"):
            v = two_holes_rate(s, a, b, t, c, d)
        return np.where(ok, v, np.nan)

    bounds = [(0.0, h / 2), (0.0, h / 2), (0.0, h / 2), (0.0, 2.0)]
    return refine_grid_max(rate, bounds, points=grid, tol=tol)


# more colours, bipartite binomial graphs


@dataclass(frozen=True)
class MulticolourConstants:
    r: int
    c: int
    d: int
    exponent_ratio: Fraction  # d c / 2^(r+2), equals 4r
    edges_per_n: int  # c^2 d = 32 r 4^r
    claimed_bound: int  # 33 r 4^r


def multicolour_constants(r: int) -> MulticolourConstants:
    if r < 2:
        raise ParameterError("r must be at least 2")
    c, d = 2 ** (r + 1), 8 * r
    ratio = Fraction(d * c, 2 ** (r + 2))
    if ratio != 4 * r or c * c * d != 32 * r * 4**r:
        raise AssertionError("multicolour constants inconsistent")
    return MulticolourConstants(r, c, d, ratio, c * c * d, 33 * r * 4**r)


def multicolour_exponent(r: int, c: float, d: float) -> float:
    """Rate per n of the bound on edgeless (S, T) pairs in G(cn, cn, d/n).

    With |S| = |T| = xn, x = c/2^(r+2), the expectation is at most
    (2^(r+2) e)^(2xn) exp(-d x^2 n).
    """
    x = c / 2 ** (r + 2)
    return 2 * x * log(2 ** (r + 2) * math.e) - d * x * x


def chernoff_bound(mean: float, eps: float) -> float:
    """2 exp(-eps^2 mean / 3), bounding P(|X - EX| >= eps EX) for binomial X."""
    if not 0 < eps < 1.5:
        raise ParameterError(f"eps must lie in (0, 3/2), got {eps}")
    if mean <= 0:
        raise ParameterError("mean must be positive")
    return 2 * math.exp(-eps * eps * mean / 3)

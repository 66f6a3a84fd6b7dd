"""The table of numerical constants, recomputed and compared to published values."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from .exponents import (f_binomial_two_holes, g_one_hole, kst_optimum, max_g_two_holes,
                        multicolour_constants, multicolour_exponent, search_one_hole_constants,
                        verify_max_location)
from .lower_bounds import lower_bound_formula

DEFAULT_TOLERANCE = 0.005


@dataclass(frozen=True)
class ConstantRow:
    name: str
    computed: float
    published: float
    relation: str  # "<", "<=", "=", "~" (within tolerance)
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _row(name, computed, published, relation, tolerance=0.0) -> ConstantRow:
    computed, published = float(computed), float(published)
    if relation == "<":
        ok = computed < published
    elif relation == "<=":
        ok = computed <= published
    elif relation == "=":
        ok = computed == published
    else:
        ok = abs(computed - published) <= tolerance
    return ConstantRow(name, computed, published, relation, tolerance, ok)


def _dec(x: str) -> Fraction:
    return Fraction(x)


def constants_table(tolerance: float = DEFAULT_TOLERANCE, search: bool = True) -> list[ConstantRow]:
    """Recompute every constant. ``tolerance`` applies to the approximate rows."""
    rows = []

    # one hole, random regular graphs
    rows.append(_row("g_one_hole(5.219, 30)", g_one_hole(5.219, 30), -0.0005, "<"))
    prod = _dec("5.219") * 30 / 2
    rows.append(_row("5.219*30/2", prod, 78.285, "="))
    rows.append(_row("5.219*30/2 vs 78.3", prod, 78.3, "<="))
    if search:
        best = search_one_hole_constants()
        rows.append(_row("best integer d, one hole", best.d, 30, "="))
        rows.append(_row("min c*d/2, one hole", best.edges_per_n, 78.3, "<="))

    # Kovari-Sos-Turan limit
    opt = kst_optimum()
    rows.append(_row("argmin f_kst", opt.point[0], 5.633, "~", tolerance))
    rows.append(_row("min f_kst", opt.value, 26.415, "~", tolerance))

    # two holes, binomial
    rows.append(_row("f_binomial_two_holes(5.28, 6)", f_binomial_two_holes(5.28, 6), 0.0, "<"))
    rows.append(_row("5.28^2*6/2", _dec("5.28") ** 2 * 6 / 2, 83.7, "<"))

    # two holes, random regular
    mg = max_g_two_holes(5.4806, 27)
    rows.append(_row("max_a g_two_holes(5.4806, 27)", mg.value, -0.0001, "<"))
    prod = _dec("5.4806") * 27 / 2
    rows.append(_row("5.4806*27/2", prod, 73.9881, "="))
    rows.append(_row("5.4806*27/2 vs 74", prod, 74, "<="))
    loc = verify_max_location(5.4806, 27)
    s, a, b, _ = loc.point
    rows.append(_row("full-rate max vs max_a g", loc.value, mg.value, "~", 1e-6))
    rows.append(_row("maximiser s vs (c-2)/4", s, (5.4806 - 2) / 4, "~", 1e-4))
    rows.append(_row("maximiser a - b", a - b, 0.0, "~", 1e-4))

    # lower bound, two colours
    for n in (10, 100, 1000):
        rows.append(_row(f"lower bound r=2, n={n}", lower_bound_formula(n, 2),
                         Fraction(5 * n, 2) - Fraction(15, 2), "="))
    rows.append(_row("lower bound r=1, n=50", lower_bound_formula(50, 1), 49, "="))

    # more colours
    for r in range(2, 7):
        mc = multicolour_constants(r)
        rows.append(_row(f"c^2 d vs 33 r 4^r, r={r}", mc.edges_per_n, mc.claimed_bound, "<"))
        rows.append(_row(f"c^2 d = 32 r 4^r, r={r}", mc.edges_per_n, 32 * r * 4**r, "="))
        rows.append(_row(f"multicolour exponent, r={r}", multicolour_exponent(r, mc.c, mc.d), 0.0, "<"))
    return rows


def format_table(rows: list[ConstantRow]) -> str:
    width = max(len(r.name) for r in rows)
    lines = [f"{'constant':<{width}}  {'computed':>14}  rel  {'published':>12}  result"]
    for r in rows:
        rel = f"~{r.tolerance:g}" if r.relation == "~" else r.relation
        lines.append(f"{r.name:<{width}}  {r.computed:>14.9g}  {rel:<3}  {r.published:>12.9g}  "
                     f"{'PASS' if r.passed else 'FAIL'}")
    return "\n".join(lines)

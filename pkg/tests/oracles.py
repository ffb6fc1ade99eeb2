"""Independent oracles used by the test suite.

Everything here deliberately avoids the library's own code paths: hull
correctness is checked against an exact-rational LP, lattice counts against a
straight nested-loop box scan, and tuple counts against an unpruned search
and a value-multiplicity search with a different recursion shape.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd


# ---------------------------------------------------------------------------
# Exact phase-1 simplex method (Bland's rule) over the rationals.
# ---------------------------------------------------------------------------


def lp_feasible(a_rows: list[list[Fraction]], b: list[Fraction]) -> bool:
    """Is there x >= 0 with A x = b? Exact arithmetic, Bland's rule."""
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    rows = []
    rhs = []
    for row, bb in zip(a_rows, b):
        row = [Fraction(x) for x in row]
        bb = Fraction(bb)
        if bb < 0:
            row = [-x for x in row]
            bb = -bb
        rows.append(row)
        rhs.append(bb)
    # tableau with artificial variables forming the initial basis
    tab = [rows[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = list(range(n, n + m))
    # objective: minimize sum of artificials; reduced cost row
    cost = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n + m + 1):
            cost[j] += tab[i][j]
    for j in range(n, n + m):
        cost[j] -= 1

    while True:
        enter = next((j for j in range(n + m) if cost[j] > 0), None)
        if enter is None:
            break
        best_ratio = None
        leave = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < basis[leave]
                ):
                    best_ratio = ratio
                    leave = i
        if leave is None:
            break  # unbounded direction cannot happen in phase 1
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, tab[leave])]
        basis[leave] = enter
    objective = cost[-1]
    return objective == 0


def point_in_hull(point, points) -> bool:
    """Convex-combination feasibility via the exact LP."""
    pts = [list(map(Fraction, p)) for p in points]
    tgt = list(map(Fraction, point))
    d = len(tgt)
    a_rows = [[p[i] for p in pts] for i in range(d)]
    a_rows.append([Fraction(1)] * len(pts))
    return lp_feasible(a_rows, tgt + [Fraction(1)])


def hull_vertices_by_lp(points) -> list:
    """Extreme points: those not in the hull of the remaining points."""
    pts = [tuple(map(Fraction, p)) for p in points]
    uniq = sorted(set(pts))
    out = []
    for i, p in enumerate(uniq):
        others = uniq[:i] + uniq[i + 1 :]
        if not others or not point_in_hull(p, others):
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# Straight nested-loop lattice scan of a simplex's bounding box.
# ---------------------------------------------------------------------------


def simplex_lattice_count_by_box_scan(legs) -> int:
    """Count integer points with x >= 0 and sum x_i/legs_i <= 1 by scanning the
    whole box [0, floor(leg_i)] with integer weights; no pruning anywhere."""
    legs = [Fraction(x) for x in legs]
    scale = 1
    for a in legs:
        scale = scale * a.numerator // gcd(scale, a.numerator)
    weights = [int(scale * a.denominator / a.numerator) for a in legs]
    His = [a.numerator // a.denominator for a in legs]

    def scan(i: int, acc: int) -> int:
        if i == len(legs):
            return 1 if acc <= scale else 0
        total = 0
        for x in range(His[i] + 1):
            total += scan(i + 1, acc + weights[i] * x)
        return total

    return scan(0, 0)


# ---------------------------------------------------------------------------
# Independent searches for the unit-fraction tuple counts.
# ---------------------------------------------------------------------------

# largest possible final denominator for small d (greedy doubling growth)
UNPRUNED_CAP = {1: 1, 2: 2, 3: 6, 4: 42}


def unpruned_tuples(d: int) -> list[tuple[int, ...]]:
    """All sorted d-tuples with unit reciprocal sum by capped exhaustive scan."""
    cap = UNPRUNED_CAP[d]
    out = []
    for combo in combinations_with_replacement(range(1, cap + 1), d):
        num, den = 0, 1
        for a in combo:
            num, den = num * a + den, den * a
        if num == den:
            out.append(combo)
    return out


def count_by_value_multiplicity(d: int) -> int:
    """Count solutions by recursing on (value, multiplicity) pairs instead of
    positions: a structurally different search tree from the library's."""

    def rec(num: int, den: int, slots: int, min_v: int) -> int:
        if slots == 0:
            return 1 if num == 0 else 0
        if num <= 0:
            return 0
        total = 0
        lo = max(min_v, -(-den // num))
        hi = (slots * den) // num
        for v in range(lo, hi + 1):
            for mult in range(1, slots + 1):
                nn = num * v - mult * den
                if nn < 0:
                    break
                nd = den * v
                g = gcd(nn, nd) if nn else 1
                total += rec(nn // g if nn else 0, nd // g if nn else 1, slots - mult, v + 1)
        return total

    return rec(1, 1, d, 1)

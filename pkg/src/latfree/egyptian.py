"""Enumeration of the sorted positive-integer tuples whose reciprocals sum to 1.

For dimension d this is the set of all ways to write 1 as a sum of d unit
fractions with nondecreasing denominators. The search streams tuples in
lexicographic order using exact integer arithmetic throughout.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator

from .errors import DimensionOutOfRange, InvalidInput, NonPositiveComponent

DEFAULT_MAX_D = 8


def reciprocal_sum(components) -> Fraction:
    """Exact sum of reciprocals of positive rational components."""
    total = Fraction(0)
    for c in components:
        c = Fraction(c)
        if c <= 0:
            raise NonPositiveComponent(f"component {c} is not positive")
        total += Fraction(c.denominator, c.numerator)
    return total


def validate_tuple(a) -> tuple[int, ...]:
    """Check the tuple invariants: positive integers, sorted, reciprocals sum to 1."""
    out = []
    for x in a:
        f = Fraction(x)
        if f.denominator != 1:
            raise InvalidInput(f"component {x} is not an integer")
        out.append(f.numerator)
    tup = tuple(out)
    if not tup:
        raise InvalidInput("empty tuple")
    if any(x <= 0 for x in tup):
        raise InvalidInput("components must be positive")
    if list(tup) != sorted(tup):
        raise InvalidInput(f"components must be sorted ascending: {tup}")
    if reciprocal_sum(tup) != 1:
        raise InvalidInput(f"reciprocals of {tup} sum to {reciprocal_sum(tup)}, not 1")
    return tup


def _check_dim(d: int, max_d: int) -> None:
    if not 1 <= d <= max_d:
        raise DimensionOutOfRange(f"d={d} outside 1..{max_d}")


def _search(prefix: tuple[int, ...], num: int, den: int, slots: int, lo_min: int) -> Iterator[tuple[int, ...]]:
    # remaining target is num/den > 0 in lowest terms
    if slots == 1:
        if num == 1 or den % num == 0:
            a = den // num
            if num * a == den and a >= lo_min:
                yield prefix + (a,)
        return
    lo = max(lo_min, -(-den // num))  # ceil(den/num)
    hi = (slots * den) // num
    for a in range(lo, hi + 1):
        nn = num * a - den
        if nn == 0:
            continue  # remaining slots would need zero components
        nd = den * a
        g = gcd(nn, nd)
        yield from _search(prefix + (a,), nn // g, nd // g, slots - 1, a)


def enumerate_tuples(d: int, max_d: int = DEFAULT_MAX_D) -> Iterator[tuple[int, ...]]:
    """Stream every solution for dimension d exactly once, lexicographically.

    Position i with remaining target r and previous value p ranges over
    max(p, ceil(1/r)) <= a_i <= floor((slots)/r) where slots counts the
    positions left including i.
    """
    _check_dim(d, max_d)
    yield from _search((), 1, 1, d, 1)


def _count(num: int, den: int, slots: int, lo_min: int) -> int:
    if slots == 1:
        if den % num == 0 and den // num >= lo_min:
            return 1
        return 0
    total = 0
    lo = max(lo_min, -(-den // num))
    hi = (slots * den) // num
    for a in range(lo, hi + 1):
        nn = num * a - den
        if nn == 0:
            continue
        nd = den * a
        g = gcd(nn, nd)
        total += _count(nn // g, nd // g, slots - 1, a)
    return total


def _count_first_branch(args: tuple[int, int]) -> int:
    d, a1 = args
    if d == 1:
        return 1 if a1 == 1 else 0
    nn = a1 - 1
    nd = a1
    g = gcd(nn, nd)
    return _count(nn // g, nd // g, d - 1, a1)


def count_tuples(d: int, jobs: int = 1, max_d: int = DEFAULT_MAX_D) -> int:
    """Number of solutions for dimension d; optionally parallel over the first component.

    The split is by disjoint first-component subtrees and the reduction is a sum,
    so the result is independent of the partitioning.
    """
    _check_dim(d, max_d)
    if jobs <= 1:
        return _count(1, 1, d, 1)
    first_values = [(d, a1) for a1 in range(1, d + 1)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_first_branch, first_values))


@dataclass(frozen=True)
class GrowthRow:
    d: int
    count: int
    lnln_count: float | None  # display only; no predicate depends on it
    d_over_ln_d: float | None


def growth_report(d_max: int, jobs: int = 1, max_d: int = DEFAULT_MAX_D) -> list[GrowthRow]:
    """Observational growth table: counts with ln ln |count| and d/ln d columns.

    The ln ln cell is blank unless the count is at least 3; the d/ln d cell is
    blank for d = 1 (ln 1 = 0).
    """
    _check_dim(d_max, max_d)
    rows = []
    for d in range(1, d_max + 1):
        count = count_tuples(d, jobs=jobs, max_d=max_d)
        lnln = math.log(math.log(count)) if count >= 3 else None
        ratio = d / math.log(d) if d >= 2 else None
        rows.append(GrowthRow(d=d, count=count, lnln_count=lnln, d_over_ln_d=ratio))
    return rows

"""Reciprocal-sum-preserving component replacement maps on positive leg vectors.

Each map rewrites the last component t of a positive vector using an exact
identity on 1/t, so the sum of reciprocals of the output equals that of the
input. `lift` composes the three maps to turn a sorted unit-fraction tuple of
length d into a sorted leg vector of length d+5 with exactly one half-integral
component.
"""

from __future__ import annotations

from fractions import Fraction

from .egyptian import reciprocal_sum, validate_tuple
from .errors import NonPositiveComponent, PostconditionFailed
from .linalg import Vec, vec

LegVector = Vec


def _positive(a) -> LegVector:
    out = vec(a)
    if not out:
        raise NonPositiveComponent("empty leg vector")
    if any(x <= 0 for x in out):
        raise NonPositiveComponent(f"legs must be positive: {out}")
    return out


def split_two(a) -> LegVector:
    """Replace the last component t by (t+1, t(t+1)); 1/t = 1/(t+1) + 1/(t(t+1))."""
    a = _positive(a)
    t = a[-1]
    return a[:-1] + (t + 1, t * (t + 1))


def split_four(a) -> LegVector:
    """Replace the last component t by (t+3, t(t+1), (t+1)(t+3), (t+1)(t+3)).

    Composition of the two-term split with 1/s = 1/(s+2) + 2/(s(s+2)) applied
    to s = t+1.
    """
    a = _positive(a)
    t = a[-1]
    return a[:-1] + (t + 3, t * (t + 1), (t + 1) * (t + 3), (t + 1) * (t + 3))


def split_three_halves(a) -> LegVector:
    """Replace the last component t by ((3/2)t, 3t); 1/t = 2/(3t) + 1/(3t).

    The next-to-last output component is non-integral exactly when t is an
    odd integer.
    """
    a = _positive(a)
    t = a[-1]
    return a[:-1] + (Fraction(3, 2) * t, 3 * t)


def lift(a) -> LegVector:
    """Lift a sorted unit-fraction tuple of length d to a leg vector of length d+5.

    Composes the three splits (two-term, then four-term, then three-halves) and
    checks the facts the construction relies on: the reciprocal sum stays 1, the
    two-term split ends in an even component, the four-term split ends in an odd
    one, and the result is sorted with exactly one non-integral component (of
    denominator 2, in the next-to-last position).
    """
    tup = validate_tuple(a)
    stage1 = split_two(vec(tup))
    if stage1[-1].numerator % 2 != 0:
        raise PostconditionFailed(f"two-term split of {tup} ended oddly: {stage1}")
    stage2 = split_four(stage1)
    if stage2[-1].numerator % 2 != 1:
        raise PostconditionFailed(f"four-term split of {tup} ended evenly: {stage2}")
    out = split_three_halves(stage2)
    if reciprocal_sum(out) != 1:
        raise PostconditionFailed(f"lift of {tup} does not preserve the unit sum")
    if list(out) != sorted(out):
        raise PostconditionFailed(f"lift of {tup} is not sorted: {out}")
    nonint = [i for i, x in enumerate(out) if x.denominator != 1]
    if nonint != [len(out) - 2] or out[-2].denominator != 2:
        raise PostconditionFailed(f"lift of {tup} has wrong non-integral pattern: {out}")
    return out

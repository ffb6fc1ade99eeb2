"""Exact rational vectors and fraction-free integer linear algebra.

All predicates in the package reduce to the primitives here; nothing in this
module ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
IntVec = tuple[int, ...]


def vec(xs: Iterable) -> Vec:
    return tuple(x if isinstance(x, Fraction) else Fraction(x) for x in xs)


def zero_vec(dim: int) -> Vec:
    return (Fraction(0),) * dim


def unit_vec(dim: int, axis: int, scale=1) -> Vec:
    v = [Fraction(0)] * dim
    v[axis] = Fraction(scale)
    return tuple(v)


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def smul(c, a: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * x for x in a)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def idot(a: IntVec, b: IntVec) -> int:
    s = 0
    for x, y in zip(a, b):
        s += x * y
    return s


def is_integral_vec(x: Sequence) -> bool:
    return all(Fraction(c).denominator == 1 for c in x)


def fmt_frac(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def content(coeffs: Iterable[int]) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return g


def primitive(coeffs: Sequence[int]) -> IntVec:
    """Divide an integer vector by its content, keeping signs."""
    g = content(coeffs)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(c // g for c in coeffs)


def scale_to_int(points: Sequence[Sequence]) -> tuple[list[IntVec], int]:
    """Scale rational points by the lcm of all denominators; returns (points, factor)."""
    factor = 1
    fpts = [vec(p) for p in points]
    for p in fpts:
        for c in p:
            factor = lcm(factor, c.denominator)
    out = [tuple(int(c * factor) for c in p) for p in fpts]
    return out, factor


class IntEchelon:
    """Incremental fraction-free row echelon over the integers.

    Rows are kept with strictly increasing pivot columns, so eliminating a
    candidate row against them in pivot order cannot reintroduce earlier
    pivots. Used for exact rank tracking and greedy basis selection.
    """

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def residual(self, row: Sequence[int]) -> list[int]:
        r = list(row)
        for b, p in zip(self.rows, self.pivots):
            if r[p]:
                bp, rp = b[p], r[p]
                r = [bp * x - rp * y for x, y in zip(r, b)]
                g = content(r)
                if g > 1:
                    r = [x // g for x in r]
        return r

    def add(self, row: Sequence[int]) -> bool:
        """Insert a row; True iff it increased the rank."""
        r = self.residual(row)
        piv = next((j for j, x in enumerate(r) if x), None)
        if piv is None:
            return False
        lo = 0
        while lo < len(self.pivots) and self.pivots[lo] < piv:
            lo += 1
        self.rows.insert(lo, r)
        self.pivots.insert(lo, piv)
        return True


def affine_dim(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of a point set (-1 for the empty set)."""
    if not points:
        return -1
    ipts, _ = scale_to_int(points)
    base = ipts[0]
    ech = IntEchelon(len(base))
    for p in ipts[1:]:
        ech.add([x - y for x, y in zip(p, base)])
    return ech.rank


def greedy_affine_basis(points: Sequence[Sequence]) -> list[int]:
    """Indices of points whose differences from points[0] form a basis of the hull."""
    ipts, _ = scale_to_int(points)
    base = ipts[0]
    ech = IntEchelon(len(base))
    chosen = []
    for i, p in enumerate(ipts[1:], start=1):
        if ech.add([x - y for x, y in zip(p, base)]):
            chosen.append(i)
    return chosen


def int_kernel_vector(rows: Sequence[Sequence[int]], width: int) -> IntVec:
    """Primitive integer vector spanning the kernel of a rank width-1 row set."""
    ech = IntEchelon(width)
    for r in rows:
        ech.add(r)
    if ech.rank != width - 1:
        raise ValueError(f"expected corank 1, got rank {ech.rank} of width {width}")
    pivset = set(ech.pivots)
    free = next(j for j in range(width) if j not in pivset)
    sol: list[Fraction | None] = [None] * width
    sol[free] = Fraction(1)
    for b, p in zip(reversed(ech.rows), reversed(ech.pivots)):
        acc = Fraction(0)
        for j in range(p + 1, width):
            if b[j]:
                acc += b[j] * sol[j]
        sol[p] = -acc / b[p]
    den = 1
    for x in sol:
        den = lcm(den, x.denominator)
    return primitive([int(x * den) for x in sol])


def hyperplane_through(points: Sequence[IntVec]) -> tuple[IntVec, int]:
    """Primitive (normal, rhs) of the hyperplane spanned by k affinely independent
    integer points in Z^k, with normal . x = rhs on the plane."""
    k = len(points[0])
    if len(points) != k:
        raise ValueError(f"need exactly {k} points, got {len(points)}")
    p0 = points[0]
    rows = [[p[j] - p0[j] for j in range(k)] for p in points[1:]]
    normal = int_kernel_vector(rows, k)
    rhs = idot(normal, p0)
    return normal, rhs


def solve_unique(a_rows: Sequence[Sequence], b: Sequence) -> Vec | None:
    """Solve A x = b exactly; None unless there is exactly one solution."""
    m = len(a_rows)
    if m == 0:
        return None
    n = len(a_rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(bb)] for row, bb in zip(a_rows, b)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n]:
            return None  # inconsistent
    if len(pivot_cols) < n:
        return None  # underdetermined
    x = [Fraction(0)] * n
    for i, c in enumerate(pivot_cols):
        x[c] = aug[i][n]
    return tuple(x)


def mat_inverse(a_rows: Sequence[Sequence]) -> list[list[Fraction]] | None:
    """Exact inverse of a square matrix, or None if singular."""
    n = len(a_rows)
    aug = [
        [Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
        for i, row in enumerate(a_rows)
    ]
    for c in range(n):
        pr = next((i for i in range(c, n) if aug[i][c]), None)
        if pr is None:
            return None
        aug[c], aug[pr] = aug[pr], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def det(a_rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Gaussian elimination with row swaps."""
    n = len(a_rows)
    m = [[Fraction(x) for x in row] for row in a_rows]
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            sign = -sign
        pv = m[c][c]
        result *= pv
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / pv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * result

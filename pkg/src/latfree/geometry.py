"""Exact rational polytopes: convex hulls, facets, lattice points, integer hulls.

Every polytope carries both a vertex description and an irredundant
facet-halfspace description with incidence data. All predicates are exact;
halfspaces are normalized to coprime integer coefficients with the polytope
on the `normal . x <= rhs` side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from .errors import (
    BudgetExceeded,
    DegenerateInput,
    EmptyHull,
    NotFullDimensional,
    ReconstructionUnderdetermined,
)
from .linalg import (
    IntEchelon,
    IntVec,
    Vec,
    affine_dim,
    dot,
    fmt_frac,
    greedy_affine_basis,
    hyperplane_through,
    idot,
    is_integral_vec,
    parse_frac,
    primitive,
    scale_to_int,
    solve_unique,
    unit_vec,
    vadd,
    vec,
    vsub,
    zero_vec,
)

DEFAULT_BUDGET = 10**8

Halfspace = tuple[IntVec, int]  # normal . x <= rhs


def canon_halfspace(normal: Sequence[int], rhs: int) -> Halfspace:
    """Coprime integer form of a halfspace, orientation preserved."""
    prim = primitive(tuple(normal) + (rhs,))
    return prim[:-1], prim[-1]


@dataclass(frozen=True)
class AffineChart:
    """Exact parametrization of the affine hull of a lower-dimensional polytope."""

    origin: Vec
    basis: tuple[Vec, ...]

    @cached_property
    def _solver(self) -> tuple[tuple[int, ...], list[list[Fraction]]]:
        """Coordinate rows making the basis matrix invertible, plus that inverse."""
        k = len(self.basis)
        rows = [[b[i] for b in self.basis] for i in range(len(self.origin))]
        irows, _ = scale_to_int(rows)
        ech = IntEchelon(k)
        sel = [i for i, row in enumerate(irows) if ech.add(row)]
        from .linalg import mat_inverse

        inv = mat_inverse([rows[i] for i in sel])
        assert inv is not None
        return tuple(sel), inv

    def to_local(self, x: Sequence) -> Vec | None:
        """Coordinates of x in the chart, or None if x is off the flat."""
        x = vec(x)
        if not self.basis:
            return () if x == self.origin else None
        sel, inv = self._solver
        y = [x[i] - self.origin[i] for i in sel]
        t = tuple(sum(row[j] * y[j] for j in range(len(y))) for row in inv)
        if self.to_ambient(t) != x:
            return None
        return t

    def to_ambient(self, t: Sequence) -> Vec:
        out = self.origin
        for c, b in zip(vec(t), self.basis):
            out = vadd(out, tuple(c * x for x in b))
        return out


@dataclass(frozen=True)
class Polytope:
    """Bounded rational polytope in vertex and halfspace form.

    `vertices` are exactly the extreme points, lexicographically sorted.
    For a full-dimensional polytope `chart` is None and halfspaces live in
    ambient coordinates; otherwise they live in chart coordinates.
    """

    dim: int
    vertices: tuple[Vec, ...]
    halfspaces: tuple[Halfspace, ...]
    incidence: tuple[tuple[int, ...], ...]
    chart: AffineChart | None = None

    @property
    def affine_dimension(self) -> int:
        return len(self.chart.basis) if self.chart is not None else self.dim

    @property
    def is_full_dimensional(self) -> bool:
        return self.chart is None

    @property
    def is_integral(self) -> bool:
        return all(is_integral_vec(v) for v in self.vertices)

    def local_coords(self, x: Sequence) -> Vec | None:
        if self.chart is None:
            return vec(x)
        return self.chart.to_local(x)

    def contains(self, x: Sequence) -> bool:
        loc = self.local_coords(x)
        if loc is None:
            return False
        return all(dot(n, loc) <= r for n, r in self.halfspaces)

    def in_interior(self, x: Sequence) -> bool:
        """Strict interior relative to the ambient space (empty if not full-dim)."""
        if self.chart is not None:
            return False
        x = vec(x)
        return all(dot(n, x) < r for n, r in self.halfspaces)

    def in_relative_interior(self, x: Sequence) -> bool:
        loc = self.local_coords(x)
        if loc is None:
            return False
        if not loc:  # 0-dimensional polytope: the single vertex
            return True
        return all(dot(n, loc) < r for n, r in self.halfspaces)

    def lattice_box(self) -> tuple[IntVec, IntVec]:
        """Smallest integer box containing the polytope (per-coordinate ceil/floor)."""
        lo, hi = [], []
        for i in range(self.dim):
            coords = [v[i] for v in self.vertices]
            mn, mx = min(coords), max(coords)
            lo.append(-((-mn.numerator) // mn.denominator))
            hi.append(mx.numerator // mx.denominator)
        return tuple(lo), tuple(hi)

    def validate(self) -> None:
        """Spot-check the two representations against each other (used in tests)."""
        k = self.affine_dimension
        locs = [self.local_coords(v) for v in self.vertices]
        assert all(loc is not None for loc in locs)
        for n, r in self.halfspaces:
            assert all(dot(n, loc) <= r for loc in locs)
        for (n, r), inc in zip(self.halfspaces, self.incidence):
            tight = [locs[i] for i in inc]
            assert all(dot(n, t) == r for t in tight)
            assert affine_dim(tight) == k - 1
        assert list(self.vertices) == sorted(self.vertices)
        if k >= 1:
            assert affine_dim(self.vertices) == k


@dataclass(eq=False)
class Face:
    """Facet of a polytope, viewed through its defining halfspace."""

    parent: Polytope
    index: int
    vertex_indices: tuple[int, ...]

    @property
    def vertices(self) -> tuple[Vec, ...]:
        return tuple(self.parent.vertices[i] for i in self.vertex_indices)

    @cached_property
    def dim(self) -> int:
        return affine_dim(self.vertices)

    @cached_property
    def affine_hull(self) -> tuple[Vec, tuple[Vec, ...]]:
        """(point, basis) description of the facet's affine hull."""
        verts = self.vertices
        basis = tuple(vsub(verts[i], verts[0]) for i in greedy_affine_basis(verts))
        return verts[0], basis

    @cached_property
    def as_polytope(self) -> Polytope:
        verts = self.vertices
        if len(verts) == 1:
            return point_polytope(verts[0])
        return convex_hull(verts)

    @property
    def is_simplicial(self) -> bool:
        return len(self.vertex_indices) == self.dim + 1


def point_polytope(pt: Sequence) -> Polytope:
    pt = vec(pt)
    chart = AffineChart(origin=pt, basis=())
    return Polytope(dim=len(pt), vertices=(pt,), halfspaces=(), incidence=(), chart=chart)


# ---------------------------------------------------------------------------
# Convex hull: incremental beneath-beyond over exact integers.
# ---------------------------------------------------------------------------


def _initial_simplex(pts: list[IntVec], k: int):
    """Greedy affinely independent seed of k+1 points (indices)."""
    seed = [0]
    ech = IntEchelon(k)
    base = pts[0]
    for i in range(1, len(pts)):
        if ech.add([x - y for x, y in zip(pts[i], base)]):
            seed.append(i)
            if len(seed) == k + 1:
                break
    if len(seed) != k + 1:
        raise ValueError("point set is not full-dimensional")
    return seed


def _oriented_plane(points: list[IntVec], inside_val_point: Vec) -> Halfspace:
    """Hyperplane through `points`, oriented so the reference point is on the < side."""
    n, r = hyperplane_through(points)
    n, r = canon_halfspace(n, r)
    val = dot(n, inside_val_point)
    if val > r:
        n, r = tuple(-x for x in n), -r
    elif val == r:
        raise ValueError("reference point lies on the candidate hyperplane")
    return n, r


def _affine_rank_of_bits(pts: list[IntVec], mask: int, k: int, stop: int) -> int:
    """Affine rank of the points selected by mask, early exit at `stop`."""
    idxs = []
    m = mask
    while m:
        low = m & -m
        idxs.append(low.bit_length() - 1)
        m ^= low
    if not idxs:
        return -1
    base = pts[idxs[0]]
    ech = IntEchelon(k)
    for i in idxs[1:]:
        ech.add([x - y for x, y in zip(pts[i], base)])
        if ech.rank > stop:
            return ech.rank
    return ech.rank


def _hull_core(pts: list[IntVec], k: int):
    """Beneath-beyond hull of deduplicated, lex-sorted integer points spanning R^k.

    Returns (facets, vertex_ids): facets maps canonical halfspace -> tight bitmask,
    vertex_ids is the sorted list of indices of the extreme points.
    Facets with a common supporting hyperplane are merged, so the result is the
    exact irredundant facet set even for highly degenerate inputs.
    """
    n = len(pts)
    if k == 1:
        vals = [p[0] for p in pts]
        imin = min(range(n), key=lambda i: vals[i])
        imax = max(range(n), key=lambda i: vals[i])
        facets = {((1,), vals[imax]): 1 << imax, ((-1,), -vals[imin]): 1 << imin}
        return facets, sorted({imin, imax})

    seed = _initial_simplex(pts, k)
    centroid = tuple(
        Fraction(sum(pts[i][j] for i in seed), k + 1) for j in range(k)
    )
    facets: dict[Halfspace, int] = {}
    for omit in seed:
        others = [i for i in seed if i != omit]
        key = _oriented_plane([pts[i] for i in others], vec(pts[omit]))
        mask = 0
        for i in others:
            mask |= 1 << i
        facets[key] = mask

    active = 0
    for i in seed:
        active |= 1 << i

    seed_set = set(seed)
    for idx in range(n):
        if idx in seed_set:
            continue
        p = pts[idx]
        visible, coplanar, invisible = [], [], []
        for key in facets:
            val = idot(key[0], p)
            if val > key[1]:
                visible.append(key)
            elif val == key[1]:
                coplanar.append(key)
            else:
                invisible.append(key)
        if not visible:
            continue  # p is inside the current hull; can never be a vertex
        assert invisible, "bounded hull must have a facet strictly below any outside point"

        bit = 1 << idx
        # any old hull point on a new cone plane lies on a ridge of a visible
        # facet or inside a coplanar facet, so those masks bound the rescan
        local = bit
        for f in visible:
            local |= facets[f]
        for g in coplanar:
            local |= facets[g]
        new_facets: dict[Halfspace, int] = {}
        for f in visible:
            fmask = facets[f]
            for g in invisible:
                ridge = fmask & facets[g]
                if ridge.bit_count() < k - 1:
                    continue
                if _affine_rank_of_bits(pts, ridge, k, k - 2) != k - 2:
                    continue
                ridge_idxs = []
                m = ridge
                while m:
                    low = m & -m
                    ridge_idxs.append(low.bit_length() - 1)
                    m ^= low
                # p is strictly off aff(g) >= aff(ridge), so the cone plane is proper
                plane_pts = [p] + [pts[j] for j in ridge_idxs]
                span = [0] + greedy_affine_basis(plane_pts)
                key = _oriented_plane([plane_pts[t] for t in span], centroid)
                new_facets[key] = new_facets.get(key, 0) | ridge | bit
        for f in visible:
            del facets[f]
        for g in coplanar:
            facets[g] |= bit
        active |= bit
        for key, mask in new_facets.items():
            mask |= facets.get(key, 0)
            # complete the tight set over the locally relevant points
            m = local & ~mask
            while m:
                low = m & -m
                j = low.bit_length() - 1
                m ^= low
                if idot(key[0], pts[j]) == key[1]:
                    mask |= low
            facets[key] = mask

    tight_at: dict[int, list[Halfspace]] = {}
    for key, mask in facets.items():
        m = mask
        while m:
            low = m & -m
            tight_at.setdefault(low.bit_length() - 1, []).append(key)
            m ^= low
    vertex_ids = []
    for j, keys in tight_at.items():
        ech = IntEchelon(k)
        rank = 0
        for nrm, _ in keys:
            if ech.add(nrm):
                rank += 1
                if rank == k:
                    vertex_ids.append(j)
                    break
    return facets, sorted(vertex_ids)


def convex_hull(points: Sequence[Sequence]) -> Polytope:
    """Exact convex hull with irredundant vertices and facet halfspaces.

    The output is canonical (vertices and halfspaces lexicographically sorted),
    hence invariant under permutation of the input. Lower-dimensional point sets
    yield a polytope carried in chart coordinates of their affine hull.
    """
    pts = sorted({vec(p) for p in points})
    if not pts:
        raise DegenerateInput("empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points of mixed dimension")
    k = affine_dim(pts)
    if k == 0:
        raise DegenerateInput("all points coincide")

    chart = None
    if k == d:
        work = pts
    else:
        basis = tuple(vsub(pts[i], pts[0]) for i in greedy_affine_basis(pts))
        chart = AffineChart(origin=pts[0], basis=basis)
        work = []
        for p in pts:
            loc = chart.to_local(p)
            assert loc is not None
            work.append(loc)

    ipts, factor = scale_to_int(work)
    facets, vertex_ids = _hull_core(ipts, k)

    vertices = tuple(pts[i] for i in vertex_ids)
    halfspaces = []
    for n, r in facets:
        # scaled coords x' = factor * x, so n.x <= r/factor in true coordinates
        halfspaces.append(canon_halfspace(tuple(x * factor for x in n), r))
    halfspaces.sort()

    local_verts = [work[i] for i in vertex_ids]
    incidence = tuple(
        tuple(i for i, lv in enumerate(local_verts) if dot(n, lv) == r)
        for n, r in halfspaces
    )
    return Polytope(
        dim=d,
        vertices=vertices,
        halfspaces=tuple(halfspaces),
        incidence=incidence,
        chart=chart,
    )


def axis_simplex(legs: Sequence) -> Polytope:
    """Full-dimensional simplex conv{0, legs[0]*e_1, ..., legs[d-1]*e_d}."""
    legs = vec(legs)
    if any(a <= 0 for a in legs):
        raise ValueError("simplex legs must be positive")
    d = len(legs)
    pts = [zero_vec(d)] + [unit_vec(d, i, legs[i]) for i in range(d)]
    return convex_hull(pts)


def simplex_volume(vertices: Sequence[Sequence]) -> Fraction:
    """Volume of a full-dimensional simplex via the edge-matrix determinant."""
    from .linalg import det

    verts = [vec(v) for v in vertices]
    k = len(verts[0])
    if len(verts) != k + 1:
        raise ValueError("simplex needs k+1 vertices in dimension k")
    rows = [vsub(v, verts[0]) for v in verts[1:]]
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return abs(det(rows)) / fact


# ---------------------------------------------------------------------------
# Lattice point enumeration.
# ---------------------------------------------------------------------------


def _box_point_count(lo: IntVec, hi: IntVec) -> int:
    total = 1
    for a, b in zip(lo, hi):
        if b < a:
            return 0
        total *= b - a + 1
    return total


def _check_budget(lo: IntVec, hi: IntVec, budget: int) -> None:
    count = _box_point_count(lo, hi)
    if count > budget:
        raise BudgetExceeded(
            f"bounding box holds {count} lattice points, budget is {budget}"
        )


def _scan_box(
    lo: IntVec,
    hi: IntVec,
    constraints: Sequence[tuple[IntVec, int, str]],
) -> list[IntVec]:
    """All integer points of the box satisfying every (coeffs, rhs, op) constraint.

    op is one of 'le', 'lt', 'eq'. Recursive descent with exact suffix bounds;
    every emitted point is re-checked against every constraint.
    """
    d = len(lo)
    if _box_point_count(lo, hi) == 0:
        return []
    suff_min, suff_max = [], []
    for coeffs, _, _ in constraints:
        mins = [0] * (d + 1)
        maxs = [0] * (d + 1)
        for j in range(d - 1, -1, -1):
            a, b = coeffs[j] * lo[j], coeffs[j] * hi[j]
            mins[j] = mins[j + 1] + min(a, b)
            maxs[j] = maxs[j + 1] + max(a, b)
        suff_min.append(mins)
        suff_max.append(maxs)

    out: list[IntVec] = []
    point = [0] * d

    def descend(j: int, partials: list[int]) -> None:
        if j == d:
            for (coeffs, rhs, op), part in zip(constraints, partials):
                if op == "le":
                    if part > rhs:
                        return
                elif op == "lt":
                    if part >= rhs:
                        return
                else:
                    if part != rhs:
                        return
            out.append(tuple(point))
            return
        for x in range(lo[j], hi[j] + 1):
            point[j] = x
            nxt = []
            ok = True
            for c, (coeffs, rhs, op) in enumerate(constraints):
                part = partials[c] + coeffs[j] * x
                if op == "le":
                    if part + suff_min[c][j + 1] > rhs:
                        ok = False
                        break
                elif op == "lt":
                    if part + suff_min[c][j + 1] >= rhs:
                        ok = False
                        break
                else:
                    if part + suff_min[c][j + 1] > rhs or part + suff_max[c][j + 1] < rhs:
                        ok = False
                        break
                nxt.append(part)
            if ok:
                descend(j + 1, nxt)

    descend(0, [0] * len(constraints))
    return out


def lattice_points(p: Polytope, budget: int = DEFAULT_BUDGET) -> list[IntVec]:
    """All integral points of a bounded polytope, in lexicographic order."""
    lo, hi = p.lattice_box()
    _check_budget(lo, hi, budget)
    if p.is_full_dimensional:
        constraints = [(n, r, "le") for n, r in p.halfspaces]
        return _scan_box(lo, hi, constraints)
    if _box_point_count(lo, hi) == 0:
        return []
    out = []
    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]

    def rec(j: int, acc: list[int]) -> None:
        if j == len(ranges):
            if p.contains(tuple(acc)):
                out.append(tuple(acc))
            return
        for x in ranges[j]:
            acc.append(x)
            rec(j + 1, acc)
            acc.pop()

    rec(0, [])
    return out


def interior_lattice_points(p: Polytope, budget: int = DEFAULT_BUDGET) -> list[IntVec]:
    """Integral points strictly inside every halfspace (empty if not full-dim)."""
    if not p.is_full_dimensional:
        return []
    lo, hi = p.lattice_box()
    _check_budget(lo, hi, budget)
    constraints = [(n, r, "lt") for n, r in p.halfspaces]
    return _scan_box(lo, hi, constraints)


def facet_lattice_points(
    p: Polytope, facet_index: int, budget: int = DEFAULT_BUDGET
) -> list[IntVec]:
    """Integral points of one facet of a full-dimensional polytope."""
    if not p.is_full_dimensional:
        raise NotFullDimensional("facet enumeration needs a full-dimensional parent")
    inc = p.incidence[facet_index]
    verts = [p.vertices[i] for i in inc]
    lo, hi = [], []
    for i in range(p.dim):
        coords = [v[i] for v in verts]
        mn, mx = min(coords), max(coords)
        lo.append(-((-mn.numerator) // mn.denominator))
        hi.append(mx.numerator // mx.denominator)
    lo, hi = tuple(lo), tuple(hi)
    _check_budget(lo, hi, budget)
    constraints = [
        (n, r, "eq" if i == facet_index else "le")
        for i, (n, r) in enumerate(p.halfspaces)
    ]
    return _scan_box(lo, hi, constraints)


def prune_non_extreme(points: Iterable[IntVec]) -> list[IntVec]:
    """Drop integral points that are midpoints of two others along short directions.

    Extreme points are never midpoints of distinct set members, so the surviving
    set has the same convex hull. Purely a hull-input reducer.
    """
    pts = set(points)
    if not pts:
        return []
    d = len(next(iter(pts)))
    dirs: list[IntVec] = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        dirs.append(tuple(e))
    for i in range(d):
        for j in range(i + 1, d):
            for s in (1, -1):
                v = [0] * d
                v[i] = 1
                v[j] = s
                dirs.append(tuple(v))
    keep = []
    for z in pts:
        mid = False
        for v in dirs:
            zp = tuple(a + b for a, b in zip(z, v))
            if zp in pts:
                zm = tuple(a - b for a, b in zip(z, v))
                if zm in pts:
                    mid = True
                    break
        if not mid:
            keep.append(z)
    return sorted(keep)


def integer_hull(p: Polytope, budget: int = DEFAULT_BUDGET) -> Polytope:
    """Convex hull of the integral points of p (may be lower-dimensional)."""
    pts = lattice_points(p, budget)
    if not pts:
        raise EmptyHull("polytope contains no integral point")
    if len(pts) == 1:
        return point_polytope(pts[0])
    return convex_hull(prune_non_extreme(pts))


def facets(p: Polytope) -> list[Face]:
    """One Face per halfspace of a full-dimensional polytope."""
    if not p.is_full_dimensional:
        raise NotFullDimensional(
            f"polytope has affine dimension {p.affine_dimension} in R^{p.dim}"
        )
    return [Face(p, i, inc) for i, inc in enumerate(p.incidence)]


def strict_interior_forms(p: Polytope) -> list[tuple[IntVec, int]]:
    """Integer affine forms testing relative-interior membership.

    Valid only for points already known to lie on the polytope's affine hull:
    such a point is in the relative interior iff coeffs . x < rhs for every
    returned (coeffs, rhs). For full-dimensional polytopes these are just the
    halfspaces; for chart polytopes the local halfspaces are composed with the
    chart's coordinate solve and cleared to integers.
    """
    if p.chart is None:
        return [(n, r) for n, r in p.halfspaces]
    if not p.chart.basis:
        return []
    sel, inv = p.chart._solver
    d = p.dim
    k = len(p.chart.basis)
    forms = []
    for n, r in p.halfspaces:
        w = [sum(n[t] * inv[t][j] for t in range(k)) for j in range(k)]
        b = Fraction(r) + sum(w[j] * p.chart.origin[sel[j]] for j in range(k))
        scale = lcm(b.denominator, *(wj.denominator for wj in w)) if w else b.denominator
        coeffs = [0] * d
        for j in range(k):
            coeffs[sel[j]] = int(w[j] * scale)
        forms.append((tuple(coeffs), int(b * scale)))
    return forms


def any_in_relative_interior(p: Polytope, candidates: Iterable[Sequence[int]]) -> bool:
    """First-match relative-interior test over integral candidates on p's affine hull."""
    forms = strict_interior_forms(p)
    for z in candidates:
        if all(idot(c, tuple(z)) < r for c, r in forms):
            return True
    return False


def barycentric_coordinates(
    simplex_vertices: Sequence[Sequence], point: Sequence
) -> tuple[Fraction, ...] | None:
    """Coefficients expressing `point` over affinely independent vertices, or None."""
    verts = [vec(v) for v in simplex_vertices]
    target = vec(point)
    d = len(target)
    rows = [[v[i] for v in verts] for i in range(d)]
    rows.append([Fraction(1)] * len(verts))
    return solve_unique(rows, list(target) + [Fraction(1)])


def relint_contains(face: Face, point: Sequence) -> bool:
    """Is `point` in the relative interior of the facet.

    Simplicial facets go through exact barycentric coordinates; general facets
    through strict halfspace tests in the facet's chart. The two paths agree
    wherever both apply (enforced in the test suite).
    """
    if face.is_simplicial:
        coeffs = barycentric_coordinates(face.vertices, point)
        return coeffs is not None and all(c > 0 for c in coeffs)
    return face.as_polytope.in_relative_interior(point)


def polytope_from_halfspaces(
    halfspaces: Sequence[Halfspace], dim: int
) -> Polytope:
    """Bounded intersection of halfspaces as a Polytope.

    Raises ReconstructionUnderdetermined if the normals do not positively span
    the space (unbounded intersection) or the feasible set is not full-dimensional.
    """
    hs = sorted({canon_halfspace(n, r) for n, r in halfspaces})
    if len(hs) < dim + 1:
        raise ReconstructionUnderdetermined(
            f"{len(hs)} halfspaces cannot bound a {dim}-dimensional polytope"
        )
    normals = [vec(n) for n, _ in hs]
    try:
        nhull = convex_hull(normals)
    except DegenerateInput:
        raise ReconstructionUnderdetermined("halfspace normals are degenerate")
    if not nhull.in_interior(zero_vec(dim)):
        raise ReconstructionUnderdetermined(
            "halfspace normals do not positively span the space"
        )
    candidates = set()
    for combo in combinations(range(len(hs)), dim):
        rows = [hs[i][0] for i in combo]
        rhs = [hs[i][1] for i in combo]
        x = solve_unique(rows, rhs)
        if x is None:
            continue
        if all(dot(n, x) <= r for n, r in hs):
            candidates.add(x)
    if not candidates:
        raise ReconstructionUnderdetermined("halfspaces have no basic feasible point")
    hull = convex_hull(candidates)
    if not hull.is_full_dimensional:
        raise ReconstructionUnderdetermined("feasible set is not full-dimensional")
    return hull


# ---------------------------------------------------------------------------
# JSON form (exact "num/den" strings, integer halfspaces).
# ---------------------------------------------------------------------------


def polytope_to_json(p: Polytope) -> dict:
    """JSON dict for a full-dimensional polytope."""
    if not p.is_full_dimensional:
        raise NotFullDimensional("only full-dimensional polytopes serialize")
    return {
        "dim": p.dim,
        "vertices": [[fmt_frac(c) for c in v] for v in p.vertices],
        "halfspaces": [{"normal": list(n), "rhs": r} for n, r in p.halfspaces],
    }


def polytope_from_json(doc: dict) -> Polytope:
    dim = int(doc["dim"])
    vertices = tuple(vec(parse_frac(c) for c in v) for v in doc["vertices"])
    halfspaces = tuple(
        canon_halfspace(tuple(int(x) for x in h["normal"]), int(h["rhs"]))
        for h in doc["halfspaces"]
    )
    for v in vertices:
        if any(dot(n, v) > r for n, r in halfspaces):
            raise ValueError("vertex violates a halfspace in serialized polytope")
    incidence = tuple(
        tuple(i for i, v in enumerate(vertices) if dot(n, v) == r)
        for n, r in halfspaces
    )
    return Polytope(
        dim=dim,
        vertices=vertices,
        halfspaces=halfspaces,
        incidence=incidence,
        chart=None,
    )

"""Certification of weakly-maximal-but-not-strongly-maximal integer hulls.

An axis-aligned simplex with positive legs is lattice-free iff the reciprocal
sum of its legs is at least 1, and maximal lattice-free iff it equals 1. For a
leg vector of the split shape (b_1, ..., b_{d-1}, (3/2)t, 3t) with integer legs,
odd t and unit reciprocal sum, every facet carries a closed-form witness: an
integral simplex spanning the facet together with an integral point in its
relative interior, given by explicit barycentric coefficients. Witnesses are
re-verified by exact arithmetic before they are emitted, and certify() can
additionally confirm every claim by brute-force enumeration when the instance
is within the enumeration budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .egyptian import reciprocal_sum, validate_tuple
from .errors import (
    BudgetExceeded,
    NotLatticeFree,
    ShapeMismatch,
    WitnessVerificationFailed,
)
from .geometry import (
    DEFAULT_BUDGET,
    Face,
    Polytope,
    any_in_relative_interior,
    axis_simplex,
    convex_hull,
    facet_lattice_points,
    facets,
    integer_hull,
    interior_lattice_points,
    polytope_from_halfspaces,
    prune_non_extreme,
    relint_contains,
)
from .linalg import Vec, affine_dim, dot, fmt_frac, is_integral_vec, parse_frac, unit_vec, vec, zero_vec
from .transforms import LegVector, lift, split_three_halves

CASE_HALF_APEX = "opposite_half_apex"
CASE_TRIPLE_APEX = "opposite_triple_apex"
CASE_ORIGIN = "opposite_origin"
CASE_LEG_PREFIX = "opposite_leg_"


# ---------------------------------------------------------------------------
# Axis-simplex predicates.
# ---------------------------------------------------------------------------


def is_lattice_free_axis(legs) -> bool:
    """The simplex conv{0, a_i e_i} is lattice-free iff sum(1/a_i) >= 1."""
    return reciprocal_sum(legs) >= 1


def is_maximal_lattice_free_axis(legs) -> bool:
    """The simplex conv{0, a_i e_i} is maximal lattice-free iff sum(1/a_i) == 1."""
    return reciprocal_sum(legs) == 1


def is_blocked(p: Polytope, face: Face, budget: int = DEFAULT_BUDGET) -> bool:
    """Does the relative interior of the facet contain an integral point."""
    pts = facet_lattice_points(p, face.index, budget)
    if not pts:
        return False
    # candidates lie on the facet's hyperplane, which is its affine hull
    return any_in_relative_interior(face.as_polytope, pts)


def is_strongly_blocked_facet(p: Polytope, face: Face, budget: int = DEFAULT_BUDGET) -> bool:
    """Facet check: the integer hull of the facet spans the facet's hyperplane
    and its relative interior contains an integral point."""
    pts = facet_lattice_points(p, face.index, budget)
    if not pts:
        return False
    target = p.dim - 1
    if target == 0:
        return True  # the facet is a single integral vertex
    if affine_dim(pts) != target:
        return False
    # forgetting one coordinate with a nonzero facet-normal entry is an affine
    # bijection of the facet's hyperplane that preserves the integer lattice,
    # so the integer hull and its relative interior can be taken downstairs
    normal = p.halfspaces[face.index][0]
    drop = next(j for j, c in enumerate(normal) if c)
    proj = [z[:drop] + z[drop + 1 :] for z in pts]
    hull = convex_hull(prune_non_extreme(proj))
    return any_in_relative_interior(hull, proj)


def is_maximal_by_blocking(p: Polytope, budget: int = DEFAULT_BUDGET) -> bool:
    """Maximality criterion for bounded lattice-free polytopes: every facet blocked.

    Raises NotLatticeFree if the interior contains an integral point.
    """
    if interior_lattice_points(p, budget):
        raise NotLatticeFree("polytope has an interior lattice point")
    return all(is_blocked(p, f, budget) for f in facets(p))


# ---------------------------------------------------------------------------
# Closed-form facet witnesses for split-shaped leg vectors.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SplitShape:
    """Decomposition of a leg vector (b_1,...,b_{d-1}, (3/2)t, 3t) with odd t."""

    legs: tuple[int, ...]  # b_1 ... b_{d-1}, integers
    t: int  # odd
    ambient: int  # d+1

    @property
    def d(self) -> int:
        return len(self.legs) + 1


def split_shape(a) -> SplitShape:
    """Validate and decompose a split-shaped leg vector; raises ShapeMismatch."""
    a = vec(a)
    if len(a) < 3:
        raise ShapeMismatch("need at least three components (source length d >= 2)")
    triple = a[-1]
    if triple.denominator != 1 or triple.numerator % 3 != 0:
        raise ShapeMismatch(f"last component {triple} is not an integer multiple of 3")
    t = triple.numerator // 3
    if t <= 0 or t % 2 != 1:
        raise ShapeMismatch(f"apex parameter t={t} must be a positive odd integer")
    if a[-2] != Fraction(3 * t, 2):
        raise ShapeMismatch(f"next-to-last component {a[-2]} is not (3/2)t for t={t}")
    legs = []
    for x in a[:-2]:
        if x.denominator != 1 or x <= 0:
            raise ShapeMismatch(f"leg {x} is not a positive integer")
        legs.append(x.numerator)
    if reciprocal_sum(a) != 1:
        raise ShapeMismatch(f"reciprocal sum of {a} is {reciprocal_sum(a)}, not 1")
    return SplitShape(legs=tuple(legs), t=t, ambient=len(a))


@dataclass(frozen=True)
class FacetWitness:
    """Integral simplex spanning a facet plus an integral relative-interior point.

    `barycentric_coeffs[i]` is the coefficient of `inner_simplex_vertices[i]` in
    the exact convex combination equal to `witness_point`.
    """

    facet_case: str
    inner_simplex_vertices: tuple[Vec, ...]
    witness_point: Vec
    barycentric_coeffs: tuple[Fraction, ...]


def _simplex_coords(shape: SplitShape) -> dict:
    m = shape.ambient
    half_axis = m - 2
    triple_axis = m - 1
    return {
        "legs": [unit_vec(m, i, b) for i, b in enumerate(shape.legs)],
        "half_apex": unit_vec(m, half_axis, Fraction(3 * shape.t, 2)),
        "triple_apex": unit_vec(m, triple_axis, 3 * shape.t),
        "origin": zero_vec(m),
        "half_axis": half_axis,
        "triple_axis": triple_axis,
    }


def witness_omitted_vertex(case: str, shape: SplitShape) -> Vec:
    """The simplex vertex excluded by the facet that the witness certifies."""
    coords = _simplex_coords(shape)
    if case == CASE_HALF_APEX:
        return coords["half_apex"]
    if case == CASE_TRIPLE_APEX:
        return coords["triple_apex"]
    if case == CASE_ORIGIN:
        return coords["origin"]
    if case.startswith(CASE_LEG_PREFIX):
        i = int(case[len(CASE_LEG_PREFIX):])
        if not 1 <= i <= len(shape.legs):
            raise WitnessVerificationFailed(f"leg index out of range in case {case!r}")
        return coords["legs"][i - 1]
    raise WitnessVerificationFailed(f"unknown witness case {case!r}")


def inner_simplex_for_case(case: str, shape: SplitShape) -> tuple[Vec, ...]:
    """Canonical integral inner simplex certifying the facet of the given case."""
    m = shape.ambient
    t = shape.t
    coords = _simplex_coords(shape)
    legs = coords["legs"]
    lowered_apex = unit_vec(m, coords["half_axis"], (3 * t - 1) // 2)
    bridge_apex = vadd_unit(lowered_apex, coords["triple_axis"])
    if case == CASE_HALF_APEX:
        return tuple(legs) + (coords["triple_apex"], coords["origin"])
    if case == CASE_TRIPLE_APEX:
        return tuple(legs) + (lowered_apex, coords["origin"])
    if case == CASE_ORIGIN:
        return tuple(legs) + (bridge_apex, coords["triple_apex"])
    if case.startswith(CASE_LEG_PREFIX):
        i = int(case[len(CASE_LEG_PREFIX):])
        rest = tuple(v for j, v in enumerate(legs, start=1) if j != i)
        return rest + (bridge_apex, coords["triple_apex"], coords["origin"])
    raise WitnessVerificationFailed(f"unknown witness case {case!r}")


def vadd_unit(v: Vec, axis: int) -> Vec:
    out = list(v)
    out[axis] += 1
    return tuple(out)


def _expected_witnesses(shape: SplitShape) -> list[FacetWitness]:
    m = shape.ambient
    t = shape.t
    lam = Fraction(2, 3 * t - 1)
    mu = Fraction(t - 1, t * (3 * t - 1))
    leg_recips = [Fraction(1, b) for b in shape.legs]
    half_axis = m - 2
    triple_axis = m - 1

    def ones(except_axes: set[int]) -> Vec:
        return vec(0 if i in except_axes else 1 for i in range(m))

    out = []
    out.append(
        FacetWitness(
            facet_case=CASE_HALF_APEX,
            inner_simplex_vertices=inner_simplex_for_case(CASE_HALF_APEX, shape),
            witness_point=ones({half_axis}),
            barycentric_coeffs=tuple(leg_recips) + (Fraction(1, 3 * t), Fraction(2, 3 * t)),
        )
    )
    out.append(
        FacetWitness(
            facet_case=CASE_TRIPLE_APEX,
            inner_simplex_vertices=inner_simplex_for_case(CASE_TRIPLE_APEX, shape),
            witness_point=ones({triple_axis}),
            barycentric_coeffs=tuple(leg_recips) + (lam, mu),
        )
    )
    out.append(
        FacetWitness(
            facet_case=CASE_ORIGIN,
            inner_simplex_vertices=inner_simplex_for_case(CASE_ORIGIN, shape),
            witness_point=ones(set()),
            barycentric_coeffs=tuple(leg_recips) + (lam, mu),
        )
    )
    for i in range(1, len(shape.legs) + 1):
        case = f"{CASE_LEG_PREFIX}{i}"
        rest = tuple(r for j, r in enumerate(leg_recips, start=1) if j != i)
        out.append(
            FacetWitness(
                facet_case=case,
                inner_simplex_vertices=inner_simplex_for_case(case, shape),
                witness_point=ones({i - 1}),
                barycentric_coeffs=rest + (lam, mu, leg_recips[i - 1]),
            )
        )
    return out


def _facet_plane_residual(case: str, shape: SplitShape, point: Vec) -> Fraction:
    """Zero iff the point lies on the hyperplane of the facet for this case."""
    if case == CASE_HALF_APEX:
        return point[shape.ambient - 2]
    if case == CASE_TRIPLE_APEX:
        return point[shape.ambient - 1]
    if case == CASE_ORIGIN:
        legs_full = tuple(shape.legs) + (Fraction(3 * shape.t, 2), Fraction(3 * shape.t))
        return sum(x / a for x, a in zip(point, legs_full)) - 1
    if case.startswith(CASE_LEG_PREFIX):
        i = int(case[len(CASE_LEG_PREFIX):])
        return point[i - 1]
    raise WitnessVerificationFailed(f"unknown witness case {case!r}")


def _in_simplex(shape: SplitShape, point: Vec) -> bool:
    legs_full = tuple(shape.legs) + (Fraction(3 * shape.t, 2), Fraction(3 * shape.t))
    if any(x < 0 for x in point):
        return False
    return sum(x / a for x, a in zip(point, legs_full)) <= 1


def verify_witness(w: FacetWitness, shape: SplitShape) -> None:
    """Exact re-verification; raises WitnessVerificationFailed on any defect.

    Checks: integrality of the inner simplex and the witness point; strict
    positivity and unit sum of the coefficients; the convex combination equals
    the point; the inner simplex lies on the facet's hyperplane, inside the
    outer simplex, and affinely spans the facet.
    """
    case = w.facet_case
    if not is_integral_vec(w.witness_point):
        raise WitnessVerificationFailed(f"{case}: witness point not integral")
    if len(w.barycentric_coeffs) != len(w.inner_simplex_vertices):
        raise WitnessVerificationFailed(f"{case}: coefficient/vertex count mismatch")
    if any(c <= 0 for c in w.barycentric_coeffs):
        raise WitnessVerificationFailed(f"{case}: coefficients must be strictly positive")
    if sum(w.barycentric_coeffs) != 1:
        raise WitnessVerificationFailed(f"{case}: coefficients do not sum to 1")
    combo = zero_vec(shape.ambient)
    for c, v in zip(w.barycentric_coeffs, w.inner_simplex_vertices):
        combo = tuple(x + c * y for x, y in zip(combo, v))
    if combo != w.witness_point:
        raise WitnessVerificationFailed(f"{case}: combination does not equal the point")
    for v in w.inner_simplex_vertices:
        if not is_integral_vec(v):
            raise WitnessVerificationFailed(f"{case}: inner simplex vertex {v} not integral")
        if not _in_simplex(shape, v):
            raise WitnessVerificationFailed(f"{case}: inner simplex vertex {v} outside the simplex")
        if _facet_plane_residual(case, shape, v) != 0:
            raise WitnessVerificationFailed(f"{case}: inner simplex vertex {v} off the facet plane")
    if affine_dim(w.inner_simplex_vertices) != shape.ambient - 1:
        raise WitnessVerificationFailed(f"{case}: inner simplex does not span the facet")


def closed_form_witnesses(a) -> list[FacetWitness]:
    """One verified strong-blocking witness per facet of the split-shaped simplex.

    The input must have the shape (b_1,...,b_{d-1}, (3/2)t, 3t) with positive
    integer legs, odd t, unit reciprocal sum and d >= 2. Every witness is
    re-verified exactly before being returned.
    """
    shape = split_shape(a)
    witnesses = _expected_witnesses(shape)
    for w in witnesses:
        verify_witness(w, shape)
    return witnesses


# ---------------------------------------------------------------------------
# Certificates.
# ---------------------------------------------------------------------------


@dataclass
class Certificate:
    """Verified facts about the simplex built from one unit-fraction tuple."""

    source: tuple[int, ...]
    leg_vector: LegVector
    is_lattice_free: bool
    facet_witnesses: tuple[FacetWitness, ...]
    hull: Polytope | None
    hull_proper_subset: bool
    verdict_weakly_maximal: bool  # member of the weakly-maximal family
    verdict_not_strongly_maximal: bool  # excluded from the strongly-maximal family
    method_per_facet: str  # closed_form | brute_force | both


def _facet_for_omitted_vertex(p: Polytope, omitted: Vec) -> Face:
    idx = p.vertices.index(omitted)
    for f in facets(p):
        if idx not in f.vertex_indices:
            return f
    raise WitnessVerificationFailed(f"no facet omits vertex {omitted}")


def certify(a, lift_kind: str = "lift", budget: int = DEFAULT_BUDGET) -> Certificate:
    """Build and verify the certificate for one sorted unit-fraction tuple.

    lift_kind 'lift' applies the full d -> d+5 composition; 'three_halves'
    applies only the final split (requires an odd last component) and is the
    low-dimensional variant used for end-to-end testing. Closed-form witnesses
    are always produced and verified; within the enumeration budget every facet
    is additionally confirmed by brute force, the integer hull is computed, and
    the two paths are required to agree.
    """
    tup = validate_tuple(a)
    if lift_kind == "lift":
        leg = lift(tup)
    elif lift_kind == "three_halves":
        if len(tup) < 2:
            raise ShapeMismatch("three-halves variant needs source length >= 2")
        if tup[-1] % 2 != 1:
            raise ShapeMismatch("three-halves variant needs an odd last component")
        leg = split_three_halves(vec(tup))
    else:
        raise ValueError(f"unknown lift_kind {lift_kind!r}")

    if reciprocal_sum(leg) != 1:
        raise WitnessVerificationFailed("leg vector lost the unit reciprocal sum")
    witnesses = tuple(closed_form_witnesses(leg))
    shape = split_shape(leg)
    lattice_free = is_lattice_free_axis(leg)

    p = axis_simplex(leg)
    lo, hi = p.lattice_box()
    box = 1
    for x, y in zip(lo, hi):
        box *= max(0, y - x + 1)

    hull = None
    method = "closed_form"
    if box <= budget:
        if interior_lattice_points(p, budget):
            raise WitnessVerificationFailed("brute force found an interior lattice point")
        for w in witnesses:
            face = _facet_for_omitted_vertex(p, witness_omitted_vertex(w.facet_case, shape))
            if not relint_contains(face, w.witness_point):
                raise WitnessVerificationFailed(
                    f"{w.facet_case}: witness point not in the facet's relative interior"
                )
            if not is_strongly_blocked_facet(p, face, budget):
                raise WitnessVerificationFailed(
                    f"{w.facet_case}: enumeration disagrees with the closed-form witness"
                )
        hull = integer_hull(p, budget)
        proper = set(hull.vertices) != set(p.vertices)
        if not proper:
            raise WitnessVerificationFailed(
                "integer hull is not a proper subset despite a non-integral vertex"
            )
        method = "both"
    else:
        # the (3/2)t vertex is non-integral, so the integer hull is proper
        proper = any(not is_integral_vec(v) for v in p.vertices)

    return Certificate(
        source=tup,
        leg_vector=leg,
        is_lattice_free=lattice_free,
        facet_witnesses=witnesses,
        hull=hull,
        hull_proper_subset=proper,
        verdict_weakly_maximal=lattice_free and len(witnesses) == len(p.halfspaces),
        verdict_not_strongly_maximal=proper,
        method_per_facet=method,
    )


def reconstruct_from_integer_hull(p_i: Polytope, budget: int = DEFAULT_BUDGET) -> Polytope:
    """Recover the outer polytope from its integer hull.

    The outer polytope is the intersection of the halfspaces supporting the
    strongly blocked facets of the hull; for hulls produced by certify() the
    result equals the original simplex exactly.
    """
    kept = []
    for f in facets(p_i):
        if is_strongly_blocked_facet(p_i, f, budget):
            kept.append(p_i.halfspaces[f.index])
    return polytope_from_halfspaces(kept, p_i.dim)


def canonical_form(a) -> LegVector:
    """Sort components ascending: axis-aligned simplices are unimodularly
    equivalent iff their sorted leg vectors coincide."""
    return tuple(sorted(vec(a)))


def count_distinct_classes(tuples: Sequence) -> int:
    """Number of distinct canonical forms of the lifted leg vectors."""
    return len({canonical_form(lift(t)) for t in tuples})


# ---------------------------------------------------------------------------
# Certificate JSON (exact strings; schema shared with the catalog).
# ---------------------------------------------------------------------------


def certificate_to_json(cert: Certificate) -> dict:
    doc = {
        "a": list(cert.source),
        "eta": [fmt_frac(x) for x in cert.leg_vector],
        "kappa": fmt_frac(reciprocal_sum(cert.leg_vector)),
        "witnesses": [
            {
                "case": w.facet_case,
                "point": [int(x) for x in w.witness_point],
                "coeffs": [fmt_frac(c) for c in w.barycentric_coeffs],
            }
            for w in cert.facet_witnesses
        ],
        "in_L": cert.verdict_weakly_maximal,
        "not_in_M": cert.verdict_not_strongly_maximal,
        "method": cert.method_per_facet,
    }
    if cert.hull is not None:
        doc["hull_vertices"] = [[fmt_frac(c) for c in v] for v in cert.hull.vertices]
    return doc


def verify_certificate_json(doc: dict) -> None:
    """Re-verify a serialized certificate from scratch.

    Recomputes the leg vector from the source tuple, checks the reciprocal-sum
    claim, rebuilds each witness's inner simplex from its case tag and verifies
    the stored point and coefficients exactly, and checks facet coverage.
    Raises WitnessVerificationFailed (or InvalidInput) on any discrepancy.
    """
    tup = validate_tuple(doc["a"])
    leg = vec(parse_frac(s) for s in doc["eta"])
    expected_lifts = {"lift": None, "three_halves": None}
    try:
        expected_lifts["lift"] = lift(tup)
    except Exception:
        pass
    if len(tup) >= 2 and tup[-1] % 2 == 1:
        expected_lifts["three_halves"] = split_three_halves(vec(tup))
    if leg not in (expected_lifts["lift"], expected_lifts["three_halves"]):
        raise WitnessVerificationFailed("stored leg vector does not match any lift of the tuple")
    if parse_frac(doc["kappa"]) != 1 or reciprocal_sum(leg) != 1:
        raise WitnessVerificationFailed("reciprocal-sum claim failed")
    shape = split_shape(leg)

    seen_cases = []
    for wdoc in doc["witnesses"]:
        case = wdoc["case"]
        w = FacetWitness(
            facet_case=case,
            inner_simplex_vertices=inner_simplex_for_case(case, shape),
            witness_point=vec(int(x) for x in wdoc["point"]),
            barycentric_coeffs=tuple(parse_frac(c) for c in wdoc["coeffs"]),
        )
        verify_witness(w, shape)
        seen_cases.append(case)
    expected_cases = {CASE_HALF_APEX, CASE_TRIPLE_APEX, CASE_ORIGIN}
    expected_cases.update(f"{CASE_LEG_PREFIX}{i}" for i in range(1, len(shape.legs) + 1))
    if len(seen_cases) != len(set(seen_cases)) or set(seen_cases) != expected_cases:
        raise WitnessVerificationFailed("witness cases do not cover every facet exactly once")

    if doc["in_L"] is not True:
        raise WitnessVerificationFailed("certificate does not claim weak maximality")
    if doc["not_in_M"] is not True:
        raise WitnessVerificationFailed("certificate does not claim proper hull")
    if all(x.denominator == 1 for x in leg):
        raise WitnessVerificationFailed("leg vector is integral; proper-hull claim unsupported")
    if "hull_vertices" in doc:
        verts = [vec(parse_frac(c) for c in v) for v in doc["hull_vertices"]]
        legs_full = leg
        for v in verts:
            if not is_integral_vec(v):
                raise WitnessVerificationFailed("stored hull vertex is not integral")
            if any(x < 0 for x in v) or sum(x / aa for x, aa in zip(v, legs_full)) > 1:
                raise WitnessVerificationFailed("stored hull vertex outside the simplex")

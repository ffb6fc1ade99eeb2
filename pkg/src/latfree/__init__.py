"""Exact construction and certification of maximal lattice-free simplices
arising from unit-fraction representations of 1."""

__version__ = "0.1.0"

from .egyptian import count_tuples, enumerate_tuples, growth_report, reciprocal_sum
from .geometry import (
    Polytope,
    axis_simplex,
    convex_hull,
    facets,
    integer_hull,
    interior_lattice_points,
    lattice_points,
    relint_contains,
)
from .transforms import lift, split_four, split_three_halves, split_two
from .verify import (
    Certificate,
    canonical_form,
    certify,
    closed_form_witnesses,
    count_distinct_classes,
    is_lattice_free_axis,
    is_maximal_by_blocking,
    is_maximal_lattice_free_axis,
    reconstruct_from_integer_hull,
)

__all__ = [
    "__version__",
    "Certificate",
    "Polytope",
    "axis_simplex",
    "canonical_form",
    "certify",
    "closed_form_witnesses",
    "convex_hull",
    "count_distinct_classes",
    "count_tuples",
    "enumerate_tuples",
    "facets",
    "growth_report",
    "integer_hull",
    "interior_lattice_points",
    "is_lattice_free_axis",
    "is_maximal_by_blocking",
    "is_maximal_lattice_free_axis",
    "lattice_points",
    "lift",
    "reciprocal_sum",
    "reconstruct_from_integer_hull",
    "relint_contains",
    "split_four",
    "split_three_halves",
    "split_two",
]

"""Exception types shared across the package."""


class LatfreeError(Exception):
    """Base class for all package-specific errors."""


class BudgetExceeded(LatfreeError):
    """A brute-force scan would visit more bounding-box points than allowed."""


class DegenerateInput(LatfreeError):
    """Hull input whose points all coincide."""


class EmptyHull(LatfreeError):
    """Integer hull requested for a polytope containing no integral point."""


class NotFullDimensional(LatfreeError):
    """Operation requires a polytope that is full-dimensional in its ambient space."""


class DimensionOutOfRange(LatfreeError):
    """Requested dimension is outside the configured range."""


class NonPositiveComponent(LatfreeError):
    """A component that must be positive is zero or negative."""


class InvalidInput(LatfreeError):
    """Input violates a documented invariant (sortedness, integrality, reciprocal sum)."""


class ShapeMismatch(LatfreeError):
    """Leg vector does not have the split shape required for closed-form witnesses."""


class WitnessVerificationFailed(LatfreeError):
    """A facet witness failed its exact re-verification; never ignore this."""


class NotLatticeFree(LatfreeError):
    """Predicate precondition violated: the polytope has an interior lattice point."""


class ReconstructionUnderdetermined(LatfreeError):
    """Collected facet halfspaces do not bound a full-dimensional polytope."""


class PostconditionFailed(LatfreeError):
    """An internal postcondition check failed; indicates a bug, not bad input."""

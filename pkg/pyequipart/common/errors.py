class DegenerateError(ValueError):
    """Rank-deficient point sets, hyperplanes at infinity or vanishing curve restrictions."""


class DeltaConditionError(ValueError):
    """Two hyperplanes of a configuration span (almost) the same line of normals."""


class SymmetryError(ValueError):
    """A measure fails the symmetry a solver relies on."""


class UnbalancedCycleError(ValueError):
    """A Gray cycle does not flip every track equally often."""

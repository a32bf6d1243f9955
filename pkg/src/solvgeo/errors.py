"""Exception types shared across the package."""


class InvalidFamilyError(ValueError):
    """Unknown family tag, out-of-range parameter, or malformed family string."""


class SingularMatrixError(ValueError):
    """A matrix that must be invertible is singular or numerically degenerate."""


class NonSPDMetricError(ValueError):
    """A Gram matrix that must be symmetric positive definite is not."""

"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Malformed input: bad sequence text, out-of-range entry, bad parameter."""


class LevelRangeError(ValidationError):
    """A level index was requested beyond an explicit prefix."""


class DimensionUndefinedError(ValidationError):
    """The contraction-limit value r does not exist for this sequence."""


class DivergenceError(ValueError):
    """A series was evaluated outside its half-plane of convergence."""


class PoleError(ValueError):
    """Evaluation requested too close to a pole."""

    def __init__(self, message, nearest_pole=None):
        super().__init__(message)
        self.nearest_pole = nearest_pole


class TailToleranceError(ValueError):
    """A certified truncation bound could not be pushed below the request."""

    def __init__(self, message, achieved_bound):
        super().__init__(message)
        self.achieved_bound = achieved_bound

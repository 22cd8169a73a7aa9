"""Exception types shared across the toolkit."""


class SerrekitError(Exception):
    """Base class for all library errors."""


class InputError(SerrekitError):
    """Malformed input (bad facet lists, documents, parameters)."""


class EmptyInput(InputError):
    pass


class IsolatedVertexPolicy(InputError):
    """A declared vertex range is not covered by the facets in strict mode."""


class NotAFace(InputError):
    pass


class NotPure(InputError):
    pass


class ParameterError(InputError):
    pass


class UnitIdeal(InputError):
    pass


class NotOSequence(InputError):
    """Hilbert values violate Macaulay's growth bound at ``degree``."""

    def __init__(self, degree, message=None):
        self.degree = degree
        super().__init__(message or f"not an O-sequence at degree {degree}")


class NotStable(InputError):
    """Stability fails: x_j * u / x_m(u) is not in the ideal."""

    def __init__(self, generator, j):
        self.generator = tuple(generator)
        self.j = j
        super().__init__(f"not stable: generator {self.generator}, exchange index {j}")


class TooLarge(SerrekitError):
    """A computation would exceed a configured resource cap."""


class PartialTable(SerrekitError):
    """A degree-capped Betti table was used where a complete one is required."""

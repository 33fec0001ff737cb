"""Exception types shared across the package."""


class InvariantError(AssertionError):
    """A computed object violates an invariant that the theory guarantees."""


class Inconclusive(RuntimeError):
    """A bounded search hit its limits before reaching a verdict."""

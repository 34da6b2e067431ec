"""Exception types shared across the package."""


class WtreeregError(Exception):
    """Base class for all domain errors."""


class NotATree(WtreeregError):
    pass


class NotAPath(WtreeregError):
    pass


class NotIntegrallyClosed(WtreeregError):
    pass


class TrivialWeights(WtreeregError):
    """Raised when an operation needs at least one edge of weight >= 2."""


class NonTrivialWeights(WtreeregError):
    """Raised when an operation needs all weights equal to 1."""


class UnknownVertex(WtreeregError):
    pass


class UnknownEdge(WtreeregError):
    pass


class PowerTooLarge(WtreeregError):
    """Pre-pruning product count of an ideal power exceeds the guard."""


class TooManyGenerators(WtreeregError):
    """Generator-count guard of the Betti oracle tripped."""


class LatticeTooLarge(WtreeregError):
    """lcm-lattice guard of the Betti oracle tripped."""


class UndefinedRegularity(WtreeregError):
    """The zero ideal has no regularity."""


class PartitionInvalid(WtreeregError):
    """Generator sets do not partition the ideal in a splitting check."""


class InfeasibleConstraints(WtreeregError):
    """Random-instance constraints cannot be satisfied."""

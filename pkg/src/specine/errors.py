"""Exception hierarchy shared by all modules."""


class SpecineError(Exception):
    """Base class for every error raised by this package."""


# series algebra
class NonZeroConstantTerm(SpecineError, ValueError):
    """Inner argument of a plethysm has a nonzero degree-0 slice."""


class BadConstantTerm(SpecineError, ValueError):
    """Multiplicative inverse requested for a series whose constant is not +1 or -1."""


class BadLinearTerm(SpecineError, ValueError):
    """Compositional inverse requested for a series not of the form +-p1 + (higher)."""


# species layer
class UnknownSeries(SpecineError, KeyError):
    pass


class DegreeOverflow(SpecineError, ValueError):
    pass


class NotReduced(SpecineError, ValueError):
    """Graph has a leaf or a pair of siblings where a reduced graph is required."""


# graphs
class ParseError(SpecineError, ValueError):
    pass


class NotALeaf(SpecineError, ValueError):
    pass


class WouldEmptyGraph(SpecineError, ValueError):
    pass


class K2Input(SpecineError, ValueError):
    """The operation is undefined on the complete graph on two vertices."""


class DisconnectedInput(SpecineError, ValueError):
    pass


class ExceptionalSize2(SpecineError, ValueError):
    """Patch decomposition whose composition would be K2."""


class InvalidTags(SpecineError, ValueError):
    pass


class InvalidDecomposition(SpecineError, ValueError):
    pass


class CapExceeded(SpecineError, ValueError):
    pass

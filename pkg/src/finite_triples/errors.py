"""Exception hierarchy shared by all modules."""


class TripleError(Exception):
    """Base class for every error raised by this package."""


class EmptyAlgebra(TripleError, ValueError):
    pass


class FieldBaseMismatch(TripleError, ValueError):
    pass


class IndexOutOfRange(TripleError, IndexError):
    pass


class InvalidLabel(TripleError, ValueError):
    pass


class AsymmetricMatrix(TripleError, ValueError):
    pass


class UnfaithfulRepresentation(TripleError, ValueError):
    pass


class AlgebraMismatch(TripleError, ValueError):
    pass


class ShapeMismatch(TripleError, ValueError):
    pass


class DegreeUnsupported(TripleError, ValueError):
    pass


class NotInner(TripleError):
    pass


class InvalidWeight(TripleError, ValueError):
    pass


class DisagreementAcrossD(TripleError):
    """Index pairing changed between Dirac operators; always a bug."""


class NotAssociative(TripleError, ValueError):
    pass


class NoIdentity(TripleError, ValueError):
    pass


class NoInverse(TripleError, ValueError):
    pass


class SingularSystem(TripleError):
    pass


class SpanConditionFailed(TripleError, ValueError):
    pass


class SizeMismatch(TripleError, ValueError):
    pass


class UnknownFixture(TripleError, KeyError):
    pass

"""Exception types shared across the package."""


class MostarError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRange(MostarError):
    """A size or index parameter is outside the supported range."""


class SelfLoop(MostarError):
    """An edge (i, i) was supplied; only simple graphs are supported."""


class Disconnected(MostarError):
    """An invariant that requires connectivity was asked of a disconnected graph."""


class NotAnEdge(MostarError):
    """The given vertex pair is not an edge of the graph."""


class BadParams(MostarError):
    """Family parameters are invalid (wrong count, size, or parity)."""


class NotRealizable(MostarError):
    """No simple connected graph attains the requested index value."""


class UnknownRealizability(MostarError):
    """Whether the value is attainable in the requested class is an open question."""


class OddTarget(MostarError):
    """Tree witnesses exist only for even target values."""


class CertificationFailure(MostarError):
    """A constructed graph failed recomputation of its promised index value."""


class MalformedRecord(MostarError):
    """A graph6 or edge-list record could not be parsed."""


class EmptyStream(MostarError):
    """An aggregate was asked of an empty graph stream."""


class MixedOrder(MostarError):
    """A stream operation requires all graphs to share one vertex count."""


class UnknownSuite(MostarError):
    """The requested verification suite id does not exist."""

"""Exception hierarchy shared by all opnlab modules."""


class OpnlabError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgument(OpnlabError):
    """An argument violates a documented precondition."""


class NonPositiveInterval(OpnlabError):
    """An interval operation requires lo > 0 but got a non-positive endpoint."""


class ResourceLimit(OpnlabError):
    """A computation exceeded the configured sieve cap or trial-division budget."""


class PrecisionCapExceeded(OpnlabError):
    """An enclosure would need more series terms than the configured cap."""


class ParseError(OpnlabError):
    """Command-line input could not be parsed."""

"""Exception hierarchy.

Every domain error is a ``ValueError`` so callers that only care about
"bad input" can catch the builtin.
"""

from __future__ import annotations


class HFError(ValueError):
    """Base class for domain errors raised by hfplus."""


class InvalidArgs(HFError):
    pass


class NotInvertible(HFError):
    pass


class NotCoprime(HFError):
    pass


class EmptyList(HFError):
    pass


class MalformedInput(HFError):
    pass


class MalformedSequence(HFError):
    pass


class NonIntegralShift(HFError):
    pass


class InternalInconsistency(HFError):
    """Two routes to the same quantity disagreed; always a bug."""


class DomainEdge(HFError):
    """A closed-form family evaluated where one of its multiplicities is negative."""


class UnsupportedTriple(HFError):
    pass

"""Exception hierarchy.

Every domain error derives from :class:`TrigraphError`; the CLI prints the
class name on stderr and exits with status 1.  Errors whose docstring says
"unreachable" guard claims that are proven true for valid inputs; they exist
so that a counterexample would fail loudly instead of silently.
"""

from __future__ import annotations


class TrigraphError(Exception):
    pass


class InvalidGraph(TrigraphError, ValueError):
    """Edge list refers to a vertex out of range, contains a loop, or is malformed."""


class NotLocallyLinear(TrigraphError):
    """Operation requires a locally linear graph; carries the failing verdict."""

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"graph is not locally linear: {verdict.witness}")


class OddDegree(TrigraphError):
    """Unreachable: a locally linear graph with a vertex of odd degree."""


class TooSmall(TrigraphError, ValueError):
    pass


class UnsupportedLength(TrigraphError, ValueError):
    pass


class BijectionFailure(TrigraphError):
    """Unreachable: the cycle correspondence between G and G* is not a bijection."""


class SearchExhausted(TrigraphError):
    pass


class NotClusterNeighborhood(TrigraphError):
    """A neighborhood is not a disjoint union of cliques (an induced diamond exists)."""


class TooManyParts(TrigraphError):
    """A neighborhood splits into more than three cliques (an induced K_{1,4} exists)."""


class InvalidStar(TrigraphError):
    """Input contains a forbidden induced subgraph and is not a triangle graph."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class GluingContradiction(TrigraphError):
    """Unreachable: reconstruction produced inconsistent vertex classes or extra triangles."""


class InvalidParam(TrigraphError, ValueError):
    pass


class RetryExhausted(TrigraphError):
    pass

"""Exception hierarchy shared by every module of the package."""


class BilliardError(Exception):
    """Base class for all errors raised by outer_billiards."""


# polygons

class PolygonError(BilliardError, ValueError):
    pass


class TooFewVertices(PolygonError):
    pass


class NotConvex(PolygonError):
    pass


class ParallelSides(PolygonError):
    pass


class PointOnBoundary(BilliardError, ValueError):
    pass


# the map

class UndefinedMap(BilliardError):
    """The outer billiard map is not defined at the given point.

    ``step`` is the index of the failing T-step inside a composite step
    (0 or 1 for ``step_T2``), when known.
    """

    def __init__(self, message, point=None, step=None):
        super().__init__(message)
        self.point = point
        self.step = step


class InsidePolygon(UndefinedMap):
    pass


class OnSingularRay(UndefinedMap):
    pass


# asymptotic structure

class AmbiguousOppositeVertex(BilliardError):
    pass


class OriginOutside(BilliardError, ValueError):
    pass


# orbits

class SearchExhausted(BilliardError):
    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class NotAnOrbit(BilliardError):
    def __init__(self, message, step=None, expected=None, found=None):
        super().__init__(message)
        self.step = step
        self.expected = expected
        self.found = found


class UndefinedHit(NotAnOrbit):
    pass


class PrecisionInsufficient(BilliardError, ValueError):
    pass


# analysis

class OddLength(BilliardError, ValueError):
    pass


class NotPeriodic(BilliardError, ValueError):
    pass


class OnDiscontinuity(BilliardError, ValueError):
    pass


class PerturbationBreaksConvexity(BilliardError):
    pass


# documents

class DocumentError(BilliardError, ValueError):
    """A JSON document failed to parse or does not match its schema."""

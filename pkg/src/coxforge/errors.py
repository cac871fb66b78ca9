"""Exception types shared across the package."""


class CoxforgeError(Exception):
    """Base class for all package errors."""


class NotDivisible(CoxforgeError):
    """Exact polynomial division left a nonzero remainder."""


class DivisionByZero(CoxforgeError):
    """Division by the zero element of a number field."""


class FieldMismatch(CoxforgeError):
    """Arithmetic attempted between elements of different number fields."""


class Inconclusive(CoxforgeError):
    """A root count or enclosure could not be certified exactly."""


class IndexOutOfRange(CoxforgeError):
    """Reflection index outside the valid range for the lattice rank."""


class DuplicateIndices(CoxforgeError):
    """Cremona reflection indices must be pairwise distinct."""


class Indeterminate(CoxforgeError):
    """A map was evaluated at one of its indeterminacy points."""

    def __init__(self, point, which=None):
        self.point = point
        self.which = which
        super().__init__(f"indeterminacy point hit: {point!r} (base point {which})")


class NotBasic(CoxforgeError):
    """Operation requires a basic (three exceptional lines) quadratic map."""


class NotCubicFixing(CoxforgeError):
    """The map does not fix the union of the three concurrent lines."""


class BadConfiguration(CoxforgeError):
    """Collinearity test needs one point on each of the three lines."""


class NoSalemFactor(CoxforgeError):
    """Cyclotomic stripping left no factor of degree >= 4."""


class InadmissibleTau(CoxforgeError):
    """The requested line rotation is ruled out by the orbit-data constraints."""


class OrbitMismatch(CoxforgeError):
    """Point tracking left the base locus while deriving a lattice action."""


class RelationFailed(CoxforgeError):
    """A group relation that must hold exactly failed to verify."""

    def __init__(self, relation, detail=""):
        self.relation = relation
        super().__init__(f"relation failed: {relation} {detail}".rstrip())


class SearchBoundExceeded(CoxforgeError):
    """A bounded search finished without a certifiable answer."""


class ConstructionFailed(CoxforgeError):
    """A constructed map failed its exact validation checks."""

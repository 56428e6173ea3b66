"""Exception hierarchy shared by every designcraft module."""


class DesignCraftError(ValueError):
    """Base class for all domain errors."""


class FieldError(DesignCraftError):
    """Invalid finite-field context (bad modulus or unsupported degree)."""


class ConstructionError(DesignCraftError):
    """A code could not be built with the requested parameters."""


class EnumerationBudgetError(DesignCraftError):
    """Exhaustive enumeration would exceed the configured budget."""


class VerificationBudgetError(DesignCraftError):
    """A t-design check would need more counters than allowed."""


class FormulaInconsistencyError(DesignCraftError):
    """An exact division in a closed form did not come out even."""


class DesignError(DesignCraftError):
    """Invalid design input or unsupported design case."""


class CodeFormatError(DesignCraftError):
    """Malformed code, blocks or weight-distribution file."""

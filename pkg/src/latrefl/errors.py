"""Exception types shared across the package."""


class LatticeError(ValueError):
    """Base class for lattice-related errors."""


class NotIntegralError(LatticeError):
    """An operation requiring an integral lattice or vector got a fractional one."""


class DegenerateFormError(LatticeError):
    """The bilinear form has a nonzero radical where nondegeneracy is required."""


class SpecParseError(LatticeError):
    """A lattice-spec string could not be parsed."""


class EnumerationBudgetError(RuntimeError):
    """The enumeration tree search exhausted its node budget."""


class ClassificationError(ValueError):
    """A diagram or root system did not match any known type."""

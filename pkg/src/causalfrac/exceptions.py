"""Exception hierarchy for causalfrac."""


class FracError(Exception):
    """Base class for every error raised by this package."""


class DomainError(FracError, ValueError):
    """An argument lies outside the domain where the operator is defined."""


class PoleError(DomainError):
    """Gamma (or a quantity built from it) evaluated at a pole."""


class GammaOverflowError(FracError, OverflowError):
    """Gamma magnitude exceeds the double-precision range."""


class OrderUnavailableError(FracError, ValueError):
    """A derivative of the requested order is not available for this function."""


class RegularizationError(FracError, ValueError):
    """Integration by parts cannot lift the kernel exponent for this function."""


class UnsupportedOrderError(FracError, ValueError):
    """Expansion order outside the supported range."""


class IncompatibleConventionError(DomainError):
    """Function lower bound does not match the requested convention."""


class SpecParseError(FracError, ValueError):
    """Malformed function specifier or order string."""

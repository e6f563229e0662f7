"""Exceptions raised across the package."""


class UmbralabError(Exception):
    """Base class for every error raised by umbralab."""


class DomainError(UmbralabError, ValueError):
    """An argument lies outside the domain of the requested function."""


class PoleError(DomainError):
    """The gamma function was evaluated at a pole."""


class ConstraintViolation(UmbralabError, ValueError):
    """Identity parameters break one of the identity's constraints."""


class UnknownIdentityError(UmbralabError, LookupError):
    """No identity is registered under the requested id."""


class QuadratureError(UmbralabError, ArithmeticError):
    """The integrand returned a non-finite value."""


class ConfigError(UmbralabError, ValueError):
    """An environment setting could not be parsed."""


class ParamParseError(UmbralabError, ValueError):
    """A command-line parameter assignment could not be parsed."""

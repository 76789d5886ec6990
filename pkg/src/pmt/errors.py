"""Exception hierarchy shared by every layer of the package."""


class PmtError(Exception):
    """Base class for all errors raised by pmt."""


class SingularityError(PmtError, ArithmeticError):
    """A value hit a pole, a zero of a log/root, or produced a non-finite result."""


class DegeneracyError(PmtError):
    """A transformation has a vanishing Jacobian factor at the requested point."""


class DomainError(PmtError):
    """A point lies outside the validity domain of a transformation or solution."""


class ConstraintError(PmtError, ValueError):
    """Parameter values violate an equation's or transformation's constraints."""


class UnboundParameterError(PmtError, KeyError):
    def __str__(self):
        return f"unbound parameter {self.args[0]!r}"


class UnsupportedError(PmtError):
    """The requested operation does not apply to this kind of object."""


class ConfigError(PmtError, ValueError):
    """Malformed configuration file or command line option."""

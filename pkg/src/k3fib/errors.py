"""Exception hierarchy.

Every failure the library can signal derives from :class:`K3FibError`, so
callers (the CLI in particular) can map each kind to a stable exit code.
"""


class K3FibError(Exception):
    exit_code = 1


class ParseError(K3FibError):
    exit_code = 2


class SingularSurface(K3FibError):
    """The discriminant of a model vanishes identically."""

    exit_code = 3


class GenericityError(K3FibError):
    exit_code = 4


class DegreeOverflow(K3FibError):
    exit_code = 5


class DivisionByZero(K3FibError, ZeroDivisionError):
    pass


class AmbiguousBundle(K3FibError):
    pass


class UnclassifiableTriple(K3FibError):
    pass


class NotAQuartic(K3FibError):
    pass


class SingularPoint(K3FibError):
    pass


class NoSection(K3FibError):
    pass


class Underdetermined(K3FibError):
    pass


class Inconsistent(K3FibError):
    pass


class UnknownSymbol(K3FibError):
    exit_code = 2


class OpaquePairing(K3FibError):
    pass


class UnrecognizedConfiguration(K3FibError):
    pass


class IdentityFails(K3FibError):
    """A claimed identity between two expressions does not hold."""

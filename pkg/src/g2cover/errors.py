"""Shared exception hierarchy.

DomainError and its subclasses mark mathematically invalid requests (the CLI
maps them to exit code 2).  Everything else is an internal failure.
"""


class G2Error(Exception):
    pass


class DomainError(G2Error):
    """Input outside the mathematical domain of an operation."""


class SingularModelError(DomainError):
    """A curve model that must be smooth is singular."""


class DiscriminantLocusError(DomainError):
    """A parameter value sits on the discriminant locus of a family."""


class DegenerateFiberError(DomainError):
    """A family member degenerates (drops degree, loses squarefreeness)."""


class SpecialPointError(DomainError):
    """A base point that must avoid Weierstrass/infinite points does not."""


class ZeroDivisorError(G2Error):
    """A quotient-ring inversion hit a zero divisor.

    `factor` is a nontrivial factor of the offending defining polynomial and
    `level` the index of that tower level; callers may split the tower on the
    factor and retry.
    """

    def __init__(self, message, factor=None, level=None):
        super().__init__(message)
        self.factor = factor
        self.level = level


class CertificationError(G2Error):
    """A numeric result could not be certified to the requested tolerance."""


class NonConvergenceError(CertificationError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual

"""
Everything raised on purpose by raag derives from RaagError.
The command line tool turns these into exit codes, so each class
carries its own.
"""


class RaagError(Exception):
    exit_code = 10


class MalformedInputError(RaagError):
    exit_code = 10


class PreconditionError(RaagError):
    exit_code = 11


class NotFlagError(PreconditionError):
    """The complex is not flag, so it is not a RAAG presentation."""

    exit_code = 12


class NonSimplicialQuotientError(RaagError):
    """A vertex map collapses two vertices of some simplex."""

    exit_code = 13


class CorruptComplexError(RaagError):
    exit_code = 14


class WitnessRejectedError(RaagError):
    exit_code = 15


class UnknownFixtureError(MalformedInputError):
    exit_code = 16

"""Exception taxonomy shared by all modules.

The CLI prints the class name of any ``TraceMapError`` it catches, so the
names here double as error codes.
"""


class TraceMapError(Exception):
    """Base class for computation errors raised by this package."""


class RuleSyntaxError(TraceMapError, ValueError):
    pass


class NotMonicInZ(TraceMapError, ValueError):
    pass


class DivisionLeftRemainder(TraceMapError, ArithmeticError):
    """Fricke character did not divide I(F); the half-trace reducer is wrong."""


class FieldMismatch(TraceMapError, TypeError):
    pass


class InverseLettersUnsupported(TraceMapError, ValueError):
    pass


class DegenerateD(TraceMapError, ValueError):
    pass


class ResolutionTooCoarse(TraceMapError):
    pass


class NonPositiveLength(TraceMapError, ValueError):
    pass


class AntiferroNormalization(TraceMapError, ValueError):
    pass


class TraceCollapse(TraceMapError, ArithmeticError):
    def __init__(self, generation, value):
        super().__init__(f"x_n = {value!r} <= 0 at generation {generation}")
        self.generation = generation
        self.value = value


class UsageError(Exception):
    """Bad command line; the CLI exits with status 2."""


class UnknownSubcommand(UsageError):
    pass


class BadFlagValue(UsageError):
    pass

"""Exception hierarchy.

Input problems derive from :class:`InputError`; failures that would
contradict a proven theorem derive from :class:`InvariantBreach` and always
indicate a bug in this package rather than in the caller's data.
"""


class MonocharError(Exception):
    pass


class InputError(MonocharError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class AssociativityViolation(InputError):
    def __init__(self, a, b, c):
        self.triple = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) for a={a}, b={b}, c={c}")


class IdentityViolation(InputError):
    def __init__(self, a):
        self.element = a
        super().__init__(f"identity law fails at element {a}")


class IndexOutOfRange(InputError):
    pass


class ImageOutOfRange(InputError):
    pass


class SizeLimitExceeded(InputError):
    pass


class PartialTransition(InputError):
    pass


class NotGroupElement(InputError):
    pass


class NotIdempotent(InputError):
    pass


class WitnessInvalid(InputError):
    pass


class UnsupportedField(InputError):
    pass


class NotCoprime(InputError):
    pass


class NotDivisor(InputError):
    pass


class ModulusTooSmall(InputError):
    pass


class NoTransformationData(InputError):
    pass


class InsufficientCoefficients(InputError):
    pass


class NotCyclic(MonocharError):
    def __init__(self, counterexample):
        self.counterexample = counterexample
        super().__init__(f"subset is not cyclic: {counterexample}")


class InvariantBreach(MonocharError):
    pass


class NotTransitive(InvariantBreach):
    pass


class BijectionFailure(InvariantBreach):
    pass


class NotClassConstant(InvariantBreach):
    pass


class NotRepresentation(InputError):
    pass

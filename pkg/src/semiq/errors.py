"""Exception types raised by semiq."""


class SemiqError(Exception):
    """Base class for all semiq errors."""


class ValidationError(SemiqError, ValueError):
    """Input rejected before any computation."""


class EmptyInput(ValidationError):
    pass


class NonPositiveEntry(ValidationError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"generators must be positive, got {value}")


class GcdNotOne(ValidationError):
    def __init__(self, gcd):
        self.gcd = gcd
        super().__init__(f"gcd is {gcd}, not 1")


class NotAGenerator(ValidationError):
    def __init__(self, value, gens):
        self.value = value
        super().__init__(f"{value} is not one of the generators {tuple(gens)}")


class NotCoprime(ValidationError):
    def __init__(self, a1, a2):
        super().__init__(f"{a1} and {a2} are not coprime")


class DivisorMismatch(ValidationError):
    def __init__(self, p, a):
        self.p = p
        self.a = a
        super().__init__(f"p={p} does not divide {a}")


class ConstraintViolation(ValidationError):
    """A family hypothesis failed; ``clause`` names the first failing one."""

    def __init__(self, family, clause):
        self.family = family
        self.clause = clause
        super().__init__(f"{family}: hypothesis violated: {clause}")


class TPrimeOdd(ConstraintViolation):
    """The odd-term closed form does not apply; use the generic quotient path."""

    def __init__(self, t_prime):
        self.t_prime = t_prime
        super().__init__("odd-aap", f"t' = {t_prime} is odd; no closed form, use the generic quotient path")


class NonIntegerResult(SemiqError, ArithmeticError):
    pass


class InternalBoundError(SemiqError, RuntimeError):
    """A proven search bound was exceeded. Always a bug, never a valid outcome."""


class MismatchFound(SemiqError):
    def __init__(self, instance, expected, got):
        self.instance = instance
        self.expected = expected
        self.got = got
        super().__init__(f"mismatch on {instance}: expected {expected}, got {got}")

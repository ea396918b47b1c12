"""Exception hierarchy shared by all ffgcd modules.

Every domain failure raises a subclass of :class:`FFGcdError`; the CLI maps
these to exit code 1 and reports the class name.
"""


class FFGcdError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def name(self) -> str:
        return type(self).__name__


# --- field construction and element arithmetic -----------------------------

class NonPrime(FFGcdError):
    pass


class NotAPrimePower(FFGcdError):
    pass


class DegreeZero(FFGcdError):
    pass


class CardinalityLimitExceeded(FFGcdError):
    pass


class MixedContexts(FFGcdError):
    pass


class DivisionByZero(FFGcdError):
    pass


class ZeroElement(FFGcdError):
    pass


class IncompatibleCharacteristic(FFGcdError):
    pass


class NotASubfield(FFGcdError):
    pass


# --- polynomial arithmetic ---------------------------------------------------

class ContextMismatch(FFGcdError):
    pass


class BothZero(FFGcdError):
    pass


class ZeroInput(FFGcdError):
    pass


class ConstantModulus(FFGcdError):
    pass


class DegreeCapExceeded(FFGcdError):
    """Carries the degree the rejected computation would have required."""

    def __init__(self, required: int, cap: int):
        super().__init__(f"required degree {required} exceeds cap {cap}")
        self.required = required
        self.cap = cap


class PolySyntaxError(FFGcdError):
    """Polynomial text did not match the grammar; carries the position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CoefficientOutOfRange(FFGcdError):
    pass


# --- enumeration and counting ------------------------------------------------

class EnumerationCapExceeded(FFGcdError):
    pass


class NotCoprime(FFGcdError):
    pass


# --- residue symbols ---------------------------------------------------------

class RNotDividingQMinus1(FFGcdError):
    pass


class NotIrreducible(FFGcdError):
    pass


class EvenR(FFGcdError):
    pass


# --- exponent plans and certificates ----------------------------------------

class N0NotReduced(FFGcdError):
    pass


class InfeasiblePlan(FFGcdError):
    """Carries the field cardinality the plan would need."""

    def __init__(self, message: str, required_q: int | None = None):
        super().__init__(message)
        self.required_q = required_q


class NotMonic(FFGcdError):
    pass


class Constant(FFGcdError):
    pass


class MultiplicativelyDependent(FFGcdError):
    pass

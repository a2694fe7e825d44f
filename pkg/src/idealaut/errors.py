"""Exception types shared by all modules.

Every error carries a stable machine-readable ``code`` used by the CLI's
JSON error records and exit-status mapping:

  * syntax errors (exit 2): ParseError, CoefficientNotInRing
  * precondition violations (exit 3): everything else below
  * TheoryViolation (exit 4): an internal consistency check failed; this
    indicates a bug, never bad user input.
"""


class IdealAutError(Exception):
    """Base class for all library errors."""

    code = "error"


class MixedRings(IdealAutError):
    """Operands belong to different coefficient rings."""

    code = "mixed_rings"


class DivisionByZero(IdealAutError):
    code = "division_by_zero"


class InexactDivision(IdealAutError):
    """Exact division requested but the divisor does not divide the dividend."""

    code = "inexact_division"


class NotAUnit(IdealAutError):
    code = "not_a_unit"


class NotMonic(IdealAutError):
    """Leading coefficient is not invertible in the coefficient ring."""

    code = "not_monic"


class ConstantPolynomial(IdealAutError):
    code = "constant_polynomial"


class BothZero(IdealAutError):
    """gcd of two zero polynomials is undefined."""

    code = "both_zero"


class WrongRing(IdealAutError):
    """Operation restricted to a different class of coefficient rings."""

    code = "wrong_ring"


class NotAnAutomorphism(IdealAutError):
    code = "not_an_automorphism"


class BoundsExceeded(IdealAutError):
    """Configured size limits (degree, modulus, truncation bound) violated."""

    code = "bounds_exceeded"


class ParseError(IdealAutError):
    """Malformed input text; ``position`` is a 0-based character offset."""

    code = "syntax_error"

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position

    def __str__(self):
        base = super().__str__()
        if self.position is None:
            return base
        return f"{base} (at position {self.position})"


class CoefficientNotInRing(ParseError):
    """A literal is well-formed but denotes no element of the active ring."""

    code = "coefficient_not_in_ring"


class TheoryViolation(IdealAutError):
    """An internal cross-check contradicted the structure theory.

    Raising this means the implementation is wrong somewhere; it must never
    fire on any input.
    """

    code = "internal_assertion"

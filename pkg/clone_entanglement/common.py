from fractions import Fraction


DECIMAL_DIGITS = 12

# qubit cap for dense expansions: M <= 7 clones + ancilla
MAX_DENSE_QUBITS = 13

ENTRY_TOLERANCE = 1e-12
EIGENVALUE_TOLERANCE = 1e-10


class ClonerDomainError(ValueError):
    """Raised for parameters outside the domain of an operation."""


class ResourceLimitError(ClonerDomainError):
    """Raised when a dense expansion would exceed MAX_DENSE_QUBITS."""


class StateValidationError(ValueError):
    """Raised for states that are not normalized, Hermitian or positive."""


class VerificationFailure(RuntimeError):
    """Raised when an oracle check exceeds its tolerance."""

    def __init__(self, n_inputs: int, m_outputs: int, check: str, deviation: float):
        self.n_inputs = n_inputs
        self.m_outputs = m_outputs
        self.check = check
        self.deviation = deviation
        super().__init__(
            f"check '{check}' failed for N={n_inputs}, M={m_outputs}: deviation {deviation:.3e}")


def format_rational(value: Fraction) -> str:
    """Lowest-terms "p/q" rendering; integers render without a denominator."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: float) -> str:
    return f"{float(value):.{DECIMAL_DIGITS}g}"

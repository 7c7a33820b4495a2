"""
Exact combinatorics of the optimal universal N -> M qubit cloner.

The input is fixed to |0>, so the output is the Schmidt sum over j = 0..M-N of
alpha_j * |(M-j) zeros, j ones>_clones (x) |(M-1-j) zeros, j ones>_ancilla,
with both factors symmetric (Dicke) states. Only alpha_j^2 is ever needed by
the reduced states, and it is rational.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from scipy.special import comb, perm

from clone_entanglement.common import ClonerDomainError
from clone_entanglement.exact import Rational


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CloneSpec:
    n_inputs: int
    m_outputs: int

    def __post_init__(self):
        if not isinstance(self.n_inputs, int) or not isinstance(self.m_outputs, int):
            raise ClonerDomainError("N and M must be integers")
        if not 1 <= self.n_inputs <= self.m_outputs:
            raise ClonerDomainError(
                f"invalid cloner N={self.n_inputs}, M={self.m_outputs}: need 1 <= N <= M")

    @property
    def extra_copies(self) -> int:
        return self.m_outputs - self.n_inputs

    @property
    def ancilla_qubits(self) -> int:
        return self.m_outputs - 1

    def __str__(self):
        return f"{self.n_inputs}->{self.m_outputs}"


@dataclass(frozen=True)
class SchmidtOutputState:
    spec: CloneSpec
    amp_sq: Tuple[Rational, ...]

    def __post_init__(self):
        if len(self.amp_sq) != self.spec.extra_copies + 1:
            raise ClonerDomainError(
                f"expected {self.spec.extra_copies + 1} Schmidt weights, got {len(self.amp_sq)}")
        if any(w <= 0 for w in self.amp_sq) or sum(self.amp_sq) != 1:
            raise ClonerDomainError("Schmidt weights must be positive and sum to 1")


def binomial(n: int, k: int) -> int:
    """C(n, k), zero for k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return int(comb(n, k, exact=True))


def falling_factorial(n: int, k: int) -> int:
    """n! / (n-k)!"""
    return int(perm(n, k, exact=True))


def alpha_sq(spec: CloneSpec, j: int) -> Rational:
    """Squared Schmidt amplitude alpha_j(N,M)^2.

    Args:
        spec: the cloner.
        j: number of flipped clones, 0 <= j <= M - N.
    """
    if not 0 <= j <= spec.extra_copies:
        raise ClonerDomainError(f"j={j} out of range for {spec}: need 0 <= j <= {spec.extra_copies}")
    n, m = spec.n_inputs, spec.m_outputs
    # (M-N)!(M-j)! / ((M-N-j)! M!) == (M-j)_N / (M)_N
    return Rational((n + 1) * falling_factorial(m - j, n), (m + 1) * falling_factorial(m, n))


def output_state(spec: CloneSpec) -> SchmidtOutputState:
    weights = tuple(alpha_sq(spec, j) for j in range(spec.extra_copies + 1))
    logger.debug("output state for %s has %d Schmidt terms", spec, len(weights))
    return SchmidtOutputState(spec=spec, amp_sq=weights)


def optimal_fidelity(spec: CloneSpec) -> Rational:
    """Known optimal single-copy fidelity (M(N+1) + N) / (M(N+2))."""
    n, m = spec.n_inputs, spec.m_outputs
    return Rational(m * (n + 1) + n, m * (n + 2))

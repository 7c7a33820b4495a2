"""
Entanglement functionals for the cloner reductions.

Zero/non-zero concurrence decisions on X-form states are exact comparisons of
c^2 against a*e; the reported magnitudes are floats.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple, Union

import numpy as np
from scipy.special import entr

from clone_entanglement.brute_force_oracle import DenseDensityMatrix, DenseStateVector, partial_trace
from clone_entanglement.cloner_core import CloneSpec, alpha_sq
from clone_entanglement.common import ClonerDomainError, StateValidationError
from clone_entanglement.exact import Rational
from clone_entanglement.reduced_states import PureThreeQubitState, ThreeCloneMixture, XFormTwoQubitState


logger = logging.getLogger(__name__)

_PSD_TOLERANCE = 1e-10
# eigenvalues of rho below this are treated as exact zeros in the Wootters construction
_EIGENVALUE_FLOOR = 1e-14

_PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
_PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SPIN_FLIP = np.kron(_PAULI_Y, _PAULI_Y)


@dataclass(frozen=True)
class ConcurrenceValue:
    value: float
    exact_zero: bool

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"concurrence {self.value} outside [0, 1]")
        if self.exact_zero and self.value != 0.0:
            raise ValueError("an exact zero concurrence must have value 0")

    def __float__(self):
        return self.value


class PptWitness(Enum):
    FIRST = "p1^2>3p0p2"
    SECOND = "p2^2>3p1p3"
    NONE = "none"


@dataclass(frozen=True)
class PptVerdict:
    """is_npt certifies entanglement; a PPT verdict means no free tripartite
    entanglement, not separability."""
    is_npt: bool
    witness: PptWitness

    @property
    def entangled(self) -> bool:
        return self.is_npt

    @property
    def description(self) -> str:
        if self.is_npt:
            return f"NPT ({self.witness.value}): entangled"
        return "PPT: no free tripartite entanglement"


def concurrence_x_form(state: XFormTwoQubitState) -> ConcurrenceValue:
    """2 * max(|c| - sqrt(a e), 0), with the zero decision taken exactly."""
    product = state.a * state.e
    if state.c.compare_square(product) <= 0:
        return ConcurrenceValue(0.0, True)
    value = 2.0 * (float(state.c) - float(np.sqrt(float(product))))
    return ConcurrenceValue(min(max(value, 0.0), 1.0), False)


def eof_from_concurrence(concurrence: float) -> float:
    """Entanglement of formation as the binary entropy of (1 + sqrt(1 - C^2)) / 2."""
    concurrence = float(concurrence)
    if not 0.0 <= concurrence <= 1.0:
        raise ClonerDomainError(f"concurrence must lie in [0, 1], got {concurrence}")
    x = (1.0 + np.sqrt(1.0 - concurrence ** 2)) / 2.0
    # entr(0) == 0 gives the 0 log 0 = 0 convention
    return float((entr(x) + entr(1.0 - x)) / np.log(2))


def concurrence_clone_ancilla_closed(m_outputs: int) -> float:
    """Clone-ancilla concurrence of the 1 -> M cloner, (1/3)((M+2)/M - sqrt((M-2)/M))."""
    if m_outputs < 2:
        raise ClonerDomainError(f"clone-ancilla concurrence needs M >= 2, got {m_outputs}")
    m = m_outputs
    return ((m + 2) / m - np.sqrt((m - 2) / m)) / 3.0


def clone_ancilla_always_entangled(m_outputs: int) -> bool:
    """Exact positivity test for the 1 -> M clone-ancilla pair: (M+2)^2 > M(M-2)."""
    if m_outputs < 2:
        raise ClonerDomainError(f"clone-ancilla concurrence needs M >= 2, got {m_outputs}")
    return (m_outputs + 2) ** 2 > m_outputs * (m_outputs - 2)


def _as_matrix(rho: Union[DenseDensityMatrix, np.ndarray]) -> np.ndarray:
    if isinstance(rho, DenseDensityMatrix):
        return rho.entries
    return np.asarray(rho, dtype=complex)


def wootters_concurrence(rho: Union[DenseDensityMatrix, np.ndarray]) -> float:
    """Concurrence of an arbitrary two-qubit state.

    Uses rho = V V^dagger; the lambda_i are the singular values of
    V^T (sigma_y x sigma_y) V.
    """
    rho = _as_matrix(rho)
    if rho.shape != (4, 4):
        raise StateValidationError(f"two-qubit density matrix must be 4x4, got {rho.shape}")
    if np.abs(rho - rho.conj().T).max() > _PSD_TOLERANCE or abs(np.trace(rho).real - 1.0) > _PSD_TOLERANCE:
        raise StateValidationError("not a Hermitian unit-trace matrix")
    eigenvalues, eigenvectors = np.linalg.eigh(rho)
    if eigenvalues.min() < -_PSD_TOLERANCE:
        raise StateValidationError(f"matrix is not positive semidefinite (min eigenvalue {eigenvalues.min():.3e})")
    support = eigenvalues > _EIGENVALUE_FLOOR
    factor = eigenvectors[:, support] * np.sqrt(eigenvalues[support])
    lambdas = np.sort(np.linalg.svd(factor.T @ _SPIN_FLIP @ factor, compute_uv=False))[::-1]
    lambdas = np.concatenate([lambdas, np.zeros(4 - lambdas.size)])
    return float(max(0.0, lambdas[0] - lambdas[1:].sum()))


def _pure_amplitudes(state: Union[PureThreeQubitState, DenseStateVector]) -> np.ndarray:
    if isinstance(state, DenseStateVector):
        if state.num_qubits != 3:
            raise StateValidationError(f"expected a three-qubit state, got {state.num_qubits} qubits")
        return state.amplitudes
    return state.amplitudes


def three_tangle(state: Union[PureThreeQubitState, DenseStateVector]) -> float:
    """Residual three-way tangle, 4 |hyperdeterminant|."""
    a = _pure_amplitudes(state).reshape(2, 2, 2)
    d1 = (a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2 + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
          + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2 + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2)
    d2 = (a[0, 0, 0] * a[1, 1, 1] * a[0, 1, 1] * a[1, 0, 0]
          + a[0, 0, 0] * a[1, 1, 1] * a[1, 0, 1] * a[0, 1, 0]
          + a[0, 0, 0] * a[1, 1, 1] * a[1, 1, 0] * a[0, 0, 1]
          + a[0, 1, 1] * a[1, 0, 0] * a[1, 0, 1] * a[0, 1, 0]
          + a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 0] * a[0, 0, 1]
          + a[1, 0, 1] * a[0, 1, 0] * a[1, 1, 0] * a[0, 0, 1])
    d3 = (a[0, 0, 0] * a[1, 1, 0] * a[1, 0, 1] * a[0, 1, 1]
          + a[1, 1, 1] * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0])
    return float(min(4.0 * abs(d1 - 2.0 * d2 + 4.0 * d3), 1.0))


def pairwise_concurrences(state: Union[PureThreeQubitState, DenseStateVector]) -> dict:
    """Concurrences of the three two-qubit reductions keyed by qubit pair."""
    dense = state if isinstance(state, DenseStateVector) else DenseStateVector(3, state.amplitudes)
    return {pair: wootters_concurrence(partial_trace(dense, pair)) for pair in ((0, 1), (0, 2), (1, 2))}


def tangle_sum(state: Union[PureThreeQubitState, DenseStateVector]) -> float:
    return float(sum(c ** 2 for c in pairwise_concurrences(state).values()))


def ppt_three_clone(mix: ThreeCloneMixture) -> PptVerdict:
    """Exact partial-transpose test; the transpose on any one qubit is negative
    iff p1^2 > 3 p0 p2 or p2^2 > 3 p1 p3."""
    if mix.p1 ** 2 > 3 * mix.p0 * mix.p2:
        return PptVerdict(True, PptWitness.FIRST)
    if mix.p2 ** 2 > 3 * mix.p1 * mix.p3:
        return PptVerdict(True, PptWitness.SECOND)
    return PptVerdict(False, PptWitness.NONE)


def _pauli_string(*paulis: np.ndarray) -> np.ndarray:
    operator = np.ones((1, 1), dtype=complex)
    for pauli in paulis:
        operator = np.kron(operator, pauli)
    return operator


_MERMIN_OPERATOR = (
    _pauli_string(_PAULI_X, _PAULI_X, _PAULI_X)
    - _pauli_string(_PAULI_X, _PAULI_Y, _PAULI_Y)
    - _pauli_string(_PAULI_Y, _PAULI_X, _PAULI_Y)
    - _pauli_string(_PAULI_Y, _PAULI_Y, _PAULI_X)
)

MERMIN_CLASSICAL_BOUND = 2.0


def mermin_value(state: Union[PureThreeQubitState, DenseStateVector, DenseDensityMatrix, np.ndarray]) -> float:
    """<XXX> - <XYY> - <YXY> - <YYX>; local realism bounds it by 2."""
    if isinstance(state, (PureThreeQubitState, DenseStateVector)):
        amplitudes = _pure_amplitudes(state)
        return float(np.vdot(amplitudes, _MERMIN_OPERATOR @ amplitudes).real)
    rho = _as_matrix(state)
    if rho.shape != (8, 8):
        raise StateValidationError(f"three-qubit density matrix must be 8x8, got {rho.shape}")
    return float(np.trace(rho @ _MERMIN_OPERATOR).real)


def limit_term_gap(spec: CloneSpec) -> List[Tuple[int, Rational, float]]:
    """Per-term view of the two-clone sums: (j, c_j, sqrt(a_j e_j)).

    For large M the dominant terms agree, so the cross terms of a*e make
    sqrt(a e) exceed c.
    """
    m = spec.m_outputs
    if m < 2:
        raise ClonerDomainError(f"{spec} has no pair of clones")
    pairs = m * (m - 1)
    rows = []
    for j in range(spec.extra_copies + 1):
        w = alpha_sq(spec, j)
        a_j = w * Rational((m - j) * (m - j - 1), pairs)
        c_j = w * Rational(j * (m - j), pairs)
        e_j = w * Rational(j * (j - 1), pairs)
        rows.append((j, c_j, float(np.sqrt(float(a_j * e_j)))))
    return rows


def relative_term_gap(spec: CloneSpec) -> float:
    """sum_j (c_j - sqrt(a_j e_j)) / c; shrinks roughly like 1/M."""
    rows = limit_term_gap(spec)
    total = sum(float(c_j) for _, c_j, _ in rows)
    if total == 0:
        return 0.0
    return sum(abs(float(c_j) - root) for _, c_j, root in rows) / total

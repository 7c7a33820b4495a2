"""
Brute-force ground truth for the analytic path.

Expands the cloner output into the full 2**(2M-1) amplitude vector and
reduces it with literal partial traces. Qubit 0 is the most significant bit of
a basis index; clones occupy qubits 0..M-1 and the ancilla M..2M-2.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from clone_entanglement.cloner_core import CloneSpec, output_state
from clone_entanglement.common import (
    MAX_DENSE_QUBITS, ClonerDomainError, ResourceLimitError, StateValidationError,
)


logger = logging.getLogger(__name__)

_NORM_TOLERANCE = 1e-12
_MATRIX_TOLERANCE = 1e-12
_PSD_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class DenseStateVector:
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amplitudes.size != 2 ** self.num_qubits:
            raise StateValidationError(
                f"{self.num_qubits} qubits need {2 ** self.num_qubits} amplitudes, got {amplitudes.size}")
        if abs(np.vdot(amplitudes, amplitudes).real - 1.0) > _NORM_TOLERANCE:
            raise StateValidationError("state vector is not normalized")
        object.__setattr__(self, "amplitudes", amplitudes)

    def projector(self) -> "DenseDensityMatrix":
        return DenseDensityMatrix(self.num_qubits, np.outer(self.amplitudes, self.amplitudes.conj()))


@dataclass(frozen=True, eq=False)
class DenseDensityMatrix:
    num_qubits: int
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        dimension = 2 ** self.num_qubits
        if entries.shape != (dimension, dimension):
            raise StateValidationError(f"expected a {dimension}x{dimension} matrix, got {entries.shape}")
        if np.abs(entries - entries.conj().T).max() > _MATRIX_TOLERANCE:
            raise StateValidationError("density matrix is not Hermitian")
        if abs(np.trace(entries).real - 1.0) > _MATRIX_TOLERANCE:
            raise StateValidationError("density matrix does not have unit trace")
        if np.linalg.eigvalsh(entries).min() < -_PSD_TOLERANCE:
            raise StateValidationError("density matrix is not positive semidefinite")
        object.__setattr__(self, "entries", entries)

    @property
    def dimension(self) -> int:
        return 2 ** self.num_qubits


def _check_size(n_qubits: int):
    if n_qubits > MAX_DENSE_QUBITS:
        raise ResourceLimitError(f"{n_qubits} qubits exceed the dense limit of {MAX_DENSE_QUBITS}")


def dicke_vector(n_qubits: int, n_excited: int) -> DenseStateVector:
    """Equal superposition of all n_qubits-bit strings with n_excited ones."""
    if not 0 <= n_excited <= n_qubits:
        raise ClonerDomainError(f"need 0 <= n_excited <= n_qubits, got ({n_qubits}, {n_excited})")
    _check_size(n_qubits)
    positions = list(itertools.combinations(range(n_qubits), n_excited))
    vector = np.zeros(2 ** n_qubits, dtype=complex)
    for excited in positions:
        vector[sum(1 << (n_qubits - 1 - q) for q in excited)] = 1.0
    vector /= np.sqrt(len(positions))
    return DenseStateVector(n_qubits, vector)


def apply_local_unitary(vector: np.ndarray, n_qubits: int, unitary: np.ndarray) -> np.ndarray:
    """Apply the same 2x2 unitary to every qubit of a state vector."""
    tensor = vector.reshape([2] * n_qubits)
    for axis in range(n_qubits):
        tensor = np.moveaxis(np.tensordot(unitary, tensor, axes=([1], [axis])), 0, axis)
    return tensor.reshape(-1)


def _assemble(spec: CloneSpec, clone_basis: np.ndarray, ancilla_basis: np.ndarray) -> DenseStateVector:
    m = spec.m_outputs
    _check_size(2 * m - 1)
    total = np.zeros(2 ** (2 * m - 1), dtype=complex)
    for j, weight in enumerate(output_state(spec).amp_sq):
        clones = apply_local_unitary(dicke_vector(m, j).amplitudes, m, clone_basis)
        ancilla = apply_local_unitary(dicke_vector(m - 1, j).amplitudes, m - 1, ancilla_basis)
        total += np.sqrt(float(weight)) * np.kron(clones, ancilla)
    logger.debug("expanded %s into %d amplitudes", spec, total.size)
    return DenseStateVector(2 * m - 1, total)


def full_output_state(spec: CloneSpec) -> DenseStateVector:
    """Dense cloner output for the input |0>."""
    identity = np.eye(2, dtype=complex)
    return _assemble(spec, identity, identity)


def rotated_output_state(spec: CloneSpec, psi: np.ndarray) -> DenseStateVector:
    """Dense cloner output for an arbitrary normalized qubit psi.

    Clones use the basis {psi, psi_perp}; the ancilla uses the complex
    conjugate basis {psi*, psi*_perp}.
    """
    psi = np.asarray(psi, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    psi_perp = np.array([-psi[1].conj(), psi[0].conj()])
    clone_basis = np.column_stack([psi, psi_perp])
    return _assemble(spec, clone_basis, clone_basis.conj())


def _validate_keep(keep: Sequence[int], num_qubits: int):
    if len(set(keep)) != len(keep) or any(not 0 <= q < num_qubits for q in keep):
        raise ClonerDomainError(f"invalid qubit indices {list(keep)} for {num_qubits} qubits")


def partial_trace(state: Union[DenseStateVector, DenseDensityMatrix], keep: Iterable[int]) -> DenseDensityMatrix:
    """Reduce onto the qubits in keep, in the order given."""
    keep = list(keep)
    n = state.num_qubits
    _validate_keep(keep, n)
    traced = [q for q in range(n) if q not in keep]
    if isinstance(state, DenseStateVector):
        tensor = np.transpose(state.amplitudes.reshape([2] * n), keep + traced)
        block = tensor.reshape(2 ** len(keep), 2 ** len(traced))
        return DenseDensityMatrix(len(keep), block @ block.conj().T)
    tensor = state.entries.reshape([2] * (2 * n))
    tensor = np.transpose(tensor, keep + traced + [n + q for q in keep] + [n + q for q in traced])
    dk, dt = 2 ** len(keep), 2 ** len(traced)
    reduced = np.einsum("atbt->ab", tensor.reshape(dk, dt, dk, dt))
    return DenseDensityMatrix(len(keep), reduced)


def partial_transpose(rho: DenseDensityMatrix, subsystem: int) -> np.ndarray:
    _validate_keep([subsystem], rho.num_qubits)
    n = rho.num_qubits
    tensor = rho.entries.reshape([2] * (2 * n))
    return np.swapaxes(tensor, subsystem, n + subsystem).reshape(rho.dimension, rho.dimension)


def partial_transpose_min_eig(rho: DenseDensityMatrix, subsystem: int) -> float:
    return float(np.linalg.eigvalsh(partial_transpose(rho, subsystem)).min())


def schmidt_spectrum(state: DenseStateVector, n_left: int) -> np.ndarray:
    """Squared singular values of the split after the first n_left qubits, descending."""
    block = state.amplitudes.reshape(2 ** n_left, 2 ** (state.num_qubits - n_left))
    return np.linalg.svd(block, compute_uv=False) ** 2


def single_clone_overlap(state: DenseStateVector, psi: np.ndarray) -> float:
    psi = np.asarray(psi, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    rho = partial_trace(state, [0]).entries
    return float(np.vdot(psi, rho @ psi).real)


def random_qubit(rng: np.random.Generator) -> np.ndarray:
    theta = np.arccos(1 - 2 * rng.random())
    phi = 2 * np.pi * rng.random()
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def universality_check(spec: CloneSpec, trials: int, rng: np.random.Generator = None) -> float:
    """Largest |F(psi) - F(|0>)| over random pure inputs psi.

    Args:
        spec: the cloner, M <= 7.
        trials: number of random inputs.
        rng: random generator; a fresh default generator if omitted.
    """
    rng = rng if rng is not None else np.random.default_rng()
    reference = single_clone_overlap(full_output_state(spec), np.array([1.0, 0.0]))
    deviation = 0.0
    for _ in range(trials):
        psi = random_qubit(rng)
        fidelity = single_clone_overlap(rotated_output_state(spec, psi), psi)
        deviation = max(deviation, abs(fidelity - reference))
    return deviation

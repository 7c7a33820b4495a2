import numpy as np
import pytest

from clone_entanglement.brute_force_oracle import (
    DenseDensityMatrix, DenseStateVector, dicke_vector, full_output_state, partial_trace, partial_transpose,
    partial_transpose_min_eig, random_qubit, rotated_output_state, schmidt_spectrum, single_clone_overlap,
    universality_check,
)
from clone_entanglement.cloner_core import CloneSpec, output_state
from clone_entanglement.common import ClonerDomainError, ResourceLimitError, StateValidationError
from clone_entanglement.reduced_states import (
    clone_ancilla_state, one_to_two_pure_state, three_clone_density_matrix, three_clone_state, two_clone_state,
)


def test_dicke_vector_examples():
    np.testing.assert_allclose(dicke_vector(2, 1).amplitudes, [0, 1 / np.sqrt(2), 1 / np.sqrt(2), 0])
    np.testing.assert_allclose(dicke_vector(3, 0).amplitudes, np.eye(8)[0])
    expected = np.zeros(8)
    expected[[3, 5, 6]] = 1 / np.sqrt(3)
    np.testing.assert_allclose(dicke_vector(3, 2).amplitudes, expected)


def test_dicke_vector_limits():
    with pytest.raises(ClonerDomainError):
        dicke_vector(3, 4)
    with pytest.raises(ResourceLimitError, match="dense limit"):
        dicke_vector(14, 1)


def test_full_output_state_one_to_two_matches_pure_state():
    np.testing.assert_allclose(full_output_state(CloneSpec(1, 2)).amplitudes,
                               one_to_two_pure_state().amplitudes, atol=1e-12)


def test_full_output_state_identity_cloner():
    state = full_output_state(CloneSpec(3, 3))
    assert state.num_qubits == 5
    assert abs(state.amplitudes[0]) == pytest.approx(1.0)


def test_full_output_state_size_cap():
    with pytest.raises(ResourceLimitError):
        full_output_state(CloneSpec(1, 8))


def test_schmidt_spectrum_matches_weights():
    spec = CloneSpec(2, 4)
    state = full_output_state(spec)
    assert np.vdot(state.amplitudes, state.amplitudes).real == pytest.approx(1.0)
    weights = sorted((float(w) for w in output_state(spec).amp_sq), reverse=True)
    spectrum = schmidt_spectrum(state, spec.m_outputs)
    np.testing.assert_allclose(spectrum[:len(weights)], weights, atol=1e-12)
    np.testing.assert_allclose(spectrum[len(weights):], 0.0, atol=1e-12)


def test_partial_trace_of_one_to_two_state():
    dense = DenseStateVector(3, one_to_two_pure_state().amplitudes)
    np.testing.assert_allclose(partial_trace(dense, [0, 1]).entries,
                               two_clone_state(CloneSpec(1, 2)).to_matrix(), atol=1e-12)
    full = partial_trace(dense, [0, 1, 2])
    np.testing.assert_allclose(full.entries, dense.projector().entries, atol=1e-12)


def test_partial_trace_of_density_matrix_matches_vector_path():
    state = full_output_state(CloneSpec(1, 3))
    rho = state.projector()
    for keep in ([0, 1], [0, 3], [2, 4], [4, 1]):
        np.testing.assert_allclose(partial_trace(rho, keep).entries, partial_trace(state, keep).entries, atol=1e-12)
    np.testing.assert_allclose(partial_trace(state, [0, 1]).entries,
                               two_clone_state(CloneSpec(1, 3)).to_matrix(), atol=1e-12)
    np.testing.assert_allclose(partial_trace(state, [0, 3]).entries,
                               clone_ancilla_state(CloneSpec(1, 3)).to_matrix(), atol=1e-12)


@pytest.mark.parametrize('keep', [[0, 0], [5], [-1]])
def test_partial_trace_rejects_bad_indices(keep):
    with pytest.raises(ClonerDomainError, match="invalid qubit indices"):
        partial_trace(full_output_state(CloneSpec(1, 2)), keep)


def test_partial_transpose_signs():
    npt = DenseDensityMatrix(3, three_clone_density_matrix(three_clone_state(CloneSpec(1, 3))))
    assert partial_transpose_min_eig(npt, 0) < -1e-10
    ppt = DenseDensityMatrix(3, three_clone_density_matrix(three_clone_state(CloneSpec(1, 5))))
    assert partial_transpose_min_eig(ppt, 0) >= -1e-10
    product = DenseStateVector(3, np.eye(8)[5]).projector()
    assert partial_transpose_min_eig(product, 1) >= -1e-12


def test_partial_transpose_of_bell_state():
    bell = DenseStateVector(2, np.array([1, 0, 0, 1]) / np.sqrt(2)).projector()
    transposed = partial_transpose(bell, 1)
    assert np.linalg.eigvalsh(transposed).min() == pytest.approx(-0.5)


def test_dense_types_validate():
    with pytest.raises(StateValidationError, match="normalized"):
        DenseStateVector(1, np.array([1.0, 1.0]))
    with pytest.raises(StateValidationError, match="amplitudes"):
        DenseStateVector(2, np.array([1.0, 0.0]))
    with pytest.raises(StateValidationError, match="Hermitian"):
        DenseDensityMatrix(1, np.array([[0.5, 0.5], [0.0, 0.5]]))
    with pytest.raises(StateValidationError, match="unit trace"):
        DenseDensityMatrix(1, np.eye(2))
    with pytest.raises(StateValidationError, match="positive semidefinite"):
        DenseDensityMatrix(1, np.diag([1.5, -0.5]))


def test_rotated_output_state_reduces_to_default_input():
    np.testing.assert_allclose(rotated_output_state(CloneSpec(2, 4), np.array([1.0, 0.0])).amplitudes,
                               full_output_state(CloneSpec(2, 4)).amplitudes, atol=1e-12)


def test_single_clone_overlap_of_rotated_output(rng):
    spec = CloneSpec(1, 3)
    psi = random_qubit(rng)
    assert np.linalg.norm(psi) == pytest.approx(1.0)
    assert single_clone_overlap(rotated_output_state(spec, psi), psi) == pytest.approx(7 / 9, abs=1e-12)


@pytest.mark.parametrize('n, m', [(1, 2), (2, 4), (3, 3)])
def test_universality_check(rng, n, m):
    assert universality_check(CloneSpec(n, m), 100, rng) < 1e-10


def test_universality_check_identity_cloner_is_exact(rng):
    assert universality_check(CloneSpec(2, 2), 10, rng) == pytest.approx(0.0, abs=1e-14)

"""Oracle-equivalence suite: every analytic constructor against the dense expansion."""
import itertools
import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from clone_entanglement.brute_force_oracle import (
    DenseStateVector, full_output_state, partial_trace, partial_transpose_min_eig, schmidt_spectrum,
    universality_check,
)
from clone_entanglement.cloner_core import CloneSpec, output_state
from clone_entanglement.common import (
    EIGENVALUE_TOLERANCE, ENTRY_TOLERANCE, ClonerDomainError, VerificationFailure,
)
from clone_entanglement.entanglement_measures import (
    concurrence_x_form, ppt_three_clone, tangle_sum, three_tangle, wootters_concurrence,
)
from clone_entanglement.reduced_states import (
    clone_ancilla_state, one_to_two_pure_state, single_clone_fidelity, three_clone_density_matrix,
    three_clone_state, two_clone_state,
)


logger = logging.getLogger(__name__)

MAX_ORACLE_M = 7
MEASURE_TOLERANCE = 1e-10
UNIVERSALITY_TOLERANCE = 1e-10


@dataclass(frozen=True)
class CheckResult:
    n_inputs: int
    m_outputs: int
    check: str
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance


def _max_abs(left: np.ndarray, right: np.ndarray) -> float:
    return float(np.abs(np.asarray(left) - np.asarray(right)).max())


def check_spec(spec: CloneSpec, trials: int, rng: np.random.Generator) -> List[CheckResult]:
    n, m = spec.n_inputs, spec.m_outputs
    state = full_output_state(spec)
    results = []

    def record(check: str, deviation: float, tolerance: float = ENTRY_TOLERANCE):
        result = CheckResult(n, m, check, float(deviation), tolerance)
        logger.debug("%s %s: deviation %.3e", spec, check, result.deviation)
        results.append(result)

    weights = sorted((float(w) for w in output_state(spec).amp_sq), reverse=True)
    spectrum = schmidt_spectrum(state, m)
    padded = np.concatenate([weights, np.zeros(spectrum.size - len(weights))])
    record("schmidt_spectrum", _max_abs(spectrum, padded))

    single = partial_trace(state, [0]).entries
    record("fidelity", abs(single[0, 0].real - float(single_clone_fidelity(spec))))

    if m >= 2:
        clones = partial_trace(state, [0, 1])
        analytic = two_clone_state(spec)
        record("two_clone", _max_abs(clones.entries, analytic.to_matrix()))
        record("two_clone_concurrence",
               abs(wootters_concurrence(clones) - concurrence_x_form(analytic).value), MEASURE_TOLERANCE)

        mixed = partial_trace(state, [0, m])
        analytic = clone_ancilla_state(spec)
        record("clone_ancilla", _max_abs(mixed.entries, analytic.to_matrix()))
        record("clone_ancilla_concurrence",
               abs(wootters_concurrence(mixed) - concurrence_x_form(analytic).value), MEASURE_TOLERANCE)

        reference = clones.entries
        record("pair_symmetry", max(
            _max_abs(partial_trace(state, pair).entries, reference)
            for pair in itertools.combinations(range(m), 2)))
        reference = mixed.entries
        record("clone_ancilla_symmetry", max(
            _max_abs(partial_trace(state, pair).entries, reference)
            for pair in itertools.product(range(m), range(m, 2 * m - 1))))

    if m >= 3:
        triple = partial_trace(state, [0, 1, 2])
        mixture = three_clone_state(spec)
        record("three_clone", _max_abs(triple.entries, three_clone_density_matrix(mixture)))
        record("triple_symmetry", max(
            _max_abs(partial_trace(state, clones).entries, triple.entries)
            for clones in itertools.combinations(range(m), 3)))
        minimum = partial_transpose_min_eig(triple, 0)
        numerical_npt = minimum < -EIGENVALUE_TOLERANCE
        record("ppt_sign", 0.0 if numerical_npt == ppt_three_clone(mixture).is_npt else abs(minimum),
               EIGENVALUE_TOLERANCE)

    record("universality", universality_check(spec, trials, rng), UNIVERSALITY_TOLERANCE)
    return results


def check_one_to_two() -> List[CheckResult]:
    """The 1 -> 2 benchmark: dense state, 3-tangle and the tangle sum."""
    expected = one_to_two_pure_state()
    state = full_output_state(CloneSpec(1, 2))
    # qubit 0 = original, 1 = clone, 2 = ancilla on both sides
    dense = DenseStateVector(3, expected.amplitudes)
    return [
        CheckResult(1, 2, "one_to_two_state", _max_abs(state.amplitudes, dense.amplitudes), ENTRY_TOLERANCE),
        CheckResult(1, 2, "three_tangle", three_tangle(expected), ENTRY_TOLERANCE),
        CheckResult(1, 2, "tangle_sum", abs(tangle_sum(expected) - 1.0), MEASURE_TOLERANCE),
    ]


def run_oracle_suite(m_cap: int, trials: int = 100, rng: np.random.Generator = None) -> List[CheckResult]:
    """Run every check for all 1 <= N <= M <= m_cap.

    Args:
        m_cap: largest M, at most 7.
        trials: random inputs per cloner in the universality check.
        rng: random generator; seeded with 0 if omitted so reports are reproducible.
    """
    if not 1 <= m_cap <= MAX_ORACLE_M:
        raise ClonerDomainError(f"m_cap must satisfy 1 <= m_cap <= {MAX_ORACLE_M}, got {m_cap}")
    rng = rng if rng is not None else np.random.default_rng(0)
    results = []
    for m in range(1, m_cap + 1):
        for n in range(1, m + 1):
            results.extend(check_spec(CloneSpec(n, m), trials, rng))
    if m_cap >= 2:
        results.extend(check_one_to_two())
    failed = [r for r in results if not r.passed]
    logger.info("oracle suite up to M=%d: %d checks, %d failed", m_cap, len(results), len(failed))
    for result in failed:
        logger.warning("check %s failed for N=%d, M=%d: %.3e",
                       result.check, result.n_inputs, result.m_outputs, result.deviation)
    return results


def raise_on_failure(results: List[CheckResult]):
    for result in results:
        if not result.passed:
            raise VerificationFailure(result.n_inputs, result.m_outputs, result.check, result.deviation)

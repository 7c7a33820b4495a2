import itertools

import numpy as np
import pytest

from clone_entanglement.brute_force_oracle import full_output_state, partial_trace
from clone_entanglement.cloner_core import CloneSpec
from clone_entanglement.common import ClonerDomainError, VerificationFailure
from clone_entanglement.reduced_states import clone_ancilla_state, three_clone_density_matrix, three_clone_state
from clone_entanglement.verification import (
    MAX_ORACLE_M, CheckResult, check_one_to_two, check_spec, raise_on_failure, run_oracle_suite,
)


def test_oracle_suite_passes_up_to_the_size_cap():
    results = run_oracle_suite(MAX_ORACLE_M, trials=100)
    failed = [r for r in results if not r.passed]
    assert not failed, failed
    checks = {r.check for r in results}
    assert {"schmidt_spectrum", "two_clone", "clone_ancilla", "three_clone", "ppt_sign", "universality",
            "pair_symmetry", "clone_ancilla_symmetry", "triple_symmetry",
            "one_to_two_state", "three_tangle", "tangle_sum"} <= checks
    specs = {(r.n_inputs, r.m_outputs) for r in results}
    assert specs == {(n, m) for m in range(1, MAX_ORACLE_M + 1) for n in range(1, m + 1)}


def test_symmetry_checks_run_for_every_spec_with_enough_clones(rng):
    for m in range(2, 5):
        for n in range(1, m + 1):
            checks = {r.check for r in check_spec(CloneSpec(n, m), trials=1, rng=rng)}
            assert "clone_ancilla_symmetry" in checks
            assert ("triple_symmetry" in checks) is (m >= 3)


def test_any_clone_with_any_ancilla_qubit_matches_the_first_pair():
    spec = CloneSpec(2, 5)
    state = full_output_state(spec)
    expected = clone_ancilla_state(spec).to_matrix()
    for pair in itertools.product(range(5), range(5, 9)):
        np.testing.assert_allclose(partial_trace(state, pair).entries, expected, atol=1e-12)


def test_any_three_clones_match_the_mixture():
    spec = CloneSpec(1, 5)
    state = full_output_state(spec)
    expected = three_clone_density_matrix(three_clone_state(spec))
    for clones in itertools.combinations(range(5), 3):
        np.testing.assert_allclose(partial_trace(state, clones).entries, expected, atol=1e-12)


def test_check_spec_skips_missing_subsystems(rng):
    checks = [r.check for r in check_spec(CloneSpec(1, 1), trials=3, rng=rng)]
    assert checks == ["schmidt_spectrum", "fidelity", "universality"]
    checks = [r.check for r in check_spec(CloneSpec(1, 2), trials=3, rng=rng)]
    assert "three_clone" not in checks and "clone_ancilla" in checks


def test_one_to_two_benchmark():
    results = check_one_to_two()
    assert [r.check for r in results] == ["one_to_two_state", "three_tangle", "tangle_sum"]
    assert all(r.passed for r in results)


def test_suite_is_reproducible():
    first = [r.deviation for r in run_oracle_suite(2, trials=5)]
    second = [r.deviation for r in run_oracle_suite(2, trials=5)]
    assert first == second


@pytest.mark.parametrize('m_cap', [0, MAX_ORACLE_M + 1])
def test_suite_rejects_out_of_range_cap(m_cap):
    with pytest.raises(ClonerDomainError, match="m_cap"):
        run_oracle_suite(m_cap)


def test_raise_on_failure_names_the_check():
    results = [CheckResult(2, 4, "fidelity", 0.0, 1e-12), CheckResult(2, 4, "two_clone", 1e-6, 1e-12)]
    with pytest.raises(VerificationFailure, match="'two_clone' failed for N=2, M=4") as failure:
        raise_on_failure(results)
    assert failure.value.check == "two_clone"
    raise_on_failure(results[:1])

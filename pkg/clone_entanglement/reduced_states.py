"""
Reduced density matrices of the cloner output.

Two-qubit reductions have the X shape

    a 0 0 0
    0 b c 0
    0 c d 0
    0 0 0 e

in the basis given by basis_labels. Two clones use {00, 01, 10, 11}; one clone
with one ancilla qubit uses {01, 00, 11, 10}, which puts the clone-ancilla
coherence between |00> and |11>. By permutation symmetry the first clones and
the first ancilla qubit stand for any choice.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from clone_entanglement.cloner_core import CloneSpec, alpha_sq, binomial, falling_factorial
from clone_entanglement.common import ClonerDomainError, StateValidationError
from clone_entanglement.exact import QuadraticSurd, Rational


logger = logging.getLogger(__name__)

CLONE_PAIR_BASIS = ("00", "01", "10", "11")
CLONE_ANCILLA_BASIS = ("01", "00", "11", "10")

THREE_QUBIT_LABELS = tuple(format(i, "03b") for i in range(8))

_NORM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class XFormTwoQubitState:
    basis_labels: Tuple[str, str, str, str]
    a: Rational
    b: Rational
    c: QuadraticSurd
    d: Rational
    e: Rational

    def __post_init__(self):
        if sorted(self.basis_labels) != list(CLONE_PAIR_BASIS):
            raise StateValidationError(f"basis labels must permute {CLONE_PAIR_BASIS}: {self.basis_labels}")
        if self.a + self.b + self.d + self.e != 1:
            raise StateValidationError("X-form diagonal must sum to 1")
        if min(self.a, self.b, self.d, self.e) < 0:
            raise StateValidationError("X-form diagonal entries must be non-negative")
        if self.c.sign() < 0:
            raise StateValidationError("X-form coherence must be non-negative")
        if self.c.compare_square(self.b * self.d) > 0:
            raise StateValidationError("X-form state is not positive: c^2 > b*d")

    def to_matrix(self) -> np.ndarray:
        """Dense 4x4 matrix in the computational basis |00>, |01>, |10>, |11>."""
        index = [int(label, 2) for label in self.basis_labels]
        diagonal = (self.a, self.b, self.d, self.e)
        matrix = np.zeros((4, 4))
        for position, value in enumerate(diagonal):
            matrix[index[position], index[position]] = float(value)
        matrix[index[1], index[2]] = matrix[index[2], index[1]] = float(self.c)
        return matrix


@dataclass(frozen=True)
class ThreeCloneMixture:
    """p0 |000><000| + p1 P_W(one excitation) + p2 P_W(two excitations) + p3 |111><111|."""
    p0: Rational
    p1: Rational
    p2: Rational
    p3: Rational

    def __post_init__(self):
        if min(self.weights) < 0 or sum(self.weights) != 1:
            raise StateValidationError(f"mixture weights must be non-negative and sum to 1: {self.weights}")

    @property
    def weights(self) -> Tuple[Rational, Rational, Rational, Rational]:
        return (self.p0, self.p1, self.p2, self.p3)


@dataclass(frozen=True, eq=False)
class PureThreeQubitState:
    """Eight amplitudes indexed by 000..111, qubit 0 leftmost."""
    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amplitudes.shape != (8,):
            raise StateValidationError(f"a three-qubit state needs 8 amplitudes, got {amplitudes.size}")
        if abs(np.vdot(amplitudes, amplitudes).real - 1.0) > _NORM_TOLERANCE:
            raise StateValidationError("three-qubit state is not normalized")
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def from_labels(cls, amplitudes_by_label: dict) -> "PureThreeQubitState":
        amplitudes = np.zeros(8, dtype=complex)
        for label, amplitude in amplitudes_by_label.items():
            amplitudes[int(label, 2)] = amplitude
        return cls(amplitudes)

    @classmethod
    def ghz(cls) -> "PureThreeQubitState":
        return cls.from_labels({"000": 1 / np.sqrt(2), "111": 1 / np.sqrt(2)})

    @classmethod
    def w(cls) -> "PureThreeQubitState":
        return cls.from_labels({label: 1 / np.sqrt(3) for label in ("001", "010", "100")})

    def amplitude(self, label: str) -> complex:
        return self.amplitudes[int(label, 2)]


def _require_clones(spec: CloneSpec, count: int):
    if spec.m_outputs < count:
        raise ClonerDomainError(f"{spec} has {spec.m_outputs} clone(s); this reduction needs M >= {count}")


def _weights(spec: CloneSpec):
    return [alpha_sq(spec, j) for j in range(spec.extra_copies + 1)]


def two_clone_state(spec: CloneSpec) -> XFormTwoQubitState:
    """Reduced state of two clones; b = c = d by symmetry of the clone space."""
    _require_clones(spec, 2)
    m = spec.m_outputs
    pairs = m * (m - 1)
    a = c = e = Rational(0)
    for j, w in enumerate(_weights(spec)):
        a += w * Rational((m - j) * (m - j - 1), pairs)
        c += w * Rational(j * (m - j), pairs)
        e += w * Rational(j * (j - 1), pairs)
    return XFormTwoQubitState(CLONE_PAIR_BASIS, a, c, QuadraticSurd.from_rational(c), c, e)


def clone_ancilla_state(spec: CloneSpec) -> XFormTwoQubitState:
    """Reduced state of the first clone and the first ancilla qubit.

    The diagonal is rational. The coherence between |00> and |11> couples the
    Schmidt terms j and j+1 and carries sqrt((M-j-1)/(M-N-j)), which is
    rational for N = 1 only.
    """
    _require_clones(spec, 2)
    n, m = spec.n_inputs, spec.m_outputs
    pairs = m * (m - 1)
    weights = _weights(spec)
    p00 = p01 = p10 = p11 = Rational(0)
    for j, w in enumerate(weights):
        p00 += w * Rational((m - j) * (m - 1 - j), pairs)
        p01 += w * Rational((m - j) * j, pairs)
        p10 += w * Rational(j * (m - 1 - j), pairs)
        p11 += w * Rational(j * j, pairs)
    prefactor = Rational(n + 1, (m + 1) * falling_factorial(m, n) * pairs)
    coherence = QuadraticSurd.sum(
        QuadraticSurd.from_sqrt(prefactor * (j + 1) * falling_factorial(m - j, n + 1), Rational(m - j - 1, m - n - j))
        for j in range(spec.extra_copies)
    )
    return XFormTwoQubitState(CLONE_ANCILLA_BASIS, a=p01, b=p00, c=coherence, d=p11, e=p10)


def three_clone_state(spec: CloneSpec) -> ThreeCloneMixture:
    """Reduced state of three clones as a mixture of excitation-number projectors.

    Out-of-range binomials vanish, so every sum runs over all j.
    """
    _require_clones(spec, 3)
    m = spec.m_outputs
    sums = [Rational(0)] * 4
    for j, w in enumerate(_weights(spec)):
        total = binomial(m, j)
        for k in range(4):
            sums[k] += w * Rational(binomial(m - 3, j - k), total)
    # the W projectors carry multiplicity 3
    return ThreeCloneMixture(sums[0], 3 * sums[1], 3 * sums[2], sums[3])


def single_clone_fidelity(spec: CloneSpec) -> Rational:
    """<0|rho|0> for a single clone; equals a + c of the two-clone state."""
    m = spec.m_outputs
    return sum((w * Rational(m - j, m) for j, w in enumerate(_weights(spec))), Rational(0))


def one_to_two_pure_state() -> PureThreeQubitState:
    """Full 1 -> 2 output: qubit 0 is the original, qubit 1 the clone, qubit 2 the ancilla."""
    return PureThreeQubitState.from_labels({
        "000": np.sqrt(2 / 3),
        "011": np.sqrt(1 / 6),
        "101": np.sqrt(1 / 6),
    })


def three_clone_density_matrix(mix: ThreeCloneMixture) -> np.ndarray:
    one = np.zeros(8)
    two = np.zeros(8)
    for index, label in enumerate(THREE_QUBIT_LABELS):
        weight = label.count("1")
        if weight == 1:
            one[index] = 1 / np.sqrt(3)
        elif weight == 2:
            two[index] = 1 / np.sqrt(3)
    rho = np.zeros((8, 8))
    rho[0, 0] = float(mix.p0)
    rho[7, 7] = float(mix.p3)
    rho += float(mix.p1) * np.outer(one, one) + float(mix.p2) * np.outer(two, two)
    return rho


def closed_form_two_clone_state(spec: CloneSpec) -> Optional[XFormTwoQubitState]:
    """Closed forms for N = 1, N = 2 and N = M - 2; None elsewhere."""
    n, m = spec.n_inputs, spec.m_outputs
    if m < 2:
        return None
    if n == 1:
        a, c, e = Rational(3 * m + 2, 6 * m), Rational(1, 6), Rational(m - 2, 6 * m)
    elif n == 2:
        pairs = m * (m - 1)
        a = Rational(3 * m * m - 2, 5 * pairs)
        c = Rational(3 * m * m - 5 * m - 2, 20 * pairs)
        e = Rational(m * m - 5 * m + 6, 10 * pairs)
    elif n == m - 2:
        scale = m * m * (m * m - 1)
        a = Rational(m ** 4 - 5 * m * m + 8, scale)
        c = Rational(2 * (m * m - 3), scale)
        e = Rational(4, scale)
    else:
        return None
    return XFormTwoQubitState(CLONE_PAIR_BASIS, a, c, QuadraticSurd.from_rational(c), c, e)


def closed_form_clone_ancilla_state(spec: CloneSpec) -> Optional[XFormTwoQubitState]:
    m = spec.m_outputs
    if spec.n_inputs != 1 or m < 2:
        return None
    return XFormTwoQubitState(
        CLONE_ANCILLA_BASIS,
        a=Rational(1, 6),
        b=Rational(3 * m + 2, 6 * m),
        c=QuadraticSurd.from_rational(Rational(m + 2, 6 * m)),
        d=Rational(1, 6),
        e=Rational(m - 2, 6 * m),
    )


def closed_form_three_clone_state(spec: CloneSpec) -> Optional[ThreeCloneMixture]:
    m = spec.m_outputs
    if spec.n_inputs != 1 or m < 3:
        return None
    return ThreeCloneMixture(
        Rational(4 * m + 3, 10 * m),
        Rational(3 * m + 1, 10 * m),
        Rational(2 * m - 1, 10 * m),
        Rational(m - 3, 10 * m),
    )

"""Two-site chain in a truncated number basis.

H = (n_0 + 1/2) + (n_1 + 1/2) - alpha q_0 q_1, the N = 2 periodic chain, with
q = (a + a^dag)/sqrt(2) and p = (a - a^dag)/(i sqrt(2)).
"""

import logging

import numpy as np
from scipy.linalg import eigh
from scipy.special import gammaln

from domain.shared import InvalidArgumentException, NumericalFailureException
from domain.chain import mode_sums
from domain.gaussian import CovarianceMatrix
from .value_objects import FockState

logger = logging.getLogger(__name__)

MIN_CUTOFF = 10
DEFAULT_CUTOFF = 25
TOP_LEVEL_TOLERANCE = 1e-6


def _check_cutoff(cutoff: int) -> int:
    if isinstance(cutoff, bool) or int(cutoff) != cutoff or cutoff < MIN_CUTOFF:
        raise InvalidArgumentException("cutoff", f"cutoff must be an integer >= {MIN_CUTOFF}, got {cutoff!r}")
    return int(cutoff)


def _ladder(cutoff: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, cutoff)), k=1)


def _quadratures(cutoff: int):
    a = _ladder(cutoff)
    q = (a + a.T) / np.sqrt(2.0)
    p = (a - a.T) / (1j * np.sqrt(2.0))
    return q, p


def fock_ground_state(alpha: float, cutoff: int = DEFAULT_CUTOFF) -> FockState:
    cutoff = _check_cutoff(cutoff)
    if not 0.0 <= alpha < 1.0:
        raise InvalidArgumentException("alpha", f"alpha must lie in [0, 1), got {alpha!r}")

    identity = np.eye(cutoff)
    number = np.diag(np.arange(cutoff) + 0.5)
    q, _ = _quadratures(cutoff)
    hamiltonian = np.kron(number, identity) + np.kron(identity, number) - alpha * np.kron(q, q)

    energies, vectors = eigh(hamiltonian, subset_by_index=[0, 0])
    psi = vectors[:, 0]
    # fix the global phase so the state is reproducible
    psi = psi * np.sign(psi[np.argmax(np.abs(psi))])
    state = FockState(psi.reshape(cutoff, cutoff), energy=energies[0])

    population = state.top_level_population()
    if population > TOP_LEVEL_TOLERANCE:
        raise NumericalFailureException(
            "fock_ground_state",
            f"cutoff {cutoff} too small for alpha={alpha}: top-level population {population:.2e}",
        )
    logger.debug(f"Fock ground energy {energies[0]:.12g} at cutoff {cutoff}")
    return state


def fock_log_negativity(state: FockState) -> float:
    """log2 of the trace norm of the density matrix transposed on the second mode"""
    c = state.cutoff
    psi = state.amplitudes
    rho = np.einsum("ij,kl->ijkl", psi, psi.conj())
    transposed = rho.transpose(0, 3, 2, 1).reshape(c * c, c * c)
    eigenvalues = np.linalg.eigvalsh(transposed)
    trace_norm = float(np.sum(np.abs(eigenvalues)))
    return max(0.0, float(np.log2(trace_norm)))


def fock_vacuum(cutoff: int = DEFAULT_CUTOFF) -> FockState:
    cutoff = _check_cutoff(cutoff)
    amplitudes = np.zeros((cutoff, cutoff), dtype=complex)
    amplitudes[0, 0] = 1.0
    return FockState(amplitudes)


def _coherent(amplitude: complex, cutoff: int) -> np.ndarray:
    n = np.arange(cutoff)
    if amplitude == 0:
        return (n == 0).astype(complex)
    log_weights = n * np.log(np.abs(amplitude)) - 0.5 * gammaln(n + 1) - 0.5 * np.abs(amplitude) ** 2
    return np.exp(log_weights) * np.exp(1j * n * np.angle(amplitude))


def fock_coherent_product(first: complex, second: complex, cutoff: int = DEFAULT_CUTOFF) -> FockState:
    """|first>|second>, renormalised after truncation"""
    cutoff = _check_cutoff(cutoff)
    amplitudes = np.outer(_coherent(first, cutoff), _coherent(second, cutoff))
    lost = 1.0 - float(np.sum(np.abs(amplitudes) ** 2))
    if lost > TOP_LEVEL_TOLERANCE:
        raise NumericalFailureException(
            "fock_coherent_product", f"cutoff {cutoff} truncates {lost:.2e} of the state"
        )
    return FockState(amplitudes / np.linalg.norm(amplitudes))


def fock_covariance(state: FockState) -> CovarianceMatrix:
    """Symmetrised second moments in (q0, p0, q1, p1) order"""
    c = state.cutoff
    identity = np.eye(c)
    q, p = _quadratures(c)
    operators = [np.kron(q, identity), np.kron(p, identity), np.kron(identity, q), np.kron(identity, p)]

    psi = state.vector
    applied = np.array([op @ psi for op in operators])
    means = np.real(applied @ psi.conj())
    second = np.real(applied.conj() @ applied.T)
    entries = 0.5 * (second + second.T) - np.outer(means, means)
    return CovarianceMatrix(entries)


def two_site_covariance(alpha: float) -> CovarianceMatrix:
    """Gaussian ground state of the N = 2 chain from the mode sums"""
    g, h = mode_sums(2, alpha)
    distance = np.array([[0, 1], [1, 0]])
    return CovarianceMatrix.from_blocks(g[distance], h[distance])

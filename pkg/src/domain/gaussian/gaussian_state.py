"""Covariance-matrix algebra for Gaussian states.

All routines work in the interleaved ordering (q0, p0, q1, p1, ...) with hbar = 1, so a
pure state has every symplectic eigenvalue equal to 1/2. Logarithmic negativity is in
bits; entropies are in nats.
"""

import logging
from typing import Sequence, Union

import numpy as np
from scipy.special import xlogy

from domain.shared import InvalidArgumentException, NumericalFailureException
from .value_objects import CovarianceMatrix, SymplecticSpectrum, mode_indices

logger = logging.getLogger(__name__)

NEGATIVE_EIGENVALUE_TOLERANCE = 1e-9
UNPHYSICAL_TOLERANCE = 1e-6
ENTROPY_SINGULARITY_CUTOFF = 1e-12

CovarianceLike = Union[CovarianceMatrix, np.ndarray]

_J = np.array([[0.0, 1.0], [-1.0, 0.0]])


def symplectic_form(n_modes: int) -> np.ndarray:
    """Block-diagonal Omega with 2x2 blocks J = ((0, 1), (-1, 0))"""
    return np.kron(np.eye(n_modes), _J)


def as_covariance(V: CovarianceLike) -> CovarianceMatrix:
    if isinstance(V, CovarianceMatrix):
        return V
    return CovarianceMatrix(V)


def _check_modes(V: CovarianceMatrix, modes: Sequence[int], name: str, allow_empty: bool = False) -> list:
    modes = [int(m) for m in modes]
    if not modes and not allow_empty:
        raise InvalidArgumentException(name, f"{name} cannot be empty")
    if len(set(modes)) != len(modes):
        raise InvalidArgumentException(name, f"{name} contains duplicate modes: {modes}")
    for m in modes:
        if not 0 <= m < V.n_modes:
            raise InvalidArgumentException(
                name, f"Mode {m} out of range 0..{V.n_modes - 1}"
            )
    return modes


def symplectic_eigenvalues(V: CovarianceLike) -> SymplecticSpectrum:
    """Symplectic spectrum from the eigenvalues of -(Omega V)^2.

    Each nu^2 appears twice in that spectrum; the sorted list is paired up and the
    pair averaged.
    """
    V = as_covariance(V)
    omega_v = symplectic_form(V.n_modes) @ V.entries
    squared = -(omega_v @ omega_v)
    eigenvalues = np.linalg.eigvals(squared).real

    lowest = float(eigenvalues.min())
    if lowest < -NEGATIVE_EIGENVALUE_TOLERANCE:
        raise NumericalFailureException(
            "symplectic_eigenvalues",
            f"-(Omega V)^2 has eigenvalue {lowest:.3e} below -{NEGATIVE_EIGENVALUE_TOLERANCE}",
        )

    nu = np.sqrt(np.sort(np.clip(eigenvalues, 0.0, None)))
    return SymplecticSpectrum(0.5 * (nu[0::2] + nu[1::2]))


def reduce(V: CovarianceLike, sites: Sequence[int]) -> CovarianceMatrix:
    """Marginal on ``sites``; the reduced modes are renumbered in the given order"""
    V = as_covariance(V)
    sites = _check_modes(V, sites, "sites")
    idx = mode_indices(sites)
    return CovarianceMatrix(V.entries[np.ix_(idx, idx)])


def partial_transpose(V: CovarianceLike, b_sites: Sequence[int]) -> CovarianceMatrix:
    """Flip the sign of the momenta of ``b_sites`` (Lambda V Lambda)"""
    V = as_covariance(V)
    b_sites = _check_modes(V, b_sites, "b_sites", allow_empty=True)
    signs = np.ones(2 * V.n_modes)
    for m in b_sites:
        signs[2 * m + 1] = -1.0
    return CovarianceMatrix(V.entries * signs[:, None] * signs[None, :])


def log_negativity(V: CovarianceLike, b_sites: Sequence[int]) -> float:
    """E_N = -sum_n min(0, log2(2 nu_n)) over the partially transposed spectrum.

    The sum runs over the modes of ``V`` as supplied; pass a reduced matrix to measure
    entanglement between two parts of a larger system.
    """
    spectrum = symplectic_eigenvalues(partial_transpose(V, b_sites))
    nu = np.maximum(spectrum.values, np.finfo(float).tiny)
    # + 0.0 turns a separable -0.0 into 0.0
    return float(-np.sum(np.minimum(0.0, np.log2(2.0 * nu)))) + 0.0


def entropy_function(nu) -> np.ndarray:
    """f(x) = (x + 1/2) ln(x + 1/2) - (x - 1/2) ln(x - 1/2), with f(1/2) = 0"""
    x = np.maximum(np.asarray(nu, dtype=float), 0.5)
    upper = xlogy(x + 0.5, x + 0.5)
    excess = x - 0.5
    lower = np.where(excess < ENTROPY_SINGULARITY_CUTOFF, 0.0, xlogy(excess, excess))
    return upper - lower


def von_neumann_entropy(V: CovarianceLike) -> float:
    spectrum = symplectic_eigenvalues(V)
    if spectrum.minimum < 0.5 - UNPHYSICAL_TOLERANCE:
        raise NumericalFailureException(
            "von_neumann_entropy",
            f"Unphysical state: symplectic eigenvalue {spectrum.minimum:.6g} < 1/2",
        )
    return float(np.sum(entropy_function(spectrum.values)))


def mutual_information(V: CovarianceLike, a_sites: Sequence[int], b_sites: Sequence[int]) -> float:
    """S(A) + S(B) - S(A+B)"""
    V = as_covariance(V)
    a_sites = _check_modes(V, a_sites, "a_sites")
    b_sites = _check_modes(V, b_sites, "b_sites")
    overlap = set(a_sites) & set(b_sites)
    if overlap:
        raise InvalidArgumentException(
            "b_sites", f"Subsystems overlap on modes {sorted(overlap)}"
        )

    s_a = von_neumann_entropy(reduce(V, a_sites))
    s_b = von_neumann_entropy(reduce(V, b_sites))
    s_ab = von_neumann_entropy(reduce(V, a_sites + b_sites))
    logger.debug(f"S(A)={s_a:.6g} S(B)={s_b:.6g} S(AB)={s_ab:.6g}")
    return s_a + s_b - s_ab

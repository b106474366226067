"""Covariance matrix value object"""

from typing import Sequence

import numpy as np

from domain.shared import ValueObject, InvalidArgumentException, frozen_array

SYMMETRY_TOLERANCE = 1e-12


def mode_indices(modes: Sequence[int]) -> np.ndarray:
    """Rows of the interleaved (q0, p0, q1, p1, ...) layout that belong to ``modes``"""
    modes = np.asarray(modes, dtype=int)
    return np.column_stack((2 * modes, 2 * modes + 1)).ravel()


class CovarianceMatrix(ValueObject):
    """Symmetric 2n x 2n second-moment matrix in interleaved (q, p) ordering.

    Physicality (symplectic eigenvalues >= 1/2) is not enforced here; partially
    transposed matrices are legitimate values of this type.
    """

    def __init__(self, entries):
        entries = np.asarray(entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise InvalidArgumentException("entries", "Covariance matrix must be square")
        if entries.shape[0] == 0 or entries.shape[0] % 2:
            raise InvalidArgumentException(
                "entries", f"Covariance matrix dimension must be even and positive, got {entries.shape[0]}"
            )
        if not np.all(np.isfinite(entries)):
            raise InvalidArgumentException("entries", "Covariance matrix has non-finite entries")
        scale = max(1.0, float(np.max(np.abs(entries))))
        asymmetry = float(np.max(np.abs(entries - entries.T)))
        if asymmetry > SYMMETRY_TOLERANCE * scale:
            raise InvalidArgumentException(
                "entries", f"Covariance matrix is not symmetric (max deviation {asymmetry:.3e})"
            )
        self._entries = frozen_array(entries)

    @classmethod
    def vacuum(cls, n_modes: int, variance: float = 0.5) -> "CovarianceMatrix":
        return cls(variance * np.eye(2 * n_modes))

    @classmethod
    def from_blocks(cls, qq: np.ndarray, pp: np.ndarray) -> "CovarianceMatrix":
        """Assemble a state without q-p correlations from its qq and pp blocks"""
        qq = np.asarray(qq, dtype=float)
        pp = np.asarray(pp, dtype=float)
        if qq.shape != pp.shape:
            raise InvalidArgumentException("pp", "qq and pp blocks must have the same shape")
        n = qq.shape[0]
        entries = np.zeros((2 * n, 2 * n))
        entries[0::2, 0::2] = qq
        entries[1::2, 1::2] = pp
        return cls(entries)

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def n_modes(self) -> int:
        return self._entries.shape[0] // 2

    @property
    def qq_block(self) -> np.ndarray:
        return self._entries[0::2, 0::2]

    @property
    def pp_block(self) -> np.ndarray:
        return self._entries[1::2, 1::2]

    @property
    def qp_block(self) -> np.ndarray:
        return self._entries[0::2, 1::2]

    def block(self, row_modes: Sequence[int], col_modes: Sequence[int]) -> np.ndarray:
        return self._entries[np.ix_(mode_indices(row_modes), mode_indices(col_modes))]

    def _equality_components(self) -> tuple:
        return (self._entries,)

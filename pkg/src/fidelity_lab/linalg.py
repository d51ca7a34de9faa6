"""Dense complex linear algebra kernel.

Hermitian eigendecomposition, PSD matrix square root, SVD and
rank-revealing orthonormalization, wrapped with the validation and
clamping rules every higher-level module relies on. Matrices are plain
``numpy.ndarray`` values in complex128.
"""

from typing import NamedTuple

import numpy as np
import scipy.linalg

from .errors import ValidationError

HERMITICITY_TOL = 1e-10
PSD_TOL = 1e-10


class HermitianEig(NamedTuple):
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` are real and ascending; column k of ``eigenvectors``
    pairs with ``eigenvalues[k]``, and the eigenvector matrix is unitary.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


class Svd(NamedTuple):
    """Singular value decomposition A = U diag(s) V† with s descending."""

    singular_values: np.ndarray
    left: np.ndarray
    right: np.ndarray


def as_matrix(a) -> np.ndarray:
    """Coerce to a 2-D complex128 array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValidationError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValidationError("matrix entries must be finite (NaN/Inf found)")
    return m


def max_abs(a: np.ndarray) -> float:
    """Entrywise max-absolute-value norm; 0.0 for empty input."""
    return float(np.max(np.abs(a))) if a.size else 0.0


def hermitian_part(a) -> np.ndarray:
    """Symmetrize ``a`` to (A + A†)/2 after checking it is nearly Hermitian.

    Construction noise up to ``HERMITICITY_TOL`` in max-norm is absorbed;
    anything beyond is rejected rather than silently symmetrized.
    """
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValidationError(f"matrix is not square: shape {m.shape}")
    dev = max_abs(m - m.conj().T)
    if dev > HERMITICITY_TOL:
        raise ValidationError(
            f"matrix is not Hermitian: max |A - A†| = {dev:.3e} exceeds {HERMITICITY_TOL:.0e}"
        )
    return (m + m.conj().T) / 2


def hermitian_eig(a) -> HermitianEig:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Reconstruction V diag(w) V† matches the (symmetrized) input to
    1e-10 * max(1, max|A|).
    """
    h = hermitian_part(a)
    w, v = np.linalg.eigh(h)
    return HermitianEig(w, v)


def psd_tolerance(a: np.ndarray) -> float:
    """Negative-eigenvalue tolerance for a PSD check, scaled to the matrix."""
    return PSD_TOL * max(1.0, max_abs(a))


def psd_sqrt(a) -> np.ndarray:
    """Unique PSD square root of a PSD Hermitian matrix.

    Eigenvalues in [-tol, 0) are clamped to 0 before the root; an
    eigenvalue below -tol raises, carrying the offending value.
    """
    h = hermitian_part(a)
    w, v = np.linalg.eigh(h)
    tol = psd_tolerance(h)
    if w[0] < -tol:
        raise ValidationError(
            f"matrix is not PSD: eigenvalue {w[0]:.6e} below tolerance -{tol:.3e}"
        )
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


def svd(a) -> Svd:
    """SVD with singular values sorted descending (numpy contract)."""
    m = as_matrix(a)
    u, s, vh = np.linalg.svd(m)
    return Svd(s, u, vh.conj().T)


def qr_orthonormalize(a, rank_tol: float = 1e-10) -> np.ndarray:
    """Orthonormal basis for the column space of ``a`` via pivoted QR.

    The numerical rank is the number of pivoted-R diagonal entries above
    ``rank_tol`` relative to the largest one. Columns are phase-fixed so
    the largest-magnitude entry of each is real positive, which makes the
    output deterministic. Raises when every column is numerically zero.
    """
    m = as_matrix(a)
    if m.shape[1] == 0:
        raise ValidationError("matrix must have at least one column")
    q, r, _ = scipy.linalg.qr(m, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    if diag.size == 0 or diag[0] <= rank_tol:
        raise ValidationError("rank zero: all columns are numerically zero")
    rank = int(np.sum(diag > rank_tol * diag[0]))
    q = q[:, :rank].copy()
    for k in range(rank):
        lead = q[np.argmax(np.abs(q[:, k])), k]
        q[:, k] *= np.conj(lead) / abs(lead)
    return q

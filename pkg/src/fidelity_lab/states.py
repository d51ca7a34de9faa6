"""Validated quantum-state types, random-state generation, and the
boundary decomposition of a state into a singular state plus the
maximally mixed one.

A ``DensityMatrix`` wraps a Hermitian, PSD, unit-trace complex matrix and
is immutable after construction; all other vector/spectrum values are
plain numpy arrays.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ValidationError
from .linalg import as_matrix, hermitian_part, max_abs, psd_tolerance

TRACE_TOL = 1e-10
UNITARITY_TOL = 1e-12
PURE_NORM_TOL = 1e-12

# p below this is indistinguishable from the maximally mixed center; the
# reconstruction invariant then holds for any witness, so the canonical
# one is returned.
_CENTER_P_TOL = 1e-11


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated quantum state: Hermitian, PSD, trace one."""

    matrix: np.ndarray
    dim: int

    def __repr__(self):
        return f"DensityMatrix(dim={self.dim})"


class BoundaryDecomposition(NamedTuple):
    """Convex split rho = p * omega + (1 - p) * I/d with omega singular."""

    p: float
    omega: DensityMatrix


def density_from_matrix(m) -> DensityMatrix:
    """Validate ``m`` as a density matrix, naming the first violated check."""
    h = hermitian_part(m)
    w = np.linalg.eigvalsh(h)
    tol = psd_tolerance(h)
    if w[0] < -tol:
        raise ValidationError(
            f"matrix is not PSD: eigenvalue {w[0]:.6e} below tolerance -{tol:.3e}"
        )
    tr = float(np.trace(h).real)
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValidationError(f"trace must be 1 within {TRACE_TOL:.0e}: got {tr!r}")
    h.setflags(write=False)
    return DensityMatrix(h, h.shape[0])


def pure_state(v) -> np.ndarray:
    """Validate a unit vector and return it as a complex128 array."""
    vec = np.asarray(v, dtype=np.complex128)
    if vec.ndim != 1:
        raise ValidationError(f"pure state must be a 1-D vector, got ndim={vec.ndim}")
    if not np.all(np.isfinite(vec.real)) or not np.all(np.isfinite(vec.imag)):
        raise ValidationError("pure state entries must be finite")
    nrm = float(np.linalg.norm(vec))
    if abs(nrm - 1.0) > PURE_NORM_TOL:
        raise ValidationError(
            f"pure state must have unit norm within {PURE_NORM_TOL:.0e}: got {nrm!r}"
        )
    return vec


def projector(psi) -> DensityMatrix:
    """Rank-one state |psi><psi| from a unit vector."""
    v = pure_state(psi)
    return density_from_matrix(np.outer(v, v.conj()))


def maximally_mixed(d: int) -> DensityMatrix:
    """The state I/d at the center of the state space."""
    if d < 1:
        raise ValidationError(f"dimension must be >= 1: got {d}")
    return density_from_matrix(np.eye(d, dtype=np.complex128) / d)


def projection_state(s) -> DensityMatrix:
    """The normalized projection (1/m) Q Q† onto a subspace.

    ``s`` is a :class:`~fidelity_lab.subspaces.Subspace`; its frame columns
    are orthonormal, so the result has rank m and trace one.
    """
    q = s.frame
    return density_from_matrix(q @ q.conj().T / s.dim)


def spectrum(rho: DensityMatrix, order: str = "descending") -> np.ndarray:
    """Eigenvalues of a state, clamped into [0, 1] and sorted.

    Clamping does not renormalize, so the sum may sit at 1 +/- 1e-9.
    """
    if order not in ("ascending", "descending"):
        raise ValidationError(f"order must be 'ascending' or 'descending': got {order!r}")
    w = np.clip(np.linalg.eigvalsh(rho.matrix), 0.0, 1.0)
    return w if order == "ascending" else w[::-1]


def boundary_decompose(rho: DensityMatrix) -> BoundaryDecomposition:
    """Split a state into p * omega + (1 - p) * I/d with singular omega.

    p = 1 - d * lambda_min(rho), so lambda_min(rho) = (1 - p)/d: p grows
    toward 1 as the state approaches the singular boundary and hits 0 at
    the maximally mixed center, where the witness omega is arbitrary and a
    fixed canonical one is returned. omega is rebuilt from rho's eigenbasis
    with the minimal eigenvalue subtracted, which keeps it exactly singular
    and keeps the reconstruction within 1e-10 even for tiny p.
    """
    d = rho.dim
    if d == 1:
        raise ValidationError("no boundary in dimension 1")
    w, v = np.linalg.eigh(rho.matrix)
    w = np.clip(w, 0.0, 1.0)
    shifted = w - w[0]
    p = float(np.sum(shifted))
    if p <= _CENTER_P_TOL:
        omega = np.zeros((d, d), dtype=np.complex128)
        omega[: d - 1, : d - 1] = np.eye(d - 1) / (d - 1)
        return BoundaryDecomposition(0.0, density_from_matrix(omega))
    mu = shifted / p
    omega = density_from_matrix((v * mu) @ v.conj().T)
    return BoundaryDecomposition(min(p, 1.0), omega)


def random_density(d: int, rank: int, seed: int) -> DensityMatrix:
    """Wishart-normalized random state: G G† / Tr(G G†) for a d x rank
    standard complex Gaussian G. Deterministic for a given seed."""
    if not 1 <= rank <= d:
        raise ValidationError(f"rank must satisfy 1 <= rank <= {d}: got {rank}")
    rng = np.random.default_rng(seed)
    g = (rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))) / np.sqrt(2)
    m = g @ g.conj().T
    return density_from_matrix(m / np.trace(m).real)


def random_unitary(d: int, seed: int) -> np.ndarray:
    """Haar-distributed d x d unitary via QR of a complex Ginibre matrix.

    The R-diagonal phases are divided out, which is what makes the QR
    output Haar rather than merely unitary.
    """
    if d < 1:
        raise ValidationError(f"dimension must be >= 1: got {d}")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r)
    return q * (ph / np.abs(ph))


def assert_unitary(u, tol: float = 1e-10) -> np.ndarray:
    """Validate U†U = I within ``tol`` and return U as complex128."""
    m = as_matrix(u)
    if m.shape[0] != m.shape[1]:
        raise ValidationError(f"unitary must be square: shape {m.shape}")
    dev = max_abs(m.conj().T @ m - np.eye(m.shape[0]))
    if dev > tol:
        raise ValidationError(
            f"matrix is not unitary: max |U†U - I| = {dev:.3e} exceeds {tol:.0e}"
        )
    return m

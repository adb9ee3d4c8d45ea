"""Dense symmetric eigendecomposition with an explicit accuracy contract.

Cyclic Jacobi up to JACOBI_DIM_LIMIT, Householder + implicit-shift QL above.
Every solve is verified: when eigenvectors are requested, the per-pair
residual ||H v - lambda v||_2 and pairwise orthonormality must both come in
under tol * ||H||_F, otherwise a ConvergenceError is raised rather than
returning a silently degraded Spectrum.

Tolerances are relative to the Frobenius norm throughout: eigenvalues grow
like N^2 in this model, so absolute tolerances would break large-N tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import backend
from .hamiltonian import HermitianMatrix
from .hilbert import BlockBasis

JACOBI_DIM_LIMIT = 512
DEFAULT_TOL = 1e-12


class ConvergenceError(RuntimeError):
    """Eigensolver failed to converge or to meet the accuracy contract."""


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Sorted eigenvalues of one block, optionally with eigenvectors.

    eigenvalues are ascending; eigenvectors, when present, are orthonormal
    columns matching the eigenvalue order.  max_residual is the largest
    ||H v_k - lambda_k v_k||_2 and is None when vectors were not computed.
    """

    eigenvalues: np.ndarray
    eigenvectors: Optional[np.ndarray]
    max_residual: Optional[float]
    basis: Optional[BlockBasis]

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]


def eigh(
    matrix: HermitianMatrix,
    want_vectors: bool = False,
    tol: float = DEFAULT_TOL,
    max_rotations: Optional[int] = None,
) -> Spectrum:
    """Full spectrum of an exactly symmetric matrix, sorted ascending.

    tol is relative to ||H||_F.  max_rotations bounds the Jacobi path
    (default 64 * dim^2); exhausting it raises ConvergenceError, never a
    partial result.  Deterministic for identical input bits.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    dense = matrix.to_dense()
    n = dense.shape[0]
    if n < 1:
        raise ValueError("matrix must have dimension >= 1")
    if max_rotations is None:
        max_rotations = 64 * n * n
    fro = float(np.linalg.norm(dense))
    work = np.array(dense, dtype=np.float64, order="C", copy=True)
    kern = backend.kernels
    if n <= JACOBI_DIM_LIMIT:
        w, v, nrot, converged = kern.jacobi_eigh(work, want_vectors, max_rotations)
        if not converged:
            raise ConvergenceError(
                f"Jacobi sweep budget exhausted after {nrot} rotations "
                f"(limit {max_rotations}) on a dim-{n} block"
            )
    else:
        w, v, converged = kern.tridiag_eigh(work, want_vectors)
        if not converged:
            raise ConvergenceError(
                f"QL iteration failed to converge on a dim-{n} block"
            )
    w = np.asarray(w, dtype=np.float64)
    order = np.argsort(w, kind="stable")
    w = w[order]
    max_residual: Optional[float] = None
    vectors: Optional[np.ndarray] = None
    if want_vectors:
        vectors = np.asarray(v, dtype=np.float64)[:, order]
        residuals = np.linalg.norm(dense @ vectors - vectors * w, axis=0)
        max_residual = float(residuals.max())
        gram_defect = float(
            np.abs(vectors.T @ vectors - np.eye(n)).max()
        )
        bound = tol * fro if fro > 0.0 else tol
        if max_residual > bound or gram_defect > tol:
            raise ConvergenceError(
                f"accuracy contract violated: residual {max_residual:.3e} "
                f"(bound {bound:.3e}), orthonormality defect {gram_defect:.3e} "
                f"(bound {tol:.3e})"
            )
    return Spectrum(w, vectors, max_residual, matrix.basis)


def residual_report(matrix: HermitianMatrix, spectrum: Spectrum) -> np.ndarray:
    """Per-eigenpair residuals ||H v_k - lambda_k v_k||_2.

    Requires a spectrum computed with eigenvectors; the maximum equals
    spectrum.max_residual.
    """
    if spectrum.eigenvectors is None:
        raise ValueError("spectrum was computed without eigenvectors")
    dense = matrix.to_dense()
    v = spectrum.eigenvectors
    return np.linalg.norm(dense @ v - v * spectrum.eigenvalues, axis=0)

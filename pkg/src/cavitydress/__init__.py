"""Collective dressed-state spectra of N two-level atoms in a cavity.

Closed-form branch energies, exact diagonalization of conserved-excitation
blocks (full product space or Dicke subspace), staircase sweeps over the
atom number, and a CLI that serializes everything as CSV/JSON.
"""

from .backend import BACKEND
from .dressed import (
    DressedPair,
    asymptotic_lower,
    asymptotic_upper,
    closed_form_pair,
    closed_form_pair_smooth,
    per_atom_frequency,
    stair_step,
)
from .eigensolve import ConvergenceError, Spectrum, eigh, residual_report
from .hamiltonian import (
    HermitianMatrix,
    ModelParams,
    apply_total_excitation,
    build,
    build_full,
    build_symmetric,
)
from .hilbert import (
    FULL,
    SYMMETRIC,
    BasisState,
    BlockBasis,
    BlockTooLargeError,
    SymState,
    block_dimension,
    enumerate_block,
)
from .sweep import (
    StaircaseSeries,
    VerifyReport,
    figure_dataset,
    staircase,
    verify,
    write_series,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BasisState",
    "BlockBasis",
    "BlockTooLargeError",
    "ConvergenceError",
    "DressedPair",
    "FULL",
    "HermitianMatrix",
    "ModelParams",
    "Spectrum",
    "StaircaseSeries",
    "SYMMETRIC",
    "SymState",
    "VerifyReport",
    "apply_total_excitation",
    "asymptotic_lower",
    "asymptotic_upper",
    "block_dimension",
    "build",
    "build_full",
    "build_symmetric",
    "closed_form_pair",
    "closed_form_pair_smooth",
    "eigh",
    "enumerate_block",
    "figure_dataset",
    "per_atom_frequency",
    "residual_report",
    "staircase",
    "stair_step",
    "verify",
    "write_series",
]

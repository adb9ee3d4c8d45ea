"""Assembly of the resonant RWA Hamiltonian with photon-assisted pair exchange.

Two terms act on each conserved-excitation block:

* the collective atom-field coupling  g * sum_i (sigma_i a^dag + h.c.), and
* the pair-correlation term  V = Omega_c * sum_{i != j} a^dag sigma_i sigma_j^dag a,

where sigma_i lowers atom i.  Since the photon operators in V commute with
the atomic ones, V = Omega_c * n_hat (x) sum_{i != j} sigma_i sigma_j^dag:
it moves one excitation from atom i to atom j, weighted by the photon count.

All matrix elements are real in the canonical basis (g, Omega_c real, RWA
form), so matrices are stored as float64; complex input is a non-goal.
The full space is assembled sparse (coordinate list -> compressed rows),
the tiny symmetric space dense.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Tuple, Union

import numpy as np
import scipy.sparse as sparse

from .hilbert import (
    FULL,
    SYMMETRIC,
    BasisState,
    BlockBasis,
    enumerate_block,
)

# The pair sum in V runs over ordered pairs (i, j), i != j, which makes V
# Hermitian term by term.  "unordered" counts each {i, j} once, i.e. halves
# every V element, exposing the factor-2 reading of the pair sum.
PAIR_CONVENTIONS = ("ordered", "unordered")


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of one block: N atoms, coupling g, correlation
    strength omega_c (may be negative or zero) and the block label M.

    g is the unit of energy throughout; omega_c and all eigenvalues are
    reported in units of g.
    """

    n_atoms: int
    g: float = 1.0
    omega_c: float = 0.0
    block: int = 0
    pair_convention: str = "ordered"

    def __post_init__(self):
        if self.n_atoms < 1:
            raise ValueError(f"need at least one atom, got {self.n_atoms}")
        if self.block < 0:
            raise ValueError(f"block label must be >= 0, got {self.block}")
        for name in ("g", "omega_c"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
        if self.pair_convention not in PAIR_CONVENTIONS:
            raise ValueError(
                f"pair_convention must be one of {PAIR_CONVENTIONS}, "
                f"got {self.pair_convention!r}"
            )

    @property
    def pair_scale(self) -> float:
        return 1.0 if self.pair_convention == "ordered" else 0.5


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Real symmetric operator on one block, dense or CSR, with provenance."""

    basis: BlockBasis
    data: Union[np.ndarray, sparse.csr_matrix]

    @property
    def dim(self) -> int:
        return self.basis.dim

    def to_dense(self) -> np.ndarray:
        if sparse.issparse(self.data):
            return self.data.toarray()
        return np.array(self.data, dtype=np.float64)

    def entry(self, row: int, col: int) -> float:
        return float(self.data[row, col])

    def fro_norm(self) -> float:
        if sparse.issparse(self.data):
            return float(np.sqrt(np.sum(self.data.data**2)))
        return float(np.linalg.norm(self.data))

    def triplets(self) -> Iterator[Tuple[int, int, float]]:
        """Nonzero entries as (row, col, value), sorted by (row, col)."""
        if sparse.issparse(self.data):
            coo = self.data.tocoo()
            order = np.lexsort((coo.col, coo.row))
            for idx in order:
                yield int(coo.row[idx]), int(coo.col[idx]), float(coo.data[idx])
        else:
            rows, cols = np.nonzero(self.data)
            for r, c in zip(rows, cols):
                yield int(r), int(c), float(self.data[r, c])


def build_full(params: ModelParams) -> HermitianMatrix:
    """Assemble the Hamiltonian on the full product-space block (N, M).

    Second-quantized rules, applied column by column:
    a^dag|n> = sqrt(n+1)|n+1>, a|n> = sqrt(n)|n-1>, sigma_i lowers atom i.
    Each matrix element is emitted once per direction with the identical
    float value, so the result is symmetric exactly, not approximately.
    """
    basis = enumerate_block(FULL, params.n_atoms, params.block)
    g = params.g
    v_scale = params.omega_c * params.pair_scale
    rows: list = []
    cols: list = []
    vals: list = []
    for col, state in enumerate(basis):
        config = state.atom_config
        n = state.photons
        for i in range(params.n_atoms):
            if config >> i & 1:
                # g sigma_i a^dag: de-excite atom i, create a photon
                target = BasisState(config & ~(1 << i), n + 1)
                rows.append(basis.index_of(target))
                cols.append(col)
                vals.append(g * math.sqrt(n + 1))
            elif n > 0:
                # g sigma_i^dag a: excite atom i, absorb a photon
                target = BasisState(config | 1 << i, n - 1)
                rows.append(basis.index_of(target))
                cols.append(col)
                vals.append(g * math.sqrt(n))
        if n > 0 and v_scale != 0.0:
            # V moves one excitation i -> j at fixed photon number, weight
            # Omega_c * n per ordered pair (excited i, ground j).
            excited = [i for i in range(params.n_atoms) if config >> i & 1]
            ground = [j for j in range(params.n_atoms) if not config >> j & 1]
            for i in excited:
                for j in ground:
                    target = BasisState(config & ~(1 << i) | 1 << j, n)
                    rows.append(basis.index_of(target))
                    cols.append(col)
                    vals.append(v_scale * n)
    matrix = sparse.csr_matrix(
        (np.array(vals, dtype=np.float64), (rows, cols)),
        shape=(basis.dim, basis.dim),
    )
    return HermitianMatrix(basis, matrix)


def build_symmetric(params: ModelParams) -> HermitianMatrix:
    """Assemble the Hamiltonian on the Dicke-subspace block (N, M).

    On |k; n>: the coupling term connects |k; n> and |k+1; n-1> with element
    g*sqrt(n)*sqrt((k+1)(N-k)); V is diagonal with element
    Omega_c * n * k * (N - k), the Dicke-state diagonal of the pair sum
    (cross-checked against projecting build_full in the test suite).
    """
    basis = enumerate_block(SYMMETRIC, params.n_atoms, params.block)
    n_atoms = params.n_atoms
    v_scale = params.omega_c * params.pair_scale
    h = np.zeros((basis.dim, basis.dim), dtype=np.float64)
    for idx, state in enumerate(basis):
        k = state.excited_count
        n = state.photons
        h[idx, idx] = v_scale * n * k * (n_atoms - k)
        if idx + 1 < basis.dim:
            # neighbor is |k+1; n-1>; one sqrt of the integer product keeps
            # perfect squares exact
            element = params.g * math.sqrt(n * (k + 1) * (n_atoms - k))
            h[idx, idx + 1] = element
            h[idx + 1, idx] = element
    return HermitianMatrix(basis, h)


def build(params: ModelParams, space_kind: str) -> HermitianMatrix:
    if space_kind == FULL:
        return build_full(params)
    if space_kind == SYMMETRIC:
        return build_symmetric(params)
    raise ValueError(f"unknown space kind {space_kind!r}")


def apply_total_excitation(basis: BlockBasis) -> np.ndarray:
    """Diagonal of a^dag a + sum_i sigma_i^dag sigma_i in the block basis.

    Conservation makes this M * identity on every block; returned as the
    diagonal vector so tests can assert that directly.
    """
    return np.array([state.excitation() for state in basis], dtype=np.float64)

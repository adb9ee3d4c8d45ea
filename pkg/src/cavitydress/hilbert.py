"""Basis enumeration for N two-level atoms coupled to one cavity mode.

Both interaction terms of the model conserve the total excitation number
M = (photon count) + (number of excited atoms), so the Hilbert space splits
into finite blocks labelled by M and no Fock cutoff is ever needed.  This
module enumerates one block at a time, either in the full 2^N product space
or in the permutation-symmetric (Dicke) subspace.

Ordering inside a block is deterministic: ascending number of excited atoms,
then ascending atom configuration read as an integer.  Matrix fixtures in the
test suite rely on this byte-stable ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

FULL = "full"
SYMMETRIC = "symmetric"

# Largest block dimension representable as a signed 64-bit index.  Larger
# blocks are rejected up front instead of silently truncating.
MAX_BLOCK_DIM = 2**63 - 1


class BlockTooLargeError(ValueError):
    """Block dimension exceeds the platform index range."""


@dataclass(frozen=True)
class BasisState:
    """One product-basis ket: atom occupation bits plus a photon count.

    Bit i of ``atom_config`` set means atom i is excited; atom 0 is the
    leftmost letter in the ``|eg...;n>`` label convention.
    """

    atom_config: int
    photons: int

    def excitation(self) -> int:
        return self.atom_config.bit_count() + self.photons

    def label(self, n_atoms: int) -> str:
        letters = "".join(
            "e" if self.atom_config >> i & 1 else "g" for i in range(n_atoms)
        )
        return f"|{letters};{self.photons}>"


@dataclass(frozen=True)
class SymState:
    """Normalized Dicke state with ``excited_count`` excitations and a photon count."""

    excited_count: int
    photons: int

    def excitation(self) -> int:
        return self.excited_count + self.photons

    def label(self, n_atoms: int) -> str:
        return f"|k={self.excited_count};{self.photons}>"


State = Union[BasisState, SymState]


@dataclass(frozen=True, eq=False)
class BlockBasis:
    """All states of one conserved-excitation block, in canonical order."""

    space_kind: str
    n_atoms: int
    total_excitation: int
    states: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {state: i for i, state in enumerate(self.states)}
        )

    @property
    def dim(self) -> int:
        return len(self.states)

    def index_of(self, state: State) -> int:
        return self._index[state]

    def __len__(self) -> int:
        return self.dim

    def __iter__(self) -> Iterator[State]:
        return iter(self.states)


def _check_block_args(n_atoms: int, total_excitation: int) -> None:
    if n_atoms < 1:
        raise ValueError(f"need at least one atom, got n_atoms={n_atoms}")
    if total_excitation < 0:
        raise ValueError(f"total excitation must be >= 0, got {total_excitation}")


def _full_dim(n_atoms: int, total_excitation: int) -> int:
    # Incremental binomial sum with early abort, so absurd (N, M) fail fast
    # instead of looping over 10^9 terms.
    dim = 0
    term = 1  # C(N, 0)
    for k in range(min(total_excitation, n_atoms) + 1):
        if k > 0:
            term = term * (n_atoms - k + 1) // k
        dim += term
        if dim > MAX_BLOCK_DIM:
            raise BlockTooLargeError(
                f"block (full, N={n_atoms}, M={total_excitation}) exceeds "
                f"the 2^63-1 index range"
            )
    return dim


def block_dimension(space_kind: str, n_atoms: int, total_excitation: int) -> int:
    """Dimension of the (space_kind, N, M) block without materializing it.

    Full space: sum_k C(N, k) for k <= min(M, N).  Symmetric space:
    min(M, N) + 1.  Raises BlockTooLargeError past the index range.
    """
    _check_block_args(n_atoms, total_excitation)
    if space_kind == FULL:
        return _full_dim(n_atoms, total_excitation)
    if space_kind == SYMMETRIC:
        return min(total_excitation, n_atoms) + 1
    raise ValueError(f"unknown space kind {space_kind!r}")


def _configs_with_popcount(n_atoms: int, k: int) -> Iterator[int]:
    """All n_atoms-bit words with k bits set, in ascending integer order."""
    if k == 0:
        yield 0
        return
    limit = 1 << n_atoms
    config = (1 << k) - 1
    while config < limit:
        yield config
        # Gosper's hack: next-higher word with the same popcount.
        low = config & -config
        ripple = config + low
        config = ripple | ((config ^ ripple) // low) >> 2


def enumerate_block(space_kind: str, n_atoms: int, total_excitation: int) -> BlockBasis:
    """Enumerate every state with popcount + photons = M (or k + photons = M).

    The returned ordering is ascending in excited count, then ascending in
    atom configuration as an integer; index_of is the inverse bijection.
    """
    dim = block_dimension(space_kind, n_atoms, total_excitation)
    assert dim >= 1
    k_max = min(total_excitation, n_atoms)
    states: list = []
    if space_kind == FULL:
        for k in range(k_max + 1):
            photons = total_excitation - k
            states.extend(
                BasisState(config, photons)
                for config in _configs_with_popcount(n_atoms, k)
            )
    else:
        states.extend(
            SymState(k, total_excitation - k) for k in range(k_max + 1)
        )
    assert len(states) == dim
    return BlockBasis(space_kind, n_atoms, total_excitation, tuple(states))

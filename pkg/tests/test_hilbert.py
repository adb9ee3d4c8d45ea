import math

import pytest

from cavitydress.hilbert import (
    FULL,
    SYMMETRIC,
    BasisState,
    BlockTooLargeError,
    SymState,
    block_dimension,
    enumerate_block,
)


def test_full_block_2_2():
    basis = enumerate_block(FULL, 2, 2)
    assert basis.dim == 4  # C(2,0)+C(2,1)+C(2,2)
    assert [s.label(2) for s in basis] == ["|gg;2>", "|eg;1>", "|ge;1>", "|ee;0>"]


def test_symmetric_block_2_2():
    basis = enumerate_block(SYMMETRIC, 2, 2)
    assert basis.dim == 3  # min(M,N)+1
    assert list(basis) == [SymState(0, 2), SymState(1, 1), SymState(2, 0)]


def test_full_block_3_1():
    basis = enumerate_block(FULL, 3, 1)
    assert basis.dim == 4  # 1 + C(3,1)
    assert [s.label(3) for s in basis] == ["|ggg;1>", "|egg;0>", "|geg;0>", "|gge;0>"]


def test_block_dimension_examples():
    assert block_dimension(FULL, 4, 2) == 11  # 1 + 4 + 6
    assert block_dimension(SYMMETRIC, 10, 3) == 4
    assert block_dimension(FULL, 1, 1) == 2  # the JC pair |e;0>, |g;1>


@pytest.mark.parametrize("space", [FULL, SYMMETRIC])
@pytest.mark.parametrize("n_atoms,total", [(1, 0), (1, 3), (2, 2), (4, 2), (5, 7), (6, 6)])
def test_enumeration_invariants(space, n_atoms, total):
    basis = enumerate_block(space, n_atoms, total)
    assert basis.dim == block_dimension(space, n_atoms, total)
    for i, state in enumerate(basis):
        assert state.excitation() == total
        assert basis.index_of(state) == i
    # deterministic order: ascending excited count, then ascending config
    if space == FULL:
        keys = [(s.atom_config.bit_count(), s.atom_config) for s in basis]
    else:
        keys = [(s.excited_count, 0) for s in basis]
    assert keys == sorted(keys)


@pytest.mark.parametrize("n_atoms,total", [(1, 0), (3, 2), (6, 6), (8, 3)])
def test_full_dimension_binomial_identity(n_atoms, total):
    expected = sum(math.comb(n_atoms, k) for k in range(min(total, n_atoms) + 1))
    assert block_dimension(FULL, n_atoms, total) == expected
    assert block_dimension(SYMMETRIC, n_atoms, total) <= expected


def test_rejects_zero_atoms():
    with pytest.raises(ValueError):
        block_dimension(FULL, 0, 1)
    with pytest.raises(ValueError):
        enumerate_block(SYMMETRIC, 0, 0)


def test_rejects_negative_excitation():
    with pytest.raises(ValueError):
        block_dimension(FULL, 2, -1)


def test_overflow_is_reported_not_truncated():
    # C(10^9, 3) alone exceeds the 2^63-1 index range; the incremental sum
    # must abort quickly instead of iterating 10^9 binomials.
    with pytest.raises(BlockTooLargeError):
        block_dimension(FULL, 10**9, 10**9)
    with pytest.raises(BlockTooLargeError):
        enumerate_block(FULL, 10**9, 10**9)
    # symmetric blocks stay small for the same request
    assert block_dimension(SYMMETRIC, 10**9, 5) == 6


def test_unknown_space_kind():
    with pytest.raises(ValueError):
        block_dimension("dicke", 2, 1)


def test_basis_state_fields():
    s = BasisState(atom_config=0b101, photons=2)
    assert s.excitation() == 4
    assert s.label(3) == "|ege;2>"

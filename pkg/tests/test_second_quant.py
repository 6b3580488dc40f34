"""Tests for Fock bases, ladder operators and the (anti)commutation checks."""

import math
from itertools import combinations, product

import numpy as np
import pytest
import scipy.sparse as sp
from hypothesis import given, settings, strategies as st

from permion import (
    CapacityError,
    DimensionMismatchError,
    FockOperator,
    LadderKind,
    Limits,
    ModeError,
    OccupationString,
    Permutation,
    Statistics,
    Symmetry,
    boson_ladder,
    classify_symmetry,
    enumerate_group,
    fermion_ladder,
    fock_basis,
    fock_state,
    majorana_ops,
    permute_particles,
    sector_dimension,
    sign,
    slater_to_first_quantized,
    verify_car,
    verify_ccr,
    verify_generalized_car,
)
from permion.first_quant import inner_product
from permion.second_quant import (
    apply,
    dirac_ops,
    number_operator,
    sector_states,
    total_number_operator,
)


def fermions(*occupations):
    return OccupationString(tuple(occupations))


def unit_vector(size, i):
    v = np.zeros(size)
    v[i] = 1
    return v


def test_occupation_string_validation():
    """Test occupation bounds and printing."""
    with pytest.raises(ModeError):
        fermions(2, 0)
    with pytest.raises(ModeError):
        OccupationString((-1,), Statistics.BOSON)
    with pytest.raises(ModeError):
        OccupationString(())
    K = fermions(1, 0, 1)
    assert str(K) == "|101⟩"
    assert K[3] == 1
    assert K.particle_count == 2
    assert str(OccupationString((3, 0), Statistics.BOSON)) == "|30⟩"


def test_fock_basis_sizes_and_order():
    """Test 2^d fermionic and (M+1)^d bosonic bases with the vacuum first."""
    assert fock_basis(3).size == 8
    assert len(fock_basis(1, Statistics.BOSON, M=5)) == 6
    assert fock_basis(10).size == 1024
    assert fock_basis(2, Statistics.BOSON, M=2).size == 9
    basis = fock_basis(3)
    assert basis.index_of((0, 0, 0)) == 0
    assert basis.index_of(fermions(1, 0, 1)) == 5
    assert basis.states[1] == fermions(1, 0, 0)
    assert fock_basis(2, Statistics.BOSON, M=2).index_of((1, 2)) == 7


def test_fock_basis_errors():
    """Test invalid mode counts, truncations and lookups."""
    with pytest.raises(ModeError):
        fock_basis(0)
    with pytest.raises(ModeError):
        fock_basis(2, Statistics.BOSON, M=0)
    with pytest.raises(ModeError):
        fock_basis(1, Statistics.BOSON, M=1).index_of((2,))
    with pytest.raises(CapacityError) as exc_info:
        fock_basis(13, limits=Limits())
    assert exc_info.value.cap == "max_fermion_modes"


def test_sector_dimension():
    """Test C(d, N) fermionic and C(N+d-1, d-1) bosonic counts."""
    assert sector_dimension(4, 2) == 6
    assert sum(sector_dimension(3, N) for N in range(4)) == 8
    assert sector_dimension(2, 3, Statistics.BOSON) == 4
    assert sector_dimension(3, 0) == 1
    with pytest.raises(ModeError):
        sector_dimension(2, 3)


@pytest.mark.parametrize("d", range(1, 13))
def test_fermion_sectors_fill_the_fock_space(d):
    """Test Σ_N C(d, N) = 2^d against the size of the basis."""
    assert sum(sector_dimension(d, N) for N in range(d + 1)) == fock_basis(d).size == 2**d


@pytest.mark.parametrize("d,N", list(product(range(1, 5), range(7))))
def test_boson_sector_dimension_matches_enumeration(d, N):
    """Test C(N+d-1, d-1) against brute-force enumeration of occupations."""
    brute = sum(1 for occupations in product(range(N + 1), repeat=d) if sum(occupations) == N)
    assert sector_dimension(d, N, Statistics.BOSON) == brute
    assert len(sector_states(d, N, Statistics.BOSON)) == brute


def test_sector_states():
    """Test that the listed sector states match the counts."""
    states = sector_states(4, 2)
    assert len(states) == 6
    assert all(K.particle_count == 2 for K in states)
    bosons = sector_states(2, 3, Statistics.BOSON)
    assert [K.occupations for K in bosons] == [(3, 0), (2, 1), (1, 2), (0, 3)]


def test_fermion_ladder_on_vacuum():
    """Test a|vac⟩ = 0 and a†|vac⟩ = |1⟩."""
    a = fermion_ladder(1, 2, LadderKind.ANNIHILATE)
    create = fermion_ladder(1, 2)
    vacuum = unit_vector(4, 0)
    assert not apply(a, vacuum).any()
    assert list(apply(create, vacuum)) == [0, 1, 0, 0]
    assert a.is_exact
    with pytest.raises(ModeError):
        fermion_ladder(3, 2)


@pytest.mark.parametrize("d", range(1, 9))
def test_annihilators_kill_the_vacuum(d):
    """Test a_j|vac⟩ = 0 for every mode."""
    vacuum = unit_vector(2**d, 0)
    for j in range(1, d + 1):
        assert not apply(fermion_ladder(j, d, LadderKind.ANNIHILATE), vacuum).any()


def test_pauli_exclusion():
    """Test (a†_j)² = 0 for every mode."""
    for j in range(1, 4):
        create = fermion_ladder(j, 3).matrix
        assert (create @ create).nnz == 0


def test_creation_order_sign():
    """Test a†_2 a†_1|vac⟩ = -a†_1 a†_2|vac⟩."""
    K = fermions(1, 1)
    index, amplitude = fock_state(K, order=[2, 1])
    other_index, other_amplitude = fock_state(K, order=[1, 2])
    assert index == other_index == 3
    assert amplitude == -other_amplitude == -1


def test_fock_state_examples():
    """Test Jordan-Wigner signs of small creation strings."""
    assert fock_state(fermions(1, 0, 1)) == (5, 1)
    assert fock_state(fermions(1, 0, 1), order=[3, 1]) == (5, -1)
    assert fock_state(fermions(1, 0, 1), order=[1, 3]) == (5, 1)
    assert fock_state(fermions(0, 0)) == (0, 1)
    with pytest.raises(ModeError):
        fock_state(fermions(1, 0, 1), order=[1, 2])


def test_boson_fock_state():
    """Test a†a†|0⟩ = √2|2⟩."""
    index, amplitude = fock_state(OccupationString((2,), Statistics.BOSON))
    assert index == 2
    assert amplitude == pytest.approx(math.sqrt(2))


@settings(max_examples=30)
@given(st.permutations([1, 2, 3, 4]))
def test_creation_string_sign_is_permutation_sign(order):
    """Test that reordering the creation string multiplies the state by the permutation sign."""
    _, amplitude = fock_state(fermions(1, 1, 1, 1), order=order)
    assert amplitude == sign(Permutation(tuple(order)))


def test_boson_ladder_truncation():
    """Test a†|M⟩ = 0 and a†a|n⟩ = n|n⟩."""
    create = boson_ladder(1, 1, 3)
    assert not apply(create, unit_vector(4, 3)).any()
    assert apply(create, unit_vector(4, 1))[2] == pytest.approx(math.sqrt(2))
    assert not create.is_exact
    n_op = number_operator(1, 1, Statistics.BOSON, M=4)
    assert np.allclose(n_op.matrix.diagonal(), [0, 1, 2, 3, 4])
    with pytest.raises(ModeError):
        boson_ladder(1, 1, 0)


@pytest.mark.parametrize("d,M", [(1, 1), (1, 4), (2, 2), (2, 4), (3, 2)])
def test_boson_ladders_are_adjoint_pairs(d, M):
    """Test that the annihilator is the conjugate transpose of the creator."""
    for j in range(1, d + 1):
        create = boson_ladder(j, d, M)
        annihilate = boson_ladder(j, d, M, LadderKind.ANNIHILATE)
        gap = (annihilate.matrix - create.matrix.conj().transpose()).toarray()
        assert np.max(np.abs(gap)) < 1e-12
        assert np.max(np.abs((create.adjoint().matrix - annihilate.matrix).toarray())) < 1e-12


def test_number_operators_are_diagonal():
    """Test that n̂_j and the total number operator count occupations."""
    basis = fock_basis(3)
    total = total_number_operator(3)
    dense = total.matrix.toarray()
    assert np.count_nonzero(dense - np.diag(np.diag(dense))) == 0
    assert list(total.matrix.diagonal()) == [K.particle_count for K in basis]
    n2 = number_operator(2, 3)
    assert list(n2.matrix.diagonal()) == [K[2] for K in basis]


def test_ladders_change_particle_number_by_one():
    """Test that a†_j maps the N sector into the N+1 sector."""
    basis = fock_basis(4)
    for j in range(1, 5):
        coo = fermion_ladder(j, 4).matrix.tocoo()
        for row, col in zip(coo.row, coo.col):
            assert basis.states[row].particle_count == basis.states[col].particle_count + 1


@pytest.mark.parametrize("d", range(1, 9))
def test_verify_car(d):
    """Test that the Jordan-Wigner ladders satisfy the anticommutation relations."""
    report = verify_car(d)
    assert report.ok
    assert report.pairs_checked == d * d
    assert report.failures == []


@pytest.mark.parametrize("d", [0, -1])
def test_verify_car_needs_a_mode(d):
    """Test that an empty or negative mode count raises ModeError."""
    with pytest.raises(ModeError):
        verify_car(d)


def test_verify_car_without_sign_string_fails():
    """Test that dropping the Jordan-Wigner string breaks anticommutation of different modes."""
    report = verify_car(2, jordan_wigner=False)
    assert not report.ok
    assert report.max_violation == 2
    assert ("{a_p,a_q}", 1, 2) in report.failures


def test_verify_car_cap():
    """Test the exhaustive-check cap."""
    with pytest.raises(CapacityError):
        verify_car(9, limits=Limits())


@pytest.mark.parametrize("d,M", [(1, 5), (2, 3)])
def test_verify_ccr(d, M):
    """Test the commutation relations away from the truncation and the -M artifact at it."""
    report = verify_ccr(d, M)
    assert report.ok
    assert report.max_violation_on_safe_subspace < 1e-12
    assert report.truncation_artifact == pytest.approx(-M)


def test_majorana_family():
    """Test α_i α_j + α_j α_i = 2δ_ij for the Majorana operators of two modes."""
    family = majorana_ops(2)
    assert len(family) == 4
    assert family[1].unit == 1j
    report = verify_generalized_car(family)
    assert report.is_fermionic
    assert report.is_symmetric
    assert report.is_diagonal
    assert report.s_matrix == [[2 if i == j else 0 for j in range(4)] for i in range(4)]


def test_dirac_family():
    """Test S = [[0, 1], [1, 0]] in blocks for (a_1..a_d, a†_1..a†_d)."""
    report = verify_generalized_car(dirac_ops(2))
    assert report.is_fermionic
    assert not report.is_diagonal
    assert report.s_matrix == [
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
    ]


def test_boson_pair_is_not_fermionic():
    """Test that bosonic ladders fail the generalized anticommutation check."""
    b = boson_ladder(1, 1, 2, LadderKind.ANNIHILATE)
    report = verify_generalized_car([b, b.adjoint()])
    assert not report.is_fermionic
    assert report.failure == (1, 1)


def test_generalized_car_needs_one_basis():
    """Test that operators on different bases are rejected."""
    with pytest.raises(DimensionMismatchError):
        verify_generalized_car([fermion_ladder(1, 1), fermion_ladder(1, 2)])


def test_adjoint_and_to_dict():
    """Test adjoint pairing, labels and the triplet document."""
    create = fermion_ladder(1, 2)
    a = fermion_ladder(1, 2, LadderKind.ANNIHILATE)
    assert (create.adjoint().matrix != a.matrix).nnz == 0
    assert create.adjoint().label == "a1"
    assert fermion_ladder(1, 1).to_dict() == {"dim": 2, "triplets": [[1, 0, "1"]], "label": "a1†"}
    assert majorana_ops(1)[1].to_dict()["unit"] == "i"


def test_fock_operator_shape_check():
    """Test that the matrix must match the basis."""
    with pytest.raises(DimensionMismatchError):
        FockOperator(fock_basis(1), sp.identity(4, format="csr"))
    with pytest.raises(DimensionMismatchError):
        apply(fermion_ladder(1, 2), [1, 0])


def test_slater_two_particles():
    """Test that |110⟩ maps to (e_12 - e_21)/√2."""
    psi = slater_to_first_quantized(fermions(1, 1, 0))
    assert psi.N == 2
    assert psi[(1, 2)] == pytest.approx(1 / math.sqrt(2))
    assert psi[(2, 1)] == pytest.approx(-1 / math.sqrt(2))
    assert psi[(1, 1)] == 0


def test_slater_single_particle():
    """Test that one particle gives a unit basis vector."""
    psi = slater_to_first_quantized(fermions(0, 1, 0))
    assert psi.N == 1
    assert list(psi.flat()) == [0.0, 1.0, 0.0]


def test_slater_sector_is_orthonormal():
    """Test that the six two-fermion states on four modes are orthonormal tensors."""
    tensors = [slater_to_first_quantized(K) for K in sector_states(4, 2)]
    for i, a in enumerate(tensors):
        for j, b in enumerate(tensors):
            assert inner_product(a, b) == pytest.approx(1.0 if i == j else 0.0)


def test_slater_rejects_vacuum_and_bosons():
    """Test inputs without a Slater tensor."""
    with pytest.raises(ModeError):
        slater_to_first_quantized(fermions(0, 0))
    with pytest.raises(ModeError):
        slater_to_first_quantized(OccupationString((1, 1), Statistics.BOSON))


SLATER_STRINGS = [
    fermions(*[int(j in occupied) for j in range(d)])
    for d in range(1, 5)
    for N in range(1, min(d, 3) + 1)
    for occupied in combinations(range(d), N)
]


@pytest.mark.parametrize("K", SLATER_STRINGS, ids=str)
def test_slater_tensors_are_antisymmetric(K):
    """Test that every Slater tensor is fermionic and picks up sign(σ) under S_N."""
    psi = slater_to_first_quantized(K)
    assert classify_symmetry(psi) == Symmetry.FERMIONIC
    for sigma in enumerate_group(psi.N):
        assert permute_particles(psi, sigma) == psi.scaled(sign(sigma))


def test_slater_size_cap():
    """Test that oversize Slater tensors raise CapacityError before allocating."""
    with pytest.raises(CapacityError):
        slater_to_first_quantized(fermions(*[1] * 12), Limits())
    with pytest.raises(CapacityError) as exc_info:
        slater_to_first_quantized(fermions(1, 1, 1, 0), Limits(max_tensor_size=63))
    assert exc_info.value.cap == "max_tensor_size"

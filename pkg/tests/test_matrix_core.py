import numpy as np
import pytest

from mubpy.globals import InvalidArgumentError
from mubpy.globals import ZERO
from mubpy.matrix_core import apply_diagonal
from mubpy.matrix_core import apply_unitary
from mubpy.matrix_core import as_basis
from mubpy.matrix_core import Basis
from mubpy.matrix_core import ExactBasis
from mubpy.matrix_core import exact_tensor
from mubpy.matrix_core import from_basis
from mubpy.matrix_core import is_unitary
from mubpy.matrix_core import MubSet
from mubpy.matrix_core import overlap_matrix
from mubpy.matrix_core import overlap_sq
from mubpy.matrix_core import swap_subsystems
from mubpy.matrix_core import tensor
from mubpy.matrix_core import unbiased_deviation
from mubpy.prime_mubs import fourier_gauss_basis
from mubpy.prime_mubs import qubit_basis
from mubpy.prime_mubs import standard_basis


def test_is_unitary():
    assert is_unitary(np.eye(3))
    assert is_unitary(np.array([[1, 1], [1, -1]]) / np.sqrt(2))
    assert not is_unitary(np.array([[1, 1], [0, 1]]))
    assert not is_unitary(np.ones((2, 3)))


def test_basis_rejects_non_orthonormal():
    with pytest.raises(InvalidArgumentError):
        Basis([[1, 1], [0, 1]], 'bad')


def test_basis_matrix_is_read_only():
    b = Basis(np.eye(2), 'e')
    with pytest.raises(ValueError):
        b.matrix[0, 0] = 2


def test_exact_basis_matrix():
    b = ExactBasis([[0, 0], [1, 3]], 4, 2, 'y')
    expected = np.array([[1, 1], [1j, -1j]]) / np.sqrt(2)
    assert np.allclose(b.matrix, expected, atol=1e-15)
    assert b.dim == 2


def test_exact_basis_reduces_exponents_and_keeps_zeros():
    b = ExactBasis([[0, ZERO], [ZERO, 5]], 4, 1)
    assert b.exponents.tolist() == [[0, ZERO], [ZERO, 1]]
    assert b.zero_mask.tolist() == [[False, True], [True, False]]


def test_exact_basis_rejects_non_unitary_grid():
    with pytest.raises(InvalidArgumentError):
        ExactBasis([[0, 0], [0, 0]], 2, 2)


def test_lift_and_same_entries():
    b = fourier_gauss_basis(3, 1)
    lifted = b.lift(12)
    assert lifted.root_order == 12
    assert lifted.same_entries(b)
    assert lifted == b
    assert not b.same_entries(fourier_gauss_basis(3, 2))
    with pytest.raises(InvalidArgumentError):
        b.lift(4)


def test_from_basis_recovers_exponents():
    b = fourier_gauss_basis(5, 2)
    exact = from_basis(b.to_basis(), 5, 5)
    assert np.array_equal(exact.exponents, b.exponents)
    standard = from_basis(Basis(np.eye(3), 'e'), 1, 1)
    assert standard.same_entries(standard_basis(3))


def test_from_basis_rejects_wrong_order():
    with pytest.raises(InvalidArgumentError):
        from_basis(fourier_gauss_basis(3, 1).to_basis(), 2, 3)


def test_exact_tensor_matches_kron():
    a = qubit_basis(1)
    b = fourier_gauss_basis(3, 2)
    product = tensor(a, b)
    assert isinstance(product, ExactBasis)
    assert product.root_order == 12
    assert product.scale_sq == 6
    assert product.label == 'm=1 x m=2'
    assert np.allclose(product.matrix, np.kron(a.matrix, b.matrix), atol=1e-12)


def test_numeric_tensor_label():
    a = Basis(np.eye(2), 'e')
    product = tensor(a, qubit_basis(0), 'custom')
    assert isinstance(product, Basis)
    assert product.label == 'custom'


def test_overlaps():
    assert overlap_sq(np.array([1, 0]), np.array([1, 1]) / np.sqrt(2)) == pytest.approx(0.5)
    with pytest.raises(InvalidArgumentError):
        overlap_sq(np.ones(2), np.ones(3))
    overlaps = overlap_matrix(standard_basis(3), fourier_gauss_basis(3, 0))
    assert np.allclose(overlaps, 1 / 3)
    assert unbiased_deviation(standard_basis(3), fourier_gauss_basis(3, 1)) < 1e-14
    with pytest.raises(InvalidArgumentError):
        overlap_matrix(standard_basis(2), standard_basis(3))


def test_apply_unitary():
    h = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    out = apply_unitary(h, standard_basis(2), 'h')
    assert np.allclose(out.matrix, h)
    with pytest.raises(InvalidArgumentError):
        apply_unitary(np.eye(3), standard_basis(2))
    with pytest.raises(InvalidArgumentError):
        apply_unitary(np.ones((2, 2)), standard_basis(2))


def test_apply_diagonal_matches_numeric():
    b = fourier_gauss_basis(5, 0)
    exponents = np.array([0, 1, 4, 4, 1])
    out = apply_diagonal(exponents, 5, b)
    diag = np.diag(np.exp(2j * np.pi * exponents / 5))
    assert np.allclose(out.matrix, diag @ b.matrix, atol=1e-12)
    with pytest.raises(InvalidArgumentError):
        apply_diagonal([0, 1], 5, b)


def test_swap_subsystems_state_and_inverse():
    state = np.arange(6, dtype=complex)
    swapped = swap_subsystems(state, 2, 3)
    # c_ab moves to (b, a)
    assert swapped.reshape(3, 2)[2, 1] == state.reshape(2, 3)[1, 2]
    assert np.array_equal(swap_subsystems(swapped, 3, 2), state)


def test_swap_subsystems_bases():
    a, b = qubit_basis(0), fourier_gauss_basis(3, 1)
    swapped = swap_subsystems(tensor(a, b), 2, 3)
    reversed_order = tensor(b, a)
    # states are permuted, the set of rays is the same
    overlaps = overlap_matrix(swapped, reversed_order)
    assert np.allclose(np.sort(overlaps.max(axis=1)), 1.0)
    with pytest.raises(InvalidArgumentError):
        swap_subsystems(tensor(a, b), 2, 2)


def test_mubset_validation_and_access():
    bases = [qubit_basis(0), qubit_basis(1), standard_basis(2)]
    mubs = MubSet(bases, {'method': 'prime', 'p': 2})
    assert len(mubs) == 3
    assert mubs.labels == ['m=0', 'm=1', 'standard']
    assert mubs.is_complete
    assert mubs.exact
    assert mubs.provenance['theta'] is None
    assert mubs.basis('m=1') is bases[1]
    assert mubs.states().shape == (2, 6)
    assert mubs.subset(['standard', 'm=0']).labels == ['standard', 'm=0']
    assert mubs.without(['m=0']).labels == ['m=1', 'standard']
    with pytest.raises(KeyError):
        mubs.basis('m=2')


def test_mubset_rejects_bad_input():
    with pytest.raises(InvalidArgumentError):
        MubSet([])
    with pytest.raises(InvalidArgumentError):
        MubSet([standard_basis(2), standard_basis(3).relabel('three')])
    with pytest.raises(InvalidArgumentError):
        MubSet([standard_basis(2), standard_basis(2)])


def test_exact_tensor_matches_kron():
    left = qubit_basis(0)
    right = fourier_gauss_basis(3, 1)
    product = exact_tensor(left, right)
    assert product.root_order == 12
    assert product.scale_sq == 6
    assert product.label == 'm=0 x m=1'
    assert np.allclose(product.matrix, np.kron(left.matrix, right.matrix))
    assert exact_tensor(standard_basis(2), left, 'mixed').zero_mask.sum() == 8


def test_as_basis():
    exact = fourier_gauss_basis(3, 0)
    basis = as_basis(exact)
    assert isinstance(basis, Basis)
    assert np.allclose(basis.matrix, exact.matrix)
    assert as_basis(basis) is basis
    assert as_basis(np.eye(2)).dim == 2
    with pytest.raises(InvalidArgumentError):
        as_basis(np.ones((2, 2)))

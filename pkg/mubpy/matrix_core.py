################################################################################
#
# Package   : MubPy
# Module    : matrix_core
# Created   : October 19, 2026
#
# Copyright 2026 MubPy Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
################################################################################


#
# Imports
#

from mubpy.exact_field import root_values
from mubpy.globals import EXACT_TOL, UNITARY_TOL, ZERO
from mubpy.globals import InvalidArgumentError

import logging
import math
import numpy as np


#
# Initialize logger
#

logger = logging.getLogger(__name__)


#
# Function is_unitary
#

def is_unitary(matrix, tol=UNITARY_TOL):
    r"""Test a square matrix for unitarity on its Gram entries.

    Parameters
    ----------
    matrix : numpy.ndarray
        Square complex matrix.
    tol : float
        Absolute tolerance on every entry of U†U - I.

    Returns
    -------
    result : bool
        ``True`` if the matrix is unitary within ``tol``.

    """
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    gram = matrix.conj().T @ matrix
    return bool(np.max(np.abs(gram - np.eye(matrix.shape[0]))) < tol)


#
# Class Basis
#

class Basis(object):
    """An orthonormal basis stored as a dense unitary matrix.

    Column ``j`` is the j-th state of the basis.

    Parameters
    ----------
    matrix : array_like
        Square complex matrix with orthonormal columns.
    label : str, optional
        Free-text name of the basis.

    Raises
    ------
    InvalidArgumentError
        The columns are not orthonormal within ``UNITARY_TOL``.

    """

    # __init__

    def __init__(self, matrix, label=''):
        matrix = np.array(matrix, dtype=complex)
        if not is_unitary(matrix):
            raise InvalidArgumentError("Basis %s columns are not orthonormal" % label)
        matrix.setflags(write=False)
        self.matrix = matrix
        self.label = label

    # __str__

    def __str__(self):
        return "Basis(%s, d=%d)" % (self.label, self.dim)

    __repr__ = __str__

    @property
    def dim(self):
        return self.matrix.shape[0]

    def column(self, j):
        return self.matrix[:, j]

    def states(self):
        return [self.matrix[:, j] for j in range(self.dim)]

    def to_basis(self):
        return self

    def relabel(self, label):
        return Basis(self.matrix, label)


#
# Class ExactBasis
#

class ExactBasis(object):
    """A basis with entries scale·α_L^k or exact zeros.

    Parameters
    ----------
    exponents : array_like
        d×d integer grid. Entry (s, j) is the exponent of α_L at row
        ``s`` of state ``j``, or ``ZERO`` for an exact zero.
    root_order : int
        The order L of the root of unity.
    scale_sq : int
        The scale is 1/√scale_sq; 1 for the standard basis and d for
        Fourier-type bases.
    label : str, optional
        Free-text name of the basis.

    Notes
    -----
    Exponents are stored reduced modulo L. The matrix conversion is
    checked for unitarity so that an exact basis is always a basis.

    """

    # __init__

    def __init__(self, exponents, root_order, scale_sq=1, label=''):
        exponents = np.array(exponents, dtype=np.int64)
        if exponents.ndim != 2 or exponents.shape[0] != exponents.shape[1]:
            raise InvalidArgumentError("Exponent grid of %s must be square" % label)
        if root_order < 1 or scale_sq < 1:
            raise InvalidArgumentError("Invalid root order %s or scale %s" %
                                       (root_order, scale_sq))
        zero = exponents == ZERO
        exponents = np.where(zero, ZERO, exponents % root_order)
        exponents.setflags(write=False)
        self.exponents = exponents
        self.root_order = int(root_order)
        self.scale_sq = int(scale_sq)
        self.label = label
        self._basis = None
        self.to_basis()

    # __str__

    def __str__(self):
        return "ExactBasis(%s, d=%d, L=%d)" % (self.label, self.dim, self.root_order)

    __repr__ = __str__

    @property
    def dim(self):
        return self.exponents.shape[0]

    @property
    def matrix(self):
        return self.to_basis().matrix

    @property
    def zero_mask(self):
        return self.exponents == ZERO

    def to_basis(self):
        r"""Convert to a floating-point ``Basis`` (cached)."""
        if self._basis is None:
            values = root_values(self.root_order, self.exponents)
            self._basis = Basis(values / math.sqrt(self.scale_sq), self.label)
        return self._basis

    def lift(self, order):
        r"""Re-express the exponents over a multiple of the root order.

        Raises
        ------
        InvalidArgumentError
            ``order`` is not a multiple of the current root order.

        """
        if order % self.root_order != 0:
            raise InvalidArgumentError("Order %d is not a multiple of %d" %
                                       (order, self.root_order))
        factor = order // self.root_order
        grid = np.where(self.zero_mask, ZERO, self.exponents * factor)
        return ExactBasis(grid, order, self.scale_sq, self.label)

    def relabel(self, label):
        return ExactBasis(self.exponents, self.root_order, self.scale_sq, label)

    def same_entries(self, other):
        r"""Exact entry-by-entry comparison, ignoring labels."""
        if self.dim != other.dim or self.scale_sq != other.scale_sq:
            return False
        order = math.lcm(self.root_order, other.root_order)
        left = self.lift(order)
        right = other.lift(order)
        return bool(np.array_equal(left.exponents, right.exponents))

    def __eq__(self, other):
        if not isinstance(other, ExactBasis):
            return NotImplemented
        return self.same_entries(other)

    __hash__ = None


#
# Function as_basis
#

def as_basis(basis):
    r"""Get the floating-point form of a ``Basis`` or ``ExactBasis``."""
    if isinstance(basis, (Basis, ExactBasis)):
        return basis.to_basis()
    return Basis(basis)


#
# Function from_basis
#

def from_basis(basis, root_order, scale_sq, tol=EXACT_TOL):
    r"""Recover the exact form of a numeric basis.

    Parameters
    ----------
    basis : mubpy.matrix_core.Basis
        The numeric basis.
    root_order : int
        Target root order L.
    scale_sq : int
        Target scale 1/√scale_sq.
    tol : float
        Tolerance on every recovered entry.

    Returns
    -------
    exact : mubpy.matrix_core.ExactBasis
        The basis with integer exponents.

    Raises
    ------
    InvalidArgumentError
        Some entry is not zero or a scaled L-th root of unity.

    """
    values = as_basis(basis).matrix * math.sqrt(scale_sq)
    zero = np.abs(values) < tol
    if np.any(np.abs(np.abs(values[~zero]) - 1.0) > tol):
        raise InvalidArgumentError("Basis %s has entries off the scale 1/sqrt(%d)" %
                                   (basis.label, scale_sq))
    turns = np.angle(values) * root_order / (2 * np.pi)
    k = np.rint(turns)
    if np.any(np.abs(turns - k)[~zero] * 2 * np.pi / root_order > tol):
        raise InvalidArgumentError("Basis %s has phases off the order-%d roots" %
                                   (basis.label, root_order))
    grid = np.where(zero, ZERO, k.astype(np.int64) % root_order)
    return ExactBasis(grid, root_order, scale_sq, basis.label)


#
# Function exact_tensor
#

def exact_tensor(left, right, label=None):
    r"""Tensor product of two exact bases.

    The root order of the result is the lcm of the input orders and the
    left factor is the slow index.

    """
    order = math.lcm(left.root_order, right.root_order)
    a = left.lift(order)
    b = right.lift(order)
    da, db = a.dim, b.dim
    sums = np.add.outer(a.exponents, b.exponents)
    zeros = np.logical_or.outer(a.zero_mask, b.zero_mask)
    # axes (s, j, t, k) -> rows (s, t), columns (j, k)
    sums = sums.transpose(0, 2, 1, 3).reshape(da * db, da * db)
    zeros = zeros.transpose(0, 2, 1, 3).reshape(da * db, da * db)
    grid = np.where(zeros, ZERO, sums % order)
    if label is None:
        label = ' x '.join([left.label, right.label])
    return ExactBasis(grid, order, a.scale_sq * b.scale_sq, label)


#
# Function tensor
#

def tensor(left, right, label=None):
    r"""Tensor product of two bases.

    Parameters
    ----------
    left : Basis or ExactBasis
        Basis of dimension d_A.
    right : Basis or ExactBasis
        Basis of dimension d_B.
    label : str, optional
        Label of the product; defaults to ``'left x right'``.

    Returns
    -------
    product : Basis or ExactBasis
        Column (a·d_B + b) is left column a ⊗ right column b. The
        result is exact when both factors are exact.

    Examples
    --------

    >>> tensor(standard_basis(2), standard_basis(3))   # standard(6)

    """
    if isinstance(left, ExactBasis) and isinstance(right, ExactBasis):
        return exact_tensor(left, right, label)
    a = as_basis(left)
    b = as_basis(right)
    if label is None:
        label = ' x '.join([a.label, b.label])
    return Basis(np.kron(a.matrix, b.matrix), label)


#
# Function overlap_sq
#

def overlap_sq(v, w):
    r"""Squared modulus of the inner product of two states.

    Raises
    ------
    InvalidArgumentError
        The states differ in dimension.

    Examples
    --------

    >>> overlap_sq(np.array([1, 0]), np.array([1, 1]) / np.sqrt(2))   # 0.5

    """
    v = np.asarray(v)
    w = np.asarray(w)
    if v.shape != w.shape:
        raise InvalidArgumentError("State dimensions differ: %s vs %s" %
                                   (v.shape, w.shape))
    return float(np.abs(np.vdot(v, w)) ** 2)


#
# Function overlap_matrix
#

def overlap_matrix(first, second):
    r"""All squared overlaps between the states of two bases.

    Returns
    -------
    overlaps : numpy.ndarray
        Entry (i, j) is |⟨first_i|second_j⟩|².

    Raises
    ------
    InvalidArgumentError
        The bases differ in dimension.

    """
    a = as_basis(first)
    b = as_basis(second)
    if a.dim != b.dim:
        raise InvalidArgumentError("Basis dimensions differ: %d vs %d" % (a.dim, b.dim))
    return np.abs(a.matrix.conj().T @ b.matrix) ** 2


#
# Function unbiased_deviation
#

def unbiased_deviation(first, second):
    r"""Largest deviation of a squared overlap from 1/d."""
    overlaps = overlap_matrix(first, second)
    return float(np.max(np.abs(overlaps - 1.0 / overlaps.shape[0])))


#
# Function apply_unitary
#

def apply_unitary(unitary, basis, label=None):
    r"""Apply a unitary to every state of a basis.

    Parameters
    ----------
    unitary : numpy.ndarray
        d×d unitary matrix.
    basis : Basis or ExactBasis
        Input basis of dimension d.
    label : str, optional
        Label of the result; defaults to the input label.

    Returns
    -------
    output : mubpy.matrix_core.Basis
        Basis whose columns are U times the input columns.

    Raises
    ------
    InvalidArgumentError
        ``unitary`` is not unitary within 1e-10 or the dimensions differ.

    """
    b = as_basis(basis)
    unitary = np.asarray(unitary, dtype=complex)
    if not is_unitary(unitary):
        raise InvalidArgumentError("Operator applied to %s is not unitary" % b.label)
    if unitary.shape[0] != b.dim:
        raise InvalidArgumentError("Operator of size %d applied to basis of dim %d" %
                                   (unitary.shape[0], b.dim))
    return Basis(unitary @ b.matrix, b.label if label is None else label)


#
# Function apply_diagonal
#

def apply_diagonal(exponents, order, basis, label=None):
    r"""Apply a diagonal root-of-unity unitary to an exact basis.

    Parameters
    ----------
    exponents : array_like
        Diagonal entry s of the unitary is α_order^exponents[s].
    order : int
        Root order of the diagonal.
    basis : mubpy.matrix_core.ExactBasis
        Input basis.
    label : str, optional
        Label of the result.

    Returns
    -------
    output : mubpy.matrix_core.ExactBasis
        The transformed basis, exact over lcm(order, L).

    """
    exponents = np.asarray(exponents, dtype=np.int64)
    if exponents.shape != (basis.dim,):
        raise InvalidArgumentError("Diagonal of length %d for basis of dim %d" %
                                   (exponents.size, basis.dim))
    lcm = math.lcm(order, basis.root_order)
    lifted = basis.lift(lcm)
    shift = exponents * (lcm // order)
    grid = np.where(lifted.zero_mask, ZERO, lifted.exponents + shift[:, None])
    return ExactBasis(grid, lcm, basis.scale_sq, basis.label if label is None else label)


#
# Function swap_permutation
#

def swap_permutation(d_a, d_b):
    r"""Index map of the subsystem swap.

    Returns
    -------
    perm : numpy.ndarray
        ``perm[a*d_b + b] = b*d_a + a``.

    """
    a, b = np.divmod(np.arange(d_a * d_b), d_b)
    return b * d_a + a


#
# Function swap_subsystems
#

def swap_subsystems(item, d_a, d_b):
    r"""Exchange the two subsystems of a state or basis.

    Parameters
    ----------
    item : numpy.ndarray, Basis or ExactBasis
        A state vector or a basis of dimension d_A·d_B.
    d_a : int
        Dimension of the first subsystem of the input.
    d_b : int
        Dimension of the second subsystem of the input.

    Returns
    -------
    swapped : same type as ``item``
        Coefficient c_ab moves to position (b, a). Applying the swap
        with (d_b, d_a) undoes it.

    Raises
    ------
    InvalidArgumentError
        The dimension is not d_A·d_B.

    """
    perm = swap_permutation(d_a, d_b)
    if isinstance(item, ExactBasis):
        if item.dim != d_a * d_b:
            raise InvalidArgumentError("Dimension %d is not %d x %d" % (item.dim, d_a, d_b))
        grid = np.empty_like(item.exponents)
        grid[perm, :] = item.exponents
        return ExactBasis(grid, item.root_order, item.scale_sq, item.label)
    if isinstance(item, Basis):
        if item.dim != d_a * d_b:
            raise InvalidArgumentError("Dimension %d is not %d x %d" % (item.dim, d_a, d_b))
        matrix = np.empty_like(item.matrix)
        matrix[perm, :] = item.matrix
        return Basis(matrix, item.label)
    state = np.asarray(item)
    if state.shape != (d_a * d_b,):
        raise InvalidArgumentError("State of shape %s is not %d x %d" %
                                   (state.shape, d_a, d_b))
    swapped = np.empty_like(state)
    swapped[perm] = state
    return swapped


#
# Class MubSet
#

class MubSet(object):
    """An ordered collection of bases over one dimension.

    Parameters
    ----------
    bases : list
        ``Basis`` or ``ExactBasis`` members of equal dimension with
        unique labels.
    provenance : dict, optional
        Construction name and parameters, e.g.
        ``{'method': 'prime', 'p': 3, 'theta': None, 'seed': None}``.

    Raises
    ------
    InvalidArgumentError
        The set is empty, dimensions differ or labels repeat.

    """

    # __init__

    def __init__(self, bases, provenance=None):
        bases = list(bases)
        if not bases:
            raise InvalidArgumentError("A basis set needs at least one basis")
        dims = {b.dim for b in bases}
        if len(dims) != 1:
            raise InvalidArgumentError("Bases have mixed dimensions %s" % sorted(dims))
        labels = [b.label for b in bases]
        if len(set(labels)) != len(labels):
            raise InvalidArgumentError("Basis labels are not unique: %s" % labels)
        self.bases = bases
        self.dim = dims.pop()
        if provenance is not None and not isinstance(provenance, dict):
            raise InvalidArgumentError("Provenance must be a dictionary, got %s" % provenance)
        prov = {'method': None, 'p': None, 'seed': None, 'theta': None}
        prov.update(provenance or {})
        self.provenance = prov

    # __str__

    def __str__(self):
        return "MubSet(%s, d=%d, %d bases)" % (self.provenance['method'], self.dim,
                                               len(self.bases))

    __repr__ = __str__

    def __len__(self):
        return len(self.bases)

    def __iter__(self):
        return iter(self.bases)

    def __getitem__(self, index):
        return self.bases[index]

    @property
    def labels(self):
        return [b.label for b in self.bases]

    @property
    def exact(self):
        return all(isinstance(b, ExactBasis) for b in self.bases)

    @property
    def is_complete(self):
        return len(self.bases) == self.dim + 1

    def basis(self, label):
        r"""Get a member basis by label.

        Raises
        ------
        KeyError
            No basis has the label.

        """
        for b in self.bases:
            if b.label == label:
                return b
        raise KeyError("No basis labeled %s" % label)

    def numeric(self):
        return [as_basis(b) for b in self.bases]

    def states(self):
        r"""All states of the set as the columns of one d×N matrix."""
        return np.hstack([b.matrix for b in self.numeric()])

    def subset(self, labels):
        r"""A new set with the named bases, in the given order."""
        return MubSet([self.basis(x) for x in labels], self.provenance)

    def without(self, labels):
        return MubSet([b for b in self.bases if b.label not in set(labels)],
                      self.provenance)

################################################################################
#
# Package   : MubPy
# Module    : weyl
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

from mubpy.exact_field import is_prime
from mubpy.exact_field import PrimeField
from mubpy.exact_field import root_values
from mubpy.globals import InvalidArgumentError
from mubpy.globals import UnsupportedDimensionError
from mubpy.matrix_core import ExactBasis

import logging
import numpy as np


#
# Initialize logger
#

logger = logging.getLogger(__name__)


#
# Class WeylLabel
#

class WeylLabel(object):
    """Name of the Weyl operator X^a Z^b in prime dimension p.

    Parameters
    ----------
    p : int
        Prime dimension.
    a : int
        Shift power, reduced modulo p.
    b : int
        Phase power, reduced modulo p.

    Notes
    -----
    Labels carry no phase, since commutation is phase-free.

    Examples
    --------

    >>> WeylLabel(3, 4, -1)   # X^1 Z^2 in dimension 3

    """

    # __init__

    def __init__(self, p, a, b):
        if not is_prime(p):
            raise InvalidArgumentError("Weyl dimension %s is not prime" % p)
        self.p = int(p)
        self.a = int(a) % self.p
        self.b = int(b) % self.p

    # __str__

    def __str__(self):
        return "X^%d Z^%d (p=%d)" % (self.a, self.b, self.p)

    __repr__ = __str__

    def __eq__(self, other):
        if not isinstance(other, WeylLabel):
            return NotImplemented
        return (self.p, self.a, self.b) == (other.p, other.a, other.b)

    def __hash__(self):
        return hash((self.p, self.a, self.b))

    @property
    def is_identity(self):
        return self.a == 0 and self.b == 0


#
# Function shift_matrix
#

def shift_matrix(p):
    r"""The shift X with X|s⟩ = |s+1 mod p⟩."""
    return np.roll(np.eye(p, dtype=complex), 1, axis=0)


#
# Function phase_matrix
#

def phase_matrix(p):
    r"""The phase Z with Z|s⟩ = α_p^s |s⟩."""
    return np.diag(root_values(p, np.arange(p)))


#
# Function weyl_matrix
#

def weyl_matrix(label):
    r"""Matrix of the Weyl operator X^a Z^b.

    Parameters
    ----------
    label : mubpy.weyl.WeylLabel
        The operator name.

    Returns
    -------
    matrix : numpy.ndarray
        p×p unitary. Column s holds α_p^{bs} at row s+a mod p and zeros
        elsewhere, so every entry is an exact root of unity or zero.

    Examples
    --------

    >>> weyl_matrix(WeylLabel(2, 1, 0))   # [[0, 1], [1, 0]]
    >>> weyl_matrix(WeylLabel(2, 0, 1))   # [[1, 0], [0, -1]]

    """
    p = label.p
    s = np.arange(p)
    matrix = np.zeros((p, p), dtype=complex)
    matrix[(s + label.a) % p, s] = root_values(p, (label.b * s) % p)
    return matrix


#
# Function commutes
#

def commutes(first, second):
    r"""Test whether two Weyl operators commute.

    Returns
    -------
    result : bool
        ``True`` iff a1·b2 - a2·b1 ≡ 0 (mod p).

    Raises
    ------
    InvalidArgumentError
        The labels belong to different dimensions.

    Examples
    --------

    >>> commutes(WeylLabel(5, 1, 2), WeylLabel(5, 2, 4))   # True
    >>> commutes(WeylLabel(3, 1, 0), WeylLabel(3, 0, 1))   # False

    """
    if first.p != second.p:
        raise InvalidArgumentError("Weyl labels of dimensions %d and %d" %
                                   (first.p, second.p))
    return (first.a * second.b - second.a * first.b) % first.p == 0


#
# Function commutator_norm
#

def commutator_norm(first, second):
    r"""Frobenius norm of AB - BA for two Weyl operators."""
    a = weyl_matrix(first)
    b = weyl_matrix(second)
    return float(np.linalg.norm(a @ b - b @ a))


#
# Function commuting_classes
#

def commuting_classes(p):
    r"""Partition the non-identity Weyl operators into commuting classes.

    Parameters
    ----------
    p : int
        Prime dimension.

    Returns
    -------
    classes : list
        p+1 lists of p-1 labels: the powers of Z, then the powers of
        X Z^c for c = 0..p-1.

    Examples
    --------

    >>> commuting_classes(2)   # [[Z], [X], [XZ]]

    """
    if not is_prime(p):
        raise InvalidArgumentError("Weyl dimension %s is not prime" % p)
    classes = [[WeylLabel(p, 0, n) for n in range(1, p)]]
    for c in range(p):
        classes.append([WeylLabel(p, n, n * c) for n in range(1, p)])
    return classes


#
# Function eigenbasis_xz
#

def eigenbasis_xz(p, k):
    r"""Closed-form common eigenbasis of X Z^k.

    Parameters
    ----------
    p : int
        Odd prime.
    k : int
        Phase power 0..p-1.

    Returns
    -------
    basis : mubpy.matrix_core.ExactBasis
        Column j has entries α_p^{(j+m)s - 2mξ_s}/√p with m = k/2 in
        F_p and ξ_s = s + ... + (p-1) = (p-s)(p+s-1)/2.

    Raises
    ------
    UnsupportedDimensionError
        ``p`` is 2, where the qubit bases need the imaginary unit.

    Notes
    -----
    Since 2ξ_s ≡ s - s² (mod p), this is the Fourier-Gauss basis m;
    k = 0 gives the Fourier basis of X.

    """
    if p == 2:
        raise UnsupportedDimensionError("Use the qubit bases for p=2")
    field = PrimeField(p)
    if not 0 <= k < p:
        raise InvalidArgumentError("Phase power %d outside 0..%d" % (k, p - 1))
    m = field.mul(k, field.inverse(2))
    s = np.arange(p)
    xi = (p - s) * (p + s - 1) // 2
    j = np.arange(p)
    grid = ((j[None, :] + m) * s[:, None] - 2 * m * xi[:, None]) % p
    logger.debug("Eigenbasis of X Z^%d for p=%d is Fourier-Gauss m=%d", k, p, m)
    return ExactBasis(grid, p, p, "xz^%d" % k)

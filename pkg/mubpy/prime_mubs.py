################################################################################
#
# Package   : MubPy
# Module    : prime_mubs
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
from mubpy.exact_field import root_values
from mubpy.globals import InvalidArgumentError
from mubpy.globals import Method
from mubpy.globals import STANDARD_LABEL, ZERO
from mubpy.globals import UnsupportedDimensionError
from mubpy.matrix_core import ExactBasis
from mubpy.matrix_core import MubSet
from mubpy.utilities import method_tag

import logging
import numpy as np


#
# Initialize logger
#

logger = logging.getLogger(__name__)


#
# Qubit bases over the fourth roots of unity
#

QUBIT_EXPONENTS = {0 : [[0, 0], [0, 2]],
                   1 : [[0, 0], [1, 3]]}


#
# Function standard_basis
#

def standard_basis(d):
    r"""The computational basis of dimension d.

    Parameters
    ----------
    d : int
        Dimension, at least 1.

    Returns
    -------
    basis : mubpy.matrix_core.ExactBasis
        Identity matrix with unit scale, labeled ``standard``.

    """
    if d < 1:
        raise InvalidArgumentError("Dimension must be positive: %s" % d)
    grid = np.full((d, d), ZERO, dtype=np.int64)
    np.fill_diagonal(grid, 0)
    return ExactBasis(grid, 1, 1, STANDARD_LABEL)


#
# Function fourier_gauss_basis
#

def fourier_gauss_basis(p, m):
    r"""The Fourier-Gauss basis m in odd prime dimension p.

    Parameters
    ----------
    p : int
        Odd prime.
    m : int
        Basis index 0..p-1.

    Returns
    -------
    basis : mubpy.matrix_core.ExactBasis
        Column j has entry α_p^{js + ms²}/√p at row s.

    Raises
    ------
    UnsupportedDimensionError
        ``p`` is 2 (see ``qubit_mubs``) or not prime.
    InvalidArgumentError
        ``m`` is outside 0..p-1.

    Examples
    --------

    >>> fourier_gauss_basis(3, 1).exponents[:, 0]   # [0, 1, 1]

    """
    if p == 2 or not is_prime(p):
        raise UnsupportedDimensionError("Fourier-Gauss bases need an odd prime, got %s" % p)
    if not 0 <= m < p:
        raise InvalidArgumentError("Basis index %d outside 0..%d" % (m, p - 1))
    s = np.arange(p)[:, None]
    j = np.arange(p)[None, :]
    grid = (j * s + m * s * s) % p
    return ExactBasis(grid, p, p, "m=%d" % m)


#
# Function qubit_basis
#

def qubit_basis(m):
    r"""Qubit basis m over the fourth roots of unity.

    m = 0 is the σ_x eigenbasis, m = 1 the σ_y eigenbasis and m = 2
    the standard basis.

    """
    if m == 2:
        return standard_basis(2)
    if m not in QUBIT_EXPONENTS:
        raise InvalidArgumentError("Qubit basis index %s outside 0..2" % m)
    return ExactBasis(QUBIT_EXPONENTS[m], 4, 2, "m=%d" % m)


#
# Function local_basis
#

def local_basis(p, m):
    r"""Basis m of the canonical complete set in prime dimension p.

    Index m = p is the standard basis.

    """
    if m == p:
        return standard_basis(p)
    if p == 2:
        return qubit_basis(m)
    return fourier_gauss_basis(p, m)


#
# Function qubit_mubs
#

def qubit_mubs():
    r"""The three qubit MUBs.

    Returns
    -------
    mubs : mubpy.matrix_core.MubSet
        The σ_x eigenbasis (m=0), the σ_y eigenbasis (m=1) and the
        standard basis, in that order.

    """
    bases = [qubit_basis(0), qubit_basis(1), standard_basis(2)]
    return MubSet(bases, {'method': method_tag(Method.prime), 'p': 2})


#
# Function w_exponents
#

def w_exponents(p):
    r"""Exponents s² mod p of the cycling operator W."""
    s = np.arange(p)
    return (s * s) % p


#
# Function w_operator
#

def w_operator(p):
    r"""The cycling operator W = diag(α_p^{s²}).

    Parameters
    ----------
    p : int
        Odd prime.

    Returns
    -------
    w : numpy.ndarray
        Diagonal unitary with W|j_m⟩ = |j_{m+1}⟩.

    Examples
    --------

    >>> w_operator(3)   # diag(1, α_3, α_3)

    """
    if p == 2 or not is_prime(p):
        raise UnsupportedDimensionError("W is defined for odd primes, got %s" % p)
    return np.diag(root_values(p, w_exponents(p)))


#
# Function complete_prime_set
#

def complete_prime_set(p):
    r"""Complete set of p+1 MUBs in prime dimension p.

    Parameters
    ----------
    p : int
        Prime dimension.

    Returns
    -------
    mubs : mubpy.matrix_core.MubSet
        Bases m = 0..p-1 followed by the standard basis (m = p). For
        p = 2 this is ``qubit_mubs()``.

    Raises
    ------
    UnsupportedDimensionError
        ``p`` is not prime.

    """
    if not is_prime(p):
        raise UnsupportedDimensionError("Dimension %s is not prime" % p)
    logger.info("Constructing complete set for p=%d", p)
    if p == 2:
        return qubit_mubs()
    bases = [fourier_gauss_basis(p, m) for m in range(p)]
    bases.append(standard_basis(p))
    return MubSet(bases, {'method': method_tag(Method.prime), 'p': p})

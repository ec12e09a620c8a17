################################################################################
#
# Package   : MubPy
# Module    : wocjan_beth
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
from mubpy.globals import UNITARY_TOL, ZERO
from mubpy.globals import UnsupportedDimensionError
from mubpy.matrix_core import Basis
from mubpy.matrix_core import ExactBasis
from mubpy.matrix_core import MubSet
from mubpy.utilities import method_tag

import logging
import math
import numpy as np


#
# Initialize logger
#

logger = logging.getLogger(__name__)


#
# Class IncidentVector
#

class IncidentVector(object):
    """A 0/1 vector of length d² with exactly d ones.

    Parameters
    ----------
    dim : int
        The dimension d; the vector has d² slots.
    support : iterable
        The d slots holding a one.

    """

    # __init__

    def __init__(self, dim, support):
        support = tuple(sorted(set(int(x) for x in support)))
        if len(support) != dim:
            raise InvalidArgumentError("Incident vector needs weight %d, got %d" %
                                       (dim, len(support)))
        if support[0] < 0 or support[-1] >= dim * dim:
            raise InvalidArgumentError("Support %s outside 0..%d" % (support, dim * dim - 1))
        self.dim = dim
        self.support = support

    # __str__

    def __str__(self):
        return "IncidentVector(%s)" % (self.support,)

    __repr__ = __str__

    def vector(self):
        v = np.zeros(self.dim * self.dim, dtype=int)
        v[list(self.support)] = 1
        return v


#
# Class IncidentFamily
#

class IncidentFamily(object):
    """d incident vectors with disjoint supports covering all d² slots.

    Parameters
    ----------
    dim : int
        The dimension d.
    members : list
        The d ``IncidentVector`` objects.
    name : str, optional
        Name used for the lifted basis.

    """

    # __init__

    def __init__(self, dim, members, name=''):
        members = list(members)
        if len(members) != dim:
            raise InvalidArgumentError("Family needs %d vectors, got %d" % (dim, len(members)))
        slots = sorted(x for v in members for x in v.support)
        if slots != list(range(dim * dim)):
            raise InvalidArgumentError("Family %s does not partition the %d slots" %
                                       (name, dim * dim))
        self.dim = dim
        self.members = members
        self.name = name

    # __str__

    def __str__(self):
        return "IncidentFamily(%s)" % self.name

    __repr__ = __str__


#
# Class PhaseVector
#

class PhaseVector(object):
    """d unit-modulus complex entries."""

    # __init__

    def __init__(self, entries):
        entries = np.array(entries, dtype=complex)
        if entries.ndim != 1 or np.any(np.abs(np.abs(entries) - 1.0) > 1e-12):
            raise InvalidArgumentError("Phase vector entries must have modulus 1")
        self.entries = entries

    @property
    def dim(self):
        return len(self.entries)


#
# Function natural_families
#

def natural_families(d):
    r"""The row and column families of incident vectors.

    Returns
    -------
    families : list
        Row vector i is supported on slots i·d .. i·d+d-1; column vector
        j on slots j, j+d, ..., j+(d-1)d.

    """
    if d < 2:
        raise InvalidArgumentError("Incident families need d >= 2, got %s" % d)
    rows = [IncidentVector(d, range(i * d, i * d + d)) for i in range(d)]
    columns = [IncidentVector(d, range(j, d * d, d)) for j in range(d)]
    return [IncidentFamily(d, rows, 'rows'), IncidentFamily(d, columns, 'columns')]


#
# Function mols_families
#

def mols_families(d):
    r"""Families from the linear Latin squares L_k(i, j) = i + k·j mod d.

    Parameters
    ----------
    d : int
        Prime dimension.

    Returns
    -------
    families : list
        d-1 families; vector v of family k covers the cells (i, j),
        i.e. slots i·d + j, with i + k·j ≡ v (mod d).

    Raises
    ------
    UnsupportedDimensionError
        ``d`` is not prime.

    """
    if not is_prime(d):
        raise UnsupportedDimensionError("Linear Latin squares need a prime, got %s" % d)
    i, j = np.divmod(np.arange(d * d), d)
    families = []
    for k in range(1, d):
        square = (i + k * j) % d
        members = [IncidentVector(d, np.flatnonzero(square == v)) for v in range(d)]
        families.append(IncidentFamily(d, members, "mols k=%d" % k))
    return families


#
# Function families_are_compatible
#

def families_are_compatible(first, second):
    r"""Every cross pair of vectors meets in exactly one slot."""
    for u in first.members:
        for v in second.members:
            if len(set(u.support) & set(v.support)) != 1:
                return False
    return True


#
# Function fourier_phases
#

def fourier_phases(d):
    r"""Rows of the d-dimensional Fourier matrix as phase vectors."""
    r, c = np.meshgrid(np.arange(d), np.arange(d), indexing='ij')
    values = root_values(d, (r * c) % d)
    return [PhaseVector(values[x]) for x in range(d)]


#
# Function lift
#

def lift(h, v):
    r"""Place a phase vector onto the support of an incident vector.

    Parameters
    ----------
    h : mubpy.wocjan_beth.PhaseVector
        d phases.
    v : mubpy.wocjan_beth.IncidentVector
        Incident vector of the same d.

    Returns
    -------
    state : numpy.ndarray
        Unit vector of dimension d²; the k-th support slot in ascending
        order carries h_k/√d.

    Examples
    --------

    >>> lift(PhaseVector([1, -1]), IncidentVector(2, [0, 3]))
    # [0.7071, 0, 0, -0.7071]

    """
    if h.dim != v.dim:
        raise InvalidArgumentError("Phase vector of dim %d for incident vector of dim %d" %
                                   (h.dim, v.dim))
    state = np.zeros(v.dim * v.dim, dtype=complex)
    state[list(v.support)] = h.entries / math.sqrt(v.dim)
    return state


#
# Function _fourier_lift
#

def _fourier_lift(family):
    # exact basis of the Fourier-phase lifts of one family
    d = family.dim
    grid = np.full((d * d, d * d), ZERO, dtype=np.int64)
    for v, member in enumerate(family.members):
        for r in range(d):
            grid[list(member.support), v * d + r] = (r * np.arange(d)) % d
    return ExactBasis(grid, d, d, family.name)


#
# Function wocjan_beth_mubs
#

def wocjan_beth_mubs(d, phases=None):
    r"""Wocjan-Beth MUBs in dimension d² for prime d.

    Parameters
    ----------
    d : int
        Prime dimension.
    phases : list, optional
        d pairwise orthogonal ``PhaseVector`` objects; the rows of the
        Fourier matrix by default.

    Returns
    -------
    mubs : mubpy.matrix_core.MubSet
        One basis per family: rows, columns, then the Latin-square
        families. Column v·d + r of each basis is the lift of phase
        vector r onto member v.

    Raises
    ------
    InvalidArgumentError
        The phase vectors are not d pairwise orthogonal vectors.
    UnsupportedDimensionError
        ``d`` is not prime.

    """
    if not is_prime(d):
        raise UnsupportedDimensionError("Wocjan-Beth sets need a prime, got %s" % d)
    families = natural_families(d) + mols_families(d)
    logger.info("Constructing Wocjan-Beth set for d=%d from %d families", d, len(families))
    provenance = {'method': method_tag(Method.wocjan_beth), 'p': d}

    if phases is None:
        return MubSet([_fourier_lift(f) for f in families], provenance)

    phases = list(phases)
    if len(phases) != d or any(h.dim != d for h in phases):
        raise InvalidArgumentError("Need %d phase vectors of dim %d" % (d, d))
    h = np.array([x.entries for x in phases])
    gram = h.conj() @ h.T
    if np.max(np.abs(gram - d * np.eye(d))) > UNITARY_TOL * d:
        raise InvalidArgumentError("Phase vectors are not pairwise orthogonal")

    bases = []
    for family in families:
        columns = [lift(x, v) for v in family.members for x in phases]
        bases.append(Basis(np.column_stack(columns), family.name))
    return MubSet(bases, provenance)

################################################################################
#
# Package   : MubPy
# Module    : entanglement
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

from mubpy.globals import BasisClass
from mubpy.globals import HAAR_BATCH, MIN_HAAR_SAMPLES
from mubpy.globals import InvalidArgumentError
from mubpy.globals import NORM_TOL, PURITY_EPS
from mubpy.globals import StateClass
from mubpy.globals import XSEP

from collections import namedtuple
from joblib import delayed
from joblib import Parallel
from scipy.linalg import svdvals
import logging
import math
import numpy as np
import pandas as pd


#
# Initialize logger
#

logger = logging.getLogger(__name__)


#
# Class Bipartition
#

class Bipartition(object):
    """Split of a d_A·d_B dimensional space into subsystems A and B.

    Without an ``order``, global index i corresponds to the pair
    (i div d_B, i mod d_B). With an ``order``, position j of the
    reordered state is global index ``order[j]`` and position j maps
    to (j div d_B, j mod d_B).

    Parameters
    ----------
    d_a : int
        Dimension of subsystem A.
    d_b : int
        Dimension of subsystem B.
    order : array_like, optional
        Permutation of 0..d_A·d_B - 1 giving the embedding.
    tag : str, optional
        Name of a reordered split, such as ``2x2x2:1``.

    """

    # __init__

    def __init__(self, d_a, d_b, order=None, tag=None):
        if int(d_a) < 1 or int(d_b) < 1:
            raise InvalidArgumentError("Subsystem dimensions must be positive: %s x %s" %
                                       (d_a, d_b))
        self.d_a = int(d_a)
        self.d_b = int(d_b)
        if order is not None:
            order = np.asarray(order, dtype=np.int64)
            if not np.array_equal(np.sort(order), np.arange(self.dim)):
                raise InvalidArgumentError("Order is not a permutation of 0..%d" %
                                           (self.dim - 1))
            if np.array_equal(order, np.arange(self.dim)):
                order = None
        self.order = None if order is None else tuple(int(x) for x in order)
        self.tag = None if order is None else tag

    # __str__

    def __str__(self):
        if self.order is None:
            return "%dx%d" % (self.d_a, self.d_b)
        return self.tag or "%dx%d reordered" % (self.d_a, self.d_b)

    __repr__ = __str__

    def __eq__(self, other):
        if not isinstance(other, Bipartition):
            return NotImplemented
        return (self.d_a, self.d_b, self.order) == (other.d_a, other.d_b, other.order)

    def __hash__(self):
        return hash((self.d_a, self.d_b, self.order))

    @classmethod
    def from_factors(cls, factors, part_a):
        r"""Bipartition of a tensor product of several factors.

        Parameters
        ----------
        factors : sequence of int
            Dimensions of the factors, slowest index first.
        part_a : sequence of int
            Positions of the factors forming subsystem A; the other
            factors form B, both in their original order.

        Examples
        --------

        >>> Bipartition.from_factors((2, 2, 2), (1,))   # middle qubit vs the rest

        """
        factors = tuple(int(x) for x in factors)
        part_a = tuple(int(x) for x in part_a)
        if not factors or any(x < 1 for x in factors):
            raise InvalidArgumentError("Invalid factor dimensions %s" % (factors,))
        n = len(factors)
        if (not part_a or len(set(part_a)) != len(part_a) or len(part_a) == n
                or any(not 0 <= i < n for i in part_a)):
            raise InvalidArgumentError("Subsystem A %s is not a proper part of %d factors" %
                                       (part_a, n))
        rest = [i for i in range(n) if i not in part_a]
        dim = int(np.prod(factors))
        order = np.arange(dim).reshape(factors).transpose(list(part_a) + rest).reshape(-1)
        d_a = int(np.prod([factors[i] for i in part_a]))
        tag = "%s:%s" % (XSEP.join(str(x) for x in factors),
                         ','.join(str(i) for i in part_a))
        return cls(d_a, dim // d_a, order, tag)

    @property
    def dim(self):
        return self.d_a * self.d_b

    @property
    def d_min(self):
        return min(self.d_a, self.d_b)

    def embedding(self, index):
        position = index if self.order is None else self.order.index(index)
        return divmod(position, self.d_b)

    def coefficients(self, state):
        r"""The d_A×d_B coefficient matrix of a state."""
        state = np.asarray(state)
        if state.shape != (self.dim,):
            raise InvalidArgumentError("State of shape %s does not fit split %s" %
                                       (state.shape, self))
        if self.order is not None:
            state = state[list(self.order)]
        return state.reshape(self.d_a, self.d_b)


#
# Function as_bipartition
#

def as_bipartition(split):
    r"""Bipartition from a ``Bipartition``, a pair (d_A, d_B) or a
    pair (factors, part_a) as accepted by ``Bipartition.from_factors``.
    """
    if isinstance(split, Bipartition):
        return split
    first, second = split
    if isinstance(first, (list, tuple)):
        return Bipartition.from_factors(first, second)
    return Bipartition(first, second)


#
# Function _unit_coefficients
#

def _unit_coefficients(state, split):
    c = split.coefficients(state)
    norm = np.linalg.norm(c)
    if abs(norm - 1.0) > NORM_TOL:
        raise InvalidArgumentError("State norm %.12g is not 1" % norm)
    return c


#
# Function reduced_purity
#

def reduced_purity(state, split):
    r"""Purity Tr(ρ_A²) of the reduced state.

    Parameters
    ----------
    state : numpy.ndarray
        Unit vector of dimension d_A·d_B.
    split : Bipartition or tuple
        The bipartition.

    Returns
    -------
    purity : float
        Sum of the fourth powers of the Schmidt coefficients. The value
        is the same for either subsystem.

    Raises
    ------
    InvalidArgumentError
        The state is not a unit vector of the right dimension.

    Examples
    --------

    >>> bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
    >>> reduced_purity(bell, (2, 2))   # 0.5

    """
    split = as_bipartition(split)
    s = svdvals(_unit_coefficients(state, split))
    return float(np.sum(s ** 4))


#
# Function reduced_density
#

def reduced_density(state, split, side='A'):
    r"""Reduced density matrix of subsystem A or B.

    Raises
    ------
    InvalidArgumentError
        Unknown side or a non-unit state.

    """
    split = as_bipartition(split)
    c = _unit_coefficients(state, split)
    if side == 'A':
        return c @ c.conj().T
    if side == 'B':
        return c.T @ c.conj()
    raise InvalidArgumentError("Side must be A or B, got %s" % side)


#
# Function classify_purity
#

def classify_purity(purity, split, epsilon=PURITY_EPS):
    r"""Entanglement class of a state with the given purity."""
    split = as_bipartition(split)
    if purity >= 1.0 - epsilon:
        return StateClass.product
    if purity <= 1.0 / split.d_min + epsilon:
        return StateClass.maximal
    return StateClass.partial


#
# Function conservation_value
#

def conservation_value(split):
    r"""Total purity d_A·d_B·(d_A + d_B) of any complete set.

    Examples
    --------

    >>> conservation_value((3, 3))   # 54

    """
    split = as_bipartition(split)
    return split.d_a * split.d_b * (split.d_a + split.d_b)


#
# Function lubkin_purity
#

def lubkin_purity(split):
    r"""Haar average (d_A + d_B)/(d + 1) of the reduced purity."""
    split = as_bipartition(split)
    return (split.d_a + split.d_b) / (split.dim + 1)


#
# Function _check_dim
#

def _check_dim(mubset, split):
    if mubset.dim != split.dim:
        raise InvalidArgumentError("Split %s does not match dimension %d" %
                                   (split, mubset.dim))


#
# Function entanglement_sum
#

def entanglement_sum(mubset, split):
    r"""Total purity over every state of every basis in a set."""
    split = as_bipartition(split)
    _check_dim(mubset, split)
    total = 0.0
    for basis in mubset.numeric():
        total += sum(reduced_purity(v, split) for v in basis.states())
    return total


#
# Class EntanglementProfile
#

class EntanglementProfile(object):
    """Purities and entanglement classes of a basis set.

    Parameters
    ----------
    frame : pandas.DataFrame
        One row per state with columns ``basis``, ``state``,
        ``purity`` and ``state_class``.
    split : mubpy.entanglement.Bipartition
        The bipartition used.
    complete : bool
        Whether the analyzed set is complete.

    """

    # __init__

    def __init__(self, frame, split, complete):
        self.frame = frame
        self.split = split
        self.complete = complete

    # __str__

    def __str__(self):
        return "EntanglementProfile(%s: %d product, %d maximal, %d mixed)" % \
            (self.split, self.n_product, self.n_maximal, self.n_mixed)

    @property
    def basis_classes(self):
        r"""Class of each basis, in set order."""
        classes = {}
        for label, group in self.frame.groupby('basis', sort=False):
            kinds = set(group['state_class'])
            if kinds == {StateClass.product.name}:
                classes[label] = BasisClass.product
            elif kinds == {StateClass.maximal.name}:
                classes[label] = BasisClass.maximal
            else:
                classes[label] = BasisClass.mixed
        return classes

    def _count(self, kind):
        return sum(1 for x in self.basis_classes.values() if x == kind)

    @property
    def n_product(self):
        return self._count(BasisClass.product)

    @property
    def n_maximal(self):
        return self._count(BasisClass.maximal)

    @property
    def n_mixed(self):
        return self._count(BasisClass.mixed)

    @property
    def total(self):
        return float(self.frame['purity'].sum())

    @property
    def reference(self):
        return conservation_value(self.split)

    def summary(self):
        r"""Per-basis mean purity and class as a DataFrame."""
        table = self.frame.groupby('basis', sort=False)['purity'].agg(['mean', 'sum'])
        classes = self.basis_classes
        table['basis_class'] = [classes[x].name for x in table.index]
        return table.reset_index()

    @property
    def rest_maximal(self):
        r"""Whether d_min + 1 product bases leave only maximal bases.

        ``None`` when the set is incomplete or has fewer product bases.

        """
        if not self.complete or self.n_product < self.split.d_min + 1:
            return None
        return self.n_product + self.n_maximal == len(self.basis_classes)


#
# Function classify_set
#

def classify_set(mubset, split, epsilon=PURITY_EPS):
    r"""Purity profile of every state in a set.

    Parameters
    ----------
    mubset : mubpy.matrix_core.MubSet
        The bases.
    split : Bipartition or tuple
        The bipartition, matching the set dimension.
    epsilon : float
        Classification tolerance.

    Returns
    -------
    profile : mubpy.entanglement.EntanglementProfile
        Purity table and per-basis classes.

    Examples
    --------

    >>> p = classify_set(two_qudit_complete_set(3, 2), (3, 3))
    >>> p.n_product, p.n_maximal, p.n_mixed   # (4, 6, 0)

    """
    split = as_bipartition(split)
    _check_dim(mubset, split)
    rows = []
    for basis in mubset.numeric():
        for j, v in enumerate(basis.states()):
            purity = reduced_purity(v, split)
            rows.append((basis.label, j, purity,
                         classify_purity(purity, split, epsilon).name))
    frame = pd.DataFrame(rows, columns=['basis', 'state', 'purity', 'state_class'])
    profile = EntanglementProfile(frame, split, mubset.is_complete)
    logger.info("Split %s: %d product, %d maximal, %d mixed bases", split,
                profile.n_product, profile.n_maximal, profile.n_mixed)
    return profile


#
# Function purity_budget
#

def purity_budget(split, n_product):
    r"""Average purity left for the states outside the product bases.

    In a complete set with ``n_product`` product bases, the remaining
    (d + 1 - n_product)·d states share the conservation total minus
    n_product·d.

    Raises
    ------
    InvalidArgumentError
        ``n_product`` is outside 0..d.

    Examples
    --------

    >>> purity_budget((3, 3), 4)   # 1/3

    """
    split = as_bipartition(split)
    d = split.dim
    if not 0 <= n_product <= d:
        raise InvalidArgumentError("Product basis count %s outside 0..%d" % (n_product, d))
    return (conservation_value(split) - n_product * d) / ((d + 1 - n_product) * d)


#
# Function admissible_pattern
#

def admissible_pattern(split, n_product, n_maximal):
    r"""Test whether a complete set could hold the given basis classes.

    Product bases contribute d to the total, maximal bases d/d_min and
    each mixed basis strictly between the two. The pattern is
    admissible iff the conservation total can be met.

    """
    split = as_bipartition(split)
    d = split.dim
    n_mixed = d + 1 - n_product - n_maximal
    if n_product < 0 or n_maximal < 0 or n_mixed < 0:
        raise InvalidArgumentError("Pattern %d product + %d maximal exceeds %d bases" %
                                   (n_product, n_maximal, d + 1))
    low = d / split.d_min
    rest = conservation_value(split) - n_product * d - n_maximal * low
    if n_mixed == 0:
        return bool(abs(rest) < 1e-9)
    return bool(n_mixed * low < rest < n_mixed * d)


#
# Function _haar_batch
#

def _haar_batch(split, size, seed):
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((size, split.dim)) + 1j * rng.standard_normal((size, split.dim))
    z /= np.linalg.norm(z, axis=1, keepdims=True)
    s = np.linalg.svd(z.reshape(size, split.d_a, split.d_b), compute_uv=False)
    return np.sum(s ** 4, axis=1)


#
# Haar estimate
#

HaarEstimate = namedtuple('HaarEstimate', 'mean stderr samples')


#
# Function haar_average_purity
#

def haar_average_purity(split, samples, seed, n_jobs=1, batch_size=HAAR_BATCH):
    r"""Monte Carlo estimate of the Haar-average reduced purity.

    Parameters
    ----------
    split : Bipartition or tuple
        The bipartition.
    samples : int
        Number of random states, at least 100.
    seed : int
        Master seed. Batch seeds are spawned from it, so the estimate
        does not depend on ``n_jobs``.
    n_jobs : int
        Number of joblib workers.
    batch_size : int
        States per batch.

    Returns
    -------
    estimate : HaarEstimate
        Sample mean, its standard error and the sample count.

    Raises
    ------
    InvalidArgumentError
        Fewer than 100 samples.

    """
    split = as_bipartition(split)
    if samples < MIN_HAAR_SAMPLES:
        raise InvalidArgumentError("Need at least %d samples, got %s" %
                                   (MIN_HAAR_SAMPLES, samples))
    sizes = [batch_size] * (samples // batch_size)
    if samples % batch_size:
        sizes.append(samples % batch_size)
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))
    logger.info("Sampling %d Haar states for split %s in %d batches", samples, split,
                len(sizes))
    batches = Parallel(n_jobs=n_jobs)(delayed(_haar_batch)(split, n, s)
                                      for n, s in zip(sizes, seeds))
    values = np.concatenate(batches)
    stderr = float(np.std(values, ddof=1) / math.sqrt(samples))
    return HaarEstimate(float(np.mean(values)), stderr, samples)

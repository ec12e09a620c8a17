################################################################################
#
# Package   : MubPy
# Module    : product_structure
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
from mubpy.exact_field import prime_factors
from mubpy.globals import FACTOR_TOL, RAY_TOL, UNBIASED_TOL
from mubpy.globals import InvalidArgumentError
from mubpy.globals import Method
from mubpy.globals import ProductVerdict
from mubpy.globals import STANDARD_LABEL
from mubpy.globals import UnsupportedDimensionError
from mubpy.matrix_core import as_basis
from mubpy.matrix_core import Basis
from mubpy.matrix_core import ExactBasis
from mubpy.matrix_core import MubSet
from mubpy.matrix_core import tensor
from mubpy.matrix_core import unbiased_deviation
from mubpy.prime_mubs import complete_prime_set
from mubpy.prime_mubs import local_basis
from mubpy.prime_mubs import standard_basis
from mubpy.utilities import method_tag

from functools import reduce
from joblib import delayed
from joblib import Parallel
from scipy.stats import unitary_group
import itertools
import logging
import numpy as np


#
# Initialize logger
#

logger = logging.getLogger(__name__)


#
# Class ProductClassification
#

class ProductClassification(object):
    """Result of testing a basis for product structure.

    Attributes
    ----------
    verdict : mubpy.globals.ProductVerdict
        ``direct``, ``indirect`` or ``not_product``.
    local_states : list
        (a, b) factor pair per column when every column is a product
        state, otherwise ``None``.
    A : numpy.ndarray
        First-subsystem basis of a direct basis, else ``None``.
    B : numpy.ndarray
        Second-subsystem basis of a direct basis, else ``None``.
    column_order : numpy.ndarray
        For a direct basis, input column c is column ``column_order[c]``
        of A ⊗ B.
    residual : float
        Frobenius distance between the input and the reordered A ⊗ B.
        It includes phase mismatches, so it is zero only when A ⊗ B
        reproduces the input exactly.
    conditional_bases : list
        For an indirect basis whose first factors form a basis, the
        second-subsystem basis B(a) paired with each first factor a.

    """

    # __init__

    def __init__(self, verdict, local_states=None):
        self.verdict = verdict
        self.local_states = local_states
        self.A = None
        self.B = None
        self.column_order = None
        self.residual = None
        self.first_factors = None
        self.conditional_bases = None

    # __str__

    def __str__(self):
        return "ProductClassification(%s)" % self.verdict.name

    __repr__ = __str__


#
# Function _same_ray
#

def _same_ray(v, w):
    return abs(np.vdot(v, w)) ** 2 > 1.0 - RAY_TOL


#
# Function _factor_column
#

def _factor_column(column, d_a, d_b):
    # rank-one split of the coefficient matrix, or None when entangled
    u, s, vh = np.linalg.svd(column.reshape(d_a, d_b))
    if np.sum(s[1:] ** 2) > FACTOR_TOL:
        return None
    return u[:, 0], s[0] * vh[0, :]


#
# Function _find_ray
#

def _find_ray(vectors, v):
    for i, w in enumerate(vectors):
        if _same_ray(w / np.linalg.norm(w), v / np.linalg.norm(v)):
            return i
    return None


#
# Function _direct_factors
#

def _direct_factors(matrix, groups, d_a, d_b):
    r"""Extract A and B from product columns grouped by first factor.

    Returns ``None`` when the groups do not share one second-factor
    basis.

    """
    if len(groups) != d_a or any(len(g[1]) != d_b for g in groups):
        return None
    coeffs = [matrix[:, c].reshape(d_a, d_b) for c in range(matrix.shape[1])]
    a0 = groups[0][0]
    b_cols = [a0.conj() @ coeffs[c] for c in groups[0][1]]
    A = np.zeros((d_a, d_a), dtype=complex)
    order = np.zeros(matrix.shape[1], dtype=int)
    for g, (rep, members) in enumerate(groups):
        seen = set()
        for c in members:
            j = _find_ray(b_cols, rep.conj() @ coeffs[c])
            if j is None or j in seen:
                return None
            seen.add(j)
            order[c] = g * d_b + j
            if len(seen) == 1:
                A[:, g] = coeffs[c] @ b_cols[j].conj()
    B = np.column_stack(b_cols)
    recomposed = np.kron(A, B)[:, order]
    return A, B, order, float(np.linalg.norm(matrix - recomposed))


#
# Function classify_product_basis
#

def classify_product_basis(basis, d_a, d_b):
    r"""Decide whether a basis is a direct, indirect or non-product basis.

    Parameters
    ----------
    basis : Basis or ExactBasis
        Basis of dimension d_A·d_B.
    d_a : int
        First subsystem dimension.
    d_b : int
        Second subsystem dimension.

    Returns
    -------
    result : mubpy.product_structure.ProductClassification
        ``not_product`` when some column is entangled; ``direct`` when
        the product columns group by first-factor ray into d_A groups
        that share one second-factor basis up to phases; otherwise
        ``indirect``.

    Raises
    ------
    InvalidArgumentError
        The dimension is not d_A·d_B.

    Examples
    --------

    >>> classify_product_basis(standard_basis(4), 2, 2).verdict
    # ProductVerdict.direct

    """
    b = as_basis(basis)
    if b.dim != d_a * d_b:
        raise InvalidArgumentError("Basis of dim %d is not %d x %d" % (b.dim, d_a, d_b))

    factors = [_factor_column(b.column(c), d_a, d_b) for c in range(b.dim)]
    if any(f is None for f in factors):
        logger.debug("Basis %s has entangled columns", b.label)
        return ProductClassification(ProductVerdict.not_product)

    groups = []
    for c, (a, _) in enumerate(factors):
        for rep, members in groups:
            if _same_ray(rep, a):
                members.append(c)
                break
        else:
            groups.append((a, [c]))

    direct = _direct_factors(b.matrix, groups, d_a, d_b)
    if direct is not None:
        result = ProductClassification(ProductVerdict.direct, factors)
        result.A, result.B, result.column_order, result.residual = direct
        return result

    result = ProductClassification(ProductVerdict.indirect, factors)
    reps = np.column_stack([g[0] for g in groups])
    if len(groups) == d_a and np.allclose(reps.conj().T @ reps, np.eye(d_a), atol=FACTOR_TOL):
        result.first_factors = reps
        result.conditional_bases = []
        for rep, members in groups:
            cols = [rep.conj() @ b.column(c).reshape(d_a, d_b) for c in members]
            result.conditional_bases.append(np.column_stack(cols))
    return result


#
# Function product_mub_set
#

def product_mub_set(p_a, p_b):
    r"""Product MUBs for two prime subsystems.

    Parameters
    ----------
    p_a : int
        Prime dimension of the first subsystem.
    p_b : int
        Prime dimension of the second subsystem.

    Returns
    -------
    mubs : mubpy.matrix_core.MubSet
        min(p_A, p_B) + 1 bases: a_m ⊗ b_m for m = 0..min-1 with
        aligned indices, then standard ⊗ standard.

    Raises
    ------
    UnsupportedDimensionError
        A factor is not prime.

    Examples
    --------

    >>> product_mub_set(2, 3).labels   # ['a0b0', 'a1b1', 'standard']

    """
    if not is_prime(p_a) or not is_prime(p_b):
        raise UnsupportedDimensionError("Product sets need primes, got %s x %s" % (p_a, p_b))
    n = min(p_a, p_b)
    logger.info("Constructing %d product MUBs for %d x %d", n + 1, p_a, p_b)
    bases = [tensor(local_basis(p_a, m), local_basis(p_b, m), "a%db%d" % (m, m))
             for m in range(n)]
    bases.append(tensor(standard_basis(p_a), standard_basis(p_b), STANDARD_LABEL))
    return MubSet(bases, {'method': method_tag(Method.product), 'p': None,
                          'dA': p_a, 'dB': p_b})


#
# Function unbiased_product_pair_check
#

def unbiased_product_pair_check(a, a_prime, b, b_prime, tol=UNBIASED_TOL):
    r"""Test whether A ⊗ B and A′ ⊗ B′ are mutually unbiased."""
    first = tensor(a, b)
    second = tensor(a_prime, b_prime)
    return unbiased_deviation(first, second) < tol


#
# Function random_local_basis
#

def random_local_basis(d, rng, label=''):
    r"""Haar-random basis of dimension d.

    Parameters
    ----------
    d : int
        Dimension.
    rng : numpy.random.Generator
        Source of randomness.
    label : str, optional
        Label of the basis.

    """
    if d == 1:
        return Basis(np.ones((1, 1)), label)
    return Basis(unitary_group.rvs(d, random_state=rng), label)


#
# Function blocking_pair
#

def blocking_pair(p, r=2):
    r"""The standard basis and the chained indirect product basis.

    The chained basis has states |(j_1)_0⟩|(j_2)_{j_1}⟩...|(j_r)_{j_{r-1}}⟩,
    where (j)_m is state j of local basis m of the complete set in
    dimension p.

    Parameters
    ----------
    p : int
        Prime subsystem dimension.
    r : int
        Number of subsystems, at least 2.

    Returns
    -------
    mubs : mubpy.matrix_core.MubSet
        The standard basis followed by the basis labeled ``chained``.

    Raises
    ------
    UnsupportedDimensionError
        ``p`` is not prime.
    InvalidArgumentError
        ``r`` is less than 2.

    """
    if not is_prime(p):
        raise UnsupportedDimensionError("Blocking pairs need a prime, got %s" % p)
    if r < 2:
        raise InvalidArgumentError("Blocking pairs need r >= 2, got %s" % r)
    logger.info("Constructing blocking pair for p=%d, r=%d", p, r)

    locals_ = [local_basis(p, m) for m in range(p)]
    order = locals_[0].root_order
    d = p ** r
    grid = np.zeros((d, d), dtype=np.int64)
    for col, js in enumerate(itertools.product(range(p), repeat=r)):
        # first subsystem in basis 0, each later one in the basis named by its predecessor
        bases = [0] + [j % p for j in js[:-1]]
        vectors = [locals_[m].exponents[:, j] for m, j in zip(bases, js)]
        grid[:, col] = reduce(lambda x, y: np.add.outer(x, y).ravel(), vectors) % order
    chained = ExactBasis(grid, order, d, 'chained')
    standard = reduce(tensor, [standard_basis(p)] * r).relabel(STANDARD_LABEL)
    return MubSet([standard, chained], {'method': method_tag(Method.blocking_pair),
                                        'p': p, 'r': r})


#
# Function canonical_product_catalog
#

def canonical_product_catalog(local_dims):
    r"""All tensor products of the canonical local complete sets.

    Parameters
    ----------
    local_dims : list
        Prime subsystem dimensions.

    Returns
    -------
    catalog : list
        Π(d_j + 1) exact bases labeled like ``m=0 x standard``.

    Examples
    --------

    >>> len(canonical_product_catalog([2, 2]))   # 9

    """
    sets = [complete_prime_set(d).bases for d in local_dims]
    return [reduce(tensor, combo) for combo in itertools.product(*sets)]


#
# Function _extends
#

def _extends(candidate, bases, tol):
    return all(unbiased_deviation(candidate, b) < tol for b in bases)


#
# Class BlockingResult
#

class BlockingResult(object):
    """Outcome of a blockedness check.

    Attributes
    ----------
    blocked : bool
        No catalog basis is unbiased to the whole set.
    witness : Basis or ExactBasis
        The first catalog basis that extends the set, else ``None``.
    n_candidates : int
        Catalog size.

    """

    # __init__

    def __init__(self, blocked, witness, n_candidates):
        self.blocked = blocked
        self.witness = witness
        self.n_candidates = n_candidates

    def __bool__(self):
        return self.blocked

    # __str__

    def __str__(self):
        if self.blocked:
            return "blocked against %d candidates" % self.n_candidates
        return "extended by %s" % self.witness.label


#
# Function is_blocked
#

def is_blocked(mubset, catalog=None, local_dims=None, tol=UNBIASED_TOL, n_jobs=1):
    r"""Check whether a set admits no further basis from a catalog.

    Parameters
    ----------
    mubset : mubpy.matrix_core.MubSet
        The set to extend.
    catalog : list, optional
        Candidate bases; the canonical product catalog by default.
    local_dims : list, optional
        Subsystem dimensions of the default catalog, inferred from the
        prime factors of the dimension when omitted.
    tol : float
        Unbiasedness tolerance.
    n_jobs : int
        Number of joblib workers for the candidate scan.

    Returns
    -------
    result : mubpy.product_structure.BlockingResult
        Blocked iff no candidate is unbiased to every member.

    Notes
    -----
    The check is relative to the catalog: bases unbiased to a fixed
    basis form a continuum, so no finite scan settles blockedness in
    general.

    """
    if catalog is None:
        if local_dims is None:
            local_dims = prime_factors(mubset.dim)
        catalog = canonical_product_catalog(local_dims)
    catalog = list(catalog)
    if any(c.dim != mubset.dim for c in catalog):
        raise InvalidArgumentError("Catalog dimensions differ from %d" % mubset.dim)

    bases = mubset.numeric()
    flags = Parallel(n_jobs=n_jobs)(delayed(_extends)(as_basis(c), bases, tol)
                                    for c in catalog)
    for candidate, flag in zip(catalog, flags):
        if flag:
            logger.info("Set %s extended by %s", mubset.labels, candidate.label)
            return BlockingResult(False, candidate, len(catalog))
    logger.info("Set %s blocked against %d candidates", mubset.labels, len(catalog))
    return BlockingResult(True, None, len(catalog))


#
# Function product_mub_bound
#

def product_mub_bound(local_dims):
    r"""Upper bound on the number of product MUBs for a split.

    Parameters
    ----------
    local_dims : list
        Subsystem dimensions, each a prime power.

    Returns
    -------
    bound : int
        min_j (d_j + 1).

    Raises
    ------
    UnsupportedDimensionError
        Some d_j is not a prime power, so its MUB count is unknown.

    """
    counts = []
    for d in local_dims:
        factors = prime_factors(d)
        if not factors or len(set(factors)) != 1:
            raise UnsupportedDimensionError("No known MUB count for dimension %s" % d)
        counts.append(d + 1)
    return min(counts)

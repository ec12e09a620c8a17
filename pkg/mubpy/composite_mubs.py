################################################################################
#
# Package   : MubPy
# Module    : composite_mubs
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

from mubpy.exact_field import find_theta
from mubpy.exact_field import is_prime
from mubpy.exact_field import root_values
from mubpy.exact_field import valid_theta
from mubpy.globals import InvalidArgumentError
from mubpy.globals import InvalidThetaError
from mubpy.globals import Method
from mubpy.globals import STANDARD_LABEL
from mubpy.globals import UnsupportedDimensionError
from mubpy.matrix_core import apply_diagonal
from mubpy.matrix_core import MubSet
from mubpy.matrix_core import swap_subsystems
from mubpy.matrix_core import tensor
from mubpy.matrix_core import unbiased_deviation
from mubpy.prime_mubs import local_basis
from mubpy.prime_mubs import standard_basis
from mubpy.utilities import method_tag
from mubpy.weyl import phase_matrix
from mubpy.weyl import WeylLabel

import itertools
import logging
import numpy as np


#
# Initialize logger
#

logger = logging.getLogger(__name__)


#
# Class ControlPhaseGate
#

class ControlPhaseGate(object):
    """The t-th power of the two-qudit control-phase gate P_p.

    The gate is diagonal in the standard product basis and maps
    |s,t⟩ to α_p^{s·t·power}|s,t⟩; for p = 2 this is the controlled
    sign. Being diagonal it commutes with W ⊗ I and I ⊗ W.

    Parameters
    ----------
    p : int
        Prime dimension of each subsystem.
    power : int
        Power of the base gate, reduced modulo p.

    """

    # __init__

    def __init__(self, p, power=1):
        if not is_prime(p):
            raise UnsupportedDimensionError("Control phase needs a prime, got %s" % p)
        self.p = int(p)
        self.power = int(power) % self.p

    # __str__

    def __str__(self):
        return "P_%d^%d" % (self.p, self.power)

    @property
    def order(self):
        return self.p

    @property
    def exponents(self):
        s, t = np.divmod(np.arange(self.p * self.p), self.p)
        return (s * t * self.power) % self.p

    @property
    def matrix(self):
        return np.diag(root_values(self.order, self.exponents))

    def apply(self, basis, label=None):
        return apply_diagonal(self.exponents, self.order, basis, label)


#
# Class ThreeQubitGate
#

class ThreeQubitGate(object):
    """The entangling gate G_klm on three qubits.

    G_klm = ½(III + Z^k Z^l Z^m + Z^{1-k} Z^{1-l} Z^{1-m} - ZZZ) is
    diagonal with entries ±1; G_000 and G_111 are the identity.

    Parameters
    ----------
    k, l, m : int
        Bits selecting the gate.

    """

    # __init__

    def __init__(self, k, l, m):
        if any(x not in (0, 1) for x in (k, l, m)):
            raise InvalidArgumentError("Gate indices must be bits: %s" % ((k, l, m),))
        self.bits = (k, l, m)

    # __str__

    def __str__(self):
        return "G%d%d%d" % self.bits

    @property
    def order(self):
        return 2

    @property
    def exponents(self):
        k, l, m = self.bits
        signs = []
        for x, y, w in itertools.product((0, 1), repeat=3):
            value = (1 + (-1) ** (k * x + l * y + m * w)
                     + (-1) ** ((1 - k) * x + (1 - l) * y + (1 - m) * w)
                     - (-1) ** (x + y + w))
            # value is 2 or -2
            signs.append(0 if value > 0 else 1)
        return np.array(signs)

    @property
    def matrix(self):
        return np.diag(root_values(self.order, self.exponents))

    def apply(self, basis, label=None):
        return apply_diagonal(self.exponents, self.order, basis, label)


#
# Function control_phase
#

def control_phase(p, power=1):
    r"""Diagonal matrix of the control-phase gate P_p^power.

    Examples
    --------

    >>> control_phase(2)   # diag(1, 1, 1, -1)

    """
    return ControlPhaseGate(p, power).matrix


#
# Function control_phase_from_weyl
#

def control_phase_from_weyl(p, power=1):
    r"""Control-phase gate from its Z ⊗ Z expansion.

    Computes P_p = (1/p) Σ_{a,b} α_p^{-ab} Z^a ⊗ Z^b and raises it to
    ``power``. This is the slow reference form of ``control_phase``.

    """
    z = phase_matrix(p)
    gate = np.zeros((p * p, p * p), dtype=complex)
    for a in range(p):
        for b in range(p):
            phase = root_values(p, np.array([(-a * b) % p]))[0]
            gate += phase * np.kron(np.linalg.matrix_power(z, a),
                                    np.linalg.matrix_power(z, b))
    gate /= p
    return np.linalg.matrix_power(gate, power % p)


#
# Function control_phase_action
#

def control_phase_action(p, power, first, second):
    r"""Conjugate a two-qudit Weyl operator by P_p^power.

    Parameters
    ----------
    p : int
        Prime dimension of each subsystem.
    power : int
        Power t of the control-phase gate.
    first : mubpy.weyl.WeylLabel
        Operator X^{a1} Z^{b1} on the first subsystem.
    second : mubpy.weyl.WeylLabel
        Operator X^{a2} Z^{b2} on the second subsystem.

    Returns
    -------
    labels : tuple
        Labels of X^{a1} Z^{b1 + t·a2} and X^{a2} Z^{b2 + t·a1}; their
        tensor product equals the conjugated operator up to a phase.

    Examples
    --------

    >>> control_phase_action(2, 1, WeylLabel(2, 1, 0), WeylLabel(2, 0, 0))
    # (X^1 Z^0, X^0 Z^1), i.e. P_2 (σ_x ⊗ I) P_2 = σ_x ⊗ σ_z

    """
    if first.p != p or second.p != p:
        raise InvalidArgumentError("Weyl labels do not match p=%d" % p)
    return (WeylLabel(p, first.a, first.b + power * second.a),
            WeylLabel(p, second.a, second.b + power * first.a))


#
# Function two_qubit_complete_set
#

def two_qubit_complete_set():
    r"""Complete set of five MUBs for two qubits.

    Returns
    -------
    mubs : mubpy.matrix_core.MubSet
        {a0b0}, {a1b1}, the standard basis, P_2{a0b1} and P_2{a1b0}.
        The last two are swaps of each other.

    """
    logger.info("Constructing two-qubit complete set")
    gate = ControlPhaseGate(2, 1)
    bases = [tensor(local_basis(2, 0), local_basis(2, 0), 'a0b0'),
             tensor(local_basis(2, 1), local_basis(2, 1), 'a1b1'),
             tensor(standard_basis(2), standard_basis(2), STANDARD_LABEL),
             gate.apply(tensor(local_basis(2, 0), local_basis(2, 1)), 'P a0b1'),
             gate.apply(tensor(local_basis(2, 1), local_basis(2, 0)), 'P a1b0')]
    return MubSet(bases, {'method': method_tag(Method.two_qubit), 'p': 2})


#
# Function two_qudit_complete_set
#

def two_qudit_complete_set(p, theta=None):
    r"""Complete set of p²+1 MUBs for two qudits of odd prime dimension.

    Parameters
    ----------
    p : int
        Odd prime.
    theta : int, optional
        Control-phase exponent with 1 + θ² a non-residue mod p; the
        smallest valid θ is used when omitted.

    Returns
    -------
    mubs : mubpy.matrix_core.MubSet
        Bases P_p^{θν}{a_μ b_{μ+ν}} ordered by ν and then μ, followed
        by the standard basis. The ν = 0 bases and the standard basis
        are product, the others maximally entangled.

    Raises
    ------
    UnsupportedDimensionError
        ``p`` is 2 or not prime.
    InvalidThetaError
        ``theta`` leaves 1 + θ² a quadratic residue.

    """
    if p == 2:
        raise UnsupportedDimensionError("Use two_qubit_complete_set for p=2")
    if not is_prime(p):
        raise UnsupportedDimensionError("Dimension %s is not prime" % p)
    if theta is None:
        theta = find_theta(p)
    elif not valid_theta(theta, p):
        raise InvalidThetaError("1 + %d^2 is a quadratic residue mod %d" % (theta, p))
    logger.info("Constructing prime-squared complete set for p=%d, theta=%d", p, theta)

    bases = []
    for nu in range(p):
        gate = ControlPhaseGate(p, theta * nu)
        for mu in range(p):
            second = (mu + nu) % p
            product = tensor(local_basis(p, mu), local_basis(p, second))
            if nu == 0:
                bases.append(product.relabel("a%db%d" % (mu, mu)))
            else:
                label = "P^%d a%db%d" % (gate.power, mu, second)
                bases.append(gate.apply(product, label))
    bases.append(tensor(standard_basis(p), standard_basis(p), STANDARD_LABEL))
    return MubSet(bases, {'method': method_tag(Method.prime_squared), 'p': p,
                          'theta': int(theta)})


#
# Function three_qubit_set
#

def three_qubit_set():
    r"""Complete set of nine MUBs for three qubits.

    Returns
    -------
    mubs : mubpy.matrix_core.MubSet
        G_lmk{a_k b_l c_m} for (k, l, m) in lexicographic order,
        followed by the standard basis.

    Notes
    -----
    The gate bits are the local indices rotated by one place. Over
    GF(2) basis (k, l, m) has the symmetric form diag(k, l, m) plus the
    star graph of its gate, and two bases are unbiased iff the
    difference of their forms is invertible. G_klm on {a_k b_l c_m}
    itself leaves G000 and G001 biased.

    """
    logger.info("Constructing three-qubit complete set")
    bases = []
    for k, l, m in itertools.product((0, 1), repeat=3):
        gate = ThreeQubitGate(l, m, k)
        product = tensor(tensor(local_basis(2, k), local_basis(2, l)), local_basis(2, m))
        bases.append(gate.apply(product, "%s a%db%dc%d" % (gate, k, l, m)))
    standard = tensor(tensor(standard_basis(2), standard_basis(2)), standard_basis(2))
    bases.append(standard.relabel(STANDARD_LABEL))
    return MubSet(bases, {'method': method_tag(Method.three_qubit), 'p': 2})


#
# Function swap_partner_basis
#

def swap_partner_basis(basis, d_a, d_b, label=None):
    r"""Swap the subsystems of every state of a basis.

    Raises
    ------
    InvalidArgumentError
        The subsystems differ in dimension.

    """
    if d_a != d_b:
        raise InvalidArgumentError("Swap partners need equal subsystems, got %d x %d" %
                                   (d_a, d_b))
    swapped = swap_subsystems(basis, d_a, d_b)
    return swapped.relabel(basis.label if label is None else label)


#
# Function reduction_deviation
#

def reduction_deviation(p, theta):
    r"""Check the reduced unbiasedness conditions for U = P_p^θ.

    Parameters
    ----------
    p : int
        Odd prime.
    theta : int
        Control-phase exponent.

    Returns
    -------
    deviation : float
        Largest |overlap² - 1/p²| between {a_m b_m} (m = 0..p) and
        U^n{a_0 b_n} (n = 1..p-1). Zero up to rounding iff the
        conditions that imply a complete set hold.

    """
    deviation = 0.0
    for n in range(1, p):
        gate = ControlPhaseGate(p, theta * n)
        rotated = gate.apply(tensor(local_basis(p, 0), local_basis(p, n)))
        for m in range(p + 1):
            symmetric = tensor(local_basis(p, m), local_basis(p, m))
            deviation = max(deviation, unbiased_deviation(symmetric, rotated))
    logger.debug("Reduction deviation for p=%d, theta=%d: %g", p, theta, deviation)
    return deviation

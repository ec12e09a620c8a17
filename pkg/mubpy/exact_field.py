################################################################################
#
# Package   : MubPy
# Module    : exact_field
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

from mubpy.globals import InvalidArgumentError
from mubpy.globals import UnsupportedDimensionError
from mubpy.globals import ZERO

import logging
import math
import numpy as np


#
# Initialize logger
#

logger = logging.getLogger(__name__)


#
# Exact quarter turns
#

QUARTER_TURNS = np.array([1, 1j, -1, -1j], dtype=complex)


#
# Function is_prime
#

def is_prime(n):
    r"""Deterministic primality test by trial division.

    Parameters
    ----------
    n : int
        Candidate integer.

    Returns
    -------
    result : bool
        ``True`` if ``n`` is prime.

    Examples
    --------

    >>> is_prime(7)    # True
    >>> is_prime(9)    # False

    """
    n = int(n)
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


#
# Function prime_factors
#

def prime_factors(n):
    r"""Factor an integer into primes.

    Parameters
    ----------
    n : int
        Integer at least 1.

    Returns
    -------
    factors : list
        Prime factors in ascending order, with multiplicity.

    Raises
    ------
    InvalidArgumentError
        ``n`` is less than 1.

    Examples
    --------

    >>> prime_factors(12)   # [2, 2, 3]

    """
    n = int(n)
    if n < 1:
        raise InvalidArgumentError("Cannot factor %d" % n)
    factors = []
    f = 2
    while f * f <= n:
        while n % f == 0:
            factors.append(f)
            n //= f
        f += 1
    if n > 1:
        factors.append(n)
    return factors


#
# Function odd_primes
#

def odd_primes(n):
    r"""Get the first ``n`` odd primes with a sieve.

    Parameters
    ----------
    n : int
        Number of odd primes to return.

    Returns
    -------
    primes : numpy.ndarray
        The primes 3, 5, 7, ... in ascending order.

    Raises
    ------
    InvalidArgumentError
        ``n`` is less than 1.

    Notes
    -----
    The sieve bound starts from the Rosser estimate of the n-th prime
    and doubles until enough primes are found.

    """
    if n < 1:
        raise InvalidArgumentError("Number of primes must be positive: %d" % n)
    k = n + 1
    bound = max(16, int(k * (math.log(k) + math.log(math.log(k + 2)))) + 10)
    while True:
        sieve = np.ones(bound + 1, dtype=bool)
        sieve[:2] = False
        for f in range(2, int(math.isqrt(bound)) + 1):
            if sieve[f]:
                sieve[f * f::f] = False
        primes = np.flatnonzero(sieve)[1:]
        if len(primes) >= n:
            return primes[:n]
        bound *= 2


#
# Function root_value
#

def root_value(order, exponent):
    r"""Evaluate a root of unity.

    Parameters
    ----------
    order : int
        The order L of the primitive root α_L.
    exponent : int
        Any integer k; it is reduced modulo L.

    Returns
    -------
    value : complex
        exp(2πi·k/L). Quarter turns are returned exactly.

    Raises
    ------
    InvalidArgumentError
        ``order`` is less than 1.

    Examples
    --------

    >>> root_value(4, 1)   # 1j
    >>> root_value(3, 3)   # (1+0j)

    """
    if order < 1:
        raise InvalidArgumentError("Root order must be positive: %d" % order)
    k = exponent % order
    if (4 * k) % order == 0:
        return complex(QUARTER_TURNS[(4 * k) // order])
    return complex(np.exp(2j * np.pi * k / order))


#
# Function root_values
#

def root_values(order, exponents):
    r"""Evaluate a grid of root-of-unity exponents.

    Parameters
    ----------
    order : int
        The order L of the primitive root.
    exponents : array_like
        Integer exponents, with ``ZERO`` marking an exact zero entry.

    Returns
    -------
    values : numpy.ndarray
        Complex array of the same shape.

    """
    if order < 1:
        raise InvalidArgumentError("Root order must be positive: %d" % order)
    exponents = np.asarray(exponents, dtype=np.int64)
    zero = exponents == ZERO
    k = np.where(zero, 0, exponents) % order
    values = np.exp(2j * np.pi * k / order)
    quarter = (4 * k) % order == 0
    values[quarter] = QUARTER_TURNS[((4 * k) // order)[quarter] % 4]
    values[zero] = 0
    return values


#
# Class RootOfUnity
#

class RootOfUnity(object):
    """An exact root of unity α_L^k.

    Parameters
    ----------
    order : int
        The order L, at least 1.
    exponent : int
        The exponent k, stored reduced modulo L.

    Examples
    --------

    >>> RootOfUnity(3, 2) * RootOfUnity(3, 2)   # α_3^1

    """

    # __init__

    def __init__(self, order, exponent=1):
        if order < 1:
            raise InvalidArgumentError("Root order must be positive: %d" % order)
        self._order = int(order)
        self._exponent = int(exponent) % self._order

    @property
    def order(self):
        return self._order

    @property
    def exponent(self):
        return self._exponent

    @property
    def value(self):
        return root_value(self._order, self._exponent)

    def __mul__(self, other):
        if self._order == other.order:
            return RootOfUnity(self._order, self._exponent + other.exponent)
        lcm = math.lcm(self._order, other.order)
        k = self._exponent * (lcm // self._order) + other.exponent * (lcm // other.order)
        return RootOfUnity(lcm, k)

    def __pow__(self, n):
        return RootOfUnity(self._order, self._exponent * n)

    def __eq__(self, other):
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self._exponent * other.order == other.exponent * self._order

    def __hash__(self):
        g = math.gcd(self._exponent, self._order)
        return hash((self._exponent // g, self._order // g))

    def __complex__(self):
        return self.value

    # __str__

    def __str__(self):
        return "alpha_%d^%d" % (self._order, self._exponent)

    __repr__ = __str__


#
# Class PrimeField
#

class PrimeField(object):
    """Arithmetic in the prime field F_p.

    Elements are the integers 0..p-1.

    Parameters
    ----------
    modulus : int
        A prime p.

    Raises
    ------
    InvalidArgumentError
        ``modulus`` is not prime.

    """

    # __init__

    def __init__(self, modulus):
        if not is_prime(modulus):
            raise InvalidArgumentError("Field modulus %s is not prime" % modulus)
        self.modulus = int(modulus)

    # __str__

    def __str__(self):
        return "F_%d" % self.modulus

    def elements(self):
        return range(self.modulus)

    def add(self, x, y):
        return (x + y) % self.modulus

    def sub(self, x, y):
        return (x - y) % self.modulus

    def mul(self, x, y):
        return (x * y) % self.modulus

    def neg(self, x):
        return (-x) % self.modulus

    def inverse(self, x):
        r"""Multiplicative inverse by Fermat's little theorem.

        Raises
        ------
        InvalidArgumentError
            ``x`` is zero in the field.

        """
        if x % self.modulus == 0:
            raise InvalidArgumentError("Zero has no inverse in %s" % self)
        return pow(int(x), self.modulus - 2, self.modulus)

    def squares(self):
        return {(y * y) % self.modulus for y in self.elements()}


#
# Function _legendre_residue
#

def _legendre_residue(x, p):
    # Euler's criterion; p an odd prime or 2
    x %= p
    if x == 0 or p == 2:
        return True
    return pow(x, (p - 1) // 2, p) == 1


#
# Function is_quadratic_residue
#

def is_quadratic_residue(x, p):
    r"""Determine whether a field element has a square root.

    Parameters
    ----------
    x : int
        Field element; it is reduced modulo ``p``.
    p : int
        Prime modulus.

    Returns
    -------
    result : bool
        ``True`` iff y² ≡ x (mod p) for some y. Zero counts as a
        residue.

    Raises
    ------
    InvalidArgumentError
        ``p`` is not prime.

    Examples
    --------

    >>> is_quadratic_residue(2, 7)   # True
    >>> is_quadratic_residue(5, 7)   # False

    """
    if not is_prime(p):
        raise InvalidArgumentError("Modulus %s is not prime" % p)
    return _legendre_residue(int(x), int(p))


#
# Function valid_theta
#

def valid_theta(theta, p):
    r"""Check the non-residue condition on 1 + θ².

    Parameters
    ----------
    theta : int
        Candidate control-phase exponent.
    p : int
        Odd prime.

    Returns
    -------
    result : bool
        ``True`` iff (1 + θ²) mod p is a quadratic non-residue.

    """
    return not is_quadratic_residue((1 + theta * theta) % p, p)


#
# Function find_theta
#

def find_theta(p):
    r"""Find the smallest θ with 1 + θ² a quadratic non-residue mod p.

    Parameters
    ----------
    p : int
        Odd prime.

    Returns
    -------
    theta : int
        The smallest valid θ ≥ 1.

    Raises
    ------
    UnsupportedDimensionError
        ``p`` is 2; the two-qubit construction does not use θ.
    InvalidArgumentError
        ``p`` is not prime.

    Notes
    -----
    At most (p+1)/2 of the values 1 + θ² can be residues, so the
    search stops before θ reaches p. No closed form is known.

    Examples
    --------

    >>> find_theta(5)    # 1
    >>> find_theta(7)    # 2

    """
    if p == 2:
        raise UnsupportedDimensionError("No theta is defined for p=2")
    if not is_prime(p):
        raise InvalidArgumentError("%s is not prime" % p)
    for theta in range(1, p):
        if not _legendre_residue(1 + theta * theta, p):
            logger.debug("theta=%d for p=%d", theta, p)
            return theta
    raise InvalidArgumentError("No theta found for p=%d" % p)


#
# Function theta1_failing_primes
#

def theta1_failing_primes(n):
    r"""List the odd primes among the first ``n`` where θ=1 fails.

    θ=1 fails exactly when 2 = 1 + 1² is a quadratic residue.

    Parameters
    ----------
    n : int
        Number of odd primes to scan.

    Returns
    -------
    failures : list
        Failing primes in ascending order, starting 7, 17, 23.

    """
    return [int(p) for p in odd_primes(n) if _legendre_residue(2, int(p))]


#
# Function count_theta1_failures
#

def count_theta1_failures(n):
    r"""Count the first ``n`` odd primes for which θ=1 fails.

    Examples
    --------

    >>> count_theta1_failures(1000)    # 494
    >>> count_theta1_failures(10000)   # 4988

    """
    failures = theta1_failing_primes(n)
    logger.info("theta=1 fails for %d of the first %d odd primes", len(failures), n)
    return len(failures)

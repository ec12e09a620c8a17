################################################################################
#
# Package   : MubPy
# Module    : globals
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

from enum import Enum, unique


#
# Global Variables
#

#
# Delimiters
#

SSEP = '/'
USEP = '_'
XSEP = 'x'

#
# Numerical Constants
#

UNITARY_TOL = 1e-10
UNBIASED_TOL = 1e-9
RAY_TOL = 1e-9
FACTOR_TOL = 1e-9
NORM_TOL = 1e-8
PURITY_EPS = 1e-6
EXACT_TOL = 1e-9

MIN_HAAR_SAMPLES = 100
HAAR_BATCH = 10000
MOMENT_CHECK_DIM = 4

#
# Exact Entries
#

ZERO = -1
SCHEMA_VERSION = 1

#
# String Constants
#

STANDARD_LABEL = 'standard'
LOG_FILE = 'mubpy.log'
CONFIG_FILE = 'mubpy.yml'
MANIFEST_FILE = 'manifest.yml'


#
# Construction Methods
#

@unique
class Method(Enum):
    """MubPy Construction Methods.

    The command line spells these with hyphens, e.g. ``prime-squared``;
    see ``mubpy.utilities.valid_method``.

    """
    blocking_pair = 1
    prime = 2
    prime_squared = 3
    product = 4
    three_qubit = 5
    two_qubit = 6
    wocjan_beth = 7


#
# Product Verdicts
#

@unique
class ProductVerdict(Enum):
    """Product Basis Verdicts.

    A ``direct`` basis is a tensor product A ⊗ B of local bases, an
    ``indirect`` basis has only product states but the second factor
    depends on the first, and ``not_product`` has at least one
    entangled state.

    """
    direct = 1
    indirect = 2
    not_product = 3


#
# State Classes
#

@unique
class StateClass(Enum):
    """Entanglement Classes of a Pure State.

    """
    maximal = 1
    partial = 2
    product = 3


#
# Basis Classes
#

@unique
class BasisClass(Enum):
    """Entanglement Classes of a Basis.

    A basis is ``product`` or ``maximal`` when all of its states share
    that class, otherwise ``mixed``.

    """
    maximal = 1
    mixed = 2
    product = 3


#
# Export Formats
#

@unique
class ExportFormat(Enum):
    """Document Export Formats.

    """
    json = 1
    latex = 2
    text = 3


#
# Scale Tags
#

@unique
class Scale(Enum):
    """Basis Scale Tags used in documents.

    """
    inv_sqrt_d = 1
    unit = 2


#
# Class ExitCode
#

class ExitCode:
    """Command Line Exit Codes.

    Attributes
    ----------
    ok : int
        All requested checks passed.
    failed : int
        A check failed.
    usage : int
        Usage or document format error.
    unsupported : int
        Unsupported dimension.

    """
    ok = 0
    failed = 1
    usage = 2
    unsupported = 3


#
# Exceptions
#

class MubError(ValueError):
    """Base class for MubPy errors."""


class InvalidArgumentError(MubError):
    """An argument is outside the domain of the operation."""


class InvalidThetaError(InvalidArgumentError):
    """The control-phase exponent θ leaves 1 + θ² a quadratic residue."""


class UnsupportedDimensionError(InvalidArgumentError):
    """No construction exists for the requested dimension."""


class DocumentError(MubError):
    """A basis set document is unreadable or malformed."""

################################################################################
#
# Package   : MubPy
# Module    : utilities
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

from mubpy.globals import ExportFormat
from mubpy.globals import Method
from mubpy.globals import USEP, XSEP

import argparse
import logging
import math
import os
import re


#
# Initialize logger
#

logger = logging.getLogger(__name__)


#
# Function method_tag
#

def method_tag(method):
    r"""Command-line spelling of a construction method.

    Examples
    --------

    >>> method_tag(Method.prime_squared)   # 'prime-squared'

    """
    return method.name.replace(USEP, '-')


#
# Function valid_method
#

def valid_method(tag):
    r"""Parse a construction method for argparse.

    Raises
    ------
    argparse.ArgumentTypeError
        The method is unknown.

    """
    methods = {method_tag(x): x for x in Method}
    if tag in methods:
        return methods[tag]
    message = "Unknown method '{0}'; choose from {1}.".format(tag, sorted(methods))
    raise argparse.ArgumentTypeError(message)


#
# Function valid_format
#

def valid_format(tag):
    r"""Parse an export format for argparse."""
    formats = {x.name: x for x in ExportFormat}
    if tag in formats:
        return formats[tag]
    message = "Unknown format '{0}'; choose from {1}.".format(tag, sorted(formats))
    raise argparse.ArgumentTypeError(message)


#
# Function valid_split
#

def valid_split(split_string):
    r"""Parse a bipartition for argparse.

    Parameters
    ----------
    split_string : str
        Either ``d_A x d_B`` such as ``3x3`` or ``2 x 4``, or factor
        dimensions followed by the positions forming subsystem A, such
        as ``2x2x2:1`` for the middle qubit against the others.

    Returns
    -------
    split : tuple
        The pair (d_A, d_B), or the pair (factors, part_a) accepted by
        ``mubpy.entanglement.as_bipartition``.

    Raises
    ------
    argparse.ArgumentTypeError
        Not a valid split.

    Examples
    --------

    >>> valid_split('2x4')        # (2, 4)
    >>> valid_split('2x2x2:0,2')  # ((2, 2, 2), (0, 2))
    >>> valid_split('2by4')       # ArgumentTypeError

    """
    pattern = r"^\s*(\d+(?:\s*%s\s*\d+)+)\s*(?::\s*(\d+(?:\s*,\s*\d+)*))?\s*$" % XSEP
    match = re.match(pattern, split_string, re.IGNORECASE)
    if match:
        factors = tuple(int(x) for x in re.split(XSEP, match.group(1), flags=re.IGNORECASE))
        part = match.group(2)
        if all(x > 0 for x in factors):
            if part is None and len(factors) == 2:
                return factors
            if part is not None:
                part_a = tuple(int(x) for x in part.split(','))
                if (len(set(part_a)) == len(part_a) < len(factors)
                        and all(i < len(factors) for i in part_a)):
                    return factors, part_a
    message = "Not a valid split: '{0}'.".format(split_string)
    raise argparse.ArgumentTypeError(message)


#
# Function valid_tolerance
#

def valid_tolerance(tol_string):
    r"""Parse a positive tolerance for argparse."""
    try:
        tol = float(tol_string)
    except ValueError:
        tol = -1.0
    if tol > 0 and math.isfinite(tol):
        return tol
    message = "Not a valid tolerance: '{0}'.".format(tol_string)
    raise argparse.ArgumentTypeError(message)


#
# Function lcm_all
#

def lcm_all(values):
    r"""Least common multiple of a sequence of positive integers."""
    result = 1
    for v in values:
        result = math.lcm(result, int(v))
    return result


#
# Function package_path
#

def package_path(*parts):
    r"""Path of a file shipped inside the ``mubpy`` package."""
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), *parts)

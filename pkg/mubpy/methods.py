################################################################################
#
# Package   : MubPy
# Module    : methods
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

from mubpy.composite_mubs import three_qubit_set
from mubpy.composite_mubs import two_qubit_complete_set
from mubpy.composite_mubs import two_qudit_complete_set
from mubpy.globals import InvalidArgumentError
from mubpy.globals import Method
from mubpy.prime_mubs import complete_prime_set
from mubpy.product_structure import blocking_pair
from mubpy.product_structure import product_mub_set
from mubpy.utilities import method_tag
from mubpy.wocjan_beth import wocjan_beth_mubs

import logging


#
# Initialize logger
#

logger = logging.getLogger(__name__)


#
# Class Construction
#

class Construction:
    """Store information about each construction method.

    Parameters
    ----------
    method : enum Method
        The construction method.
    builder : function
        Function returning a ``MubSet``.
    required : tuple
        Names of the parameters the builder cannot do without.
    optional : tuple
        Names of the parameters passed only when given.

    """

    # __init__

    def __init__(self, method, builder, required=(), optional=()):
        self.method = method
        self.builder = builder
        self.required = required
        self.optional = optional

    # __str__

    def __str__(self):
        return method_tag(self.method)

    def build(self, params):
        r"""Call the builder with the parameters it takes.

        Raises
        ------
        InvalidArgumentError
            A required parameter is missing.

        """
        missing = [x for x in self.required if params.get(x) is None]
        if missing:
            raise InvalidArgumentError("Method %s needs %s" % (self, ', '.join(missing)))
        kwargs = {x: params[x] for x in self.required}
        kwargs.update({x: params[x] for x in self.optional if params.get(x) is not None})
        return self.builder(**kwargs)


#
# Define construction map
#

construction_map = {
    Method.blocking_pair : Construction(Method.blocking_pair, blocking_pair, ('p', 'r')),
    Method.prime         : Construction(Method.prime, complete_prime_set, ('p',)),
    Method.prime_squared : Construction(Method.prime_squared, two_qudit_complete_set,
                                        ('p',), ('theta',)),
    Method.product       : Construction(Method.product,
                                        lambda d_a, d_b: product_mub_set(d_a, d_b),
                                        ('d_a', 'd_b')),
    Method.three_qubit   : Construction(Method.three_qubit, three_qubit_set),
    Method.two_qubit     : Construction(Method.two_qubit, two_qubit_complete_set),
    Method.wocjan_beth   : Construction(Method.wocjan_beth,
                                        lambda p: wocjan_beth_mubs(p), ('p',))
}


#
# Function build_mub_set
#

def build_mub_set(method, p=None, theta=None, d_a=None, d_b=None, r=2):
    r"""Build a basis set with the named construction.

    Parameters
    ----------
    method : mubpy.globals.Method
        The construction.
    p : int, optional
        Prime (sub)system dimension for ``prime``, ``prime_squared``,
        ``wocjan_beth`` and ``blocking_pair``.
    theta : int, optional
        Control-phase exponent for ``prime_squared``.
    d_a : int, optional
        First factor for ``product``.
    d_b : int, optional
        Second factor for ``product``.
    r : int
        Subsystem count for ``blocking_pair``.

    Returns
    -------
    mubs : mubpy.matrix_core.MubSet
        The constructed set.

    Examples
    --------

    >>> build_mub_set(Method.prime, p=5).labels[-1]   # 'standard'

    """
    construction = construction_map[method]
    params = {'p': p, 'theta': theta, 'd_a': d_a, 'd_b': d_b, 'r': r}
    logger.info("Building with method %s", construction)
    return construction.build(params)

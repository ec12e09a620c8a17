################################################################################
#
# Package   : MubPy
# Module    : document
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

from mubpy.entanglement import lubkin_purity
from mubpy.globals import DocumentError
from mubpy.globals import InvalidArgumentError
from mubpy.globals import SCHEMA_VERSION, ZERO
from mubpy.globals import Scale
from mubpy.matrix_core import as_basis
from mubpy.matrix_core import Basis
from mubpy.matrix_core import ExactBasis
from mubpy.matrix_core import MubSet
from mubpy.utilities import lcm_all

import json
import logging
import math
import numpy as np


#
# Initialize logger
#

logger = logging.getLogger(__name__)


#
# Function _native
#

def _native(value):
    # json hook for numpy scalars
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError("Object of type %s is not JSON serializable" % type(value).__name__)


#
# Function _scale_tag
#

def _scale_tag(basis, dim):
    if basis.scale_sq == 1:
        return Scale.unit
    if basis.scale_sq == dim:
        return Scale.inv_sqrt_d
    return None


#
# Function mubset_to_document
#

def mubset_to_document(mubset):
    r"""Convert a basis set to a BasisSetDocument dictionary.

    Parameters
    ----------
    mubset : mubpy.matrix_core.MubSet
        The bases to store.

    Returns
    -------
    doc : dict
        Keys ``schema_version``, ``dim``, ``root_order``, ``provenance``
        and ``bases``. Exact bases with scale 1 or 1/√d store integer
        exponents (``null`` for zero) over the common root order;
        every other basis stores ``float_entries`` as [re, im] pairs.

    """
    dim = mubset.dim
    exact = [b for b in mubset if isinstance(b, ExactBasis) and _scale_tag(b, dim)]
    root_order = lcm_all([b.root_order for b in exact])
    bases = []
    for b in mubset:
        tag = _scale_tag(b, dim) if isinstance(b, ExactBasis) else None
        if tag is not None:
            lifted = b.lift(root_order)
            grid = [[None if x == ZERO else int(x) for x in row] for row in lifted.exponents]
            bases.append({'label': b.label, 'scale': tag.name, 'entries': grid})
        else:
            m = as_basis(b).matrix
            grid = [[[float(z.real), float(z.imag)] for z in row] for row in m]
            bases.append({'label': b.label, 'float_entries': grid})
    return {'schema_version': SCHEMA_VERSION,
            'dim': dim,
            'root_order': root_order,
            'provenance': dict(mubset.provenance),
            'bases': bases}


#
# Function _grid
#

def _grid(values, dim, label):
    if not isinstance(values, list) or len(values) != dim or \
            any(not isinstance(row, list) or len(row) != dim for row in values):
        raise DocumentError("Basis %s grid is not %d x %d" % (label, dim, dim))
    return values


#
# Function _read_basis
#

def _read_basis(item, dim, root_order):
    if not isinstance(item, dict):
        raise DocumentError("Basis entry must be a JSON object")
    label = item.get('label')
    if not isinstance(label, str):
        raise DocumentError("Basis label missing or not a string")
    has_exact = 'entries' in item
    if has_exact == ('float_entries' in item):
        raise DocumentError("Basis %s needs exactly one of entries, float_entries" % label)
    if has_exact:
        rows = _grid(item['entries'], dim, label)
        if any(x is not None and (not isinstance(x, int) or isinstance(x, bool))
               for row in rows for x in row):
            raise DocumentError("Basis %s has non-integer exponents" % label)
        try:
            scale = Scale[item.get('scale')]
        except KeyError:
            raise DocumentError("Basis %s has unknown scale %s" % (label, item.get('scale')))
        grid = [[ZERO if x is None else x % root_order for x in row] for row in rows]
        scale_sq = 1 if scale == Scale.unit else dim
        return ExactBasis(grid, root_order, scale_sq, label)
    rows = _grid(item['float_entries'], dim, label)
    try:
        pairs = np.array(rows, dtype=float)
    except (TypeError, ValueError):
        raise DocumentError("Basis %s has malformed float entries" % label)
    if pairs.shape != (dim, dim, 2):
        raise DocumentError("Basis %s float entries are not [re, im] pairs" % label)
    return Basis(pairs[..., 0] + 1j * pairs[..., 1], label)


#
# Function document_to_mubset
#

def document_to_mubset(doc):
    r"""Rebuild a basis set from a BasisSetDocument dictionary.

    Raises
    ------
    DocumentError
        The document is malformed or a stored basis is not unitary.

    """
    if not isinstance(doc, dict):
        raise DocumentError("Document must be a JSON object")
    if doc.get('schema_version') != SCHEMA_VERSION:
        raise DocumentError("Unsupported schema version %s" % doc.get('schema_version'))
    dim = doc.get('dim')
    root_order = doc.get('root_order')
    if not isinstance(dim, int) or dim < 1:
        raise DocumentError("Invalid dimension %s" % dim)
    if not isinstance(root_order, int) or root_order < 1:
        raise DocumentError("Invalid root order %s" % root_order)
    provenance = doc.get('provenance') or {}
    if not isinstance(provenance, dict):
        raise DocumentError("Provenance must be a JSON object, got %s" % provenance)
    items = doc.get('bases')
    if not isinstance(items, list) or not items:
        raise DocumentError("Document has no bases")
    try:
        bases = [_read_basis(x, dim, root_order) for x in items]
        return MubSet(bases, provenance)
    except (InvalidArgumentError, AttributeError, TypeError) as e:
        raise DocumentError("Invalid document: %s" % e)


#
# Function dump_document
#

def dump_document(doc):
    r"""Canonical JSON text: sorted keys, no spaces, trailing newline."""
    return json.dumps(doc, sort_keys=True, separators=(',', ':'), default=_native) + '\n'


#
# Function load_document
#

def load_document(path):
    r"""Read a JSON document into a dictionary.

    Raises
    ------
    DocumentError
        The file is unreadable or not JSON.

    """
    logger.info("Loading document from %s", path)
    try:
        with open(path, 'r') as f:
            return json.load(f)
    except (OSError, ValueError) as e:
        raise DocumentError("Cannot read %s: %s" % (path, e))


#
# Function read_document
#

def read_document(path):
    r"""Read a BasisSetDocument file into a ``MubSet``."""
    return document_to_mubset(load_document(path))


#
# Function write_document
#

def write_document(doc, path):
    r"""Write a document in canonical JSON."""
    logger.info("Writing document to %s", path)
    with open(path, 'w') as f:
        f.write(dump_document(doc))


#
# Function root_symbol
#

def root_symbol(order, exponent, latex=False):
    r"""Symbol of α_L^k in lowest terms.

    Examples
    --------

    >>> root_symbol(12, 3)    # 'i'
    >>> root_symbol(12, 8)    # 'α_3^2'
    >>> root_symbol(4, 2)     # '-1'

    """
    if exponent == ZERO:
        return '0'
    exponent %= order
    g = math.gcd(exponent, order)
    k, n = exponent // g, order // g
    if n == 1:
        return '1'
    if n == 2:
        return '-1'
    if n == 4:
        return 'i' if k == 1 else '-i'
    if latex:
        return "\\alpha_{%d}" % n if k == 1 else "\\alpha_{%d}^{%d}" % (n, k)
    return "α_%d" % n if k == 1 else "α_%d^%d" % (n, k)


#
# Function _float_symbol
#

def _float_symbol(z, precision):
    z = complex(z)
    if abs(z.imag) < 10 ** -precision:
        return "%.*g" % (precision, z.real)
    return "%.*g%+.*gi" % (precision, z.real, precision, z.imag)


#
# Function _symbols
#

def _symbols(basis, precision, latex=False):
    if isinstance(basis, ExactBasis):
        return [[root_symbol(basis.root_order, x, latex) for x in row]
                for row in basis.exponents]
    return [[_float_symbol(z, precision) for z in row] for row in basis.matrix]


#
# Function _prefix
#

def _prefix(basis, latex=False):
    if not isinstance(basis, ExactBasis) or basis.scale_sq == 1:
        return ''
    if latex:
        return "\\frac{1}{\\sqrt{%d}}" % basis.scale_sq
    return "1/√%d" % basis.scale_sq


#
# Function render_text
#

def render_text(mubset, precision=6):
    r"""Plain-text rendering of every basis.

    Each basis prints its label and scale, then one row per component
    with the states as columns, entries written as α_L^k symbols.

    """
    blocks = []
    for b in mubset:
        cells = _symbols(b, precision)
        width = max(len(x) for row in cells for x in row)
        prefix = _prefix(b)
        lines = ["%s = %s" % (b.label, prefix) if prefix else "%s =" % b.label]
        for row in cells:
            lines.append('  [ ' + '  '.join(x.rjust(width) for x in row) + ' ]')
        blocks.append('\n'.join(lines))
    header = "d = %d, %d bases" % (mubset.dim, len(mubset))
    return '\n\n'.join([header] + blocks) + '\n'


#
# Function render_latex
#

def render_latex(mubset, precision=6):
    r"""LaTeX arrays, one display per basis."""
    blocks = []
    for b in mubset:
        cells = _symbols(b, precision, latex=True)
        body = ' \\\\\n'.join(' & '.join(row) for row in cells)
        label = b.label.replace('^', '\\^{}').replace('_', '\\_')
        blocks.append("\\[\n\\mathrm{%s} = %s\\left(\\begin{array}{%s}\n%s\n\\end{array}\\right)\n\\]"
                      % (label, _prefix(b, latex=True), 'c' * mubset.dim, body))
    return '\n\n'.join(blocks) + '\n'


#
# Function analysis_document
#

def analysis_document(profile, design=None, haar=None):
    r"""Build an AnalysisDocument dictionary.

    Parameters
    ----------
    profile : mubpy.entanglement.EntanglementProfile
        Purity table of the analyzed set.
    design : mubpy.verification.DesignCheck, optional
        2-design check of the set.
    haar : mubpy.entanglement.HaarEstimate, optional
        Monte Carlo estimate of the Haar-average purity.

    Returns
    -------
    doc : dict
        Per-basis purities and classes, the total and the conservation
        reference, plus the optional design and Haar sections.

    """
    classes = profile.basis_classes
    bases = []
    for label, group in profile.frame.groupby('basis', sort=False):
        purities = [float(x) for x in group['purity']]
        bases.append({'label': label,
                      'class': classes[label].name,
                      'purities': purities,
                      'total': math.fsum(purities)})
    doc = {'split': str(profile.split),
           'bases': bases,
           'total': math.fsum(x['total'] for x in bases),
           'reference': profile.reference,
           'n_product': profile.n_product,
           'n_maximal': profile.n_maximal,
           'n_mixed': profile.n_mixed}
    if design is not None:
        doc['design'] = {'frame_potential': design.frame_potential,
                         'welch': design.welch,
                         'passed': bool(design.passed)}
    if haar is not None:
        doc['haar'] = {'mean': haar.mean,
                       'stderr': haar.stderr,
                       'samples': haar.samples,
                       'lubkin': lubkin_purity(profile.split)}
    return doc


#
# Function write_frame
#

def write_frame(df, path, precision=6):
    r"""Write a data frame as CSV."""
    logger.info("Writing table to %s", path)
    df.to_csv(path, index=False, float_format="%%.%dg" % precision)

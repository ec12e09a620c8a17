################################################################################
#
# Package   : MubPy
# Module    : verification
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

from mubpy.document import read_document
from mubpy.entanglement import classify_set
from mubpy.globals import DocumentError
from mubpy.globals import InvalidArgumentError
from mubpy.globals import MANIFEST_FILE, MOMENT_CHECK_DIM, UNBIASED_TOL, UNITARY_TOL
from mubpy.matrix_core import as_basis
from mubpy.matrix_core import ExactBasis
from mubpy.matrix_core import overlap_matrix
from mubpy.matrix_core import swap_permutation
from mubpy.methods import build_mub_set
from mubpy.utilities import package_path
from mubpy.utilities import valid_method

from joblib import delayed
from joblib import Parallel
import itertools
import logging
import numpy as np
import os
import pandas as pd
import yaml


#
# Initialize logger
#

logger = logging.getLogger(__name__)


#
# Class PairCheck
#

class PairCheck(object):
    """Unbiasedness verdict for one pair of bases.

    Attributes
    ----------
    first, second : str
        Basis labels.
    deviation : float
        Largest |overlap² - 1/d| over all state pairs.
    passed : bool
        ``deviation < tol``.
    witness : tuple
        (i, j, overlap²) of the worst state pair.

    """

    # __init__

    def __init__(self, first, second, deviation, passed, witness):
        self.first = first
        self.second = second
        self.deviation = deviation
        self.passed = passed
        self.witness = witness

    # __str__

    def __str__(self):
        verdict = 'unbiased' if self.passed else 'biased'
        return "%s / %s: %s (deviation %.3g)" % (self.first, self.second, verdict,
                                                 self.deviation)

    def __bool__(self):
        return self.passed


#
# Function check_unbiased_pair
#

def check_unbiased_pair(first, second, tol=UNBIASED_TOL):
    r"""Test two bases for mutual unbiasedness.

    Parameters
    ----------
    first : Basis or ExactBasis
        First basis.
    second : Basis or ExactBasis
        Second basis of the same dimension.
    tol : float
        Tolerance on |overlap² - 1/d|.

    Returns
    -------
    check : mubpy.verification.PairCheck
        Verdict, deviation and the worst state pair.

    Raises
    ------
    InvalidArgumentError
        The dimensions differ.

    """
    overlaps = overlap_matrix(first, second)
    gaps = np.abs(overlaps - 1.0 / overlaps.shape[0])
    i, j = np.unravel_index(np.argmax(gaps), gaps.shape)
    deviation = float(gaps[i, j])
    return PairCheck(first.label, second.label, deviation, deviation < tol,
                     (int(i), int(j), float(overlaps[i, j])))


#
# Function orthonormality_residual
#

def orthonormality_residual(basis):
    r"""Largest entry of |B†B - I|."""
    m = as_basis(basis).matrix
    return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))


#
# Class VerificationReport
#

class VerificationReport(object):
    """Pairwise verdicts for a basis set.

    Parameters
    ----------
    pairs : pandas.DataFrame
        One row per basis pair with columns ``first``, ``second``,
        ``deviation``, ``passed``, ``row``, ``column`` and ``overlap``.
    residuals : dict
        Orthonormality residual per basis label.
    dim : int
        Dimension of the set.
    n_bases : int
        Number of bases.
    tol : float
        Unbiasedness tolerance used.
    unitary_tol : float
        Bound on the orthonormality residuals.

    """

    # __init__

    def __init__(self, pairs, residuals, dim, n_bases, tol, unitary_tol=UNITARY_TOL):
        self.pairs = pairs
        self.residuals = residuals
        self.dim = dim
        self.n_bases = n_bases
        self.tol = tol
        self.unitary_tol = unitary_tol

    # __str__

    def __str__(self):
        return "VerificationReport(d=%d, %d bases, passed=%s)" % (self.dim, self.n_bases,
                                                                  self.passed)

    @property
    def orthonormal(self):
        return all(x < self.unitary_tol for x in self.residuals.values())

    @property
    def passed(self):
        return self.orthonormal and bool(self.pairs['passed'].all())

    @property
    def complete(self):
        return self.n_bases == self.dim + 1

    @property
    def max_deviation(self):
        if self.pairs.empty:
            return 0.0
        return float(self.pairs['deviation'].max())

    @property
    def failures(self):
        return self.pairs[~self.pairs['passed'].astype(bool)]

    def summary(self):
        r"""Text summary with one line per failing pair."""
        lines = ["dimension %d, %d bases (%s), %d pairs" %
                 (self.dim, self.n_bases, 'complete' if self.complete else 'incomplete',
                  len(self.pairs)),
                 "max deviation %.3e, tolerance %.1e" % (self.max_deviation, self.tol)]
        for label, residual in self.residuals.items():
            if residual >= self.unitary_tol:
                lines.append("basis %s not orthonormal: residual %.3e" % (label, residual))
        for row in self.failures.itertuples():
            lines.append("pair %s / %s biased: states %d, %d overlap^2 %.6g" %
                         (row.first, row.second, row.row, row.column, row.overlap))
        lines.append("PASS" if self.passed else "FAIL")
        return '\n'.join(lines)

    def to_dict(self):
        return {'dim': self.dim,
                'n_bases': self.n_bases,
                'complete': self.complete,
                'passed': self.passed,
                'tolerance': self.tol,
                'unitary_tolerance': self.unitary_tol,
                'max_deviation': self.max_deviation,
                'residuals': dict(self.residuals),
                'pairs': self.pairs.to_dict(orient='records')}


#
# Function _pair_row
#

def _pair_row(first, second, tol):
    check = check_unbiased_pair(first, second, tol)
    row, column, overlap = check.witness
    logger.debug("%s", check)
    return (check.first, check.second, check.deviation, check.passed, row, column, overlap)


#
# Function check_mub_set
#

def check_mub_set(mubset, tol=UNBIASED_TOL, n_jobs=1, unitary_tol=UNITARY_TOL):
    r"""Verify orthonormality and pairwise unbiasedness of a set.

    Parameters
    ----------
    mubset : mubpy.matrix_core.MubSet
        The set to check.
    tol : float
        Tolerance on every deviation.
    n_jobs : int
        Number of joblib workers for the pair sweep.
    unitary_tol : float
        Bound on every orthonormality residual.

    Returns
    -------
    report : mubpy.verification.VerificationReport
        Pair table, residuals and the completeness flag.

    """
    bases = mubset.numeric()
    residuals = {b.label: orthonormality_residual(b) for b in bases}
    rows = Parallel(n_jobs=n_jobs)(delayed(_pair_row)(a, b, tol)
                                   for a, b in itertools.combinations(bases, 2))
    columns = ['first', 'second', 'deviation', 'passed', 'row', 'column', 'overlap']
    pairs = pd.DataFrame(rows, columns=columns)
    report = VerificationReport(pairs, residuals, mubset.dim, len(bases), tol, unitary_tol)
    logger.info("Checked %d pairs in d=%d: %s", len(pairs), mubset.dim,
                'pass' if report.passed else 'fail')
    return report


#
# Function frame_potential
#

def frame_potential(states):
    r"""Sum of |⟨ψ_i|ψ_j⟩|⁴ over all ordered pairs of columns."""
    states = np.asarray(states)
    gram = states.conj().T @ states
    return float(np.sum(np.abs(gram) ** 4))


#
# Function welch_value
#

def welch_value(n, d):
    r"""Frame potential 2N²/(d(d+1)) of N states forming a 2-design.

    Examples
    --------

    >>> welch_value(6, 2)   # 12.0

    """
    return 2.0 * n * n / (d * (d + 1))


#
# Function design_moment_deviation
#

def design_moment_deviation(mubset):
    r"""Distance of the second moment of a set from the Haar moment.

    Returns
    -------
    deviation : float
        max |M - (I + SWAP)/(d(d+1))| where M is the average of
        |ψ⟩⟨ψ|⊗|ψ⟩⟨ψ| over the N states of the set.

    """
    states = mubset.states()
    d, n = states.shape
    k = np.einsum('in,jn->ijn', states, states).reshape(d * d, n)
    moment = k @ k.conj().T / n
    swap = np.eye(d * d)[swap_permutation(d, d)]
    target = (np.eye(d * d) + swap) / (d * (d + 1))
    return float(np.max(np.abs(moment - target)))


#
# Class DesignCheck
#

class DesignCheck(object):
    """2-design verdict of a set.

    Attributes
    ----------
    passed : bool
        The frame potential meets the Welch value within tolerance.
    frame_potential : float
        Computed frame potential.
    welch : float
        2-design reference value.
    moment_deviation : float
        Slow-path moment distance, ``None`` when not run.

    """

    # __init__

    def __init__(self, passed, frame_potential, welch, moment_deviation=None):
        self.passed = passed
        self.frame_potential = frame_potential
        self.welch = welch
        self.moment_deviation = moment_deviation

    def __bool__(self):
        return self.passed

    # __str__

    def __str__(self):
        return "frame potential %.12g vs %.12g: %s" % (self.frame_potential, self.welch,
                                                       'PASS' if self.passed else 'FAIL')


#
# Function check_2design
#

def check_2design(mubset, tol=UNBIASED_TOL, cross_check=True):
    r"""Test whether the states of a set form a 2-design.

    Parameters
    ----------
    mubset : mubpy.matrix_core.MubSet
        The set to check.
    tol : float
        Relative tolerance: |F - W| ≤ tol·max(1, W).
    cross_check : bool
        Also compare the second-moment operator when d ≤ 4.

    Returns
    -------
    check : mubpy.verification.DesignCheck
        Verdict with both values.

    """
    states = mubset.states()
    d, n = states.shape
    fp = frame_potential(states)
    welch = welch_value(n, d)
    passed = abs(fp - welch) <= tol * max(1.0, welch)
    moment = None
    if cross_check and d <= MOMENT_CHECK_DIM:
        moment = design_moment_deviation(mubset)
        if passed != (moment < tol):
            logger.warning("Frame potential and moment checks disagree for d=%d", d)
        passed = passed and moment < tol
    logger.info("2-design check for d=%d: F=%.12g, W=%.12g", d, fp, welch)
    return DesignCheck(passed, fp, welch, moment)


#
# Class FixtureReport
#

class FixtureReport(object):
    """Outcome of the fixture suite.

    The ``results`` frame has columns ``name``, ``dim``, ``mode``,
    ``status`` (pass, fail or skip) and ``reason``.

    """

    # __init__

    def __init__(self, results):
        self.results = results

    # __str__

    def __str__(self):
        counts = self.results['status'].value_counts().to_dict()
        return "FixtureReport(%s)" % ', '.join("%s=%d" % x for x in sorted(counts.items()))

    @property
    def passed(self):
        return not (self.results['status'] == 'fail').any()

    def status(self, name):
        return self.results.set_index('name').loc[name, 'status']


#
# Function _construct
#

def _construct(entry):
    params = dict(entry.get('params') or {})
    return build_mub_set(valid_method(entry['method']), **params)


#
# Function _check_exact
#

def _check_exact(entry, path):
    fixture = read_document(path)
    built = _construct(entry)
    for table_label, label in entry['labels'].items():
        expected = fixture.basis(table_label)
        actual = built.basis(label)
        if not isinstance(actual, ExactBasis) or not expected.same_entries(actual):
            return 'fail', "%s differs from %s" % (table_label, label)
    report = check_mub_set(fixture)
    if not report.passed:
        return 'fail', "fixture bases are not mutually unbiased"
    return 'pass', "%d bases match" % len(entry['labels'])


#
# Function _check_properties
#

def _check_properties(entry):
    built = _construct(entry)
    report = check_mub_set(built)
    if not report.passed:
        return 'fail', "constructed set is not mutually unbiased"
    if entry.get('complete') and not report.complete:
        return 'fail', "constructed set is incomplete"
    for split in entry.get('splits', []):
        profile = classify_set(built, split['split'])
        found = (profile.n_product, profile.n_maximal)
        wanted = (split['n_product'], split['n_maximal'])
        if found != wanted:
            return 'fail', "split %s has %s product/maximal bases, expected %s" % \
                (split['split'], found, wanted)
    return 'pass', "properties hold"


#
# Function run_fixture_suite
#

def run_fixture_suite(fixture_dir=None):
    r"""Compare the constructions with the shipped reference fixtures.

    Parameters
    ----------
    fixture_dir : str, optional
        Directory holding ``manifest.yml`` and the fixture files; the
        packaged fixtures by default.

    Returns
    -------
    report : mubpy.verification.FixtureReport
        One row per manifest entry. Entries in ``exact`` mode compare
        the mapped bases entry by entry; ``properties`` entries check
        unbiasedness and the product/maximal counts per split. A
        missing fixture file is a skip with its reason.

    Raises
    ------
    DocumentError
        The manifest is missing or malformed.

    """
    if fixture_dir is None:
        fixture_dir = package_path('fixtures')
    manifest_path = os.path.join(fixture_dir, MANIFEST_FILE)
    try:
        with open(manifest_path, 'r') as ymlfile:
            manifest = yaml.load(ymlfile, Loader=yaml.FullLoader)
        entries = manifest['fixtures']
    except (OSError, yaml.YAMLError, KeyError, TypeError) as e:
        raise DocumentError("Cannot read fixture manifest %s: %s" % (manifest_path, e))

    rows = []
    for entry in entries:
        mode = entry.get('mode', 'exact')
        name = entry['name']
        try:
            if mode == 'exact':
                path = os.path.join(fixture_dir, entry['file'])
                if not os.path.exists(path):
                    status, reason = 'skip', "missing fixture file %s" % entry['file']
                else:
                    status, reason = _check_exact(entry, path)
            elif mode == 'properties':
                status, reason = _check_properties(entry)
            else:
                raise DocumentError("Unknown fixture mode %s" % mode)
        except (DocumentError, InvalidArgumentError, KeyError) as e:
            status, reason = 'fail', str(e)
        logger.info("Fixture %s (d=%s): %s, %s", name, entry.get('dim'), status, reason)
        rows.append((name, entry.get('dim'), mode, status, reason))
    frame = pd.DataFrame(rows, columns=['name', 'dim', 'mode', 'status', 'reason'])
    return FixtureReport(frame)

################################################################################
#
# Package   : MubPy
# Module    : __main__
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

from mubpy.document import analysis_document
from mubpy.document import dump_document
from mubpy.document import mubset_to_document
from mubpy.document import read_document
from mubpy.document import render_latex
from mubpy.document import render_text
from mubpy.document import write_frame
from mubpy.entanglement import classify_set
from mubpy.entanglement import haar_average_purity
from mubpy.globals import CONFIG_FILE, LOG_FILE, SSEP
from mubpy.globals import DocumentError
from mubpy.globals import ExitCode
from mubpy.globals import ExportFormat
from mubpy.globals import InvalidArgumentError
from mubpy.globals import UnsupportedDimensionError
from mubpy.methods import build_mub_set
from mubpy.utilities import package_path
from mubpy.utilities import valid_format
from mubpy.utilities import valid_method
from mubpy.utilities import valid_split
from mubpy.utilities import valid_tolerance
from mubpy.verification import check_2design
from mubpy.verification import check_mub_set
from mubpy.verification import run_fixture_suite

import argparse
import logging
import os
import sys
import yaml


#
# Initialize logger
#

logger = logging.getLogger(__name__)


#
# Function get_mub_config
#

def get_mub_config(config_path=None):
    r"""Read in the configuration file for MubPy.

    Parameters
    ----------
    config_path : str, optional
        Explicit configuration file. Otherwise ``config/mubpy.yml`` in
        the working directory is used when present, then the packaged
        default.

    Returns
    -------
    specs : dict
        The parameters for controlling MubPy.

    Raises
    ------
    ValueError
        Unrecognized value of a ``mubpy.yml`` field.

    """

    logger.info("MubPy Configuration")

    # Locate the configuration file

    if config_path is None:
        local_path = SSEP.join(['config', CONFIG_FILE])
        if os.path.exists(local_path):
            config_path = local_path
        else:
            config_path = package_path('config', CONFIG_FILE)

    with open(config_path, 'r') as ymlfile:
        cfg = yaml.load(ymlfile, Loader=yaml.FullLoader)

    # Store configuration parameters in dictionary

    specs = {}
    specs['config_path'] = config_path

    # Section: verification

    specs['tolerance'] = float(cfg['verification']['tolerance'])
    specs['unitary_tolerance'] = float(cfg['verification']['unitary_tolerance'])
    specs['n_jobs'] = int(cfg['verification']['n_jobs'])
    specs['design_cross_check'] = bool(cfg['verification']['design_cross_check'])

    # Section: entanglement

    specs['epsilon'] = float(cfg['entanglement']['epsilon'])
    specs['haar_samples'] = int(cfg['entanglement']['haar_samples'])
    specs['haar_batch'] = int(cfg['entanglement']['haar_batch'])

    # Section: fixtures

    specs['fixture_dir'] = cfg['fixtures']['directory']

    # Section: output

    formats = {x.name: x for x in ExportFormat}
    output_format = cfg['output']['format']
    if output_format in formats:
        specs['format'] = formats[output_format]
    else:
        raise ValueError("mubpy.yml output:format %s unrecognized" % output_format)
    specs['precision'] = int(cfg['output']['precision'])

    # Log the configuration parameters

    logger.info('MUBPY PARAMETERS:')
    for key in sorted(specs):
        logger.info('%s = %s', key, specs[key])

    return specs


#
# Function emit
#

def emit(text, out=None):
    r"""Write command output to a file or to standard output."""
    if out:
        logger.info("Writing output to %s", out)
        with open(out, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


#
# Function cmd_generate
#

def cmd_generate(args, specs):
    r"""Construct a basis set and write its document."""
    if args.method is None:
        raise InvalidArgumentError("generate needs --method")
    if args.tol is not None:
        raise InvalidArgumentError("generate does not take --tol")
    mubset = build_mub_set(args.method, p=args.p, theta=args.theta, d_a=args.d_a,
                           d_b=args.d_b, r=args.r)
    doc = mubset_to_document(mubset)
    if args.seed is not None:
        doc['provenance']['seed'] = args.seed
    emit(dump_document(doc), args.out)
    logger.info("Generated %d bases in dimension %d", len(mubset), mubset.dim)
    return ExitCode.ok


#
# Function cmd_verify
#

def cmd_verify(args, specs):
    r"""Check a document for unbiasedness, completeness and the design property."""
    mubset = read_document(args.input)
    tol = args.tol or specs['tolerance']
    report = check_mub_set(mubset, tol, specs['n_jobs'], specs['unitary_tolerance'])
    passed = report.passed
    design = None
    if args.complete:
        passed = passed and report.complete
    if args.design:
        design = check_2design(mubset, tol, specs['design_cross_check'])
        passed = passed and design.passed

    if args.format == ExportFormat.json:
        result = report.to_dict()
        result['verdict'] = passed
        if design is not None:
            result['design'] = {'frame_potential': design.frame_potential,
                                'welch': design.welch,
                                'passed': design.passed}
        emit(dump_document(result), args.out)
    else:
        lines = [report.summary()]
        if args.complete and not report.complete:
            lines.append("INCOMPLETE: %d of %d bases" % (report.n_bases, report.dim + 1))
        if design is not None:
            lines.append(str(design))
        lines.append("VERDICT: %s" % ('PASS' if passed else 'FAIL'))
        emit('\n'.join(lines) + '\n', args.out)
    return ExitCode.ok if passed else ExitCode.failed


#
# Function cmd_analyze
#

def cmd_analyze(args, specs):
    r"""Purity analysis of a document for one bipartition."""
    if args.split is None:
        raise InvalidArgumentError("analyze needs --split")
    mubset = read_document(args.input)
    profile = classify_set(mubset, args.split, specs['epsilon'])
    design = check_2design(mubset, args.tol or specs['tolerance'],
                           specs['design_cross_check'])
    haar = None
    if args.seed is not None:
        haar = haar_average_purity(args.split, specs['haar_samples'], args.seed,
                                   specs['n_jobs'], specs['haar_batch'])
    doc = analysis_document(profile, design, haar)
    if args.table:
        write_frame(profile.frame, args.table, specs['precision'])
    sys.stdout.write("split %s: total purity %.*f vs reference %d\n" %
                     (profile.split, specs['precision'], doc['total'], doc['reference']))
    emit(dump_document(doc), args.out)
    return ExitCode.ok


#
# Function cmd_export
#

def cmd_export(args, specs):
    r"""Render a document as canonical JSON, text or LaTeX."""
    mubset = read_document(args.input)
    export_format = args.format or specs['format']
    if export_format == ExportFormat.json:
        text = dump_document(mubset_to_document(mubset))
    elif export_format == ExportFormat.text:
        text = render_text(mubset, specs['precision'])
    else:
        text = render_latex(mubset, specs['precision'])
    emit(text, args.out)
    return ExitCode.ok


#
# Function cmd_fixtures
#

def cmd_fixtures(args, specs):
    r"""Run the reference fixture suite and print one line per fixture."""
    report = run_fixture_suite(specs['fixture_dir'])
    if args.format == ExportFormat.json:
        emit(dump_document({'passed': report.passed,
                            'results': report.results.to_dict(orient='records')}),
             args.out)
    else:
        lines = ["%-14s d=%-3s %-10s %-4s %s" % row for row in
                 report.results.itertuples(index=False)]
        lines.append("VERDICT: %s" % ('PASS' if report.passed else 'FAIL'))
        emit('\n'.join(lines) + '\n', args.out)
    return ExitCode.ok if report.passed else ExitCode.failed


#
# Function get_parser
#

def get_parser():
    r"""Build the command line parser."""
    parser = argparse.ArgumentParser(prog='mubpy', description="MubPy Parser")
    subparsers = parser.add_subparsers(dest='command', required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', dest='config', default=None)
    common.add_argument('--out', dest='out', default=None)
    common.add_argument('--tol', dest='tol', type=valid_tolerance, default=None)
    common.add_argument('--format', dest='format', type=valid_format, default=None)
    common.add_argument('--seed', dest='seed', type=int, default=None)

    gen = subparsers.add_parser('generate', parents=[common])
    gen.add_argument('--method', dest='method', type=valid_method, default=None)
    gen.add_argument('--p', dest='p', type=int, default=None)
    gen.add_argument('--theta', dest='theta', type=int, default=None)
    gen.add_argument('--dA', dest='d_a', type=int, default=None)
    gen.add_argument('--dB', dest='d_b', type=int, default=None)
    gen.add_argument('--r', dest='r', type=int, default=2)
    gen.set_defaults(func=cmd_generate)

    ver = subparsers.add_parser('verify', parents=[common])
    ver.add_argument('input')
    ver.add_argument('--design', dest='design', action='store_true')
    ver.add_argument('--complete', dest='complete', action='store_true')
    ver.set_defaults(func=cmd_verify)

    ana = subparsers.add_parser('analyze', parents=[common])
    ana.add_argument('input')
    ana.add_argument('--split', dest='split', type=valid_split, default=None)
    ana.add_argument('--table', dest='table', default=None)
    ana.set_defaults(func=cmd_analyze)

    exp = subparsers.add_parser('export', parents=[common])
    exp.add_argument('input')
    exp.set_defaults(func=cmd_export)

    fix = subparsers.add_parser('fixtures', parents=[common])
    fix.set_defaults(func=cmd_fixtures)

    return parser


#
# Function main
#

def main(args=None):
    r"""MubPy Main Program

    Notes
    -----
    (1) Initialize logging.
    (2) Parse the command line arguments.
    (3) Get the configuration.
    (4) Run the subcommand and map errors to exit codes.

    """

    # Logging

    logging.basicConfig(format="[%(asctime)s] %(levelname)s\t%(message)s",
                        filename=LOG_FILE, filemode='a', level=logging.INFO,
                        datefmt='%m/%d/%y %H:%M:%S')
    root = logging.getLogger()
    if not any(getattr(h, 'mubpy_console', False) for h in root.handlers):
        formatter = logging.Formatter("[%(asctime)s] %(levelname)s\t%(message)s",
                                      datefmt='%m/%d/%y %H:%M:%S')
        console = logging.StreamHandler(sys.stderr)
        console.setFormatter(formatter)
        console.setLevel(logging.INFO)
        console.mubpy_console = True
        root.addHandler(console)

    # Start the run

    logger.info('*'*80)
    logger.info("MubPy Start")
    logger.info('*'*80)

    # Argument Parsing

    parser = get_parser()
    try:
        args = parser.parse_args(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else ExitCode.usage

    # Run the command

    try:
        specs = get_mub_config(args.config)
        code = args.func(args, specs)
    except UnsupportedDimensionError as e:
        logger.error("Unsupported dimension: %s", e)
        code = ExitCode.unsupported
    except (InvalidArgumentError, DocumentError) as e:
        logger.error("%s", e)
        code = ExitCode.usage
    except (OSError, ValueError, KeyError) as e:
        logger.error("Invalid configuration or input: %s", e)
        code = ExitCode.usage

    # Complete the run

    logger.info('*'*80)
    logger.info("MubPy End (exit code %d)", code)
    logger.info('*'*80)
    return code


#
# MAIN PROGRAM
#

if __name__ == "__main__":
    sys.exit(main())

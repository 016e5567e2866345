#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: cpslicingcli.py
#
# Copyright 2026 Costas Tyfoxylos
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.
#

"""
Main code for cpslicingcli.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import argparse
import json
import logging
import logging.config
import os

import coloredlogs
from colorclass import Color
from terminaltables import SingleTable

from .cpslicingcliexceptions import BudgetExceeded, KnotParseError, UnsupportedKnotError
from .library import (CP2,
                      CP2BAR,
                      CP2BARTOP,
                      CP2TOP,
                      Mirror,
                      PresentationSide,
                      SearchBudget,
                      alexander,
                      check_args_set,
                      compute_bounds,
                      default_environment_variable,
                      donaldson_obstruction,
                      environment_variable_boolean,
                      genus_one_top_bound,
                      knot_determinant,
                      mirror,
                      neg_filling_of,
                      nonnegative_integer,
                      normalize,
                      parse,
                      positive_integer,
                      render,
                      reproduce,
                      seifert_of,
                      signature_gate,
                      thm14_search)
from .library.datamodels import SIDE_TITLES
from .library.reproduction import select_rows

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is the main prefix used for logging
LOGGER_BASENAME = '''cpslicingcli'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

SIDE_CHOICES = [CP2, CP2BAR]
METHOD_CHOICES = ['three_square', 'lagrange']
EXIT_OK, EXIT_FAILED, EXIT_PARSE_ERROR, EXIT_UNSUPPORTED, EXIT_BUDGET = 0, 1, 2, 3, 4
COMMAND_ARGUMENTS = (('reproduce', ('selector',)),
                     ('obstruct', ('knot', 'side', 'm')),
                     ('upper-top', ('knot', 'method')),
                     ('bounds', ('knot', 'm_max', 'budget')),
                     ('invariants', ('knot', 'samples')))


def _add_knot_argument(parser):
    parser.add_argument('knot',
                        help='The knot expression, for example "K(3)#-K(5)", "P(3,-5,9)", "T(2,3)" or "U".')


def _add_json_argument(parser):
    parser.add_argument('--json',
                        '-j',
                        help='Prints the JSON document instead of the table. '
                             'Environment variable "CP_SLICING_JSON" can be used to set this.',
                        action='store_true',
                        default=environment_variable_boolean(os.environ.get('CP_SLICING_JSON', False)))


def _add_samples_argument(parser):
    parser.add_argument('--samples',
                        help='The number of Tristram-Levine sample points. Defaults to 64. '
                             'Environment variable "CP_SLICING_SAMPLES" can be used to set this.',
                        action=default_environment_variable('CP_SLICING_SAMPLES'),
                        type=positive_integer,
                        default=64)


def _add_search_arguments(parser):
    parser.add_argument('--n-max',
                        help='The largest number of rank one corrections searched for. Defaults to 4. '
                             'Environment variable "CP_SLICING_N_MAX" can be used to set this.',
                        dest='n_max',
                        action=default_environment_variable('CP_SLICING_N_MAX'),
                        type=positive_integer,
                        default=4)
    parser.add_argument('--coeff-bound',
                        help='The largest absolute entry of correction vectors and basis changes. Defaults to 8. '
                             'Environment variable "CP_SLICING_COEFF_BOUND" can be used to set this.',
                        dest='coeff_bound',
                        action=default_environment_variable('CP_SLICING_COEFF_BOUND'),
                        type=positive_integer,
                        default=8)
    parser.add_argument('--basis-depth',
                        help='The largest number of elementary factors of a basis change. Defaults to 2. '
                             'Environment variable "CP_SLICING_BASIS_DEPTH" can be used to set this.',
                        dest='basis_depth',
                        action=default_environment_variable('CP_SLICING_BASIS_DEPTH'),
                        type=nonnegative_integer,
                        default=2)
    parser.add_argument('--search-budget',
                        help='The number of candidates the decomposition search may try. Defaults to 2e5. '
                             'Environment variable "CP_SLICING_SEARCH_BUDGET" can be used to set this.',
                        dest='search_budget',
                        action=default_environment_variable('CP_SLICING_SEARCH_BUDGET'),
                        type=positive_integer,
                        default=2 * 10 ** 5)


def _add_node_budget_argument(parser):
    parser.add_argument('--budget',
                        help='The node budget of the lattice embedding search. Defaults to 1e8. '
                             'Environment variable "CP_SLICING_BUDGET" can be used to set this.',
                        action=default_environment_variable('CP_SLICING_BUDGET'),
                        type=positive_integer,
                        default=10 ** 8)


def get_arguments(arguments=None):
    """
    Gets us the cli arguments.

    Returns the args as parsed from the argsparser.
    """
    # https://docs.python.org/3/library/argparse.html
    parser = argparse.ArgumentParser(
        description='''A tool to bound the smooth and topological CP2 slicing numbers of knots.''')
    parser.add_argument('--log-config',
                        '-l',
                        action='store',
                        dest='logger_config',
                        help='The location of the logging config json file',
                        default='')
    parser.add_argument('--log-level',
                        '-L',
                        help='Provide the log level. Defaults to info.',
                        dest='log_level',
                        action=default_environment_variable('CP_SLICING_LOG_LEVEL'),
                        default='info',
                        choices=['debug',
                                 'info',
                                 'warning',
                                 'error',
                                 'critical'])
    subparsers = parser.add_subparsers(help='Supported functions for this program.')
    invariants = subparsers.add_parser('invariants', help='Prints signature, determinant, Alexander polynomial '
                                                          'and the sampled signature function.')
    bounds = subparsers.add_parser('bounds', help='Computes certified bounds on all four slicing numbers.')
    obstruct = subparsers.add_parser('obstruct', help='Runs the lattice embedding obstruction at a single m.')
    upper_top = subparsers.add_parser('upper-top', help='Searches for rank one decompositions of the Seifert '
                                                        'matrix, giving topological upper bounds.')
    reproduction = subparsers.add_parser('reproduce', help='Recomputes the known results and reports pass or fail.')
    _add_knot_argument(invariants)
    _add_samples_argument(invariants)
    _add_json_argument(invariants)
    _add_knot_argument(bounds)
    bounds.add_argument('--m-max',
                        help='The largest m the obstructions are tried at. Defaults to 4. '
                             'Environment variable "CP_SLICING_M_MAX" can be used to set this.',
                        dest='m_max',
                        action=default_environment_variable('CP_SLICING_M_MAX'),
                        type=nonnegative_integer,
                        default=4)
    _add_node_budget_argument(bounds)
    _add_search_arguments(bounds)
    _add_samples_argument(bounds)
    _add_json_argument(bounds)
    _add_knot_argument(obstruct)
    obstruct.add_argument('--side',
                          '-s',
                          help='The side to obstruct, cp2 or cp2bar.',
                          choices=SIDE_CHOICES,
                          required=True)
    obstruct.add_argument('--m',
                          '-m',
                          help='The number of copies of CP2 (or CP2bar).',
                          type=nonnegative_integer,
                          required=True)
    _add_node_budget_argument(obstruct)
    _add_json_argument(obstruct)
    _add_knot_argument(upper_top)
    upper_top.add_argument('--method',
                           help='How the genus one bound writes the framing as squares. Defaults to three_square.',
                           choices=METHOD_CHOICES,
                           default='three_square')
    _add_search_arguments(upper_top)
    _add_json_argument(upper_top)
    reproduction.add_argument('selector',
                              nargs='?',
                              default='fast',
                              help='"all", "fast" or a result id such as "cor5.6". Defaults to fast.')
    _add_json_argument(reproduction)
    args = parser.parse_args(arguments)
    args.command = next((name for name, required in COMMAND_ARGUMENTS if check_args_set(args, required)), None)
    if not args.command:
        parser.error('Please specify one of "invariants", "bounds", "obstruct", "upper-top" or "reproduce" as the '
                     'first argument.')
    if args.command == 'reproduce':
        try:
            select_rows(args.selector)
        except ValueError as exc:
            parser.error(str(exc))
    return args


def setup_logging(level, config_file=None):
    """
    Sets up the logging.

    Needs the args to get the log level supplied

    Args:
        level: At which level do we log
        config_file: Configuration to use

    """
    # This will configure the logging, if the user has set a config file.
    # If there's no config file, logging will default to stdout.
    if config_file:
        try:
            with open(config_file, encoding='utf-8') as conf_file:
                configuration = json.loads(conf_file.read())
                # Configure the logger
                logging.config.dictConfig(configuration)
        except ValueError:
            print(f'File "{config_file}" is not valid json, cannot continue.')
            raise SystemExit(1) from None
    else:
        coloredlogs.install(level=level.upper())


def budget_from_arguments(args):
    """A SearchBudget with every value the command line overrode, the defaults for the rest."""
    defaults = SearchBudget()
    names = ('m_max', 'node_budget', 'n_max', 'coeff_bound', 'basis_depth', 'search_budget', 'samples')
    values = {name: getattr(args, 'budget' if name == 'node_budget' else name, getattr(defaults, name))
              for name in names}
    return SearchBudget(**values)


def _print_table(rows, title):
    table = SingleTable(rows, title=title)
    table.inner_heading_row_border = False
    print()
    print(table.table)
    print()


def _print_json(payload):
    print(json.dumps(payload, sort_keys=True, indent=2))


def knot_invariants(knot, samples):
    """The classical invariants of the knot as a JSON ready dictionary."""
    expression = normalize(parse(knot))
    matrix = seifert_of(expression)
    polynomial = alexander(matrix)
    gate = signature_gate(matrix, samples)
    return {'knot': knot,
            'normalized': render(expression),
            'seifert_matrix': matrix.to_dict(),
            'genus': matrix.genus,
            'signature': gate.exact_signature,
            'determinant': knot_determinant(matrix),
            'alexander': str(polynomial),
            'signature_function': gate.to_dict(),
            'verdicts': gate.verdicts}


def show_invariants(invariants, as_json):
    if as_json:
        _print_json(invariants)
        return EXIT_OK
    values = [value for _, value in invariants['signature_function']['values']]
    rows = [('Invariant', 'Value'),
            ('Knot', invariants['normalized']),
            ('Genus', invariants['genus']),
            ('Signature', invariants['signature']),
            ('Determinant', invariants['determinant']),
            ('Alexander polynomial', invariants['alexander']),
            ('Signature function range', f'[{min(values)}, {max(values)}]'),
            ('Skipped samples', len(invariants['signature_function']['skipped'])),
            ('Verdicts', '\n'.join(invariants['verdicts']))]
    _print_table(rows, f'Invariants of {invariants["knot"]}')
    return EXIT_OK


def show_bounds(report, as_json):
    if as_json:
        print(report.to_json())
        return EXIT_OK
    rows = [('Side', 'Lower', 'Upper', 'Status', 'Evidence')]
    rows.extend(PresentationSide(bounds).presentation_row for bounds in report.sides.values())
    _print_table(rows, f'Slicing numbers of {report.normalized}')
    for note in report.notes:
        print(note)
    return EXIT_OK


def obstruction(knot, side, m, node_budget):
    """The lattice embedding outcome on one side, CP2bar uses the filling of the mirror."""
    expression = normalize(parse(knot))
    lattice = neg_filling_of(expression if side == CP2 else Mirror(expression))
    return donaldson_obstruction(lattice, m, node_budget)


def show_obstruction(outcome, knot, side, as_json):
    if as_json:
        _print_json(outcome.to_dict())
        return EXIT_OK
    color = 'autogreen' if outcome.is_obstructed else 'autoyellow'
    rows = [('Field', 'Value'),
            ('Verdict', Color(f'{{{color}}}{outcome.verdict.value}{{/{color}}}')),
            ('m', outcome.m),
            ('Target rank', outcome.target_rank),
            ('Nodes', outcome.nodes),
            ('Seconds', f'{outcome.seconds:0.3f}')]
    _print_table(rows, f'Embedding obstruction for {knot} on the {SIDE_TITLES[side]} side')
    return EXIT_OK


def topological_upper_bounds(knot, method, budget):
    """Genus one bounds and the decomposition search on both topological sides."""
    matrix = seifert_of(normalize(parse(knot)))
    results = {}
    for side, seifert in ((CP2TOP, matrix), (CP2BARTOP, mirror(matrix))):
        entry = {'genus_one': None, 'search': None, 'search_exhausted': False}
        if seifert.genus == 1:
            entry['genus_one'] = genus_one_top_bound(seifert, method).to_dict()
        try:
            decomposition = thm14_search(seifert, budget.n_max, budget.coeff_bound, budget.basis_depth,
                                         budget.search_budget)
            entry['search'] = decomposition.to_dict() if decomposition else None
        except BudgetExceeded as exc:
            LOGGER.info('Decomposition search on %s stopped: %s', side, exc)
            entry['search_exhausted'] = True
        results[side] = entry
    return {'knot': knot, 'sides': results}


def show_upper_top(payload, as_json):
    if as_json:
        _print_json(payload)
        return EXIT_OK
    rows = [('Side', 'Genus one bound', 'Search bound')]
    for side, entry in payload['sides'].items():
        genus_one = entry['genus_one']
        if genus_one is None:
            genus_one_text = 'n/a'
        else:
            genus_one_text = 'infinity' if genus_one['infinite'] else f'{genus_one["n"]} ({genus_one["table_row"]})'
        if entry['search_exhausted']:
            search_text = 'budget exhausted'
        else:
            search_text = entry['search']['n'] if entry['search'] else 'none found'
        rows.append((SIDE_TITLES[side], genus_one_text, search_text))
    _print_table(rows, f'Topological upper bounds of {payload["knot"]}')
    return EXIT_OK


def show_reproduction(results, as_json):
    passed = all(result.passed for result in results)
    if as_json:
        _print_json([result.to_dict() for result in results])
        return EXIT_OK if passed else EXIT_FAILED
    rows = [('Id', 'Statement', 'Expected', 'Computed', 'Result', 'Seconds')]
    for result in results:
        color = 'autogreen' if result.passed else 'autored'
        rows.append((result.identifier, result.citation, result.expected, result.error or result.computed,
                     Color(f'{{{color}}}{"pass" if result.passed else "FAIL"}{{/{color}}}'), result.seconds))
    _print_table(rows, 'Reproduction of known results')
    return EXIT_OK if passed else EXIT_FAILED


def execute(args):
    """Runs the chosen command and returns a printer that takes no arguments and returns the exit code."""
    if args.command == 'invariants':
        invariants = knot_invariants(args.knot, args.samples)
        return lambda: show_invariants(invariants, args.json)
    if args.command == 'bounds':
        report = compute_bounds(args.knot, budget_from_arguments(args))
        return lambda: show_bounds(report, args.json)
    if args.command == 'obstruct':
        outcome = obstruction(args.knot, args.side, args.m, args.budget)
        return lambda: show_obstruction(outcome, args.knot, args.side, args.json)
    if args.command == 'upper-top':
        payload = topological_upper_bounds(args.knot, args.method, budget_from_arguments(args))
        return lambda: show_upper_top(payload, args.json)
    results = reproduce(args.selector)
    return lambda: show_reproduction(results, args.json)


def report_error(exc):
    """Prints a failure and returns its exit code."""
    if isinstance(exc, KnotParseError):
        print(f'Could not parse the knot: {exc.reason}')
        print(f'    {exc.text}')
        print(f'    {" " * exc.position}^')
        return EXIT_PARSE_ERROR
    if isinstance(exc, UnsupportedKnotError):
        print(f'Unsupported knot: {exc}')
        return EXIT_UNSUPPORTED
    print(f'Search stopped: {exc}')
    return EXIT_BUDGET

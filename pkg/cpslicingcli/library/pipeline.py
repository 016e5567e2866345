#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: pipeline.py
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
Main code for pipeline.

Runs every engine on a knot and merges what they certify into one report.
Lower bounds only ever grow and upper bounds only ever shrink, so the order
of the stages does not change the final bounds.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import logging
from time import perf_counter

from cpslicingcli.cpslicingcliexceptions import BudgetExceeded, PretzelHypothesisError, UnsupportedKnotError
from .datamodels import ObstructionReport, SearchBudget
from .diophantine import is_perfect_square, pretzel_condition, validate_pretzel_hypotheses
from .embedder import obstruction_sweep
from .knotspec import (CP2,
                       CP2BAR,
                       CP2BARTOP,
                       CP2TOP,
                       Mirror,
                       Pretzel,
                       neg_filling_of,
                       normalize,
                       parse,
                       render,
                       seifert_of,
                       upper_rules)
from .seifert import alexander, knot_determinant, mirror, signature_gate
from .upperbound import genus_one_top_bound, thm14_search

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
LOGGER_BASENAME = '''pipeline'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

SMOOTH_AND_TOPOLOGICAL = ((CP2, CP2TOP), (CP2BAR, CP2BARTOP))


def _apply_signature_gate(report, gate):
    if gate.cp2_infinite:
        report.sides[CP2TOP].mark_infinite('the signature function takes a positive value')
    if gate.cp2bar_infinite:
        report.sides[CP2BARTOP].mark_infinite('the signature function takes a negative value')
    report.sides[CP2TOP].raise_lower(gate.cp2top_lower, 'the signature function is bounded below by -2m')
    report.sides[CP2BARTOP].raise_lower(gate.cp2bartop_lower, 'the signature function is bounded above by 2m')


def _apply_fox_milnor(report, determinant):
    if not is_perfect_square(determinant):
        for bounds in report.sides.values():
            bounds.raise_lower(1, f'the determinant {determinant} is not a square, so the knot is not '
                                  f'topologically slice')


def _apply_embeddings(report, expression, budget):
    for side, target in ((CP2, expression), (CP2BAR, normalize(Mirror(expression)))):
        bounds = report.sides[side]
        if bounds.infinite:
            continue
        try:
            lattice = neg_filling_of(target)
        except UnsupportedKnotError as exc:
            report.notes.append(f'{side}: no lattice embedding search, {exc}')
            continue
        if not lattice.rank:
            continue
        started = perf_counter()
        try:
            outcomes = obstruction_sweep(lattice, budget.m_max, budget.node_budget)
        except BudgetExceeded as exc:
            report.stats[f'{side}.embedding'] = {'budget_exhausted': True, 'nodes': exc.nodes,
                                                 'frontier': exc.frontier}
            report.notes.append(f'{side}: embedding search stopped at its node budget, certified up to m='
                                f'{exc.frontier}')
            if exc.frontier is not None:
                bounds.raise_lower(exc.frontier + 1, f'the filling lattice of rank {lattice.rank} has no '
                                                     f'embedding at m={exc.frontier}')
            continue
        report.stats[f'{side}.embedding'] = {'budget_exhausted': False,
                                             'nodes': sum(outcome.nodes for outcome in outcomes),
                                             'seconds': round(perf_counter() - started, 3)}
        report.witnesses[f'{side}.embedding'] = [outcome.to_dict() for outcome in outcomes]
        obstructed = [outcome.m for outcome in outcomes if outcome.is_obstructed]
        if obstructed:
            bounds.raise_lower(obstructed[-1] + 1, f'the filling lattice of rank {lattice.rank} has no embedding '
                                                   f'at m={obstructed[-1]}')


def _apply_pretzel_condition(report, expression, budget):
    if not isinstance(expression, Pretzel):
        return
    for side, pretzel in ((CP2, expression), (CP2BAR, normalize(Mirror(expression)))):
        try:
            validate_pretzel_hypotheses(pretzel.positives, pretzel.negatives)
        except PretzelHypothesisError as exc:
            LOGGER.debug('Skipping the pretzel system for %s: %s', side, exc)
            continue
        for m in range(budget.m_max + 1):
            try:
                outcome = pretzel_condition(pretzel.positives, pretzel.negatives, m, budget.system_budget)
            except BudgetExceeded as exc:
                report.notes.append(f'{side}: pretzel system stopped at its budget at m={m}')
                report.stats[f'{side}.pretzel'] = {'budget_exhausted': True, 'nodes': exc.nodes}
                break
            if outcome.solvable:
                report.witnesses[f'{side}.pretzel'] = outcome.to_dict()
                break
            report.sides[side].raise_lower(m + 1, f'the pretzel system has no solution at m={m}')


def _apply_upper_rules(report, expression):
    for rule in upper_rules(expression):
        if rule.counted:
            report.sides[rule.side].lower_upper(rule.bound, rule.citation)
        else:
            report.sides[rule.side].mark_finite(rule.citation)


def _apply_topological(report, matrix, polynomial, budget):
    if polynomial.is_monomial:
        for side in (CP2TOP, CP2BARTOP):
            report.sides[side].lower_upper(0, 'the Alexander polynomial is trivial')
        return
    if matrix.genus != 1:
        report.notes.append('decomposition search runs on genus one knots only, use upper-top for higher genus')
        return
    for side, seifert in ((CP2TOP, matrix), (CP2BARTOP, mirror(matrix))):
        bounds = report.sides[side]
        if bounds.infinite:
            continue
        top_bound = genus_one_top_bound(seifert)
        if top_bound.infinite:
            bounds.mark_infinite('genus one knot of signature 2')
            continue
        bounds.lower_upper(top_bound.n, f'rank one decomposition from the framing class {top_bound.table_row}')
        report.witnesses[f'{side}.decomposition'] = top_bound.to_dict()
        if bounds.upper <= 1 or bounds.lower >= bounds.upper:
            continue
        try:
            decomposition = thm14_search(seifert, min(budget.n_max, bounds.upper - 1), budget.coeff_bound,
                                         budget.basis_depth, budget.search_budget)
        except BudgetExceeded as exc:
            report.stats[f'{side}.decomposition'] = {'budget_exhausted': True, 'nodes': exc.nodes}
            continue
        if decomposition is not None:
            bounds.lower_upper(decomposition.n, 'rank one decomposition found by search')
            report.witnesses[f'{side}.search'] = decomposition.to_dict()


def _apply_cross_side(report):
    for smooth_name, top_name in SMOOTH_AND_TOPOLOGICAL:
        smooth, top = report.sides[smooth_name], report.sides[top_name]
        if top.infinite:
            smooth.mark_infinite('the topological slicing number is infinite')
        else:
            smooth.raise_lower(top.lower, 'every smooth disk is locally flat')
        if smooth.upper is not None:
            top.lower_upper(smooth.upper, 'every smooth disk is locally flat')
        elif smooth.finite:
            top.mark_finite('the smooth slicing number is finite')


def compute_bounds(knot, budget=None):
    """Computes certified lower and upper bounds on all four slicing numbers.

    Args:
        knot: A knot expression or its text.
        budget: A SearchBudget, the defaults when omitted.

    Returns:
        An ObstructionReport whose sides never claim more than the engines certified.

    Raises:
        KnotParseError: If the text does not parse.

    """
    budget = budget or SearchBudget()
    text = knot if isinstance(knot, str) else render(knot)
    expression = normalize(parse(knot) if isinstance(knot, str) else knot)
    matrix = seifert_of(expression)
    polynomial = alexander(matrix)
    determinant = knot_determinant(matrix)
    gate = signature_gate(matrix, budget.samples)
    report = ObstructionReport(text, render(expression), budget=budget)
    report.invariants = {'signature': gate.exact_signature,
                         'determinant': determinant,
                         'alexander': polynomial.to_dict(),
                         'genus': matrix.genus,
                         'signature_function': gate.to_dict()}
    _apply_signature_gate(report, gate)
    _apply_fox_milnor(report, determinant)
    if gate.exact_signature == 0:
        _apply_embeddings(report, expression, budget)
        _apply_pretzel_condition(report, expression, budget)
    _apply_upper_rules(report, expression)
    _apply_topological(report, matrix, polynomial, budget)
    _apply_cross_side(report)
    report.check()
    LOGGER.info('Bounds for %s: %s', report.normalized,
                {name: bounds.status for name, bounds in report.sides.items()})
    return report

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: reproduction.py
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
Main code for reproduction.

Known results about slicing numbers recomputed from scratch, one row per
statement. Every row reports what it expected, what it computed and how long
it took, a failing row never stops the others.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import itertools
import logging
from dataclasses import dataclass
from math import isqrt
from time import perf_counter
from typing import Callable, Optional

import numpy as np

from cpslicingcli.cpslicingcliexceptions import BudgetExceeded
from .diophantine import is_perfect_square, pretzel_condition, three_square
from .embedder import donaldson_obstruction, min_obstructed_m, naive_obstruction
from .knotspec import CP2, CP2BAR, Mirror, neg_filling_of, parse, upper_rules
from .lattice import IntegralLattice, determinant, is_negative_definite
from .plumbing import lens_fillings, neg_continued_fraction, pos_continued_fraction, pretzel_plumbing
from .seifert import (SeifertMatrix,
                      alexander,
                      bryant_signature,
                      connected_sum,
                      pretzel3_alexander,
                      pretzel3_seifert,
                      pretzel_determinant,
                      signature,
                      signature_gate,
                      torus2_seifert)
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
LOGGER_BASENAME = '''reproduction'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

ROW_NODE_BUDGET = 10 ** 7
RANDOM_SEED = 20261019
RANDOM_SAMPLES = 1000


@dataclass(frozen=True)
class ReproductionRow:
    """One statement, its expected value and the computation that checks it.

    The runner returns the computed value as text and whether it matches.
    """

    identifier: str
    citation: str
    expected: str
    runner: Callable
    fast: bool = True

    @property
    def group(self):
        return self.identifier.split('-')[0]


@dataclass(frozen=True)
class RowResult:
    identifier: str
    citation: str
    expected: str
    computed: str
    passed: bool
    seconds: float
    error: Optional[str] = None

    def to_dict(self):
        return {'id': self.identifier,
                'citation': self.citation,
                'expected': self.expected,
                'computed': self.computed,
                'passed': self.passed,
                'seconds': self.seconds,
                'error': self.error}


def _twist_sum(twists):
    return parse('#'.join(f'K({value})' for value in twists))


def _rule_bound(knot, side):
    return next((rule.bound for rule in upper_rules(knot) if rule.side == side), None)


def _lower_from_lattice(lattice, m_max, node_budget=ROW_NODE_BUDGET):
    obstructed = min_obstructed_m(lattice, m_max, node_budget)
    return 0 if obstructed is None else obstructed + 1


def _example_twist_sum():
    knot = parse('K(3)#K(5)')
    twist_sum_lattice = neg_filling_of(knot)
    verdict = donaldson_obstruction(twist_sum_lattice, 1, ROW_NODE_BUDGET).verdict.value
    cp2_lower = _lower_from_lattice(twist_sum_lattice, 1)
    cp2bar_lower = _lower_from_lattice(neg_filling_of(Mirror(knot)), 1)
    cp2_upper, cp2bar_upper = _rule_bound(knot, CP2), _rule_bound(knot, CP2BAR)
    computed = f'{verdict} at m=1; cp2 in [{cp2_lower},{cp2_upper}]; cp2bar in [{cp2bar_lower},{cp2bar_upper}]'
    passed = (verdict == 'Obstructed' and (cp2_lower, cp2_upper) == (2, 4)
              and (cp2bar_lower, cp2bar_upper) == (2, 2))
    return computed, passed


def _twist_sums_exact(families):
    def runner():
        results, passed = [], True
        for twists in families:
            count = len(twists)
            lattice = neg_filling_of(Mirror(_twist_sum(twists)))
            below = donaldson_obstruction(lattice, count - 1, ROW_NODE_BUDGET)
            at = donaldson_obstruction(lattice, count, ROW_NODE_BUDGET)
            upper = _rule_bound(_twist_sum(twists), CP2BAR)
            exact = below.is_obstructed and not at.is_obstructed and upper == count
            passed = passed and exact
            results.append(f'{twists}: {count if exact else "?"}')
        return ', '.join(results), passed
    return runner


def _mixed_twist_sum():
    knot = parse('K(3)#K(3)#-K(5)#-K(5)')
    try:
        cp2_lower = _lower_from_lattice(neg_filling_of(knot), 1)
    except BudgetExceeded as exc:
        return f'budget exhausted, certified frontier {exc.frontier}', exc.frontier in (None, 0, 1)
    return f'cp2 >= {cp2_lower}, cp2bar >= 0', cp2_lower >= 2


def _pretzel_family(changes):
    def runner():
        results, passed = [], True
        for first in (3, 5):
            negative, last = -first - 2 * changes, first + 2 * changes + 2
            lattice = pretzel_plumbing([first, last], [negative])
            agree = True
            for m in (changes - 1, changes):
                solvable = pretzel_condition([first, last], [negative], m).solvable
                inconclusive = not donaldson_obstruction(lattice, m, ROW_NODE_BUDGET).is_obstructed
                agree = agree and solvable == inconclusive and solvable == (m == changes)
            upper = _rule_bound(parse(f'P({first},{negative},{last})'), CP2)
            exact = agree and upper == changes
            passed = passed and exact
            results.append(f'P({first},{negative},{last}): {changes if exact else "?"}')
        return ', '.join(results), passed
    return runner


def _alternating_pretzel():
    knot = parse('P(3,-5,3,-5,3)')
    unsolvable = not pretzel_condition([3, 3, 3], [-5, -5], 1).solvable
    upper = _rule_bound(knot, CP2)
    return f'unsolvable at m=1: {unsolvable}, upper {upper}', unsolvable and upper == 2


def _topological_family():
    results, passed = [], True
    for first, twists in ((3, 1), (3, 2), (5, 2), (3, 3)):
        parameters = (first, -first - 2 * twists, 3 * first + 8 * twists - 2)
        decomposition = thm14_search(pretzel3_seifert(*parameters), n_max=1)
        det = pretzel_determinant(parameters)
        expected_det = (4 * twists + first) ** 2 - 4 * twists
        ok = (decomposition is not None and decomposition.n == 1 and decomposition.verified
              and det == expected_det and not is_perfect_square(det))
        if twists > 1:
            ok = ok and not pretzel_condition([first, parameters[2]], [parameters[1]], twists - 1).solvable
        passed = passed and ok
        results.append(f'P{parameters}: top 1, smooth {twists}' if ok else f'P{parameters}: ?')
    return ', '.join(results), passed


def _random_genus_one():
    generator = np.random.default_rng(RANDOM_SEED)
    infinite = finite = failures = 0
    for _ in range(RANDOM_SAMPLES):
        a_value, c_value = (int(value) for value in generator.integers(-9, 10, size=2))
        b_value = int(generator.integers(-9, 9))
        entries = ((a_value, b_value + 1), (b_value, c_value))
        if generator.integers(0, 2):
            entries = tuple(zip(*entries))
        matrix = SeifertMatrix(entries)
        bound = genus_one_top_bound(matrix)
        if signature(matrix) == 2:
            infinite += 1
            failures += not bound.infinite
        else:
            finite += 1
            failures += bound.infinite or not bound.decomposition.verified or bound.n > 4
    return f'{infinite} infinite, {finite} with n <= 4, {failures} failures', failures == 0


def _three_square_by_enumeration(number):
    for first in range(isqrt(number) + 1):
        for second in range(first, isqrt(number) + 1):
            rest = number - first * first - second * second
            if rest < second * second:
                break
            if is_perfect_square(rest):
                return first, second, isqrt(rest)
    return None


def _small_negative_definite_lattices():
    for rank in (1, 2, 3):
        pairs = list(itertools.combinations(range(rank), 2))
        for diagonal in itertools.product(range(-4, 0), repeat=rank):
            for off in itertools.product((-1, 0, 1), repeat=len(pairs)):
                gram = [[0] * rank for _ in range(rank)]
                for index, value in enumerate(diagonal):
                    gram[index][index] = value
                for (i, j), value in zip(pairs, off):
                    gram[i][j] = gram[j][i] = value
                lattice = IntegralLattice(tuple(tuple(row) for row in gram))
                if is_negative_definite(lattice):
                    yield lattice


def _oracles():
    odd = [value for value in range(-15, 16) if value % 2]
    mismatches = 0
    for parameters in itertools.product(odd, repeat=3):
        matrix = pretzel3_seifert(*parameters)
        mismatches += bryant_signature(parameters) != signature(matrix)
        mismatches += not alexander(matrix).equivalent(pretzel3_alexander(*parameters))
    for lattice in _small_negative_definite_lattices():
        for m in (0, 1):
            mismatches += (donaldson_obstruction(lattice, m).verdict != naive_obstruction(lattice, m).verdict)
    for number in range(10001):
        mismatches += three_square(number) != _three_square_by_enumeration(number)
    return f'{mismatches} mismatches', mismatches == 0


def _continued_fractions():
    failures = 0
    for twists in range(1, 21):
        numerator = 4 * twists + 1
        failures += pos_continued_fraction(numerator, 2) != [2 * twists, 2]
        failures += neg_continued_fraction(numerator, 4 * twists - 1) != [2] * (2 * twists - 1) + [3]
        negative, positive = lens_fillings(numerator, 2)
        failures += abs(determinant(negative)) != numerator or abs(determinant(positive)) != numerator
    return f'{failures} failures for a in 1..20', failures == 0


def _signature_gates():
    lowers = []
    for copies in range(1, 6):
        matrix = SeifertMatrix(())
        for _ in range(copies):
            matrix = connected_sum(matrix, torus2_seifert(1))
        gate = signature_gate(matrix)
        lowers.append(gate.cp2top_lower if gate.exact_signature == -2 * copies else None)
    trefoil_infinite = signature_gate(torus2_seifert(1)).cp2bar_infinite
    passed = lowers == [1, 2, 3, 4, 5] and trefoil_infinite
    return f'cp2top lower bounds {lowers}, cp2bar infinite: {trefoil_infinite}', passed


def _indefinite_pretzels():
    results, passed = [], True
    for first in (3, 5):
        for changes in (1, 2):
            knot = parse(f'P({first},{-first - 2 * changes},{first + 2 * changes + 2})')
            cp2, cp2bar = _rule_bound(knot, CP2), _rule_bound(knot, CP2BAR)
            passed = passed and cp2 == changes and cp2bar == 1
            results.append(f'({cp2},{cp2bar})')
    return ' '.join(results), passed


ROWS = (
    ReproductionRow('ex4.3', 'K3#K5 has both slicing numbers finite and above 1',
                    'Obstructed at m=1; cp2 in [2,4]; cp2bar in [2,2]', _example_twist_sum),
    ReproductionRow('prop4.1-n2', 'u_CP2bar of a sum of n twist knots K_a with a >= 3 is n',
                    '(3,): 1, (3, 5): 2', _twist_sums_exact([(3,), (3, 5)])),
    ReproductionRow('prop4.1-n3', 'u_CP2bar of a sum of n twist knots K_a with a >= 3 is n',
                    '(3, 4, 5): 3', _twist_sums_exact([(3, 4, 5)]), fast=False),
    ReproductionRow('cor4.6', 'u_CP2 of K3#K3#-K5#-K5 is at least 2',
                    'cp2 >= 2', _mixed_twist_sum, fast=False),
    ReproductionRow('cor5.6-1', 'u_CP2(P(p,-p-2,p+4)) = 1', '1 for p in 3, 5', _pretzel_family(1)),
    ReproductionRow('cor5.6-2', 'u_CP2(P(p,-p-4,p+6)) = 2', '2 for p in 3, 5', _pretzel_family(2)),
    ReproductionRow('cor5.6-3', 'u_CP2(P(p,-p-6,p+8)) = 3', '3 for p in 3, 5', _pretzel_family(3)),
    ReproductionRow('cor5.9', 'u_CP2(P(3,-5,3,-5,3)) = 2', 'unsolvable at m=1, upper 2', _alternating_pretzel),
    ReproductionRow('prop6.1', 'P(p,-p-2k,3p+8k-2) has topological u_CP2 equal to 1 and smooth u_CP2 equal to k',
                    'top 1 and smooth k', _topological_family),
    ReproductionRow('prop1.7', 'genus one knots have topological u_CP2 infinite or at most 4',
                    '0 failures', _random_genus_one),
    ReproductionRow('oracles', 'independent recomputation of signatures, polynomials, embeddings and squares',
                    '0 mismatches', _oracles, fast=False),
    ReproductionRow('cf', 'continued fractions of the twist knot lens spaces', '0 failures for a in 1..20',
                    _continued_fractions),
    ReproductionRow('gates', 'signature bounds for sums of right handed trefoils',
                    'cp2top lower bounds [1, 2, 3, 4, 5], cp2bar infinite: True', _signature_gates),
    ReproductionRow('cor5.10', 'P(p,-p-2q,p+2q+2) has u_CP2 <= q and u_CP2bar <= 1',
                    '(1,1) (2,1) (1,1) (2,1)', _indefinite_pretzels),
)


def select_rows(selector='fast'):
    """The rows for 'all', 'fast', a row id or a group id such as 'cor5.6'."""
    if selector == 'all':
        return list(ROWS)
    if selector == 'fast':
        return [row for row in ROWS if row.fast]
    rows = [row for row in ROWS if selector in (row.identifier, row.group)]
    if not rows:
        raise ValueError(f'Unknown selector {selector!r}, expected all, fast or one of '
                         f'{sorted({row.group for row in ROWS})}.')
    return rows


def run_row(row):
    started = perf_counter()
    try:
        computed, passed = row.runner()
        error = None
    except Exception as exc:  # pylint: disable=broad-except
        LOGGER.error('Row %s failed with %s', row.identifier, exc)
        computed, passed, error = 'error', False, f'{type(exc).__name__}: {exc}'
    result = RowResult(row.identifier, row.citation, row.expected, computed, bool(passed),
                       round(perf_counter() - started, 3), error)
    LOGGER.info('%s: %s in %ss', row.identifier, 'pass' if result.passed else 'FAIL', result.seconds)
    return result


def reproduce(selector='fast'):
    """Runs the selected rows and returns one RowResult per row, in table order."""
    return [run_row(row) for row in select_rows(selector)]

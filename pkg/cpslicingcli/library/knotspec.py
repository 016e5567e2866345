#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: knotspec.py
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
Main code for knotspec.

Knot expressions over twist knots, odd pretzel knots and T(2, n) torus
knots, with mirrors and connected sums, the Seifert and filling data derived
from them and the crossing change upper bounds known for these families.

Grammar::

    expr := term ('#' term)*
    term := '-'? atom
    atom := 'K(' int ')' | 'P(' int (',' int)* ')' | 'T(2,' int ')' | 'U'

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import logging
import re
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Tuple, Union

from scipy.optimize import linear_sum_assignment

from cpslicingcli.cpslicingcliexceptions import KnotParseError, PlumbingHypothesisError, UnsupportedKnotError
from .lattice import IntegralLattice, direct_sum_all, is_negative_definite
from .plumbing import lens_fillings, pretzel_plumbing
from .seifert import SeifertMatrix, connected_sum, mirror, pretzel_seifert, torus2_seifert, twist_seifert

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
LOGGER_BASENAME = '''knotspec'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

CP2, CP2BAR, CP2TOP, CP2BARTOP = 'cp2', 'cp2bar', 'cp2top', 'cp2bartop'
MIRRORED_SIDE = {CP2: CP2BAR, CP2BAR: CP2, CP2TOP: CP2BARTOP, CP2BARTOP: CP2TOP}


@dataclass(frozen=True)
class Unknot:
    """The unknot."""

    def render(self):
        return 'U'


@dataclass(frozen=True)
class TwistKnot:
    """The twist knot K_a with 2a positive crossings in its twist region."""

    twists: int

    def render(self):
        return f'K({self.twists})'


@dataclass(frozen=True)
class Pretzel:
    """The pretzel knot P(q_1, ..., q_n) with n odd and every q_i odd."""

    parameters: Tuple[int, ...]

    @property
    def positives(self):
        return tuple(value for value in self.parameters if value > 0)

    @property
    def negatives(self):
        return tuple(value for value in self.parameters if value < 0)

    def render(self):
        return f'P({",".join(str(value) for value in self.parameters)})'


@dataclass(frozen=True)
class Torus2:
    """The right handed torus knot T(2, 2m + 1)."""

    m: int

    def render(self):
        return f'T(2,{2 * self.m + 1})'


@dataclass(frozen=True)
class Mirror:
    """The mirror image, which for every invariant used here is the same as the reverse."""

    knot: 'KnotExpression'

    def render(self):
        return f'-{self.knot.render()}'


@dataclass(frozen=True)
class ConnectedSum:
    """A connected sum of two or more summands, kept in source order."""

    summands: Tuple['KnotExpression', ...]

    def render(self):
        return '#'.join(summand.render() for summand in self.summands)


KnotExpression = Union[Unknot, TwistKnot, Pretzel, Torus2, Mirror, ConnectedSum]

_INTEGER = re.compile(r'\s*([+-]?\d+)')


class _Parser:
    """Recursive descent over the knot grammar, errors carry the offending position."""

    def __init__(self, text):
        self.text = text
        self.position = 0

    def fail(self, reason, position=None):
        raise KnotParseError(self.text, self.position if position is None else position, reason)

    def skip_blanks(self):
        while self.position < len(self.text) and self.text[self.position].isspace():
            self.position += 1

    def peek(self):
        self.skip_blanks()
        return self.text[self.position] if self.position < len(self.text) else ''

    def expect(self, literal):
        if self.peek() != literal:
            self.fail(f'Expected "{literal}"')
        self.position += 1

    def integer(self):
        match = _INTEGER.match(self.text, self.position)
        if not match:
            self.skip_blanks()
            self.fail('Expected an integer')
        self.position = match.end()
        return int(match.group(1))

    def expression(self):
        terms = [self.term()]
        while self.peek() == '#':
            self.position += 1
            terms.append(self.term())
        if self.peek():
            self.fail(f'Unexpected character "{self.peek()}"')
        return terms[0] if len(terms) == 1 else ConnectedSum(tuple(terms))

    def term(self):
        if self.peek() == '-':
            self.position += 1
            return Mirror(self.atom())
        return self.atom()

    def atom(self):
        head = self.peek()
        start = self.position
        self.position += 1 if head else 0
        if head == 'U':
            return Unknot()
        if head == 'K':
            self.expect('(')
            twists = self.integer()
            self.expect(')')
            if twists < 1:
                self.fail(f'Twist knots need a >= 1, got {twists}', start)
            return TwistKnot(twists)
        if head == 'P':
            self.expect('(')
            parameters = [self.integer()]
            while self.peek() == ',':
                self.position += 1
                parameters.append(self.integer())
            self.expect(')')
            if any(value % 2 == 0 for value in parameters):
                self.fail(f'Pretzel parameters must be odd, got {parameters}', start)
            if len(parameters) < 3 or len(parameters) % 2 == 0:
                self.fail(f'Pretzel knots need an odd number >= 3 of strands, got {len(parameters)}', start)
            return Pretzel(tuple(parameters))
        if head == 'T':
            self.expect('(')
            if self.integer() != 2:
                self.fail('Only T(2, n) torus knots are supported', start)
            self.expect(',')
            crossings = self.integer()
            self.expect(')')
            if crossings < 3 or crossings % 2 == 0:
                self.fail(f'T(2, n) needs an odd n >= 3, got {crossings}', start)
            return Torus2((crossings - 1) // 2)
        self.position = start
        self.fail('Expected one of U, K(...), P(...), T(2,...)')
        return None


def parse(text):
    """Parses a knot expression.

    Args:
        text: For example "K(3)#-K(5)" or "P(3,-5,9)".

    Returns:
        The KnotExpression in source form, not normalized.

    Raises:
        KnotParseError: With the position of the first problem.

    """
    return _Parser(text).expression()


def render(knot):
    return knot.render()


def _mirror_of(knot):
    if isinstance(knot, Mirror):
        return knot.knot
    if isinstance(knot, Unknot):
        return knot
    if isinstance(knot, Pretzel):
        return Pretzel(tuple(-value for value in knot.parameters))
    if isinstance(knot, ConnectedSum):
        return ConnectedSum(tuple(_mirror_of(summand) for summand in knot.summands))
    return Mirror(knot)


def normalize(knot):
    """Pushes mirrors down to the atoms, flattens sums and drops unknotted summands.

    A mirrored pretzel becomes the pretzel with negated parameters and a double mirror cancels.
    """
    if isinstance(knot, Mirror):
        inner = normalize(knot.knot)
        return normalize(_mirror_of(inner)) if not isinstance(inner, (TwistKnot, Torus2)) else Mirror(inner)
    if isinstance(knot, ConnectedSum):
        flat = []
        for summand in knot.summands:
            summand = normalize(summand)
            if isinstance(summand, ConnectedSum):
                flat.extend(summand.summands)
            elif not isinstance(summand, Unknot):
                flat.append(summand)
        if not flat:
            return Unknot()
        return flat[0] if len(flat) == 1 else ConnectedSum(tuple(flat))
    return knot


def summands(knot):
    """The summands of the normalized expression, the unknot has none."""
    knot = normalize(knot)
    if isinstance(knot, Unknot):
        return ()
    return knot.summands if isinstance(knot, ConnectedSum) else (knot,)


def seifert_of(knot):
    """A Seifert matrix by structural recursion, mirrors give -A^T and sums give block sums."""
    if isinstance(knot, Unknot):
        return SeifertMatrix(())
    if isinstance(knot, TwistKnot):
        return twist_seifert(knot.twists)
    if isinstance(knot, Pretzel):
        return pretzel_seifert(knot.parameters)
    if isinstance(knot, Torus2):
        return torus2_seifert(knot.m)
    if isinstance(knot, Mirror):
        return mirror(seifert_of(knot.knot))
    result = SeifertMatrix(())
    for summand in knot.summands:
        result = connected_sum(result, seifert_of(summand))
    return result


def _summand_filling(summand):
    if isinstance(summand, TwistKnot):
        return lens_fillings(4 * summand.twists + 1, 2)[0]
    if isinstance(summand, Mirror) and isinstance(summand.knot, TwistKnot):
        twists = summand.knot.twists
        return lens_fillings(4 * twists + 1, 4 * twists - 1)[0]
    if isinstance(summand, Pretzel):
        try:
            return pretzel_plumbing(summand.positives, summand.negatives)
        except PlumbingHypothesisError as exc:
            raise UnsupportedKnotError(summand.render(), f'no negative definite star plumbing: {exc}') from exc
    raise UnsupportedKnotError(summand.render(), 'no negative definite filling is wired for this family')


def neg_filling_of(knot):
    """A negative definite lattice bounded by the double branched cover, the boundary sum of the summand fillings.

    Raises:
        UnsupportedKnotError: Naming the first summand without a known filling.

    """
    parts = [_summand_filling(summand) for summand in summands(knot)]
    if not parts:
        return IntegralLattice(())
    lattice = direct_sum_all(parts, [f's{index + 1}_' for index in range(len(parts))] if len(parts) > 1 else None)
    if not is_negative_definite(lattice):
        raise UnsupportedKnotError(render(normalize(knot)), 'assembled filling is not negative definite')
    return lattice


@dataclass(frozen=True)
class UpperRule:
    """An upper bound on one side, bound None meaning finite without a counted construction."""

    side: str
    bound: Optional[int]
    citation: str

    @property
    def counted(self):
        return self.bound is not None

    def mirrored(self):
        return UpperRule(MIRRORED_SIDE[self.side], self.bound, self.citation)

    def to_dict(self):
        return {'side': self.side, 'bound': self.bound, 'citation': self.citation}


def _three_strand_rules(parameters):
    rules = []
    negatives = [value for value in parameters if value < 0]
    positives = [value for value in parameters if value > 0]
    if len(negatives) == 1:
        size = -negatives[0]
        below = [value for value in positives if value <= size]
        above = [value for value in positives if value >= size]
        if below:
            rules.append(UpperRule(CP2, (size - max(below)) // 2,
                                   f'{(size - max(below)) // 2} positive to negative crossing changes turn '
                                   f'the parameter {-size} into {-max(below)}, leaving a ribbon pretzel'))
        if above:
            rules.append(UpperRule(CP2BAR, (min(above) - size) // 2,
                                   f'{(min(above) - size) // 2} negative to positive crossing changes turn '
                                   f'the parameter {min(above)} into {size}, leaving a ribbon pretzel'))
    if len(positives) == 1:
        mirrored = _three_strand_rules([-value for value in parameters])
        rules.extend(rule.mirrored() for rule in mirrored if rule.counted)
    if len(negatives) >= 2:
        rules.append(UpperRule(CP2, None, 'at least two negative parameters: raising one of them to the absolute '
                                          'value of another by positive to negative crossing changes gives a '
                                          'ribbon pretzel'))
    if len(positives) >= 2:
        rules.append(UpperRule(CP2BAR, None, 'the mirror has at least two negative parameters'))
    return rules


def _topological_pretzel_rule(parameters):
    if len(parameters) != 3:
        return []
    for first, negative, third in permutations(parameters):
        twice_twists = -negative - first
        if first >= 3 and negative < 0 and twice_twists > 0 and twice_twists % 2 == 0:
            if third == 3 * first + 4 * twice_twists - 2:
                return [UpperRule(CP2TOP, 1, f'after x -> x + y the Seifert matrix of P({first},{negative},'
                                             f'{third}) is a rank one correction of a matrix with trivial '
                                             f'Alexander polynomial')]
    return []


def _alternating_pretzel_rule(parameters):
    count = len(parameters)
    if count < 5:
        return []
    base = parameters[0]
    expected = tuple(base if index % 2 == 0 else -base - 2 for index in range(count))
    if base >= 3 and tuple(parameters) == expected:
        strands = count // 2
        return [UpperRule(CP2, strands, f'{strands} positive to negative crossing changes give the ribbon '
                                        f'pretzel P({base},{-base},...,{base})')]
    return []


def _atom_rules(summand):
    """Per side rules for one non twist summand."""
    if isinstance(summand, Mirror):
        return [rule.mirrored() for rule in _atom_rules(summand.knot)]
    if isinstance(summand, Torus2):
        return [UpperRule(CP2, summand.m, f'{summand.m} positive to negative crossing changes unknot '
                                          f'{summand.render()}')]
    if isinstance(summand, Pretzel):
        parameters = list(summand.parameters)
        if len(parameters) == 3:
            return _three_strand_rules(parameters) + _topological_pretzel_rule(parameters)
        return _alternating_pretzel_rule(parameters)
    return []


def _twist_costs(twists, side):
    """The cost of a single K_a on one side."""
    if twists == 2:
        return 0
    if twists == 1:
        return 1
    return twists - 2 if side == CP2 else 1


def _twist_assignment(positive, negative, side):
    """Minimum total cost of the twist summands on one side, pairing K_a with -K_b when that helps."""
    solo_rows = [_twist_costs(value, side) for value in positive]
    solo_columns = [_twist_costs(value, MIRRORED_SIDE[side]) for value in negative]
    rows, columns = len(positive), len(negative)
    if not rows or not columns:
        return sum(solo_rows) + sum(solo_columns)
    forbidden = sum(solo_rows) + sum(solo_columns) + 1
    size = rows + columns
    cost = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if i < rows and j < columns:
                a_value, b_value = positive[i], negative[j]
                if side == CP2:
                    cost[i][j] = a_value - b_value if a_value >= b_value else forbidden
                else:
                    cost[i][j] = b_value - a_value if b_value >= a_value else forbidden
            elif i < rows:
                cost[i][j] = solo_rows[i] if j - columns == i else forbidden
            elif j < columns:
                cost[i][j] = solo_columns[j] if i - rows == j else forbidden
    row_index, column_index = linear_sum_assignment(cost)
    return int(sum(cost[i][j] for i, j in zip(row_index, column_index)))


def _twist_rules(twist_summands):
    positive = [summand.twists for summand in twist_summands if isinstance(summand, TwistKnot)]
    negative = [summand.knot.twists for summand in twist_summands if isinstance(summand, Mirror)]
    # K_1 is amphichiral and K_2 is slice, so only the parity of the figure eight summands matters.
    eights = positive.count(1) + negative.count(1)
    positive = [value for value in positive if value > 2]
    negative = [value for value in negative if value > 2]
    rules = []
    for side in (CP2, CP2BAR):
        total = _twist_assignment(positive, negative, side) + eights % 2
        rules.append(UpperRule(side, total, 'twist knot crossing changes: K_a to K_2 by a - 2 positive to negative '
                                            'changes, K_a to the unknot by one negative to positive change, '
                                            'K_a # -K_b paired by |a - b| changes'))
    return rules


def _best_per_side(rules):
    best = {}
    for rule in rules:
        current = best.get(rule.side)
        if current is None or (rule.counted and (not current.counted or rule.bound < current.bound)):
            best[rule.side] = rule
    return best


def upper_rules(knot):
    """Crossing change upper bounds for every side that has one, summed over the connected summands.

    Returns:
        A list of UpperRule, at most one per side, sides ordered cp2, cp2bar, cp2top, cp2bartop.

    """
    parts = summands(knot)
    if not parts:
        return [UpperRule(side, 0, 'the unknot is slice') for side in (CP2, CP2BAR, CP2TOP, CP2BARTOP)]
    twist_parts = [part for part in parts
                   if isinstance(part, TwistKnot) or (isinstance(part, Mirror) and isinstance(part.knot, TwistKnot))]
    per_summand = [_best_per_side(_atom_rules(part)) for part in parts if part not in twist_parts]
    if twist_parts:
        per_summand.append(_best_per_side(_twist_rules(twist_parts)))
    result = []
    for side in (CP2, CP2BAR, CP2TOP, CP2BARTOP):
        chosen = [rules.get(side) for rules in per_summand]
        if any(rule is None for rule in chosen):
            continue
        counted = all(rule.counted for rule in chosen)
        citation = '; '.join(dict.fromkeys(rule.citation for rule in chosen))
        result.append(UpperRule(side, sum(rule.bound for rule in chosen) if counted else None, citation))
    LOGGER.debug('Upper rules for %s: %s', render(normalize(knot)), result)
    return result

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: diophantine.py
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
Main code for diophantine.

Closed form obstructions for odd pretzel knots and sums of squares helpers.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import logging
from dataclasses import dataclass
from itertools import permutations, product
from math import isqrt
from typing import Optional, Tuple

from cpslicingcli.cpslicingcliexceptions import (BudgetExceeded,
                                                 InternalConsistencyError,
                                                 PretzelHypothesisError,
                                                 PretzelParameterError)
from .seifert import bryant_signature

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
LOGGER_BASENAME = '''diophantine'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

DEFAULT_SYSTEM_BUDGET = 10 ** 7
CROSS_CHECK_M = 2


def is_perfect_square(number):
    return number >= 0 and isqrt(number) ** 2 == number


def legendre_three_square_possible(number):
    """Legendre: a nonnegative integer is a sum of three squares iff it is not of the form 4^a(8b + 7)."""
    if number < 0:
        return False
    if number == 0:
        return True
    while number % 4 == 0:
        number //= 4
    return number % 8 != 7


def _two_squares(total, lower):
    """The smallest (x, y) with lower <= x <= y and x^2 + y^2 == total, or None."""
    for first in range(lower, isqrt(total // 2) + 1):
        rest = total - first * first
        if is_perfect_square(rest):
            return first, isqrt(rest)
    return None


def three_square(number, lower=0):
    """The lexicographically smallest (k, l, m) with lower <= k <= l <= m and k^2 + l^2 + m^2 == number.

    Args:
        number: A nonnegative integer.
        lower: The smallest allowed entry.

    Returns:
        The triple, or None when there is none.

    """
    if number < 0:
        return None
    result = None
    for first in range(lower, isqrt(number // 3) + 1):
        rest = _two_squares(number - first * first, first)
        if rest:
            result = (first,) + rest
            break
    if not lower and (result is not None) != legendre_three_square_possible(number):
        LOGGER.error('Three square search and the Legendre test disagree on %s.', number)
        raise InternalConsistencyError(f'Three square search and the Legendre test disagree on {number}.')
    return result


def four_square(number):
    """The lexicographically smallest sorted (a, b, c, d) with squares summing to the number, it always exists."""
    if number < 0:
        raise ValueError(f'Expected a nonnegative integer, got {number}.')
    for first in range(isqrt(number // 4) + 1):
        rest = three_square(number - first * first, first)
        if rest:
            return (first,) + rest
    raise InternalConsistencyError(f'No four square representation found for {number}.')


@dataclass(frozen=True)
class PretzelSystem:
    """The Diophantine system of a pretzel knot P(p_1, ..., p_{k+1}, q_1, ..., q_k) at a given m.

    A solution assigns, for every negative parameter q_j, integers a_i^j (one per positive parameter) and b_l^j
    (one per copy of CP2).
    """

    positives: Tuple[int, ...]
    negatives: Tuple[int, ...]
    m: int
    a: Optional[Tuple[Tuple[int, ...], ...]] = None
    b: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __post_init__(self):
        object.__setattr__(self, 'positives', tuple(self.positives))
        object.__setattr__(self, 'negatives', tuple(self.negatives))
        validate_pretzel_hypotheses(self.positives, self.negatives)
        if not isinstance(self.m, int) or self.m < 0:
            raise PretzelHypothesisError(f'm must be a nonnegative integer, got {self.m!r}.')

    def block_value(self, first, second):
        """sum_i a_i^j a_i^j' p_i + 2 sum_l b_l^j b_l^j' for two solution blocks given as (a, b) pairs."""
        (a_first, b_first), (a_second, b_second) = first, second
        return (sum(x * y * p for x, y, p in zip(a_first, a_second, self.positives))
                + 2 * sum(x * y for x, y in zip(b_first, b_second)))

    def is_solution(self):
        """Checks both conditions exactly for the stored a and b."""
        if self.a is None or self.b is None:
            return False
        if len(self.a) != len(self.negatives) or len(self.b) != len(self.negatives):
            return False
        blocks = list(zip(self.a, self.b))
        for index, (a_block, b_block) in enumerate(blocks):
            if len(a_block) != len(self.positives) or len(b_block) != self.m:
                return False
            if sum(a_block) != 1 or self.block_value(blocks[index], blocks[index]) != -self.negatives[index]:
                return False
        return all(self.block_value(blocks[i], blocks[j]) == 0
                   for i in range(len(blocks)) for j in range(i))

    def to_dict(self):
        return {'positives': list(self.positives),
                'negatives': list(self.negatives),
                'm': self.m,
                'a': [list(block) for block in self.a] if self.a is not None else None,
                'b': [list(block) for block in self.b] if self.b is not None else None}

    @classmethod
    def from_dict(cls, data):
        def blocks(key):
            return tuple(tuple(block) for block in data[key]) if data.get(key) is not None else None
        return cls(tuple(data['positives']), tuple(data['negatives']), data['m'], blocks('a'), blocks('b'))


@dataclass(frozen=True)
class PretzelConditionOutcome:
    """Solvable with a witness system, or Unsolvable."""

    solvable: bool
    witness: Optional[PretzelSystem] = None
    nodes: int = 0

    @property
    def verdict(self):
        return 'Solvable' if self.solvable else 'Unsolvable'

    def to_dict(self):
        return {'verdict': self.verdict,
                'witness': self.witness.to_dict() if self.witness else None,
                'nodes': self.nodes}


def validate_pretzel_hypotheses(positives, negatives):
    """Raises PretzelHypothesisError unless the parameters fit the pretzel system."""
    positives, negatives = list(positives), list(negatives)
    if not negatives or len(positives) != len(negatives) + 1:
        raise PretzelHypothesisError(f'Expected k + 1 positive and k >= 1 negative parameters, '
                                     f'got {positives} and {negatives}.')
    if any(not isinstance(value, int) or value % 2 == 0 for value in positives + negatives):
        raise PretzelHypothesisError(f'Parameters must be odd integers, got {positives + negatives}.')
    if any(value < 3 for value in positives):
        raise PretzelHypothesisError(f'Positive parameters must be at least 3, got {positives}.')
    if any(value > -3 for value in negatives):
        raise PretzelHypothesisError(f'Negative parameters must be at most -3, got {negatives}.')
    if bryant_signature(positives + negatives) != 0:
        raise PretzelHypothesisError(f'Signature of P{tuple(positives + negatives)} is not zero.')


def _bounded_vectors(length, bound):
    return product(range(-bound, bound + 1), repeat=length)


def _block_solutions(positives, target, m, tick):
    """Every (a, b) with sum(a) == 1 and sum a_i^2 p_i + 2 sum b^2 == target, in lexicographic order."""
    solutions = []
    a_bounds = [isqrt(target // value) for value in positives]
    b_bound = isqrt(target // 2)

    def descend(prefix, spent):
        tick()
        if len(prefix) == len(positives) - 1:
            last = 1 - sum(prefix)
            if abs(last) > a_bounds[-1]:
                return
            rest = target - spent - last * last * positives[-1]
            if rest < 0 or rest % 2:
                return
            a_block = tuple(prefix) + (last,)
            for b_block in _bounded_vectors(m, b_bound):
                if sum(value * value for value in b_block) * 2 == rest:
                    solutions.append((a_block, b_block))
            return
        position = len(prefix)
        for value in range(-a_bounds[position], a_bounds[position] + 1):
            cost = spent + value * value * positives[position]
            if cost <= target:
                descend(prefix + [value], cost)

    descend([], 0)
    return solutions


def pretzel_condition(positives, negatives, m, budget=DEFAULT_SYSTEM_BUDGET):
    """Searches the pretzel Diophantine system at m exhaustively.

    Blocks are solved one negative parameter at a time, every block first meets its own equations and then the
    cross equations against the earlier blocks. Unsolvable means the knot is not H-slice in m copies of CP2.

    Args:
        positives: p_1, ..., p_{k+1}, odd and at least 3.
        negatives: q_1, ..., q_k, odd and at most -3.
        m: The number of CP2 summands.
        budget: The number of search nodes after which BudgetExceeded is raised.

    Returns:
        A PretzelConditionOutcome, a witness is the lexicographically smallest solution.

    """
    system = PretzelSystem(tuple(positives), tuple(negatives), m)
    nodes = 0

    def tick():
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(nodes, budget)

    per_block = [_block_solutions(system.positives, -value, m, tick) for value in system.negatives]
    chosen = []

    def descend():
        if len(chosen) == len(per_block):
            return True
        for candidate in per_block[len(chosen)]:
            tick()
            if all(system.block_value(candidate, earlier) == 0 for earlier in chosen):
                chosen.append(candidate)
                if descend():
                    return True
                chosen.pop()
        return False

    if all(per_block) and descend():
        witness = PretzelSystem(system.positives, system.negatives, m,
                                tuple(a for a, _ in chosen), tuple(b for _, b in chosen))
        if not witness.is_solution():
            raise InternalConsistencyError(f'Pretzel witness {witness} failed verification.')
        LOGGER.debug('P%s is solvable at m=%s.', system.positives + system.negatives, m)
        return PretzelConditionOutcome(True, witness, nodes)
    LOGGER.debug('P%s is unsolvable at m=%s.', system.positives + system.negatives, m)
    return PretzelConditionOutcome(False, None, nodes)


def _validate_classifier_parameters(parameters):
    if len(parameters) != 3:
        raise PretzelParameterError(f'Expected three parameters, got {parameters}.')
    if any(not isinstance(value, int) or value % 2 == 0 or abs(value) == 1 for value in parameters):
        raise PretzelParameterError(f'Parameters must be odd and different from +-1, got {parameters}.')


@dataclass(frozen=True)
class SliceClass:
    """Whether a 3-strand pretzel knot is positively slice, with the reason."""

    positively_slice: bool
    reason: str

    @property
    def verdict(self):
        return 'PositivelySlice' if self.positively_slice else 'NotPositivelySlice'


def positively_slice_class(first, second, third):
    """Decides whether P(p, q, r) with odd parameters other than +-1 is positively slice.

    It is exactly when either one parameter is negative and at least as large in absolute value as one of the
    positive ones, or at least two parameters are negative.

    Returns:
        A SliceClass.

    """
    parameters = [first, second, third]
    _validate_classifier_parameters(parameters)
    negatives = [value for value in parameters if value < 0]
    positives = sorted(value for value in parameters if value > 0)
    if len(negatives) >= 2:
        return SliceClass(True, 'at least two negative parameters')
    if not negatives:
        return SliceClass(False, 'three positive parameters give signature 2')
    negative = negatives[0]
    if -negative >= positives[0]:
        twists = (-negative - positives[0]) // 2
        return SliceClass(True, f'of the form P(-q-2k, q, r) with q={positives[0]}, k={twists}, r={positives[1]}')
    if bryant_signature(parameters) == 2:
        return SliceClass(False, 'signature 2')
    for m in range(CROSS_CHECK_M + 1):
        if pretzel_condition(positives, [negative], m).solvable:
            raise InternalConsistencyError(f'P{tuple(parameters)} has a solvable pretzel system at m={m}.')
    return SliceClass(False, 'the pretzel Diophantine system is unsolvable for every m')


def biprojectively_slice_3strand(first, second, third):
    """True when {p, q, r} = +-{a, b, -a-c} for some a, b > 0 and c >= 0."""
    parameters = (first, second, third)
    _validate_classifier_parameters(list(parameters))
    for sign in (1, -1):
        for a_value, b_value, negative in permutations(sign * value for value in parameters):
            if a_value > 0 and b_value > 0 and negative < 0 and -negative - a_value >= 0:
                return True
    return False

#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: plumbing.py
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
Main code for plumbing.

Continued fractions and the definite plumbed fillings of lens spaces and of
the double branched covers of odd pretzel knots.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Tuple

from cpslicingcli.cpslicingcliexceptions import ContinuedFractionInputError, PlumbingHypothesisError
from .lattice import IntegralLattice, Definiteness, definiteness

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
LOGGER_BASENAME = '''plumbing'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())


def _validate_fraction(p, q):
    if not (isinstance(p, int) and isinstance(q, int)):
        raise ContinuedFractionInputError(f'Expected integers, got p={p!r}, q={q!r}.')
    if not p > q > 0:
        raise ContinuedFractionInputError(f'Expected p > q > 0, got p={p}, q={q}.')
    if gcd(p, q) != 1:
        raise ContinuedFractionInputError(f'Expected coprime p and q, got gcd({p}, {q}) = {gcd(p, q)}.')


def neg_continued_fraction(p, q):
    """The expansion p/q = a_1 - 1/(a_2 - 1/(... - 1/a_n)) with every a_i >= 2.

    Args:
        p: The numerator.
        q: The denominator, p > q > 0 and coprime to p.

    Returns:
        The list [a_1, ..., a_n].

    """
    _validate_fraction(p, q)
    terms = []
    while q:
        term = -(-p // q)
        terms.append(term)
        p, q = q, term * q - p
    return terms


def pos_continued_fraction(p, q):
    """The canonical expansion p/q = c_1 + 1/(c_2 + 1/(... + 1/c_n)), every c_i >= 1 and c_n >= 2."""
    _validate_fraction(p, q)
    terms = []
    while q:
        terms.append(p // q)
        p, q = q, p % q
    return terms


def evaluate_neg_continued_fraction(terms):
    """Exact value of [a_1, ..., a_n]^-."""
    value = Fraction(terms[-1])
    for term in reversed(terms[:-1]):
        value = term - 1 / value
    return value


def evaluate_pos_continued_fraction(terms):
    """Exact value of [c_1, ..., c_n]^+."""
    value = Fraction(terms[-1])
    for term in reversed(terms[:-1]):
        value = term + 1 / value
    return value


@dataclass(frozen=True)
class PlumbingTree:
    """A weighted tree describing a plumbed four manifold.

    Adjacent vertices pair to edge_sign, each vertex pairs with itself to its weight.
    """

    weights: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...] = ()
    edge_sign: int = 1
    labels: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.edge_sign not in (1, -1):
            raise PlumbingHypothesisError(f'Edge sign must be +1 or -1, got {self.edge_sign}.')
        edges = tuple(tuple(sorted(edge)) for edge in self.edges)
        self._validate_tree(len(self.weights), edges)
        object.__setattr__(self, 'weights', tuple(self.weights))
        object.__setattr__(self, 'edges', edges)

    @staticmethod
    def _validate_tree(size, edges):
        if any(first == second for first, second in edges):
            raise PlumbingHypothesisError('Plumbing graph has a self loop.')
        if len(set(edges)) != len(edges):
            raise PlumbingHypothesisError('Plumbing graph has a repeated edge.')
        if any(not 0 <= vertex < size for edge in edges for vertex in edge):
            raise PlumbingHypothesisError('Plumbing edge refers to a missing vertex.')
        if size and len(edges) != size - 1:
            raise PlumbingHypothesisError(f'A tree on {size} vertices has {size - 1} edges, got {len(edges)}.')
        parents = list(range(size))

        def find(vertex):
            while parents[vertex] != vertex:
                parents[vertex] = parents[parents[vertex]]
                vertex = parents[vertex]
            return vertex

        for first, second in edges:
            root_first, root_second = find(first), find(second)
            if root_first == root_second:
                raise PlumbingHypothesisError('Plumbing graph contains a cycle.')
            parents[root_first] = root_second

    def to_lattice(self):
        """The intersection form: weights on the diagonal, edge_sign for adjacent vertices."""
        size = len(self.weights)
        gram = [[0] * size for _ in range(size)]
        for index, weight in enumerate(self.weights):
            gram[index][index] = weight
        for first, second in self.edges:
            gram[first][second] = gram[second][first] = self.edge_sign
        return IntegralLattice(tuple(tuple(row) for row in gram), self.labels)


@dataclass(frozen=True)
class LensSpace:
    """The lens space L(p, q) with an orientation sign."""

    p: int
    q: int
    orientation: int = 1

    def __post_init__(self):
        _validate_fraction(self.p, self.q)
        if self.orientation not in (1, -1):
            raise ContinuedFractionInputError(f'Orientation must be +1 or -1, got {self.orientation}.')

    @property
    def mirrored(self):
        """-L(p, q) is orientation preserving homeomorphic to L(p, p - q)."""
        return LensSpace(self.p, self.p - self.q, self.orientation)

    def fillings(self):
        return lens_fillings(self.p, self.q)

    def __str__(self):
        return f'{"" if self.orientation == 1 else "-"}L({self.p},{self.q})'


def linear_plumbing(weights, edge_sign=1, label_prefix='x'):
    """The linear plumbing on a chain of vertices with the given weights."""
    if not weights:
        raise PlumbingHypothesisError('A linear plumbing needs at least one vertex.')
    edges = tuple((index, index + 1) for index in range(len(weights) - 1))
    labels = tuple(f'{label_prefix}{index + 1}' for index in range(len(weights)))
    return PlumbingTree(tuple(weights), edges, edge_sign, labels).to_lattice()


def lens_fillings(p, q):
    """The negative and the positive definite linear plumbings bounded by L(p, q).

    Args:
        p: The order of the fundamental group.
        q: The twisting, p > q > 0 and coprime to p.

    Returns:
        A tuple (negative definite lattice, positive definite lattice).

    """
    negative = linear_plumbing([-term for term in neg_continued_fraction(p, q)], 1)
    positive = linear_plumbing([-term for term in neg_continued_fraction(p, p - q)], 1).negated()
    if definiteness(negative) is not Definiteness.NEGATIVE_DEFINITE:
        raise PlumbingHypothesisError(f'Filling of L({p},{q}) is not negative definite.')
    if definiteness(positive) is not Definiteness.POSITIVE_DEFINITE:
        raise PlumbingHypothesisError(f'Filling of -L({p},{p - q}) is not positive definite.')
    return negative, positive


def twist_cover(twists):
    """The double branched cover of the twist knot K_a is L(4a + 1, 2)."""
    if not isinstance(twists, int) or twists < 1:
        raise ContinuedFractionInputError(f'Twist knots need a >= 1, got {twists!r}.')
    return LensSpace(4 * twists + 1, 2, 1)


def pretzel_plumbing(positives, negatives, canonical=False):
    """The canonical negative definite star shaped plumbing bounded by the double cover of a pretzel knot.

    The knot is P(p_1, ..., p_{k+1}, q_1, ..., q_k). Generators are ordered as the chains x_i^1..x_i^{p_i - 1}
    in input order, then the center y, then the leaves z_j in input order. The last vertex of every chain and
    every leaf are adjacent to the center.

    Args:
        positives: The parameters p_1..p_{k+1}, odd and at least 3.
        negatives: The parameters q_1..q_k, odd and at most -3.
        canonical: Sort both parameter lists first so that mutants give identical gram matrices.

    Returns:
        The IntegralLattice of rank sum(p_i).

    """
    positives, negatives = list(positives), list(negatives)
    if canonical:
        positives, negatives = sorted(positives), sorted(negatives)
    if not negatives or len(positives) != len(negatives) + 1:
        raise PlumbingHypothesisError(f'Expected k + 1 positive and k >= 1 negative parameters, '
                                      f'got {len(positives)} and {len(negatives)}.')
    if any(value % 2 == 0 or value < 3 for value in positives):
        raise PlumbingHypothesisError(f'Positive parameters must be odd and at least 3, got {positives}.')
    if any(value % 2 == 0 or value > -3 for value in negatives):
        raise PlumbingHypothesisError(f'Negative parameters must be odd and at most -3, got {negatives}.')
    if sum(Fraction(1, value) for value in positives + negatives) <= 0:
        raise PlumbingHypothesisError(f'Sum of reciprocals of {positives + negatives} is not positive.')
    weights, edges, labels, chain_ends = [], [], [], []
    for chain, value in enumerate(positives, start=1):
        start = len(weights)
        for position in range(1, value):
            weights.append(-2)
            labels.append(f'x{chain}_{position}')
        edges.extend((index, index + 1) for index in range(start, len(weights) - 1))
        chain_ends.append(len(weights) - 1)
    center = len(weights)
    weights.append(-len(positives))
    labels.append('y')
    edges.extend((end, center) for end in chain_ends)
    for leaf, value in enumerate(negatives, start=1):
        weights.append(value)
        labels.append(f'z{leaf}')
        edges.append((center, len(weights) - 1))
    lattice = PlumbingTree(tuple(weights), tuple(edges), 1, tuple(labels)).to_lattice()
    if definiteness(lattice) is not Definiteness.NEGATIVE_DEFINITE:
        raise PlumbingHypothesisError(f'Plumbing for {positives}, {negatives} is not negative definite.')
    LOGGER.debug('Built pretzel plumbing of rank %s for %s, %s.', lattice.rank, positives, negatives)
    return lattice

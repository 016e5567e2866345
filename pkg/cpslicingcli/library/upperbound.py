#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: upperbound.py
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
Main code for upperbound.

Topological upper bounds from rank one decompositions of a Seifert matrix.
A decomposition P^T A P = B - sum(c_i c_i^T) with det(tB - B^T) a unit
means that n generalized crossing changes turn the knot into one with
trivial Alexander polynomial, which is topologically slice.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import gcd
from typing import Optional, Tuple

from cpslicingcli.cpslicingcliexceptions import (BudgetExceeded,
                                                 DimensionMismatchError,
                                                 InternalConsistencyError,
                                                 NotGenusOneError)
from .diophantine import four_square, three_square
from .seifert import SeifertMatrix, alexander, determinant_polynomial, signature

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
LOGGER_BASENAME = '''upperbound'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

DEFAULT_N_MAX = 4
DEFAULT_COEFF_BOUND = 8
DEFAULT_BASIS_DEPTH = 2
DEFAULT_SEARCH_BUDGET = 2 * 10 ** 5

SWAP = ((0, 1), (1, 0))


def _identity(size):
    return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))


def _multiply(first, second):
    columns = list(zip(*second))
    return tuple(tuple(sum(x * y for x, y in zip(row, column)) for column in columns) for row in first)


def _transpose(rows):
    return tuple(zip(*rows))


def congruent(matrix, change):
    """P^T A P."""
    return _multiply(_multiply(_transpose(change), matrix), change)


def _determinant(rows):
    # Laplace expansion, only used on small basis change matrices.
    if not rows:
        return 1
    if len(rows) == 1:
        return rows[0][0]
    return sum((-1) ** column * rows[0][column] * _determinant(tuple(row[:column] + row[column + 1:]
                                                                     for row in rows[1:]))
               for column in range(len(rows)) if rows[0][column])


def _rank_one_sum(matrix, vectors):
    """matrix + sum(c c^T)."""
    return tuple(tuple(value + sum(c[i] * c[j] for c in vectors) for j, value in enumerate(row))
                 for i, row in enumerate(matrix))


@dataclass(frozen=True)
class Decomposition:
    """P^T A P = B - sum(c_i c_i^T) with det(tB - B^T) a unit, n is the number of vectors c_i."""

    b_matrix: Tuple[Tuple[int, ...], ...]
    cs: Tuple[Tuple[int, ...], ...] = ()
    basis_change: Optional[Tuple[Tuple[int, ...], ...]] = None
    verified: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'b_matrix', tuple(tuple(row) for row in self.b_matrix))
        object.__setattr__(self, 'cs', tuple(tuple(vector) for vector in self.cs))
        if self.basis_change is not None:
            object.__setattr__(self, 'basis_change', tuple(tuple(row) for row in self.basis_change))

    @property
    def n(self):
        return len(self.cs)

    def to_dict(self):
        return {'B': [list(row) for row in self.b_matrix],
                'cs': [list(vector) for vector in self.cs],
                'basis_change': [list(row) for row in self.basis_change] if self.basis_change else None,
                'n': self.n,
                'verified': self.verified}

    @classmethod
    def from_dict(cls, data):
        basis_change = data.get('basis_change')
        return cls(tuple(tuple(row) for row in data['B']),
                   tuple(tuple(vector) for vector in data['cs']),
                   tuple(tuple(row) for row in basis_change) if basis_change else None,
                   data.get('verified', False))


def verify_decomposition(matrix, decomposition):
    """Checks P^T A P == B - sum(c c^T) and that det(tB - B^T) is +-t^k, exactly.

    Args:
        matrix: The SeifertMatrix A.
        decomposition: The Decomposition to check.

    Returns:
        True if both hold and the basis change is unimodular.

    Raises:
        DimensionMismatchError: B, P or some c_i does not match the size of A.

    """
    size = matrix.size
    b_matrix, change = decomposition.b_matrix, decomposition.basis_change or _identity(size)
    if len(b_matrix) != size or any(len(row) != size for row in b_matrix):
        raise DimensionMismatchError(f'B is not {size}x{size}.')
    if len(change) != size or any(len(row) != size for row in change):
        raise DimensionMismatchError(f'Basis change is not {size}x{size}.')
    if any(len(vector) != size for vector in decomposition.cs):
        raise DimensionMismatchError(f'Every c_i must have length {size}.')
    if abs(_determinant(change)) != 1:
        LOGGER.debug('Basis change %s is not unimodular.', change)
        return False
    if _rank_one_sum(congruent(matrix.entries, change), decomposition.cs) != b_matrix:
        return False
    return determinant_polynomial(b_matrix).is_monomial


def _verified(matrix, decomposition):
    if not verify_decomposition(matrix, decomposition):
        LOGGER.error('Self produced decomposition %s failed verification.', decomposition)
        raise InternalConsistencyError(f'Decomposition {decomposition} failed verification.')
    return Decomposition(decomposition.b_matrix, decomposition.cs, decomposition.basis_change, True)


def _canonical_vectors(size, bound):
    """Nonzero vectors with entries in [-bound, bound] whose first nonzero entry is positive."""
    vectors = []
    for vector in product(range(-bound, bound + 1), repeat=size):
        leading = next((value for value in vector if value), 0)
        if leading > 0:
            vectors.append(vector)
    return vectors


def basis_changes(size, depth, bound):
    """Unimodular matrices that are products of at most depth elementary matrices I + k E_ij, |k| <= bound.

    Yields:
        Every distinct product once, ordered by the number of factors and then by the entries.

    """
    elementary = [tuple(tuple(int(r == c) + (value if (r, c) == (i, j) else 0) for c in range(size))
                        for r in range(size))
                  for i in range(size) for j in range(size) if i != j
                  for value in range(-bound, bound + 1) if value]
    seen = {_identity(size)}
    layer = [_identity(size)]
    yield _identity(size)
    for _ in range(depth):
        following = set()
        for matrix in layer:
            for factor in elementary:
                candidate = _multiply(matrix, factor)
                if candidate not in seen:
                    seen.add(candidate)
                    following.add(candidate)
        layer = sorted(following)
        yield from layer


def thm14_search(matrix, n_max=DEFAULT_N_MAX, coeff_bound=DEFAULT_COEFF_BOUND, basis_depth=DEFAULT_BASIS_DEPTH,
                 budget=DEFAULT_SEARCH_BUDGET, reduced=True):
    """Searches for a decomposition with the fewest vectors c_i.

    Args:
        matrix: The SeifertMatrix A.
        n_max: The largest number of vectors tried.
        coeff_bound: Entries of every c_i and of every elementary factor stay in [-coeff_bound, coeff_bound].
        basis_depth: The largest number of elementary factors of the basis change.
        budget: The number of candidates after which BudgetExceeded is raised.
        reduced: Try each multiset of vectors up to sign once instead of every ordered tuple.

    Returns:
        A verified Decomposition, or None when nothing was found in the whole search space.

    """
    if alexander(matrix).is_monomial:
        return _verified(matrix, Decomposition(matrix.entries))
    if reduced:
        vectors = _canonical_vectors(matrix.size, coeff_bound)
    else:
        vectors = [vector for vector in product(range(-coeff_bound, coeff_bound + 1), repeat=matrix.size)
                   if any(vector)]
    changes = list(basis_changes(matrix.size, basis_depth, coeff_bound))
    nodes = 0
    for count in range(1, n_max + 1):
        for change in changes:
            start = congruent(matrix.entries, change)
            choices = (combinations_with_replacement(vectors, count) if reduced
                       else product(vectors, repeat=count))
            for cs in choices:
                nodes += 1
                if nodes > budget:
                    raise BudgetExceeded(nodes, budget, message=f'Decomposition search exhausted its budget of '
                                                                f'{budget} candidates at n={count}.')
                b_matrix = _rank_one_sum(start, cs)
                if determinant_polynomial(b_matrix).is_monomial:
                    LOGGER.debug('Found decomposition with n=%s after %s candidates.', count, nodes)
                    return _verified(matrix, Decomposition(b_matrix, tuple(cs), change))
    return None


def _require_genus_one(matrix):
    if matrix.genus != 1:
        raise NotGenusOneError(f'Expected a genus one Seifert matrix, got genus {matrix.genus}.')


def framing_form(matrix, x_value, y_value):
    """The framing a x^2 + (2b + 1) x y + c y^2 of the class (x, y) for A = [[a, b + 1], [b, c]]."""
    _require_genus_one(matrix)
    (a_value, upper), (lower, c_value) = matrix.entries
    return a_value * x_value * x_value + (upper + lower) * x_value * y_value + c_value * y_value * y_value


def complete_basis(x_value, y_value):
    """The matrix [[x, s], [y, t]] of determinant 1 with the smallest |s| + |t|, ties broken lexicographically."""
    if gcd(x_value, y_value) != 1:
        raise InternalConsistencyError(f'Class ({x_value}, {y_value}) is not primitive.')
    s_value, t_value = _bezout(x_value, y_value)
    reach = 2 * (abs(s_value) + abs(t_value)) + 1
    candidates = [(s_value + step * x_value, t_value + step * y_value) for step in range(-reach, reach + 1)]
    s_value, t_value = min(candidates, key=lambda pair: (abs(pair[0]) + abs(pair[1]), pair))
    return (x_value, s_value), (y_value, t_value)


def _bezout(x_value, y_value):
    """Some (s, t) with x t - y s == 1."""
    old_remainder, remainder = x_value, y_value
    old_coefficient, coefficient = 1, 0
    other_old, other = 0, 1
    while remainder:
        quotient = old_remainder // remainder
        old_remainder, remainder = remainder, old_remainder - quotient * remainder
        old_coefficient, coefficient = coefficient, old_coefficient - quotient * coefficient
        other_old, other = other, other_old - quotient * other
    # old_coefficient * x + other_old * y == old_remainder == +-1
    sign = old_remainder
    return -other_old * sign, old_coefficient * sign


TABLE_ROWS = ('a<0', 'a=0,b>0,c>0', 'a=0,b>0,c=0', 'a=0,b<0,c>0', 'a=0,b<0,c=0', 'a>0', 'a=0,c<0')


def negative_class(matrix):
    """A primitive class of negative framing, by the case split on A = [[a, b + 1], [b, c]].

    Returns:
        A tuple (row label, (x, y)).

    """
    _require_genus_one(matrix)
    (a_value, _), (b_value, c_value) = matrix.entries
    if a_value < 0:
        row, vector = TABLE_ROWS[0], (1, 0)
    elif a_value == 0 and b_value > 0 and c_value > 0:
        row, vector = TABLE_ROWS[1], (-c_value, 1)
    elif a_value == 0 and b_value > 0 and c_value == 0:
        row, vector = TABLE_ROWS[2], (-1, 1)
    elif a_value == 0 and b_value < 0 and c_value > 0:
        row, vector = TABLE_ROWS[3], (2 * c_value, 1)
    elif a_value == 0 and b_value < 0 and c_value == 0:
        row, vector = TABLE_ROWS[4], (1, 1)
    elif a_value > 0:
        x_value, y_value = -2 * b_value - 1, 2 * a_value
        content = gcd(x_value, y_value)
        row, vector = TABLE_ROWS[5], (x_value // content, y_value // content)
    else:
        row, vector = TABLE_ROWS[6], (0, 1)
    if framing_form(matrix, *vector) >= 0:
        raise InternalConsistencyError(f'Class {vector} of row {row} does not have negative framing.')
    LOGGER.debug('Negative framing class %s from row %s.', vector, row)
    return row, vector


@dataclass(frozen=True)
class TopologicalBound:
    """Either infinite, or an upper bound n with the decomposition proving it."""

    infinite: bool
    decomposition: Optional[Decomposition] = None
    table_row: Optional[str] = None
    method: str = 'three_square'
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def n(self):
        return None if self.infinite else self.decomposition.n

    def to_dict(self):
        return {'infinite': self.infinite,
                'n': self.n,
                'decomposition': self.decomposition.to_dict() if self.decomposition else None,
                'table_row': self.table_row,
                'method': self.method,
                'notes': list(self.notes)}


def _squares_decomposition(form, squares, change):
    """The decomposition of [[e, g + 1], [g, h]] from e = -1 - sum(squares^2)."""
    (_, _), (g_value, h_value) = form
    u_value = -g_value - sum(squares)
    v_value = h_value + u_value * u_value + len(squares)
    b_matrix = ((0, 1), (0, v_value))
    cs = ((1, u_value),) + tuple((value, 1) for value in squares)
    return Decomposition(b_matrix, cs, change)


def genus_one_top_bound(matrix, method='three_square'):
    """The topological CP2 slicing bound of a genus one knot: infinite when sigma is 2, otherwise at most 4.

    Args:
        matrix: A genus one SeifertMatrix.
        method: 'three_square' for the bound 4, 'lagrange' for the simpler bound 5 from four squares.

    Returns:
        A TopologicalBound with a verified decomposition whenever it is finite.

    """
    _require_genus_one(matrix)
    if method not in ('three_square', 'lagrange'):
        raise ValueError(f'Unknown method {method!r}.')
    entries = matrix.entries
    orientation = SWAP if entries[0][1] - entries[1][0] == -1 else _identity(2)
    oriented = congruent(entries, orientation)
    (a_value, _), (b_value, c_value) = oriented
    if a_value * c_value == b_value * (b_value + 1):
        return TopologicalBound(False, _verified(matrix, Decomposition(entries)), None, method,
                                ('trivial Alexander polynomial',))
    if signature(matrix) == 2:
        return TopologicalBound(True, None, None, method, ('signature 2',))
    row, vector = negative_class(SeifertMatrix(oriented))
    first_change = complete_basis(*vector)
    first_form = congruent(oriented, first_change)
    change = _multiply(orientation, first_change)
    framing = first_form[0][0]
    if method == 'lagrange':
        squares = four_square(-framing - 1)
        decomposition = _squares_decomposition(first_form, squares, change)
        return TopologicalBound(False, _verified(matrix, decomposition), row, method)
    if framing % 4 in (0, 3):
        first_framed = SeifertMatrix(first_form)
        x_value = 1
        while framing_form(first_framed, x_value, 2) > -1:
            x_value += 4
        alpha = (x_value, 2)
    else:
        alpha = (1, 0)
    second_change = complete_basis(*alpha)
    second_form = congruent(first_form, second_change)
    squares = three_square(-second_form[0][0] - 1)
    if squares is None:
        LOGGER.error('No three square representation of %s for class %s.', -second_form[0][0] - 1, alpha)
        raise InternalConsistencyError(f'{-second_form[0][0] - 1} is not a sum of three squares.')
    decomposition = _squares_decomposition(second_form, squares, _multiply(change, second_change))
    return TopologicalBound(False, _verified(matrix, decomposition), row, method)

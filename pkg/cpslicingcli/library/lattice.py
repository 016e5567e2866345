#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: lattice.py
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
Main code for lattice.

Exact integral lattices given by their gram matrix. Every computation in here
is done over the integers, floating point is never used.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Tuple

from sympy import Matrix, Symbol

from cpslicingcli.cpslicingcliexceptions import InvalidLatticeError

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
LOGGER_BASENAME = '''lattice'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

LAMBDA = Symbol('lambda')


class Definiteness(Enum):
    """The classification of a symmetric form."""

    POSITIVE_DEFINITE = 'PositiveDefinite'
    NEGATIVE_DEFINITE = 'NegativeDefinite'
    INDEFINITE = 'Indefinite'
    DEGENERATE = 'Degenerate'


def _as_integer_rows(rows):
    try:
        matrix = tuple(tuple(int(entry) for entry in row) for row in rows)
    except (TypeError, ValueError):
        raise InvalidLatticeError(f'Gram matrix {rows} does not consist of integers.') from None
    if any(len(row) != len(matrix) for row in matrix):
        raise InvalidLatticeError(f'Gram matrix {rows} is not square.')
    return matrix


def is_symmetric(rows):
    """Checks whether a square matrix given as rows is symmetric."""
    return all(rows[i][j] == rows[j][i] for i in range(len(rows)) for j in range(i))


@dataclass(frozen=True)
class IntegralLattice:
    """A free abelian group with an exact symmetric integer pairing.

    The pairing is stored as a dense gram matrix, labels optionally name the generators in reports.
    """

    gram: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        gram = _as_integer_rows(self.gram)
        if not is_symmetric(gram):
            raise InvalidLatticeError(f'Gram matrix {gram} is not symmetric.')
        labels = tuple(self.labels) if self.labels else tuple(f'g{index + 1}' for index in range(len(gram)))
        if len(labels) != len(gram):
            raise InvalidLatticeError(f'Got {len(labels)} labels for a lattice of rank {len(gram)}.')
        object.__setattr__(self, 'gram', gram)
        object.__setattr__(self, 'labels', labels)

    @classmethod
    def standard_diagonal(cls, rank, sign=-1):
        """The diagonal lattice (Z^rank, sign * Id)."""
        return cls(tuple(tuple(sign if i == j else 0 for j in range(rank)) for i in range(rank)),
                   tuple(f'e{index + 1}' for index in range(rank)))

    @property
    def rank(self):
        return len(self.gram)

    @property
    def diagonal(self):
        return tuple(self.gram[index][index] for index in range(self.rank))

    def pairing(self, first, second):
        """Evaluates the form on two coefficient vectors."""
        return sum(first[i] * self.gram[i][j] * second[j]
                   for i in range(self.rank) for j in range(self.rank))

    def negated(self):
        """The same group with the opposite pairing."""
        return IntegralLattice(tuple(tuple(-entry for entry in row) for row in self.gram), self.labels)

    def relabeled(self, labels):
        return IntegralLattice(self.gram, tuple(labels))

    def to_dict(self):
        return {'rank': self.rank,
                'gram': [list(row) for row in self.gram],
                'labels': list(self.labels)}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(tuple(row) for row in data['gram']), tuple(data.get('labels', ())))


def leading_principal_minors(lattice):
    """Exact leading principal minors of the gram matrix, bareiss elimination per minor."""
    matrix = Matrix(lattice.gram)
    return [int(matrix[:size, :size].det(method='bareiss')) for size in range(1, lattice.rank + 1)]


def determinant(lattice):
    """Exact determinant of the gram matrix, the empty lattice has determinant 1."""
    if not lattice.rank:
        return 1
    return int(Matrix(lattice.gram).det(method='bareiss'))


def definiteness(lattice):
    """Classifies a lattice by Sylvester's criterion.

    A rank zero lattice is both positive and negative definite, by convention it is reported as positive definite.

    Args:
        lattice: The lattice to classify.

    Returns:
        A Definiteness member.

    """
    if not lattice.rank:
        return Definiteness.POSITIVE_DEFINITE
    if determinant(lattice) == 0:
        return Definiteness.DEGENERATE
    minors = leading_principal_minors(lattice)
    if all(minor > 0 for minor in minors):
        return Definiteness.POSITIVE_DEFINITE
    if all((-1) ** size * minor > 0 for size, minor in enumerate(minors, start=1)):
        return Definiteness.NEGATIVE_DEFINITE
    return Definiteness.INDEFINITE


def is_negative_definite(lattice):
    """Negative definiteness, the empty lattice qualifies."""
    return not lattice.rank or definiteness(lattice) is Definiteness.NEGATIVE_DEFINITE


def _sign_changes(coefficients):
    signs = [coefficient > 0 for coefficient in coefficients if coefficient != 0]
    return sum(1 for previous, current in zip(signs, signs[1:]) if previous != current)


def form_signature(rows: Sequence[Sequence[int]]):
    """Exact signature of a symmetric integer matrix.

    The characteristic polynomial of a symmetric matrix has only real roots, so Descartes' rule of signs counts
    the positive and negative eigenvalues exactly.

    Args:
        rows: A symmetric integer matrix.

    Returns:
        The number of positive minus the number of negative eigenvalues.

    """
    rows = _as_integer_rows(rows)
    if not is_symmetric(rows):
        raise InvalidLatticeError(f'Matrix {rows} is not symmetric, signature is undefined.')
    if not rows:
        return 0
    characteristic = Matrix(rows).charpoly(LAMBDA)
    coefficients = [int(coefficient) for coefficient in characteristic.all_coeffs()]
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    mirrored = [coefficient * (-1) ** (len(coefficients) - 1 - index)
                for index, coefficient in enumerate(coefficients)]
    return _sign_changes(coefficients) - _sign_changes(mirrored)


def direct_sum(first, second):
    """Block diagonal sum, rank and labels add up."""
    rank = first.rank + second.rank
    gram = [[0] * rank for _ in range(rank)]
    for offset, lattice in ((0, first), (first.rank, second)):
        for i, row in enumerate(lattice.gram):
            for j, entry in enumerate(row):
                gram[offset + i][offset + j] = entry
    return IntegralLattice(tuple(tuple(row) for row in gram), first.labels + second.labels)


def direct_sum_all(lattices, labels_prefixes: Optional[Sequence[str]] = None):
    """Direct sum of any number of lattices, optionally prefixing the labels of each summand."""
    result = IntegralLattice(())
    for index, lattice in enumerate(lattices):
        if labels_prefixes:
            lattice = lattice.relabeled(f'{labels_prefixes[index]}{label}' for label in lattice.labels)
        result = direct_sum(result, lattice)
    return result


def half_integer_block(size, matrix, sign=1):
    """The lattice of (positive or negative) half integer surgery type.

    Args:
        size: The number m of u and v generators.
        matrix: A symmetric m by m integer matrix A.
        sign: +1 for the [[2I, I], [I, A]] block form, -1 for [[-2I, I], [I, A]].

    Returns:
        The rank 2m lattice in the ordered basis u_1..u_m, v_1..v_m.

    """
    if sign not in (1, -1):
        raise InvalidLatticeError(f'Sign must be +1 or -1, got {sign}.')
    block = _as_integer_rows(matrix)
    if len(block) != size:
        raise InvalidLatticeError(f'Matrix {matrix} is not {size}x{size}.')
    if not is_symmetric(block):
        raise InvalidLatticeError(f'Matrix {matrix} is not symmetric.')
    gram = [[0] * (2 * size) for _ in range(2 * size)]
    for i in range(size):
        gram[i][i] = 2 * sign
        gram[i][size + i] = gram[size + i][i] = 1
        for j in range(size):
            gram[size + i][size + j] = block[i][j]
    labels = tuple(f'u{index + 1}' for index in range(size)) + tuple(f'v{index + 1}' for index in range(size))
    return IntegralLattice(tuple(tuple(row) for row in gram), labels)

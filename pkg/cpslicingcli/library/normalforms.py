#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: normalforms.py
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
Main code for normalforms.

Smith normal forms of integer matrices and exact solvability of integer
linear systems. Matrices are sympy matrices over ZZ so nothing ever overflows.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import logging
from typing import List, Optional, Tuple

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_decomp

from cpslicingcli.cpslicingcliexceptions import InternalConsistencyError

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
LOGGER_BASENAME = '''normalforms'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())


def integer_matrix(rows, columns=None) -> Matrix:
    """Builds an integer matrix, an empty list of rows gives a 0 x columns matrix."""
    rows = [[int(entry) for entry in row] for row in rows]
    if not rows:
        return Matrix.zeros(0, columns or 0)
    return Matrix(rows)


def smith_decomposition(matrix) -> Tuple[Matrix, Matrix, Matrix]:
    """The Smith normal form D of an integer matrix A with unimodular S and T such that D == S * A * T.

    Args:
        matrix: An integer matrix.

    Returns:
        The tuple (D, S, T).

    """
    diagonal, left, right = smith_normal_decomp(Matrix(matrix), domain=ZZ)
    return diagonal, left, right


def solve_integer_systems(matrix, targets, columns=None) -> List[Optional[Tuple[int, ...]]]:
    """Finds integer solutions of matrix @ x == target for several targets sharing one normal form.

    Args:
        matrix: An integer matrix with r rows and n columns.
        targets: Integer vectors of length r.
        columns: The number n of unknowns, needed only when the matrix has no rows.

    Returns:
        For every target a tuple of n integers solving the system, or None if no integer solution exists.

    """
    matrix = integer_matrix(matrix, columns)
    rows, columns = matrix.shape
    if not rows:
        return [tuple(0 for _ in range(columns)) for _ in targets]
    diagonal, left_inverse, right_inverse = smith_decomposition(matrix)
    return [_back_substitute(matrix, diagonal, left_inverse, right_inverse, target) for target in targets]


def _back_substitute(matrix, diagonal, left_inverse, right_inverse, target):
    rows, columns = matrix.shape
    target = Matrix([int(value) for value in target])
    reduced = left_inverse * target
    solution = Matrix.zeros(columns, 1)
    for index in range(rows):
        pivot = diagonal[index, index] if index < columns else 0
        if pivot == 0:
            if reduced[index] != 0:
                return None
            continue
        if reduced[index] % pivot:
            return None
        solution[index] = reduced[index] // pivot
    result = right_inverse * solution
    if matrix * result != target:
        raise InternalConsistencyError('Integer solution failed re-verification.')
    return tuple(int(value) for value in result)


def solve_integer_system(matrix, target, columns=None) -> Optional[Tuple[int, ...]]:
    """Finds an integer solution of matrix @ x == target, None if there is none."""
    return solve_integer_systems(matrix, [target], columns)[0]
